#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "lgt/pauli.hpp"

// Brute-force reference implementations used to cross-check the fast paths.
namespace lgt::oracle {

// Dense 2^n x 2^n matrix of i^phase P(x, z); qubit 0 is the most significant
// bit of the basis index.
Eigen::MatrixXcd dense_pauli(const SymplecticVec& v);

std::size_t basis_index(const std::vector<std::uint8_t>& bits);

// true when the dense matrices commute
bool dense_commute(const SymplecticVec& u, const SymplecticVec& v, double tol = 1e-12);

struct SidReport {
    int p = 0;
    std::size_t states = 0;       // 2^{p+1}
    std::size_t checked = 0;      // state x control x direction evaluations
    bool bijective = true;        // total extension is a permutation for each (ctrl, inc)
    bool semantics = true;        // value +-1 inside the guaranteed range, identity when ctrl = 0
    bool inverse = true;          // increment then decrement restores the state
    bool precondition = true;     // out-of-range inputs are rejected by sid_apply
    bool ok() const { return bijective && semantics && inverse && precondition; }
};

SidReport check_sid_exhaustive(int p);

// max |phase - exp(-i t k^2)| over |k| <= k_max and `samples` random t in [-10, 10]
double fastforward_phase_max_error(int k_max, int samples, std::uint64_t seed, int p_bits = 16);

struct StabilizerReport {
    std::size_t aux_terms = 0;
    std::size_t physical_terms = 0;
    std::size_t aux_pairs_anticommuting = 0;      // among auxiliary terms
    std::size_t physical_aux_anticommuting = 0;   // physical term vs auxiliary term
    bool ok() const { return aux_terms > 0 && aux_pairs_anticommuting == 0 && physical_aux_anticommuting == 0; }
};

StabilizerReport check_vc_stabilizers(const std::vector<EncodedTerm>& terms);

// Sum of terms equals its adjoint: every (string, boson actions) weight is the
// conjugate of its partner's. Returns the number of unmatched keys.
std::size_t hermitian_defects(const std::vector<EncodedTerm>& terms, double tol = 1e-12);

// Jordan-Wigner Majorana content of a Pauli string: bit 2q is Z_{<q} X_q,
// bit 2q+1 is Z_{<q} Y_q.
std::vector<std::uint8_t> majorana_bits(const SymplecticVec& v);

// Parity of |A||B| - |A & B| for two Majorana monomials: 1 iff they anticommute.
int majorana_anticommute(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b);

struct TranslationReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t unmatched_vertices = 0;  // shifted term not present
    std::size_t broken_edges = 0;        // edge whose image is not an edge
    bool ok() const { return vertices > 0 && unmatched_vertices == 0 && broken_edges == 0; }
};

// Checks that shifting every site by (dk, dl) on a periodic lattice maps the
// commutativity graph onto itself. Terms are matched by Majorana content and
// shifted boson actions.
TranslationReport check_translation_automorphism(const Lattice2D& lat, const std::vector<EncodedTerm>& terms,
                                                 int dk, int dl);

}  // namespace lgt::oracle
