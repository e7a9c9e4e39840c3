#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lgt/model.hpp"

namespace lgt {

// Operator i^phase * P(x, z) with P(x, z) = i^{x.z} X^x Z^z, i.e. the
// Hermitian Pauli string whose letter on qubit k is I, X, Y or Z.
class SymplecticVec {
public:
    SymplecticVec() = default;
    explicit SymplecticVec(std::size_t n) : x_(n, 0), z_(n, 0) {}

    std::size_t size() const { return x_.size(); }
    bool x(std::size_t k) const { return x_[k] != 0; }
    bool z(std::size_t k) const { return z_[k] != 0; }
    void set_x(std::size_t k, bool v) { x_[k] = v; }
    void set_z(std::size_t k, bool v) { z_[k] = v; }
    const std::vector<std::uint8_t>& x_bits() const { return x_; }
    const std::vector<std::uint8_t>& z_bits() const { return z_; }

    int phase() const { return phase_; }
    void set_phase(int p) { phase_ = ((p % 4) + 4) % 4; }

    std::size_t weight() const;
    bool is_identity() const { return weight() == 0; }
    std::vector<std::size_t> support() const;

    // Pauli letters only, phase dropped.
    std::string letters() const;

    // Same Pauli string, ignoring phase.
    bool same_string(const SymplecticVec& o) const { return x_ == o.x_ && z_ == o.z_; }
    friend bool operator==(const SymplecticVec& a, const SymplecticVec& b) {
        return a.phase_ == b.phase_ && a.same_string(b);
    }

private:
    std::vector<std::uint8_t> x_, z_;
    int phase_ = 0;
};

SymplecticVec pauli_to_symplectic(std::string_view label);
std::string symplectic_to_pauli(const SymplecticVec& v);  // letters, phase dropped

// 1 iff the two strings anticommute.
int symplectic_product(const SymplecticVec& u, const SymplecticVec& v);

// Full operator product with phase tracking.
SymplecticVec multiply(const SymplecticVec& u, const SymplecticVec& v);

// Adjoint: phase negated.
SymplecticVec adjoint(const SymplecticVec& v);

// (-i)^{a.b} (-1)^{b.f}: the amplitude <f| P(a,b) |f xor a>.
std::complex<double> matrix_element_phase(const std::vector<std::uint8_t>& f,
                                          const std::vector<std::uint8_t>& a,
                                          const std::vector<std::uint8_t>& b);

enum class Origin { Mass, GaugeMatterH, GaugeMatterV, Magnetic, Aux };
std::string to_string(Origin o);
Origin parse_origin(std::string_view s);

enum class LinkAction { Raise, Lower, None };

struct BosonAction {
    std::int64_t link = 0;
    LinkAction action = LinkAction::None;
    int a = 0;  // colour indices of U^{ab}; zero for U(1)
    int b = 0;
    friend bool operator==(const BosonAction&, const BosonAction&) = default;
};

struct EncodedTerm {
    double coeff = 0;
    SymplecticVec pauli;
    std::vector<BosonAction> boson_actions;
    Origin origin = Origin::Mass;

    // coeff * i^phase
    std::complex<double> weight() const;
};

// Row-major sites l = k + N*row. Each site holds n_c (physical, auxiliary)
// qubit pairs interleaved by colour.
class Lattice2D {
public:
    Lattice2D(int N, int n_colors, bool periodic = false);

    int N() const { return N_; }
    int n_colors() const { return nc_; }
    bool periodic() const { return periodic_; }
    int sites() const { return N_ * N_; }
    int qubits() const { return 2 * nc_ * sites(); }

    int site(int k, int l) const { return order_[static_cast<std::size_t>(l * N_ + k)]; }
    std::pair<int, int> coords(int s) const { return inverse_[static_cast<std::size_t>(s)]; }
    int physical_qubit(int s, int color) const { return 2 * (nc_ * s + color); }
    int aux_qubit(int s, int color) const { return physical_qubit(s, color) + 1; }
    // link id of the boson on the edge leaving site s along direction mu (0 = +k, 1 = +l)
    std::int64_t link(int s, int mu) const { return 2 * static_cast<std::int64_t>(s) + mu; }

private:
    int N_, nc_;
    bool periodic_;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> inverse_;
};

struct VcOptions {
    bool include_aux = true;
    bool include_magnetic = true;
};

std::vector<EncodedTerm> build_vc_hamiltonian(const Lattice2D& lat, GaugeGroup group,
                                              const Couplings& c, VcOptions opt = {});

struct GsEdge {
    std::int64_t v = 0, w = 0;  // v < w
    int mu = 0;
    SymplecticVec op;
};

struct GsGenerators {
    int d = 0;
    std::int64_t N = 0;
    int qubits_per_vertex = 0;
    std::vector<SymplecticVec> vertex;         // V_v
    std::vector<SymplecticVec> color_parity;   // extra-colour parities, (n_c - 1) per vertex
    std::vector<GsEdge> edges;                 // E_{v,w}
};

GsGenerators build_gs_generators(int d, std::int64_t N, GaugeGroup group);

// E_{w,v} = -E_{v,w}
SymplecticVec reversed(const GsEdge& e);

// Adjacency lists over the fermionic terms; Magnetic terms and identity
// strings are not vertices. vertex_terms maps vertex -> term index.
struct CommutativityGraph {
    std::vector<std::size_t> vertex_terms;
    std::vector<std::vector<std::size_t>> adj;
    std::size_t edge_count() const;
};

CommutativityGraph commutativity_graph(const std::vector<EncodedTerm>& terms);

// coeff  pauli-label  boson-actions  origin
void write_terms(std::ostream& out, const std::vector<EncodedTerm>& terms);
std::vector<EncodedTerm> read_terms(std::istream& in);
std::string format_term(const EncodedTerm& t);
EncodedTerm parse_term(std::string_view line);

}  // namespace lgt
