#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lgt/model.hpp"

namespace lgt::cost {

enum class EncodingModel { Sparse, LCU };
enum class FastForwardMethod { Arithmetic, QROM };
enum class Term { Mass, GaugeMatter, Magnetic };

// How the per-link electric evolution enters assembled totals.
//   Lookup : one QROM read of the eigenvalue table per link; uncompute by
//            measurement and phase-gradient kickback carry no T cost.
//   Formula: the full per-link formula of the chosen method, rotations included.
//   PerGroup: Formula for SU(2), Lookup otherwise.
enum class FastForwardModel { PerGroup, Lookup, Formula };

// PerGroup resolved against the gauge group
FastForwardModel resolve(FastForwardModel m, GaugeGroup g);

struct Conventions {
    FastForwardModel ff_model = FastForwardModel::PerGroup;
    FastForwardMethod ff_method = FastForwardMethod::QROM;  // used by the Formula model
    bool ceil_log_lambda = false;       // log(Lambda) factors in oracle, block and qubit formulas
    bool su_alpha_color_weighted = false;  // alpha = 2(g_M n_c + g_GM n_c^2 + |g_B| n_c^4) N^d for SU(N)
};

std::string describe(const Conventions& c);

std::string to_string(EncodingModel m);
EncodingModel parse_encoding(const std::string& s);
std::string to_string(FastForwardMethod m);
std::string to_string(FastForwardModel m);

// ceil(log2 x) for x >= 1, 0 below
std::int64_t clog2(double x);

struct FastForwardCost {
    double per_link = 0;
    double per_block = 0;  // per_link * d * NB^d
};

// Per-link formulas with ceiled register widths.
FastForwardCost t_fastforward(GaugeGroup g, int lambda, double eps, FastForwardMethod method, int d,
                              std::int64_t NB);

// Lookup-only per-link cost: 4L-4 with L = Lambda (U(1), SU(2)); 2 Lambda^2 - 4 (SU(3)).
FastForwardCost t_fastforward_lookup(GaugeGroup g, int lambda, int d, std::int64_t NB);

FastForwardCost t_fastforward_model(GaugeGroup g, int lambda, double eps, int d, std::int64_t NB,
                                    const Conventions& conv);

struct OraclePair {
    double first = 0;   // O_F or prepare
    double second = 0;  // O_H or select
};

// U(1) sparse oracles (O_F, O_H).
OraclePair t_sparse_oracles(Term term, std::int64_t NB, int d, int lambda, const Conventions& conv = {});

// U(1) LCU (prepare, select). GaugeMatter select covers both hopping directions.
OraclePair t_lcu_oracles(Term term, std::int64_t NB, int d, int lambda, const Conventions& conv = {});
double t_lcu_gm_select_single(std::int64_t NB, int d, int lambda, const Conventions& conv = {});

// SU(N) gauge-oracle constants
inline constexpr int su2_sid_calls = 6;
inline constexpr int su3_sid_calls = 88;
inline constexpr int su2_color_configs = 16;
inline constexpr int su3_color_configs = 36;
inline constexpr int su2_final_states = 2;
inline constexpr int su3_final_states = 12;
inline constexpr int su_precision_bits = 64;

struct SuGaugeOracles {
    double O_F_GM = 0, O_H_GM = 0, O_F_B = 0, O_H_B = 0, O_H_mass = 0;
};

SuGaugeOracles t_su_gauge_oracles(GaugeGroup g, std::int64_t N, int d, int lambda, const Conventions& conv = {});

struct BlockCost {
    double cc_mass = 0, cc_gm = 0, cc_b = 0;
    double rotation = 0;  // 6 log(1/eps)
    double total() const { return cc_mass + cc_gm + cc_b + rotation; }
};

// n_side is N_B (U(1)) or N (SU groups, which use p = 64 and support only Sparse).
double t_cc_block(Term term, EncodingModel model, GaugeGroup g, std::int64_t n_side, int d, int lambda,
                  double eps, const Conventions& conv = {});
BlockCost t_block(EncodingModel model, GaugeGroup g, std::int64_t n_side, int d, int lambda, double eps,
                  const Conventions& conv = {});

// Qubits for one block, without the ceil(log2 M) ancillas.
double block_qubits(EncodingModel model, GaugeGroup g, std::int64_t n_side, int d, int lambda,
                    const Conventions& conv = {});

struct HamT {
    double alpha = 0, alpha_E = 0, M = 0;
    std::int64_t log_M = 0;  // ceil(log2 M)
    double t_ham_t = 0;
};

HamT assemble_ham_t(const Couplings& c, GaugeGroup g, std::int64_t n_side, int d, int lambda, double eps,
                    double t_ff_block, double t_block_total, const Conventions& conv = {});

// ceil(-1 + 2 ln(x)/(ln ln x + 1)), x = 2 alpha / eps; 1 when x <= e
std::int64_t dyson_order(double alpha, double eps);

struct CostReport {
    GaugeGroup group;
    EncodingModel model = EncodingModel::Sparse;
    bool hhkl = false;
    Conventions conventions;

    std::int64_t N = 0, NB = 0;
    int d = 0, lambda = 0;
    double time = 0, epsilon = 0;
    std::optional<double> v_lr;
    std::int64_t plaquettes = 0;  // N_box for SU groups
    int p = 0;

    double t_ff_per_link = 0, t_fastforward = 0;
    OraclePair mass, gauge_matter, magnetic;  // U(1) oracle pairs
    std::optional<SuGaugeOracles> su;
    BlockCost block;
    double alpha = 0, alpha_E = 0, M = 0;
    std::int64_t log_M = 0, K = 0;
    double t_ham_t = 0, segment = 0, blocks = 0, total = 0;

    double qubits_block = 0, qubits_ancilla = 0, qubits_total = 0;

    std::map<std::string, std::string> formula;  // field -> formula identifier

    // Recomputes block total, HAM-T, segment and total from the stored fields.
    bool audit(double rel_tol = 1e-12) const;
};

struct TotalOptions {
    EncodingModel model = EncodingModel::Sparse;
    bool hhkl = false;
    std::optional<double> v_lr;  // required when hhkl; computed by the caller
    Conventions conv;
};

CostReport assemble_total(const PhysicalParams& p, const TotalOptions& opt);

}  // namespace lgt::cost
