#include "lgt/cost.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lgt/circuits.hpp"

namespace lgt::cost {

std::string to_string(EncodingModel m) { return m == EncodingModel::Sparse ? "sparse" : "lcu"; }

EncodingModel parse_encoding(const std::string& s) {
    if (s == "sparse") return EncodingModel::Sparse;
    if (s == "lcu") return EncodingModel::LCU;
    throw std::invalid_argument("unknown encoding '" + s + "' (expected sparse|lcu)");
}

std::string to_string(FastForwardMethod m) { return m == FastForwardMethod::QROM ? "qrom" : "arithmetic"; }
std::string to_string(FastForwardModel m) {
    switch (m) {
    case FastForwardModel::PerGroup: return "per-group";
    case FastForwardModel::Lookup: return "lookup";
    case FastForwardModel::Formula: return "formula";
    }
    return "?";
}

FastForwardModel resolve(FastForwardModel m, GaugeGroup g) {
    if (m != FastForwardModel::PerGroup) return m;
    return g.kind() == GroupKind::SU2 ? FastForwardModel::Formula : FastForwardModel::Lookup;
}

std::string describe(const Conventions& c) {
    std::ostringstream os;
    os << "ff_model=" << to_string(c.ff_model) << ";ff_method=" << to_string(c.ff_method)
       << ";log_lambda=" << (c.ceil_log_lambda ? "ceil" : "real")
       << ";su_alpha=" << (c.su_alpha_color_weighted ? "color_weighted" : "unweighted");
    return os.str();
}

std::int64_t clog2(double x) {
    if (x <= 1.0) return 0;
    return static_cast<std::int64_t>(std::ceil(std::log2(x) - 1e-12));
}

namespace {

double pow_int(double b, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

double volume(std::int64_t n_side, int d) { return pow_int(static_cast<double>(n_side), d); }

double log_lambda(int lambda, const Conventions& conv) {
    return conv.ceil_log_lambda ? static_cast<double>(clog2(lambda)) : std::log2(static_cast<double>(lambda));
}

void require_lambda(int lambda) {
    if (lambda < 1) throw std::invalid_argument("Lambda must be >= 1");
}

}  // namespace

FastForwardCost t_fastforward(GaugeGroup g, int lambda, double eps, FastForwardMethod method, int d,
                              std::int64_t NB) {
    require_lambda(lambda);
    const double e = static_cast<double>(rotation_bits(eps));
    const double L = static_cast<double>(lambda);
    double link = 0;
    switch (g.kind()) {
    case GroupKind::U1: {
        const double l = static_cast<double>(clog2(L));
        link = method == FastForwardMethod::QROM ? 2 * (4 * L - 4) + 8 * l * e
                                                 : 8 * l * (l - 0.5) + 8 * l * e;
        break;
    }
    case GroupKind::SU2: {
        if (method != FastForwardMethod::QROM)
            throw std::invalid_argument("SU(2) fast-forwarding is only defined for the QROM method");
        const double c = static_cast<double>(clog2(L * (L + 1)));
        link = 2 * (4 * L - 4) + 4 * c * e;
        break;
    }
    case GroupKind::SU3: {
        const double c = static_cast<double>(clog2(L * (L + 3)));
        link = method == FastForwardMethod::QROM ? std::max(0.0, 2 * (2 * L * L - 4)) + 4 * c * e
                                                 : std::max(0.0, 2 * (99 * c * c - 60 * c - 16)) + 4 * c * e;
        break;
    }
    }
    return {link, link * d * volume(NB, d)};
}

FastForwardCost t_fastforward_lookup(GaugeGroup g, int lambda, int d, std::int64_t NB) {
    require_lambda(lambda);
    const double L = static_cast<double>(lambda);
    const double link = g.kind() == GroupKind::SU3 ? std::max(0.0, 2 * L * L - 4) : 4 * L - 4;
    return {link, link * d * volume(NB, d)};
}

FastForwardCost t_fastforward_model(GaugeGroup g, int lambda, double eps, int d, std::int64_t NB,
                                    const Conventions& conv) {
    if (resolve(conv.ff_model, g) == FastForwardModel::Lookup) return t_fastforward_lookup(g, lambda, d, NB);
    FastForwardMethod m = conv.ff_method;
    if (g.kind() == GroupKind::SU2) m = FastForwardMethod::QROM;
    return t_fastforward(g, lambda, eps, m, d, NB);
}

OraclePair t_sparse_oracles(Term term, std::int64_t NB, int d, int lambda, const Conventions& conv) {
    require_lambda(lambda);
    const double n = volume(NB, d);
    const double lL = log_lambda(lambda, conv);
    switch (term) {
    case Term::Mass: {
        // O_F is a CNOT copy; O_H runs N_B^d/2 controlled SIDs of width log2(N_B^d/2)
        const double w = static_cast<double>(clog2(n / 2));
        return {0.0, 2 * n * (2 * w + 1)};
    }
    case Term::GaugeMatter: return {8 * n * lL + 20 * n - 4, 32 * n - 13};
    case Term::Magnetic: return {32 * n * lL + 20 * n, 0.0};
    }
    return {};
}

double t_lcu_gm_select_single(std::int64_t NB, int d, int lambda, const Conventions& conv) {
    require_lambda(lambda);
    const double n = volume(NB, d);
    return 8 * n * log_lambda(lambda, conv) + 20 * n - 13;
}

OraclePair t_lcu_oracles(Term term, std::int64_t NB, int d, int lambda, const Conventions& conv) {
    require_lambda(lambda);
    const double n = volume(NB, d);
    switch (term) {
    case Term::Mass: return {0.0, 4 * n - 4};
    case Term::GaugeMatter: return {0.0, 2 * t_lcu_gm_select_single(NB, d, lambda, conv)};
    case Term::Magnetic: return {0.0, 32 * n * log_lambda(lambda, conv) + 20 * n};
    }
    return {};
}

SuGaugeOracles t_su_gauge_oracles(GaugeGroup g, std::int64_t N, int d, int lambda, const Conventions& conv) {
    require_lambda(lambda);
    if (g.is_abelian()) throw std::invalid_argument("SU gauge oracles need SU(2) or SU(3)");
    const double n = volume(N, d);
    const double lL = log_lambda(lambda, conv);
    const double box = static_cast<double>(plaquette_count(d, N));
    const double nc = g.n_colors();
    SuGaugeOracles o;
    // arithmetic blocks can go negative at Lambda = 1; T counts are clamped at zero
    if (g.kind() == GroupKind::SU2) {
        const double arith = std::max(0.0, 71 * lL * lL - 16 * lL - 32);
        o.O_F_GM = 4 * (4 * n) - 4 + su2_color_configs * su2_sid_calls * n * (2 * lL + 4);
        o.O_H_GM = 4 * (4 * (4 * n) - 4) + 3 + 8 * (d + 1) * n + su2_final_states * arith;
        o.O_F_B = 4 * (16 * box) - 4 + 384 * n * (2 * lL + 1);
        o.O_H_B = 4 * su2_final_states * arith;
    } else {
        const double arith = std::max(0.0, 263 * lL * lL - 28 * lL - 164);
        o.O_F_GM = 4 * (9 * n) - 4 + su3_color_configs * su3_sid_calls * n * (2 * lL + 4);
        o.O_H_GM = 4 * (4 * (9 * n) - 4) + 3 + 8 * (d + 2) * n + su3_final_states * arith;
        o.O_F_B = 4 * (81 * box) - 4 + 12672 * n * (2 * lL + 1);
        o.O_H_B = 4 * su3_final_states * arith;
    }
    o.O_H_mass = 4 * nc * n * (2 * static_cast<double>(clog2(n + nc - 2)) + 1);
    return o;
}

double t_cc_block(Term term, EncodingModel model, GaugeGroup g, std::int64_t n_side, int d, int lambda,
                  double eps, const Conventions& conv) {
    require_lambda(lambda);
    const double n = volume(n_side, d);
    const double lL = log_lambda(lambda, conv);
    const double e = static_cast<double>(rotation_bits(eps));
    if (g.is_abelian()) {
        if (model == EncodingModel::Sparse) {
            const double w = static_cast<double>(clog2(n / 2));  // p = log2(N_B^d/2)
            switch (term) {
            case Term::Mass: return 16 * n + 4 * n * (2 * w + 5) + 16 * w * e;
            case Term::GaugeMatter:
                return 40 * n + 2 * (4 * n + 4 + 4 * n * (2 * lL + 6)) + 2 * (4 * (4 * n - 4) + 5 + 32 * n) + 32 * e;
            case Term::Magnetic:
                return 2 * (4 * n - 4 + 32 * n * (2 * lL + 1) + 2 * n * (2 * lL + 1)) + 16 * e;
            }
        } else {
            switch (term) {
            case Term::Mass: return 4 * n + 4;
            case Term::GaugeMatter: return 2 * (4 * (4 * n + 4) + 3 + 4 * n * (2 * lL + 1));
            case Term::Magnetic: return 4 * n + 4 + 32 * n * (2 * lL + 1) + 2 * n * (2 * lL + 1);
            }
        }
        return 0;
    }
    if (model != EncodingModel::Sparse)
        throw std::invalid_argument("SU(2)/SU(3) block encodings are only available in the sparse model");
    const double p = su_precision_bits;
    const double box = static_cast<double>(plaquette_count(d, n_side));
    if (g.kind() == GroupKind::SU2) {
        const double arith = 684 * lL * lL - 432 * lL + 16;
        const double ln = static_cast<double>(clog2(n));
        switch (term) {
        case Term::Mass: return 32 * n + 16 * n * (2 * ln + 5) + 16 * ln * e;
        case Term::GaugeMatter:
            return 48 * (d + 1) * n +
                   2 * (4 * (4 * n) + 4 + 96 * n * (2 * lL + 8) + 4 * (4 * (4 * n) - 4) + 5 + 24 * (d + 1) * n +
                        2 * arith) +
                   32 * p * e;
        case Term::Magnetic: return 2 * (4 * (16 * box) + 4 + 384 * n * (2 * lL + 1) + 8 * arith) + 16 * p * e;
        }
    } else {
        const double arith = 2988 * lL * lL - 2028 * lL + 148;
        const double ln = static_cast<double>(clog2(n + 1));
        switch (term) {
        case Term::Mass: return 48 * n + 24 * n * (2 * ln + 5) + 16 * ln * e;
        case Term::GaugeMatter:
            return 48 * (d + 2) * n +
                   2 * (4 * (4 * n) + 4 + 12672 * n * (2 * lL + 8) + 4 * (4 * (9 * n) - 4) + 5 + 24 * (d + 2) * n +
                        12 * arith) +
                   32 * p * e;
        case Term::Magnetic: return 2 * (4 * (81 * box) + 4 + 384 * n * (2 * lL + 1) + 48 * arith) + 16 * p * e;
        }
    }
    return 0;
}

BlockCost t_block(EncodingModel model, GaugeGroup g, std::int64_t n_side, int d, int lambda, double eps,
                  const Conventions& conv) {
    BlockCost b;
    b.cc_mass = t_cc_block(Term::Mass, model, g, n_side, d, lambda, eps, conv);
    b.cc_gm = t_cc_block(Term::GaugeMatter, model, g, n_side, d, lambda, eps, conv);
    b.cc_b = t_cc_block(Term::Magnetic, model, g, n_side, d, lambda, eps, conv);
    b.rotation = 6.0 * static_cast<double>(rotation_bits(eps));
    return b;
}

double block_qubits(EncodingModel model, GaugeGroup g, std::int64_t n_side, int d, int lambda,
                    const Conventions& conv) {
    require_lambda(lambda);
    const double n = volume(n_side, d);
    const double lL = log_lambda(lambda, conv);
    const double ln = static_cast<double>(clog2(n));
    if (g.is_abelian())
        return model == EncodingModel::Sparse ? 6 * n + 4 * n * lL + 2 * ln + 2 : n + 2 * n * lL + 2 * ln + 2;
    const double nc = g.n_colors();
    return (d + nc - 1) * n + d * n * (nc * nc - 1) * lL;
}

HamT assemble_ham_t(const Couplings& c, GaugeGroup g, std::int64_t n_side, int d, int lambda, double eps,
                    double t_ff_block, double t_block_total, const Conventions& conv) {
    HamT h;
    const double n = volume(n_side, d);
    const double L = lambda;
    if (g.is_abelian() || !conv.su_alpha_color_weighted) {
        h.alpha = 2 * (c.g_M + c.g_GM + std::abs(c.g_B)) * n;
    } else {
        const double nc = g.n_colors();
        h.alpha = 2 * (c.g_M * nc + c.g_GM * nc * nc + std::abs(c.g_B) * pow_int(nc, 4)) * n;
    }
    // largest electric eigenvalue on a link
    double casimir = L * L;
    if (g.kind() == GroupKind::SU2) casimir = L * (L + 1);
    if (g.kind() == GroupKind::SU3) casimir = L * L + 2 * L;
    h.alpha_E = 2 * c.g_E * casimir * n;
    h.M = 16 * (h.alpha + h.alpha_E) / eps;
    h.log_M = clog2(h.M);
    h.t_ham_t = t_ff_block * static_cast<double>(h.log_M) + t_block_total;
    return h;
}

std::int64_t dyson_order(double alpha, double eps) {
    const double x = 2 * alpha / eps;
    if (!(x > std::exp(1.0))) return 1;
    return static_cast<std::int64_t>(std::ceil(-1 + 2 * std::log(x) / (std::log(std::log(x)) + 1)));
}

bool CostReport::audit(double rel_tol) const {
    auto close = [&](double a, double b) { return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)}); };
    const double ham = t_fastforward * static_cast<double>(log_M) + block.total();
    const double seg = alpha * (t_fastforward + static_cast<double>(K) * ham);
    const double tot = blocks * time * seg;
    const double q = blocks * (qubits_block + qubits_ancilla);
    return close(ham, t_ham_t) && close(seg, segment) && close(tot, total) && close(q, qubits_total) &&
           close(t_fastforward, t_ff_per_link * d * volume(NB, d)) && close(M, 16 * (alpha + alpha_E) / epsilon) &&
           log_M == clog2(M) && K == dyson_order(alpha, epsilon);
}

CostReport assemble_total(const PhysicalParams& p, const TotalOptions& opt) {
    validate(p);
    CostReport r;
    r.group = p.group;
    r.model = opt.model;
    r.hhkl = opt.hhkl;
    r.conventions = opt.conv;
    r.N = p.N;
    r.d = p.d;
    r.lambda = p.lambda;
    r.time = p.time;
    r.epsilon = p.epsilon;
    r.v_lr = opt.v_lr;
    const Couplings c = derive_couplings(p);
    const auto& conv = opt.conv;

    if (opt.hhkl) {
        if (!p.group.is_abelian())
            throw std::invalid_argument("HHKL block sizes need a Lieb-Robinson bound, available for U(1) only");
        if (!opt.v_lr) throw std::invalid_argument("HHKL assembly needs a Lieb-Robinson velocity");
        r.NB = std::min<std::int64_t>(p.N, static_cast<std::int64_t>(std::ceil(*opt.v_lr - 1e-12)));
        r.NB = std::max<std::int64_t>(r.NB, 1);
    } else {
        r.NB = p.N;
    }
    if (!p.group.is_abelian() && opt.model != EncodingModel::Sparse)
        throw std::invalid_argument("SU(2)/SU(3) support the sparse model only");

    const double n = volume(r.NB, p.d);
    r.blocks = volume(p.N, p.d) / n;

    const auto ff = t_fastforward_model(p.group, p.lambda, p.epsilon, p.d, r.NB, conv);
    r.t_ff_per_link = ff.per_link;
    r.t_fastforward = ff.per_block;
    r.formula["t_fastforward"] = resolve(conv.ff_model, p.group) == FastForwardModel::Lookup
                                     ? "ff." + to_string(p.group) + ".lookup"
                                     : "ff." + to_string(p.group) + "." + to_string(conv.ff_method);

    if (p.group.is_abelian()) {
        auto oracles = opt.model == EncodingModel::Sparse ? t_sparse_oracles : t_lcu_oracles;
        r.mass = oracles(Term::Mass, r.NB, p.d, p.lambda, conv);
        r.gauge_matter = oracles(Term::GaugeMatter, r.NB, p.d, p.lambda, conv);
        r.magnetic = oracles(Term::Magnetic, r.NB, p.d, p.lambda, conv);
        r.p = static_cast<int>(clog2(n / 2));
        r.formula["oracles"] = "u1." + to_string(opt.model) + ".oracles";
    } else {
        r.su = t_su_gauge_oracles(p.group, r.NB, p.d, p.lambda, conv);
        r.plaquettes = p.d >= 2 ? plaquette_count(p.d, r.NB) : 0;
        r.p = su_precision_bits;
        r.formula["oracles"] = to_string(p.group) + ".sparse.oracles";
    }
    r.block = t_block(opt.model, p.group, r.NB, p.d, p.lambda, p.epsilon, conv);
    r.formula["block"] = to_string(p.group) + "." + to_string(opt.model) + ".cc_blocks+6log(1/eps)";

    const HamT h = assemble_ham_t(c, p.group, r.NB, p.d, p.lambda, p.epsilon, r.t_fastforward, r.block.total(), conv);
    r.alpha = h.alpha;
    r.alpha_E = h.alpha_E;
    r.M = h.M;
    r.log_M = h.log_M;
    r.t_ham_t = h.t_ham_t;
    r.formula["alpha"] = (p.group.is_abelian() || !conv.su_alpha_color_weighted) ? "alpha.unweighted" : "alpha.color_weighted";
    r.formula["t_ham_t"] = "ff*ceil(log2 M)+block";

    r.K = dyson_order(r.alpha, p.epsilon);
    r.segment = r.alpha * (r.t_fastforward + static_cast<double>(r.K) * r.t_ham_t);
    r.total = r.blocks * p.time * r.segment;
    r.formula["segment"] = "alpha*(ff+K*hamt)";
    r.formula["total"] = "(N^d T/NB^d)*segment";

    r.qubits_block = block_qubits(opt.model, p.group, r.NB, p.d, p.lambda, conv);
    r.qubits_ancilla = static_cast<double>(r.log_M);
    r.qubits_total = r.blocks * (r.qubits_block + r.qubits_ancilla);
    r.formula["qubits"] = to_string(p.group) + "." + to_string(opt.model) + ".qubits+ceil(log2 M)";
    return r;
}

}  // namespace lgt::cost
