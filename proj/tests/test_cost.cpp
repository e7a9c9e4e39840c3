#include <doctest.h>

#include <cmath>

#include "lgt/cost.hpp"
#include "lgt/lieb_robinson.hpp"

using namespace lgt;
using namespace lgt::cost;

namespace {
const GaugeGroup U1(GroupKind::U1), SU2(GroupKind::SU2), SU3(GroupKind::SU3);
}

TEST_CASE("fast-forward per-link formulas") {
    const auto q = t_fastforward(U1, 10, 1e-8, FastForwardMethod::QROM, 2, 3);
    CHECK(q.per_link == 936);
    CHECK(q.per_block == 936 * 2 * 9);
    CHECK(t_fastforward(U1, 2, 1e-3, FastForwardMethod::Arithmetic, 1, 1).per_link <=
          t_fastforward(U1, 2, 1e-3, FastForwardMethod::QROM, 1, 1).per_link);
    CHECK_THROWS(t_fastforward(SU2, 10, 1e-3, FastForwardMethod::Arithmetic, 3, 2));
    CHECK_THROWS(t_fastforward(U1, 0, 1e-3, FastForwardMethod::QROM, 3, 2));
    // SU(2): 2(4L-4) + 4 ceil(log2 L(L+1)) ceil(log2 1/eps)
    CHECK(t_fastforward(SU2, 10, 1e-3, FastForwardMethod::QROM, 1, 1).per_link == 72 + 4 * 7 * 10);
    CHECK(t_fastforward_lookup(U1, 10, 2, 5).per_link == 36);
    CHECK(t_fastforward_lookup(SU3, 10, 3, 5).per_link == 196);
    CHECK(t_fastforward_lookup(SU3, 1, 3, 5).per_link == 0);
    CHECK(t_fastforward(SU3, 1, 1e-3, FastForwardMethod::QROM, 1, 1).per_link >= 0);
}

TEST_CASE("U(1) sparse oracles") {
    auto m = t_sparse_oracles(Term::Mass, 2, 2, 10);
    CHECK(m.first == 0);
    CHECK(m.second == 24);
    auto gm = t_sparse_oracles(Term::GaugeMatter, 2, 2, 2);
    CHECK(gm.first == 108);
    CHECK(gm.second == 115);
    auto b = t_sparse_oracles(Term::Magnetic, 1, 2, 1);
    CHECK(b.first == 20);
    CHECK(b.second == 0);
}

TEST_CASE("U(1) LCU oracles") {
    CHECK(t_lcu_oracles(Term::Mass, 2, 2, 10).second == 12);
    for (auto t : {Term::Mass, Term::GaugeMatter, Term::Magnetic}) CHECK(t_lcu_oracles(t, 4, 2, 10).first == 0);
    CHECK(t_lcu_oracles(Term::GaugeMatter, 4, 2, 10).second == 2 * t_lcu_gm_select_single(4, 2, 10));
}

TEST_CASE("CC block formulas") {
    CHECK(t_cc_block(Term::Mass, EncodingModel::LCU, U1, 2, 2, 10, 1e-3) == 20);
    CHECK_THROWS(t_cc_block(Term::Mass, EncodingModel::LCU, SU2, 4, 3, 10, 1e-3));
    // Lambda = 1: log terms vanish, arithmetic blocks keep their constants
    const double n = 8, box = static_cast<double>(plaquette_count(3, 2));
    const double cc_b = t_cc_block(Term::Magnetic, EncodingModel::Sparse, SU2, 2, 3, 1, 1e-3);
    CHECK(cc_b == doctest::Approx(2 * (4 * 16 * box + 4 + 384 * n + 8 * 16.0) + 16 * 64 * 10));
    const auto blk = t_block(EncodingModel::Sparse, U1, 4, 2, 5, 1e-3);
    CHECK(blk.rotation == 60);
    CHECK(blk.total() == doctest::Approx(blk.cc_mass + blk.cc_gm + blk.cc_b + 60));
}

TEST_CASE("SU gauge oracles") {
    const auto s2 = t_su_gauge_oracles(SU2, 2, 3, 10);
    CHECK(s2.O_H_mass == 448);
    const auto s3 = t_su_gauge_oracles(SU3, 2, 3, 1);
    CHECK(su3_color_configs * su3_sid_calls == 3168);
    CHECK(s3.O_F_GM == doctest::Approx(4 * 9 * 8 - 4 + 3168 * 8 * 4));
    // Lambda = 1 arithmetic blocks clamp at zero
    CHECK(s3.O_H_B == 0);
    CHECK(s3.O_H_GM == doctest::Approx(4 * (4 * 72 - 4) + 3 + 8 * 5 * 8));
    CHECK_THROWS(t_su_gauge_oracles(U1, 2, 3, 10));
}

TEST_CASE("HAM-T assembly for heavy-ion parameters") {
    PhysicalParams p;
    p.a = 0.1;
    const auto c = derive_couplings(p);
    const auto h = assemble_ham_t(c, U1, 53, 2, 10, 1e-3, 0, 0);
    CHECK(h.alpha == doctest::Approx(2 * 15.5 * 2809));
    CHECK(h.alpha_E == doctest::Approx(2.809e7));
    // 16 (8.708e4 + 2.809e7) / 1e-3 = 4.508e11
    CHECK(h.log_M == 39);
    const auto h0 = assemble_ham_t(c, U1, 53, 2, 0, 1e-3, 5, 7);
    CHECK(h0.alpha_E == 0);
    CHECK(h0.t_ham_t == 5.0 * static_cast<double>(h0.log_M) + 7);
}

TEST_CASE("Dyson order") {
    CHECK(dyson_order(1.0, 1.0) == 1);
    const double x = 2 * 1e4 / 1e-3;
    CHECK(dyson_order(1e4, 1e-3) == static_cast<std::int64_t>(std::ceil(-1 + 2 * std::log(x) / (std::log(std::log(x)) + 1))));
}

TEST_CASE("total assembly and audit") {
    PhysicalParams p;
    p.N = 100;
    p.a = 0.1;
    TotalOptions opt;
    opt.model = EncodingModel::LCU;
    opt.hhkl = true;
    opt.v_lr = 52.2;
    const auto r = assemble_total(p, opt);
    CHECK(r.NB == 53);
    CHECK(r.audit());
    CHECK(r.total == doctest::Approx(r.blocks * p.time * r.segment));
    CHECK(r.formula.count("total") == 1);
    CHECK(r.formula.count("t_fastforward") == 1);
    CHECK(r.total / 2.6e14 > 0.5);
    CHECK(r.total / 2.6e14 < 2.0);
    CHECK(r.qubits_total / 7.6e4 > 0.5);
    CHECK(r.qubits_total / 7.6e4 < 2.0);

    PhysicalParams s = p;
    s.group = SU2;
    s.d = 3;
    CHECK_THROWS(assemble_total(s, opt));
    opt.hhkl = false;
    CHECK_THROWS(assemble_total(s, opt));  // LCU
    opt.model = EncodingModel::Sparse;
    const auto rs = assemble_total(s, opt);
    CHECK(rs.NB == 100);
    CHECK(rs.audit());
    CHECK(rs.p == 64);
}

TEST_CASE("SU tables at a = 1, N = 100") {
    PhysicalParams p;
    p.d = 3;
    p.N = 100;
    p.a = 1;
    TotalOptions opt;
    p.group = SU2;
    const double t2 = assemble_total(p, opt).total;
    CHECK(t2 / 1.0e20 > 1.0 / 3);
    CHECK(t2 / 1.0e20 < 3);
    p.group = SU3;
    const double t3 = assemble_total(p, opt).total;
    CHECK(t3 / 1.6e21 > 1.0 / 3);
    CHECK(t3 / 1.6e21 < 3);
}

TEST_CASE("colour weighted SU alpha is available") {
    PhysicalParams p;
    p.d = 3;
    p.N = 10;
    p.group = SU3;
    TotalOptions opt;
    const auto plain = assemble_total(p, opt);
    opt.conv.su_alpha_color_weighted = true;
    const auto weighted = assemble_total(p, opt);
    CHECK(weighted.alpha > plain.alpha);
    CHECK(weighted.formula.at("alpha") == "alpha.color_weighted");
    CHECK(weighted.audit());
}

TEST_CASE("totals are monotone in N, T, Lambda and 1/eps") {
    struct Case {
        GaugeGroup g;
        EncodingModel m;
        int d;
    };
    for (const auto& cs : {Case{U1, EncodingModel::Sparse, 2}, Case{U1, EncodingModel::LCU, 2},
                           Case{SU2, EncodingModel::Sparse, 3}, Case{SU3, EncodingModel::Sparse, 3}})
        for (bool ceil_log : {false, true}) {
            TotalOptions opt;
            opt.model = cs.m;
            opt.conv.ceil_log_lambda = ceil_log;
            auto at = [&](std::int64_t N, double T, int L, double eps) {
                PhysicalParams p;
                p.group = cs.g;
                p.d = cs.d;
                p.N = N;
                p.time = T;
                p.lambda = L;
                p.epsilon = eps;
                return assemble_total(p, opt);
            };
            const std::int64_t Ns[] = {4, 16, 64};
            const double Ts[] = {1, 10, 100};
            const int Ls[] = {2, 10, 40};
            const double Es[] = {1e-1, 1e-3, 1e-6};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    for (int k = 0; k < 3; ++k)
                        for (int l = 0; l < 3; ++l) {
                            const auto r = at(Ns[i], Ts[j], Ls[k], Es[l]);
                            CHECK(r.total >= 0);
                            CHECK(r.qubits_total >= 0);
                            if (i < 2) CHECK(at(Ns[i + 1], Ts[j], Ls[k], Es[l]).total >= r.total);
                            if (j < 2) CHECK(at(Ns[i], Ts[j + 1], Ls[k], Es[l]).total >= r.total);
                            if (k < 2) CHECK(at(Ns[i], Ts[j], Ls[k + 1], Es[l]).total >= r.total);
                            if (l < 2) CHECK(at(Ns[i], Ts[j], Ls[k], Es[l + 1]).total >= r.total);
                        }
        }
}

TEST_CASE("U(1) sparse and LCU simulations agree within 10 percent with the formula fast-forward") {
    for (double eps : {1e-3, 1e-1})
        for (std::int64_t N : {100, 1000})
            for (double a : {1.0, 0.1, 0.01}) {
                PhysicalParams p;
                p.N = N;
                p.a = a;
                p.epsilon = eps;
                TotalOptions opt;
                opt.hhkl = true;
                opt.v_lr = a == 1.0 ? 9.5 : (a == 0.1 ? 52.2 : 427.6);
                opt.conv.ff_model = FastForwardModel::Formula;
                opt.model = EncodingModel::Sparse;
                const double ts = assemble_total(p, opt).total;
                opt.model = EncodingModel::LCU;
                const double tl = assemble_total(p, opt).total;
                CAPTURE(eps);
                CAPTURE(N);
                CAPTURE(a);
                CHECK(std::abs(ts / tl - 1) <= 0.10);
            }
}

TEST_CASE("with the lookup fast-forward the sparse surplus stays below a quarter") {
    // cheaper fast-forwarding leaves the block encodings a larger share of HAM-T
    for (double eps : {1e-3, 1e-1})
        for (double a : {1.0, 0.1, 0.01}) {
            PhysicalParams p;
            p.N = 1000;
            p.a = a;
            p.epsilon = eps;
            TotalOptions opt;
            opt.hhkl = true;
            opt.v_lr = a == 1.0 ? 9.5 : (a == 0.1 ? 52.2 : 427.6);
            opt.model = EncodingModel::Sparse;
            const double ts = assemble_total(p, opt).total;
            opt.model = EncodingModel::LCU;
            const double tl = assemble_total(p, opt).total;
            CAPTURE(eps);
            CAPTURE(a);
            CHECK(ts > tl);
            CHECK(ts / tl < 1.25);
        }
}
