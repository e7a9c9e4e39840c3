#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "lgt/oracles.hpp"
#include "lgt/pauli.hpp"

using namespace lgt;

namespace {

std::vector<std::string> all_labels(int n) {
    std::vector<std::string> out{""};
    for (int k = 0; k < n; ++k) {
        std::vector<std::string> next;
        for (const auto& s : out)
            for (char c : std::string("IXYZ")) next.push_back(s + c);
        out.swap(next);
    }
    return out;
}

std::vector<std::uint8_t> bits_of(unsigned v, int n) {
    std::vector<std::uint8_t> b(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) b[static_cast<std::size_t>(k)] = (v >> (n - 1 - k)) & 1u;
    return b;
}

Couplings unit_couplings() {
    PhysicalParams p;
    p.a = 0.5;
    p.m = 1.5;
    p.g = 2;
    return derive_couplings(p);
}

}  // namespace

TEST_CASE("label to symplectic") {
    const auto v = pauli_to_symplectic("XZY");
    CHECK(v.x_bits() == std::vector<std::uint8_t>{1, 0, 1});
    CHECK(v.z_bits() == std::vector<std::uint8_t>{0, 1, 1});
    CHECK(v.phase() == 0);
    CHECK(pauli_to_symplectic("III").is_identity());
    CHECK_THROWS(pauli_to_symplectic("XQ"));
    for (const auto& s : all_labels(3)) CHECK(symplectic_to_pauli(pauli_to_symplectic(s)) == s);
}

TEST_CASE("symplectic product examples") {
    CHECK(symplectic_product(pauli_to_symplectic("X"), pauli_to_symplectic("Z")) == 1);
    CHECK(symplectic_product(pauli_to_symplectic("XX"), pauli_to_symplectic("ZZ")) == 0);
    CHECK_THROWS(symplectic_product(pauli_to_symplectic("X"), pauli_to_symplectic("XX")));
}

TEST_CASE("symplectic product matches dense commutators, n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const auto labels = all_labels(n);
        for (const auto& a : labels)
            for (const auto& b : labels) {
                const auto u = pauli_to_symplectic(a), v = pauli_to_symplectic(b);
                CAPTURE(a);
                CAPTURE(b);
                CHECK((symplectic_product(u, v) == 0) == oracle::dense_commute(u, v));
            }
    }
}

TEST_CASE("operator product tracks phases") {
    for (const auto& a : all_labels(2))
        for (const auto& b : all_labels(2))
            for (int ph = 0; ph < 4; ++ph) {
                auto u = pauli_to_symplectic(a);
                u.set_phase(ph);
                const auto v = pauli_to_symplectic(b);
                const auto w = multiply(u, v);
                CHECK((oracle::dense_pauli(w) - oracle::dense_pauli(u) * oracle::dense_pauli(v)).cwiseAbs().maxCoeff() <
                      1e-12);
            }
    auto y = pauli_to_symplectic("Y");
    y.set_phase(1);
    CHECK((oracle::dense_pauli(adjoint(y)) - oracle::dense_pauli(y).adjoint()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("matrix element phase") {
    CHECK(matrix_element_phase({1, 0}, {1, 1}, {1, 0}) == std::complex<double>(0, 1));
    CHECK(matrix_element_phase({1, 1, 0}, {1, 0, 1}, {0, 0, 0}) == std::complex<double>(1, 0));

    for (int n = 1; n <= 3; ++n)
        for (unsigned fa = 0; fa < (1u << n); ++fa)
            for (unsigned aa = 0; aa < (1u << n); ++aa)
                for (unsigned ba = 0; ba < (1u << n); ++ba) {
                    const auto f = bits_of(fa, n), a = bits_of(aa, n), b = bits_of(ba, n);
                    SymplecticVec P(static_cast<std::size_t>(n));
                    for (int k = 0; k < n; ++k) {
                        P.set_x(static_cast<std::size_t>(k), a[static_cast<std::size_t>(k)]);
                        P.set_z(static_cast<std::size_t>(k), b[static_cast<std::size_t>(k)]);
                    }
                    const auto M = oracle::dense_pauli(P);
                    const auto col = oracle::basis_index(bits_of(fa ^ aa, n));
                    const auto row = oracle::basis_index(f);
                    const auto got = matrix_element_phase(f, a, b);
                    CHECK(std::abs(std::abs(got) - 1.0) < 1e-15);
                    CHECK(std::abs(M(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) - got) < 1e-12);
                }
}

TEST_CASE("lattice ordering is a bijection") {
    for (int N : {2, 4, 6}) {
        Lattice2D lat(N, 1);
        std::set<int> seen;
        for (int l = 0; l < N; ++l)
            for (int k = 0; k < N; ++k) {
                const int s = lat.site(k, l);
                CHECK(s == k + N * l);
                CHECK(lat.coords(s) == std::make_pair(k, l));
                seen.insert(s);
            }
        CHECK(seen.size() == static_cast<std::size_t>(N * N));
    }
}

TEST_CASE("VC Hamiltonian on a 2x2 lattice") {
    Lattice2D lat(2, 1);
    const auto c = unit_couplings();
    const auto terms = build_vc_hamiltonian(lat, GaugeGroup(GroupKind::U1), c);

    std::size_t mass = 0;
    for (const auto& t : terms) {
        switch (t.origin) {
        case Origin::Mass:
            ++mass;
            CHECK(t.boson_actions.empty());
            CHECK(t.pauli.weight() == 1);
            break;
        case Origin::GaugeMatterH:
        case Origin::GaugeMatterV: CHECK(t.boson_actions.size() == 1); break;
        case Origin::Magnetic:
            CHECK(t.boson_actions.size() == 4);
            CHECK(t.pauli.is_identity());
            break;
        case Origin::Aux: CHECK(t.boson_actions.empty()); break;
        }
    }
    CHECK(mass == 4);

    for (int s = 0; s < 4; ++s) {
        const auto& t = terms[static_cast<std::size_t>(s)];
        CHECK(t.origin == Origin::Mass);
        CHECK(t.pauli.z(static_cast<std::size_t>(lat.physical_qubit(s, 0))));
        CHECK(t.coeff == doctest::Approx((s % 2 ? 1.0 : -1.0) * c.g_M / 2));
    }
    for (const auto& t : terms)
        if (t.origin == Origin::GaugeMatterV) CHECK(t.pauli.weight() == 4);
}

TEST_CASE("VC term counts") {
    for (int N : {2, 4}) {
        Lattice2D lat(N, 1);
        const auto terms = build_vc_hamiltonian(lat, GaugeGroup(GroupKind::U1), unit_couplings());
        std::map<Origin, std::size_t> n;
        for (const auto& t : terms) ++n[t.origin];
        const std::size_t bonds = static_cast<std::size_t>(N * (N - 1));
        CHECK(n[Origin::Mass] == static_cast<std::size_t>(N * N));
        // each hop and its partner expand into 4 Pauli strings
        CHECK(n[Origin::GaugeMatterH] == bonds * 2 * 4);
        CHECK(n[Origin::GaugeMatterV] == bonds * 2 * 4);
        CHECK(n[Origin::Magnetic] == static_cast<std::size_t>(2 * (N - 1) * (N - 1)));
        CHECK(n[Origin::Aux] == static_cast<std::size_t>((N - 1) * (N - 1)));
    }
}

TEST_CASE("odd lattice sizes are rejected") {
    CHECK_THROWS_WITH(build_vc_hamiltonian(Lattice2D(3, 1), GaugeGroup(GroupKind::U1), unit_couplings()),
                      "staggered lattice requires even linear size");
}

TEST_CASE("VC terms are Hermitian closed") {
    for (auto k : {GroupKind::U1, GroupKind::SU2})
        for (int N : {2, 4})
            for (bool per : {false, true}) {
                if (per && N == 2) continue;
                const GaugeGroup g(k);
                Lattice2D lat(N, g.n_colors(), per);
                CHECK(oracle::hermitian_defects(build_vc_hamiltonian(lat, g, unit_couplings())) == 0);
            }
}

TEST_CASE("auxiliary stabilizers commute with the physical terms") {
    for (int N : {2, 4}) {
        Lattice2D lat(N, 1);
        const auto rep = oracle::check_vc_stabilizers(build_vc_hamiltonian(lat, GaugeGroup(GroupKind::U1), unit_couplings()));
        CAPTURE(N);
        CHECK(rep.aux_terms == static_cast<std::size_t>((N - 1) * (N - 1)));
        CHECK(rep.aux_pairs_anticommuting == 0);
        CHECK(rep.physical_aux_anticommuting == 0);
    }
}

TEST_CASE("fermionic supports stay local") {
    Lattice2D lat(4, 1);
    const auto terms = build_vc_hamiltonian(lat, GaugeGroup(GroupKind::U1), unit_couplings());
    for (const auto& t : terms) {
        if (t.origin != Origin::GaugeMatterH) continue;
        // horizontal hop inside one row: support within that row's qubits
        const auto sup = t.pauli.support();
        const int row_lo = static_cast<int>(sup.front()) / (2 * 4);
        const int row_hi = static_cast<int>(sup.back()) / (2 * 4);
        CHECK(row_lo == row_hi);
    }
}

TEST_CASE("majorana decoding") {
    // Z_0 X_1 is the plain Majorana on qubit 1
    const auto m = oracle::majorana_bits(pauli_to_symplectic("ZX"));
    CHECK(m == std::vector<std::uint8_t>{0, 0, 1, 0});
    const auto z = oracle::majorana_bits(pauli_to_symplectic("IZ"));
    CHECK(z == std::vector<std::uint8_t>{0, 0, 1, 1});
    for (const auto& a : all_labels(3))
        for (const auto& b : all_labels(3))
            CHECK(oracle::majorana_anticommute(oracle::majorana_bits(pauli_to_symplectic(a)),
                                               oracle::majorana_bits(pauli_to_symplectic(b))) ==
                  symplectic_product(pauli_to_symplectic(a), pauli_to_symplectic(b)));
}

TEST_CASE("commutativity graph") {
    Lattice2D lat(2, 1);
    const auto terms = build_vc_hamiltonian(lat, GaugeGroup(GroupKind::U1), unit_couplings());
    const auto g = commutativity_graph(terms);
    for (auto ti : g.vertex_terms) CHECK(terms[ti].origin != Origin::Magnetic);
    // vertices 0..3 are the mass terms
    for (std::size_t u = 0; u < 4; ++u)
        for (auto w : g.adj[u]) CHECK(terms[g.vertex_terms[w]].origin != Origin::Mass);
    bool mass_hop_edge = false;
    for (auto w : g.adj[0])
        if (terms[g.vertex_terms[w]].origin == Origin::GaugeMatterH) mass_hop_edge = true;
    CHECK(mass_hop_edge);
    std::size_t deg = 0;
    for (const auto& a : g.adj) deg += a.size();
    CHECK(deg == 2 * g.edge_count());
}

TEST_CASE("commutativity graph is translation invariant on a periodic lattice") {
    Lattice2D lat(4, 1, true);
    const auto terms = build_vc_hamiltonian(lat, GaugeGroup(GroupKind::U1), unit_couplings());
    for (auto [dk, dl] : std::vector<std::pair<int, int>>{{0, 1}, {2, 0}, {2, 3}, {0, 3}}) {
        CAPTURE(dk);
        CAPTURE(dl);
        const auto rep = oracle::check_translation_automorphism(lat, terms, dk, dl);
        CHECK(rep.edges > 0);
        CHECK(rep.ok());
    }
    // vertical terms alternate Majorana types with column parity, so odd column
    // shifts do not map terms onto terms
    const auto odd = oracle::check_translation_automorphism(lat, terms, 1, 0);
    CHECK(odd.unmatched_vertices > 0);
}

TEST_CASE("GS generators") {
    for (int d : {1, 2, 3}) {
        const auto gs = build_gs_generators(d, 2, GaugeGroup(GroupKind::U1));
        CAPTURE(d);
        for (const auto& v : gs.vertex) CHECK(v.weight() == static_cast<std::size_t>(d));
        for (const auto& e : gs.edges) {
            const auto r = reversed(e);
            CHECK(r.same_string(e.op));
            CHECK((r.phase() - e.op.phase() + 4) % 4 == 2);
        }
        for (std::size_t i = 0; i < gs.edges.size(); ++i)
            for (std::size_t j = i + 1; j < gs.edges.size(); ++j) {
                const auto& a = gs.edges[i];
                const auto& b = gs.edges[j];
                const bool share = a.v == b.v || a.v == b.w || a.w == b.v || a.w == b.w;
                if (share) CHECK(symplectic_product(a.op, b.op) == 1);
            }
        for (std::size_t v = 0; v < gs.vertex.size(); ++v)
            for (const auto& e : gs.edges)
                if (e.v != static_cast<std::int64_t>(v) && e.w != static_cast<std::int64_t>(v))
                    CHECK(symplectic_product(gs.vertex[v], e.op) == 0);
    }
    const auto su3 = build_gs_generators(2, 3, GaugeGroup(GroupKind::SU3));
    CHECK(su3.qubits_per_vertex == 2 + 2);
    CHECK(su3.color_parity.size() == 9 * 2);
}

TEST_CASE("term text round trip") {
    Lattice2D lat(4, 2);
    const auto terms = build_vc_hamiltonian(lat, GaugeGroup(GroupKind::SU2), unit_couplings());
    std::stringstream ss;
    write_terms(ss, terms);
    const auto back = read_terms(ss);
    REQUIRE(back.size() == terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        CHECK(back[i].coeff == terms[i].coeff);
        CHECK(back[i].pauli == terms[i].pauli);
        CHECK(back[i].boson_actions == terms[i].boson_actions);
        CHECK(back[i].origin == terms[i].origin);
    }
    CHECK_THROWS(parse_term("1.0 +XQ - Mass"));
}
