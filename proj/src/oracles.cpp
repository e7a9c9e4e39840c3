#include "lgt/oracles.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "lgt/circuits.hpp"

namespace lgt::oracle {

namespace {

using C = std::complex<double>;

Eigen::Matrix2cd letter(bool x, bool z) {
    Eigen::Matrix2cd m;
    if (!x && !z) m << 1, 0, 0, 1;
    if (x && !z) m << 0, 1, 1, 0;
    if (!x && z) m << 1, 0, 0, -1;
    if (x && z) m << 0, C(0, -1), C(0, 1), 0;
    return m;
}

}  // namespace

Eigen::MatrixXcd dense_pauli(const SymplecticVec& v) {
    if (v.size() > 12) throw std::invalid_argument("dense_pauli limited to 12 qubits");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, letter(v.x(k), v.z(k))).eval();
        m.swap(next);
    }
    static const C ip[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return ip[v.phase()] * m;
}

std::size_t basis_index(const std::vector<std::uint8_t>& bits) {
    std::size_t idx = 0;
    for (auto b : bits) idx = (idx << 1) | (b & 1u);
    return idx;
}

bool dense_commute(const SymplecticVec& u, const SymplecticVec& v, double tol) {
    const Eigen::MatrixXcd A = dense_pauli(u), B = dense_pauli(v);
    return (A * B - B * A).cwiseAbs().maxCoeff() < tol;
}

SidReport check_sid_exhaustive(int p) {
    SidReport rep;
    rep.p = p;
    const std::uint64_t mag_states = std::uint64_t{1} << p;
    rep.states = static_cast<std::size_t>(2 * mag_states);
    const std::uint64_t limit = mag_states - 2;
    auto key = [](const SignedRegister& r) { return (r.magnitude << 1) | (r.sign ? 1u : 0u); };

    for (bool ctrl : {false, true})
        for (bool inc : {false, true}) {
            std::set<std::uint64_t> images;
            for (std::uint64_t m = 0; m < mag_states; ++m)
                for (bool s : {false, true}) {
                    const SignedRegister r{p, s, m};
                    ++rep.checked;
                    const auto t = sid_apply_total(r, ctrl, inc);
                    images.insert(key(t));
                    const auto back = sid_apply_total(t, ctrl, !inc);
                    if (!(back == r)) rep.inverse = false;
                    if (!ctrl && !(t == r)) rep.semantics = false;

                    if (m <= limit) {
                        const auto a = sid_apply(r, ctrl, inc);
                        const std::int64_t want = r.value() + (ctrl ? (inc ? 1 : -1) : 0);
                        if (a.value() != want || a.p != p) rep.semantics = false;
                        if (!ctrl && !(a == r)) rep.semantics = false;
                        // total extension agrees away from the negative zero
                        if (!(s && m == 0) && !(t == a)) rep.semantics = false;
                    } else {
                        bool threw = false;
                        try {
                            (void)sid_apply(r, ctrl, inc);
                        } catch (const std::domain_error&) {
                            threw = true;
                        }
                        if (!threw) rep.precondition = false;
                    }
                }
            if (images.size() != rep.states) rep.bijective = false;
        }
    return rep;
}

double fastforward_phase_max_error(int k_max, int samples, std::uint64_t seed, int p_bits) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    double worst = 0;
    for (int s = 0; s < samples; ++s) {
        const double t = dist(rng);
        for (int k = -k_max; k <= k_max; ++k) {
            const C got = fastforward_phase_check(k, t, p_bits);
            const C want = std::polar(1.0, -t * double(k) * double(k));
            worst = std::max(worst, std::abs(got - want));
        }
    }
    return worst;
}

StabilizerReport check_vc_stabilizers(const std::vector<EncodedTerm>& terms) {
    StabilizerReport rep;
    std::vector<const EncodedTerm*> aux, phys;
    for (const auto& t : terms) {
        if (t.origin == Origin::Aux)
            aux.push_back(&t);
        else if (!t.pauli.is_identity())
            phys.push_back(&t);
    }
    rep.aux_terms = aux.size();
    rep.physical_terms = phys.size();
    for (std::size_t i = 0; i < aux.size(); ++i)
        for (std::size_t j = i + 1; j < aux.size(); ++j)
            rep.aux_pairs_anticommuting += static_cast<std::size_t>(symplectic_product(aux[i]->pauli, aux[j]->pauli));
    for (const auto* p : phys)
        for (const auto* a : aux)
            rep.physical_aux_anticommuting += static_cast<std::size_t>(symplectic_product(p->pauli, a->pauli));
    return rep;
}

std::size_t hermitian_defects(const std::vector<EncodedTerm>& terms, double tol) {
    auto key = [](const SymplecticVec& p, const std::vector<BosonAction>& acts, bool dagger) {
        std::ostringstream os;
        os << p.letters() << '|';
        for (const auto& b : acts) {
            LinkAction a = b.action;
            if (dagger && a == LinkAction::Raise)
                a = LinkAction::Lower;
            else if (dagger && a == LinkAction::Lower)
                a = LinkAction::Raise;
            os << b.link << ':' << static_cast<int>(a) << ':' << b.a << '.' << b.b << ';';
        }
        return os.str();
    };
    std::map<std::string, C> w;
    std::map<std::string, std::string> partner;
    for (const auto& t : terms) {
        auto acts = t.boson_actions;
        std::sort(acts.begin(), acts.end(), [](const BosonAction& x, const BosonAction& y) {
            return std::tie(x.link, x.a, x.b) < std::tie(y.link, y.a, y.b);
        });
        const auto k = key(t.pauli, acts, false);
        w[k] += t.weight();
        partner[k] = key(t.pauli, acts, true);
    }
    std::size_t bad = 0;
    for (const auto& [k, c] : w) {
        if (std::abs(c) < tol) continue;
        auto it = w.find(partner.at(k));
        const C other = it == w.end() ? C(0) : it->second;
        if (std::abs(c - std::conj(other)) > tol * std::max(1.0, std::abs(c))) ++bad;
    }
    return bad;
}

}  // namespace lgt::oracle

namespace lgt::oracle {

std::vector<std::uint8_t> majorana_bits(const SymplecticVec& v) {
    const std::size_t n = v.size();
    std::vector<std::uint8_t> m(2 * n, 0);
    std::uint8_t suffix = 0;
    for (std::size_t q = n; q-- > 0;) {
        const std::uint8_t bar = static_cast<std::uint8_t>(v.z(q) ^ suffix);
        const std::uint8_t plain = static_cast<std::uint8_t>(v.x(q) ^ bar);
        m[2 * q] = plain;
        m[2 * q + 1] = bar;
        suffix ^= static_cast<std::uint8_t>(plain ^ bar);
    }
    return m;
}

int majorana_anticommute(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("majorana length mismatch");
    std::size_t na = 0, nb = 0, both = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        na += a[j];
        nb += b[j];
        both += a[j] & b[j];
    }
    return static_cast<int>((na * nb + both) % 2);
}

TranslationReport check_translation_automorphism(const Lattice2D& lat, const std::vector<EncodedTerm>& terms,
                                                 int dk, int dl) {
    if (!lat.periodic()) throw std::invalid_argument("translation check needs a periodic lattice");
    const int N = lat.N();
    const int per_site = 2 * lat.n_colors();  // qubits per site
    auto shift_site = [&](int s) {
        const auto [k, l] = lat.coords(s);
        return lat.site(((k + dk) % N + N) % N, ((l + dl) % N + N) % N);
    };
    using Key = std::pair<std::vector<std::uint8_t>, std::vector<std::int64_t>>;
    auto action_key = [](const std::vector<BosonAction>& acts, auto&& link_map) {
        std::vector<std::int64_t> k;
        for (const auto& b : acts)
            k.push_back(((link_map(b.link) * 3 + static_cast<int>(b.action)) * 4 + b.a) * 4 + b.b);
        std::sort(k.begin(), k.end());
        return k;
    };
    auto same_link = [](std::int64_t l) { return l; };
    auto moved_link = [&](std::int64_t l) { return 2 * static_cast<std::int64_t>(shift_site(static_cast<int>(l / 2))) + l % 2; };

    const CommutativityGraph g = commutativity_graph(terms);
    std::map<Key, std::size_t> vertex_of;
    std::vector<std::vector<std::uint8_t>> maj(g.vertex_terms.size());
    for (std::size_t v = 0; v < g.vertex_terms.size(); ++v) {
        const auto& t = terms[g.vertex_terms[v]];
        maj[v] = majorana_bits(t.pauli);
        vertex_of[{maj[v], action_key(t.boson_actions, same_link)}] = v;
    }

    TranslationReport rep;
    rep.vertices = g.vertex_terms.size();
    rep.edges = g.edge_count();
    std::vector<std::ptrdiff_t> image(rep.vertices, -1);
    for (std::size_t v = 0; v < rep.vertices; ++v) {
        std::vector<std::uint8_t> moved(maj[v].size(), 0);
        for (std::size_t j = 0; j < maj[v].size(); ++j) {
            if (!maj[v][j]) continue;
            const int q = static_cast<int>(j / 2);
            const int s = q / per_site;
            const int q2 = shift_site(s) * per_site + q % per_site;
            moved[2 * static_cast<std::size_t>(q2) + j % 2] = 1;
        }
        const auto it = vertex_of.find({moved, action_key(terms[g.vertex_terms[v]].boson_actions, moved_link)});
        if (it == vertex_of.end())
            ++rep.unmatched_vertices;
        else
            image[v] = static_cast<std::ptrdiff_t>(it->second);
    }
    for (std::size_t v = 0; v < rep.vertices; ++v) {
        if (image[v] < 0) continue;
        std::set<std::size_t> nb(g.adj[static_cast<std::size_t>(image[v])].begin(),
                                 g.adj[static_cast<std::size_t>(image[v])].end());
        for (auto w : g.adj[v]) {
            if (w < v) continue;
            if (image[w] < 0 || !nb.count(static_cast<std::size_t>(image[w]))) ++rep.broken_edges;
        }
    }
    return rep;
}

}  // namespace lgt::oracle
