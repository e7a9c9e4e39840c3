#include "lgt/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace lgt {

std::size_t SymplecticVec::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < size(); ++k) w += (x_[k] | z_[k]) ? 1 : 0;
    return w;
}

std::vector<std::size_t> SymplecticVec::support() const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < size(); ++k)
        if (x_[k] | z_[k]) s.push_back(k);
    return s;
}

std::string SymplecticVec::letters() const {
    static constexpr char L[4] = {'I', 'X', 'Z', 'Y'};
    std::string s(size(), 'I');
    for (std::size_t k = 0; k < size(); ++k) s[k] = L[x_[k] | (z_[k] << 1)];
    return s;
}

SymplecticVec pauli_to_symplectic(std::string_view label) {
    SymplecticVec v(label.size());
    for (std::size_t k = 0; k < label.size(); ++k) {
        switch (label[k]) {
        case 'I': break;
        case 'X': v.set_x(k, true); break;
        case 'Y': v.set_x(k, true); v.set_z(k, true); break;
        case 'Z': v.set_z(k, true); break;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + label[k] + "'");
        }
    }
    return v;
}

std::string symplectic_to_pauli(const SymplecticVec& v) { return v.letters(); }

namespace {
void require_same_size(const SymplecticVec& u, const SymplecticVec& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("symplectic length mismatch: " + std::to_string(u.size()) +
                                    " vs " + std::to_string(v.size()));
}
}  // namespace

int symplectic_product(const SymplecticVec& u, const SymplecticVec& v) {
    require_same_size(u, v);
    int s = 0;
    for (std::size_t k = 0; k < u.size(); ++k)
        s ^= (u.x_bits()[k] & v.z_bits()[k]) ^ (u.z_bits()[k] & v.x_bits()[k]);
    return s;
}

SymplecticVec multiply(const SymplecticVec& u, const SymplecticVec& v) {
    require_same_size(u, v);
    SymplecticVec r(u.size());
    // P(a,b) P(a',b') = i^{ab + a'b' + 2ba' - (a^a')(b^b')} P(a^a', b^b') per qubit
    int e = u.phase() + v.phase();
    for (std::size_t k = 0; k < u.size(); ++k) {
        const int a = u.x(k), b = u.z(k), a2 = v.x(k), b2 = v.z(k);
        const int ax = a ^ a2, bx = b ^ b2;
        e += a * b + a2 * b2 + 2 * b * a2 - ax * bx;
        r.set_x(k, ax);
        r.set_z(k, bx);
    }
    r.set_phase(e);
    return r;
}

SymplecticVec adjoint(const SymplecticVec& v) {
    SymplecticVec r = v;
    r.set_phase(-v.phase());
    return r;
}

std::complex<double> matrix_element_phase(const std::vector<std::uint8_t>& f,
                                          const std::vector<std::uint8_t>& a,
                                          const std::vector<std::uint8_t>& b) {
    if (f.size() != a.size() || a.size() != b.size())
        throw std::invalid_argument("matrix_element_phase: length mismatch");
    int ab = 0, bf = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
        ab += a[k] & b[k];
        bf += b[k] & f[k];
    }
    static const std::complex<double> minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    std::complex<double> r = minus_i_pow[ab % 4];
    return (bf % 2) ? -r : r;
}

std::string to_string(Origin o) {
    switch (o) {
    case Origin::Mass: return "Mass";
    case Origin::GaugeMatterH: return "GaugeMatterH";
    case Origin::GaugeMatterV: return "GaugeMatterV";
    case Origin::Magnetic: return "Magnetic";
    case Origin::Aux: return "Aux";
    }
    return "Mass";
}

Origin parse_origin(std::string_view s) {
    for (Origin o : {Origin::Mass, Origin::GaugeMatterH, Origin::GaugeMatterV, Origin::Magnetic, Origin::Aux})
        if (s == to_string(o)) return o;
    throw std::invalid_argument("unknown term origin '" + std::string(s) + "'");
}

std::complex<double> EncodedTerm::weight() const {
    static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return coeff * ipow[pauli.phase()];
}

Lattice2D::Lattice2D(int N, int n_colors, bool periodic) : N_(N), nc_(n_colors), periodic_(periodic) {
    if (N < 1) throw std::invalid_argument("lattice size must be positive");
    if (n_colors < 1) throw std::invalid_argument("colour count must be positive");
    order_.resize(static_cast<std::size_t>(N) * N);
    inverse_.resize(order_.size());
    for (int l = 0; l < N; ++l)
        for (int k = 0; k < N; ++k) {
            const int s = k + N * l;
            order_[static_cast<std::size_t>(l * N + k)] = s;
            inverse_[static_cast<std::size_t>(s)] = {k, l};
        }
}

namespace {

using cplx = std::complex<double>;

// Linear combination of phase-free Pauli strings.
struct OpSum {
    std::vector<std::pair<cplx, SymplecticVec>> terms;
};

cplx ipow(int p) {
    static const cplx t[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return t[((p % 4) + 4) % 4];
}

SymplecticVec strip_phase(SymplecticVec v) {
    v.set_phase(0);
    return v;
}

OpSum single(cplx c, const SymplecticVec& p) {
    return OpSum{{{c * ipow(p.phase()), strip_phase(p)}}};
}

OpSum operator*(const OpSum& A, const OpSum& B) {
    std::map<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>, std::size_t> index;
    OpSum r;
    for (const auto& [ca, pa] : A.terms)
        for (const auto& [cb, pb] : B.terms) {
            SymplecticVec p = multiply(pa, pb);
            cplx c = ca * cb * ipow(p.phase());
            p.set_phase(0);
            auto key = std::make_pair(p.x_bits(), p.z_bits());
            auto it = index.find(key);
            if (it == index.end()) {
                index.emplace(key, r.terms.size());
                r.terms.emplace_back(c, p);
            } else {
                r.terms[it->second].first += c;
            }
        }
    return r;
}

OpSum operator+(OpSum A, const OpSum& B) {
    A.terms.insert(A.terms.end(), B.terms.begin(), B.terms.end());
    return A;
}

// Jordan-Wigner Majoranas on qubit q of n: Z_{<q} X_q and Z_{<q} Y_q.
SymplecticVec majorana(int n, int q, bool bar) {
    SymplecticVec v(static_cast<std::size_t>(n));
    for (int k = 0; k < q; ++k) v.set_z(static_cast<std::size_t>(k), true);
    v.set_x(static_cast<std::size_t>(q), true);
    if (bar) v.set_z(static_cast<std::size_t>(q), true);
    return v;
}

OpSum creation(int n, int q) {
    return single(0.5, majorana(n, q, false)) + single(cplx(0, -0.5), majorana(n, q, true));
}

OpSum annihilation(int n, int q) {
    return single(0.5, majorana(n, q, false)) + single(cplx(0, 0.5), majorana(n, q, true));
}

void emit(std::vector<EncodedTerm>& out, const OpSum& s, double scale, std::vector<BosonAction> acts,
          Origin origin) {
    constexpr double tiny = 1e-14;
    for (const auto& [c0, p] : s.terms) {
        const cplx c = c0 * scale;
        if (std::abs(c) < tiny) continue;
        EncodedTerm t;
        t.pauli = p;
        t.boson_actions = acts;
        t.origin = origin;
        if (std::abs(c.imag()) < tiny) {
            t.coeff = c.real();
        } else if (std::abs(c.real()) < tiny) {
            t.coeff = c.imag();
            t.pauli.set_phase(1);
        } else {
            throw std::logic_error("encoded term with non-axis complex weight");
        }
        out.push_back(std::move(t));
    }
}

}  // namespace

std::vector<EncodedTerm> build_vc_hamiltonian(const Lattice2D& lat, GaugeGroup group, const Couplings& c,
                                              VcOptions opt) {
    const int N = lat.N();
    if (N % 2 != 0) throw std::invalid_argument("staggered lattice requires even linear size");
    const int nc = group.n_colors();
    if (lat.n_colors() != nc) throw std::invalid_argument("lattice colour count does not match gauge group");
    const int n = lat.qubits();
    const bool per = lat.periodic();
    std::vector<EncodedTerm> out;

    // mass: g_M (-1)^s psi^dag psi -> (-1)^{s+1} (g_M/2) Z, constant dropped
    for (int s = 0; s < lat.sites(); ++s)
        for (int a = 0; a < nc; ++a) {
            EncodedTerm t;
            t.pauli = SymplecticVec(static_cast<std::size_t>(n));
            t.pauli.set_z(static_cast<std::size_t>(lat.physical_qubit(s, a)), true);
            t.coeff = ((s % 2) ? 1.0 : -1.0) * 0.5 * c.g_M;
            t.origin = Origin::Mass;
            out.push_back(std::move(t));
        }

    auto hop = [&](int i, int j, int a, int b) {  // psi^dag_{j,a} psi_{i,b}
        return creation(n, lat.physical_qubit(j, a)) * annihilation(n, lat.physical_qubit(i, b));
    };

    for (int l = 0; l < N; ++l)
        for (int k = 0; k < N; ++k) {
            if (k + 1 >= N && !per) continue;
            const int i = lat.site(k, l), j = lat.site((k + 1) % N, l);
            const auto link = lat.link(i, 0);
            for (int a = 0; a < nc; ++a)
                for (int b = 0; b < nc; ++b) {
                    emit(out, hop(i, j, a, b), c.g_GM, {{link, LinkAction::Raise, a, b}}, Origin::GaugeMatterH);
                    emit(out, hop(j, i, b, a), c.g_GM, {{link, LinkAction::Lower, a, b}}, Origin::GaugeMatterH);
                }
        }

    // auxiliary bilinear i A_low B_up on the vertical edge above (k,l); even
    // columns use the Ybar-type Majorana below and the X-type above, odd columns
    // the reverse, so the two vertical edges at a site never share a Majorana
    auto aux_pair = [&](int k, int l, int color_low, int color_up) {
        const int i = lat.site(k, l), j = lat.site(k, (l + 1) % N);
        const bool even = (k % 2) == 0;
        SymplecticVec lo = majorana(n, lat.aux_qubit(i, color_low), even);
        SymplecticVec up = majorana(n, lat.aux_qubit(j, color_up), !even);
        return single(cplx(0, 1), lo) * single(1.0, up);
    };

    for (int l = 0; l < N; ++l) {
        if (l + 1 >= N && !per) continue;
        const double sgn = (l % 2) ? 1.0 : -1.0;  // (-1)^{l+1}
        for (int k = 0; k < N; ++k) {
            const int i = lat.site(k, l), j = lat.site(k, (l + 1) % N);
            const auto link = lat.link(i, 1);
            for (int a = 0; a < nc; ++a)
                for (int b = 0; b < nc; ++b) {
                    const OpSum P = aux_pair(k, l, b, a);
                    emit(out, hop(i, j, a, b) * P, sgn * c.g_GM, {{link, LinkAction::Raise, a, b}},
                         Origin::GaugeMatterV);
                    emit(out, hop(j, i, b, a) * P, sgn * c.g_GM, {{link, LinkAction::Lower, a, b}},
                         Origin::GaugeMatterV);
                }
        }
    }

    if (opt.include_aux) {
        for (int l = 0; l < N; ++l) {
            if (l + 1 >= N && !per) continue;
            for (int k = 0; k < N; ++k) {
                if (k + 1 >= N && !per) continue;
                for (int a = 0; a < nc; ++a)
                    emit(out, aux_pair(k, l, a, a) * aux_pair((k + 1) % N, l, a, a), 1.0, {}, Origin::Aux);
            }
        }
    }

    if (opt.include_magnetic) {
        for (int l = 0; l < N; ++l) {
            if (l + 1 >= N && !per) continue;
            for (int k = 0; k < N; ++k) {
                if (k + 1 >= N && !per) continue;
                const int s00 = lat.site(k, l), s10 = lat.site((k + 1) % N, l), s01 = lat.site(k, (l + 1) % N);
                const std::int64_t bottom = lat.link(s00, 0), right = lat.link(s10, 1), top = lat.link(s01, 0),
                                   left = lat.link(s00, 1);
                for (auto up : {LinkAction::Raise, LinkAction::Lower}) {
                    const auto dn = up == LinkAction::Raise ? LinkAction::Lower : LinkAction::Raise;
                    EncodedTerm t;
                    t.coeff = c.g_B;
                    t.pauli = SymplecticVec(static_cast<std::size_t>(n));
                    t.boson_actions = {{bottom, up, 0, 0}, {right, up, 0, 0}, {top, dn, 0, 0}, {left, dn, 0, 0}};
                    t.origin = Origin::Magnetic;
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

GsGenerators build_gs_generators(int d, std::int64_t N, GaugeGroup group) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    GsGenerators g;
    g.d = d;
    g.N = N;
    const int extra = group.n_colors() - 1;
    g.qubits_per_vertex = d + extra;
    std::int64_t nv = 1;
    for (int k = 0; k < d; ++k) nv *= N;
    const auto n = static_cast<std::size_t>(nv * g.qubits_per_vertex);

    // c_{v,2r} = Z..Z X_r, c_{v,2r+1} = Z..Z Y_r on the d vertex qubits;
    // c_{v,2mu} belongs to the +mu edge, c_{v,2mu+1} to the -mu edge
    auto cop = [&](std::int64_t v, int j) {
        SymplecticVec s(n);
        const std::size_t base = static_cast<std::size_t>(v * g.qubits_per_vertex);
        const int r = j / 2;
        for (int q = 0; q < r; ++q) s.set_z(base + q, true);
        s.set_x(base + r, true);
        if (j % 2) s.set_z(base + r, true);
        return s;
    };

    for (std::int64_t v = 0; v < nv; ++v) {
        SymplecticVec V = cop(v, 0);
        for (int j = 1; j < 2 * d; ++j) V = multiply(V, cop(v, j));
        V.set_phase(V.phase() - d);  // (-i)^d
        g.vertex.push_back(V);
        for (int c = 0; c < extra; ++c) {
            SymplecticVec Z(n);
            Z.set_z(static_cast<std::size_t>(v * g.qubits_per_vertex + d + c), true);
            g.color_parity.push_back(Z);
        }
    }

    for (std::int64_t v = 0; v < nv; ++v) {
        std::int64_t stride = 1;
        for (int mu = 0; mu < d; ++mu, stride *= N) {
            const std::int64_t x = (v / stride) % N;
            if (x + 1 >= N) continue;
            const std::int64_t w = v + stride;
            g.edges.push_back({v, w, mu, multiply(cop(v, 2 * mu), cop(w, 2 * mu + 1))});
        }
    }
    return g;
}

SymplecticVec reversed(const GsEdge& e) {
    SymplecticVec r = e.op;
    r.set_phase(e.op.phase() + 2);
    return r;
}

std::size_t CommutativityGraph::edge_count() const {
    std::size_t s = 0;
    for (const auto& a : adj) s += a.size();
    return s / 2;
}

CommutativityGraph commutativity_graph(const std::vector<EncodedTerm>& terms) {
    CommutativityGraph g;
    for (std::size_t t = 0; t < terms.size(); ++t)
        if (terms[t].origin != Origin::Magnetic && !terms[t].pauli.is_identity()) g.vertex_terms.push_back(t);
    g.adj.resize(g.vertex_terms.size());
    for (std::size_t i = 0; i < g.vertex_terms.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertex_terms.size(); ++j)
            if (symplectic_product(terms[g.vertex_terms[i]].pauli, terms[g.vertex_terms[j]].pauli)) {
                g.adj[i].push_back(j);
                g.adj[j].push_back(i);
            }
    return g;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, p);
}

double parse_double(std::string_view s) {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad number '" + std::string(s) + "'");
    return v;
}

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    return v;
}

const char* phase_prefix(int p) {
    static const char* t[4] = {"+", "+i", "-", "-i"};
    return t[p];
}

}  // namespace

// link actions: "-" when empty, else comma list of <link><+|-> with optional
// ":a.b" colour suffix
std::string format_term(const EncodedTerm& t) {
    std::string s = format_double(t.coeff);
    s += "  ";
    s += phase_prefix(t.pauli.phase());
    s += t.pauli.letters();
    s += "  ";
    if (t.boson_actions.empty()) s += "-";
    for (std::size_t i = 0; i < t.boson_actions.size(); ++i) {
        const auto& b = t.boson_actions[i];
        if (i) s += ',';
        s += std::to_string(b.link);
        s += b.action == LinkAction::Raise ? '+' : b.action == LinkAction::Lower ? '-' : '0';
        if (b.a || b.b) s += ":" + std::to_string(b.a) + "." + std::to_string(b.b);
    }
    s += "  ";
    s += to_string(t.origin);
    return s;
}

EncodedTerm parse_term(std::string_view line) {
    std::istringstream is{std::string(line)};
    std::string coeff, label, acts, origin, extra;
    if (!(is >> coeff >> label >> acts >> origin) || (is >> extra))
        throw std::invalid_argument("term line must have four fields: '" + std::string(line) + "'");
    EncodedTerm t;
    t.coeff = parse_double(coeff);
    int phase = 0;
    std::size_t pos = 0;
    if (label.size() && (label[0] == '+' || label[0] == '-')) {
        phase = label[0] == '-' ? 2 : 0;
        pos = 1;
        if (pos < label.size() && label[pos] == 'i') {
            phase += 1;
            ++pos;
        }
    }
    t.pauli = pauli_to_symplectic(std::string_view(label).substr(pos));
    t.pauli.set_phase(phase);
    if (acts != "-") {
        std::size_t start = 0;
        while (start <= acts.size()) {
            std::size_t end = acts.find(',', start);
            if (end == std::string::npos) end = acts.size();
            std::string_view tok(acts.data() + start, end - start);
            BosonAction b;
            auto colon = tok.find(':');
            std::string_view head = tok.substr(0, colon);
            if (head.size() < 2) throw std::invalid_argument("bad boson action '" + std::string(tok) + "'");
            const char op = head.back();
            b.action = op == '+' ? LinkAction::Raise : op == '-' ? LinkAction::Lower : LinkAction::None;
            if (op != '+' && op != '-' && op != '0')
                throw std::invalid_argument("bad boson action '" + std::string(tok) + "'");
            b.link = parse_int(head.substr(0, head.size() - 1));
            if (colon != std::string_view::npos) {
                std::string_view col = tok.substr(colon + 1);
                auto dot = col.find('.');
                if (dot == std::string_view::npos) throw std::invalid_argument("bad colour pair");
                b.a = static_cast<int>(parse_int(col.substr(0, dot)));
                b.b = static_cast<int>(parse_int(col.substr(dot + 1)));
            }
            t.boson_actions.push_back(b);
            start = end + 1;
        }
    }
    t.origin = parse_origin(origin);
    return t;
}

void write_terms(std::ostream& out, const std::vector<EncodedTerm>& terms) {
    for (const auto& t : terms) out << format_term(t) << '\n';
}

std::vector<EncodedTerm> read_terms(std::istream& in) {
    std::vector<EncodedTerm> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        terms.push_back(parse_term(line));
    }
    return terms;
}

}  // namespace lgt
