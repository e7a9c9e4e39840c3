#include "lgt/lieb_robinson.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace lgt {

LaurentPoly LaurentPoly::monomial(Exponent e) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.terms_.insert(std::move(e));
    return p;
}

void LaurentPoly::toggle(const Exponent& e) {
    if (static_cast<int>(e.size()) != d_) throw std::invalid_argument("exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_.insert(e);
    else terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && d_ == 0) d_ = o.d_;
    for (const auto& e : o.terms_) toggle(e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(std::max(a.d_, b.d_));
    for (const auto& ea : a.terms_)
        for (const auto& eb : b.terms_) {
            if (ea.size() != eb.size()) throw std::invalid_argument("exponent length mismatch");
            Exponent e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.toggle(e);
        }
    return r;
}

LaurentPoly LaurentPoly::dagger() const {
    LaurentPoly r(d_);
    for (auto e : terms_) {
        for (auto& x : e) x = -x;
        r.terms_.insert(std::move(e));
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names = "xyzw";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any = false;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (any) os << '*';
            os << (k < 4 ? names[k] : 'v');
            if (e[k] != 1) os << '^' << e[k];
            any = true;
        }
        if (!any) os << '1';
    }
    return os.str();
}

std::vector<MajoranaTerm> u1_majorana_model(int d, int N, const Couplings& c) {
    if (d < 1 || N < 3) throw std::invalid_argument("majorana model needs d >= 1 and N >= 3");
    std::int64_t nsites = 1;
    for (int k = 0; k < d; ++k) nsites *= N;
    std::vector<MajoranaTerm> out;
    auto coords = [&](std::int64_t s) {
        Exponent x(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k, s /= N) x[static_cast<std::size_t>(k)] = static_cast<int>(s % N);
        return x;
    };
    // column order: mass, then per direction (gg, g gbar, gbar g, gbar gbar)
    for (std::int64_t s = 0; s < nsites; ++s) out.push_back({0.5 * c.g_M, {{coords(s), 0}, {coords(s), 1}}});
    for (int mu = 0; mu < d; ++mu)
        for (int m1 = 0; m1 < 2; ++m1)
            for (int m2 = 0; m2 < 2; ++m2)
                for (std::int64_t s = 0; s < nsites; ++s) {
                    Exponent x = coords(s), y = x;
                    y[static_cast<std::size_t>(mu)] = (y[static_cast<std::size_t>(mu)] + 1) % N;
                    // (m1, m2) = (0,0) g g, (0,1) g gbar, (1,0) gbar g, (1,1) gbar gbar
                    out.push_back({0.25 * c.g_GM, {{x, m1}, {y, m2}}});
                }
    return out;
}

namespace {

int min_image(int dx, int N) {
    dx %= N;
    if (dx < 0) dx += N;
    if (2 * dx > N) dx -= N;
    return dx;
}

using Shape = std::vector<std::pair<int, Exponent>>;  // (mode, offset) sorted

}  // namespace

SigmaMatrix sigma_from_terms(const std::vector<MajoranaTerm>& terms, int d, int N, int modes_per_site) {
    if (N < 3) throw std::invalid_argument("translation classes need N >= 3");
    std::int64_t nsites = 1;
    for (int k = 0; k < d; ++k) nsites *= N;

    struct Class {
        Shape shape;
        double h;
        std::set<Exponent> anchors;
    };
    std::vector<Class> classes;
    std::map<Shape, std::size_t> index;

    for (const auto& t : terms) {
        if (t.ops.empty()) throw std::invalid_argument("empty Majorana term");
        Shape best;
        Exponent best_anchor;
        for (const auto& anchor : t.ops) {
            if (static_cast<int>(anchor.site.size()) != d) throw std::invalid_argument("site dimension mismatch");
            Shape sh;
            for (const auto& op : t.ops) {
                if (op.mode < 0 || op.mode >= modes_per_site) throw std::invalid_argument("mode out of range");
                Exponent off(static_cast<std::size_t>(d));
                for (int k = 0; k < d; ++k)
                    off[static_cast<std::size_t>(k)] =
                        min_image(op.site[static_cast<std::size_t>(k)] - anchor.site[static_cast<std::size_t>(k)], N);
                sh.emplace_back(op.mode, off);
            }
            std::sort(sh.begin(), sh.end());
            if (best.empty() || sh > best) {  // largest shape keeps offsets nonnegative
                best = sh;
                best_anchor = anchor.site;
            }
        }
        auto it = index.find(best);
        if (it == index.end()) {
            index.emplace(best, classes.size());
            classes.push_back({best, t.h, {best_anchor}});
        } else {
            auto& cl = classes[it->second];
            if (cl.h != t.h) throw std::invalid_argument("not translation invariant: coefficient varies within a class");
            if (!cl.anchors.insert(best_anchor).second)
                throw std::invalid_argument("not translation invariant: duplicate term");
        }
    }

    SigmaMatrix s;
    s.d_vars = d;
    s.entries.assign(static_cast<std::size_t>(modes_per_site),
                     std::vector<LaurentPoly>(classes.size(), LaurentPoly(d)));
    for (std::size_t j = 0; j < classes.size(); ++j) {
        if (static_cast<std::int64_t>(classes[j].anchors.size()) != nsites)
            throw std::invalid_argument("not translation invariant: term class missing on some sites");
        for (const auto& [mode, off] : classes[j].shape) s.entries[static_cast<std::size_t>(mode)][j].toggle(off);
        s.h.push_back(classes[j].h);
    }
    return s;
}

LaurentMatrix commutation_matrix(const SigmaMatrix& s, LambdaForm form) {
    const std::size_t n = s.cols(), rows = s.rows();
    if (form == LambdaForm::Pauli && rows % 2) throw std::invalid_argument("Pauli form needs an even row count");
    LaurentMatrix M(n, std::vector<LaurentPoly>(n, LaurentPoly(s.d_vars)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly acc(s.d_vars);
            if (form == LambdaForm::Majorana) {
                for (std::size_t r = 0; r < rows; ++r) acc += s.entries[r][i].dagger() * s.entries[r][j];
            } else {
                const std::size_t h = rows / 2;  // x block then z block
                for (std::size_t r = 0; r < h; ++r) {
                    acc += s.entries[r][i].dagger() * s.entries[r + h][j];
                    acc += s.entries[r + h][i].dagger() * s.entries[r][j];
                }
            }
            M[i][j] = std::move(acc);
        }
    return M;
}

std::vector<double> coefficient_vector(const std::vector<double>& h) {
    std::vector<double> c;
    c.reserve(h.size());
    for (double x : h) {
        if (x < 0) throw std::invalid_argument("term coefficients must be nonnegative magnitudes");
        c.push_back(std::sqrt(2.0 * x));
    }
    return c;
}

namespace {

std::vector<std::vector<int>> all_signs(int d) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        std::vector<int> s(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) s[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -1 : 1;
        out.push_back(s);
    }
    return out;
}

struct Objective {
    const LaurentMatrix& M;
    const std::vector<double>& c;
    const std::vector<int>& signs;
    double omega(double kappa) const {
        std::vector<double> kv(signs.size());
        // x^l -> exp(-kappa s.l); the worst case over s covers both propagation senses
        for (std::size_t k = 0; k < signs.size(); ++k) kv[k] = -kappa * signs[k];
        return spectral_radius_dense(coeff_matrix_imag(M, c, kv));
    }
    double operator()(double kappa) const { return omega(kappa) / kappa; }
};

SignResult minimise(const Objective& f, const VelocityOptions& opt, bool& widened) {
    double lo = opt.kappa_min, hi = opt.kappa_max;
    for (int attempt = 0;; ++attempt) {
        const int G = std::max(opt.grid, 3);
        const double llo = std::log(lo), lhi = std::log(hi);
        std::vector<double> ks(static_cast<std::size_t>(G)), vs(ks.size());
        for (int i = 0; i < G; ++i) {
            ks[static_cast<std::size_t>(i)] = std::exp(llo + (lhi - llo) * i / (G - 1));
            vs[static_cast<std::size_t>(i)] = f(ks[static_cast<std::size_t>(i)]);
        }
        const auto ib = static_cast<int>(std::min_element(vs.begin(), vs.end()) - vs.begin());
        if ((ib == 0 || ib == G - 1) && attempt < opt.max_widen) {
            widened = true;
            if (ib == 0) lo /= 10;
            else hi *= 10;
            continue;
        }
        // golden section in log kappa on the neighbouring grid cells
        double a = std::log(ks[static_cast<std::size_t>(std::max(ib - 1, 0))]);
        double b = std::log(ks[static_cast<std::size_t>(std::min(ib + 1, G - 1))]);
        const double gr = (std::sqrt(5.0) - 1) / 2;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = f(std::exp(x1)), f2 = f(std::exp(x2));
        double best_k = ks[static_cast<std::size_t>(ib)], best_v = vs[static_cast<std::size_t>(ib)];
        int it = 0;
        while (std::exp(b) - std::exp(a) > opt.tol * std::exp(0.5 * (a + b))) {
            if (++it > opt.max_iter)
                throw VelocityNotConverged("velocity minimisation did not converge", best_v);
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = f(std::exp(x1));
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = f(std::exp(x2));
            }
        }
        const double km = std::exp(0.5 * (a + b));
        const double vm = f(km);
        if (vm < best_v) {
            best_v = vm;
            best_k = km;
        }
        return {f.signs, best_v, best_k, f.omega(best_k)};
    }
}

}  // namespace

VelocityResult velocity_bound(const SigmaMatrix& sig, VelocityOptions opt, LambdaForm form) {
    if (!(opt.kappa_min > 0 && opt.kappa_max > opt.kappa_min)) throw std::invalid_argument("bad kappa bracket");
    const LaurentMatrix M = commutation_matrix(sig, form);
    const std::vector<double> c = coefficient_vector(sig.h);
    auto signs = opt.sign_configs.empty() ? all_signs(sig.d_vars) : opt.sign_configs;
    VelocityResult r;
    r.v_lr = -std::numeric_limits<double>::infinity();
    for (const auto& s : signs) {
        if (static_cast<int>(s.size()) != sig.d_vars) throw std::invalid_argument("sign vector length mismatch");
        Objective f{M, c, s};
        SignResult sr = minimise(f, opt, r.widened);
        r.per_sign.push_back(sr);
        if (sr.v > r.v_lr) {
            r.v_lr = sr.v;
            r.kappa_star = sr.kappa;
            r.omega = sr.omega;
        }
    }
    return r;
}

double velocity_grid_scan(const SigmaMatrix& sig, int points, double kappa_min, double kappa_max,
                          const std::vector<int>& signs, LambdaForm form) {
    const LaurentMatrix M = commutation_matrix(sig, form);
    const std::vector<double> c = coefficient_vector(sig.h);
    Objective f{M, c, signs};
    double best = std::numeric_limits<double>::infinity();
    const double llo = std::log(kappa_min), lhi = std::log(kappa_max);
    for (int i = 0; i < points; ++i) best = std::min(best, f(std::exp(llo + (lhi - llo) * i / (points - 1))));
    return best;
}

VelocityResult u1_velocity(const PhysicalParams& p, VelocityOptions opt) {
    if (!p.group.is_abelian())
        throw std::invalid_argument("Lieb-Robinson bound is only available for U(1); SU(N) blocks use N_B = N");
    if (p.d != 2) throw std::invalid_argument("Lieb-Robinson bound is implemented for d = 2");
    const Couplings c = derive_couplings(p);
    const SigmaMatrix s = sigma_from_terms(u1_majorana_model(p.d, 4, c), p.d, 4, 2);
    return velocity_bound(s, opt);
}

}  // namespace lgt
