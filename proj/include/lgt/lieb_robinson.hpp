#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgt/model.hpp"

namespace lgt {

using Exponent = std::vector<int>;

// Laurent polynomial over F2 in d translation variables; the set holds the
// monomials with coefficient 1.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(int d_vars) : d_(d_vars) {}

    static LaurentPoly one(int d_vars) { return monomial(Exponent(static_cast<std::size_t>(d_vars), 0)); }
    static LaurentPoly monomial(Exponent e);

    int d_vars() const { return d_; }
    const std::set<Exponent>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void toggle(const Exponent& e);  // add x^e mod 2

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }

    // x -> x^{-1} in every variable
    LaurentPoly dagger() const;

    std::string to_string() const;

private:
    int d_ = 0;
    std::set<Exponent> terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

// A Majorana operator (mode within the unit cell) on a periodic lattice site.
struct MajoranaOp {
    Exponent site;
    int mode = 0;
};

struct MajoranaTerm {
    double h = 0;
    std::vector<MajoranaOp> ops;
};

struct SigmaMatrix {
    int d_vars = 0;
    LaurentMatrix entries;        // rows x cols
    std::vector<double> h;        // coefficient per column
    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return entries.empty() ? 0 : entries.front().size(); }
};

// U(1) staggered fermions in Majorana form on a periodic N^d lattice: one
// mass bilinear (h = g_M/2) per site and four bilinears per nearest-neighbour
// bond (h = g_GM/4 each). Gauge links enter only through their unit norm.
std::vector<MajoranaTerm> u1_majorana_model(int d, int N, const Couplings& c);

// Groups terms into translation classes on the periodic N^d lattice; each class
// becomes one column. Throws if a class does not appear once per site with a
// single coefficient.
SigmaMatrix sigma_from_terms(const std::vector<MajoranaTerm>& terms, int d, int N, int modes_per_site);

enum class LambdaForm { Majorana, Pauli };

// (sigma^dagger Lambda sigma) mod 2, reduced on Laurent coefficients.
LaurentMatrix commutation_matrix(const SigmaMatrix& s, LambdaForm form);

// c_j = sqrt(2 h_j)
std::vector<double> coefficient_vector(const std::vector<double>& h);

// (c c^T) elementwise f^{(k)}: x^l -> exp(i k.l)
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>
coeff_matrix_at(const LaurentMatrix& M, const std::vector<Scalar>& c,
                const std::vector<std::complex<Scalar>>& k) {
    const auto n = static_cast<Eigen::Index>(M.size());
    if (static_cast<Eigen::Index>(c.size()) != n) throw std::invalid_argument("coefficient vector length mismatch");
    Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> H(n, n);
    const std::complex<Scalar> I(0, 1);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& p = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (static_cast<std::size_t>(p.d_vars()) != k.size() && !p.is_zero())
                throw std::invalid_argument("wavevector dimension mismatch");
            std::complex<Scalar> s(0);
            for (const auto& e : p.terms()) {
                std::complex<Scalar> kl(0);
                for (std::size_t v = 0; v < e.size(); ++v) kl += k[v] * Scalar(e[v]);
                s += std::exp(I * kl);
            }
            H(i, j) = c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)] * s;
        }
    return H;
}

// Real form at purely imaginary wavevector k = i kappa: x^l -> exp(-kappa.l).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
coeff_matrix_imag(const LaurentMatrix& M, const std::vector<Scalar>& c, const std::vector<Scalar>& kappa) {
    const auto n = static_cast<Eigen::Index>(M.size());
    if (static_cast<Eigen::Index>(c.size()) != n) throw std::invalid_argument("coefficient vector length mismatch");
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> H(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            Scalar s(0);
            for (const auto& e : M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].terms()) {
                Scalar kl(0);
                for (std::size_t v = 0; v < e.size(); ++v) kl += kappa[v] * Scalar(e[v]);
                s += std::exp(-kl);
            }
            H(i, j) = c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j)] * s;
        }
    return H;
}

// Largest |eigenvalue| via a dense eigendecomposition.
template <typename Derived>
typename Derived::RealScalar spectral_radius_dense(const Eigen::MatrixBase<Derived>& A) {
    using Plain = typename Derived::PlainObject;
    Eigen::EigenSolver<Plain> es(A.eval(), false);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

// Perron root of a nonnegative matrix by shifted power iteration, stopped when
// the Collatz-Wielandt bounds min_i (Av)_i/v_i <= rho <= max_i (Av)_i/v_i meet.
template <typename Derived>
typename Derived::Scalar spectral_radius_power(const Eigen::MatrixBase<Derived>& A,
                                               typename Derived::Scalar rel_tol = 1e-13,
                                               int max_iter = 200000) {
    using Scalar = typename Derived::Scalar;
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    const Eigen::Index n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("spectral radius of non-square matrix");
    if ((A.array() < 0).any()) throw std::invalid_argument("power iteration needs a nonnegative matrix");
    const Scalar shift = A.cwiseAbs().maxCoeff();
    if (shift == Scalar(0)) return Scalar(0);
    // A + shift I is primitive whenever A is irreducible
    Vec v = Vec::Ones(n);
    Scalar lo = 0, hi = 0;
    for (int it = 0; it < max_iter; ++it) {
        Vec w = A * v + shift * v;
        lo = std::numeric_limits<Scalar>::max();
        hi = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const Scalar r = w(i) / v(i);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (hi - lo <= rel_tol * hi) break;
        v = w / w.maxCoeff();
        for (Eigen::Index i = 0; i < n; ++i) v(i) = std::max(v(i), std::numeric_limits<Scalar>::min());
    }
    return Scalar(0.5) * (lo + hi) - shift;
}

struct VelocityOptions {
    double kappa_min = 1e-3;
    double kappa_max = 50.0;
    int grid = 200;
    double tol = 1e-6;
    int max_iter = 500;
    int max_widen = 6;
    std::vector<std::vector<int>> sign_configs;  // empty: all 2^d sign vectors
};

struct SignResult {
    std::vector<int> signs;
    double v = 0;
    double kappa = 0;
    double omega = 0;
};

struct VelocityResult {
    double v_lr = 0;
    double kappa_star = 0;
    double omega = 0;
    bool widened = false;  // minimiser hit the bracket edge and the bracket was widened
    std::vector<SignResult> per_sign;
};

struct VelocityNotConverged : std::runtime_error {
    VelocityNotConverged(const std::string& what, double best) : std::runtime_error(what), best_so_far(best) {}
    double best_so_far;
};

// omega(i kappa s) / kappa minimised over kappa > 0, worst case over signs s.
VelocityResult velocity_bound(const SigmaMatrix& sig, VelocityOptions opt = {},
                              LambdaForm form = LambdaForm::Majorana);

// Dense log-grid scan without refinement; oracle for the optimiser.
double velocity_grid_scan(const SigmaMatrix& sig, int points, double kappa_min, double kappa_max,
                          const std::vector<int>& signs, LambdaForm form = LambdaForm::Majorana);

// Convenience: U(1) d=2 bound from (a, m); rejects non-abelian groups.
VelocityResult u1_velocity(const PhysicalParams& p, VelocityOptions opt = {});

}  // namespace lgt
