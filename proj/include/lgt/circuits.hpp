#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lgt {

// Sign-magnitude register: value = (-1)^sign * magnitude, magnitude < 2^p.
struct SignedRegister {
    int p = 1;
    bool sign = false;
    std::uint64_t magnitude = 0;

    std::int64_t value() const { return sign ? -static_cast<std::int64_t>(magnitude) : static_cast<std::int64_t>(magnitude); }
    static SignedRegister from_value(int p, std::int64_t v);
    friend bool operator==(const SignedRegister&, const SignedRegister&) = default;
};

namespace cost {

inline constexpr std::int64_t t_per_toffoli = 4;

// ceil(log2(1/eps)) for eps in (0,1)
std::int64_t rotation_bits(double eps);
inline std::int64_t t_per_rotation(double eps) { return 4 * rotation_bits(eps); }
inline std::int64_t t_qrom(std::int64_t L) { return L < 1 ? throw std::invalid_argument("QROM needs L >= 1") : 4 * L - 4; }
inline std::int64_t t_unary(std::int64_t L) { return L < 1 ? throw std::invalid_argument("unary iteration needs L >= 1") : 4 * L - 4; }
inline std::int64_t t_karatsuba(std::int64_t p) { return 4 * (4 * p * p - 3 * p); }
inline std::int64_t t_square(std::int64_t w) { return 4 * w * (w - 1); }

}  // namespace cost

// Controlled signed increment/decrement. Throws std::domain_error when
// |value| > 2^p - 2.
SignedRegister sid_apply(const SignedRegister& r, bool ctrl, bool inc);

// Total extension that also maps the overflow states, making the action a
// permutation of all 2^{p+1} sign-magnitude states. Not part of the
// guaranteed contract: +-(2^p - 1) wrap to the opposite-sign extreme and
// the negative zero is a fixed point.
SignedRegister sid_apply_total(const SignedRegister& r, bool ctrl, bool inc);

inline std::int64_t sid_toffoli_count(std::int64_t width) {
    if (width < 1) throw std::invalid_argument("SID width must be >= 1");
    return 2 * width + 1;
}

std::int64_t qrom_lookup(const std::vector<std::int64_t>& table, std::int64_t index);

// k^2 for k in [-lambda, lambda], indexed by k + lambda
std::vector<std::int64_t> square_table(int lambda);
// 4 j (j+1) for j = 0, 1/2, ..., lambda (index 2j): Casimir scaled by 4
std::vector<std::int64_t> su2_casimir_table(int lambda);

// Bitwise phase accumulation exp(-i t 2^j) over the set bits of k^2 in a
// p_bits-wide register. Throws std::overflow_error("eigenvalue overflow").
std::complex<double> fastforward_phase_check(std::int64_t k, double t, int p_bits);

}  // namespace lgt
