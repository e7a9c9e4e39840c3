#include "lgt/circuits.hpp"

#include <cmath>
#include <string>

namespace lgt {

SignedRegister SignedRegister::from_value(int p, std::int64_t v) {
    SignedRegister r;
    r.p = p;
    r.sign = v < 0;
    r.magnitude = static_cast<std::uint64_t>(v < 0 ? -v : v);
    if (r.magnitude >= (std::uint64_t{1} << p)) throw std::out_of_range("value does not fit the register");
    return r;
}

namespace cost {

std::int64_t rotation_bits(double eps) {
    if (!(eps > 0 && eps < 1)) throw std::invalid_argument("rotation precision must lie in (0,1)");
    return static_cast<std::int64_t>(std::ceil(std::log2(1.0 / eps) - 1e-12));
}

}  // namespace cost

SignedRegister sid_apply(const SignedRegister& r, bool ctrl, bool inc) {
    if (r.p < 1 || r.p > 62) throw std::invalid_argument("register width out of range");
    const std::int64_t limit = (std::int64_t{1} << r.p) - 2;
    if (r.magnitude > static_cast<std::uint64_t>(limit))
        throw std::domain_error("SID precondition violated: |value| = " + std::to_string(r.magnitude) +
                                " exceeds 2^p - 2 = " + std::to_string(limit));
    if (!ctrl) return r;
    return SignedRegister::from_value(r.p, r.value() + (inc ? 1 : -1));
}

SignedRegister sid_apply_total(const SignedRegister& r, bool ctrl, bool inc) {
    if (!ctrl) return r;
    if (r.sign && r.magnitude == 0) return r;  // negative zero is a fixed point
    const std::int64_t top = (std::int64_t{1} << r.p) - 1;
    std::int64_t v = r.value() + (inc ? 1 : -1);
    if (v > top) v = -top;
    if (v < -top) v = top;
    return SignedRegister::from_value(r.p, v);
}

std::int64_t qrom_lookup(const std::vector<std::int64_t>& table, std::int64_t index) {
    if (index < 0 || index >= static_cast<std::int64_t>(table.size()))
        throw std::out_of_range("QROM index " + std::to_string(index) + " outside table of size " +
                                std::to_string(table.size()));
    return table[static_cast<std::size_t>(index)];
}

std::vector<std::int64_t> square_table(int lambda) {
    std::vector<std::int64_t> t;
    for (std::int64_t k = -lambda; k <= lambda; ++k) t.push_back(k * k);
    return t;
}

std::vector<std::int64_t> su2_casimir_table(int lambda) {
    std::vector<std::int64_t> t;
    for (std::int64_t twoj = 0; twoj <= 2 * lambda; ++twoj) t.push_back(twoj * (twoj + 2));  // 4 j (j+1)
    return t;
}

std::complex<double> fastforward_phase_check(std::int64_t k, double t, int p_bits) {
    if (p_bits < 1 || p_bits > 62) throw std::invalid_argument("p_bits out of range");
    const std::uint64_t k2 = static_cast<std::uint64_t>(k * k);
    if (k2 >> p_bits) throw std::overflow_error("eigenvalue overflow");
    std::complex<double> phase(1.0, 0.0);
    for (int j = 0; j < p_bits; ++j)
        if ((k2 >> j) & 1) phase *= std::polar(1.0, -t * std::ldexp(1.0, j));
    return phase;
}

}  // namespace lgt
