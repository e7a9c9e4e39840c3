#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgt {

enum class GroupKind { U1, SU2, SU3 };

class GaugeGroup {
public:
    constexpr GaugeGroup() = default;
    constexpr explicit GaugeGroup(GroupKind k) : kind_(k) {}

    constexpr GroupKind kind() const { return kind_; }
    constexpr int n_colors() const {
        switch (kind_) {
        case GroupKind::U1: return 1;
        case GroupKind::SU2: return 2;
        case GroupKind::SU3: return 3;
        }
        return 1;
    }
    // number of colour-indexed link operators U_ab
    constexpr int color_ops() const { return n_colors() * n_colors(); }
    constexpr bool is_abelian() const { return kind_ == GroupKind::U1; }

    friend constexpr bool operator==(GaugeGroup a, GaugeGroup b) { return a.kind_ == b.kind_; }

private:
    GroupKind kind_ = GroupKind::U1;
};

std::string to_string(GaugeGroup g);
GaugeGroup parse_group(std::string_view s);

struct PhysicalParams {
    double a = 1.0;
    double g = 10.0;
    double m = 10.0;
    int d = 2;
    std::int64_t N = 100;
    int lambda = 10;
    int lambda0 = 0;
    double time = 10.0;
    double epsilon = 1e-3;
    GaugeGroup group{};
};

// Throws std::invalid_argument naming the offending field.
void validate(const PhysicalParams& p);

struct Couplings {
    double g_M = 0;
    double g_GM = 0;
    double g_E = 0;
    double g_B = 0;
};

Couplings derive_couplings(const PhysicalParams& p);

enum class TruncationBound { Improved, Loose };

// Lambda0 + ceil(chi T log2(max(2, N max(1,Lambda0) chi T / eps))), chi = c (4|g_B| + 2|g_GM|).
// Loose mode: Lambda0 + ceil((chi T + 1) log2(max(2, N/eps))^2).
std::int64_t truncation_growth(const PhysicalParams& p, int c_count,
                               TruncationBound mode = TruncationBound::Improved);

std::int64_t plaquette_count(int d, std::int64_t N);

// Brute-force 4-cycle count on the hypercubic grid graph with N+1 vertices
// per axis (open) or on the periodic N^d torus. The open count equals
// plaquette_count.
std::int64_t enumerate_plaquettes(int d, std::int64_t N, bool periodic = false);

// key = value lines; '#' starts a comment. Unknown keys throw.
PhysicalParams parse_config(std::istream& in, PhysicalParams base = {});
PhysicalParams load_config(const std::string& path, PhysicalParams base = {});

}  // namespace lgt
