#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgt/cost.hpp"
#include "lgt/model.hpp"

namespace lgt::report {

// One printed row of the Trotter comparison tables. Every field is the
// printed (2 significant figure) value.
struct ReferenceRow {
    std::string table;  // citation, e.g. "Table 1"
    GaugeGroup group;
    double epsilon = 0;
    std::int64_t N = 0;
    double a = 0;
    std::optional<double> v_lr;
    double T_trotter = 0, T_qubit = 0, Q_trotter = 0, Q_qubit = 0, improvement = 0;
};

class TrotterReference {
public:
    static const TrotterReference& bundled();
    static TrotterReference parse(std::istream& in);

    const std::string& version() const { return version_; }
    const std::vector<ReferenceRow>& rows() const { return rows_; }
    std::vector<ReferenceRow> rows_for(GaugeGroup g) const;
    const ReferenceRow* find(GaugeGroup g, double epsilon, std::int64_t N, double a) const;

private:
    std::string version_;
    std::vector<ReferenceRow> rows_;
};

// (T_t Q_t) / (T_q Q_q); throws std::invalid_argument unless all four are > 0.
double improvement(double T_trotter, double Q_trotter, double T_qubit, double Q_qubit);

double round_sig(double x, int digits);
// d.de<exp> with `digits` significant figures, e.g. 4.4e3
std::string format_sig(double x, int digits = 2);
// shortest text that parses back to the same double
std::string format_full(double x);

struct RowKey {
    GaugeGroup group;
    double epsilon = 0;
    std::int64_t N = 0;
    double a = 0;
};

struct ComparisonRow {
    RowKey key;
    std::optional<double> v_lr;
    double T_qubit = 0, Q_qubit = 0;
    std::optional<double> T_trotter, Q_trotter, improvement;
    std::string citation;  // empty when no reference row exists
};

struct SweepConfig {
    GaugeGroup group;
    int d = 2;
    int lambda = 10;
    double m = 10, g = 10, time = 10;
    std::vector<double> epsilons;
    std::vector<std::int64_t> Ns;
    std::vector<double> as;
    cost::TotalOptions options;  // v_lr filled per row when hhkl
};

// The sweeps behind the three comparison tables (1: U(1), 2: SU(2), 3: SU(3)).
SweepConfig table_sweep(int table);

// One row per (epsilon, N, a), epsilon outermost.
std::vector<ComparisonRow> emit_table(const SweepConfig& cfg,
                                      const TrotterReference& ref = TrotterReference::bundled());

std::string csv_header(bool with_v_lr);
void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows, bool with_v_lr, bool two_sig = false);
// Reads what write_csv emits; group is not stored in the file.
std::vector<ComparisonRow> read_csv(std::istream& in, GaugeGroup group);

void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows, const SweepConfig& cfg,
                const TrotterReference& ref = TrotterReference::bundled());

std::string code_version();

enum class Figure { FastForwardCrossover, BlockEncodingTotals, FinalComparison, SUBlockEncodings };
Figure parse_figure(std::string_view s);
std::string to_string(Figure f);

struct SeriesPoint {
    double x = 0, y = 0;
    std::string label;
};

std::vector<SeriesPoint> emit_figure_data(Figure f);

// Smallest Lambda in [1, lambda_max] from which arithmetic stays strictly
// cheaper than QROM up to lambda_max; nullopt if it never becomes cheaper.
std::optional<int> fastforward_crossover(GaugeGroup g, double eps, int lambda_max);

}  // namespace lgt::report
