#include "lgt/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <future>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lgt/lieb_robinson.hpp"

namespace lgt::detail {
extern const char* const trotter_reference_csv;
}

namespace lgt::report {

namespace {

std::vector<std::string> split(const std::string& line, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double to_double(const std::string& s, const char* what) {
    double v = 0;
    const auto* b = s.data();
    const auto* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) throw std::runtime_error(std::string("bad number for ") + what + ": '" + s + "'");
    return v;
}

std::optional<double> to_opt(const std::string& s, const char* what) {
    if (s.empty()) return std::nullopt;
    return to_double(s, what);
}

bool same(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(std::abs(a), std::abs(b)); }

}  // namespace

TrotterReference TrotterReference::parse(std::istream& in) {
    TrotterReference ref;
    std::string line;
    bool header = false;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("version=");
            if (pos != std::string::npos) ref.version_ = line.substr(pos + 8);
            continue;
        }
        if (!header) {
            header = true;
            continue;
        }
        const auto f = split(line);
        if (f.size() != 11)
            throw std::runtime_error("reference line " + std::to_string(lineno) + ": expected 11 fields");
        ReferenceRow r;
        r.table = f[0];
        r.group = parse_group(f[1]);
        r.epsilon = to_double(f[2], "epsilon");
        r.N = static_cast<std::int64_t>(to_double(f[3], "N"));
        r.a = to_double(f[4], "a");
        r.v_lr = to_opt(f[5], "v_LR");
        r.T_trotter = to_double(f[6], "T_Trotter");
        r.T_qubit = to_double(f[7], "T_Qubit");
        r.Q_trotter = to_double(f[8], "Q_Trotter");
        r.Q_qubit = to_double(f[9], "Q_Qubit");
        r.improvement = to_double(f[10], "Improvement");
        ref.rows_.push_back(std::move(r));
    }
    return ref;
}

const TrotterReference& TrotterReference::bundled() {
    static const TrotterReference ref = [] {
        std::istringstream in(detail::trotter_reference_csv);
        return parse(in);
    }();
    return ref;
}

std::vector<ReferenceRow> TrotterReference::rows_for(GaugeGroup g) const {
    std::vector<ReferenceRow> out;
    std::copy_if(rows_.begin(), rows_.end(), std::back_inserter(out), [&](const auto& r) { return r.group == g; });
    return out;
}

const ReferenceRow* TrotterReference::find(GaugeGroup g, double epsilon, std::int64_t N, double a) const {
    for (const auto& r : rows_)
        if (r.group == g && r.N == N && same(r.epsilon, epsilon) && same(r.a, a)) return &r;
    return nullptr;
}

double improvement(double T_trotter, double Q_trotter, double T_qubit, double Q_qubit) {
    if (!(T_trotter > 0 && Q_trotter > 0 && T_qubit > 0 && Q_qubit > 0))
        throw std::invalid_argument("improvement needs four positive counts");
    return (T_trotter / T_qubit) * (Q_trotter / Q_qubit);
}

double round_sig(double x, int digits) {
    if (x == 0 || !std::isfinite(x)) return x;
    const double e = std::floor(std::log10(std::abs(x)));
    const double scale = std::pow(10.0, digits - 1 - e);
    return std::round(x * scale) / scale;
}

std::string format_sig(double x, int digits) {
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    std::string s(buf);
    const auto epos = s.find('e');
    if (epos == std::string::npos) return s;
    const int ex = std::stoi(s.substr(epos + 1));
    return s.substr(0, epos) + "e" + std::to_string(ex);
}

std::string format_full(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, p);
}

std::string code_version() {
#ifdef LGT_VERSION
    return LGT_VERSION;
#else
    return "unknown";
#endif
}

SweepConfig table_sweep(int table) {
    SweepConfig c;
    c.epsilons = {1e-3, 1e-1};
    c.as = {1.0, 0.1, 0.01};
    switch (table) {
    case 1:
        c.group = GaugeGroup(GroupKind::U1);
        c.d = 2;
        c.Ns = {100, 1000};
        c.options.model = cost::EncodingModel::LCU;
        c.options.hhkl = true;
        break;
    case 2:
    case 3:
        c.group = GaugeGroup(table == 2 ? GroupKind::SU2 : GroupKind::SU3);
        c.d = 3;
        c.Ns = {1000, 100};
        c.options.model = cost::EncodingModel::Sparse;
        c.options.hhkl = false;
        break;
    default: throw std::invalid_argument("table must be 1, 2 or 3");
    }
    return c;
}

std::vector<ComparisonRow> emit_table(const SweepConfig& cfg, const TrotterReference& ref) {
    PhysicalParams base;
    base.group = cfg.group;
    base.d = cfg.d;
    base.lambda = cfg.lambda;
    base.m = cfg.m;
    base.g = cfg.g;
    base.time = cfg.time;

    // velocities depend on a only; one task per distinct spacing
    std::map<double, double> v_by_a;
    if (cfg.options.hhkl) {
        std::map<double, std::future<double>> jobs;
        for (double a : cfg.as) {
            if (jobs.count(a)) continue;
            PhysicalParams p = base;
            p.a = a;
            jobs.emplace(a, std::async(std::launch::async, [p] { return u1_velocity(p).v_lr; }));
        }
        for (auto& [a, f] : jobs) v_by_a[a] = f.get();
    }

    std::vector<ComparisonRow> rows;
    for (double eps : cfg.epsilons)
        for (auto N : cfg.Ns)
            for (double a : cfg.as) {
                PhysicalParams p = base;
                p.epsilon = eps;
                p.N = N;
                p.a = a;
                cost::TotalOptions opt = cfg.options;
                ComparisonRow row;
                row.key = {cfg.group, eps, N, a};
                if (opt.hhkl) {
                    opt.v_lr = v_by_a.at(a);
                    row.v_lr = opt.v_lr;
                }
                const auto rep = cost::assemble_total(p, opt);
                row.T_qubit = rep.total;
                row.Q_qubit = rep.qubits_total;
                if (const auto* r = ref.find(cfg.group, eps, N, a)) {
                    row.T_trotter = r->T_trotter;
                    row.Q_trotter = r->Q_trotter;
                    row.improvement = improvement(r->T_trotter, r->Q_trotter, row.T_qubit, row.Q_qubit);
                    row.citation = r->table;
                }
                rows.push_back(std::move(row));
            }
    return rows;
}

std::string csv_header(bool with_v_lr) {
    return with_v_lr ? "epsilon,N,a,v_LR,T_Trotter,T_Qubit.,Q_Trotter,Q_Qubit.,Improvement"
                     : "epsilon,N,a,T_Trotter,T_Qubit.,Q_Trotter,Q_Qubit.,Improvement";
}

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows, bool with_v_lr, bool two_sig) {
    auto num = [&](double x) { return two_sig ? format_sig(x, 2) : format_full(x); };
    auto opt = [&](const std::optional<double>& x) { return x ? num(*x) : std::string(); };
    out << csv_header(with_v_lr) << '\n';
    for (const auto& r : rows) {
        out << format_full(r.key.epsilon) << ',' << r.key.N << ',' << format_full(r.key.a) << ',';
        if (with_v_lr) out << opt(r.v_lr) << ',';
        out << opt(r.T_trotter) << ',' << num(r.T_qubit) << ',' << opt(r.Q_trotter) << ',' << num(r.Q_qubit) << ','
            << opt(r.improvement) << '\n';
    }
}

std::vector<ComparisonRow> read_csv(std::istream& in, GaugeGroup group) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool with_v;
    if (line == csv_header(true))
        with_v = true;
    else if (line == csv_header(false))
        with_v = false;
    else
        throw std::runtime_error("unrecognised CSV header: " + line);
    std::vector<ComparisonRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line);
        const std::size_t want = with_v ? 9 : 8;
        if (f.size() != want) throw std::runtime_error("CSV row has " + std::to_string(f.size()) + " fields");
        std::size_t i = 0;
        ComparisonRow r;
        r.key.group = group;
        r.key.epsilon = to_double(f[i++], "epsilon");
        r.key.N = static_cast<std::int64_t>(to_double(f[i++], "N"));
        r.key.a = to_double(f[i++], "a");
        if (with_v) r.v_lr = to_opt(f[i++], "v_LR");
        r.T_trotter = to_opt(f[i++], "T_Trotter");
        r.T_qubit = to_double(f[i++], "T_Qubit.");
        r.Q_trotter = to_opt(f[i++], "Q_Trotter");
        r.Q_qubit = to_double(f[i++], "Q_Qubit.");
        r.improvement = to_opt(f[i++], "Improvement");
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_json(std::ostream& out, const std::vector<ComparisonRow>& rows, const SweepConfig& cfg,
                const TrotterReference& ref) {
    using nlohmann::json;
    json meta;
    meta["code_version"] = code_version();
    meta["reference_data_version"] = ref.version();
    meta["group"] = to_string(cfg.group);
    meta["encoding"] = cost::to_string(cfg.options.model);
    meta["hhkl"] = cfg.options.hhkl;
    meta["d"] = cfg.d;
    meta["lambda"] = cfg.lambda;
    meta["time"] = cfg.time;
    meta["m"] = cfg.m;
    meta["g"] = cfg.g;
    meta["conventions"] = {
        {"summary", cost::describe(cfg.options.conv)},
        {"fast_forward", cost::resolve(cfg.options.conv.ff_model, cfg.group) == cost::FastForwardModel::Lookup
                             ? "per-link electric evolution as one table lookup (4L-4; SU(3): 2L^2-4)"
                             : "full per-link formula, " + cost::to_string(cfg.options.conv.ff_method) +
                                   ", rotations included"},
        {"log_lambda", cfg.options.conv.ceil_log_lambda ? "ceil(log2 Lambda)" : "real log2 Lambda"},
        {"register_logs", "ceil(log2 x) for register widths, rotation bits and log M"},
        {"dyson_order", "natural log"},
        {"su_alpha", cfg.options.conv.su_alpha_color_weighted ? "colour weighted" : "unweighted, as for U(1)"},
    };
    meta["assumptions"] = json::array({"m = g = 10 for every table"});
    json jr = json::array();
    auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
    for (const auto& r : rows) {
        json o;
        o["epsilon"] = r.key.epsilon;
        o["N"] = r.key.N;
        o["a"] = r.key.a;
        if (cfg.group.is_abelian()) o["v_LR"] = opt(r.v_lr);
        o["T_Trotter"] = opt(r.T_trotter);
        o["T_Qubit"] = r.T_qubit;
        o["Q_Trotter"] = opt(r.Q_trotter);
        o["Q_Qubit"] = r.Q_qubit;
        if (r.improvement) o["Improvement"] = *r.improvement;
        o["citation"] = r.citation.empty() ? json(nullptr) : json(r.citation);
        jr.push_back(std::move(o));
    }
    out << json{{"meta", meta}, {"rows", jr}}.dump(2) << '\n';
}

Figure parse_figure(std::string_view s) {
    if (s == "fastforward-crossover") return Figure::FastForwardCrossover;
    if (s == "block-encoding-totals") return Figure::BlockEncodingTotals;
    if (s == "final-comparison") return Figure::FinalComparison;
    if (s == "su-block-encodings") return Figure::SUBlockEncodings;
    throw std::invalid_argument("unknown figure '" + std::string(s) +
                                "' (fastforward-crossover|block-encoding-totals|final-comparison|su-block-encodings)");
}

std::string to_string(Figure f) {
    switch (f) {
    case Figure::FastForwardCrossover: return "fastforward-crossover";
    case Figure::BlockEncodingTotals: return "block-encoding-totals";
    case Figure::FinalComparison: return "final-comparison";
    case Figure::SUBlockEncodings: return "su-block-encodings";
    }
    return "";
}

std::optional<int> fastforward_crossover(GaugeGroup g, double eps, int lambda_max) {
    using cost::FastForwardMethod;
    std::optional<int> start;
    for (int L = 1; L <= lambda_max; ++L) {
        const double q = cost::t_fastforward(g, L, eps, FastForwardMethod::QROM, 1, 1).per_link;
        const double ar = cost::t_fastforward(g, L, eps, FastForwardMethod::Arithmetic, 1, 1).per_link;
        if (ar < q) {
            if (!start) start = L;
        } else {
            start.reset();
        }
    }
    return start;
}

std::vector<SeriesPoint> emit_figure_data(Figure f) {
    std::vector<SeriesPoint> out;
    switch (f) {
    case Figure::FastForwardCrossover: {
        const GaugeGroup u1(GroupKind::U1);
        for (double eps : {1e-1, 1e-8}) {
            const std::string tag = "eps=" + format_sig(eps, 1);
            for (int L = 1; L <= 100; ++L) {
                const double q = cost::t_fastforward(u1, L, eps, cost::FastForwardMethod::QROM, 1, 1).per_link;
                const double ar = cost::t_fastforward(u1, L, eps, cost::FastForwardMethod::Arithmetic, 1, 1).per_link;
                out.push_back({double(L), q, "u1/qrom/" + tag});
                out.push_back({double(L), ar, "u1/arithmetic/" + tag});
                out.push_back({double(L), ar / q, "u1/arithmetic_over_qrom/" + tag});
            }
        }
        break;
    }
    case Figure::BlockEncodingTotals: {
        const GaugeGroup u1(GroupKind::U1);
        const int lambda = 5, d = 2;
        const double eps = 1e-3;
        for (std::int64_t nb = 2; nb <= 64; nb *= 2) {
            const double ts = cost::t_block(cost::EncodingModel::Sparse, u1, nb, d, lambda, eps).total();
            const double tl = cost::t_block(cost::EncodingModel::LCU, u1, nb, d, lambda, eps).total();
            const double qs = cost::block_qubits(cost::EncodingModel::Sparse, u1, nb, d, lambda);
            const double ql = cost::block_qubits(cost::EncodingModel::LCU, u1, nb, d, lambda);
            const double x = double(nb);
            out.push_back({x, ts, "sparse/T"});
            out.push_back({x, tl, "lcu/T"});
            out.push_back({x, ts / tl, "sparse_over_lcu/T"});
            out.push_back({x, qs, "sparse/Q"});
            out.push_back({x, ql, "lcu/Q"});
        }
        break;
    }
    case Figure::FinalComparison: {
        for (int t = 1; t <= 3; ++t) {
            const auto rows = emit_table(table_sweep(t));
            const std::string tag = "table" + std::to_string(t) + "/";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double x = double(i);
                const auto& r = rows[i];
                out.push_back({x, r.T_qubit, tag + "T_Qubit"});
                out.push_back({x, r.Q_qubit, tag + "Q_Qubit"});
                if (r.T_trotter) out.push_back({x, *r.T_trotter, tag + "T_Trotter"});
                if (r.Q_trotter) out.push_back({x, *r.Q_trotter, tag + "Q_Trotter"});
                if (r.improvement) out.push_back({x, *r.improvement, tag + "Improvement"});
            }
        }
        break;
    }
    case Figure::SUBlockEncodings: {
        const int d = 3, lambda = 10;
        const double eps = 1e-3;
        for (GroupKind k : {GroupKind::SU2, GroupKind::SU3}) {
            const GaugeGroup g(k);
            const std::string tag = to_string(g) + "/";
            for (std::int64_t N : {10, 20, 50, 100, 200, 500, 1000}) {
                const double blk = cost::t_block(cost::EncodingModel::Sparse, g, N, d, lambda, eps).total();
                const double ff = cost::t_fastforward_model(g, lambda, eps, d, N, {}).per_block;
                const double x = double(N);
                out.push_back({x, blk, tag + "block_encoding"});
                out.push_back({x, ff, tag + "electric"});
                out.push_back({x, blk / ff, tag + "block_over_electric"});
            }
        }
        break;
    }
    }
    return out;
}

}  // namespace lgt::report
