#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lgt/circuits.hpp"
#include "lgt/cost.hpp"
#include "lgt/lieb_robinson.hpp"
#include "lgt/model.hpp"
#include "lgt/oracles.hpp"
#include "lgt/report.hpp"

using nlohmann::json;

namespace {

struct ParamFlags {
    std::optional<std::string> config;
    std::optional<std::string> group;
    std::optional<int> dim;
    std::optional<std::int64_t> N;
    std::optional<double> a, g, m, epsilon, time;
    std::optional<int> lambda;
    std::string encoding = "sparse";
    std::string hhkl = "off";
    std::string fastforward = "per-group";
    std::string ff_method = "qrom";

    void attach(CLI::App* app) {
        app->add_option("--config", config, "key = value parameter file; flags override it");
        app->add_option("--group", group, "u1|su2|su3");
        app->add_option("--dim", dim, "spatial dimension");
        app->add_option("--N", N, "linear lattice size");
        app->add_option("--a", a, "lattice spacing");
        app->add_option("--g", g, "gauge coupling");
        app->add_option("--m", m, "fermion mass");
        app->add_option("--lambda", lambda, "electric-field truncation");
        app->add_option("--epsilon", epsilon, "target precision");
        app->add_option("--time", time, "evolution time");
        app->add_option("--encoding", encoding, "sparse|lcu")->check(CLI::IsMember({"sparse", "lcu"}));
        app->add_option("--hhkl", hhkl, "on|off")->check(CLI::IsMember({"on", "off"}));
        app->add_option("--fastforward", fastforward, "electric-field cost model: per-group|lookup|formula")
            ->check(CLI::IsMember({"per-group", "lookup", "formula"}));
        app->add_option("--ff-method", ff_method, "method used by the formula model: qrom|arithmetic")
            ->check(CLI::IsMember({"qrom", "arithmetic"}));
    }

    lgt::cost::Conventions conventions() const {
        lgt::cost::Conventions c;
        if (fastforward == "lookup") c.ff_model = lgt::cost::FastForwardModel::Lookup;
        if (fastforward == "formula") c.ff_model = lgt::cost::FastForwardModel::Formula;
        if (ff_method == "arithmetic") c.ff_method = lgt::cost::FastForwardMethod::Arithmetic;
        return c;
    }

    lgt::PhysicalParams params() const {
        lgt::PhysicalParams p;
        if (config) p = lgt::load_config(*config);
        if (group) p.group = lgt::parse_group(*group);
        if (dim) p.d = *dim;
        if (N) p.N = *N;
        if (a) p.a = *a;
        if (g) p.g = *g;
        if (m) p.m = *m;
        if (lambda) p.lambda = *lambda;
        if (epsilon) p.epsilon = *epsilon;
        if (time) p.time = *time;
        lgt::validate(p);
        return p;
    }
};

struct Output {
    std::string path;
    std::string format = "csv";

    void attach(CLI::App* app, const std::string& def) {
        format = def;
        app->add_option("--out", path, "output file (default stdout)");
        app->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    }

    template <typename F>
    void write(F&& f) const {
        if (path.empty()) {
            f(std::cout);
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open " + path);
        f(out);
    }
};

json to_json(const lgt::cost::CostReport& r) {
    json j;
    j["group"] = lgt::to_string(r.group);
    j["encoding"] = lgt::cost::to_string(r.model);
    j["hhkl"] = r.hhkl;
    j["conventions"] = lgt::cost::describe(r.conventions);
    j["N"] = r.N;
    j["N_B"] = r.NB;
    j["d"] = r.d;
    j["lambda"] = r.lambda;
    j["time"] = r.time;
    j["epsilon"] = r.epsilon;
    j["v_LR"] = r.v_lr ? json(*r.v_lr) : json(nullptr);
    j["T_fastforward_per_link"] = r.t_ff_per_link;
    j["T_fastforward"] = r.t_fastforward;
    if (r.su) {
        j["oracles"] = {{"O_F_GM", r.su->O_F_GM}, {"O_H_GM", r.su->O_H_GM}, {"O_F_B", r.su->O_F_B},
                        {"O_H_B", r.su->O_H_B},   {"O_H_mass", r.su->O_H_mass}};
        j["plaquettes"] = r.plaquettes;
    } else {
        j["oracles"] = {{"mass", {r.mass.first, r.mass.second}},
                        {"gauge_matter", {r.gauge_matter.first, r.gauge_matter.second}},
                        {"magnetic", {r.magnetic.first, r.magnetic.second}}};
    }
    j["block"] = {{"cc_mass", r.block.cc_mass},
                  {"cc_gauge_matter", r.block.cc_gm},
                  {"cc_magnetic", r.block.cc_b},
                  {"rotation", r.block.rotation},
                  {"total", r.block.total()}};
    j["alpha"] = r.alpha;
    j["alpha_E"] = r.alpha_E;
    j["M"] = r.M;
    j["log_M"] = r.log_M;
    j["K"] = r.K;
    j["T_ham_t"] = r.t_ham_t;
    j["T_segment"] = r.segment;
    j["blocks"] = r.blocks;
    j["T_total"] = r.total;
    j["qubits_block"] = r.qubits_block;
    j["qubits_ancilla"] = r.qubits_ancilla;
    j["qubits_total"] = r.qubits_total;
    j["formula"] = r.formula;
    return j;
}

lgt::cost::CostReport run_estimate(const lgt::PhysicalParams& p, const ParamFlags& f) {
    lgt::cost::TotalOptions opt;
    opt.model = lgt::cost::parse_encoding(f.encoding);
    opt.hhkl = f.hhkl == "on";
    opt.conv = f.conventions();
    if (opt.hhkl) opt.v_lr = lgt::u1_velocity(p).v_lr;
    return lgt::cost::assemble_total(p, opt);
}

int table_for(lgt::GaugeGroup g) {
    switch (g.kind()) {
    case lgt::GroupKind::U1: return 1;
    case lgt::GroupKind::SU2: return 2;
    case lgt::GroupKind::SU3: return 3;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resource estimates for qubitized lattice gauge theory simulation"};
    app.require_subcommand(1);

    ParamFlags est_flags;
    Output est_out;
    auto* est = app.add_subcommand("estimate", "T-count and qubit count for one parameter set");
    est_flags.attach(est);
    est_out.attach(est, "json");

    ParamFlags tab_flags;
    Output tab_out;
    std::vector<double> tab_eps, tab_a;
    std::vector<std::int64_t> tab_N;
    bool tab_sig2 = false;
    auto* tab = app.add_subcommand("table", "sweep over (epsilon, N, a) compared against the Trotter reference");
    tab_flags.attach(tab);
    tab_out.attach(tab, "csv");
    tab->add_option("--epsilons", tab_eps, "epsilon values (default: reference sweep)");
    tab->add_option("--Ns", tab_N, "N values (default: reference sweep)");
    tab->add_option("--as", tab_a, "lattice spacings (default: reference sweep)");
    tab->add_flag("--sig2", tab_sig2, "round numbers to 2 significant figures");

    double lr_a = 1.0, lr_m = 10.0, lr_tol = 1e-6;
    int lr_grid = 200;
    std::string lr_out;
    auto* lr = app.add_subcommand("lieb-robinson", "U(1) Lieb-Robinson velocity bound in two dimensions (JSON)");
    lr->add_option("--a", lr_a, "lattice spacing");
    lr->add_option("--m", lr_m, "fermion mass");
    lr->add_option("--grid", lr_grid, "log-grid points before refinement");
    lr->add_option("--tol", lr_tol, "relative tolerance of the refinement");
    lr->add_option("--out", lr_out, "output file (default stdout)");

    std::string fig_name;
    Output fig_out;
    auto* fig = app.add_subcommand("figure", "data series for a figure (x, y, label)");
    fig->add_option("name", fig_name, "fastforward-crossover|block-encoding-totals|final-comparison|su-block-encodings")
        ->required();
    fig_out.attach(fig, "csv");

    int vc_pmax = 4;
    auto* vc = app.add_subcommand("verify-circuits", "exhaustive checks of the arithmetic kernels");
    vc->add_option("--pmax", vc_pmax, "largest register width to check")->check(CLI::Range(1, 12));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*est) {
            const auto p = est_flags.params();
            const auto r = run_estimate(p, est_flags);
            est_out.write([&](std::ostream& os) {
                const json j = to_json(r);
                if (est_out.format == "json") {
                    os << j.dump(2) << '\n';
                    return;
                }
                os << "field,value\n";
                for (const auto& [k, v] : j.items())
                    if (v.is_number() || v.is_string() || v.is_boolean()) os << k << ',' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            });
        } else if (*tab) {
            const auto p = tab_flags.params();
            auto cfg = lgt::report::table_sweep(table_for(p.group));
            if (tab_flags.dim) cfg.d = p.d;
            if (tab_flags.lambda) cfg.lambda = p.lambda;
            if (tab_flags.m) cfg.m = p.m;
            if (tab_flags.g) cfg.g = p.g;
            if (tab_flags.time) cfg.time = p.time;
            if (tab->count("--encoding")) cfg.options.model = lgt::cost::parse_encoding(tab_flags.encoding);
            if (tab->count("--hhkl")) cfg.options.hhkl = tab_flags.hhkl == "on";
            cfg.options.conv = tab_flags.conventions();
            if (tab->count("--epsilons")) cfg.epsilons = tab_eps;
            if (tab->count("--Ns")) cfg.Ns = tab_N;
            if (tab->count("--as")) cfg.as = tab_a;
            const auto rows = lgt::report::emit_table(cfg);
            tab_out.write([&](std::ostream& os) {
                if (tab_out.format == "json")
                    lgt::report::write_json(os, rows, cfg);
                else
                    lgt::report::write_csv(os, rows, cfg.group.is_abelian(), tab_sig2);
            });
        } else if (*lr) {
            lgt::PhysicalParams p;
            p.a = lr_a;
            p.m = lr_m;
            lgt::VelocityOptions opt;
            opt.grid = lr_grid;
            opt.tol = lr_tol;
            const auto r = lgt::u1_velocity(p, opt);
            json j;
            j["a"] = lr_a;
            j["m"] = lr_m;
            j["v_LR"] = r.v_lr;
            j["kappa_star"] = r.kappa_star;
            j["omega"] = r.omega;
            j["widened"] = r.widened;
            j["per_sign"] = json::array();
            for (const auto& s : r.per_sign)
                j["per_sign"].push_back({{"signs", s.signs}, {"v", s.v}, {"kappa", s.kappa}, {"omega", s.omega}});
            Output o{lr_out, "json"};
            o.write([&](std::ostream& os) { os << j.dump(2) << '\n'; });
        } else if (*fig) {
            const auto which = lgt::report::parse_figure(fig_name);
            const auto pts = lgt::report::emit_figure_data(which);
            fig_out.write([&](std::ostream& os) {
                if (fig_out.format == "json") {
                    json arr = json::array();
                    for (const auto& pt : pts) arr.push_back({{"x", pt.x}, {"y", pt.y}, {"label", pt.label}});
                    os << json{{"figure", lgt::report::to_string(which)}, {"series", arr}}.dump(2) << '\n';
                    return;
                }
                os << "x,y,label\n";
                for (const auto& pt : pts)
                    os << lgt::report::format_full(pt.x) << ',' << lgt::report::format_full(pt.y) << ',' << pt.label << '\n';
            });
        } else if (*vc) {
            bool ok = true;
            for (int p = 1; p <= vc_pmax; ++p) {
                const auto r = lgt::oracle::check_sid_exhaustive(p);
                std::cout << "sid p=" << p << " states=" << r.states << " checked=" << r.checked
                          << " bijective=" << r.bijective << " semantics=" << r.semantics << " inverse=" << r.inverse
                          << " precondition=" << r.precondition << '\n';
                ok = ok && r.ok();
            }
            const double err = lgt::oracle::fastforward_phase_max_error(15, 20, 12345);
            std::cout << "fastforward phase |k|<=15 max error " << err << '\n';
            ok = ok && err < 1e-12;
            std::cout << (ok ? "all circuit checks passed" : "circuit checks FAILED") << '\n';
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
