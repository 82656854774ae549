// esu — batch front end for the Einstein-static-universe solver.
//
//   esu <targets|classify|solve|minimize|evaluate|sweep>
//       --config <file.json> [--out <path>] [--format json|csv]
//       [--n-high N] [--tol T]
//
// The config carries the physical parameters under "params" (or at the top
// level) plus per-command sections; see README.md for the schema.  Exit
// codes: 0 ok, 2 invalid configuration or parameters, 3 singular
// renormalisation, 4 no solution, 5 solver failure.
//
// Outputs are deterministic: fixed-order summation everywhere, sweep rows
// written in input order regardless of the worker count (ESU_THREADS caps
// the sweep parallelism).

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "esu/esu.hpp"

namespace {

using esu::json;

struct Options {
    std::string config_path;
    std::string out_path;      // empty = stdout
    std::string format = "json";
    std::optional<long long> n_high;
    double tol = 1e-12;
};

json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    in >> j;
    return j;
}

esu::ModelParams params_of(const json& cfg) {
    return esu::params_from_json(cfg.contains("params") ? cfg.at("params") : cfg);
}

void write_output(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string dump(const json& j) { return j.dump(2); }

// ---- targets ---------------------------------------------------------------

json run_targets(const esu::ModelParams& p, double tol) {
    const auto eff = esu::effective_constants(p);
    const auto t = esu::targets(p, tol);
    const auto v1 = esu::x1(p.c(), tol);
    const auto v2 = esu::x2(p.c(), tol);
    json j;
    j["c"] = p.c();
    j["l_0"] = esu::mode_frequency(p, 0);
    j["R"] = esu::ricci_scalar(p);
    j["X1"] = esu::to_json(v1);
    j["X2"] = esu::to_json(v2);
    j["kappa_eff"] = eff.kappa_eff;
    j["lambda_eff"] = eff.lambda_eff;
    j["c_prime"] = eff.c_prime;
    j["c1"] = eff.c1;
    j["c2"] = eff.c2;
    j["Y1"] = t.y1;
    j["Y2"] = t.y2;
    return j;
}

// ---- classify ----------------------------------------------------------------

json run_classify(const esu::ModelParams& p, double tol) {
    const auto t = esu::targets(p, tol);
    json j = esu::to_json(esu::classify(t));
    j["Y1"] = t.y1;
    j["Y2"] = t.y2;
    return j;
}

// ---- solve -------------------------------------------------------------------

json run_solve(const esu::ModelParams& p, const json& cfg, const Options& opt) {
    const auto t = esu::targets(p, opt.tol);
    const auto cls = esu::classify(t);
    json j;
    j["classification"] = esu::to_json(cls);
    if (cls.qf == esu::SolutionSet::empty)
        throw esu::no_solution_error("solve: solution set is empty");
    std::size_t n_high;
    if (opt.n_high)
        n_high = static_cast<std::size_t>(*opt.n_high);
    else if (cfg.contains("n_high"))
        n_high = cfg.at("n_high").get<std::size_t>();
    else
        n_high = cls.qf == esu::SolutionSet::unique_ground
                     ? 0
                     : esu::min_two_mode_index(t);
    const auto s = esu::construct_two_mode(t, n_high);
    const auto [r1, r2] = esu::verify_solution(s, t);
    j["n_high"] = n_high;
    j["state"] = esu::to_json(s);
    j["residuals"] = {r1, r2};
    j["Y1"] = t.y1;
    j["Y2"] = t.y2;
    return j;
}

// ---- minimize ------------------------------------------------------------------

json run_minimize(const esu::ModelParams& p, double tol) {
    const auto t = esu::targets(p, tol);
    json j;
    j["classification"] = esu::to_json(esu::classify(t));
    const auto r = esu::solve_entropy_minimizer(t);
    j["minimizer"] = esu::to_json(r);
    const auto beta_kms = esu::kms_temperature_solve(t);
    j["kms_beta"] = beta_kms ? json(*beta_kms) : json(nullptr);
    j["Y1"] = t.y1;
    j["Y2"] = t.y2;
    return j;
}

// ---- evaluate ------------------------------------------------------------------

json run_evaluate(const esu::ModelParams& p, const json& cfg) {
    const esu::SymmetricState state =
        cfg.contains("state") ? esu::state_from_json(cfg.at("state"))
                              : esu::SymmetricState::ground();
    const double eps = cfg.value("eps", 1e-4);
    const std::size_t n_max = cfg.value("n_max", std::size_t{100000});

    json points = json::array();
    if (cfg.contains("points")) {
        for (const auto& pt : cfg.at("points")) {
            const double dt = pt.at("dt").get<double>();
            const double chi = pt.at("chi").get<double>();
            const auto v = esu::two_point(state, p, dt, chi, eps, n_max);
            points.push_back(json{{"dt", dt},
                                  {"chi", chi},
                                  {"re", v.real()},
                                  {"im", v.imag()}});
        }
    }
    const auto [e_reg, p_reg] = esu::energy_pressure_reg(state, p);
    const auto [e_ren, p_ren] = esu::energy_pressure_ren(state, p);
    json j;
    j["state"] = esu::to_json(state);
    j["eps"] = eps;
    j["n_max"] = n_max;
    j["two_point"] = points;
    j["e_reg"] = e_reg;
    j["p_reg"] = p_reg;
    j["e_ren"] = e_ren;
    j["p_ren"] = p_ren;
    return j;
}

std::string evaluate_csv(const json& j) {
    std::ostringstream os;
    os << "dt,chi,re,im\n";
    os.precision(17);
    for (const auto& pt : j.at("two_point"))
        os << pt.at("dt").get<double>() << ',' << pt.at("chi").get<double>() << ','
           << pt.at("re").get<double>() << ',' << pt.at("im").get<double>() << '\n';
    return os.str();
}

// ---- sweep ---------------------------------------------------------------------

struct SweepAxis {
    std::string param;
    std::vector<double> values;
};

std::vector<SweepAxis> parse_axes(const json& sweep) {
    std::vector<SweepAxis> axes;
    for (const auto& ax : sweep.at("axes")) {
        SweepAxis a;
        a.param = ax.at("param").get<std::string>();
        if (ax.contains("values")) {
            for (const auto& v : ax.at("values")) a.values.push_back(v.get<double>());
        } else {
            const double start = ax.at("start").get<double>();
            const double stop = ax.at("stop").get<double>();
            const std::size_t count = ax.at("count").get<std::size_t>();
            if (count < 1) throw std::invalid_argument("sweep axis: count must be >= 1");
            for (std::size_t i = 0; i < count; ++i)
                a.values.push_back(count == 1 ? start
                                              : start + (stop - start) *
                                                            static_cast<double>(i) /
                                                            static_cast<double>(count - 1));
        }
        if (a.values.empty()) throw std::invalid_argument("sweep axis: empty value list");
        axes.push_back(std::move(a));
    }
    if (axes.empty()) throw std::invalid_argument("sweep: needs at least one axis");
    return axes;
}

json params_json_with(const json& base, const std::string& name, double value) {
    json j = base;
    auto set_arr = [&](const char* key, std::size_t len, std::size_t idx) {
        if (!j.contains(key)) {
            j[key] = std::vector<double>(len, 0.0);
        }
        j[key][idx] = value;
    };
    if (name == "a" || name == "Lambda" || name == "m" || name == "xi" ||
        name == "kappa") {
        j[name] = value;
    } else if (name.rfind("alpha", 0) == 0 && name.size() == 6) {
        set_arr("alpha", 5, static_cast<std::size_t>(name[5] - '1'));
    } else if (name.rfind("beta", 0) == 0 && name.size() == 5) {
        set_arr("beta", 3, static_cast<std::size_t>(name[4] - '1'));
    } else {
        throw std::invalid_argument("sweep: unknown parameter \"" + name + "\"");
    }
    return j;
}

json sweep_cell(const json& base_params, const std::vector<SweepAxis>& axes,
                const std::vector<std::size_t>& idx, double tol) {
    json row = json::object();
    json pj = base_params;
    for (std::size_t d = 0; d < axes.size(); ++d) {
        row[axes[d].param] = axes[d].values[idx[d]];
        pj = params_json_with(pj, axes[d].param, axes[d].values[idx[d]]);
    }
    try {
        const esu::ModelParams p = esu::params_from_json(pj);
        const auto t = esu::targets(p, tol);
        const auto cls = esu::classify(t);
        row["Y1"] = t.y1;
        row["Y2"] = t.y2;
        row["qf"] = esu::to_string(cls.qf);
        row["full"] = esu::to_string(cls.full);
        row["boundary"] = cls.boundary;
        row["status"] = "ok";
    } catch (const esu::singular_renormalization_error&) {
        row["status"] = "singular_renormalization";
    } catch (const std::exception&) {
        row["status"] = "invalid_params";
    }
    return row;
}

json run_sweep(const json& cfg, double tol) {
    const json base = cfg.contains("params") ? cfg.at("params") : json::object();
    const auto axes = parse_axes(cfg.at("sweep"));

    std::size_t total = 1;
    for (const auto& a : axes) total *= a.values.size();

    // cells in row-major input order; workers pick cells by index so the
    // output order never depends on scheduling
    std::vector<json> rows(total);
    std::size_t threads = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("ESU_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) threads = static_cast<std::size_t>(v);
    }
    threads = std::max<std::size_t>(1, std::min(threads, total));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            std::vector<std::size_t> idx(axes.size());
            std::size_t rem = i;
            for (std::size_t d = axes.size(); d-- > 0;) {
                idx[d] = rem % axes[d].values.size();
                rem /= axes[d].values.size();
            }
            rows[i] = sweep_cell(base, axes, idx, tol);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i + 1 < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    json j;
    j["rows"] = json::array();
    for (auto& r : rows) j["rows"].push_back(std::move(r));
    return j;
}

std::string sweep_csv(const json& j, const std::vector<SweepAxis>& axes) {
    std::ostringstream os;
    for (const auto& a : axes) os << a.param << ',';
    os << "Y1,Y2,qf,full,boundary,status\n";
    os.precision(17);
    for (const auto& row : j.at("rows")) {
        for (const auto& a : axes) os << row.at(a.param).get<double>() << ',';
        if (row.at("status").get<std::string>() == "ok") {
            os << row.at("Y1").get<double>() << ',' << row.at("Y2").get<double>() << ','
               << row.at("qf").get<std::string>() << ','
               << row.at("full").get<std::string>() << ','
               << (row.at("boundary").get<bool>() ? "true" : "false") << ',';
        } else {
            os << ",,,,,";
        }
        os << row.at("status").get<std::string>() << '\n';
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetric solutions of the semi-classical Einstein-Klein-Gordon "
                 "system on the Einstein static universe"};
    app.require_subcommand(1);

    Options opt;
    std::string command;
    for (const char* name :
         {"targets", "classify", "solve", "minimize", "evaluate", "sweep"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", opt.config_path, "JSON configuration file")
            ->required();
        sub->add_option("--out", opt.out_path, "output path (default: stdout)");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--n-high", opt.n_high, "mode index for solve");
        sub->add_option("--tol", opt.tol, "series tolerance");
        sub->callback([&command, name]() { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const json cfg = load_config(opt.config_path);
        json result;
        std::string text;
        if (command == "targets") {
            result = run_targets(params_of(cfg), opt.tol);
        } else if (command == "classify") {
            result = run_classify(params_of(cfg), opt.tol);
        } else if (command == "solve") {
            result = run_solve(params_of(cfg), cfg, opt);
        } else if (command == "minimize") {
            result = run_minimize(params_of(cfg), opt.tol);
        } else if (command == "evaluate") {
            result = run_evaluate(params_of(cfg), cfg);
            if (opt.format == "csv") text = evaluate_csv(result);
        } else if (command == "sweep") {
            result = run_sweep(cfg, opt.tol);
            if (opt.format == "csv") text = sweep_csv(result, parse_axes(cfg.at("sweep")));
        }
        write_output(opt, text.empty() ? dump(result) : text);
        return 0;
    } catch (const esu::singular_renormalization_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const esu::no_solution_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const esu::solver_failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 5;
    } catch (const esu::mode_in_kernel_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
