// zetacrit command-line surface: evaluate zeta-family functions, build or
// import zero tables, verify the integral criteria, run the gamma(alpha)
// sweep, and emit machine-readable reports.
//
// Exit codes: 0 success / residual within bound, 2 residual exceeded the
// classification bound, 1 any error (named constraint violations included).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetacrit/zetacrit.hpp"

namespace {

using namespace zetacrit;
namespace fs = std::filesystem;

double now_ms() {
    using clk = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(
               clk::now().time_since_epoch())
        .count();
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("ZETACRIT_CACHE_DIR")) return env;
    return "zetacrit-cache";
}

std::string cache_path(const std::string& dir, double t_max) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "zeros-%.17g.txt", t_max);
    return (fs::path(dir) / buf).string();
}

// Zero table to height t_max: explicit import file, then cache, then a
// fresh Hardy-Z scan (persisted to the cache for the next run).
ZeroTable obtain_zeros(const std::string& zeros_file,
                       const std::string& cache_dir, double t_max) {
    if (!zeros_file.empty()) {
        ZeroTable t = load_zero_table(zeros_file);
        if (t.height < t_max)
            throw InsufficientZeroTable(
                "imported zero table ends below t_max");
        return t;
    }
    const std::string cached = cache_path(cache_dir, t_max);
    if (fs::exists(cached)) return load_zero_table(cached);
    ZeroTable t = find_zeros_up_to(t_max, 1e-12);
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    if (!ec) save_zero_table(t, cached);
    return t;
}

struct VerifyFlags {
    std::string criterion = "eq10";
    double b = 0.5, c = 0.0, d = 0.0, a = 0.0, alpha = 0.0;
    double t_max = -1.0, tol = -1.0;
};

// Named shortcuts expand to the full parameter sets of the headline
// equalities; bare theorem names require the parameter flags.
CriterionSpec build_spec(const VerifyFlags& f) {
    CriterionSpec s;
    auto base = [&](CriterionKind k, double tol_dflt, double tmax_dflt) {
        s.kind = k;
        s.tol = f.tol > 0.0 ? f.tol : tol_dflt;
        s.t_max = f.t_max > 0.0 ? f.t_max : tmax_dflt;
    };
    const std::string& c = f.criterion;
    if (c == "eq3") {
        base(CriterionKind::Theorem1, 1e-11, 1000.0);
        s.b = 0.5; s.c = 1.5; s.d = 3.5;
    } else if (c == "eq6") {
        base(CriterionKind::Theorem1a, 1e-11, 1000.0);
        s.b = 0.5; s.c = 1.5;
    } else if (c == "eq10") {
        base(CriterionKind::Theorem2a, 1e-11, 1000.0);
        s.b = 0.5;
    } else if (c == "eq14") {
        base(CriterionKind::Eq14, 1e-9, 5000.0);
    } else if (c == "eq16") {
        base(CriterionKind::Volchkov, 1e-11, 1000.0);
    } else if (c == "eq17") {
        base(CriterionKind::Eq17, 1e-9, 1000.0);
    } else if (c == "theorem1") {
        base(CriterionKind::Theorem1, 1e-11, 1000.0);
        s.b = f.b; s.c = f.c; s.d = f.d;
    } else if (c == "theorem1a") {
        base(CriterionKind::Theorem1a, 1e-11, 1000.0);
        s.b = f.b; s.c = f.c;
    } else if (c == "theorem2") {
        base(CriterionKind::Theorem2, 1e-11, 1000.0);
        s.b = f.b; s.a = f.a;
    } else if (c == "theorem2a") {
        base(CriterionKind::Theorem2a, 1e-11, 1000.0);
        s.b = f.b;
    } else if (c == "volchkov") {
        base(CriterionKind::Volchkov, 1e-11, 1000.0);
    } else if (c == "gamma-alpha") {
        base(CriterionKind::GammaAlpha, 1e-9, 1000.0);
        s.alpha = f.alpha;
    } else {
        throw SpecViolation("unknown criterion name: " + c);
    }
    validate_spec(s);
    return s;
}

void emit(const CriterionResult& r, double wall_ms,
          const std::string& fmt) {
    if (fmt == "json")
        std::cout << to_json(r, wall_ms) << "\n";
    else if (fmt == "csv")
        std::cout << csv_header() << "\n" << to_csv(r, wall_ms) << "\n";
    else
        std::cout << to_human(r, wall_ms);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical verification of zeta integral criteria"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string output = "human";
    std::string zeros_file;
    std::string cache_dir = default_cache_dir();
    app.add_option("--output", output, "json|csv|human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    app.add_option("--zeros-file", zeros_file,
                   "import a one-ordinate-per-line zero table");
    app.add_option("--cache-dir", cache_dir,
                   "zero table cache directory (env ZETACRIT_CACHE_DIR)");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a zeta-family function");
    std::string func = "zeta";
    double re = 2.0, im = 0.0, eval_tol = 1e-12;
    eval->add_option("--func", func,
                     "zeta|log-abs-zeta|log-deriv-zeta|log-gamma|theta|"
                     "hardy-z|arg-zeta|counting-n")
        ->check(CLI::IsMember({"zeta", "log-abs-zeta", "log-deriv-zeta",
                               "log-gamma", "theta", "hardy-z", "arg-zeta",
                               "counting-n"}));
    eval->add_option("--re", re, "real part (b / sigma)");
    eval->add_option("--im", im, "imaginary part (t / x)");
    eval->add_option("--tol", eval_tol, "evaluation tolerance");

    // zeros
    auto* zeros_cmd = app.add_subcommand("zeros", "build or import a zero table");
    double up_to = 100.0;
    std::string import_path, cache_out;
    zeros_cmd->add_option("--up-to", up_to, "table height T")->required();
    zeros_cmd->add_option("--import", import_path, "import instead of scanning");
    zeros_cmd->add_option("--cache", cache_out, "write the table here");

    // verify
    auto* verify = app.add_subcommand("verify", "verify one criterion");
    VerifyFlags vf;
    verify->add_option("--criterion", vf.criterion,
                       "eq3|eq6|eq10|eq14|eq16|eq17|theorem1|theorem1a|"
                       "theorem2|theorem2a|volchkov|gamma-alpha")
        ->required();
    verify->add_option("--b", vf.b, "line parameter b");
    verify->add_option("--c", vf.c, "kernel parameter c");
    verify->add_option("--d", vf.d, "kernel parameter d");
    verify->add_option("--a", vf.a, "kernel parameter a");
    verify->add_option("--alpha", vf.alpha, "gamma(alpha) offset");
    verify->add_option("--t-max", vf.t_max, "truncation height");
    verify->add_option("--tol", vf.tol, "quadrature tolerance");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "gamma(alpha) sweep CSV");
    std::vector<double> alphas;
    double sweep_tmax = 1000.0, sweep_tol = 1e-9;
    sweep->add_option("--alphas", alphas, "alpha grid (default 0..0.45 step 0.05)");
    sweep->add_option("--t-max", sweep_tmax, "truncation height");
    sweep->add_option("--tol", sweep_tol, "quadrature tolerance");

    // report
    auto* report = app.add_subcommand(
        "report", "verify the headline equalities (3), (6), (10), (16)");
    double report_tmax = 1000.0, report_tol = 1e-11;
    report->add_option("--t-max", report_tmax, "truncation height");
    report->add_option("--tol", report_tol, "quadrature tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) {
            const double t0 = now_ms();
            char buf[128];
            if (func == "zeta") {
                auto r = zeta({re, im}, eval_tol);
                std::snprintf(buf, sizeof buf, "%.15g %.15g (bound %.3g)",
                              r.value.real(), r.value.imag(),
                              r.abs_error_bound);
            } else if (func == "log-abs-zeta") {
                std::snprintf(buf, sizeof buf, "%.15g",
                              log_abs_zeta({re, im}, eval_tol));
            } else if (func == "log-deriv-zeta") {
                auto r = log_deriv_zeta({re, im}, eval_tol);
                std::snprintf(buf, sizeof buf, "%.15g %.15g (bound %.3g)",
                              r.value.real(), r.value.imag(),
                              r.abs_error_bound);
            } else if (func == "log-gamma") {
                auto v = log_gamma({re, im});
                std::snprintf(buf, sizeof buf, "%.15g %.15g", v.real(),
                              v.imag());
            } else if (func == "theta") {
                std::snprintf(buf, sizeof buf, "%.15g",
                              riemann_siegel_theta(im));
            } else if (func == "hardy-z") {
                std::snprintf(buf, sizeof buf, "%.15g",
                              hardy_z(im, eval_tol));
            } else if (func == "arg-zeta") {
                std::snprintf(buf, sizeof buf, "%.15g",
                              arg_zeta(re, im, eval_tol));
            } else { // counting-n
                std::snprintf(buf, sizeof buf, "%.15g",
                              counting_n(im, eval_tol));
            }
            std::cout << buf << "\n";
            std::fprintf(stderr, "wall_ms %.1f\n", now_ms() - t0);
            return 0;
        }

        if (*zeros_cmd) {
            ZeroTable table;
            if (!import_path.empty()) {
                table = load_zero_table(import_path);
            } else {
                table = obtain_zeros("", cache_dir, up_to);
            }
            if (!cache_out.empty()) save_zero_table(table, cache_out);
            const bool ok = table.ordinates.empty()
                                ? true
                                : verify_zero_count(table, up_to);
            std::cout << "count " << table.ordinates.size() << "\n"
                      << "height " << table.height << "\n"
                      << "count_check " << (ok ? "pass" : "fail") << "\n";
            return ok ? 0 : 1;
        }

        if (*verify) {
            const CriterionSpec spec = build_spec(vf);
            const ZeroTable table =
                obtain_zeros(zeros_file, cache_dir, spec.t_max);
            const double t0 = now_ms();
            const CriterionResult r = full_equality(spec, table);
            emit(r, now_ms() - t0, output);
            return residual_within_bound(r) ? 0 : 2;
        }

        if (*sweep) {
            if (alphas.empty())
                for (int i = 0; i < 10; ++i) alphas.push_back(0.05 * i);
            for (double a : alphas)
                if (!(a >= 0.0 && a < 0.5))
                    throw SpecViolation(
                        "gamma(alpha) requires 0 <= alpha < 1/2 "
                        "(Theorem 2a range)");
            const ZeroTable table =
                obtain_zeros(zeros_file, cache_dir, sweep_tmax);
            std::cout << "alpha,gamma_alpha,abs_error_vs_gamma,t_max\n";
            char buf[128];
            for (double a : alphas) {
                const double g = gamma_alpha(a, sweep_tmax, sweep_tol, table);
                std::snprintf(buf, sizeof buf, "%.15g,%.15g,%.15g,%.15g\n",
                              a, g,
                              std::abs(g - MathConstants::euler_gamma),
                              sweep_tmax);
                std::cout << buf;
            }
            return 0;
        }

        if (*report) {
            const ZeroTable table =
                obtain_zeros(zeros_file, cache_dir, report_tmax);
            const char* names[4] = {"eq3", "eq6", "eq10", "eq16"};
            if (output == "csv") std::cout << csv_header() << "\n";
            bool all_ok = true;
            for (const char* n : names) {
                VerifyFlags f;
                f.criterion = n;
                f.t_max = report_tmax;
                f.tol = report_tol;
                const CriterionSpec spec = build_spec(f);
                const double t0 = now_ms();
                const CriterionResult r = full_equality(spec, table);
                const double ms = now_ms() - t0;
                if (output == "csv")
                    std::cout << to_csv(r, ms) << "\n";
                else if (output == "json")
                    std::cout << to_json(r, ms) << "\n";
                else
                    std::cout << to_human(r, ms) << "\n";
                all_ok = all_ok && residual_within_bound(r);
            }
            return all_ok ? 0 : 2;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
