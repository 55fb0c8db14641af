#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "anewdsc/cli.hpp"
#include "anewdsc/error.hpp"
#include "anewdsc/isolate.hpp"
#include "anewdsc/refine.hpp"

using namespace anewdsc;
using cli::json;

namespace {

struct Options {
    std::string input, output, family = "mignotte";
    std::int64_t kappa = 0;
    bool bisection_only = false, single_interval = false, square_free = false;
    cli::GeneratorParams gen;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Config make_config(const Options& o) {
    Config cfg = cli::config_from_env();
    cfg.bisection_only = o.bisection_only;
    cfg.single_initial_interval = o.single_interval;
    return cfg;
}

json solve(const cli::Polynomial& p, const Options& o, bool do_refine) {
    const auto t0 = std::chrono::steady_clock::now();
    Context ctx(p.oracle, make_config(o));
    IsolationResult r = isolate(ctx);
    std::vector<Interval> intervals = r.intervals;
    if (do_refine) intervals = refine(ctx, intervals, o.kappa);
    const double wall = seconds_since(t0);

    json out;
    if (!p.name.empty()) out["name"] = p.name;
    out["degree"] = p.exact.degree();
    out["intervals"] = json::array();
    for (const auto& I : intervals) out["intervals"].push_back(cli::render_interval(I));
    if (do_refine) out["kappa"] = o.kappa;
    out["stats"] = cli::render_stats(ctx.stats(), wall);
    return out;
}

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::invalid_input, "cannot write " + path);
    out << j.dump(2) << "\n";
}

json solve_all(const std::vector<cli::Polynomial>& polys, const Options& o, bool do_refine) {
    if (polys.size() == 1) return solve(polys[0], o, do_refine);
    json all = json::array();
    for (const auto& p : polys) all.push_back(solve(p, o, do_refine));
    return json{{"results", all}};
}

int verify(const Options& o) {
    const auto polys = cli::parse_input_file(o.input, o.square_free);
    int failures = 0;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        const auto& p = polys[i];
        const std::string label = p.name.empty() ? "#" + std::to_string(i) : p.name;
        try {
            Context ctx(p.oracle, make_config(o));
            const IsolationResult r = isolate(ctx);
            const cli::Verdict v = cli::verify_isolation(p.exact, r.intervals);
            std::cout << (v.pass ? "PASS " : "FAIL ") << label << ": " << v.detail << "\n";
            if (!v.pass) ++failures;
        } catch (const Error& e) {
            std::cout << "FAIL " << label << ": " << e.what() << "\n";
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all passed" : std::to_string(failures) + " failed") << " (" << polys.size()
              << " polynomials)\n";
    return failures == 0 ? 0 : 1;
}

void add_mode_flags(CLI::App* cmd, Options& o) {
    cmd->add_flag("--bisection-only", o.bisection_only, "linear steps only (no Boundary/Newton tests)");
    cmd->add_flag("--single-initial-interval", o.single_interval, "start from (-2^Gamma, 2^Gamma)");
}

void add_generator_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.family, "mignotte | wilkinson | random-dense | random-sparse | chebyshev-like")
        ->required();
    cmd->add_option("--n", o.gen.n, "degree");
    cmd->add_option("--a", o.gen.a, "Mignotte parameter a");
    cmd->add_option("--k", o.gen.k, "Wilkinson degree");
    cmd->add_option("--tau", o.gen.tau, "coefficient bit size");
    cmd->add_option("--terms", o.gen.terms, "nonzero terms (random-sparse)");
    cmd->add_option("--seed", o.gen.seed, "generator seed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified real-root isolation and refinement"};
    app.require_subcommand(1);
    Options o;

    auto* iso = app.add_subcommand("isolate", "isolate all real roots");
    iso->add_option("--input", o.input, "polynomial JSON")->required();
    iso->add_option("--output", o.output, "result JSON (default stdout)");
    iso->add_flag("--square-free", o.square_free, "replace the input by its square-free part");
    add_mode_flags(iso, o);

    auto* ref = app.add_subcommand("refine", "isolate, then refine to width < 2^-kappa");
    ref->add_option("--input", o.input, "polynomial JSON")->required();
    ref->add_option("--kappa", o.kappa, "target width exponent")->required()->check(CLI::PositiveNumber);
    ref->add_option("--output", o.output, "result JSON (default stdout)");
    ref->add_flag("--square-free", o.square_free, "replace the input by its square-free part");
    add_mode_flags(ref, o);

    auto* bench = app.add_subcommand("bench", "run a generated instance and report stats");
    add_generator_flags(bench, o);
    bench->add_option("--kappa", o.kappa, "also refine to width < 2^-kappa");
    bench->add_option("--output", o.output, "result JSON (default stdout)");
    add_mode_flags(bench, o);

    auto* gen = app.add_subcommand("generate", "write a generated polynomial as JSON");
    add_generator_flags(gen, o);
    gen->add_option("--output", o.output, "polynomial JSON (default stdout)");

    auto* ver = app.add_subcommand("verify", "isolate and cross-check against exact Sturm counts");
    ver->add_option("--input", o.input, "polynomial or corpus JSON")->required();
    ver->add_flag("--square-free", o.square_free, "replace inputs by their square-free parts");
    add_mode_flags(ver, o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (iso->parsed()) {
            emit(solve_all(cli::parse_input_file(o.input, o.square_free), o, false), o.output);
        } else if (ref->parsed()) {
            emit(solve_all(cli::parse_input_file(o.input, o.square_free), o, true), o.output);
        } else if (bench->parsed()) {
            cli::Polynomial p;
            p.name = o.family;
            p.exact = cli::generate(o.family, o.gen);
            p.oracle = normalize_leading(reference::to_oracle(p.exact)).first;
            emit(solve(p, o, o.kappa > 0), o.output);
        } else if (gen->parsed()) {
            json j = cli::render_polynomial(cli::generate(o.family, o.gen));
            j["name"] = o.family;
            emit(j, o.output);
        } else if (ver->parsed()) {
            return verify(o);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
