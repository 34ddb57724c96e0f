// cowpath: generate, evaluate, audit, and verify search paths for the
// sphere-inspection form of the d-dimensional cow-path problem.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cowpath/auditor.hpp"
#include "cowpath/coverage.hpp"
#include "cowpath/lemmas.hpp"
#include "cowpath/path_io.hpp"
#include "cowpath/report_json.hpp"
#include "cowpath/strategies.hpp"

using nlohmann::json;
using namespace cowpath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitVerdictFail = 2;

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out << prefix << "," << j.dump() << "\n";
    }
}

void emit_document(const json& doc, const std::string& out_file,
                   const std::string& format) {
    std::ostringstream body;
    if (format == "csv-summary") {
        flatten(doc, "", body);
    } else {
        body << doc.dump(2) << "\n";
    }
    if (out_file.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + out_file);
        out << body.str();
    }
}

json envelope(const std::string& subcommand, json config,
              const std::string& input_digest = {}) {
    json doc;
    doc["tool"] = "cowpath";
    doc["version"] = tool_version();
    config["subcommand"] = subcommand;
    doc["config"] = std::move(config);
    if (!input_digest.empty()) doc["input_digest"] = input_digest;
    return doc;
}

void emit_points(const Polyline& path, const std::string& file) {
    if (path.dim() > 3) {
        throw std::runtime_error("--emit-points supports dimensions up to 3");
    }
    save_path_csv(path, file);
}

std::vector<std::size_t> parse_dims(const std::string& text) {
    std::vector<std::size_t> dims;
    auto range = text.find("..");
    if (range != std::string::npos) {
        std::size_t lo = std::stoul(text.substr(0, range));
        std::size_t hi = std::stoul(text.substr(range + 2));
        for (std::size_t d = lo; d <= hi; ++d) dims.push_back(d);
    } else {
        std::istringstream in(text);
        std::string cell;
        while (std::getline(in, cell, ',')) dims.push_back(std::stoul(cell));
    }
    if (dims.empty()) throw std::runtime_error("empty dimension list");
    return dims;
}

std::vector<double> parse_eps(const std::string& text) {
    std::vector<double> eps;
    if (std::count(text.begin(), text.end(), ':') == 2) {
        auto a = text.find(':');
        auto b = text.find(':', a + 1);
        double lo = std::stod(text.substr(0, a));
        double step = std::stod(text.substr(a + 1, b - a - 1));
        double hi = std::stod(text.substr(b + 1));
        if (step <= 0) throw std::runtime_error("eps step must be positive");
        for (double e = lo; e <= hi + 1e-12; e += step) eps.push_back(std::min(e, 1.0));
    } else {
        std::istringstream in(text);
        std::string cell;
        while (std::getline(in, cell, ',')) eps.push_back(std::stod(cell));
    }
    if (eps.empty()) throw std::runtime_error("empty epsilon list");
    return eps;
}

struct GenerateArgs {
    std::string kind;
    int kmax = 0;
    double growth = 0.0;
    double theta_max = 0.0;
    int points_per_turn = 256;
    std::size_t dim = 0;
    double scale = 0.0; // 0 = default sqrt(d)
    double radius = 0.0;
    double length = 0.0;
    std::size_t steps = 16;
    std::uint64_t seed = 0;
    std::string out = "path.json";
    std::string emit_points_file;
};

int run_generate(const GenerateArgs& a, const CLI::App& cmd) {
    Polyline path = [&] {
        if (a.kind == "doubling1d") {
            if (!cmd.count("--kmax")) throw CLI::RequiredError("--kmax (kind doubling1d)");
            return doubling_1d(a.kmax);
        }
        if (a.kind == "log-spiral") {
            if (!cmd.count("--growth") || !cmd.count("--theta-max")) {
                throw CLI::RequiredError("--growth and --theta-max (kind log-spiral)");
            }
            return log_spiral_2d(a.growth, a.theta_max, a.points_per_turn);
        }
        if (a.kind == "cross-polytope") {
            if (!cmd.count("--dim")) throw CLI::RequiredError("--dim (kind cross-polytope)");
            std::optional<double> scale;
            if (cmd.count("--scale")) scale = a.scale;
            return cross_polytope_tour(a.dim, scale);
        }
        if (a.kind == "confined-random") {
            if (!cmd.count("--dim") || !cmd.count("--radius") || !cmd.count("--length")) {
                throw CLI::RequiredError("--dim, --radius, --length (kind confined-random)");
            }
            return confined_random_path(a.dim, a.radius, a.length, a.steps, a.seed);
        }
        throw CLI::ValidationError("--kind", "unknown kind '" + a.kind + "'");
    }();

    save_path(path, a.out);
    if (!a.emit_points_file.empty()) emit_points(path, a.emit_points_file);
    std::cout << "kind=" << a.kind << " d=" << path.dim()
              << " vertices=" << path.vertices().size() << " length=" << path.length()
              << " out=" << a.out << "\n";
    return kExitOk;
}

struct EvaluateArgs {
    std::string path_file;
    std::string mode = "auto";
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::size_t ratio_directions = 64;
    std::size_t ratio_offsets = 512;
    int refine = 10;
    double r_max = 0.0;
    std::string out;
    std::string format = "json";
    std::string emit_points_file;
};

int run_evaluate(const EvaluateArgs& a, const CLI::App& cmd) {
    Polyline path = load_path(a.path_file);
    CoverageMode mode = CoverageMode::sampled;
    if (a.mode == "exact" || (a.mode == "auto" && path.dim() <= 3)) {
        mode = CoverageMode::exact_low_d;
    }
    CoverageReport cov = covers(path, mode, a.samples, a.seed, a.threads);

    RatioOptions opt;
    opt.n_directions = a.ratio_directions;
    opt.offsets_per_direction = a.ratio_offsets;
    opt.seed = a.seed;
    opt.refine_rounds = a.refine;
    opt.workers = a.threads;
    if (cmd.count("--r-max")) opt.r_max = a.r_max;
    RatioReport ratio = worst_case_ratio(path, opt);

    json config{{"input", a.path_file},
                {"mode", mode == CoverageMode::sampled ? "sampled" : "exact-low-d"},
                {"n_samples", a.samples},
                {"seed", a.seed},
                {"ratio_directions", a.ratio_directions},
                {"ratio_offsets", a.ratio_offsets},
                {"refine_rounds", a.refine},
                {"format", a.format}};
    if (cmd.count("--r-max")) config["r_max"] = a.r_max;
    json doc = envelope("evaluate", config, file_digest(a.path_file));
    doc["reports"] = json{{"coverage", cov}, {"ratio", ratio}};
    emit_document(doc, a.out, a.format);
    if (!a.emit_points_file.empty()) emit_points(path, a.emit_points_file);

    std::cerr << "covered=" << (cov.verdict ? "yes" : "no") << " fraction="
              << cov.fraction_visible << " ratio="
              << (ratio.unbounded ? std::string("unbounded")
                                  : std::to_string(ratio.sup_ratio))
              << "\n";
    return cov.verdict ? kExitOk : kExitVerdictFail;
}

struct AuditArgs {
    std::string path_file;
    double tau_override = 0.0;
    std::size_t samples = 20000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;
    std::string format = "json";
    std::string emit_points_file;
};

int run_audit(const AuditArgs& a, const CLI::App& cmd) {
    Polyline path = load_path(a.path_file);
    std::optional<double> tau_override;
    if (cmd.count("--tau")) tau_override = a.tau_override;
    AuditReport rep = audit(path, tau_override);

    json config{{"input", a.path_file},
                {"witness_samples", a.samples},
                {"seed", a.seed},
                {"format", a.format},
                {"log_base", "natural"}};
    if (tau_override) config["tau_override"] = *tau_override;
    json doc = envelope("audit", config, file_digest(a.path_file));
    doc["reports"]["audit"] = rep;
    if (path.dim() >= 3) {
        doc["reports"]["corollary"] = corollary_check(path, a.samples, a.seed, a.threads);
    } else {
        doc["reports"]["corollary"] = nullptr;
        doc["reports"]["corollary_skipped"] = "corollary check requires dimension >= 3";
    }
    emit_document(doc, a.out, a.format);
    if (!a.emit_points_file.empty()) emit_points(path, a.emit_points_file);

    std::cerr << "milestones=" << rep.m << " certified_lower_bound="
              << rep.certified_lower_bound << " measured_length="
              << rep.measured_length << "\n";
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double trials_scale = 1.0;
    std::string out;
    std::string format = "json";
};

int run_verify(const VerifyArgs& a) {
    auto scaled = [&](double base, double floor) {
        return static_cast<std::size_t>(std::max(floor, base * a.trials_scale));
    };
    const bool all = a.suite == "all";
    std::vector<LemmaVerdict> verdicts;

    if (all || a.suite == "cap") {
        std::vector<std::size_t> dims;
        for (std::size_t d = 2; d <= 64; ++d) dims.push_back(d);
        std::vector<double> eps;
        for (int k = 0; k <= 20; ++k) eps.push_back(k / 20.0);
        verdicts.push_back(check_cap_bound(dims, eps));
    }
    if (all || a.suite == "point-visibility") {
        std::vector<LemmaVerdict> parts;
        for (std::size_t d : {3, 8, 32}) {
            parts.push_back(check_point_visibility(d, {1.0, 2.0, 4.0, 8.0},
                                                   scaled(100000, 1000), a.seed,
                                                   a.threads));
        }
        verdicts.push_back(merge_verdicts("point-visibility", parts));
    }
    if (all || a.suite == "ball-containment") {
        std::vector<LemmaVerdict> parts;
        const std::pair<std::size_t, double> plan[] = {
            {2, 750000.0}, {3, 300000.0}, {8, 100000.0}, {32, 40000.0}};
        for (auto [d, trials] : plan) {
            parts.push_back(
                check_ball_containment(d, scaled(trials, 100), a.seed, a.threads));
        }
        verdicts.push_back(merge_verdicts("ball-containment", parts));
    }
    if (all || a.suite == "confined-path") {
        verdicts.push_back(check_confined_path(64, 2.0, 6.0, scaled(20, 2),
                                               scaled(20000, 1000), a.seed,
                                               a.threads));
    }
    if (verdicts.empty()) {
        throw CLI::ValidationError("--suite", "unknown suite '" + a.suite + "'");
    }

    json config{{"suite", a.suite},
                {"seed", a.seed},
                {"trials_scale", a.trials_scale},
                {"format", a.format}};
    json doc = envelope("verify", config);
    doc["reports"]["verdicts"] = verdicts;
    bool pass = true;
    for (const LemmaVerdict& v : verdicts) {
        if (v.violations != 0) pass = false;
        std::cerr << v.lemma_id << ": trials=" << v.trials
                  << " violations=" << v.violations << " worst_margin="
                  << v.worst_margin << "\n";
    }
    doc["reports"]["all_passed"] = pass;
    emit_document(doc, a.out, a.format);
    return pass ? kExitOk : kExitVerdictFail;
}

struct CapArgs {
    std::string dims = "2..64";
    std::string eps = "0:0.05:1";
    std::string out;
    std::string format = "json";
};

int run_cap(const CapArgs& a) {
    auto dims = parse_dims(a.dims);
    auto eps = parse_eps(a.eps);
    json rows = json::array();
    for (std::size_t d : dims) {
        for (double e : eps) {
            rows.push_back(json{{"d", d},
                                {"eps", e},
                                {"exact", cap_fraction_exact(d, e)},
                                {"bound", cap_bound(d, e)}});
        }
    }
    json doc = envelope("cap", json{{"dims", a.dims}, {"eps", a.eps},
                                    {"format", a.format}});
    doc["reports"]["table"] = std::move(rows);
    emit_document(doc, a.out, a.format);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sphere-inspection toolkit for the d-dimensional cow-path problem"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand(
        "generate", "write a path file for a named search strategy");
    generate->add_option("--kind", gen.kind,
                         "doubling1d | log-spiral | cross-polytope | confined-random")
        ->required();
    generate->add_option("--kmax", gen.kmax, "doubling turns");
    generate->add_option("--growth", gen.growth, "spiral growth rate b");
    generate->add_option("--theta-max", gen.theta_max, "spiral end angle");
    generate->add_option("--points-per-turn", gen.points_per_turn,
                         "spiral discretization density (>= 64)");
    generate->add_option("--dim", gen.dim, "ambient dimension");
    generate->add_option("--scale", gen.scale, "cross-polytope scale (default sqrt d)");
    generate->add_option("--radius", gen.radius, "confinement radius");
    generate->add_option("--length", gen.length, "target path length");
    generate->add_option("--steps", gen.steps, "random-walk step count");
    generate->add_option("--seed", gen.seed, "generator seed");
    generate->add_option("--out", gen.out, "output path file (.json or .csv)");
    generate->add_option("--emit-points", gen.emit_points_file,
                         "also write a plain CSV point list (d <= 3)");

    EvaluateArgs ev;
    CLI::App* evaluate = app.add_subcommand(
        "evaluate", "coverage verdict and worst-case ratio for a path file");
    evaluate->add_option("path", ev.path_file, "path file")->required();
    evaluate->add_option("--mode", ev.mode, "auto | sampled | exact");
    evaluate->add_option("--samples", ev.samples, "sampled-mode direction count");
    evaluate->add_option("--seed", ev.seed, "sampling seed");
    evaluate->add_option("--threads", ev.threads,
                         "worker threads (execution detail, not part of the report)");
    evaluate->add_option("--ratio-directions", ev.ratio_directions, "ratio grid directions");
    evaluate->add_option("--ratio-offsets", ev.ratio_offsets, "ratio offsets per direction");
    evaluate->add_option("--refine", ev.refine, "ratio refinement rounds");
    evaluate->add_option("--r-max", ev.r_max, "offset ceiling (default max vertex norm)");
    evaluate->add_option("--out", ev.out, "report file (default stdout)");
    evaluate->add_option("--format", ev.format, "json | csv-summary");
    evaluate->add_option("--emit-points", ev.emit_points_file, "CSV point list (d <= 3)");

    AuditArgs au;
    CLI::App* audit_cmd = app.add_subcommand(
        "audit", "projection-cascade lower bound and corollary dichotomy");
    audit_cmd->add_option("path", au.path_file, "path file")->required();
    audit_cmd->add_option("--tau", au.tau_override,
                          "milestone radius override (required for d < 4)");
    audit_cmd->add_option("--samples", au.samples, "witness sample count");
    audit_cmd->add_option("--seed", au.seed, "sampling seed");
    audit_cmd->add_option("--threads", au.threads,
                          "worker threads (execution detail, not part of the report)");
    audit_cmd->add_option("--out", au.out, "report file (default stdout)");
    audit_cmd->add_option("--format", au.format, "json | csv-summary");
    audit_cmd->add_option("--emit-points", au.emit_points_file, "CSV point list (d <= 3)");

    VerifyArgs ve;
    CLI::App* verify = app.add_subcommand("verify", "run the executable lemma suites");
    verify->add_option("--suite", ve.suite,
                       "all | cap | point-visibility | ball-containment | confined-path");
    verify->add_option("--seed", ve.seed, "sampling seed");
    verify->add_option("--threads", ve.threads,
                       "worker threads (execution detail, not part of the report)");
    verify->add_option("--trials-scale", ve.trials_scale,
                       "scale factor on sampled trial counts");
    verify->add_option("--out", ve.out, "report file (default stdout)");
    verify->add_option("--format", ve.format, "json | csv-summary");

    CapArgs ca;
    CLI::App* cap_cmd = app.add_subcommand(
        "cap", "print exact cap fractions against the concentration bound");
    cap_cmd->add_option("--dims", ca.dims, "dimension list: a..b or comma list");
    cap_cmd->add_option("--eps", ca.eps, "epsilon grid: lo:step:hi or comma list");
    cap_cmd->add_option("--out", ca.out, "report file (default stdout)");
    cap_cmd->add_option("--format", ca.format, "json | csv-summary");

    try {
        app.parse(argc, argv);
        if (generate->parsed()) return run_generate(gen, *generate);
        if (evaluate->parsed()) return run_evaluate(ev, *evaluate);
        if (audit_cmd->parsed()) return run_audit(au, *audit_cmd);
        if (verify->parsed()) return run_verify(ve);
        if (cap_cmd->parsed()) return run_cap(ca);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
