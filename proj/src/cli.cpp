#include "rearr/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rearr/diagrams.hpp"
#include "rearr/errors.hpp"
#include "rearr/kernels.hpp"
#include "rearr/metrics.hpp"
#include "rearr/reductions.hpp"
#include "rearr/solvers.hpp"

namespace rearr::cli {

using nlohmann::json;

json to_json(const RunReport& r) {
    json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["result"] = r.result;
    j["timing_ms"] = r.timing_ms;
    if (r.seed) j["seed"] = *r.seed;
    else j["seed"] = nullptr;
    return j;
}

namespace {

void validate_permutations(const json& j) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if ((it.key() == "witness" || it.key() == "center") && it->is_string()) Permutation::parse(it->get<std::string>());
            else if (it.key() == "rows" && it->is_array())
                for (const auto& row : *it) Permutation::parse(row.get<std::string>());
            else validate_permutations(*it);
        }
    } else if (j.is_array()) {
        for (const auto& e : j) validate_permutations(e);
    }
}

}  // namespace

RunReport report_from_json(const json& j) {
    RunReport r;
    r.schema = j.at("schema").get<int>();
    if (r.schema != 1) throw ParseError(ParseError::Kind::Malformed, "unknown report schema");
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    r.result = j.at("result");
    r.timing_ms = j.at("timing_ms").get<double>();
    if (j.contains("seed") && !j["seed"].is_null()) r.seed = j["seed"].get<std::uint64_t>();
    validate_permutations(r.result);
    return r;
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) h = (h ^ c) * 1099511628211ull;
    std::ostringstream s;
    s << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return s.str();
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseError::Kind::Malformed, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(ParseError::Kind::Malformed, "cannot write " + path);
    out << text;
}

Metric metric_or_throw(const std::string& name) {
    if (auto m = parse_metric(name)) return *m;
    throw ParseError(ParseError::Kind::Malformed, "unknown metric '" + name + "'");
}

json rules_json(const std::vector<RuleApplication>& rules) {
    json out = json::array();
    for (const auto& r : rules) out.push_back({{"rule", r.rule}, {"evidence", r.evidence}});
    return out;
}

json rows_json(const PermutationSet& s) {
    json out = json::array();
    for (const auto& r : s.rows()) out.push_back(r.to_string());
    return out;
}

struct Common {
    std::string json_path;
    std::uint64_t budget = 0;

    DistanceOptions distance_options() const {
        DistanceOptions o;
        if (budget) o.limits.node_budget = budget;
        return o;
    }
};

class Runner {
public:
    Runner(std::ostream& out) : out_(out) {}

    void begin(const std::string& command) {
        report_.command = command;
        start_ = std::chrono::steady_clock::now();
    }

    void add_input(const std::string& name, const std::string& bytes) { report_.inputs[name] = digest(bytes); }

    RunReport& report() { return report_; }

    void finish(const Common& common) {
        report_.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        if (!common.json_path.empty()) write_file(common.json_path, to_json(report_).dump(2) + "\n");
    }

    std::ostream& out() { return out_; }

private:
    std::ostream& out_;
    RunReport report_;
    std::chrono::steady_clock::time_point start_;
};

class MissingBudget : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------

void run_dist(Runner& run, const Common& common, const std::string& metric_name, const std::vector<std::string>& pair,
              const std::string& file, bool boundary, const std::string& dump, bool verbose) {
    run.begin("dist");
    const Metric metric = metric_or_throw(metric_name);
    std::vector<Permutation> perms;
    if (!file.empty()) {
        const auto text = read_file(file);
        run.add_input(file, text);
        const auto rows = PermutationSet::parse(text);
        perms = rows.rows();
    }
    for (std::size_t i = 0; i < pair.size(); ++i) {
        run.add_input("arg" + std::to_string(i + 1), pair[i]);
        perms.push_back(Permutation::parse(pair[i]));
    }
    if (perms.size() != 2)
        throw ParseError(ParseError::Kind::Malformed, "dist needs exactly two permutations, got " +
                                                           std::to_string(perms.size()));
    auto opts = common.distance_options();
    opts.breakpoint_boundary = boundary;
    const auto& pi = perms[0];
    const auto& sigma = perms[1];
    const int d = distance(metric, pi, sigma, opts);
    const auto g = build_rd_diagram(pi, sigma);
    const auto x = relabel_pair(pi, sigma);
    auto& result = run.report().result;
    result = {{"metric", to_string(metric)},
              {"pi", pi.to_string()},
              {"sigma", sigma.to_string()},
              {"distance", d},
              {"cycles", cycle_count(g)},
              {"odd_cycles", odd_cycle_count(g)},
              {"inversions", inversion_count(x)}};
    if (metric == Metric::Breakpoint) result["boundary"] = boundary;
    run.out() << d << "\n";
    if (verbose) {
        run.out() << "diagram cycles: " << cycle_count(g) << "\n";
        run.out() << "diagram odd cycles: " << odd_cycle_count(g) << "\n";
        run.out() << "inversions: " << inversion_count(x) << "\n";
    }
    if (!dump.empty()) write_file(dump, g.to_dot());
    run.finish(common);
}

void run_median(Runner& run, const Common& common, const std::string& metric_name, const std::string& file,
                std::optional<int> d, const std::string& mode) {
    run.begin("median");
    const Metric metric = metric_or_throw(metric_name);
    const auto text = read_file(file);
    run.add_input(file, text);
    const auto s = PermutationSet::parse(text);
    auto& result = run.report().result;
    result = {{"metric", to_string(metric)}, {"mode", mode}};
    const auto opts = common.distance_options();
    if (mode == "exact") {
        const auto m = median_brute_force(s, metric, opts);
        if (total_distance(metric, m.witness, s, opts) != m.total) throw std::logic_error("median witness check failed");
        result["witness"] = m.witness.to_string();
        result["total"] = m.total;
        result["optimal"] = m.optimal;
        run.out() << "witness: " << m.witness.to_string() << "\ntotal: " << m.total << "\n";
    } else if (mode == "kernel") {
        if (!d) throw MissingBudget("kernel mode needs -d");
        const auto k = median_with_kernel(s, *d, metric, opts);
        result["d"] = *d;
        result["decision"] = k.yes ? "yes" : "no";
        result["kernel"] = {{"outcome", to_string(k.kernel.decision)},
                            {"rules", rules_json(k.kernel.applied_rules)},
                            {"bound", {{"columns", k.kernel.bound.columns}, {"rows", k.kernel.bound.rows}}},
                            {"reduced", {{"n", k.kernel.reduced.n()}, {"k", k.kernel.reduced.k()},
                                         {"rows", rows_json(k.kernel.reduced)}}}};
        run.out() << "decision: " << (k.yes ? "yes" : "no") << "\n";
        if (k.yes) {
            if (total_distance(metric, *k.witness, s, opts) != k.total) throw std::logic_error("kernel witness check failed");
            result["witness"] = k.witness->to_string();
            result["total"] = k.total;
            run.out() << "witness: " << k.witness->to_string() << "\ntotal: " << k.total << "\n";
        }
        run.out() << "kernel: " << to_string(k.kernel.decision) << " (" << k.kernel.reduced.n() << " columns, "
                  << k.kernel.reduced.k() << " rows)\n";
        for (const auto& r : k.kernel.applied_rules) run.out() << "  " << r.rule << ": " << r.evidence << "\n";
    } else {
        throw ParseError(ParseError::Kind::Malformed, "median mode must be exact or kernel");
    }
    run.finish(common);
}

void run_closest(Runner& run, const Common& common, const std::string& metric_name, const std::string& file,
                 std::optional<int> d, const std::string& mode) {
    run.begin("closest");
    const Metric metric = metric_or_throw(metric_name);
    const auto text = read_file(file);
    run.add_input(file, text);
    const auto s = PermutationSet::parse(text);
    auto& result = run.report().result;
    result = {{"metric", to_string(metric)}, {"mode", mode}};
    const auto opts = common.distance_options();
    if (mode == "exact") {
        const auto c = closest_brute_force(s, metric, opts);
        if (radius(metric, c.witness, s, opts) != c.radius) throw std::logic_error("closest witness check failed");
        result["witness"] = c.witness.to_string();
        result["radius"] = c.radius;
        result["optimal"] = c.optimal;
        run.out() << "witness: " << c.witness.to_string() << "\nradius: " << c.radius << "\n";
    } else if (mode == "fpt") {
        if (!d) throw MissingBudget("fpt mode needs -d");
        FptOptions fo;
        fo.distance = opts;
        if (common.budget) fo.node_budget = common.budget;
        const auto r = closest_fpt(s, *d, metric, fo);
        result["d"] = *d;
        result["decision"] = r.witness ? "yes" : "no";
        result["nodes"] = r.nodes;
        run.out() << "decision: " << (r.witness ? "yes" : "no") << "\n";
        if (r.witness) {
            const int rad = radius(metric, *r.witness, s, opts);
            result["witness"] = r.witness->to_string();
            result["radius"] = rad;
            run.out() << "witness: " << r.witness->to_string() << "\nradius: " << rad << "\n";
        }
        run.out() << "nodes: " << r.nodes << "\n";
    } else {
        throw ParseError(ParseError::Kind::Malformed, "closest mode must be exact or fpt");
    }
    run.finish(common);
}

void run_reduce(Runner& run, const Common& common, const std::string& kind, const std::string& file,
                const std::string& output) {
    run.begin("reduce");
    const auto text = read_file(file);
    run.add_input(file, text);
    PermutationSet produced;
    if (kind == "permut_bi") {
        produced = closest_string_to_sbm_instance(BinaryString::parse_lines(text));
    } else if (kind == "median_to_closest") {
        const auto s = PermutationSet::parse(text);
        if (s.k() != 3) throw ParseError(ParseError::Kind::Malformed, "median_to_closest needs exactly three rows");
        auto rows = median_to_closest_instance(s[0], s[1], s[2]);
        produced = PermutationSet({rows[0], rows[1], rows[2]});
    } else {
        throw ParseError(ParseError::Kind::Malformed, "unknown reduction '" + kind + "'");
    }
    run.report().result = {{"kind", kind}, {"rows", rows_json(produced)}};
    if (output.empty()) run.out() << produced.to_string();
    else {
        write_file(output, produced.to_string());
        run.report().result["output"] = output;
    }
    run.finish(common);
}

void run_generate(Runner& run, const Common& common, int n, int k, const std::string& metric_name, int perturbations,
                  std::uint64_t seed, const std::string& output) {
    run.begin("generate");
    const Metric metric = metric_or_throw(metric_name);
    if (n < 1 || k < 1) throw ParseError(ParseError::Kind::Malformed, "generate needs n, k >= 1");
    if (perturbations < 0) throw ParseError(ParseError::Kind::Malformed, "perturbations must be >= 0");
    std::mt19937_64 rng(seed);
    std::vector<int> c = identity(n).vec();
    std::shuffle(c.begin(), c.end(), rng);
    const Permutation center(c);
    // Breakpoint has no moves of its own; it is perturbed with transpositions.
    const Metric mover = metric == Metric::Breakpoint ? Metric::Transposition : metric;
    const auto moves = n >= 2 ? enumerate_moves(mover, center) : std::vector<Move>{};
    std::vector<Permutation> rows;
    for (int i = 0; i < k; ++i) {
        Permutation r = center;
        for (int p = 0; p < perturbations && !moves.empty(); ++p) {
            std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
            r = apply_move(r, moves[pick(rng)]);
        }
        rows.push_back(r);
    }
    const PermutationSet s(rows);
    std::ostringstream text;
    text << "# center: " << center.to_string() << "\n# seed: " << seed << "\n" << s.to_string();
    run.report().seed = seed;
    run.report().result = {{"n", n},
                           {"k", k},
                           {"metric", to_string(metric)},
                           {"perturbations", perturbations},
                           {"center", center.to_string()},
                           {"rows", rows_json(s)}};
    if (output.empty()) run.out() << text.str();
    else {
        write_file(output, text.str());
        run.report().result["output"] = output;
        run.out() << "# center: " << center.to_string() << "\n# seed: " << seed << "\n";
    }
    run.finish(common);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rearrangement distances, medians and closest permutations"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--json", common.json_path, "Write a JSON report to this path");
        sub->add_option("--budget", common.budget, "Node budget for exact searches");
    };

    std::string metric = "swap", file, mode = "exact", dump, kind, output;
    std::vector<std::string> pair;
    bool boundary = false, verbose = false;
    std::optional<int> d;
    int n = 5, k = 3, perturbations = 0;
    std::uint64_t seed = 1;

    auto* dist = app.add_subcommand("dist", "Distance between two permutations");
    dist->add_option("--metric", metric, "bp, swap, bi, transposition or sbm")->required();
    dist->add_option("perms", pair, "Two permutations, each one quoted string");
    dist->add_option("--file", file, "File holding the two permutations");
    dist->add_flag("--boundary", boundary, "Breakpoint: count the boundary pairs as well");
    dist->add_option("--dump-diagram", dump, "Write the reality-and-desire diagram as DOT");
    dist->add_flag("-v,--verbose", verbose, "Print cycle and inversion counts");
    add_common(dist);

    auto* median = app.add_subcommand("median", "Median permutation");
    median->add_option("--metric", metric)->required();
    median->add_option("file", file)->required();
    median->add_option("-d", d, "Budget for kernel mode");
    median->add_option("--mode", mode, "exact or kernel");
    add_common(median);

    auto* closest = app.add_subcommand("closest", "Closest permutation");
    closest->add_option("--metric", metric)->required();
    closest->add_option("file", file)->required();
    closest->add_option("-d", d, "Radius for fpt mode");
    closest->add_option("--mode", mode, "exact or fpt");
    add_common(closest);

    auto* reduce = app.add_subcommand("reduce", "Build a reduced instance");
    reduce->add_option("kind", kind, "permut_bi or median_to_closest")->required();
    reduce->add_option("file", file)->required();
    reduce->add_option("-o,--output", output, "Output file (default: stdout)");
    add_common(reduce);

    auto* generate = app.add_subcommand("generate", "Random instance around a hidden center");
    generate->add_option("-n", n)->required();
    generate->add_option("-k", k)->required();
    generate->add_option("--metric", metric);
    generate->add_option("-p,--perturbations", perturbations);
    generate->add_option("--seed", seed);
    generate->add_option("-o,--output", output);
    add_common(generate);

    std::vector<const char*> argv{"rearr"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    Runner runner(out);
    try {
        if (*dist) run_dist(runner, common, metric, pair, file, boundary, dump, verbose);
        else if (*median) run_median(runner, common, metric, file, d, mode);
        else if (*closest) run_closest(runner, common, metric, file, d, mode);
        else if (*reduce) run_reduce(runner, common, kind, file, output);
        else if (*generate) run_generate(runner, common, n, k, metric, perturbations, seed, output);
    } catch (const SearchBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const MissingBudget& e) {
        err << "error: " << e.what() << "\n";
        return kMissingBudget;
    } catch (const UnsupportedMetric& e) {
        err << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kOk;
}

}  // namespace rearr::cli
