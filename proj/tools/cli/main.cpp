// tropcount: counts rational tropical plane curves with point, multi-line
// and cross-ratio conditions.

#include <tropcount/errors.hpp>
#include <tropcount/recursion.hpp>
#include <tropcount/stable_map.hpp>
#include <tropcount_io/json_io.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed_check = 1;
constexpr int exit_bad_input = 2;

int run_eval(const std::string& path, bool trace, bool check, std::size_t jobs,
             std::uint64_t max_nodes) {
    const tropcount::Instance inst = tropcount::io::load_instance(path);
    tropcount::EvaluationOptions options;
    options.jobs = jobs;
    options.max_nodes = max_nodes;

    tropcount::Evaluator evaluator(options);
    if (trace) {
        const tropcount::TraceNode root = evaluator.trace(inst);
        std::cout << tropcount::render_trace(root);
        std::cout << root.value << '\n';
    } else {
        std::cout << evaluator.evaluate(inst) << '\n';
    }
    if (check) {
        const auto report = tropcount::evaluate_invariance_battery(inst, options);
        std::cout << report.to_string();
        if (!report.consistent) {
            std::cerr << "tropcount: invariance check failed for " << path << '\n';
            return exit_failed_check;
        }
    }
    return exit_ok;
}

int run_kontsevich(unsigned dmax) {
    for (unsigned d = 1; d <= dmax; ++d) std::cout << d << ' ' << tropcount::kontsevich(d) << '\n';
    return exit_ok;
}

int run_multcr(const std::string& path) {
    std::cout << tropcount::cross_ratio_multiplicity(tropcount::io::load_profile(path)) << '\n';
    return exit_ok;
}

int run_mult(const std::string& path, const std::string& split_edge) {
    const tropcount::StableMap map = tropcount::io::load_map(path);
    if (split_edge.empty()) {
        std::cout << tropcount::multiplicity(map) << '\n';
        return exit_ok;
    }
    const auto report = tropcount::check_split_multiplicity(map, split_edge);
    std::cout << report.to_string() << '\n';
    return report.holds ? exit_ok : exit_failed_check;
}

}  // namespace

int main(int argc, char** argv) {
    std::cout.imbue(std::locale::classic());

    CLI::App app{"Count rational tropical curves through points, lines and cross-ratios"};
    app.require_subcommand(1);

    std::string path;
    bool trace = false;
    bool check = false;
    std::size_t jobs = 1;
    std::uint64_t max_nodes = tropcount::EvaluationOptions{}.max_nodes;
    auto* eval = app.add_subcommand("eval", "evaluate an instance file");
    eval->add_option("file", path, "instance JSON")->required()->check(CLI::ExistingFile);
    eval->add_flag("--trace", trace, "print the recursion tree");
    eval->add_flag("--check", check, "run the invariance battery; fail on mismatch");
    eval->add_option("--jobs", jobs, "worker threads for top-level splits")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    eval->add_option("--max-nodes", max_nodes, "abort after this many recursion nodes")
        ->check(CLI::PositiveNumber);

    unsigned dmax = 0;
    auto* kont = app.add_subcommand("kontsevich", "print N_d for d = 1..dmax");
    kont->add_option("dmax", dmax, "largest degree")->required()->check(CLI::PositiveNumber);

    auto* multcr = app.add_subcommand("multcr", "cross-ratio multiplicity of a vertex profile");
    multcr->add_option("file", path, "profile JSON")->required()->check(CLI::ExistingFile);

    std::string split_edge;
    auto* mult = app.add_subcommand("mult", "multiplicity of an explicit stable map");
    mult->add_option("file", path, "map JSON")->required()->check(CLI::ExistingFile);
    mult->add_option("--split", split_edge, "check the splitting identity at this contracted edge");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*eval) return run_eval(path, trace, check, jobs, max_nodes);
        if (*kont) return run_kontsevich(dmax);
        if (*multcr) return run_multcr(path);
        if (*mult) return run_mult(path, split_edge);
    } catch (const tropcount::io::ParseError& e) {
        std::cerr << "tropcount: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "tropcount: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const tropcount::ResourceError& e) {
        std::cerr << "tropcount: " << e.what() << '\n';
        return exit_failed_check;
    }
    return exit_bad_input;
}
