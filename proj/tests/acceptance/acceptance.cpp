// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include "corpus.hpp"
#include "oracles.hpp"

#include <tropcount/crossratio_mult.hpp>
#include <tropcount/recursion.hpp>
#include <tropcount/splits.hpp>
#include <tropcount/stable_map.hpp>
#include <tropcount_io/json_io.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;
using namespace tropcount;

namespace {

const fs::path data_dir{TROPCOUNT_TEST_DATA};
const std::string cli{TROPCOUNT_CLI};

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Run {
    int status = -1;
    std::string out;
};

std::string quote(const std::string& s) { return "'" + s + "'"; }

Run run(const std::string& args) {
    Run result;
    const std::string command = quote(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
    const int status = pclose(pipe);
    result.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data(const char* name) { return quote((data_dir / name).string()); }

std::vector<Instance> acceptance_corpus() { return tropcount::testing::generate_corpus(60, 2026); }

Outcome kontsevich_table() {
    const Run r = run("kontsevich 5");
    const std::string expected = "1 1\n2 1\n3 12\n4 620\n5 87304\n";
    return {r.status == 0 && r.out == expected, "N_1..N_5 = 1, 1, 12, 620, 87304"};
}

Outcome worked_example() {
    const Run unit = run("eval " + data("worked_example.json"));
    const Run weighted = run("eval " + data("worked_example_weighted.json"));
    const Run traced = run("eval --trace " + data("worked_example.json"));

    Evaluator evaluator;
    const TraceNode root = evaluator.trace(io::load_instance(data_dir / "worked_example.json"));
    bool shape = root.terms.size() == 1 &&
                 root.terms[0].split.kind == SplitKind::two_zero_side1_fixed;
    if (shape) {
        const TraceNode& left = root.terms[0].children.at(0);
        const Split& inner = left.terms.empty() ? Split{} : left.terms[0].split;
        shape = left.terms.size() == 1 && inner.kind == SplitKind::one_one &&
                inner.side1.degree == 1 && inner.side2.degree == 0 &&
                inner.side1.points == std::vector<Label>{label(1), label(2)} &&
                inner.side2.lines == std::vector<Label>{label(4)} &&
                inner.side2.free == std::vector<Label>{label(6)};
    }
    const bool trace_text =
        traced.out.find("(d=1 n={1,2} L={4} cr={1} f={} | d=1 n={3} L={5} cr={} f={}) 2/0 side 1 fixed") !=
            std::string::npos &&
        traced.out.find("(d=1 n={1,2} L={} cr={} f={} | d=0 n={} L={4} cr={} f={6}) 1/1") !=
            std::string::npos;
    const bool pass = unit.status == 0 && unit.out == "1\n" && weighted.status == 0 &&
                      weighted.out == "6\n" && shape && trace_text;
    return {pass, "weights (1,1) -> " + unit.out.substr(0, unit.out.find('\n')) + ", (2,3) -> " +
                      weighted.out.substr(0, weighted.out.find('\n')) +
                      ", trace has the 2/0 then 1/1 split"};
}

Outcome crossratio_multiplicities() {
    const Run five = run("multcr " + data("profile_5slot.json"));
    const Run six = run("multcr " + data("profile_6slot.json"));
    return {five.out == "1\n" && six.out == "2\n" && five.status == 0 && six.status == 0,
            "5-slot -> 1, 6-slot -> 2"};
}

Outcome ev_matrix_oracle() {
    const Run c01 = run("mult " + data("map_c2_01.json"));
    const Run c10 = run("mult " + data("map_c2_10.json"));
    return {c01.out == "1\n" && c10.out == "0\n" && c01.status == 0 && c10.status == 0,
            "C_{2,01} -> 1, C_{2,10} -> 0"};
}

Outcome invariance_battery(const std::vector<Instance>& corpus) {
    std::size_t mismatches = 0;
    std::size_t variants = 0;
    for (const Instance& inst : corpus) {
        const auto report = evaluate_invariance_battery(inst);
        variants += report.variants.size();
        if (!report.consistent) {
            ++mismatches;
            std::cerr << "mismatch: " << inst.to_string() << "\n" << report.to_string();
        }
    }
    return {corpus.size() >= 50 && mismatches == 0,
            std::to_string(corpus.size()) + " instances, " + std::to_string(variants) +
                " variants, " + std::to_string(mismatches) + " mismatches"};
}

Outcome crossratio_invariance() {
    std::size_t profiles = 0;
    std::size_t runs = 0;
    std::size_t failures = 0;
    for (std::size_t r = 0; r <= 3; ++r) {
        const std::size_t n = 3 + r;
        std::vector<Slot> slots(n);
        std::iota(slots.begin(), slots.end(), 1U);
        std::vector<std::array<Slot, 4>> subsets;
        for (Slot a = 1; a <= n; ++a)
            for (Slot b = a + 1; b <= n; ++b)
                for (Slot c = b + 1; c <= n; ++c)
                    for (Slot d = c + 1; d <= n; ++d) subsets.push_back({a, b, c, d});
        std::vector<bool> choose(subsets.size(), false);
        std::fill(choose.begin(), choose.begin() + static_cast<long>(r), true);
        do {
            std::vector<Quadruple> quads;
            for (std::size_t i = 0; i < subsets.size(); ++i)
                if (choose[i])
                    quads.push_back(
                        quadruple_on_slots(static_cast<CrossRatioId>(quads.size() + 1), subsets[i]));
            const VertexProfile profile(slots, quads);
            ++profiles;

            std::vector<CrossRatioId> order;
            for (const auto& q : quads) order.push_back(q.id);
            std::set<std::size_t> sizes;
            std::size_t combos = 1;
            for (std::size_t i = 0; i < r; ++i) combos *= 3;
            do {
                for (std::size_t combo = 0; combo < combos; ++combo) {
                    std::map<CrossRatioId, Pairing> pairings;
                    std::size_t rest = combo;
                    for (const auto& q : quads) {
                        pairings.emplace(q.id, all_pairings(CrossRatio(q.entries))[rest % 3]);
                        rest /= 3;
                    }
                    const auto trees = total_resolutions(profile, pairings, order);
                    sizes.insert(trees.size());
                    ++runs;
                    for (const auto& t : trees)
                        if (!satisfies_separation(t, profile, pairings) ||
                            t.internal_vertex_count() != n - 2)
                            ++failures;
                }
            } while (std::ranges::next_permutation(order).found);
            if (sizes.size() != 1) ++failures;
        } while (std::prev_permutation(choose.begin(), choose.end()));
    }
    return {failures == 0, std::to_string(profiles) + " profiles, " + std::to_string(runs) +
                               " order/pairing runs, " + std::to_string(failures) + " failures"};
}

Outcome split_oracle(const std::vector<Instance>& corpus) {
    std::size_t instances = 0;
    std::size_t cases = 0;
    std::size_t discrepancies = 0;
    for (const Instance& inst : corpus) {
        if (inst.conditions().size() > 8) continue;
        ++instances;
        for (std::size_t last = 0; last < inst.crossratio_count(); ++last)
            for (const Pairing& p : all_pairings(inst.crossratios()[last])) {
                auto fast = enumerate_splits(inst, last, p);
                std::ranges::sort(fast);
                ++cases;
                if (fast != tropcount::testing::brute_force_splits(inst, last, p)) ++discrepancies;
            }
    }
    return {instances > 0 && discrepancies == 0,
            std::to_string(instances) + " instances, " + std::to_string(cases) +
                " (lambda_l, pairing) cases, " + std::to_string(discrepancies) + " discrepancies"};
}

Outcome splitting_identities() {
    const auto two_zero = check_split_multiplicity(io::load_map(data_dir / "map_split_20.json"), "e");
    const auto one_one = check_split_multiplicity(io::load_map(data_dir / "map_split_11.json"), "e");
    const Run cli_two_zero = run("mult --split e " + data("map_split_20.json"));
    const Run cli_one_one = run("mult --split e " + data("map_split_11.json"));
    const bool pass = two_zero.holds && two_zero.type != EdgeType::one_one && one_one.holds &&
                      one_one.type == EdgeType::one_one && one_one.relation_side1 == 0 &&
                      one_one.relation_side2 == 0 && one_one.side2_10.is_zero() &&
                      cli_two_zero.status == 0 && cli_one_one.status == 0;
    return {pass, "2/0: " + two_zero.lhs.to_string() + " = " + two_zero.rhs.to_string() +
                      "; 1/1: " + one_one.lhs.to_string() + " = " + one_one.rhs.to_string() +
                      ", relations " + one_one.relation_side1.str() + ", " +
                      one_one.relation_side2.str()};
}

Outcome determinism(const std::vector<Instance>& corpus) {
    const fs::path dir = fs::temp_directory_path() / ("tropcount-corpus-" + std::to_string(getpid()));
    fs::create_directories(dir);
    std::string sequential;
    std::string parallel;
    bool ok = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const fs::path file = dir / ("instance_" + std::to_string(i) + ".json");
        std::ofstream(file) << io::write_instance(corpus[i]);
        const Run a = run("eval --jobs 1 " + quote(file.string()));
        const Run b = run("eval --jobs 8 " + quote(file.string()));
        ok = ok && a.status == 0 && b.status == 0;
        sequential += a.out;
        parallel += b.out;
    }
    fs::remove_all(dir);
    return {ok && sequential == parallel && !sequential.empty(),
            std::to_string(corpus.size()) + " files, " + std::to_string(sequential.size()) +
                " bytes of stdout each"};
}

}  // namespace

int main() {
    const std::vector<Instance> corpus = acceptance_corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Kontsevich table", kontsevich_table},
        {"worked example end-to-end", worked_example},
        {"cross-ratio multiplicities", crossratio_multiplicities},
        {"ev-matrix oracle", ev_matrix_oracle},
        {"invariance battery", [&] { return invariance_battery(corpus); }},
        {"mult_cr invariance", crossratio_invariance},
        {"split enumerator oracle", [&] { return split_oracle(corpus); }},
        {"multiplicity splitting identities", splitting_identities},
        {"determinism across --jobs", [&] { return determinism(corpus); }},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (outcome.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first
             << ": " << outcome.detail << " (" << seconds << " s)";
        std::cout << line.str() << std::endl;
        if (!outcome.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
