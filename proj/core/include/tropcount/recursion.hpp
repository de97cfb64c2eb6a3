#pragma once

#include "tropcount/count.hpp"
#include "tropcount/instance.hpp"
#include "tropcount/splits.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tropcount {

struct EvaluationOptions {
    std::size_t jobs = 1;
    std::uint64_t max_nodes = 10'000'000;
    bool memoize = true;
};

struct TraceTerm;

struct TraceNode {
    std::string instance;  // Instance::to_string
    std::string rule;      // which base case or recursion branch applied
    std::optional<std::size_t> chosen;  // index of lambda_l
    std::optional<Pairing> pairing;
    std::vector<TraceTerm> terms;
    Count value;
    bool memo_hit = false;
};

struct TraceTerm {
    Split split;
    std::vector<TraceNode> children;  // side 1, side 2
    Count product;
};

std::string render_trace(const TraceNode& node);

// Choice of lambda_l and its pairing at the root only; children use the
// default rule.
struct RootChoice {
    std::size_t crossratio = 0;
    Pairing pairing;
};

class Evaluator {
public:
    explicit Evaluator(EvaluationOptions options = {});
    ~Evaluator();
    Evaluator(const Evaluator&) = delete;
    Evaluator& operator=(const Evaluator&) = delete;

    Count evaluate(const Instance& inst);
    Count evaluate(const Instance& inst, const RootChoice& root);
    // Sequential evaluation that records the recursion tree.
    TraceNode trace(const Instance& inst);

    std::uint64_t nodes_visited() const;

private:
    struct State;
    std::unique_ptr<State> state_;
};

// Throws WellPosednessError when the instance does not validate.
Count evaluate(const Instance& inst, const EvaluationOptions& options = {});

// Default lambda_l and pairing for an instance with l >= 1.
RootChoice default_root_choice(const Instance& inst);

Count base_no_crossratios(const Instance& inst);
Count base_degree_zero(const Instance& inst);
Count kontsevich(unsigned degree);

struct InvarianceVariant {
    RootChoice choice;
    Count value;
};

struct InvarianceReport {
    std::vector<InvarianceVariant> variants;
    Count common;
    bool consistent = true;

    std::string to_string() const;
};

InvarianceReport evaluate_invariance_battery(const Instance& inst,
                                             const EvaluationOptions& options = {});

}  // namespace tropcount
