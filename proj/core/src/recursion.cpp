#include "tropcount/recursion.hpp"

#include "tropcount/crossratio_mult.hpp"
#include "tropcount/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace tropcount {

Count base_no_crossratios(const Instance& inst) {
    if (inst.crossratio_count() != 0)
        throw StructuralError("base_no_crossratios requires an instance without cross-ratios");
    const auto n = inst.point_count();
    const auto k = inst.line_count();
    const auto f = inst.free_count();
    if (inst.degree() == 0) {
        // A single contracted 3-valent vertex: two lines meet in a point, or
        // one point fixes it.
        if (n == 0 && k == 2 && f == 1) return inst.line_weight_product();
        if (n == 1 && k == 0 && f == 2) return Count{1};
        return Count{0};
    }
    if (f > 0) return Count{0};
    Count result = kontsevich(inst.degree());
    for (Label l : inst.lines())
        result *= Count{std::uint64_t{inst.condition(l)->weight} * inst.degree()};
    return result;
}

Count base_degree_zero(const Instance& inst) {
    if (inst.degree() != 0 || inst.crossratio_count() == 0)
        throw StructuralError("base_degree_zero requires degree 0 and at least one cross-ratio");
    const auto n = inst.point_count();
    const auto k = inst.line_count();
    const bool two_lines = n == 0 && k == 2;
    const bool one_point = n == 1 && k == 0;
    if (!two_lines && !one_point) return Count{0};
    if (inst.conditions().size() != 3 + inst.crossratio_count()) return Count{0};

    std::vector<Slot> slots;
    for (const auto& [l, c] : inst.conditions()) slots.push_back(id_of(l));
    std::vector<Quadruple> quads;
    for (std::size_t i = 0; i < inst.crossratio_count(); ++i) {
        const auto& e = inst.crossratios()[i].entries();
        quads.push_back(quadruple_on_slots(static_cast<CrossRatioId>(i + 1),
                                           {id_of(e[0]), id_of(e[1]), id_of(e[2]), id_of(e[3])}));
    }
    return inst.line_weight_product() *
           cross_ratio_multiplicity(VertexProfile(std::move(slots), std::move(quads)));
}

RootChoice default_root_choice(const Instance& inst) {
    if (inst.crossratio_count() == 0)
        throw StructuralError("no cross-ratio to recurse on");
    if (inst.point_count() == 0) {
        for (std::size_t i = inst.crossratio_count(); i-- > 0;) {
            const CrossRatio& cr = inst.crossratios()[i];
            std::vector<Label> lines;
            std::vector<Label> rest;
            for (Label l : cr.entries()) {
                const bool is_line = inst.condition(l)->kind == ConditionKind::multi_line;
                (is_line && lines.size() < 2 ? lines : rest).push_back(l);
            }
            if (lines.size() == 2) return {i, Pairing(lines[0], lines[1], rest[0], rest[1])};
        }
    }
    const std::size_t last = inst.crossratio_count() - 1;
    const auto& e = inst.crossratios()[last].entries();
    return {last, Pairing(e[0], e[1], e[2], e[3])};
}

namespace {

bool has_line_pair(const Instance& inst) {
    return std::ranges::any_of(inst.crossratios(), [&](const CrossRatio& cr) {
        return std::ranges::count_if(cr.entries(), [&](Label l) {
                   return inst.condition(l)->kind == ConditionKind::multi_line;
               }) >= 2;
    });
}

}  // namespace

struct Evaluator::State {
    EvaluationOptions options;
    std::unordered_map<std::string, Count> memo;
    mutable std::shared_mutex memo_guard;
    std::atomic<std::uint64_t> nodes{0};

    std::optional<Count> lookup(const std::string& key) const {
        std::shared_lock lock(memo_guard);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        return std::nullopt;
    }

    void store(const std::string& key, const Count& value) {
        std::unique_lock lock(memo_guard);
        memo.insert_or_assign(key, value);
    }

    Count term(const Instance& inst, const Split& split, TraceTerm* trace) {
        const SubInstancePair subs = build_subinstances(inst, split);
        TraceNode* t1 = nullptr;
        TraceNode* t2 = nullptr;
        if (trace != nullptr) {
            trace->split = split;
            trace->children.resize(2);
            t1 = &trace->children[0];
            t2 = &trace->children[1];
        }
        Count left = node(subs.side1, std::nullopt, 1, t1);
        if (left.is_zero() && trace == nullptr) return Count{0};
        Count right = node(subs.side2, std::nullopt, 1, t2);
        Count product = left * right;
        if (trace != nullptr) trace->product = product;
        return product;
    }

    Count recurse(const Instance& inst, const RootChoice& choice, int depth, TraceNode* trace) {
        const std::vector<Split> splits = enumerate_splits(inst, choice.crossratio, choice.pairing);
        if (trace != nullptr) {
            trace->chosen = choice.crossratio;
            trace->pairing = choice.pairing;
            trace->terms.resize(splits.size());
        }
        const std::size_t workers = std::min(options.jobs, splits.size());
        if (depth == 0 && workers > 1 && trace == nullptr) {
            std::vector<Count> values(splits.size());
            std::vector<std::exception_ptr> errors(workers);
            std::atomic<std::size_t> next{0};
            {
                std::vector<std::jthread> pool;
                for (std::size_t w = 0; w < workers; ++w) {
                    pool.emplace_back([&, w] {
                        try {
                            for (std::size_t i = next++; i < splits.size(); i = next++)
                                values[i] = term(inst, splits[i], nullptr);
                        } catch (...) {
                            errors[w] = std::current_exception();
                        }
                    });
                }
            }
            for (const auto& e : errors)
                if (e) std::rethrow_exception(e);
            Count total{0};
            for (const auto& v : values) total += v;
            return total;
        }
        Count total{0};
        for (std::size_t i = 0; i < splits.size(); ++i)
            total += term(inst, splits[i], trace != nullptr ? &trace->terms[i] : nullptr);
        return total;
    }

    Count node(const Instance& inst, const std::optional<RootChoice>& root, int depth,
               TraceNode* trace) {
        if (trace != nullptr) trace->instance = inst.to_string();
        std::string key;
        if (options.memoize && !root) {
            key = canonical_key(inst);
            if (auto hit = lookup(key)) {
                if (trace != nullptr) {
                    trace->memo_hit = true;
                    trace->rule = "memoized";
                    trace->value = *hit;
                }
                return *hit;
            }
        }
        if (++nodes > options.max_nodes)
            throw ResourceError("recursion node cap of " + std::to_string(options.max_nodes) +
                                " exceeded");

        Count value;
        std::string rule;
        if (inst.crossratio_count() == 0) {
            value = base_no_crossratios(inst);
            rule = "base: no cross-ratios";
        } else if (!root && inst.degree() == 0) {
            value = base_degree_zero(inst);
            rule = "base: degree zero";
        } else if (!root && inst.point_count() == 0 && !has_line_pair(inst)) {
            value = Count{0};
            rule = "no cross-ratio holds two line labels";
        } else {
            value = recurse(inst, root ? *root : default_root_choice(inst), depth, trace);
            rule = inst.point_count() > 0 ? "recursion" : "recursion without points";
        }
        if (trace != nullptr) {
            trace->rule = rule;
            trace->value = value;
        }
        if (!key.empty()) store(key, value);
        return value;
    }
};

Evaluator::Evaluator(EvaluationOptions options) : state_(std::make_unique<State>()) {
    state_->options = options;
    if (state_->options.jobs == 0) state_->options.jobs = 1;
}

Evaluator::~Evaluator() = default;

namespace {

void require_valid(const Instance& inst) {
    if (auto v = validate(inst); !v.ok) throw WellPosednessError(v.diagnostic);
}

}  // namespace

Count Evaluator::evaluate(const Instance& inst) {
    require_valid(inst);
    return state_->node(inst, std::nullopt, 0, nullptr);
}

Count Evaluator::evaluate(const Instance& inst, const RootChoice& root) {
    require_valid(inst);
    if (root.crossratio >= inst.crossratio_count())
        throw std::out_of_range("cross-ratio index out of range");
    return state_->node(inst, root, 0, nullptr);
}

TraceNode Evaluator::trace(const Instance& inst) {
    require_valid(inst);
    TraceNode root;
    state_->node(inst, std::nullopt, 0, &root);
    return root;
}

std::uint64_t Evaluator::nodes_visited() const { return state_->nodes.load(); }

Count evaluate(const Instance& inst, const EvaluationOptions& options) {
    Evaluator evaluator(options);
    return evaluator.evaluate(inst);
}

namespace {

void render(const TraceNode& node, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    out << pad << "N[" << node.instance << "] = " << node.value;
    if (node.terms.empty() && !node.chosen) out << "  (" << node.rule << ')';
    out << '\n';
    if (node.chosen) {
        out << pad << "  " << node.rule << " on cr " << (*node.chosen + 1) << ' '
            << node.pairing->to_string() << ", " << node.terms.size() << " split(s)\n";
    }
    for (const auto& term : node.terms) {
        out << pad << "  split " << to_string(term.split) << ": ";
        if (term.children.size() == 2)
            out << term.children[0].value << " * " << term.children[1].value << " = ";
        out << term.product << '\n';
        for (const auto& child : term.children) render(child, indent + 2, out);
    }
}

}  // namespace

std::string render_trace(const TraceNode& node) {
    std::ostringstream out;
    render(node, 0, out);
    return out.str();
}

InvarianceReport evaluate_invariance_battery(const Instance& inst, const EvaluationOptions& options) {
    require_valid(inst);
    if (inst.crossratio_count() == 0)
        throw StructuralError("invariance battery needs at least one cross-ratio");
    Evaluator evaluator(options);
    InvarianceReport report;
    report.common = evaluator.evaluate(inst);
    for (std::size_t i = 0; i < inst.crossratio_count(); ++i) {
        for (const Pairing& p : all_pairings(inst.crossratios()[i])) {
            RootChoice choice{i, p};
            Count value = evaluator.evaluate(inst, choice);
            if (value != report.common) report.consistent = false;
            report.variants.push_back({choice, std::move(value)});
        }
    }
    return report;
}

std::string InvarianceReport::to_string() const {
    std::ostringstream out;
    for (const auto& v : variants) {
        out << "cr " << (v.choice.crossratio + 1) << ' ' << v.choice.pairing.to_string() << ": "
            << v.value << (v.value == common ? "" : "  MISMATCH") << '\n';
    }
    out << (consistent ? "invariance ok: " : "invariance violated: ") << variants.size()
        << " variants, value " << common << '\n';
    return out.str();
}

}  // namespace tropcount
