#include "tropcount/instance.hpp"

#include "tropcount/errors.hpp"

#include <algorithm>
#include <sstream>

namespace tropcount {

EndCondition EndCondition::line(std::uint32_t weight) {
    if (weight == 0) throw StructuralError("line weight must be at least 1");
    return {ConditionKind::multi_line, weight};
}

CrossRatio::CrossRatio(Label a, Label b, Label c, Label d) : CrossRatio(std::array<Label, 4>{a, b, c, d}) {}

CrossRatio::CrossRatio(const std::array<Label, 4>& entries) : entries_(entries) {
    std::ranges::sort(entries_);
    if (std::ranges::adjacent_find(entries_) != entries_.end())
        throw StructuralError("cross-ratio entries must be distinct");
}

bool CrossRatio::contains(Label l) const noexcept {
    return std::ranges::find(entries_, l) != entries_.end();
}

Pairing::Pairing(Label a1, Label a2, Label b1, Label b2) : first_{a1, a2}, second_{b1, b2} {
    std::ranges::sort(first_);
    std::ranges::sort(second_);
    if (first_[0] == first_[1] || second_[0] == second_[1] || first_[0] == second_[0] ||
        first_[0] == second_[1] || first_[1] == second_[0] || first_[1] == second_[1])
        throw StructuralError("pairing labels must be distinct");
    if (second_[0] < first_[0]) std::swap(first_, second_);
}

CrossRatio Pairing::crossratio() const { return {first_[0], first_[1], second_[0], second_[1]}; }

std::string Pairing::to_string() const {
    std::ostringstream out;
    out << '(' << id_of(first_[0]) << ' ' << id_of(first_[1]) << '|' << id_of(second_[0]) << ' '
        << id_of(second_[1]) << ')';
    return out.str();
}

std::array<Pairing, 3> all_pairings(const CrossRatio& cr) {
    const auto& e = cr.entries();
    return {Pairing(e[0], e[1], e[2], e[3]), Pairing(e[0], e[2], e[1], e[3]),
            Pairing(e[0], e[3], e[1], e[2])};
}

Instance::Instance(unsigned degree, std::map<Label, EndCondition> conditions,
                   std::vector<CrossRatio> crossratios)
    : degree_(degree), conditions_(std::move(conditions)), crossratios_(std::move(crossratios)) {
    for (const auto& [l, c] : conditions_) {
        if (id_of(l) == 0) throw StructuralError("labels must be positive");
        if (c.kind == ConditionKind::multi_line && c.weight == 0)
            throw StructuralError("line weight must be at least 1");
        ++counts_[static_cast<std::size_t>(c.kind)];
    }
}

namespace {

std::vector<Label> labels_of_kind(const std::map<Label, EndCondition>& conditions,
                                  ConditionKind kind) {
    std::vector<Label> out;
    for (const auto& [l, c] : conditions)
        if (c.kind == kind) out.push_back(l);
    return out;
}

}  // namespace

std::vector<Label> Instance::points() const { return labels_of_kind(conditions_, ConditionKind::point); }
std::vector<Label> Instance::lines() const {
    return labels_of_kind(conditions_, ConditionKind::multi_line);
}
std::vector<Label> Instance::free_ends() const {
    return labels_of_kind(conditions_, ConditionKind::free);
}

std::optional<EndCondition> Instance::condition(Label l) const {
    if (auto it = conditions_.find(l); it != conditions_.end()) return it->second;
    return std::nullopt;
}

Label Instance::max_label() const {
    Label best{0};
    for (const auto& [l, c] : conditions_) best = std::max(best, l);
    for (const auto& cr : crossratios_) best = std::max(best, cr.entries()[3]);
    return best;
}

Count Instance::line_weight_product() const {
    Count product{1};
    for (const auto& [l, c] : conditions_)
        if (c.kind == ConditionKind::multi_line) product *= Count{c.weight};
    return product;
}

std::string Instance::to_string() const {
    std::ostringstream out;
    out << "d=" << degree_ << " p{";
    const char* sep = "";
    for (Label l : points()) {
        out << sep << id_of(l);
        sep = ",";
    }
    out << "} L{";
    sep = "";
    for (const auto& [l, c] : conditions_) {
        if (c.kind != ConditionKind::multi_line) continue;
        out << sep << id_of(l) << ':' << c.weight;
        sep = ",";
    }
    out << "} f{";
    sep = "";
    for (Label l : free_ends()) {
        out << sep << id_of(l);
        sep = ",";
    }
    out << '}';
    for (const auto& cr : crossratios_) {
        const auto& e = cr.entries();
        out << " cr{" << id_of(e[0]) << ',' << id_of(e[1]) << ',' << id_of(e[2]) << ','
            << id_of(e[3]) << '}';
    }
    return out.str();
}

Instance make_instance(const InstanceSpec& spec) {
    std::map<Label, EndCondition> conditions;
    auto add = [&](std::uint32_t id, EndCondition c) {
        if (!conditions.emplace(label(id), c).second)
            throw StructuralError("label " + std::to_string(id) + " appears more than once");
    };
    for (auto p : spec.points) add(p, EndCondition::point());
    for (auto [l, w] : spec.lines) add(l, EndCondition::line(w));
    for (auto f : spec.free) add(f, EndCondition::free());
    std::vector<CrossRatio> crs;
    for (const auto& q : spec.crossratios)
        crs.emplace_back(label(q[0]), label(q[1]), label(q[2]), label(q[3]));
    return {spec.degree, std::move(conditions), std::move(crs)};
}

Validation validate(const Instance& inst) {
    for (std::size_t i = 0; i < inst.crossratios().size(); ++i) {
        for (Label l : inst.crossratios()[i].entries()) {
            if (!inst.has_label(l))
                return {false, "cross-ratio " + std::to_string(i + 1) + " names label " +
                                   std::to_string(id_of(l)) + " which is not a contracted end"};
        }
    }
    const long long lhs = 3LL * inst.degree() - 1;
    const long long rhs = static_cast<long long>(inst.point_count()) +
                          static_cast<long long>(inst.crossratio_count()) -
                          static_cast<long long>(inst.free_count());
    if (lhs != rhs) {
        std::ostringstream out;
        out << "general position equation 3d - 1 = #n + l - #f fails: " << lhs
            << " != " << inst.point_count() << " + " << inst.crossratio_count() << " - "
            << inst.free_count();
        return {false, out.str()};
    }
    return {};
}

}  // namespace tropcount
