#include "tropcount/errors.hpp"
#include "tropcount/stable_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropcount {

namespace {

BigInt abs_value(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Side (0 or 1) of a label set: 3+ entries on side 1 -> 0, at most one ->
// 1; two entries straddle the edge.
std::optional<int> owning_side(const std::array<Label, 4>& entries,
                               const std::vector<Label>& side1_labels) {
    int on_side1 = 0;
    for (Label l : entries)
        if (std::ranges::binary_search(side1_labels, l)) ++on_side1;
    if (on_side1 >= 3) return 0;
    if (on_side1 <= 1) return 1;
    return std::nullopt;
}

Label replace_foreign(Label l, const std::vector<Label>& own, Label fresh) {
    return std::ranges::binary_search(own, l) ? l : fresh;
}

// 3d_i - (#n_i + #l_i - #f_i) for one side of a cut, e_i excluded.
int deficiency(const StableMap& side, Label fresh) {
    int points = 0;
    int free = 0;
    for (const MapEnd& e : side.ends()) {
        if (!e.contracted() || e.label == fresh) continue;
        if (e.condition.kind == MapConditionKind::point) ++points;
        if (e.condition.kind == MapConditionKind::free) ++free;
    }
    const int conditions =
        static_cast<int>(side.crossratios().size() + side.length_conditions().size());
    return 3 * static_cast<int>(side.degree()) - (points + conditions - free);
}

const char* type_name(EdgeType t) {
    switch (t) {
        case EdgeType::two_zero_side1_fixed: return "2/0 side 1 fixed";
        case EdgeType::two_zero_side2_fixed: return "2/0 side 2 fixed";
        case EdgeType::one_one: return "1/1";
    }
    return "?";
}

BigInt signed_det(const StableMap& map) {
    const IntMatrix m = ev_matrix(map);
    if (!m.square())
        throw StructuralError("ev-matrix of a cut side is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()));
    return determinant(m);
}

}  // namespace

CutMaps cut_edge(const StableMap& map, std::size_t edge, const MapCondition& side1,
                 const MapCondition& side2) {
    if (edge >= map.edges().size()) throw StructuralError("unknown bounded edge");
    const MapEdge& cut = map.edges()[edge];
    if (!cut.direction.is_zero())
        throw StructuralError("edge " + cut.name + " is not contracted");

    const Label fresh{id_of(map.max_label()) + 1};
    const std::array<std::vector<Label>, 2> own{map.labels_beyond(edge, cut.from),
                                                map.labels_beyond(edge, cut.to)};

    // Component membership of each vertex.
    std::vector<int> component(map.vertex_count(), 1);
    {
        std::vector<VertexId> stack{cut.from};
        component[cut.from] = 0;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (std::size_t i = 0; i < map.edges().size(); ++i) {
                if (i == edge) continue;
                const MapEdge& e = map.edges()[i];
                VertexId next;
                if (e.from == v) next = e.to;
                else if (e.to == v) next = e.from;
                else continue;
                if (component[next] == 0) continue;
                component[next] = 0;
                stack.push_back(next);
            }
        }
    }

    std::array<std::vector<CrossRatio>, 2> crs;
    for (const CrossRatio& cr : map.crossratios()) {
        auto s = owning_side(cr.entries(), own[0]);
        if (!s)
            throw StructuralError("a cross-ratio has two entries on each side of " + cut.name);
        auto e = cr.entries();
        for (Label& l : e) l = replace_foreign(l, own[*s], fresh);
        crs[*s].emplace_back(e);
    }
    std::array<std::vector<Pairing>, 2> lengths;
    for (const Pairing& p : map.length_conditions()) {
        if (map.separates(edge, p)) continue;
        auto s = owning_side(p.crossratio().entries(), own[0]);
        if (!s)
            throw StructuralError("a length condition has two entries on each side of " +
                                  cut.name);
        auto a = p.first_pair();
        auto b = p.second_pair();
        lengths[*s].emplace_back(replace_foreign(a[0], own[*s], fresh),
                                 replace_foreign(a[1], own[*s], fresh),
                                 replace_foreign(b[0], own[*s], fresh),
                                 replace_foreign(b[1], own[*s], fresh));
    }

    std::array<VertexId, 2> carrier{};
    auto build = [&](int side, const MapCondition& condition) {
        std::vector<VertexId> renumber(map.vertex_count(), 0);
        VertexId next = 0;
        for (VertexId v = 0; v < map.vertex_count(); ++v)
            if (component[v] == side) renumber[v] = next++;
        std::vector<MapEdge> edges;
        for (std::size_t i = 0; i < map.edges().size(); ++i) {
            const MapEdge& e = map.edges()[i];
            if (i == edge || component[e.from] != side) continue;
            MapEdge copy = e;
            copy.from = renumber[e.from];
            copy.to = renumber[e.to];
            edges.push_back(std::move(copy));
        }
        std::vector<MapEnd> ends;
        for (const MapEnd& e : map.ends()) {
            if (component[e.vertex] != side) continue;
            MapEnd copy = e;
            copy.vertex = renumber[e.vertex];
            ends.push_back(std::move(copy));
        }
        const VertexId attach = side == 0 ? cut.from : cut.to;
        carrier[side] = renumber[attach];
        ends.push_back(MapEnd{fresh, renumber[attach], {}, condition});
        return StableMap(next, std::move(edges), std::move(ends), fresh, crs[side],
                         lengths[side]);
    };
    StableMap first = build(0, side1);
    StableMap second = build(1, side2);
    return CutMaps{std::move(first), std::move(second), fresh, carrier[0], carrier[1]};
}

SplitCheckReport check_split_multiplicity(const StableMap& map, const std::string& edge_name) {
    const auto edge = map.edge_index(edge_name);
    if (!edge) throw StructuralError("unknown bounded edge " + edge_name);

    const CutMaps probe = cut_edge(map, *edge, MapCondition::free(), MapCondition::free());
    const int def1 = deficiency(probe.side1, probe.fresh);
    const int def2 = deficiency(probe.side2, probe.fresh);

    SplitCheckReport report;
    report.lhs = multiplicity(map);

    if ((def1 == 0 && def2 == 2) || (def1 == 2 && def2 == 0)) {
        const bool side1_fixed = def1 == 0;
        report.type = side1_fixed ? EdgeType::two_zero_side1_fixed : EdgeType::two_zero_side2_fixed;
        const MapCondition c1 = side1_fixed ? MapCondition::free() : MapCondition::point();
        const MapCondition c2 = side1_fixed ? MapCondition::point() : MapCondition::free();
        const CutMaps parts = cut_edge(map, *edge, c1, c2);
        report.rhs = multiplicity(parts.side1) * multiplicity(parts.side2);
        report.holds = report.lhs == report.rhs;
        return report;
    }
    if (def1 != 1 || def2 != 1)
        throw StructuralError("edge " + edge_name + " has deficiencies (" + std::to_string(def1) +
                              "," + std::to_string(def2) + "); it is neither 1/1 nor 2/0");

    report.type = EdgeType::one_one;
    std::map<std::string, StableMap> side1;
    std::map<std::string, StableMap> side2;
    for (const char* which : {"10", "01", "1-1"}) {
        const MapCondition line = MapCondition::degenerated(which);
        side1.emplace(which, cut_edge(map, *edge, line, MapCondition::free()).side1);
        side2.emplace(which, cut_edge(map, *edge, MapCondition::free(), line).side2);
    }
    report.side1_10 = multiplicity(side1.at("10"));
    report.side1_01 = multiplicity(side1.at("01"));
    report.side2_10 = multiplicity(side2.at("10"));
    report.side2_01 = multiplicity(side2.at("01"));
    const BigInt product1 = (report.side1_10 * report.side2_01).value();
    const BigInt product2 = (report.side1_01 * report.side2_10).value();
    report.rhs = Count{abs_value(product1 - product2)};

    auto relation = [](const std::map<std::string, StableMap>& variants) {
        return BigInt(-signed_det(variants.at("10")) + signed_det(variants.at("01")) +
                      signed_det(variants.at("1-1")));
    };
    report.relation_side1 = relation(side1);
    report.relation_side2 = relation(side2);

    const BigInt whole = abs_value(signed_det(map));
    const BigInt combined =
        abs_value(signed_det(side1.at("10")) * signed_det(side2.at("01")) -
                  signed_det(side1.at("01")) * signed_det(side2.at("10")));
    report.signed_identity = whole == combined;

    report.holds = report.lhs == report.rhs && report.relation_side1 == 0 &&
                   report.relation_side2 == 0 && report.signed_identity;
    return report;
}

std::string SplitCheckReport::to_string() const {
    std::ostringstream out;
    out << type_name(type) << ": mult(C) = " << lhs << ", rhs = " << rhs;
    if (type == EdgeType::one_one) {
        out << " (C1,10 = " << side1_10 << ", C1,01 = " << side1_01 << ", C2,10 = " << side2_10
            << ", C2,01 = " << side2_01 << "; relations " << relation_side1 << ", "
            << relation_side2 << ")";
    }
    out << (holds ? " holds" : " FAILS");
    return out.str();
}

}  // namespace tropcount
