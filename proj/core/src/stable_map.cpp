#include "tropcount/stable_map.hpp"

#include "tropcount/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tropcount {

MapCondition MapCondition::degenerated(const std::string& which) {
    if (which == "10") return {MapConditionKind::line, {1, 0}, 1, "L10"};
    if (which == "01") return {MapConditionKind::line, {0, 1}, 1, "L01"};
    if (which == "1-1") return {MapConditionKind::line, {1, -1}, 1, "L1-1"};
    throw StructuralError("unknown degenerated line L" + which);
}

namespace {

std::string show(Vec2 v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

}  // namespace

StableMap::StableMap(std::size_t vertex_count, std::vector<MapEdge> edges, std::vector<MapEnd> ends,
                     std::optional<Label> base, std::vector<CrossRatio> crossratios,
                     std::vector<Pairing> length_conditions)
    : adjacency_(vertex_count),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      ends_(std::move(ends)),
      base_(base),
      crossratios_(std::move(crossratios)),
      length_conditions_(std::move(length_conditions)) {
    if (vertex_count_ == 0) throw StructuralError("a map needs at least one vertex");
    if (edges_.size() + 1 != vertex_count_)
        throw StructuralError("a tree on " + std::to_string(vertex_count_) + " vertices needs " +
                              std::to_string(vertex_count_ - 1) + " bounded edges");
    std::set<std::string> names;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        MapEdge& e = edges_[i];
        if (e.name.empty()) e.name = "e" + std::to_string(i);
        if (!names.insert(e.name).second) throw StructuralError("duplicate edge name " + e.name);
        if (e.from >= vertex_count_ || e.to >= vertex_count_ || e.from == e.to)
            throw StructuralError("edge " + e.name + " has invalid endpoints");
        if (e.weight == 0) throw StructuralError("edge " + e.name + " has weight 0");
        if (!e.direction.is_zero() && std::gcd(e.direction.x, e.direction.y) != 1)
            throw StructuralError("edge " + e.name + " direction " + show(e.direction) +
                                  " is not primitive");
        adjacency_[e.from].push_back({e.to, i});
        adjacency_[e.to].push_back({e.from, i});
    }
    {
        std::vector<bool> seen(vertex_count_, false);
        std::deque<VertexId> queue{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (const auto& a : adjacency_[v]) {
                if (seen[a.vertex]) continue;
                seen[a.vertex] = true;
                ++reached;
                queue.push_back(a.vertex);
            }
        }
        if (reached != vertex_count_) throw StructuralError("the graph is not connected");
    }

    std::set<Label> labels;
    std::array<unsigned, 3> pattern{};
    const std::array<Vec2, 3> standard{Vec2{-1, 0}, Vec2{0, -1}, Vec2{1, 1}};
    for (const MapEnd& end : ends_) {
        if (end.vertex >= vertex_count_) throw StructuralError("end attached to unknown vertex");
        if (end.label && !labels.insert(*end.label).second)
            throw StructuralError("duplicate end label " + std::to_string(id_of(*end.label)));
        if (end.contracted()) {
            if (!end.label) throw StructuralError("contracted ends need a label");
            if (end.condition.kind == MapConditionKind::none)
                throw StructuralError("contracted end " + std::to_string(id_of(*end.label)) +
                                      " needs a condition");
            if (end.condition.kind == MapConditionKind::line) {
                if (end.condition.normal.is_zero() || end.condition.weight == 0)
                    throw StructuralError("line condition on end " +
                                          std::to_string(id_of(*end.label)) + " is degenerate");
                if (!end.condition.name.empty() &&
                    end.condition.normal !=
                        MapCondition::degenerated(end.condition.name.substr(1)).normal)
                    throw StructuralError("degenerated line " + end.condition.name +
                                          " has the wrong normal");
            }
        } else {
            if (end.condition.kind != MapConditionKind::none)
                throw StructuralError("only contracted ends carry conditions");
            auto it = std::ranges::find(standard, end.direction);
            if (it == standard.end())
                throw StructuralError("end direction " + show(end.direction) +
                                      " is not a standard direction");
            ++pattern[static_cast<std::size_t>(it - standard.begin())];
        }
    }
    if (pattern[0] != pattern[1] || pattern[1] != pattern[2])
        throw StructuralError("non-contracted ends do not follow the degree pattern");
    degree_ = pattern[0];

    std::vector<Vec2> balance(vertex_count_);
    for (const MapEdge& e : edges_) {
        balance[e.from] = balance[e.from] + e.vector();
        balance[e.to] = balance[e.to] + (-e.vector());
    }
    for (const MapEnd& end : ends_) balance[end.vertex] = balance[end.vertex] + end.direction;
    for (VertexId v = 0; v < vertex_count_; ++v)
        if (!balance[v].is_zero())
            throw StructuralError("vertex " + std::to_string(v) + " is not balanced: sum " +
                                  show(balance[v]));

    auto require_contracted = [&](Label l) {
        const MapEnd& e = end(l);
        if (!e.contracted())
            throw StructuralError("label " + std::to_string(id_of(l)) + " is not a contracted end");
    };
    if (base_) require_contracted(*base_);
    for (const auto& cr : crossratios_)
        for (Label l : cr.entries()) require_contracted(l);
    for (const auto& p : length_conditions_)
        for (Label l : p.crossratio().entries()) require_contracted(l);
}

const MapEnd& StableMap::end(Label l) const {
    auto it = std::ranges::find_if(ends_, [&](const MapEnd& e) { return e.label == l; });
    if (it == ends_.end()) throw StructuralError("unknown end label " + std::to_string(id_of(l)));
    return *it;
}

std::optional<std::size_t> StableMap::edge_index(const std::string& name) const {
    auto it = std::ranges::find(edges_, name, &MapEdge::name);
    if (it == edges_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

Label StableMap::max_label() const {
    Label best{0};
    for (const MapEnd& e : ends_)
        if (e.label) best = std::max(best, *e.label);
    return best;
}

std::vector<VertexId> StableMap::path(Label from, Label to) const {
    const VertexId start = end(from).vertex;
    const VertexId goal = end(to).vertex;
    std::vector<std::optional<VertexId>> parent(vertex_count_);
    std::vector<bool> seen(vertex_count_, false);
    std::deque<VertexId> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const auto& a : adjacency_[v]) {
            if (seen[a.vertex]) continue;
            seen[a.vertex] = true;
            parent[a.vertex] = v;
            queue.push_back(a.vertex);
        }
    }
    std::vector<VertexId> out{goal};
    while (out.back() != start) out.push_back(*parent[out.back()]);
    std::ranges::reverse(out);
    return out;
}

std::vector<Label> StableMap::labels_beyond(std::size_t edge, VertexId vertex) const {
    std::vector<bool> seen(vertex_count_, false);
    std::deque<VertexId> queue{vertex};
    seen[vertex] = true;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (const auto& a : adjacency_[v]) {
            if (a.edge == edge || seen[a.vertex]) continue;
            seen[a.vertex] = true;
            queue.push_back(a.vertex);
        }
    }
    std::vector<Label> out;
    for (const MapEnd& e : ends_)
        if (e.contracted() && seen[e.vertex]) out.push_back(*e.label);
    std::ranges::sort(out);
    return out;
}

bool StableMap::separates(std::size_t edge, const Pairing& pairing) const {
    const auto side = labels_beyond(edge, edges_.at(edge).from);
    auto in = [&](Label l) { return std::ranges::binary_search(side, l); };
    const bool a1 = in(pairing.first_pair()[0]);
    const bool a2 = in(pairing.first_pair()[1]);
    const bool b1 = in(pairing.second_pair()[0]);
    const bool b2 = in(pairing.second_pair()[1]);
    return a1 == a2 && b1 == b2 && a1 != b1;
}

std::optional<VertexId> find_satisfying_vertex(const StableMap& map, const Pairing& pairing) {
    auto first = map.path(pairing.first_pair()[0], pairing.first_pair()[1]);
    auto second = map.path(pairing.second_pair()[0], pairing.second_pair()[1]);
    std::ranges::sort(first);
    std::ranges::sort(second);
    std::vector<VertexId> common;
    std::ranges::set_intersection(first, second, std::back_inserter(common));
    if (common.size() != 1) return std::nullopt;
    return common.front();
}

std::optional<VertexId> find_satisfying_vertex(const StableMap& map, const CrossRatio& cr) {
    const auto& e = cr.entries();
    return find_satisfying_vertex(map, Pairing(e[0], e[1], e[2], e[3]));
}

IntMatrix ev_matrix(const StableMap& map, VertexId base) {
    if (base >= map.vertex_count()) throw StructuralError("base vertex out of range");
    const auto& edges = map.edges();

    // Contribution of every edge on the path from the base, oriented away
    // from the base.
    std::vector<std::vector<std::pair<std::size_t, Vec2>>> reach(map.vertex_count());
    std::vector<bool> seen(map.vertex_count(), false);
    std::deque<VertexId> queue{base};
    seen[base] = true;
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const MapEdge& e = edges[i];
            VertexId next;
            Vec2 step;
            if (e.from == v) {
                next = e.to;
                step = e.vector();
            } else if (e.to == v) {
                next = e.from;
                step = -e.vector();
            } else {
                continue;
            }
            if (seen[next]) continue;
            seen[next] = true;
            reach[next] = reach[v];
            reach[next].emplace_back(i, step);
            queue.push_back(next);
        }
    }

    std::vector<const MapEnd*> conditioned;
    for (const MapEnd& e : map.ends())
        if (e.contracted()) conditioned.push_back(&e);
    std::ranges::sort(conditioned, {}, [](const MapEnd* e) { return *e->label; });

    std::size_t rows = map.length_conditions().size();
    for (const MapEnd* e : conditioned) {
        if (e->condition.kind == MapConditionKind::point) rows += 2;
        if (e->condition.kind == MapConditionKind::line) rows += 1;
    }
    IntMatrix m(rows, 2 + edges.size());
    std::size_t r = 0;
    for (const MapEnd* e : conditioned) {
        const auto& path = reach[e->vertex];
        if (e->condition.kind == MapConditionKind::point) {
            m(r, 0) = 1;
            m(r + 1, 1) = 1;
            for (const auto& [edge, step] : path) {
                m(r, 2 + edge) = step.x;
                m(r + 1, 2 + edge) = step.y;
            }
            r += 2;
        } else if (e->condition.kind == MapConditionKind::line) {
            const std::int64_t w = e->condition.weight;
            const Vec2 n = e->condition.normal;
            m(r, 0) = w * n.x;
            m(r, 1) = w * n.y;
            for (const auto& [edge, step] : path) m(r, 2 + edge) = w * dot(n, step);
            r += 1;
        }
    }
    for (const Pairing& p : map.length_conditions()) {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (map.separates(i, p)) m(r, 2 + i) = 1;
        r += 1;
    }
    return m;
}

IntMatrix ev_matrix(const StableMap& map) {
    VertexId base = 0;
    if (map.base()) base = map.end(*map.base()).vertex;
    return ev_matrix(map, base);
}

VertexProfile vertex_profile(const StableMap& map, VertexId v,
                             const std::vector<CrossRatio>& crossratios) {
    // Slots: incident edges in map order, then ends at v in map order.
    std::vector<std::size_t> incident_edges;
    for (std::size_t i = 0; i < map.edges().size(); ++i)
        if (map.edges()[i].from == v || map.edges()[i].to == v) incident_edges.push_back(i);
    std::vector<std::size_t> incident_ends;
    for (std::size_t i = 0; i < map.ends().size(); ++i)
        if (map.ends()[i].vertex == v) incident_ends.push_back(i);

    std::vector<Slot> slots;
    for (std::size_t i = 0; i < incident_edges.size() + incident_ends.size(); ++i)
        slots.push_back(static_cast<Slot>(i + 1));

    auto slot_towards = [&](Label l) -> Slot {
        const MapEnd& target = map.end(l);
        if (target.vertex == v) {
            for (std::size_t i = 0; i < incident_ends.size(); ++i)
                if (map.ends()[incident_ends[i]].label == l)
                    return static_cast<Slot>(incident_edges.size() + i + 1);
        }
        // First edge on the path from v towards the end.
        std::vector<bool> seen(map.vertex_count(), false);
        std::deque<std::pair<VertexId, std::size_t>> queue;
        seen[v] = true;
        for (std::size_t i = 0; i < incident_edges.size(); ++i) {
            const MapEdge& e = map.edges()[incident_edges[i]];
            const VertexId next = e.from == v ? e.to : e.from;
            seen[next] = true;
            queue.emplace_back(next, i);
        }
        while (!queue.empty()) {
            const auto [u, slot_index] = queue.front();
            queue.pop_front();
            if (u == target.vertex) return static_cast<Slot>(slot_index + 1);
            for (const MapEdge& e : map.edges()) {
                VertexId next;
                if (e.from == u) next = e.to;
                else if (e.to == u) next = e.from;
                else continue;
                if (seen[next]) continue;
                seen[next] = true;
                queue.emplace_back(next, slot_index);
            }
        }
        throw StructuralError("end " + std::to_string(id_of(l)) + " unreachable");
    };

    std::vector<Quadruple> quads;
    for (std::size_t i = 0; i < crossratios.size(); ++i) {
        const CrossRatio& cr = crossratios[i];
        if (find_satisfying_vertex(map, cr) != v) continue;
        Quadruple q;
        q.id = static_cast<CrossRatioId>(i + 1);
        q.entries = cr.entries();
        for (int k = 0; k < 4; ++k) q.slots[k] = slot_towards(cr.entries()[k]);
        quads.push_back(q);
    }
    return {std::move(slots), std::move(quads)};
}

Count multiplicity(const StableMap& map, const std::vector<CrossRatio>& crossratios) {
    const IntMatrix m = ev_matrix(map);
    if (!m.square())
        throw StructuralError("ev-matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) +
                              "; the map is not rigid under its conditions");
    std::vector<std::size_t> per_vertex(map.vertex_count(), 0);
    for (const auto& cr : crossratios) {
        auto v = find_satisfying_vertex(map, cr);
        if (!v) {
            const auto& e = cr.entries();
            throw StructuralError("cross-ratio {" + std::to_string(id_of(e[0])) + "," +
                                  std::to_string(id_of(e[1])) + "," + std::to_string(id_of(e[2])) +
                                  "," + std::to_string(id_of(e[3])) +
                                  "} is not satisfied at any vertex");
        }
        ++per_vertex[*v];
    }
    BigInt det = determinant(m);
    Count result{det < 0 ? BigInt(-det) : det};
    for (VertexId v = 0; v < map.vertex_count(); ++v)
        if (per_vertex[v] > 0) result *= cross_ratio_multiplicity(vertex_profile(map, v, crossratios));
    return result;
}

Count multiplicity(const StableMap& map) { return multiplicity(map, map.crossratios()); }

}  // namespace tropcount
