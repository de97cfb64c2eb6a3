#pragma once

#include "tropcount/count.hpp"
#include "tropcount/crossratio_mult.hpp"
#include "tropcount/determinant.hpp"
#include "tropcount/instance.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tropcount {

struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;

    bool is_zero() const noexcept { return x == 0 && y == 0; }
    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(std::int64_t k, Vec2 a) { return {k * a.x, k * a.y}; }
    friend std::int64_t dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
    friend bool operator==(Vec2, Vec2) = default;
};

enum class MapConditionKind : std::uint8_t { none, point, line, free };

// Condition attached to a contracted end. Lines carry the covector normal
// to the ray of the multi line containing the marked point.
struct MapCondition {
    MapConditionKind kind = MapConditionKind::none;
    Vec2 normal;
    std::uint32_t weight = 1;
    std::string name;  // "L10", "L01", "L1-1" for degenerated lines

    static MapCondition point() { return {MapConditionKind::point, {}, 1, {}}; }
    static MapCondition free() { return {MapConditionKind::free, {}, 1, {}}; }
    static MapCondition line(Vec2 normal, std::uint32_t weight = 1) {
        return {MapConditionKind::line, normal, weight, {}};
    }
    // "10", "01" or "1-1".
    static MapCondition degenerated(const std::string& which);
};

using VertexId = std::uint32_t;

struct MapEnd {
    std::optional<Label> label;  // required for contracted ends
    VertexId vertex = 0;
    Vec2 direction;              // zero for contracted ends
    MapCondition condition;

    bool contracted() const noexcept { return direction.is_zero(); }
};

struct MapEdge {
    std::string name;
    VertexId from = 0;
    VertexId to = 0;
    Vec2 direction;  // primitive, oriented from -> to; zero if contracted
    std::uint32_t weight = 1;

    Vec2 vector() const { return static_cast<std::int64_t>(weight) * direction; }
};

// Explicit tropical stable map: a tree with vertices 0..n-1, bounded edges
// and ends. Construction validates tree shape, balancing, the degree
// pattern of non-contracted ends and degenerated line normals.
class StableMap {
public:
    StableMap(std::size_t vertex_count, std::vector<MapEdge> edges, std::vector<MapEnd> ends,
              std::optional<Label> base, std::vector<CrossRatio> crossratios = {},
              std::vector<Pairing> length_conditions = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<MapEdge>& edges() const noexcept { return edges_; }
    const std::vector<MapEnd>& ends() const noexcept { return ends_; }
    std::optional<Label> base() const noexcept { return base_; }
    const std::vector<CrossRatio>& crossratios() const noexcept { return crossratios_; }
    // Non-degenerated cross-ratios whose lengths are fixed; each adds one
    // row to the ev-matrix.
    const std::vector<Pairing>& length_conditions() const noexcept { return length_conditions_; }
    unsigned degree() const noexcept { return degree_; }

    const MapEnd& end(Label l) const;  // throws StructuralError if unknown
    std::optional<std::size_t> edge_index(const std::string& name) const;
    Label max_label() const;

    // Vertices on the path between the vertices carrying two ends.
    std::vector<VertexId> path(Label from, Label to) const;
    // True when removing the edge separates {a1,a2} from {b1,b2}.
    bool separates(std::size_t edge, const Pairing& pairing) const;
    // Labels of contracted ends in the component of `vertex` after removing
    // `edge`.
    std::vector<Label> labels_beyond(std::size_t edge, VertexId vertex) const;

private:
    struct Adjacent {
        VertexId vertex;
        std::size_t edge;
    };
    std::vector<std::vector<Adjacent>> adjacency_;
    std::size_t vertex_count_ = 0;
    std::vector<MapEdge> edges_;
    std::vector<MapEnd> ends_;
    std::optional<Label> base_;
    std::vector<CrossRatio> crossratios_;
    std::vector<Pairing> length_conditions_;
    unsigned degree_ = 0;

};

// Vertex where the cross-ratio is satisfied, using the default pairing or
// an explicit one.
std::optional<VertexId> find_satisfying_vertex(const StableMap& map, const CrossRatio& cr);
std::optional<VertexId> find_satisfying_vertex(const StableMap& map, const Pairing& pairing);

// Columns: base x, base y, then bounded edges in map order. Rows: ends in
// ascending label order (two for points, one for lines, none for free),
// then one row per length condition.
IntMatrix ev_matrix(const StableMap& map);
IntMatrix ev_matrix(const StableMap& map, VertexId base);

// Profile of a vertex: slots 1..valence over incident edges then ends (map
// order), quadruples for the cross-ratios satisfied there.
VertexProfile vertex_profile(const StableMap& map, VertexId v,
                             const std::vector<CrossRatio>& crossratios);

// |det ev_matrix| times the product of vertex cross-ratio multiplicities.
// Throws StructuralError for a non-square matrix or an unsatisfied
// cross-ratio.
Count multiplicity(const StableMap& map, const std::vector<CrossRatio>& crossratios);
Count multiplicity(const StableMap& map);

enum class EdgeType : std::uint8_t { two_zero_side1_fixed, two_zero_side2_fixed, one_one };

struct CutMaps {
    StableMap side1;
    StableMap side2;
    Label fresh{};
    VertexId v1 = 0;  // vertex carrying e_1 in side1 (renumbered)
    VertexId v2 = 0;
};

struct SplitCheckReport {
    EdgeType type = EdgeType::one_one;
    Count lhs;  // mult(C)
    Count rhs;
    bool holds = false;
    // 1/1 only: multiplicities of the C_{i,st} variants and relation values.
    Count side1_10, side1_01, side2_10, side2_01;
    BigInt relation_side1 = 0;
    BigInt relation_side2 = 0;
    bool signed_identity = true;

    std::string to_string() const;
};

// Cuts a contracted bounded edge and checks the multiplicity identity for
// its 2/0 or 1/1 type.
SplitCheckReport check_split_multiplicity(const StableMap& map, const std::string& edge);

// Splits along a contracted bounded edge; e_i carries `side1`/`side2`.
CutMaps cut_edge(const StableMap& map, std::size_t edge, const MapCondition& side1,
                 const MapCondition& side2);

}  // namespace tropcount
