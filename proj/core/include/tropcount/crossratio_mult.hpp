#pragma once

#include "tropcount/count.hpp"
#include "tropcount/instance.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tropcount {

using Slot = std::uint32_t;
using CrossRatioId = std::uint32_t;

// One cross-ratio at a vertex: its four entry labels and the slot each
// entry's path leaves through.
struct Quadruple {
    CrossRatioId id = 0;
    std::array<Label, 4> entries{};
    std::array<Slot, 4> slots{};
    std::optional<Pairing> pairing;

    Slot slot_of(Label l) const;
    Pairing pairing_or_default() const;
};

// Quadruple whose entry labels coincide with the slot ids.
Quadruple quadruple_on_slots(CrossRatioId id, std::array<Slot, 4> slots);

class VertexProfile {
public:
    VertexProfile() = default;
    // Throws StructuralError unless #slots = 3 + r and every quadruple hits
    // four distinct slots of the profile.
    VertexProfile(std::vector<Slot> slots, std::vector<Quadruple> quadruples);

    const std::vector<Slot>& slots() const noexcept { return slots_; }
    const std::vector<Quadruple>& quadruples() const noexcept { return quadruples_; }
    std::size_t valence() const noexcept { return slots_.size(); }
    const Quadruple* find(CrossRatioId id) const;

private:
    std::vector<Slot> slots_;
    std::vector<Quadruple> quadruples_;
};

// 3-valent tree on the profile's slots. Each internal edge is stored as the
// set of leaves on the side not containing the smallest slot.
struct ResolutionEdge {
    CrossRatioId crossratio = 0;
    std::vector<Slot> side;

    friend auto operator<=>(const ResolutionEdge&, const ResolutionEdge&) = default;
};

struct ResolutionTree {
    std::vector<Slot> leaves;
    std::vector<ResolutionEdge> edges;  // sorted by cross-ratio id

    std::size_t internal_vertex_count() const noexcept { return edges.size() + 1; }
    friend auto operator<=>(const ResolutionTree&, const ResolutionTree&) = default;
};

// Resolves the target cross-ratio once. The fresh new-edge slot is one above
// the largest slot of the profile.
std::vector<std::pair<VertexProfile, VertexProfile>> resolve_once(
    const VertexProfile& profile, CrossRatioId target, const Pairing& pairing);

// Deduplicated total resolutions, sorted. Cross-ratios missing from
// `pairings` use their default pairing; `order` must list every id once.
std::vector<ResolutionTree> total_resolutions(const VertexProfile& profile,
                                              const std::map<CrossRatioId, Pairing>& pairings,
                                              const std::vector<CrossRatioId>& order);

// Number of total resolutions with canonical pairings and list order.
Count cross_ratio_multiplicity(const VertexProfile& profile);

// True when deleting each edge separates the slots of its cross-ratio's
// first pair from those of its second pair.
bool satisfies_separation(const ResolutionTree& tree, const VertexProfile& profile,
                          const std::map<CrossRatioId, Pairing>& pairings);

}  // namespace tropcount
