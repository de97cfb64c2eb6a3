#pragma once

#include "tropcount/instance.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace tropcount {

enum class SplitKind : std::uint8_t { one_one, two_zero_side1_fixed, two_zero_side2_fixed };

std::string to_string(SplitKind kind);

struct SplitSide {
    unsigned degree = 0;
    std::vector<Label> points;
    std::vector<Label> lines;
    std::vector<std::size_t> crossratios;  // indices into the parent instance
    std::vector<Label> free;

    friend auto operator<=>(const SplitSide&, const SplitSide&) = default;
};

struct Split {
    SplitSide side1;
    SplitSide side2;
    SplitKind kind = SplitKind::one_one;

    friend auto operator<=>(const Split&, const Split&) = default;
};

std::string to_string(const Split& split);

// Default pairing: sorted entries, smallest two grouped.
Pairing respecting_pairing(const CrossRatio& cr);

// All splits respecting `pairing` of cross-ratio `last`, in a deterministic
// order (by d1, then by side assignment). Throws std::out_of_range for a bad
// index and StructuralError when the pairing does not match the cross-ratio.
std::vector<Split> enumerate_splits(const Instance& inst, std::size_t last,
                                    const Pairing& pairing);

struct SubInstancePair {
    Instance side1;
    Instance side2;
    Label fresh{};
};

// Sub-instances with the fresh end e attached per the split kind and
// foreign cross-ratio entries replaced by e.
SubInstancePair build_subinstances(const Instance& inst, const Split& split);

}  // namespace tropcount
