#pragma once

#include "tropcount/count.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropcount {

enum class Label : std::uint32_t {};

constexpr Label label(std::uint32_t id) noexcept { return Label{id}; }
constexpr std::uint32_t id_of(Label l) noexcept { return static_cast<std::uint32_t>(l); }

enum class ConditionKind : std::uint8_t { point, multi_line, free };

struct EndCondition {
    ConditionKind kind = ConditionKind::free;
    std::uint32_t weight = 1;  // meaningful for multi_line only

    static EndCondition point() { return {ConditionKind::point, 1}; }
    static EndCondition line(std::uint32_t weight = 1);
    static EndCondition free() { return {ConditionKind::free, 1}; }

    friend bool operator==(const EndCondition&, const EndCondition&) = default;
};

// Degenerated cross-ratio: an unordered set of four distinct labels,
// stored sorted.
class CrossRatio {
public:
    CrossRatio(Label a, Label b, Label c, Label d);
    explicit CrossRatio(const std::array<Label, 4>& entries);

    const std::array<Label, 4>& entries() const noexcept { return entries_; }
    bool contains(Label l) const noexcept;

    friend bool operator==(const CrossRatio&, const CrossRatio&) = default;
    friend auto operator<=>(const CrossRatio&, const CrossRatio&) = default;

private:
    std::array<Label, 4> entries_;
};

// Unordered pair of pairs; normalized so each pair is sorted and the pair
// holding the minimum label comes first.
class Pairing {
public:
    Pairing(Label a1, Label a2, Label b1, Label b2);

    const std::array<Label, 2>& first_pair() const noexcept { return first_; }
    const std::array<Label, 2>& second_pair() const noexcept { return second_; }
    CrossRatio crossratio() const;
    std::string to_string() const;

    friend bool operator==(const Pairing&, const Pairing&) = default;
    friend auto operator<=>(const Pairing&, const Pairing&) = default;

private:
    std::array<Label, 2> first_;
    std::array<Label, 2> second_;
};

// The three pairings of a cross-ratio, the sorted-and-grouped one first.
std::array<Pairing, 3> all_pairings(const CrossRatio& cr);

class Instance {
public:
    Instance() = default;
    Instance(unsigned degree, std::map<Label, EndCondition> conditions,
             std::vector<CrossRatio> crossratios);

    unsigned degree() const noexcept { return degree_; }
    const std::map<Label, EndCondition>& conditions() const noexcept { return conditions_; }
    const std::vector<CrossRatio>& crossratios() const noexcept { return crossratios_; }

    std::vector<Label> points() const;
    std::vector<Label> lines() const;
    std::vector<Label> free_ends() const;
    std::size_t point_count() const noexcept { return counts_[0]; }
    std::size_t line_count() const noexcept { return counts_[1]; }
    std::size_t free_count() const noexcept { return counts_[2]; }
    std::size_t crossratio_count() const noexcept { return crossratios_.size(); }

    bool has_label(Label l) const { return conditions_.contains(l); }
    std::optional<EndCondition> condition(Label l) const;
    Label max_label() const;
    Count line_weight_product() const;

    // Compact single-line rendering, e.g. "d=1 p{1,2} L{4:1} f{6} cr{1,2,4,6}".
    std::string to_string() const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    unsigned degree_ = 0;
    std::map<Label, EndCondition> conditions_;
    std::vector<CrossRatio> crossratios_;
    std::array<std::size_t, 3> counts_{};
};

// Convenience builder used by tests and tools.
struct InstanceSpec {
    unsigned degree = 0;
    std::vector<std::uint32_t> points;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> lines;  // label, weight
    std::vector<std::uint32_t> free;
    std::vector<std::array<std::uint32_t, 4>> crossratios;
};

// Throws StructuralError on duplicate labels or malformed cross-ratios.
Instance make_instance(const InstanceSpec& spec);

struct Validation {
    bool ok = true;
    std::string diagnostic;
};

// Checks 3d - 1 = #n + l - #f and that every cross-ratio names four
// contracted ends of the instance.
Validation validate(const Instance& inst);

// Opaque key, equal for instances related by a kind- and weight-preserving
// relabeling that maps cross-ratios onto cross-ratios.
std::string canonical_key(const Instance& inst);

}  // namespace tropcount
