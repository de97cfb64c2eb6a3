#pragma once

#include <tropcount/instance.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace tropcount::testing {

struct CorpusLimits {
    unsigned max_degree = 2;
    std::size_t min_crossratios = 1;
    std::size_t max_crossratios = 3;
    std::size_t max_lines = 3;
    std::size_t max_free = 2;
    std::size_t max_labels = 64;
    std::uint32_t max_weight = 3;
};

// Valid, pairwise non-isomorphic random instances; deterministic in `seed`.
std::vector<Instance> generate_corpus(std::size_t count, std::uint64_t seed,
                                      const CorpusLimits& limits = {});

Instance relabel(const Instance& inst, const std::map<Label, Label>& mapping);

// Random bijection of the instance's labels onto 1..m.
std::map<Label, Label> random_relabeling(const Instance& inst, std::uint64_t seed);

}  // namespace tropcount::testing
