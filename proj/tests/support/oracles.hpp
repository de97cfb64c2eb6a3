#pragma once

#include <tropcount/instance.hpp>
#include <tropcount/splits.hpp>

#include <string>
#include <vector>

namespace tropcount::testing {

// Every (label side, cross-ratio side, d1) assignment filtered by the split
// rules; sorted.
std::vector<Split> brute_force_splits(const Instance& inst, std::size_t last,
                                      const Pairing& pairing);
// Same with explicit pairs, so the larger label may sit on side 1.
std::vector<Split> brute_force_splits(const Instance& inst, std::size_t last,
                                      std::array<Label, 2> side1_pair,
                                      std::array<Label, 2> side2_pair);

// Least encoding over all relabelings onto 1..m. Exponential; keep m small.
std::string brute_force_canonical_form(const Instance& inst);

}  // namespace tropcount::testing
