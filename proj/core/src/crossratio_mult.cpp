#include "tropcount/crossratio_mult.hpp"

#include "tropcount/errors.hpp"

#include <algorithm>
#include <set>

namespace tropcount {

Slot Quadruple::slot_of(Label l) const {
    for (int i = 0; i < 4; ++i)
        if (entries[i] == l) return slots[i];
    throw StructuralError("label " + std::to_string(id_of(l)) + " is not an entry of cross-ratio " +
                          std::to_string(id));
}

Pairing Quadruple::pairing_or_default() const {
    if (pairing) return *pairing;
    std::array<Label, 4> e = entries;
    std::ranges::sort(e);
    return {e[0], e[1], e[2], e[3]};
}

Quadruple quadruple_on_slots(CrossRatioId id, std::array<Slot, 4> slots) {
    Quadruple q;
    q.id = id;
    q.slots = slots;
    for (int i = 0; i < 4; ++i) q.entries[i] = label(slots[i]);
    return q;
}

VertexProfile::VertexProfile(std::vector<Slot> slots, std::vector<Quadruple> quadruples)
    : slots_(std::move(slots)), quadruples_(std::move(quadruples)) {
    std::vector<Slot> sorted = slots_;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end())
        throw StructuralError("profile slots must be distinct");
    if (slots_.size() != 3 + quadruples_.size())
        throw StructuralError("profile has " + std::to_string(slots_.size()) + " slots but " +
                              std::to_string(quadruples_.size()) +
                              " cross-ratios; expected #slots = 3 + r");
    std::set<CrossRatioId> ids;
    for (const auto& q : quadruples_) {
        if (!ids.insert(q.id).second)
            throw StructuralError("duplicate cross-ratio id " + std::to_string(q.id));
        std::array<Slot, 4> s = q.slots;
        std::ranges::sort(s);
        if (std::ranges::adjacent_find(s) != s.end())
            throw StructuralError("cross-ratio " + std::to_string(q.id) +
                                  " must hit four distinct slots");
        for (Slot x : s)
            if (!std::ranges::binary_search(sorted, x))
                throw StructuralError("cross-ratio " + std::to_string(q.id) + " uses unknown slot " +
                                      std::to_string(x));
        std::array<Label, 4> e = q.entries;
        std::ranges::sort(e);
        if (std::ranges::adjacent_find(e) != e.end())
            throw StructuralError("cross-ratio " + std::to_string(q.id) + " repeats an entry");
    }
}

const Quadruple* VertexProfile::find(CrossRatioId id) const {
    auto it = std::ranges::find(quadruples_, id, &Quadruple::id);
    return it == quadruples_.end() ? nullptr : &*it;
}

namespace {

struct Part {
    std::vector<Slot> side1;
    std::vector<Slot> side2;
    std::vector<Quadruple> quads1;
    std::vector<Quadruple> quads2;
};

Slot fresh_slot(const std::vector<Slot>& slots) { return *std::ranges::max_element(slots) + 1; }

// Valid partitions for resolving `target` with `pairing`; children use
// `fresh` for the new edge.
std::vector<Part> partitions(const std::vector<Slot>& slots, const std::vector<Quadruple>& quads,
                             CrossRatioId target, const Pairing& pairing, Slot fresh) {
    auto target_it = std::ranges::find(quads, target, &Quadruple::id);
    if (target_it == quads.end())
        throw StructuralError("cross-ratio " + std::to_string(target) + " is not at this vertex");
    if (pairing.crossratio() != CrossRatio(target_it->entries))
        throw StructuralError("pairing " + pairing.to_string() + " does not match cross-ratio " +
                              std::to_string(target));

    const Slot a1 = target_it->slot_of(pairing.first_pair()[0]);
    const Slot a2 = target_it->slot_of(pairing.first_pair()[1]);
    const Slot b1 = target_it->slot_of(pairing.second_pair()[0]);
    const Slot b2 = target_it->slot_of(pairing.second_pair()[1]);

    std::vector<Slot> loose;
    for (Slot s : slots)
        if (s != a1 && s != a2 && s != b1 && s != b2) loose.push_back(s);
    if (loose.size() >= 63) throw StructuralError("vertex valence too large");

    std::vector<Part> out;
    const std::uint64_t combos = std::uint64_t{1} << loose.size();
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
        Part part;
        part.side1 = {a1, a2};
        part.side2 = {b1, b2};
        for (std::size_t i = 0; i < loose.size(); ++i)
            (((bits >> i) & 1U) != 0U ? part.side2 : part.side1).push_back(loose[i]);
        auto on_side1 = [&](Slot s) { return std::ranges::find(part.side1, s) != part.side1.end(); };

        bool valid = true;
        for (const auto& q : quads) {
            if (q.id == target) continue;
            const auto c = std::ranges::count_if(q.slots, on_side1);
            if (c == 2) {
                valid = false;
                break;
            }
            Quadruple child = q;
            const bool to_side1 = c >= 3;
            for (Slot& s : child.slots)
                if (on_side1(s) != to_side1) s = fresh;
            (to_side1 ? part.quads1 : part.quads2).push_back(child);
        }
        if (!valid) continue;
        if (part.side1.size() + 1 != 3 + part.quads1.size()) continue;
        if (part.side2.size() + 1 != 3 + part.quads2.size()) continue;
        std::ranges::sort(part.side1);
        std::ranges::sort(part.side2);
        out.push_back(std::move(part));
    }
    return out;
}

using Mask = std::uint64_t;
using EdgeCode = std::pair<Mask, CrossRatioId>;
using TreeCode = std::vector<EdgeCode>;

struct Resolver {
    const std::map<CrossRatioId, Pairing>& pairings;
    std::map<CrossRatioId, std::size_t> rank;
    Mask full = 0;

    Pairing pairing_for(const Quadruple& q) const {
        if (auto it = pairings.find(q.id); it != pairings.end()) return it->second;
        return q.pairing_or_default();
    }

    Mask canonical(Mask m) const { return (m & 1U) != 0U ? full ^ m : m; }

    // All trees (as edge codes) resolving a vertex whose slots stand for
    // the given leaf masks.
    std::vector<TreeCode> resolve(const std::vector<Slot>& slots, const std::map<Slot, Mask>& masks,
                                  const std::vector<Quadruple>& quads) const {
        if (quads.empty()) return {TreeCode{}};
        const Quadruple& first = *std::ranges::min_element(
            quads, {}, [&](const Quadruple& q) { return rank.at(q.id); });
        const Slot fresh = fresh_slot(slots);
        std::vector<TreeCode> out;
        for (const Part& part : partitions(slots, quads, first.id, pairing_for(first), fresh)) {
            Mask m1 = 0;
            Mask m2 = 0;
            for (Slot s : part.side1) m1 |= masks.at(s);
            for (Slot s : part.side2) m2 |= masks.at(s);
            std::map<Slot, Mask> masks1;
            std::map<Slot, Mask> masks2;
            for (Slot s : part.side1) masks1[s] = masks.at(s);
            for (Slot s : part.side2) masks2[s] = masks.at(s);
            masks1[fresh] = m2;
            masks2[fresh] = m1;
            std::vector<Slot> slots1 = part.side1;
            std::vector<Slot> slots2 = part.side2;
            slots1.push_back(fresh);
            slots2.push_back(fresh);
            const auto trees1 = resolve(slots1, masks1, part.quads1);
            const auto trees2 = resolve(slots2, masks2, part.quads2);
            const EdgeCode edge{canonical(m1), first.id};
            for (const auto& t1 : trees1) {
                for (const auto& t2 : trees2) {
                    TreeCode t = t1;
                    t.insert(t.end(), t2.begin(), t2.end());
                    t.push_back(edge);
                    out.push_back(std::move(t));
                }
            }
        }
        return out;
    }
};

}  // namespace

std::vector<std::pair<VertexProfile, VertexProfile>> resolve_once(const VertexProfile& profile,
                                                                  CrossRatioId target,
                                                                  const Pairing& pairing) {
    const Slot fresh = fresh_slot(profile.slots());
    std::vector<std::pair<VertexProfile, VertexProfile>> out;
    for (Part& part : partitions(profile.slots(), profile.quadruples(), target, pairing, fresh)) {
        part.side1.push_back(fresh);
        part.side2.push_back(fresh);
        out.emplace_back(VertexProfile(std::move(part.side1), std::move(part.quads1)),
                         VertexProfile(std::move(part.side2), std::move(part.quads2)));
    }
    return out;
}

std::vector<ResolutionTree> total_resolutions(const VertexProfile& profile,
                                              const std::map<CrossRatioId, Pairing>& pairings,
                                              const std::vector<CrossRatioId>& order) {
    std::vector<Slot> leaves = profile.slots();
    std::ranges::sort(leaves);
    if (leaves.size() > 64) throw StructuralError("at most 64 slots are supported");

    Resolver resolver{pairings, {}, 0};
    for (std::size_t i = 0; i < order.size(); ++i) resolver.rank[order[i]] = i;
    if (resolver.rank.size() != profile.quadruples().size() || order.size() != resolver.rank.size())
        throw StructuralError("processing order must list every cross-ratio exactly once");
    for (const auto& q : profile.quadruples())
        if (!resolver.rank.contains(q.id))
            throw StructuralError("processing order misses cross-ratio " + std::to_string(q.id));

    std::map<Slot, Mask> masks;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        masks[leaves[i]] = Mask{1} << i;
        resolver.full |= Mask{1} << i;
    }

    std::set<TreeCode> unique;
    for (TreeCode code : resolver.resolve(profile.slots(), masks, profile.quadruples())) {
        std::ranges::sort(code);
        unique.insert(std::move(code));
    }

    std::vector<ResolutionTree> out;
    for (const TreeCode& code : unique) {
        ResolutionTree tree;
        tree.leaves = leaves;
        for (const auto& [mask, id] : code) {
            ResolutionEdge edge{id, {}};
            for (std::size_t i = 0; i < leaves.size(); ++i)
                if (((mask >> i) & 1U) != 0U) edge.side.push_back(leaves[i]);
            tree.edges.push_back(std::move(edge));
        }
        std::ranges::sort(tree.edges, {}, &ResolutionEdge::crossratio);
        out.push_back(std::move(tree));
    }
    std::ranges::sort(out);
    return out;
}

Count cross_ratio_multiplicity(const VertexProfile& profile) {
    std::map<CrossRatioId, Pairing> pairings;
    std::vector<CrossRatioId> order;
    for (const auto& q : profile.quadruples()) {
        std::array<Label, 4> e = q.entries;
        std::ranges::sort(e);
        pairings.emplace(q.id, Pairing(e[0], e[1], e[2], e[3]));
        order.push_back(q.id);
    }
    return Count{total_resolutions(profile, pairings, order).size()};
}

bool satisfies_separation(const ResolutionTree& tree, const VertexProfile& profile,
                          const std::map<CrossRatioId, Pairing>& pairings) {
    if (tree.edges.size() != profile.quadruples().size()) return false;
    for (const auto& edge : tree.edges) {
        const Quadruple* q = profile.find(edge.crossratio);
        if (q == nullptr) return false;
        auto it = pairings.find(q->id);
        const Pairing p = it != pairings.end() ? it->second : q->pairing_or_default();
        auto inside = [&](Label l) {
            return std::ranges::find(edge.side, q->slot_of(l)) != edge.side.end();
        };
        const bool a1 = inside(p.first_pair()[0]);
        const bool a2 = inside(p.first_pair()[1]);
        const bool b1 = inside(p.second_pair()[0]);
        const bool b2 = inside(p.second_pair()[1]);
        if (a1 != a2 || b1 != b2 || a1 == b1) return false;
    }
    return true;
}

}  // namespace tropcount
