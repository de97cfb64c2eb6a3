#include "tropcount/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tropcount {

namespace {

using Colors = std::vector<long long>;

struct Involved {
    std::vector<std::pair<int, std::uint32_t>> kind;  // (kind, weight) per vertex
    std::vector<std::array<int, 4>> crossratios;
    std::vector<std::vector<int>> membership;        // cross-ratios per vertex
};

// Replaces colors by dense ranks of their signatures until stable.
Colors refine(const Involved& g, Colors colors) {
    const std::size_t n = colors.size();
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::vector<long long>> signature(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::array<long long, 3>> around;
            for (int c : g.membership[v]) {
                std::array<long long, 3> others{};
                std::size_t k = 0;
                for (int u : g.crossratios[c])
                    if (u != static_cast<int>(v)) others[k++] = colors[u];
                std::ranges::sort(others);
                around.push_back(others);
            }
            std::ranges::sort(around);
            signature[v].push_back(colors[v]);
            for (const auto& t : around) signature[v].insert(signature[v].end(), t.begin(), t.end());
        }
        std::vector<std::vector<long long>> distinct = signature;
        std::ranges::sort(distinct);
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < n; ++v)
            colors[v] = std::ranges::lower_bound(distinct, signature[v]) - distinct.begin();
        if (distinct.size() == classes) return colors;
        classes = distinct.size();
    }
}

std::string encode_discrete(const Involved& g, const Colors& colors) {
    std::ostringstream out;
    std::vector<int> position(colors.size());
    std::vector<std::pair<int, std::uint32_t>> kinds(colors.size());
    for (std::size_t v = 0; v < colors.size(); ++v) {
        position[v] = static_cast<int>(colors[v]);
        kinds[colors[v]] = g.kind[v];
    }
    for (const auto& [k, w] : kinds) out << k << ':' << w << ',';
    std::vector<std::array<int, 4>> crs;
    for (const auto& cr : g.crossratios) {
        std::array<int, 4> mapped{};
        for (int i = 0; i < 4; ++i) mapped[i] = position[cr[i]];
        std::ranges::sort(mapped);
        crs.push_back(mapped);
    }
    std::ranges::sort(crs);
    for (const auto& cr : crs) out << '[' << cr[0] << ' ' << cr[1] << ' ' << cr[2] << ' ' << cr[3] << ']';
    return out.str();
}

// Individualization-refinement: the least encoding over all leaves.
void search(const Involved& g, const Colors& colors, std::string& best, bool& found) {
    Colors refined = refine(g, colors);
    std::map<long long, std::vector<int>> cells;
    for (std::size_t v = 0; v < refined.size(); ++v) cells[refined[v]].push_back(static_cast<int>(v));
    auto target = std::ranges::find_if(cells, [](const auto& cell) { return cell.second.size() > 1; });
    if (target == cells.end()) {
        std::string code = encode_discrete(g, refined);
        if (!found || code < best) {
            best = std::move(code);
            found = true;
        }
        return;
    }
    const long long cell_color = target->first;
    for (int chosen : target->second) {
        Colors next(refined.size());
        for (std::size_t v = 0; v < refined.size(); ++v) {
            next[v] = 2 * refined[v];
            if (refined[v] == cell_color && static_cast<int>(v) != chosen) next[v] += 1;
        }
        search(g, next, best, found);
    }
}

}  // namespace

std::string canonical_key(const Instance& inst) {
    std::vector<Label> involved_labels;
    for (const auto& cr : inst.crossratios())
        for (Label l : cr.entries()) involved_labels.push_back(l);
    std::ranges::sort(involved_labels);
    involved_labels.erase(std::unique(involved_labels.begin(), involved_labels.end()),
                          involved_labels.end());

    auto kind_of = [&](Label l) -> std::pair<int, std::uint32_t> {
        const auto c = inst.condition(l).value_or(EndCondition::free());
        return {static_cast<int>(c.kind), c.kind == ConditionKind::multi_line ? c.weight : 0};
    };

    std::vector<std::pair<int, std::uint32_t>> isolated;
    for (const auto& [l, c] : inst.conditions())
        if (!std::ranges::binary_search(involved_labels, l)) isolated.push_back(kind_of(l));
    std::ranges::sort(isolated);

    Involved g;
    g.membership.resize(involved_labels.size());
    for (Label l : involved_labels) g.kind.push_back(kind_of(l));
    for (const auto& cr : inst.crossratios()) {
        std::array<int, 4> idx{};
        for (int i = 0; i < 4; ++i)
            idx[i] = static_cast<int>(std::ranges::lower_bound(involved_labels, cr.entries()[i]) -
                                      involved_labels.begin());
        for (int v : idx) g.membership[v].push_back(static_cast<int>(g.crossratios.size()));
        g.crossratios.push_back(idx);
    }

    std::vector<std::pair<int, std::uint32_t>> kinds = g.kind;
    std::ranges::sort(kinds);
    kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
    Colors colors(g.kind.size());
    for (std::size_t v = 0; v < colors.size(); ++v)
        colors[v] = std::ranges::lower_bound(kinds, g.kind[v]) - kinds.begin();

    std::string best;
    bool found = false;
    search(g, colors, best, found);

    std::ostringstream key;
    key << "d" << inst.degree() << "|";
    for (const auto& [k, w] : isolated) key << k << ':' << w << ',';
    key << '|' << best;
    return key.str();
}

}  // namespace tropcount
