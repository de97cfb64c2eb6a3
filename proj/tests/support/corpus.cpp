#include "corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace tropcount::testing {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

std::vector<Instance> generate_corpus(std::size_t count, std::uint64_t seed,
                                      const CorpusLimits& limits) {
    std::mt19937_64 rng(seed);
    std::vector<Instance> out;
    std::set<std::string> seen;
    std::size_t attempts = 0;
    while (out.size() < count && attempts++ < count * 1000) {
        const auto degree = static_cast<unsigned>(pick(rng, 0, limits.max_degree));
        const auto lines = pick(rng, 0, limits.max_lines);
        const auto free = pick(rng, 0, limits.max_free);
        const auto l = pick(rng, limits.min_crossratios, limits.max_crossratios);
        const long points = 3L * degree - 1 - static_cast<long>(l) + static_cast<long>(free);
        if (points < 0) continue;
        const std::size_t m = static_cast<std::size_t>(points) + lines + free;
        if (m > limits.max_labels || (l > 0 && m < 4)) continue;

        std::vector<std::uint32_t> labels(m);
        std::iota(labels.begin(), labels.end(), 1U);
        std::ranges::shuffle(labels, rng);

        InstanceSpec spec;
        spec.degree = degree;
        std::size_t next = 0;
        for (long i = 0; i < points; ++i) spec.points.push_back(labels[next++]);
        for (std::size_t i = 0; i < lines; ++i)
            spec.lines.emplace_back(labels[next++],
                                    static_cast<std::uint32_t>(pick(rng, 1, limits.max_weight)));
        for (std::size_t i = 0; i < free; ++i) spec.free.push_back(labels[next++]);

        std::set<std::array<std::uint32_t, 4>> crs;
        for (int tries = 0; crs.size() < l && tries < 100; ++tries) {
            std::vector<std::uint32_t> pool(m);
            std::iota(pool.begin(), pool.end(), 1U);
            std::ranges::shuffle(pool, rng);
            std::array<std::uint32_t, 4> cr{pool[0], pool[1], pool[2], pool[3]};
            std::ranges::sort(cr);
            crs.insert(cr);
        }
        if (crs.size() < l) continue;
        spec.crossratios.assign(crs.begin(), crs.end());
        std::ranges::shuffle(spec.crossratios, rng);

        Instance inst = make_instance(spec);
        if (!validate(inst).ok) continue;
        if (!seen.insert(canonical_key(inst)).second) continue;
        out.push_back(std::move(inst));
    }
    return out;
}

Instance relabel(const Instance& inst, const std::map<Label, Label>& mapping) {
    std::map<Label, EndCondition> conditions;
    for (const auto& [l, c] : inst.conditions()) conditions.emplace(mapping.at(l), c);
    std::vector<CrossRatio> crs;
    for (const CrossRatio& cr : inst.crossratios()) {
        const auto& e = cr.entries();
        crs.emplace_back(mapping.at(e[0]), mapping.at(e[1]), mapping.at(e[2]), mapping.at(e[3]));
    }
    return Instance(inst.degree(), std::move(conditions), std::move(crs));
}

std::map<Label, Label> random_relabeling(const Instance& inst, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Label> from;
    for (const auto& [l, c] : inst.conditions()) from.push_back(l);
    std::vector<Label> to = from;
    std::ranges::shuffle(to, rng);
    std::map<Label, Label> out;
    for (std::size_t i = 0; i < from.size(); ++i) out.emplace(from[i], to[i]);
    return out;
}

}  // namespace tropcount::testing
