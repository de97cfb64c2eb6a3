#include "tropcount/splits.hpp"

#include "tropcount/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tropcount {

std::string to_string(SplitKind kind) {
    switch (kind) {
        case SplitKind::one_one: return "1/1";
        case SplitKind::two_zero_side1_fixed: return "2/0 side 1 fixed";
        case SplitKind::two_zero_side2_fixed: return "2/0 side 2 fixed";
    }
    return "?";
}

namespace {

void write_labels(std::ostringstream& out, const std::vector<Label>& labels) {
    out << '{';
    const char* sep = "";
    for (Label l : labels) {
        out << sep << id_of(l);
        sep = ",";
    }
    out << '}';
}

void write_side(std::ostringstream& out, const SplitSide& side) {
    out << "d=" << side.degree << " n=";
    write_labels(out, side.points);
    out << " L=";
    write_labels(out, side.lines);
    out << " cr={";
    const char* sep = "";
    for (auto i : side.crossratios) {
        out << sep << (i + 1);
        sep = ",";
    }
    out << "} f=";
    write_labels(out, side.free);
}

int deficiency(const SplitSide& side) {
    return 3 * static_cast<int>(side.degree) -
           (static_cast<int>(side.points.size()) + static_cast<int>(side.crossratios.size()) -
            static_cast<int>(side.free.size()));
}

}  // namespace

std::string to_string(const Split& split) {
    std::ostringstream out;
    out << '(';
    write_side(out, split.side1);
    out << " | ";
    write_side(out, split.side2);
    out << ") " << to_string(split.kind);
    return out.str();
}

Pairing respecting_pairing(const CrossRatio& cr) {
    const auto& e = cr.entries();
    return {e[0], e[1], e[2], e[3]};
}

std::vector<Split> enumerate_splits(const Instance& inst, std::size_t last, const Pairing& pairing) {
    if (last >= inst.crossratio_count())
        throw std::out_of_range("cross-ratio index " + std::to_string(last) + " out of range");
    const CrossRatio& chosen = inst.crossratios()[last];
    if (pairing.crossratio() != chosen)
        throw StructuralError("pairing " + pairing.to_string() + " does not pair the chosen cross-ratio");

    std::vector<Label> loose;
    for (const auto& [l, c] : inst.conditions())
        if (!chosen.contains(l)) loose.push_back(l);
    if (loose.size() >= 63) throw ResourceError("too many labels to enumerate splits");

    std::vector<Split> out;
    const std::uint64_t combos = std::uint64_t{1} << loose.size();
    std::map<Label, int> side;
    for (std::uint64_t bits = 0; bits < combos; ++bits) {
        side.clear();
        side[pairing.first_pair()[0]] = 1;
        side[pairing.first_pair()[1]] = 1;
        side[pairing.second_pair()[0]] = 2;
        side[pairing.second_pair()[1]] = 2;
        for (std::size_t i = 0; i < loose.size(); ++i) side[loose[i]] = ((bits >> i) & 1U) != 0U ? 2 : 1;

        SplitSide s1;
        SplitSide s2;
        bool valid = true;
        for (std::size_t i = 0; i < inst.crossratio_count() && valid; ++i) {
            if (i == last) continue;
            const auto on1 = std::ranges::count_if(inst.crossratios()[i].entries(),
                                                   [&](Label l) { return side.at(l) == 1; });
            if (on1 == 2) valid = false;
            else (on1 >= 3 ? s1 : s2).crossratios.push_back(i);
        }
        if (!valid) continue;
        for (const auto& [l, c] : inst.conditions()) {
            SplitSide& s = side.at(l) == 1 ? s1 : s2;
            switch (c.kind) {
                case ConditionKind::point: s.points.push_back(l); break;
                case ConditionKind::multi_line: s.lines.push_back(l); break;
                case ConditionKind::free: s.free.push_back(l); break;
            }
        }
        for (unsigned d1 = 0; d1 <= inst.degree(); ++d1) {
            s1.degree = d1;
            s2.degree = inst.degree() - d1;
            const int def1 = deficiency(s1);
            const int def2 = deficiency(s2);
            SplitKind kind;
            if (def1 == 1 && def2 == 1) kind = SplitKind::one_one;
            else if (def1 == 0 && def2 == 2) kind = SplitKind::two_zero_side1_fixed;
            else if (def1 == 2 && def2 == 0) kind = SplitKind::two_zero_side2_fixed;
            else continue;
            out.push_back(Split{s1, s2, kind});
        }
    }
    std::ranges::stable_sort(out, {}, [](const Split& s) { return s.side1.degree; });
    return out;
}

SubInstancePair build_subinstances(const Instance& inst, const Split& split) {
    const Label fresh{id_of(inst.max_label()) + 1};

    auto build = [&](const SplitSide& side, EndCondition e_condition) {
        std::set<Label> members;
        std::map<Label, EndCondition> conditions;
        for (const auto* group : {&side.points, &side.lines, &side.free}) {
            for (Label l : *group) {
                members.insert(l);
                conditions.emplace(l, *inst.condition(l));
            }
        }
        conditions.emplace(fresh, e_condition);
        std::vector<CrossRatio> crs;
        for (auto i : side.crossratios) {
            std::array<Label, 4> entries = inst.crossratios().at(i).entries();
            for (Label& l : entries)
                if (!members.contains(l)) l = fresh;
            crs.emplace_back(entries);
        }
        return Instance(side.degree, std::move(conditions), std::move(crs));
    };

    EndCondition e1 = EndCondition::line(1);
    EndCondition e2 = EndCondition::line(1);
    if (split.kind == SplitKind::two_zero_side1_fixed) {
        e1 = EndCondition::free();
        e2 = EndCondition::point();
    } else if (split.kind == SplitKind::two_zero_side2_fixed) {
        e1 = EndCondition::point();
        e2 = EndCondition::free();
    }
    return {build(split.side1, e1), build(split.side2, e2), fresh};
}

}  // namespace tropcount
