#include "corpus.hpp"
#include "oracles.hpp"

#include <tropcount/errors.hpp>
#include <tropcount/splits.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace tropcount;

namespace {

std::vector<Label> labels(std::initializer_list<std::uint32_t> ids) {
    std::vector<Label> out;
    for (auto id : ids) out.push_back(label(id));
    return out;
}

CrossRatio cr(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    return {label(a), label(b), label(c), label(d)};
}

Instance worked_example() {
    return make_instance({2, {1, 2, 3}, {{4, 1}, {5, 1}}, {}, {{1, 2, 3, 4}, {1, 2, 3, 5}}});
}

Instance second_step() { return make_instance({1, {1, 2}, {{4, 1}}, {6}, {{1, 2, 4, 6}}}); }

Split swap_sides(const Split& s) {
    Split out{s.side2, s.side1, s.kind};
    if (s.kind == SplitKind::two_zero_side1_fixed) out.kind = SplitKind::two_zero_side2_fixed;
    if (s.kind == SplitKind::two_zero_side2_fixed) out.kind = SplitKind::two_zero_side1_fixed;
    return out;
}

std::vector<Split> sorted(std::vector<Split> v) {
    std::ranges::sort(v);
    return v;
}

}  // namespace

TEST(RespectingPairing, Examples) {
    EXPECT_EQ(respecting_pairing(cr(1, 2, 3, 5)).to_string(), "(1 2|3 5)");
    EXPECT_EQ(respecting_pairing(cr(1, 2, 4, 6)).to_string(), "(1 2|4 6)");
    EXPECT_EQ(respecting_pairing(cr(7, 3, 9, 1)).to_string(), "(1 3|7 9)");
}

TEST(EnumerateSplits, WorkedExampleFirstStep) {
    const auto splits = enumerate_splits(worked_example(), 1, respecting_pairing(cr(1, 2, 3, 5)));
    ASSERT_EQ(splits.size(), 1U);
    const Split& s = splits[0];
    EXPECT_EQ(s.kind, SplitKind::two_zero_side1_fixed);
    EXPECT_EQ(s.side1.degree, 1U);
    EXPECT_EQ(s.side1.points, labels({1, 2}));
    EXPECT_EQ(s.side1.lines, labels({4}));
    EXPECT_EQ(s.side1.crossratios, (std::vector<std::size_t>{0}));
    EXPECT_TRUE(s.side1.free.empty());
    EXPECT_EQ(s.side2.degree, 1U);
    EXPECT_EQ(s.side2.points, labels({3}));
    EXPECT_EQ(s.side2.lines, labels({5}));
    EXPECT_TRUE(s.side2.crossratios.empty());
}

TEST(EnumerateSplits, WorkedExampleSecondStep) {
    const auto splits = enumerate_splits(second_step(), 0, respecting_pairing(cr(1, 2, 4, 6)));
    ASSERT_EQ(splits.size(), 1U);
    const Split& s = splits[0];
    EXPECT_EQ(s.kind, SplitKind::one_one);
    EXPECT_EQ(s.side1.degree, 1U);
    EXPECT_EQ(s.side1.points, labels({1, 2}));
    EXPECT_EQ(s.side2.degree, 0U);
    EXPECT_EQ(s.side2.lines, labels({4}));
    EXPECT_EQ(s.side2.free, labels({6}));
}

TEST(EnumerateSplits, EmptyWhenNoDeficiencyVectorFits) {
    // Lines 1,2 against line 3 and point 4: no degree split and cross-ratio
    // distribution balances both sides.
    const Instance inst = make_instance(
        {2, {4, 5}, {{1, 1}, {2, 1}, {3, 1}}, {}, {{1, 2, 3, 4}, {1, 2, 4, 5}, {2, 3, 4, 5}}});
    ASSERT_TRUE(validate(inst).ok);
    const Pairing p = respecting_pairing(cr(1, 2, 3, 4));
    EXPECT_TRUE(enumerate_splits(inst, 0, p).empty());
    EXPECT_TRUE(tropcount::testing::brute_force_splits(inst, 0, p).empty());
}

TEST(EnumerateSplits, BadIndexAndPairing) {
    EXPECT_THROW(enumerate_splits(worked_example(), 2, respecting_pairing(cr(1, 2, 3, 5))),
                 std::out_of_range);
    EXPECT_THROW(enumerate_splits(worked_example(), 1, respecting_pairing(cr(1, 2, 3, 4))),
                 StructuralError);
}

TEST(BuildSubinstances, WorkedExampleFirstStep) {
    const Instance inst = worked_example();
    const auto splits = enumerate_splits(inst, 1, respecting_pairing(cr(1, 2, 3, 5)));
    const auto pair = build_subinstances(inst, splits.at(0));
    EXPECT_EQ(pair.fresh, label(6));
    EXPECT_EQ(pair.side1, make_instance({1, {1, 2}, {{4, 1}}, {6}, {{1, 2, 4, 6}}}));
    EXPECT_EQ(pair.side2, make_instance({1, {3, 6}, {{5, 1}}, {}, {}}));
}

TEST(BuildSubinstances, WorkedExampleSecondStep) {
    const Instance inst = second_step();
    const auto splits = enumerate_splits(inst, 0, respecting_pairing(cr(1, 2, 4, 6)));
    const auto pair = build_subinstances(inst, splits.at(0));
    EXPECT_EQ(pair.side1, make_instance({1, {1, 2}, {{7, 1}}, {}, {}}));
    EXPECT_EQ(pair.side2, make_instance({0, {}, {{4, 1}, {7, 1}}, {6}, {}}));
}

TEST(BuildSubinstances, NoForeignEntriesLeavesCrossRatiosAlone) {
    // lambda_1 = {1,2,4,6} lies entirely on side 1 of the split at lambda_2.
    const Instance inst =
        make_instance({2, {1, 2, 3, 7}, {{4, 1}, {5, 1}}, {6}, {{1, 2, 4, 6}, {1, 2, 3, 5}}});
    ASSERT_TRUE(validate(inst).ok);
    const auto splits = enumerate_splits(inst, 1, respecting_pairing(cr(1, 2, 3, 5)));
    ASSERT_FALSE(splits.empty());
    for (const Split& s : splits) {
        const auto pair = build_subinstances(inst, s);
        for (const Instance* side : {&pair.side1, &pair.side2})
            for (const CrossRatio& c : side->crossratios())
                if (!c.contains(pair.fresh)) {
                    EXPECT_EQ(c, cr(1, 2, 4, 6));
                }
    }
}

TEST(EnumerateSplits, SubInstancesValidateAcrossCorpus) {
    std::size_t checked = 0;
    for (const Instance& inst : tropcount::testing::generate_corpus(60, 3)) {
        for (std::size_t last = 0; last < inst.crossratio_count(); ++last)
            for (const Pairing& p : all_pairings(inst.crossratios()[last]))
                for (const Split& s : enumerate_splits(inst, last, p)) {
                    const auto pair = build_subinstances(inst, s);
                    EXPECT_TRUE(validate(pair.side1).ok) << pair.side1.to_string();
                    EXPECT_TRUE(validate(pair.side2).ok) << pair.side2.to_string();
                    ++checked;
                }
    }
    EXPECT_GT(checked, 50U);
}

TEST(EnumerateSplits, MatchesBruteForceAndSwapsCleanly) {
    for (const Instance& inst : tropcount::testing::generate_corpus(60, 21)) {
        for (std::size_t last = 0; last < inst.crossratio_count(); ++last)
            for (const Pairing& p : all_pairings(inst.crossratios()[last])) {
                const auto fast = enumerate_splits(inst, last, p);
                EXPECT_EQ(std::set<Split>(fast.begin(), fast.end()).size(), fast.size());
                EXPECT_EQ(sorted(fast), tropcount::testing::brute_force_splits(inst, last, p))
                    << inst.to_string() << " " << p.to_string();

                std::vector<Split> swapped;
                for (const Split& s : fast) swapped.push_back(swap_sides(s));
                EXPECT_EQ(sorted(swapped), tropcount::testing::brute_force_splits(
                                               inst, last, p.second_pair(), p.first_pair()));
            }
    }
}
