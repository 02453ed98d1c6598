#include <gtest/gtest.h>

#include <set>
#include <vector>

#include <immaculata/compositions.hpp>

#include "oracles.hpp"

using namespace immaculata;

namespace {

std::vector<std::vector<int>> parts_of(const std::vector<composition> &cs)
{
    std::vector<std::vector<int>> out;
    for (const auto &c : cs) {
        out.push_back(c.parts());
    }
    return out;
}

} // namespace

TEST(Composition, RejectsNonPositiveParts)
{
    EXPECT_THROW(composition({2, 0, 1}), std::invalid_argument);
    EXPECT_THROW(composition({-1}), std::invalid_argument);
    const composition empty;
    EXPECT_EQ(empty.size(), 0);
    EXPECT_EQ(empty.length(), 0u);
    EXPECT_EQ(empty, composition(std::vector<int>{}));
}

TEST(Composition, SizeAndLength)
{
    const composition c{1, 1, 2, 1, 3, 2, 1, 4, 2};
    EXPECT_EQ(c.size(), 17);
    EXPECT_EQ(c.length(), 9u);
}

TEST(Composition, TupleConversionOnlyForPositiveEntries)
{
    EXPECT_EQ(to_composition(int_tuple{2, 3}), (composition{2, 3}));
    EXPECT_FALSE(to_composition(int_tuple{1, 0, 3}).has_value());
    EXPECT_FALSE(to_composition(int_tuple{-1}).has_value());
    EXPECT_EQ(to_composition(int_tuple{}), composition{});
}

TEST(Partition, Validation)
{
    EXPECT_NO_THROW(partition({3, 3, 1}));
    EXPECT_THROW(partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(partition({2, 0}), std::invalid_argument);
    EXPECT_EQ(sorted(composition{1, 3, 2}), (partition{3, 2, 1}));
}

TEST(CompositionsOf, SmallCases)
{
    EXPECT_EQ(parts_of(compositions_of(0)), (std::vector<std::vector<int>>{{}}));
    EXPECT_EQ(parts_of(compositions_of(3)), (std::vector<std::vector<int>>{{1, 1, 1}, {1, 2}, {2, 1}, {3}}));
    EXPECT_EQ(compositions_of(7).size(), 64u);
    EXPECT_THROW(compositions_of(-1), std::invalid_argument);
}

TEST(CompositionsOf, MatchesSubsetEnumeration)
{
    for (int n = 0; n <= 10; ++n) {
        const auto cs = compositions_of(n);
        EXPECT_EQ(parts_of(cs), oracle::compositions_by_subsets(n)) << "n=" << n;
        EXPECT_TRUE(std::is_sorted(cs.begin(), cs.end()));
        for (const auto &c : cs) {
            EXPECT_EQ(c.size(), n);
        }
    }
}

TEST(PartitionsOf, Counts)
{
    const std::vector<std::size_t> p = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n < static_cast<int>(p.size()); ++n) {
        EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
    }
}

TEST(DescentSet, KnownValues)
{
    EXPECT_EQ(descent_set({1, 1, 2, 1, 3, 2, 1, 4, 2}), (std::vector<int>{1, 2, 4, 5, 8, 10, 11, 15}));
    EXPECT_EQ(descent_set({4, 4, 2, 7}), (std::vector<int>{4, 8, 10}));
    EXPECT_TRUE(descent_set({5}).empty());
    const std::vector<int> s{4, 8, 10};
    EXPECT_EQ(composition_of_subset(s, 17), (composition{4, 4, 2, 7}));
}

TEST(DescentSet, InverseRejectsOutOfRange)
{
    const std::vector<int> zero{0};
    const std::vector<int> top{5};
    EXPECT_THROW(composition_of_subset(zero, 5), std::invalid_argument);
    EXPECT_THROW(composition_of_subset(top, 5), std::invalid_argument);
    EXPECT_EQ(composition_of_subset(std::vector<int>{}, 0), composition{});
}

TEST(DescentSet, BijectionUpTo12)
{
    for (int n = 1; n <= 12; ++n) {
        for (const auto &c : compositions_of(n)) {
            ASSERT_EQ(composition_of_subset(descent_set(c), n), c);
        }
    }
}

TEST(Refinement, Examples)
{
    EXPECT_TRUE(refinement_leq({1, 1, 2, 1, 3, 2, 1, 4, 2}, {4, 4, 2, 7}));
    EXPECT_TRUE(refinement_leq({2, 1}, {2, 1}));
    EXPECT_FALSE(refinement_leq({2, 1}, {1, 2}));
    EXPECT_THROW(refinement_leq({2, 1}, {2}), std::invalid_argument);
}

TEST(Refinement, IsPartialOrder)
{
    for (int n = 1; n <= 7; ++n) {
        const auto cs = compositions_of(n);
        for (const auto &a : cs) {
            EXPECT_TRUE(refinement_leq(a, a));
            for (const auto &b : cs) {
                const bool ab = refinement_leq(a, b);
                if (ab && refinement_leq(b, a)) {
                    EXPECT_EQ(a, b);
                }
                if (!ab) {
                    continue;
                }
                for (const auto &c : cs) {
                    if (refinement_leq(b, c)) {
                        ASSERT_TRUE(refinement_leq(a, c));
                    }
                }
            }
        }
    }
}

TEST(Refinement, CoarseningsAndRefinementsAgreeWithOrder)
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto &a : compositions_of(n)) {
            std::set<composition> up, down;
            for (const auto &b : compositions_of(n)) {
                if (refinement_leq(a, b)) up.insert(b);
                if (refinement_leq(b, a)) down.insert(b);
            }
            const auto c = coarsenings(a);
            const auto r = refinements(a);
            EXPECT_EQ(std::set<composition>(c.begin(), c.end()), up);
            EXPECT_EQ(std::set<composition>(r.begin(), r.end()), down);
        }
    }
}

TEST(LexOrder, Examples)
{
    EXPECT_TRUE(lex_leq({1, 3}, {2, 2}));
    EXPECT_TRUE(lex_leq({2, 2}, {2, 2}));
    EXPECT_TRUE(lex_leq({3, 1, 2, 3}, {4, 2, 3}));
    EXPECT_FALSE(lex_leq({4, 2, 3}, {3, 1, 2, 3}));
}

TEST(PieriSuccessors, WorkedCase)
{
    EXPECT_EQ(parts_of(pieri_successors({2, 3}, 3)),
              (std::vector<std::vector<int>>{{2, 3, 3}, {2, 4, 2}, {2, 5, 1}, {2, 6}, {3, 3, 2}, {3, 4, 1}, {3, 5},
                                             {4, 3, 1}, {4, 4}, {5, 3}}));
}

TEST(PieriSuccessors, SmallCases)
{
    for (int s = 1; s <= 4; ++s) {
        EXPECT_EQ(parts_of(pieri_successors({}, s)), (std::vector<std::vector<int>>{{s}}));
    }
    EXPECT_EQ(parts_of(pieri_successors({2}, 2)), (std::vector<std::vector<int>>{{2, 2}, {3, 1}, {4}}));
    EXPECT_THROW(pieri_successors({2}, 0), std::invalid_argument);
}

TEST(PieriSuccessors, MatchesBruteForceFilter)
{
    for (int n = 0; n <= 6; ++n) {
        for (const auto &alpha : compositions_of(n)) {
            for (int s = 1; s <= 4; ++s) {
                std::vector<std::vector<int>> expected;
                for (const auto &beta : oracle::compositions_by_subsets(n + s)) {
                    bool ok = beta.size() <= alpha.length() + 1 && beta.size() >= alpha.length();
                    for (std::size_t j = 0; ok && j < alpha.length(); ++j) {
                        ok = alpha[j] <= beta[j];
                    }
                    if (ok) expected.push_back(beta);
                }
                const auto got = pieri_successors(alpha, s);
                ASSERT_EQ(parts_of(got), expected) << to_string(alpha) << " s=" << s;
                for (const auto &beta : got) {
                    const auto l = beta.length();
                    EXPECT_TRUE(l == alpha.length() || l == alpha.length() + 1);
                }
            }
        }
    }
}

TEST(TextForm, CompositionsAndSubsets)
{
    EXPECT_EQ(to_string(composition{2, 3}), "2,3");
    EXPECT_EQ(to_string(composition{}), "");
    EXPECT_EQ(subset_to_string(std::vector<int>{4, 8, 10}), "{4,8,10}");
    EXPECT_EQ(parse_composition("2,3"), (composition{2, 3}));
    EXPECT_EQ(parse_composition(""), composition{});
    EXPECT_EQ(parse_int_tuple("1,0,-2"), (int_tuple{1, 0, -2}));
    EXPECT_THROW(parse_composition("2,,3"), std::invalid_argument);
    EXPECT_THROW(parse_composition("2,x"), std::invalid_argument);
    EXPECT_THROW(parse_composition("2,0"), std::invalid_argument);
}
