#include <gtest/gtest.h>

#include "support.hpp"

using namespace ncf;

namespace {

const PrimeField F5(5);
const PrimeField F2(2);
const AlphabetPtr XY = make_alphabet({"x", "y"});

NCPoly<PrimeField> parse(std::string_view s, const PrimeField &F = F5) { return parse_expression(s, F, XY); }

std::vector<DegreeSplit> splits(std::initializer_list<std::pair<std::size_t, std::size_t>> l)
{
    std::vector<DegreeSplit> out;
    for (auto [h, k] : l) {
        out.push_back({h, k});
    }
    return out;
}

} // namespace

TEST(SubsetSums, Basic)
{
    const std::vector<long> parts{1, 2, 2};
    EXPECT_EQ(subset_sums(parts, 5), std::vector<bool>(6, true));
    const std::vector<long> two{2, 3};
    EXPECT_EQ(subset_sums(two, 5), (std::vector<bool>{true, false, true, true, false, true}));
    EXPECT_EQ(subset_sums(std::vector<long>{}, 2), (std::vector<bool>{true, false, false}));
}

TEST(KnapsackSplits, Examples)
{
    EXPECT_EQ(knapsack_splits(parse("y*x*y*x*y - y")), splits({{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
    EXPECT_EQ(knapsack_splits(parse("x*x + x*y - y*x - y*y")), splits({{1, 1}}));
    // x*y + 1 has an irreducible image of full degree.
    EXPECT_TRUE(knapsack_splits(parse("x*y + 1")).empty());
    EXPECT_TRUE(knapsack_splits(parse("x*y*y + x + 1")).empty());
}

TEST(KnapsackSplits, ImageDegreeDropKeepsEverySplit)
{
    // xy - yx has zero image.
    EXPECT_EQ(knapsack_splits(parse("x*y*x - y*x*x + x")), all_splits(parse("x*y*x - y*x*x + x")));
}

TEST(KnapsackSplits, RationalField)
{
    const RationalField Q;
    const auto f = parse_expression("y*x*y*x*y - y", Q, XY);
    EXPECT_EQ(knapsack_splits(f), splits({{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
    const auto g = parse_expression("x*y + 1/2", Q, XY);
    EXPECT_TRUE(knapsack_splits(g).empty());
}

TEST(KnapsackSplits, SoundOnRandomProducts)
{
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const std::size_t dg = 1 + rng() % 3, dh = 1 + rng() % 3;
        const auto s = random_factorable(rng(), t % 2 ? F5 : F2, XY, dg, dh, 3);
        const auto allowed = knapsack_splits(s.f);
        EXPECT_NE(std::find(allowed.begin(), allowed.end(), DegreeSplit{dg, dh}), allowed.end())
            << to_string(s.f) << " at (" << dg << "," << dh << ")";
    }
}

TEST(DivisorDegrees, OverApproximatesTrueDivisors)
{
    // (x + y + 1)(x*y + 2) over F_5: degrees 1 and 2 are both divisor degrees.
    const auto img = commutative_image(parse("(x + y + 1)*(x*y + 2)"));
    const auto mask = divisor_degrees(img);
    ASSERT_TRUE(mask);
    EXPECT_EQ(*mask, (std::vector<bool>{true, true, true, true}));
}
