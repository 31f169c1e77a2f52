#include "fuzzyts/fuzzy.hpp"

#include "test_helpers.hpp"

#include <random>

using namespace fuzzyts;
using fuzzyts::testing::expect_triangular;

TEST(Fuzzy, Triangular)
{
    const FuzzyNumber u = FuzzyNumber::triangular(1, 2, 3);
    EXPECT_EQ(u.level(0), (Interval{1, 3}));
    EXPECT_EQ(u.level(64), (Interval{2, 2}));
    EXPECT_EQ(u.at(0.5), (Interval{1.5, 2.5}));
    EXPECT_TRUE(FuzzyNumber::triangular(5, 5, 5).is_crisp());
    EXPECT_CODE(FuzzyNumber::triangular(3, 2, 1), ErrorCode::NotSorted);
    for (int M : {1, 7, 64, 200}) {
        expect_triangular(FuzzyNumber::triangular(-0.3, 1.1, 4.7, M), -0.3, 1.1, 4.7, 1e-12);
    }
}

TEST(Fuzzy, FromLevels)
{
    EXPECT_NO_THROW(FuzzyNumber::from_levels({{0, 4}, {1, 3}, {2, 2}}));
    EXPECT_CODE(FuzzyNumber::from_levels({{0, 4}, {1, 3}, {3, 2}}), ErrorCode::EmptyCore);
    EXPECT_CODE(FuzzyNumber::from_levels({{1, 3}, {0, 4}, {2, 2}}), ErrorCode::LevelMonotonicityViolation);
}

TEST(Fuzzy, AddAndScale)
{
    const FuzzyNumber a = FuzzyNumber::triangular(1, 2, 3);
    const FuzzyNumber b = FuzzyNumber::triangular(0, 1, 2);
    EXPECT_EQ(a + b, FuzzyNumber::triangular(1, 3, 5));
    EXPECT_EQ(-1.0 * a, FuzzyNumber::triangular(-3, -2, -1));
    EXPECT_EQ(0.0 * a, FuzzyNumber::crisp(0));
    EXPECT_CODE(add(a, FuzzyNumber::crisp(1, 8)), ErrorCode::ResolutionMismatch);
}

TEST(Fuzzy, Multiply)
{
    const FuzzyNumber a = FuzzyNumber::triangular(1, 2, 3);
    EXPECT_EQ(a * FuzzyNumber::crisp(2), FuzzyNumber::triangular(2, 4, 6));
    const FuzzyNumber sq = a * a;
    EXPECT_EQ(sq.level(0), (Interval{1, 9}));
    EXPECT_EQ(sq.level(64), (Interval{4, 4}));
    const FuzzyNumber s = FuzzyNumber::triangular(-1, 0, 1);
    EXPECT_EQ((s * s).level(0), (Interval{-1, 1}));
}

TEST(Fuzzy, GhDifference)
{
    const FuzzyNumber a = FuzzyNumber::triangular(1, 2, 3);
    EXPECT_EQ(gh_diff(a, a), FuzzyNumber::crisp(0));
    EXPECT_EQ(gh_diff(a, FuzzyNumber::triangular(0, 1, 2)), FuzzyNumber::crisp(1));
    const GhDiffResult r = gh_diff_detailed(FuzzyNumber::triangular(0, 1, 2), FuzzyNumber::triangular(0, 2, 4));
    expect_triangular(r.value, -2, -1, 0, 1e-15);
    EXPECT_EQ(r.summary, GhCase::CaseII);
    // widths 2,2,0 against 2,0,0: the difference widths 0,2,0 are not nested
    const FuzzyNumber u = FuzzyNumber::from_levels({{-1, 1}, {-1, 1}, {0, 0}});
    const FuzzyNumber v = FuzzyNumber::from_levels({{-1, 1}, {0, 0}, {0, 0}});
    EXPECT_CODE(gh_diff(u, v), ErrorCode::GHDifferenceNotFuzzy);
}

TEST(Fuzzy, Hausdorff)
{
    const FuzzyNumber a = FuzzyNumber::triangular(1, 2, 3);
    EXPECT_EQ(hausdorff(a, a), 0);
    EXPECT_EQ(hausdorff(a, FuzzyNumber::triangular(0, 1, 2)), 1);
    EXPECT_EQ(hausdorff(a, FuzzyNumber::crisp(2)), 1);
}

TEST(Fuzzy, Resample)
{
    const FuzzyNumber a = FuzzyNumber::triangular(1, 2, 3, 4);
    expect_triangular(a.resampled(64), 1, 2, 3, 1e-15);
}

namespace {

FuzzyNumber random_triangular(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> c(-8192, 8192), w(0, 3072);
    const double m = c(rng) / 1024.0;
    return FuzzyNumber::triangular(m - w(rng) / 1024.0, m, m + w(rng) / 1024.0);
}

} // namespace

TEST(FuzzyProperty, MetricAxioms)
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_triangular(rng), b = random_triangular(rng), c = random_triangular(rng),
                   d = random_triangular(rng);
        EXPECT_EQ(hausdorff(a + c, b + c), hausdorff(a, b));
        EXPECT_NEAR(hausdorff(-2.5 * a, -2.5 * b), 2.5 * hausdorff(a, b), 1e-12);
        EXPECT_LE(hausdorff(a + b, c + d), hausdorff(a, c) + hausdorff(b, d) + 1e-12);
    }
}

TEST(FuzzyProperty, GhRoundTrip)
{
    std::mt19937_64 rng(11);
    int ok = 0;
    for (int i = 0; i < 300; ++i) {
        const auto u = random_triangular(rng), v = random_triangular(rng);
        EXPECT_EQ(gh_diff(u + v, v), u);
        try {
            const FuzzyNumber w = gh_diff(u, v);
            ++ok;
            for (std::size_t j = 0; j < w.size(); ++j) {
                const Interval s = (v + w).level(j);
                const Interval t = (u + (-1.0 * w)).level(j);
                const bool case1 = std::abs(s.lo - u.level(j).lo) <= 1e-12 && std::abs(s.hi - u.level(j).hi) <= 1e-12;
                const bool case2 = std::abs(t.lo - v.level(j).lo) <= 1e-12 && std::abs(t.hi - v.level(j).hi) <= 1e-12;
                EXPECT_TRUE(case1 || case2) << "level " << j;
            }
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::GHDifferenceNotFuzzy);
        }
    }
    EXPECT_GT(ok, 0);
}
