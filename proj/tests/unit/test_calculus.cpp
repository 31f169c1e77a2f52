#include "fuzzyts/calculus.hpp"
#include "fuzzyts/theorems.hpp"

#include "test_helpers.hpp"

#include <cmath>

using namespace fuzzyts;
using fuzzyts::testing::expect_triangular;

namespace {

const FuzzyNumber k123 = FuzzyNumber::triangular(1, 2, 3);
const NumericConfig cfg{};

TimeScale mixed() { return TimeScale::from_intervals(std::vector<Segment>{{-3, -1}, {0, 2}}); }
TimeScale mirrored() { return TimeScale::from_intervals(std::vector<Segment>{{-3, 0}, {1, 2}}); }
TimeScale pts013() { return TimeScale::from_intervals(std::vector<Segment>{{0, 0}, {1, 1}, {3, 3}}); }
TimeScale unit2() { return TimeScale::from_intervals(std::vector<Segment>{{0, 2}}); }

FuzzyFunctionExpr lin() { return FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1})); }
FuzzyFunctionExpr quad() { return FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 0, 1})); }
FuzzyFunctionExpr osc() { return FuzzyFunctionExpr::term(k123, CrispFn::tsininv()); }

} // namespace

TEST(Calculus, DeltaScattered)
{
    const DerivativeResult d = delta_gh(lin(), pts013(), 1, cfg);
    EXPECT_EQ(d.kind, DerivativeKind::ExactScattered);
    expect_triangular(d.value, 1, 2, 3, 1e-15);
}

TEST(Calculus, DeltaDense)
{
    const DerivativeResult d = delta_gh(quad(), unit2(), 1, cfg);
    EXPECT_EQ(d.kind, DerivativeKind::LimitDense);
    expect_triangular(d.value, 2, 4, 6, 1e-7);
}

TEST(Calculus, ExistenceAsymmetry)
{
    EXPECT_CODE(delta_gh(osc(), mixed(), 0, cfg), ErrorCode::NonConvergent);
    const double s1 = std::sin(1.0);
    const DerivativeResult n = nabla_gh(osc(), mixed(), 0, cfg);
    EXPECT_EQ(n.kind, DerivativeKind::ExactScattered);
    EXPECT_LE(hausdorff(n.value, FuzzyNumber::triangular(-3 * s1, -2 * s1, -s1)), 1e-6);
    EXPECT_CODE(nabla_gh(osc(), mirrored(), 0, cfg), ErrorCode::NonConvergent);
    EXPECT_LE(hausdorff(delta_gh(osc(), mirrored(), 0, cfg).value, FuzzyNumber::triangular(s1, 2 * s1, 3 * s1)),
              1e-6);
    EXPECT_TRUE(check_continuity_at(osc(), mixed(), 0, cfg));
}

TEST(Calculus, Nabla)
{
    expect_triangular(nabla_gh(lin(), pts013(), 3, cfg).value, 1, 2, 3, 1e-15);
    const auto c = FuzzyFunctionExpr::constant(k123);
    for (double s : {0.5, 1.0, 1.5}) {
        EXPECT_EQ(nabla_gh(c, unit2(), s, cfg).value, FuzzyNumber::crisp(0));
    }
}

TEST(Calculus, Kappa)
{
    EXPECT_CODE(delta_gh(lin(), pts013(), 3, cfg), ErrorCode::PointNotInKappa);
    EXPECT_CODE(nabla_gh(lin(), pts013(), 0, cfg), ErrorCode::PointNotInKappa);
    EXPECT_CODE(delta_gh(lin(), pts013(), 2, cfg), ErrorCode::PointNotInScale);
}

TEST(Calculus, Diamond)
{
    const TimeScale z = TimeScale::uniform(0, 5, 1);
    const auto sq = FuzzyFunctionExpr::term(FuzzyNumber::crisp(1), CrispFn::poly({0, 0, 1}));
    EXPECT_EQ(diamond_alpha_gh(sq, z, 1, 0.5, cfg).value, FuzzyNumber::crisp(2));
    for (double s : {1.0, 2.0, 4.0}) {
        EXPECT_EQ(diamond_alpha_gh(lin(), z, s, 1.0, cfg).value, delta_gh(lin(), z, s, cfg).value);
        EXPECT_EQ(diamond_alpha_gh(lin(), z, s, 0.0, cfg).value, nabla_gh(lin(), z, s, cfg).value);
    }
    // one-sided alphas only need their own kappa condition
    EXPECT_NO_THROW(diamond_alpha_gh(lin(), z, 0, 1.0, cfg));
    EXPECT_CODE(diamond_alpha_gh(lin(), z, 0, 0.5, cfg), ErrorCode::PointNotInKappa);
    EXPECT_CODE(diamond_alpha_gh(lin(), z, 1, 1.5, cfg), ErrorCode::AlphaOutOfRange);
}

TEST(Calculus, CrispDerivatives)
{
    const TimeScale z = TimeScale::uniform(0, 5, 1);
    auto sq = [](double t) { return t * t; };
    EXPECT_EQ(delta_crisp(sq, z, 1, cfg), 3);
    EXPECT_EQ(nabla_crisp(sq, z, 1, cfg), 1);
    EXPECT_NEAR(delta_crisp(sq, unit2(), 1, cfg), 2, 1e-7);
}

TEST(Calculus, Continuity)
{
    const auto c = FuzzyFunctionExpr::constant(k123);
    for (double s : {-3.0, -2.0, -1.0, 0.0, 1.0, 2.0}) {
        EXPECT_TRUE(check_continuity_at(c, mixed(), s, cfg));
    }
    const FuzzyFn jump = [](double t) { return FuzzyNumber::crisp(t < 1 ? 0.0 : 1.0); };
    EXPECT_FALSE(check_continuity_at(jump, unit2(), 1, cfg));
}

TEST(Calculus, JumpIdentity)
{
    const TimeScale g = TimeScale::from_intervals(std::vector<Segment>{{1, 1}, {2, 2}, {4, 4}, {8, 8}});
    EXPECT_LT(check_jump_identity(CrispFn::poly({0, 0, 1}), g, 4, cfg).residual, 1e-12);
    const TimeScale z = TimeScale::uniform(0, 5, 1);
    EXPECT_LT(check_jump_identity(CrispFn::poly({1, -2, 0, 0.5}), z, 2, cfg).residual, 1e-12);
    const CheckReport c = check_jump_identity(CrispFn::poly({3}), z, 2, cfg);
    EXPECT_EQ(c.residual, 0);
    EXPECT_TRUE(c.pass);
}

TEST(CalculusProperty, DenseDerivativesAgree)
{
    const auto f = FuzzyFunctionExpr::term(FuzzyNumber::triangular(0, 1, 2), CrispFn::sin());
    for (double s : {0.25, 0.5, 1.0, 1.75}) {
        const FuzzyNumber d = delta_gh(f, unit2(), s, cfg).value;
        EXPECT_LE(hausdorff(d, nabla_gh(f, unit2(), s, cfg).value), cfg.limit_tol * 100);
        for (double a : kStandardAlphaGrid) {
            EXPECT_LE(hausdorff(d, diamond_alpha_gh(f, unit2(), s, a, cfg).value), cfg.limit_tol * 100);
        }
    }
}

TEST(CalculusProperty, DiamondImpliesContinuityAndOneSided)
{
    const TimeScale m = mixed();
    const auto g = quad();
    for (double s : select_test_points(m)) {
        for (double a : {0.25, 0.5, 0.75}) {
            try {
                diamond_alpha_gh(g, m, s, a, cfg);
            } catch (const Error&) {
                continue;
            }
            EXPECT_TRUE(check_continuity_at(g, m, s, cfg)) << s;
            EXPECT_NO_THROW(delta_gh(g, m, s, cfg));
            EXPECT_NO_THROW(nabla_gh(g, m, s, cfg));
        }
    }
}

TEST(CalculusProperty, RawDefinitionDefect)
{
    // The convex-combination value satisfies the epsilon-definition: the
    // normalized defect shrinks as probes approach s.
    const TimeScale z = TimeScale::uniform(0, 5, 1);
    const auto f = FuzzyFunctionExpr::term(FuzzyNumber::crisp(1), CrispFn::poly({0, 0, 1}));
    for (double a : kStandardAlphaGrid) {
        const FuzzyNumber d = diamond_alpha_gh(f, z, 2, a, cfg).value;
        EXPECT_LE(diamond_definition_defect(f, z, 2, 2, a, d), 1e-12) << a;
    }
    const TimeScale u = unit2();
    const auto g = FuzzyFunctionExpr::term(FuzzyNumber::crisp(1), CrispFn::sin());
    const FuzzyNumber d = diamond_alpha_gh(g, u, 1, 0.5, cfg).value;
    double prev = 1e300;
    for (double h : {1e-1, 1e-2, 1e-3}) {
        const double e = diamond_definition_defect(g, u, 1, 1 + h, 0.5, d);
        EXPECT_LT(e, prev);
        prev = e;
    }
    EXPECT_LT(prev, 1e-2);
}
