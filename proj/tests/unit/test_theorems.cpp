#include "fuzzyts/theorems.hpp"

#include "test_helpers.hpp"

using namespace fuzzyts;

namespace {

const FuzzyNumber k123 = FuzzyNumber::triangular(1, 2, 3);
const NumericConfig cfg{};

FuzzyFunctionExpr crisp_poly(std::vector<double> c)
{
    return FuzzyFunctionExpr::term(FuzzyNumber::crisp(1), CrispFn::poly(std::move(c)));
}

void expect_pass(const CheckReport& r, double tol)
{
    EXPECT_TRUE(r.pass) << r.name << " residual " << r.residual << " " << r.error.value_or("")
                        << " " << r.error_detail.value_or("");
    EXPECT_LE(r.residual, tol) << r.name;
    EXPECT_FALSE(r.witnesses.empty()) << r.name;
}

} // namespace

TEST(DerivativeOfIntegral, DiscreteCrisp)
{
    const TimeScale z = TimeScale::uniform(0, 5, 1);
    const auto h = crisp_poly({0, 1});
    expect_pass(check_derivative_of_integral(h, z, 0, {1, 2, 3, 4}, kStandardAlphaGrid, cfg), 1e-9);
    // flipped sign: residual |2a(1-a)(h(sigma t) + h(rho t))| = 2 at a = 0.5, t = 2
    const FuzzyNumber lhs = integral_derivative_lhs(h, z, 0, 2, 0.5, cfg);
    const FuzzyNumber bad = integral_derivative_rhs(h, z, 2, 0.5, cfg, true);
    EXPECT_NEAR(hausdorff(lhs, bad), 2.0, 1e-12);
    EXPECT_GE(hausdorff(lhs, bad), 0.5);
}

TEST(DerivativeOfIntegral, AlphaOneReducesToH)
{
    const TimeScale z = TimeScale::uniform(0, 5, 1);
    const auto h = crisp_poly({1, 0, 1});
    for (double t : {1.0, 2.0, 3.0}) {
        EXPECT_EQ(integral_derivative_rhs(h, z, t, 1.0, cfg), h(t));
    }
}

TEST(DerivativeOfIntegral, Continuous)
{
    const TimeScale u = TimeScale::from_intervals(std::vector<Segment>{{0, 2}});
    const auto h = crisp_poly({0, 0, 1});
    for (double a : kStandardAlphaGrid) {
        EXPECT_LE(hausdorff(integral_derivative_lhs(h, u, 0, 1, a, cfg), FuzzyNumber::crisp(1)), 1e-7) << a;
        EXPECT_LE(hausdorff(integral_derivative_rhs(h, u, 1, a, cfg), FuzzyNumber::crisp(1)), 1e-12) << a;
    }
}

TEST(Ftc, HomogeneousIntegers)
{
    const TimeScale z = TimeScale::uniform(-1, 3, 1);
    const FtcResult r = check_ftc_homogeneous(crisp_poly({0, 0, 1}), z, 0, 2, kStandardAlphaGrid, cfg);
    expect_pass(r.report, 1e-12);
    for (const auto& b : r.breakdowns) {
        EXPECT_EQ(b.rhs, FuzzyNumber::crisp(4));
        EXPECT_EQ(b.main_term + b.h_alpha, b.rhs);
    }
    for (double a : kStandardAlphaGrid) {
        EXPECT_LE(hausdorff(ftc_lhs(crisp_poly({0, 0, 1}), z, 0, 2, a, cfg), FuzzyNumber::crisp(4)), 1e-12);
    }
}

TEST(Ftc, HomogeneousContinuousIsClassical)
{
    const TimeScale u = TimeScale::from_intervals(std::vector<Segment>{{0, 1}});
    const auto F = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 0, 1}));
    const FtcResult r = check_ftc_homogeneous(F, u, 0, 1, kStandardAlphaGrid, cfg);
    expect_pass(r.report, 1e-8);
    for (const auto& b : r.breakdowns) {
        EXPECT_LE(hausdorff(b.rhs, gh_diff(F(1), F(0))), 1e-15);
    }
}

TEST(Ftc, HomogeneousFuzzyScalesLevels)
{
    const TimeScale z = TimeScale::uniform(0, 4, 1);
    const auto F = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 0, 1}));
    const FtcResult r = check_ftc_homogeneous(F, z, 1, 3, kStandardAlphaGrid, cfg);
    expect_pass(r.report, 1e-12);
    const FtcResult c = check_ftc_homogeneous(crisp_poly({0, 0, 1}), z, 1, 3, kStandardAlphaGrid, cfg);
    for (std::size_t i = 0; i < r.breakdowns.size(); ++i) {
        const double x = c.breakdowns[i].rhs.level(0).lo;
        const FuzzyNumber& v = r.breakdowns[i].rhs;
        for (std::size_t j = 0; j < v.size(); ++j) {
            EXPECT_NEAR(v.level(j).lo, (1 + v.grade(j)) * x, 1e-12);
            EXPECT_NEAR(v.level(j).hi, (3 - v.grade(j)) * x, 1e-12);
        }
    }
}

TEST(Ftc, HomogeneousRefusesOtherScales)
{
    const TimeScale g = TimeScale::geometric_two_sided(2, 0, 4);
    EXPECT_CODE(check_ftc_homogeneous(crisp_poly({0, 0, 1}), g, 2, 8, kStandardAlphaGrid, cfg),
                ErrorCode::NotHomogeneous);
}

TEST(Ftc, QuasiRegularGeometric)
{
    const TimeScale g = TimeScale::geometric_two_sided(2, 0, 4);
    const auto F = crisp_poly({0, 0, 1});
    const FtcResult c2 = check_ftc_quasi_regular(F, g, 2, 8, kStandardAlphaGrid, cfg);
    expect_pass(c2.report, 1e-9);
    for (const auto& b : c2.breakdowns) {
        EXPECT_EQ(b.ftc_case, 2);
        EXPECT_EQ(b.m2, 2);
        EXPECT_EQ(b.main_term + b.h_alpha, b.rhs);
    }
    const FtcResult c1 = check_ftc_quasi_regular(F, g, -8, -2, kStandardAlphaGrid, cfg);
    expect_pass(c1.report, 1e-9);
    for (const auto& b : c1.breakdowns) {
        EXPECT_EQ(b.ftc_case, 1);
        EXPECT_EQ(b.m1, 0.5);
    }
    // alpha = 1 is the classical delta form
    EXPECT_EQ(c2.breakdowns.back().rhs, gh_diff(F(8), F(2)));
}

TEST(Ftc, QuasiRegularStraddling)
{
    const TimeScale T =
        TimeScale::from_intervals(std::vector<Segment>{{-3, -3}, {-2, -2}, {-1, -1}, {0, 0}, {2, 2}, {6, 6}, {14, 14}});
    // positive and increasing on the window, so every gH difference is case (i)
    const auto F = FuzzyFunctionExpr::term(k123, CrispFn::poly({4, 1, 0.05}));
    const FtcResult r = check_ftc_quasi_regular(F, T, -2, 6, kStandardAlphaGrid, cfg);
    expect_pass(r.report, 1e-9);
    for (const auto& b : r.breakdowns) {
        EXPECT_EQ(b.ftc_case, 3);
        EXPECT_EQ(b.c.value_or(-1), 0);
        EXPECT_EQ(b.m1, 1);
        EXPECT_EQ(b.m2, 2);
    }
    // the two-window split is off when m1 != m2 and 0 < alpha < 1
    const FuzzyNumber exact = ftc_rhs_quasi_regular(F, T, -2, 6, 0.5).rhs;
    const FuzzyNumber naive = ftc_rhs_quasi_regular_naive_split(F, T, -2, 6, 0.5);
    EXPECT_GT(hausdorff(exact, naive), 0.1);
}

TEST(Ftc, QuasiRegularRefusals)
{
    const TimeScale mixed = TimeScale::from_intervals(std::vector<Segment>{{-3, -1}, {0, 2}});
    EXPECT_CODE(check_ftc_quasi_regular(crisp_poly({0, 1}), mixed, -3, 2, kStandardAlphaGrid, cfg),
                ErrorCode::NotQuasiRegular);
    EXPECT_CODE(scan_nabla_sigma(mixed, -3, 2), ErrorCode::NotQuasiRegular);
    const TimeScale odd = TimeScale::from_intervals(std::vector<Segment>{{1, 1}, {2, 2}, {4, 4}, {5, 5}, {8, 8}});
    EXPECT_CODE(scan_nabla_sigma(odd, 1, 8), ErrorCode::NablaSigmaNotPiecewiseConstant);
}

TEST(ProductRule, DiscreteAndContinuous)
{
    const auto f = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1}));
    const auto g = crisp_poly({0, 1});
    expect_pass(check_product_rule(f, g, TimeScale::uniform(0, 5, 1), {1, 2, 3, 4}, kStandardAlphaGrid, cfg), 1e-8);
    expect_pass(check_product_rule(f, g, TimeScale::from_intervals(std::vector<Segment>{{0, 2}}), {0.5, 1, 1.5},
                                   kStandardAlphaGrid, cfg),
                1e-8);
}

TEST(IntegrationByParts, Discrete)
{
    const TimeScale z = TimeScale::uniform(0, 4, 1);
    const auto t = crisp_poly({0, 1});
    expect_pass(check_integration_by_parts(t, FuzzyFunctionExpr::constant(FuzzyNumber::crisp(1)), z, 1, 3,
                                           kStandardAlphaGrid, cfg),
                1e-9);
    expect_pass(check_integration_by_parts(t, FuzzyFunctionExpr::constant(k123), z, 1, 3, kStandardAlphaGrid, cfg),
                1e-9);
    expect_pass(check_integration_by_parts(FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1})), t, z, 1, 3,
                                           kStandardAlphaGrid, cfg),
                1e-9);
}

TEST(IntegrationByParts, TypedFailureOnMissingGh)
{
    const TimeScale z = TimeScale::uniform(0, 4, 1);
    const auto f = FuzzyFunctionExpr::sum(
        {FuzzyFunctionExpr::term(FuzzyNumber::interval(-1, 1), CrispFn::poly({1, -1})),
         FuzzyFunctionExpr::term(FuzzyNumber::triangular(-2, 0, 2), CrispFn::poly({0, 1}))});
    const CheckReport r = check_integration_by_parts(f, crisp_poly({0, 1}), z, 1, 3, {0.5}, cfg);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.error.value_or(""), "GHDifferenceNotFuzzy");
}

TEST(IntegralAlgebra, StandardScales)
{
    const auto f = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1}));
    const auto g = FuzzyFunctionExpr::term(FuzzyNumber::triangular(0, 1, 2), CrispFn::sin());
    expect_pass(check_integral_algebra(f, g, TimeScale::from_intervals(std::vector<Segment>{{0, 1}}), 0, 1, 0.5, 2,
                                       kStandardAlphaGrid, cfg),
                1e-8);
    expect_pass(check_integral_algebra(f, f, TimeScale::uniform(0, 5, 1), 0, 5, 2, 0, kStandardAlphaGrid, cfg),
                1e-8);
}

TEST(Kernel, SeededChecks)
{
    expect_pass(check_gh_kernel(1000, 1), 1e-12);
    expect_pass(check_metric_axioms(1000, 1), 1e-12);
    expect_pass(check_quadrature_sanity(cfg), 1e-9);
    expect_pass(check_existence_asymmetry(cfg), 1e-6);
}

TEST(Suite, TestPoints)
{
    const TimeScale m = TimeScale::from_intervals(std::vector<Segment>{{-3, -1}, {0, 2}});
    const auto p = select_test_points(m);
    EXPECT_TRUE(std::is_sorted(p.begin(), p.end()));
    EXPECT_NE(std::find(p.begin(), p.end(), -1.0), p.end());
    EXPECT_NE(std::find(p.begin(), p.end(), 0.0), p.end());
    for (double t : p) {
        EXPECT_TRUE(m.in_kappa_both(t));
    }
    const auto z = select_test_points(TimeScale::uniform(0, 5, 1));
    EXPECT_EQ(z, (std::vector<double>{1, 2, 3, 4}));
}

TEST(Suite, AllPassAndSorted)
{
    const auto reps = standard_suite(cfg);
    ASSERT_GT(reps.size(), 20u);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        EXPECT_TRUE(reps[i].pass) << reps[i].name;
        if (i > 0) {
            EXPECT_LT(reps[i - 1].name, reps[i].name);
        }
    }
}
