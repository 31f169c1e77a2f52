#include "fuzzyts/funcspec.hpp"

#include "fuzzyts/limits.hpp"

#include <cmath>
#include <string>

namespace fuzzyts {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_resolution(int expected, int got)
{
    if (expected != got) {
        raise(ErrorCode::ResolutionMismatch,
              "expression mixes resolutions " + std::to_string(expected) + " and " + std::to_string(got));
    }
}

} // namespace

double CrispFn::operator()(double t) const
{
    return std::visit(overloaded{
                          [t](const Poly& p) {
                              // Horner
                              double acc = 0.0;
                              for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
                                  acc = acc * t + *it;
                              }
                              return acc;
                          },
                          [t](const Sin& s) { return std::sin(s.a * t + s.b); },
                          [t](const Cos& c) { return std::cos(c.a * t + c.b); },
                          [t](const Exp& e) { return std::exp(e.a * t); },
                          [t](const TSinInv&) { return t == 0.0 ? 0.0 : t * std::sin(1.0 / t); },
                      },
                      repr_);
}

FuzzyFunctionExpr FuzzyFunctionExpr::constant(FuzzyNumber value)
{
    const int m = value.resolution();
    return FuzzyFunctionExpr(std::make_shared<const Node>(Node{ConstNode{std::move(value)}}), m);
}

FuzzyFunctionExpr FuzzyFunctionExpr::term(FuzzyNumber coef, CrispFn fn)
{
    const int m = coef.resolution();
    return FuzzyFunctionExpr(std::make_shared<const Node>(Node{TermNode{std::move(coef), std::move(fn)}}), m);
}

FuzzyFunctionExpr FuzzyFunctionExpr::sum(std::vector<FuzzyFunctionExpr> parts)
{
    if (parts.empty()) {
        raise(ErrorCode::SchemaError, "sum needs at least one part");
    }
    const int m = parts.front().resolution();
    for (const auto& p : parts) {
        require_resolution(m, p.resolution());
    }
    return FuzzyFunctionExpr(std::make_shared<const Node>(Node{SumNode{std::move(parts)}}), m);
}

FuzzyFunctionExpr FuzzyFunctionExpr::prod(FuzzyFunctionExpr left, FuzzyFunctionExpr right)
{
    const int m = left.resolution();
    require_resolution(m, right.resolution());
    return FuzzyFunctionExpr(std::make_shared<const Node>(Node{ProdNode{std::move(left), std::move(right)}}), m);
}

FuzzyNumber FuzzyFunctionExpr::operator()(double t) const
{
    return std::visit(overloaded{
                          [](const ConstNode& c) { return c.value; },
                          [t](const TermNode& n) { return scalar_mul(n.fn(t), n.coef); },
                          [t](const SumNode& s) {
                              FuzzyNumber acc = s.parts.front()(t);
                              for (std::size_t i = 1; i < s.parts.size(); ++i) {
                                  acc = add(acc, s.parts[i](t));
                              }
                              return acc;
                          },
                          [t](const ProdNode& p) { return mul(p.left(t), p.right(t)); },
                      },
                      node_->value);
}

std::vector<double> flatten(const FuzzyNumber& u)
{
    std::vector<double> out;
    out.reserve(2 * u.size());
    for (const auto& lv : u.levels()) {
        out.push_back(lv.lo);
        out.push_back(lv.hi);
    }
    return out;
}

FuzzyNumber unflatten(const std::vector<double>& v, double tol, ErrorCode code)
{
    std::vector<Interval> levels(v.size() / 2);
    for (std::size_t j = 0; j < levels.size(); ++j) {
        levels[j] = {v[2 * j], v[2 * j + 1]};
    }
    return FuzzyNumber::from_levels_tolerant(std::move(levels), tol, code);
}

FuzzyNumber one_sided_limit(const FuzzyFn& f, double t, Side side, const NumericConfig& cfg)
{
    return one_sided_limit(f, t, side, cfg, cfg.h0);
}

FuzzyNumber one_sided_limit(const FuzzyFn& f, double t, Side side, const NumericConfig& cfg, double h_start)
{
    const double dir = side == Side::Right ? 1.0 : -1.0;
    auto sample = [&](double h) { return flatten(f(t + dir * h)); };
    auto lim = detail::richardson_limit(sample, h_start, cfg);
    if (!lim) {
        raise(ErrorCode::NonConvergent, "one-sided limit at t=" + std::to_string(t) + " does not settle");
    }
    // Extrapolation can disturb level ordering by roughly the tolerance.
    return unflatten(*lim, 10.0 * cfg.limit_tol, ErrorCode::NonConvergent);
}

} // namespace fuzzyts
