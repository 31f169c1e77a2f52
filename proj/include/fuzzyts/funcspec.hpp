#ifndef FUZZYTS_FUNCSPEC_HPP
#define FUZZYTS_FUNCSPEC_HPP

#include "fuzzyts/config.hpp"
#include "fuzzyts/fuzzy.hpp"
#include "fuzzyts/timescale.hpp"

#include <functional>
#include <memory>
#include <variant>
#include <vector>

namespace fuzzyts {

// Catalog of crisp functions of t.
struct Poly {
    std::vector<double> coeffs; // c0 + c1 t + c2 t^2 + ...
};
struct Sin {
    double a = 1.0; // sin(a t + b)
    double b = 0.0;
};
struct Cos {
    double a = 1.0; // cos(a t + b)
    double b = 0.0;
};
struct Exp {
    double a = 1.0; // exp(a t)
};
struct TSinInv {}; // t sin(1/t), with value 0 at t = 0

class CrispFn {
public:
    using Repr = std::variant<Poly, Sin, Cos, Exp, TSinInv>;

    CrispFn(Repr repr) : repr_(std::move(repr)) {}

    static CrispFn poly(std::vector<double> coeffs) { return CrispFn(Poly{std::move(coeffs)}); }
    static CrispFn sin(double a = 1.0, double b = 0.0) { return CrispFn(Sin{a, b}); }
    static CrispFn cos(double a = 1.0, double b = 0.0) { return CrispFn(Cos{a, b}); }
    static CrispFn exp(double a = 1.0) { return CrispFn(Exp{a}); }
    static CrispFn tsininv() { return CrispFn(TSinInv{}); }

    double operator()(double t) const;
    const Repr& repr() const noexcept { return repr_; }

private:
    Repr repr_;
};

// Any fuzzy-valued function of t; expressions convert to this.
using FuzzyFn = std::function<FuzzyNumber(double)>;

// Immutable expression tree for f : T -> F_N(R):
//   Const(u), Term(u, g) = g(t) * u, Sum(f1, ..., fn), Prod(f, h).
// All embedded fuzzy numbers share one level resolution.
class FuzzyFunctionExpr {
public:
    struct Node;

    static FuzzyFunctionExpr constant(FuzzyNumber value);
    static FuzzyFunctionExpr term(FuzzyNumber coef, CrispFn fn);
    static FuzzyFunctionExpr sum(std::vector<FuzzyFunctionExpr> parts);
    static FuzzyFunctionExpr prod(FuzzyFunctionExpr left, FuzzyFunctionExpr right);

    FuzzyNumber operator()(double t) const;
    int resolution() const noexcept { return resolution_; }
    const Node& node() const noexcept { return *node_; }

private:
    FuzzyFunctionExpr(std::shared_ptr<const Node> node, int resolution)
        : node_(std::move(node)), resolution_(resolution) {}

    std::shared_ptr<const Node> node_;
    int resolution_;
};

struct ConstNode {
    FuzzyNumber value;
};
struct TermNode {
    FuzzyNumber coef;
    CrispFn fn;
};
struct SumNode {
    std::vector<FuzzyFunctionExpr> parts;
};
struct ProdNode {
    FuzzyFunctionExpr left;
    FuzzyFunctionExpr right;
};

struct FuzzyFunctionExpr::Node {
    std::variant<ConstNode, TermNode, SumNode, ProdNode> value;
};

inline FuzzyNumber eval(const FuzzyFunctionExpr& f, double t) { return f(t); }

// Limit of f(s) as s -> t from `side`, probing t -/+ h0 * 2^-k.
// Throws NonConvergent when the Cauchy criterion never holds.
FuzzyNumber one_sided_limit(const FuzzyFn& f, double t, Side side, const NumericConfig& cfg);
// Same, with the first probe distance given explicitly (used to keep probes
// inside a segment of a time scale).
FuzzyNumber one_sided_limit(const FuzzyFn& f, double t, Side side, const NumericConfig& cfg, double h_start);

// Flattened level endpoints [lo_0, hi_0, lo_1, hi_1, ...].
std::vector<double> flatten(const FuzzyNumber& u);
FuzzyNumber unflatten(const std::vector<double>& v, double tol, ErrorCode code);

} // namespace fuzzyts

#endif
