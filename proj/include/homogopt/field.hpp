#ifndef HOMOGOPT_FIELD_HPP
#define HOMOGOPT_FIELD_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "homogopt/errors.hpp"
#include "homogopt/expr.hpp"

namespace homogopt {

struct Interval {
    double lo;
    double hi;

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

using Box = std::vector<Interval>;

bool box_contains(const Box& box, std::span<const double> x);
double shortest_edge(const Box& box);

/// An n-variate objective over an axis-aligned box, with an optional
/// analytic gradient. Evaluators are pure; fields are safe to share
/// across threads.
struct ScalarField {
    std::string name;
    int dim = 0;
    Box box;
    std::function<double(std::span<const double>)> eval;
    std::function<std::vector<double>(std::span<const double>)> gradient; // may be empty

    bool has_gradient() const { return static_cast<bool>(gradient); }

    double operator()(std::span<const double> x) const { return eval(x); }
    double operator()(double x) const { return eval(std::span<const double>(&x, 1)); }
};

/// Build a field (and its symbolic gradient) from DSL text.
ScalarField field_from_expression(std::string name, std::string_view text,
                                  std::vector<std::string> variables, Box box);

/// Central finite-difference gradient, step 1e-7*(1+|x_i|) per axis,
/// one-sided at box edges.
std::vector<double> finite_difference_gradient(const ScalarField& f, std::span<const double> x);

/// g(x) = f(x, a*x + b) for a 2-D field. The restricted domain is the set of
/// x for which (x, a*x+b) stays inside f's box; an empty set is an error.
/// When f has an analytic gradient, g gets the chain-rule derivative.
ScalarField restrict_to_line(const ScalarField& f, double a, double b);

/// View of a 2-D field with the axes exchanged: g(u, v) = f(v, u).
ScalarField swap_axes(const ScalarField& f);

} // namespace homogopt

#endif
