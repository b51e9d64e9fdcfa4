#ifndef HOMOGOPT_QUADRATURE_HPP
#define HOMOGOPT_QUADRATURE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "homogopt/field.hpp"

namespace homogopt {

struct QuadResult {
    double value = 0.0;
    double error = 0.0; // estimate; 0 for fixed Gauss rules
    long evaluations = 0;
};

/// Nodes and weights of the order-n Gauss-Legendre rule on [-1, 1].
/// Computed by Newton iteration on the Legendre recurrence and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre_rule(int order);

/// Fixed-order Gauss-Legendre on [a, b]. Exact for polynomials of degree
/// <= 2*order - 1.
QuadResult gauss_legendre(const std::function<double(double)>& f, double a, double b, int order);

/// Adaptive Gauss7/Kronrod15 with recursive panel bisection until the local
/// error estimate meets the tolerance share of the panel.
QuadResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_depth = 48);

/// Tensor-product Gauss-Legendre over an n-dimensional box.
QuadResult gauss_legendre_box(const std::function<double(std::span<const double>)>& f,
                              const Box& box, int order);

/// Nested (per-axis) adaptive integration over an n-dimensional box.
QuadResult adaptive_integrate_box(const std::function<double(std::span<const double>)>& f,
                                  const Box& box, double abs_tol);

/// Monte Carlo mean-value integration over a box: returns the integral
/// (mean times volume) with the standard error of that estimate.
QuadResult monte_carlo_box(const std::function<double(std::span<const double>)>& f,
                           const Box& box, long samples, std::uint64_t seed);

} // namespace homogopt

#endif
