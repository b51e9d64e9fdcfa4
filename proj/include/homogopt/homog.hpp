#ifndef HOMOGOPT_HOMOG_HPP
#define HOMOGOPT_HOMOG_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "homogopt/field.hpp"
#include "homogopt/quadrature.hpp"

namespace homogopt {

enum class QuadraturePolicy {
    ExactGauss, // fixed-order tensor Gauss-Legendre
    Adaptive,   // tolerance-driven panel subdivision
    MonteCarlo, // uniform sampling in the cube
};

/// Quadrature configuration without a scale. Monte Carlo is reserved for
/// dimensions above 3 unless `allow_mc_low_dim` is set.
struct QuadratureSpec {
    QuadraturePolicy policy = QuadraturePolicy::ExactGauss;
    int gauss_order = 8;
    double adaptive_tol = 1e-10;
    long mc_samples = 100'000;
    std::uint64_t mc_seed = 0x8d1f2a3c5b7e9d01ull;
    bool allow_mc_low_dim = false;
};

/// A smoothing scale plus how to integrate over its cube.
struct HomogenizationOperator {
    double scale = 1.0; // h > 0
    QuadratureSpec quad;

    void validate(int dimension) const; // throws ConfigError
};

HomogenizationOperator make_operator(double scale, const QuadratureSpec& spec = {});

/// One smoothed value with its quadrature error estimate and cost.
struct HomogValue {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

struct GradientValue {
    std::vector<double> component;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// The subregion of f's box where the full side-h cube fits. Throws
/// DomainError when h exceeds an edge (empty inset domain).
Box inset_box(const ScalarField& f, double h);
bool inset_contains(const ScalarField& f, double h, std::span<const double> x);

/// Symmetric difference quotient (f(x+h/2) - f(x-h/2)) / h: exactly two
/// evaluations, no quadrature. The 1-D average gradient.
double avg_gradient_1d(const ScalarField& f, const HomogenizationOperator& op, double x);

/// Per-axis box averages of the partial derivatives over the cube of side h
/// centered at x. Component i is computed by collapsing the i-th integral
/// with the fundamental theorem of calculus: an (n-1)-D quadrature of
/// f(..., x_i + h/2, ...) - f(..., x_i - h/2, ...), divided by h^n. No
/// analytic partials are needed.
GradientValue avg_gradient_field(const ScalarField& f, const HomogenizationOperator& op,
                                 std::span<const double> x);

/// Box average of f over the cube of side h centered at x.
HomogValue homogenize(const ScalarField& f, const HomogenizationOperator& op,
                      std::span<const double> x);

/// The two sides of the 1-D difference-quotient identity: the symmetric
/// difference quotient, and the box average of the analytic derivative
/// computed by quadrature. Requires an analytic gradient.
std::pair<double, double> kernel_convolution_check(const ScalarField& f,
                                                   const HomogenizationOperator& op, double x);

/// F(h, .) wrapped as a field over the inset box. No analytic gradient;
/// differentiate with avg_gradient_field instead.
ScalarField homogenized_field(const ScalarField& f, const HomogenizationOperator& op);

} // namespace homogopt

#endif
