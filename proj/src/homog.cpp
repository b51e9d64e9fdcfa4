#include "homogopt/homog.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "homogopt/errors.hpp"
#include "homogopt/rng.hpp"

namespace homogopt {

void HomogenizationOperator::validate(int dimension) const {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ConfigError("scale h must be a positive finite real");
    switch (quad.policy) {
    case QuadraturePolicy::ExactGauss:
        if (quad.gauss_order < 2) throw ConfigError("exact-gauss order must be >= 2");
        break;
    case QuadraturePolicy::Adaptive:
        if (!(quad.adaptive_tol > 0.0)) throw ConfigError("adaptive tolerance must be > 0");
        break;
    case QuadraturePolicy::MonteCarlo:
        if (quad.mc_samples < 100) throw ConfigError("monte-carlo needs >= 100 samples");
        if (dimension <= 3 && !quad.allow_mc_low_dim)
            throw ConfigError("monte-carlo policy is reserved for dimension > 3 "
                              "(set allow_mc_low_dim to force)");
        break;
    }
}

HomogenizationOperator make_operator(double scale, const QuadratureSpec& spec) {
    HomogenizationOperator op;
    op.scale = scale;
    op.quad = spec;
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw ConfigError("scale h must be a positive finite real");
    return op;
}

Box inset_box(const ScalarField& f, double h) {
    Box inset;
    inset.reserve(f.box.size());
    for (const Interval& iv : f.box) {
        Interval shrunk{iv.lo + 0.5 * h, iv.hi - 0.5 * h};
        if (!(shrunk.lo <= shrunk.hi)) {
            std::ostringstream os;
            os << "empty inset domain: scale h = " << h << " exceeds box edge ["
               << iv.lo << ", " << iv.hi << "]";
            throw DomainError(os.str());
        }
        inset.push_back(shrunk);
    }
    return inset;
}

bool inset_contains(const ScalarField& f, double h, std::span<const double> x) {
    if (x.size() != f.box.size()) return false;
    for (std::size_t i = 0; i < f.box.size(); ++i) {
        // A few ulps of slack so points projected onto the inset boundary
        // do not fail the check through rounding.
        const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                             (std::abs(x[i]) + h + std::abs(f.box[i].lo) + std::abs(f.box[i].hi));
        if (x[i] - 0.5 * h < f.box[i].lo - slack || x[i] + 0.5 * h > f.box[i].hi + slack)
            return false;
    }
    return true;
}

namespace {

void require_inset(const ScalarField& f, double h, std::span<const double> x) {
    if (!inset_contains(f, h, x)) {
        std::ostringstream os;
        os << "averaging cube of side " << h << " does not fit in the box at (";
        for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
        os << "); the point must sit at least h/2 = " << 0.5 * h << " inside every edge";
        throw DomainError(os.str());
    }
}

Box cube_around(std::span<const double> x, double h) {
    Box cube;
    cube.reserve(x.size());
    for (double xi : x) cube.push_back(Interval{xi - 0.5 * h, xi + 0.5 * h});
    return cube;
}

std::uint64_t point_seed(const QuadratureSpec& spec, std::span<const double> x,
                         std::uint64_t salt) {
    std::uint64_t s = mix_seed(spec.mc_seed, salt);
    for (double xi : x) s = mix_seed(s, hash_double(xi));
    return s;
}

QuadResult integrate_cube(const ScalarField& f,
                          const std::function<double(std::span<const double>)>& integrand,
                          const Box& cube, const QuadratureSpec& spec, std::uint64_t seed) {
    switch (spec.policy) {
    case QuadraturePolicy::ExactGauss:
        return gauss_legendre_box(integrand, cube, spec.gauss_order);
    case QuadraturePolicy::Adaptive: {
        double volume = 1.0;
        for (const Interval& iv : cube) volume *= iv.length();
        // adaptive_tol limits the error of the box *average*.
        return adaptive_integrate_box(integrand, cube, spec.adaptive_tol * volume);
    }
    case QuadraturePolicy::MonteCarlo:
        return monte_carlo_box(integrand, cube, spec.mc_samples, seed);
    }
    throw ConfigError("unknown quadrature policy");
}

} // namespace

double avg_gradient_1d(const ScalarField& f, const HomogenizationOperator& op, double x) {
    op.validate(f.dim);
    if (f.dim != 1) throw ConfigError("avg_gradient_1d requires a 1-D field");
    const double h = op.scale;
    require_inset(f, h, std::span<const double>(&x, 1));
    return (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
}

GradientValue avg_gradient_field(const ScalarField& f, const HomogenizationOperator& op,
                                 std::span<const double> x) {
    op.validate(f.dim);
    const double h = op.scale;
    require_inset(f, h, x);

    GradientValue out;
    out.component.resize(x.size());
    if (f.dim == 1) {
        out.component[0] = (f(x[0] + 0.5 * h) - f(x[0] - 0.5 * h)) / h;
        out.evaluations = 2;
        return out;
    }

    const int n = f.dim;
    const double hn = std::pow(h, n);
    std::vector<double> point(n);
    for (int axis = 0; axis < n; ++axis) {
        Box face;
        face.reserve(n - 1);
        for (int i = 0; i < n; ++i)
            if (i != axis) face.push_back(Interval{x[i] - 0.5 * h, x[i] + 0.5 * h});

        auto integrand = [&](std::span<const double> rest) {
            int k = 0;
            for (int i = 0; i < n; ++i)
                if (i != axis) point[i] = rest[k++];
            point[axis] = x[axis] + 0.5 * h;
            double hi = f.eval(point);
            point[axis] = x[axis] - 0.5 * h;
            double lo = f.eval(point);
            return hi - lo;
        };
        QuadResult r = integrate_cube(f, integrand, face, op.quad,
                                      point_seed(op.quad, x, 0xa11ce5 + axis));
        out.component[axis] = r.value / hn;
        out.error_estimate = std::max(out.error_estimate, r.error / hn);
        out.evaluations += 2 * r.evaluations;
    }
    return out;
}

HomogValue homogenize(const ScalarField& f, const HomogenizationOperator& op,
                      std::span<const double> x) {
    op.validate(f.dim);
    const double h = op.scale;
    require_inset(f, h, x);
    const double hn = std::pow(h, f.dim);
    Box cube = cube_around(x, h);
    QuadResult r = integrate_cube(
        f, [&](std::span<const double> p) { return f.eval(p); }, cube, op.quad,
        point_seed(op.quad, x, 0xf00d));
    return HomogValue{r.value / hn, r.error / hn, r.evaluations};
}

std::pair<double, double> kernel_convolution_check(const ScalarField& f,
                                                   const HomogenizationOperator& op, double x) {
    op.validate(f.dim);
    if (f.dim != 1) throw ConfigError("kernel_convolution_check requires a 1-D field");
    if (!f.has_gradient())
        throw ConfigError("kernel_convolution_check requires an analytic derivative");
    const double h = op.scale;
    require_inset(f, h, std::span<const double>(&x, 1));

    double quotient = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;

    Box cube = cube_around(std::span<const double>(&x, 1), h);
    auto dfdx = [&](std::span<const double> p) { return f.gradient(p)[0]; };
    QuadResult r = integrate_cube(f, dfdx, cube, op.quad,
                                  point_seed(op.quad, std::span<const double>(&x, 1), 0xdeed));
    return {quotient, r.value / h};
}

ScalarField homogenized_field(const ScalarField& f, const HomogenizationOperator& op) {
    op.validate(f.dim);
    ScalarField g;
    g.name = f.name + "|smoothed";
    g.dim = f.dim;
    g.box = inset_box(f, op.scale);
    ScalarField base = f; // copy keeps the wrapper self-contained
    HomogenizationOperator op_copy = op;
    g.eval = [base, op_copy](std::span<const double> x) {
        return homogenize(base, op_copy, x).value;
    };
    return g;
}

} // namespace homogopt
