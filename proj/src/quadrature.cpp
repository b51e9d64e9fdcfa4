#include "homogopt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "homogopt/errors.hpp"
#include "homogopt/rng.hpp"

namespace homogopt {

namespace {

GaussRule compute_gauss_rule(int order) {
    GaussRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n(z).
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = order * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[order - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[order - 1 - i] = rule.weights[i];
    }
    return rule;
}

} // namespace

const GaussRule& gauss_legendre_rule(int order) {
    if (order < 2) throw ConfigError("Gauss-Legendre order must be >= 2");
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_rule(order)).first;
    return it->second;
}

QuadResult gauss_legendre(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre_rule(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return QuadResult{sum * half, 0.0, order};
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1] (positive half; the
// rule is symmetric). Gauss points are the odd-indexed Kronrod points.
constexpr double kron_nodes[8] = {
    0.0,
    0.2077849550078984676006894,
    0.4058451513773971669066064,
    0.5860872354676911302941448,
    0.7415311855993944398638648,
    0.8648644233597690727897128,
    0.9491079123427585245261897,
    0.9914553711208126392068547,
};
constexpr double kron_weights[8] = {
    0.2094821410847278280129992,
    0.2044329400752988924141620,
    0.1903505780647854099132564,
    0.1690047266392679028265834,
    0.1406532597155259187451896,
    0.1047900103222501838398763,
    0.0630920926299785532907007,
    0.0229353220105292249637320,
};
constexpr double gauss7_weights[4] = {
    0.4179591836734693877551020, // node 0.0
    0.3818300505051189449503698, // node 0.405845...
    0.2797053914892766679014678, // node 0.741531...
    0.1294849661688696932706114, // node 0.949107...
};

struct Panel {
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    fv[0] = f(mid);
    for (int i = 1; i < 8; ++i) {
        fv[2 * i - 1] = f(mid + half * kron_nodes[i]);
        fv[2 * i] = f(mid - half * kron_nodes[i]);
    }
    double kron = kron_weights[0] * fv[0];
    for (int i = 1; i < 8; ++i) kron += kron_weights[i] * (fv[2 * i - 1] + fv[2 * i]);
    double gauss = gauss7_weights[0] * fv[0];
    for (int i = 1; i < 4; ++i) gauss += gauss7_weights[i] * (fv[4 * i - 1] + fv[4 * i]);
    kron *= half;
    gauss *= half;
    // QUADPACK-style sharpened error estimate for the Kronrod value.
    double diff = std::abs(kron - gauss);
    double err = diff;
    if (diff > 0.0) err = std::min(diff, std::pow(200.0 * diff, 1.5));
    return Panel{kron, err};
}

void adaptive_recurse(const std::function<double(double)>& f, double a, double b, double tol,
                      int depth, QuadResult& acc) {
    Panel p = gk15(f, a, b);
    acc.evaluations += 15;
    if (p.error <= tol || depth <= 0) {
        acc.value += p.value;
        acc.error += p.error;
        return;
    }
    double mid = 0.5 * (a + b);
    adaptive_recurse(f, a, mid, 0.5 * tol, depth - 1, acc);
    adaptive_recurse(f, mid, b, 0.5 * tol, depth - 1, acc);
}

} // namespace

QuadResult adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                              double abs_tol, int max_depth) {
    if (abs_tol <= 0.0) throw ConfigError("adaptive tolerance must be > 0");
    QuadResult acc;
    adaptive_recurse(f, a, b, abs_tol, max_depth, acc);
    if (acc.error > 10.0 * abs_tol)
        throw QuadratureError("adaptive quadrature failed to reach tolerance", acc.error);
    return acc;
}

QuadResult gauss_legendre_box(const std::function<double(std::span<const double>)>& f,
                              const Box& box, int order) {
    const GaussRule& rule = gauss_legendre_rule(order);
    const int n = static_cast<int>(box.size());
    std::vector<int> idx(n, 0);
    std::vector<double> x(n);
    double sum = 0.0;
    long evals = 0;
    for (;;) {
        double w = 1.0;
        for (int i = 0; i < n; ++i) {
            const double mid = box[i].midpoint();
            const double half = 0.5 * box[i].length();
            x[i] = mid + half * rule.nodes[idx[i]];
            w *= rule.weights[idx[i]] * half;
        }
        sum += w * f(x);
        ++evals;
        int axis = 0;
        while (axis < n && ++idx[axis] == order) idx[axis++] = 0;
        if (axis == n) break;
    }
    return QuadResult{sum, 0.0, evals};
}

QuadResult adaptive_integrate_box(const std::function<double(std::span<const double>)>& f,
                                  const Box& box, double abs_tol) {
    const int n = static_cast<int>(box.size());
    if (n == 1) {
        return adaptive_integrate([&](double t) { return f(std::span<const double>(&t, 1)); },
                                  box[0].lo, box[0].hi, abs_tol);
    }
    // Integrate the outermost axis adaptively; each integrand evaluation is
    // an adaptive integral over the remaining axes with a tolerance scaled
    // by the outer edge length.
    Box inner(box.begin() + 1, box.end());
    long inner_evals = 0;
    double inner_error = 0.0;
    const double inner_tol = abs_tol / (1.0 + box[0].length());
    auto outer = [&](double t) {
        std::vector<double> point(n);
        point[0] = t;
        auto g = [&](std::span<const double> rest) {
            for (int i = 1; i < n; ++i) point[i] = rest[i - 1];
            return f(point);
        };
        QuadResult r = adaptive_integrate_box(g, inner, inner_tol);
        inner_evals += r.evaluations;
        inner_error = std::max(inner_error, r.error);
        return r.value;
    };
    QuadResult out = adaptive_integrate(outer, box[0].lo, box[0].hi, abs_tol);
    out.evaluations = inner_evals;
    out.error += inner_error * box[0].length();
    return out;
}

QuadResult monte_carlo_box(const std::function<double(std::span<const double>)>& f,
                           const Box& box, long samples, std::uint64_t seed) {
    if (samples < 100) throw ConfigError("Monte Carlo needs at least 100 samples");
    const int n = static_cast<int>(box.size());
    double volume = 1.0;
    for (const Interval& iv : box) volume *= iv.length();
    Rng rng(seed);
    std::vector<double> x(n);
    double mean = 0.0;
    double m2 = 0.0;
    for (long k = 0; k < samples; ++k) {
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(box[i].lo, box[i].hi);
        double v = f(x);
        double delta = v - mean;
        mean += delta / static_cast<double>(k + 1);
        m2 += delta * (v - mean);
    }
    double variance = m2 / static_cast<double>(samples - 1);
    double std_err = std::sqrt(variance / static_cast<double>(samples));
    return QuadResult{mean * volume, std_err * volume, samples};
}

} // namespace homogopt
