#include "homogopt/field.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace homogopt {

bool box_contains(const Box& box, std::span<const double> x) {
    if (x.size() != box.size()) return false;
    for (std::size_t i = 0; i < box.size(); ++i)
        if (!box[i].contains(x[i])) return false;
    return true;
}

double shortest_edge(const Box& box) {
    double e = box.front().length();
    for (const Interval& iv : box) e = std::min(e, iv.length());
    return e;
}

namespace {
void validate_box(const Box& box) {
    for (const Interval& iv : box) {
        if (!(iv.lo < iv.hi) || !std::isfinite(iv.lo) || !std::isfinite(iv.hi))
            throw ConfigError("box interval must be finite with lo < hi");
    }
}
} // namespace

ScalarField field_from_expression(std::string name, std::string_view text,
                                  std::vector<std::string> variables, Box box) {
    if (box.size() != variables.size())
        throw ConfigError("box dimension does not match variable count");
    validate_box(box);

    Expression f = parse_expression(text, variables);
    auto partials = std::make_shared<std::vector<Expression>>();
    partials->reserve(variables.size());
    for (const std::string& v : variables) partials->push_back(differentiate(f, v));

    ScalarField field;
    field.name = std::move(name);
    field.dim = static_cast<int>(variables.size());
    field.box = std::move(box);
    field.eval = [f](std::span<const double> x) { return evaluate(f, x); };
    field.gradient = [partials](std::span<const double> x) {
        std::vector<double> g(partials->size());
        for (std::size_t i = 0; i < partials->size(); ++i)
            g[i] = evaluate((*partials)[i], x);
        return g;
    };
    return field;
}

std::vector<double> finite_difference_gradient(const ScalarField& f, std::span<const double> x) {
    std::vector<double> g(x.size());
    std::vector<double> p(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double step = 1e-7 * (1.0 + std::abs(x[i]));
        const Interval& iv = f.box[i];
        double hi = std::min(x[i] + step, iv.hi);
        double lo = std::max(x[i] - step, iv.lo);
        p[i] = hi;
        double fhi = f.eval(p);
        p[i] = lo;
        double flo = f.eval(p);
        p[i] = x[i];
        g[i] = (fhi - flo) / (hi - lo);
    }
    return g;
}

ScalarField restrict_to_line(const ScalarField& f, double a, double b) {
    if (f.dim != 2) throw ConfigError("restrict_to_line requires a 2-D field");

    Interval xr = f.box[0];
    if (a == 0.0) {
        if (!f.box[1].contains(b)) {
            std::ostringstream os;
            os << "line y = " << a << "*x + " << b << " misses the box";
            throw DomainError(os.str());
        }
    } else {
        double u = (f.box[1].lo - b) / a;
        double v = (f.box[1].hi - b) / a;
        xr.lo = std::max(xr.lo, std::min(u, v));
        xr.hi = std::min(xr.hi, std::max(u, v));
        if (!(xr.lo < xr.hi)) {
            std::ostringstream os;
            os << "line y = " << a << "*x + " << b << " has empty restricted domain";
            throw DomainError(os.str());
        }
    }

    ScalarField g;
    g.name = f.name + "|line";
    g.dim = 1;
    g.box = {xr};
    auto eval2 = f.eval;
    g.eval = [eval2, a, b](std::span<const double> x) {
        double p[2] = {x[0], a * x[0] + b};
        return eval2(std::span<const double>(p, 2));
    };
    if (f.has_gradient()) {
        auto grad2 = f.gradient;
        g.gradient = [grad2, a, b](std::span<const double> x) {
            double p[2] = {x[0], a * x[0] + b};
            std::vector<double> gf = grad2(std::span<const double>(p, 2));
            return std::vector<double>{gf[0] + a * gf[1]};
        };
    }
    return g;
}

ScalarField swap_axes(const ScalarField& f) {
    if (f.dim != 2) throw ConfigError("swap_axes requires a 2-D field");
    ScalarField g;
    g.name = f.name + "|swapped";
    g.dim = 2;
    g.box = {f.box[1], f.box[0]};
    auto eval2 = f.eval;
    g.eval = [eval2](std::span<const double> x) {
        double p[2] = {x[1], x[0]};
        return eval2(std::span<const double>(p, 2));
    };
    if (f.has_gradient()) {
        auto grad2 = f.gradient;
        g.gradient = [grad2](std::span<const double> x) {
            double p[2] = {x[1], x[0]};
            std::vector<double> gf = grad2(std::span<const double>(p, 2));
            return std::vector<double>{gf[1], gf[0]};
        };
    }
    return g;
}

} // namespace homogopt
