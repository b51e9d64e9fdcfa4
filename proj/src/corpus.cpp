#include "homogopt/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "homogopt/rootfind.hpp"

namespace homogopt {

std::string to_string(TerminalClass c) {
    switch (c) {
    case TerminalClass::TwoInterior: return "two-interior";
    case TerminalClass::OneInterior: return "one-interior";
    case TerminalClass::Monotone: return "monotone";
    case TerminalClass::IdenticallyZero: return "identically-zero";
    case TerminalClass::EqualExtrema: return "equal-extrema";
    }
    return "?";
}

bool CorpusEntry::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

int ExtremaReport::interior_minima() const {
    int n = 0;
    for (const auto& m : minima)
        if (!m.boundary) ++n;
    return n;
}

int ExtremaReport::interior_maxima() const {
    int n = 0;
    for (const auto& m : maxima)
        if (!m.boundary) ++n;
    return n;
}

bool ExtremaReport::has_equal_minima() const {
    for (std::size_t i = 0; i < minima.size(); ++i)
        for (std::size_t j = i + 1; j < minima.size(); ++j)
            if (minima[i].tie_group == minima[j].tie_group && minima[i].tie_group >= 0)
                return true;
    return false;
}

namespace {

void assign_tie_groups(std::vector<ExtremumPoint>& pts, double tol) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a].value < pts[b].value; });
    int group = -1;
    double anchor = 0.0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (k == 0 || std::abs(pts[order[k]].value - anchor) > tol) {
            ++group;
            anchor = pts[order[k]].value;
        }
        pts[order[k]].tie_group = group;
    }
}

/// Refine a bracketed 1-D interior minimum: golden section on f, then
/// bisection on f' when an analytic derivative is available.
double refine_min_1d(const ScalarField& f, double lo, double hi, bool maximize) {
    auto value = [&](double x) { return maximize ? -f(x) : f(x); };
    double x = golden_section_minimize(value, lo, hi, 1e-13 * (1.0 + hi - lo));
    if (f.has_gradient()) {
        auto deriv = [&](double t) {
            double g = f.gradient(std::span<const double>(&t, 1))[0];
            return maximize ? -g : g;
        };
        if (deriv(lo) < 0.0 && deriv(hi) > 0.0)
            x = bisect_root(deriv, lo, hi, 1e-15 * (1.0 + std::abs(hi)));
    }
    return x;
}

ExtremaReport brute_force_1d(const ScalarField& f, int grid) {
    ExtremaReport report;
    const Interval iv = f.box[0];
    const double step = iv.length() / (grid - 1);
    std::vector<double> vals(grid);
    for (int i = 0; i < grid; ++i) vals[i] = f(iv.lo + i * step);

    auto record = [&](std::vector<ExtremumPoint>& out, double x, double v, bool boundary) {
        out.push_back(ExtremumPoint{{x}, v, boundary, -1});
    };

    for (int i = 1; i + 1 < grid; ++i) {
        double x = iv.lo + i * step;
        if (vals[i] < vals[i - 1] && vals[i] < vals[i + 1]) {
            double xr = refine_min_1d(f, x - step, x + step, false);
            record(report.minima, xr, f(xr), false);
        } else if (vals[i] > vals[i - 1] && vals[i] > vals[i + 1]) {
            double xr = refine_min_1d(f, x - step, x + step, true);
            record(report.maxima, xr, f(xr), false);
        }
    }
    if (vals[0] < vals[1]) record(report.minima, iv.lo, vals[0], true);
    if (vals[0] > vals[1]) record(report.maxima, iv.lo, vals[0], true);
    if (vals[grid - 1] < vals[grid - 2]) record(report.minima, iv.hi, vals[grid - 1], true);
    if (vals[grid - 1] > vals[grid - 2]) record(report.maxima, iv.hi, vals[grid - 1], true);

    assign_tie_groups(report.minima, report.value_tie_tol);
    assign_tie_groups(report.maxima, report.value_tie_tol);
    return report;
}

ExtremaReport brute_force_2d(const ScalarField& f, int grid) {
    ExtremaReport report;
    const Interval ix = f.box[0];
    const Interval iy = f.box[1];
    const double sx = ix.length() / (grid - 1);
    const double sy = iy.length() / (grid - 1);
    std::vector<double> vals(static_cast<std::size_t>(grid) * grid);
    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            double p[2] = {ix.lo + i * sx, iy.lo + j * sy};
            vals[static_cast<std::size_t>(i) * grid + j] = f.eval(std::span<const double>(p, 2));
        }
    }
    auto at = [&](int i, int j) { return vals[static_cast<std::size_t>(i) * grid + j]; };

    for (int i = 0; i < grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            bool boundary = (i == 0 || j == 0 || i == grid - 1 || j == grid - 1);
            bool is_min = true;
            bool is_max = true;
            double v = at(i, j);
            for (int di = -1; di <= 1 && (is_min || is_max); ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    int ni = i + di;
                    int nj = j + dj;
                    if (ni < 0 || nj < 0 || ni >= grid || nj >= grid) continue;
                    double w = at(ni, nj);
                    if (v >= w) is_min = false;
                    if (v <= w) is_max = false;
                }
            }
            if (is_min)
                report.minima.push_back(
                    ExtremumPoint{{ix.lo + i * sx, iy.lo + j * sy}, v, boundary, -1});
            if (is_max)
                report.maxima.push_back(
                    ExtremumPoint{{ix.lo + i * sx, iy.lo + j * sy}, v, boundary, -1});
        }
    }
    assign_tie_groups(report.minima, report.value_tie_tol);
    assign_tie_groups(report.maxima, report.value_tie_tol);
    return report;
}

} // namespace

ExtremaReport brute_force_extrema(const ScalarField& f, int grid_per_axis) {
    if (grid_per_axis < 64) throw ConfigError("brute_force_extrema needs grid >= 64 per axis");
    if (f.dim == 1) return brute_force_1d(f, grid_per_axis);
    if (f.dim == 2) return brute_force_2d(f, grid_per_axis);
    throw ConfigError("brute_force_extrema supports 1-D and 2-D fields only");
}

int count_grid_extrema(const std::vector<double>& values, int nx, int ny) {
    auto at = [&](int i, int j) { return values[static_cast<std::size_t>(i) * ny + j]; };
    int count = 0;
    for (int i = 1; i + 1 < nx; ++i) {
        for (int j = 1; j + 1 < ny; ++j) {
            bool is_min = true;
            bool is_max = true;
            double v = at(i, j);
            for (int di = -1; di <= 1 && (is_min || is_max); ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    double w = at(i + di, j + dj);
                    if (v >= w) is_min = false;
                    if (v <= w) is_max = false;
                }
            }
            if (is_min || is_max) ++count;
        }
    }
    return count;
}

// ---------------------------------------------------------------------------
// Corpus construction. Oracles come from dense grids with local refinement;
// closed forms are checked against them in the tests, never substituted.
// ---------------------------------------------------------------------------

namespace {

struct OracleResult {
    std::vector<std::vector<double>> minimizers;
    double value;
    std::string provenance;
};

OracleResult dense_grid_oracle_1d(const ScalarField& f, int grid) {
    ExtremaReport rep = brute_force_1d(f, grid);
    OracleResult out;
    out.provenance = "dense-grid(" + std::to_string(grid) + ")+golden+deriv-bisect";
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : rep.minima) best = std::min(best, m.value);
    for (const auto& m : rep.minima)
        if (m.value <= best + rep.value_tie_tol) out.minimizers.push_back(m.x);
    std::sort(out.minimizers.begin(), out.minimizers.end());
    out.value = best;
    return out;
}

/// Grid scan plus coordinate-wise refinement: per axis, a dense 1-D scan of
/// the section followed by golden polishing. Exact for separable fields;
/// used only where the basin is coordinate-convex.
OracleResult coordinate_oracle(const ScalarField& f, int scan_grid, int axis_grid) {
    const int n = f.dim;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = f.box[i].midpoint();

    double best = std::numeric_limits<double>::infinity();
    if (n == 2 && scan_grid > 1) {
        const double sx = f.box[0].length() / (scan_grid - 1);
        const double sy = f.box[1].length() / (scan_grid - 1);
        for (int i = 0; i < scan_grid; ++i) {
            for (int j = 0; j < scan_grid; ++j) {
                double p[2] = {f.box[0].lo + i * sx, f.box[1].lo + j * sy};
                double v = f.eval(std::span<const double>(p, 2));
                if (v < best) {
                    best = v;
                    x = {p[0], p[1]};
                }
            }
        }
    }

    for (int sweep = 0; sweep < 6; ++sweep) {
        for (int axis = 0; axis < n; ++axis) {
            const Interval iv = f.box[axis];
            const double step = iv.length() / (axis_grid - 1);
            double arg = x[axis];
            double argv = std::numeric_limits<double>::infinity();
            std::vector<double> p = x;
            for (int i = 0; i < axis_grid; ++i) {
                p[axis] = iv.lo + i * step;
                double v = f.eval(p);
                if (v < argv) {
                    argv = v;
                    arg = p[axis];
                }
            }
            double lo = std::max(iv.lo, arg - step);
            double hi = std::min(iv.hi, arg + step);
            p = x;
            x[axis] = golden_section_minimize(
                [&](double t) {
                    p[axis] = t;
                    return f.eval(p);
                },
                lo, hi, 1e-13 * (1.0 + iv.length()));
        }
    }
    OracleResult out;
    out.minimizers = {x};
    out.value = f.eval(x);
    out.provenance = "dense-grid+coordinate-refine";
    return out;
}

CorpusEntry make_entry(ScalarField field, std::vector<std::string> tags, TerminalClass cls) {
    CorpusEntry e;
    e.field = std::move(field);
    e.tags = std::move(tags);
    e.terminal_class = cls;
    return e;
}

std::vector<CorpusEntry> build_corpus() {
    const std::string two_pi = "6.2831853071795862";
    std::vector<CorpusEntry> entries;

    {
        CorpusEntry e = make_entry(
            field_from_expression("double_well_sym", "x^4 - x^2", {"x"}, {{-2.0, 2.0}}),
            {"multimodal", "equal-minima"}, TerminalClass::EqualExtrema);
        OracleResult o = dense_grid_oracle_1d(e.field, 1'000'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = brute_force_1d(e.field, 8193).interior_minima();
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(
            field_from_expression("double_well_tilted", "x^4 - x^2 + 0.2*x", {"x"}, {{-2.0, 2.0}}),
            {"multimodal"}, TerminalClass::OneInterior);
        OracleResult o = dense_grid_oracle_1d(e.field, 1'000'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = brute_force_1d(e.field, 8193).interior_minima();
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(field_from_expression("cubic", "x^3", {"x"}, {{-1.0, 1.0}}),
                                   {"monotone", "boundary-extremum"}, TerminalClass::Monotone);
        OracleResult o = dense_grid_oracle_1d(e.field, 100'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = 0;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(field_from_expression("neg_ramp", "-x", {"x"}, {{0.0, 1.0}}),
                                   {"monotone", "boundary-extremum"}, TerminalClass::Monotone);
        OracleResult o = dense_grid_oracle_1d(e.field, 100'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = 0;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(field_from_expression("const_one", "1", {"x"}, {{-1.0, 1.0}}),
                                   {"constant"}, TerminalClass::IdenticallyZero);
        e.global_minimizers = {}; // every point ties; none is singled out
        e.global_min_value = 1.0;
        e.oracle_provenance = "constant";
        e.local_min_count = 0;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(
            field_from_expression("sine_tilted", "sin(3*x) + 0.1*x", {"x"}, {{-2.0, 2.0}}),
            {"multimodal"}, TerminalClass::TwoInterior);
        OracleResult o = dense_grid_oracle_1d(e.field, 1'000'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = brute_force_1d(e.field, 8193).interior_minima();
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(
            field_from_expression("bowl2d", "x^2 + y^2", {"x", "y"}, {{-2.0, 2.0}, {-2.0, 2.0}}),
            {"convex"}, TerminalClass::OneInterior);
        OracleResult o = coordinate_oracle(e.field, 257, 20'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = 1;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(field_from_expression("quad_cross", "x^2 + x*y + y^2",
                                                         {"x", "y"}, {{-2.0, 2.0}, {-2.0, 2.0}}),
                                   {"convex"}, TerminalClass::OneInterior);
        // Cross term: coordinate sweeps still converge (positive definite).
        OracleResult o = coordinate_oracle(e.field, 257, 20'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = 1;
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(
            field_from_expression("fourwell2d", "(x^2 - 1)^2 + (y^2 - 1)^2 + 0.3*x + 0.1*y",
                                  {"x", "y"}, {{-2.0, 2.0}, {-2.0, 2.0}}),
            {"multimodal"}, TerminalClass::OneInterior);
        OracleResult o = coordinate_oracle(e.field, 513, 100'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = brute_force_2d(e.field, 513).interior_minima();
        entries.push_back(std::move(e));
    }
    {
        CorpusEntry e = make_entry(
            field_from_expression("rastrigin_tilted",
                                  "x^2 + y^2 + 10*(2 - cos(" + two_pi + "*x) - cos(" + two_pi +
                                      "*y)) + 0.3*x + 0.4*y",
                                  {"x", "y"}, {{-5.0, 5.0}, {-5.0, 5.0}}),
            {"multimodal"}, TerminalClass::OneInterior);
        OracleResult o = coordinate_oracle(e.field, 513, 100'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = o.provenance;
        e.local_min_count = brute_force_2d(e.field, 513).interior_minima();
        entries.push_back(std::move(e));
    }
    {
        std::string text;
        for (int i = 1; i <= 4; ++i) {
            if (i > 1) text += " + ";
            std::string v = "x" + std::to_string(i);
            text += v + "^2 - cos(" + two_pi + "*" + v + ")";
        }
        CorpusEntry e = make_entry(
            field_from_expression("multiwell4d", text, {"x1", "x2", "x3", "x4"},
                                  Box(4, Interval{-2.0, 2.0})),
            {"multimodal"}, TerminalClass::OneInterior);
        // Separable by construction: the axis section through the box center
        // is the axis objective itself, so coordinate refinement is exact.
        OracleResult o = coordinate_oracle(e.field, 0, 100'001);
        e.global_minimizers = o.minimizers;
        e.global_min_value = o.value;
        e.oracle_provenance = "separable: per-axis dense grid";
        ScalarField axis = field_from_expression("multiwell4d_axis",
                                                 "x^2 - cos(" + two_pi + "*x)", {"x"},
                                                 {{-2.0, 2.0}});
        int axis_minima = brute_force_1d(axis, 8193).interior_minima();
        e.local_min_count = axis_minima * axis_minima * axis_minima * axis_minima;
        entries.push_back(std::move(e));
    }
    return entries;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build_corpus();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.field.name == name) return e;
    throw ConfigError("unknown corpus entry '" + name + "'");
}

} // namespace homogopt
