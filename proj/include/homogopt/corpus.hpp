#ifndef HOMOGOPT_CORPUS_HPP
#define HOMOGOPT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "homogopt/field.hpp"

namespace homogopt {

/// Expected terminal zero count of T(h,.) (or analogue) once h is large:
/// two interior global extrema, one, none (monotone), identically zero, or
/// ambiguous because tied extrema collapse differently than predicted.
enum class TerminalClass {
    TwoInterior,
    OneInterior,
    Monotone,
    IdenticallyZero,
    EqualExtrema,
};

std::string to_string(TerminalClass c);

struct CorpusEntry {
    ScalarField field;
    std::vector<std::vector<double>> global_minimizers; // all tied minimizers
    double global_min_value = 0.0;
    std::string oracle_provenance;
    int local_min_count = 0; // interior local minima on the box
    std::vector<std::string> tags;
    TerminalClass terminal_class = TerminalClass::OneInterior;

    bool has_tag(const std::string& t) const;
};

/// The built-in test corpus. Oracle minimizers are recomputed from a dense
/// grid plus local refinement on first use (closed forms are not trusted);
/// the result is cached for the process lifetime.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpus_entry(const std::string& name);

// ---------------------------------------------------------------------------
// Brute-force extremum census (independent oracle for the analysis checks)
// ---------------------------------------------------------------------------

struct ExtremumPoint {
    std::vector<double> x;
    double value = 0.0;
    bool boundary = false;
    int tie_group = -1; // extrema within 1e-9 of each other share a group
};

struct ExtremaReport {
    std::vector<ExtremumPoint> minima;
    std::vector<ExtremumPoint> maxima;
    double value_tie_tol = 1e-9;

    int interior_minima() const;
    int interior_maxima() const;
    bool has_equal_minima() const;
};

/// Classify grid points of a 1-D or 2-D field by neighbor comparison.
/// 1-D candidates are refined by golden section on f and, when an analytic
/// gradient exists, by bisection on f'. Boundary extrema are flagged, ties
/// within 1e-9 in value share a tie group.
ExtremaReport brute_force_extrema(const ScalarField& f, int grid_per_axis);

/// Neighbor-comparison census of interior extrema for a precomputed grid of
/// values (row-major, nx*ny). Used for the 2-D smoothed-surface sweeps.
int count_grid_extrema(const std::vector<double>& values, int nx, int ny);

} // namespace homogopt

#endif
