#ifndef HOMOGOPT_ANALYSIS_HPP
#define HOMOGOPT_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homogopt/corpus.hpp"
#include "homogopt/homog.hpp"

namespace homogopt {

struct ZeroCrossing {
    double x = 0.0;          // refined root of T(h, .)
    double bracket_lo = 0.0; // endpoints with strictly opposite T signs
    double bracket_hi = 0.0;
    double residual = 0.0; // |T(h, x)|
};

struct SignRun {
    int sign = 0; // -1, 0, +1
    int length = 0;
};

/// Sign-changing zeros of T(h, .) over the inset interval. Touching zeros
/// (T reaching the dead band without changing sign) appear in the profile
/// as 0-runs but are excluded from the count.
struct ZeroCrossingReport {
    double scale = 0.0;
    Interval interval{0.0, 0.0}; // scanned (inset) interval
    int grid = 0;
    std::vector<ZeroCrossing> zeros;
    std::vector<SignRun> profile; // run-length encoded over the grid
    int sign_change_count = 0;
    double dead_band = 0.0;
    double max_abs_t = 0.0;

    /// Check the structural invariants (sorted separated zeros, opposite
    /// bracket signs, count == alternations). Returns a diagnostic or
    /// nothing when all hold.
    std::optional<std::string> invariant_violation() const;
};

ZeroCrossingReport scan_zeros(const ScalarField& f, const HomogenizationOperator& op, int grid);

std::vector<std::pair<double, int>> zero_count_curve(const ScalarField& f,
                                                     const QuadratureSpec& spec,
                                                     const std::vector<double>& h_values,
                                                     int grid);

struct ContainmentResult {
    bool pass = false;
    double margin = 0.0; // distance from the minimizer to the nearest edge
                         // of the best zero interval; negative when outside
    double best_zero = 0.0;
};

/// Theorem-2.4-style check: some zero's interval [x_T - h/2, x_T + h/2]
/// must contain the oracle global minimizer. With tied minimizers, each
/// must be covered by some zero.
ContainmentResult containment_check(const ZeroCrossingReport& report, const CorpusEntry& oracle);

/// True when the sign profile has no alternation (0-runs allowed).
bool sign_profile_check(const ZeroCrossingReport& report);

/// Default geometric scan grid for a 1-D field: 16 scales from L/40 to
/// 0.75*L where L is the box length.
std::vector<double> default_h_grid(const ScalarField& f, int points = 16);

/// Scales for the 2-D smoothed-surface census sweep: {L/16, L/8, L/4, L/2}.
std::vector<double> census_h_sweep(const ScalarField& f);

// ---------------------------------------------------------------------------
// Consolidated verification suite
// ---------------------------------------------------------------------------

struct CheckRecord {
    std::string check_id;
    std::string entry;
    std::vector<double> h_values;
    std::map<std::string, double> observed;
    bool pass = false;
    bool mandatory = true; // informational records never gate the run
    std::string note;
};

struct TheoremReport {
    std::vector<CheckRecord> records;

    bool all_mandatory_passed() const;
    int failed_mandatory() const;
};

struct VerifyConfig {
    int scan_grid = 2048;
    int census_grid = 256;
    QuadratureSpec quad; // used wherever a policy choice matters
    std::map<std::string, std::vector<double>> h_grids; // overrides per entry
    std::vector<std::string> entry_filter; // empty = whole corpus
    bool include_negative_control = false; // adds a designed-to-fail record
};

/// Registry of check ids implemented by verify_theorems. Stable; reports
/// only ever cite ids from this list.
const std::vector<std::string>& check_registry();

/// Run every applicable check over the given entries. Failing checks are
/// recorded, never thrown; records are sorted by (entry, check id).
TheoremReport verify_theorems(const std::vector<CorpusEntry>& entries, const VerifyConfig& config);

} // namespace homogopt

#endif
