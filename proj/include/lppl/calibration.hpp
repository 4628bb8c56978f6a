#pragma once

#include <cstdint>
#include <vector>

#include "lppl/linear_fit.hpp"
#include "lppl/price_series.hpp"

namespace lppl {

// Search box and optimizer settings for one window calibration. The tc
// bounds are fractions of the window span (t2 - t1) beyond the window end:
// tc is searched in (t2 + tc_lower_frac*span, t2 + tc_upper_frac*span].
struct SearchConfig {
    double tc_lower_frac = 0.0;
    double tc_upper_frac = 0.5;
    double beta_min = 0.01;
    double beta_max = 1.2;
    double omega_min = 2.0;
    double omega_max = 25.0;
    int n_starts = 12;
    double simplex_tol = 1e-8;
    int max_iters = 600;
    std::uint64_t seed = 1;

    void validate() const;
};

struct FitOutcome {
    LpplFit best;
    std::vector<LpplFit> all_starts;  // one per start, in start order
    int n_converged = 0;
};

// Minimizes the profiled cost over (tc, beta, omega) with Nelder-Mead from
// n_starts deterministic initial points (seed-shifted Halton sequence over
// the search box; probes outside the box pay a smooth quadratic penalty).
// The best fit is the lowest-cost converged start; ties keep the earliest
// start. Throws std::invalid_argument for windows shorter than 10
// observations and FitFailedError when no start yields a finite cost.
FitOutcome fit_window(const PriceSeries& series, int t1, int t2, const SearchConfig& config);

// The deterministic start points in box coordinates, exposed for tests: the
// first k points of any run are the first k points of every longer run with
// the same seed.
std::vector<Eigen::Vector3d> fit_start_points(const SearchConfig& config);

}  // namespace lppl
