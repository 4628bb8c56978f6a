#pragma once

#include <optional>

#include "lppl/model.hpp"
#include "lppl/price_series.hpp"

namespace lppl {

// Least-squares solution of the linear subproblem at fixed (tc, beta, omega).
struct LinearFit {
    double A = 0, B = 0, C1 = 0, C2 = 0;
    // Reciprocal-condition style diagnostic of the equilibrated Gram matrix;
    // 1 is perfectly conditioned, values below the rank tolerance are treated
    // as singular.
    double rcond = 0;
};

// One calibrated window.
struct LpplFit {
    LpplParams params;
    double cost = 0;        // sum of squared log-price residuals on the window
    int window_start = 0;   // t1, inclusive
    int window_end = 0;     // t2, inclusive
    bool converged = false;
};

inline constexpr double kDefaultRankTol = 1e-10;

// Solves the 4x4 normal equations for (A, B, C1, C2) minimizing the squared
// log-price residuals of the window [t1, t2] at fixed (tc, beta, omega).
// Returns nullopt when the Gram matrix is rank-deficient beyond rank_tol.
std::optional<LinearFit> try_solve_linear(double tc, double beta, double omega,
                                          const PriceSeries& series, int t1, int t2,
                                          double rank_tol = kDefaultRankTol);

// As try_solve_linear but throws SingularSystemError on rank deficiency.
LinearFit solve_linear(double tc, double beta, double omega, const PriceSeries& series,
                       int t1, int t2, double rank_tol = kDefaultRankTol);

// Cost of the window with the linear parameters profiled out: the residual
// sum of squares at the linear optimum for the given (tc, beta, omega).
// Throws on domain violations and singular systems.
double profiled_cost(double tc, double beta, double omega, const PriceSeries& series,
                     int t1, int t2, double rank_tol = kDefaultRankTol);

// Nothrow variant used inside optimizer loops; nullopt when the basis is
// degenerate or tc is inside the window.
std::optional<double> try_profiled_cost(double tc, double beta, double omega,
                                        const PriceSeries& series, int t1, int t2,
                                        double rank_tol = kDefaultRankTol);

// Full residual cost at explicit parameters (no profiling).
double residual_cost(const LpplParams& params, const PriceSeries& series, int t1, int t2);

}  // namespace lppl
