#include "lppl/calibration.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "lppl/errors.hpp"
#include "lppl/nelder_mead.hpp"
#include "lppl/rng.hpp"

namespace lppl {

namespace {

constexpr int kMinWindowObs = 10;
// Weight of the quadratic out-of-box penalty, in unit-cube distance.
constexpr double kBoxPenalty = 1e5;
// Floor on (tc - t2) as a fraction of the window span; keeps ln(tc - t)
// finite at the window end when tc_lower_frac is 0.
constexpr double kTcMarginFrac = 1e-3;
// Initial simplex displacement in unit-cube coordinates.
constexpr double kInitStep = 0.08;

struct SearchBox {
    Eigen::Vector3d lo, hi;  // (tc, beta, omega)

    Eigen::Vector3d to_params(const Eigen::Vector3d& u) const {
        return lo.array() + u.array() * (hi - lo).array();
    }
    static Eigen::Vector3d clamp_unit(const Eigen::Vector3d& u) {
        return u.array().max(0.0).min(1.0);
    }
};

SearchBox make_box(const SearchConfig& c, int t1, int t2) {
    const double span = static_cast<double>(t2 - t1);
    SearchBox box;
    box.lo << t2 + std::max(c.tc_lower_frac, kTcMarginFrac) * span, c.beta_min, c.omega_min;
    box.hi << t2 + c.tc_upper_frac * span, c.beta_max, c.omega_max;
    return box;
}

LpplFit complete_fit(const Eigen::Vector3d& theta, const PriceSeries& series, int t1, int t2,
                     bool converged) {
    LpplFit fit;
    fit.params.tc = theta[0];
    fit.params.beta = theta[1];
    fit.params.omega = theta[2];
    fit.window_start = t1;
    fit.window_end = t2;
    fit.converged = false;
    const auto lin = try_solve_linear(theta[0], theta[1], theta[2], series, t1, t2);
    if (!lin) return fit;  // cost stays 0, converged stays false; caller discards
    fit.params.A = lin->A;
    fit.params.B = lin->B;
    fit.params.C1 = lin->C1;
    fit.params.C2 = lin->C2;
    fit.cost = residual_cost(fit.params, series, t1, t2);
    fit.converged = converged;
    return fit;
}

}  // namespace

void SearchConfig::validate() const {
    if (!(beta_min < beta_max)) throw std::invalid_argument("SearchConfig: beta range empty");
    if (!(omega_min < omega_max)) throw std::invalid_argument("SearchConfig: omega range empty");
    if (!(tc_lower_frac >= 0.0) || !(tc_upper_frac > tc_lower_frac)) {
        throw std::invalid_argument("SearchConfig: tc fraction range empty or negative");
    }
    if (n_starts < 1) throw std::invalid_argument("SearchConfig: n_starts must be >= 1");
    if (!(simplex_tol > 0.0)) throw std::invalid_argument("SearchConfig: simplex_tol must be > 0");
    if (max_iters < 1) throw std::invalid_argument("SearchConfig: max_iters must be >= 1");
}

std::vector<Eigen::Vector3d> fit_start_points(const SearchConfig& config) {
    config.validate();
    // Cranley-Patterson rotation of a Halton set: point i is independent of
    // n_starts, so a longer run's starts are a superset of a shorter run's.
    std::uint64_t state = config.seed;
    Eigen::Vector3d shift;
    for (int d = 0; d < 3; ++d) {
        shift[d] = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    }
    // omega gets the densest (base-2) coverage: the cost landscape is most
    // multimodal along the log-frequency.
    std::vector<Eigen::Vector3d> pts;
    pts.reserve(static_cast<std::size_t>(config.n_starts));
    for (int i = 0; i < config.n_starts; ++i) {
        Eigen::Vector3d u(halton(i, 3), halton(i, 5), halton(i, 2));
        u += shift;
        u = u.array() - u.array().floor();  // wrap into [0,1)
        pts.push_back(u);
    }
    return pts;
}

FitOutcome fit_window(const PriceSeries& series, int t1, int t2, const SearchConfig& config) {
    config.validate();
    if (t1 < 0 || t2 >= series.size() || t1 >= t2) {
        throw std::invalid_argument("fit_window: bad window indices");
    }
    if (t2 - t1 + 1 < kMinWindowObs) {
        throw std::invalid_argument("fit_window: window shorter than 10 observations");
    }

    const SearchBox box = make_box(config, t1, t2);
    const auto objective = [&](const Eigen::Vector3d& u) {
        const Eigen::Vector3d uc = SearchBox::clamp_unit(u);
        const double out_sq = (u - uc).squaredNorm();
        const Eigen::Vector3d theta = box.to_params(uc);
        const auto cost = try_profiled_cost(theta[0], theta[1], theta[2], series, t1, t2);
        if (!cost) return std::numeric_limits<double>::infinity();
        return *cost + kBoxPenalty * out_sq;
    };

    SimplexOptions opts;
    opts.tol = config.simplex_tol;
    opts.max_iters = config.max_iters;
    const Eigen::Vector3d step = Eigen::Vector3d::Constant(kInitStep);

    FitOutcome outcome;
    outcome.all_starts.reserve(static_cast<std::size_t>(config.n_starts));
    int best_idx = -1;
    bool best_converged = false;
    for (const Eigen::Vector3d& u0 : fit_start_points(config)) {
        // Nudge starts off the upper faces so the initial simplex stays
        // mostly inside the box.
        const Eigen::Vector3d u_start = u0.array().min(1.0 - kInitStep);
        const SimplexResult r = nelder_mead(objective, u_start, step, opts);
        const Eigen::Vector3d theta = box.to_params(SearchBox::clamp_unit(r.x));
        LpplFit fit = complete_fit(theta, series, t1, t2, r.converged);
        const int idx = static_cast<int>(outcome.all_starts.size());
        const bool usable = std::isfinite(fit.cost) && (fit.converged || !r.converged);
        if (fit.converged) ++outcome.n_converged;
        // Selection prefers converged fits; among equals, strictly lower cost
        // wins so ties keep the earliest start.
        if (usable && std::isfinite(fit.cost)) {
            const bool better =
                best_idx < 0 ||
                (fit.converged && !best_converged) ||
                (fit.converged == best_converged && fit.cost < outcome.all_starts[best_idx].cost);
            if (better) {
                best_idx = idx;
                best_converged = fit.converged;
            }
        }
        outcome.all_starts.push_back(std::move(fit));
    }

    if (best_idx < 0) {
        throw FitFailedError("fit_window: no start produced a finite cost");
    }
    outcome.best = outcome.all_starts[static_cast<std::size_t>(best_idx)];
    return outcome;
}

}  // namespace lppl
