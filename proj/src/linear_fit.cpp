#include "lppl/linear_fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "lppl/errors.hpp"

namespace lppl {

namespace {

struct LinearSystem {
    Eigen::Matrix4d gram;
    Eigen::Vector4d rhs;
};

// Gram matrix and right-hand side of the normal equations over the basis
// (1, f, g, h) against the window's log-prices.
LinearSystem build_normal_equations(const Basis& b, const Eigen::Ref<const Eigen::ArrayXd>& y) {
    const double n = static_cast<double>(y.size());
    const double sf = b.f.sum(), sg = b.g.sum(), sh = b.h.sum();
    const double sff = b.f.square().sum();
    const double sgg = b.g.square().sum();
    const double shh = b.h.square().sum();
    const double sfg = (b.f * b.g).sum();
    const double sfh = (b.f * b.h).sum();
    const double sgh = (b.g * b.h).sum();

    LinearSystem sys;
    sys.gram << n, sf, sg, sh,
                sf, sff, sfg, sfh,
                sg, sfg, sgg, sgh,
                sh, sfh, sgh, shh;
    sys.rhs << y.sum(), (b.f * y).sum(), (b.g * y).sum(), (b.h * y).sum();
    return sys;
}

std::optional<LinearFit> solve_equilibrated(const LinearSystem& sys, double rank_tol) {
    // Symmetric diagonal scaling keeps the conditioning diagnostic meaningful
    // when the basis columns have very different magnitudes.
    Eigen::Vector4d scale;
    for (int i = 0; i < 4; ++i) {
        const double d = sys.gram(i, i);
        if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
        scale[i] = 1.0 / std::sqrt(d);
    }
    const Eigen::Matrix4d scaled =
        scale.asDiagonal() * sys.gram * scale.asDiagonal();

    const Eigen::PartialPivLU<Eigen::Matrix4d> lu(scaled);
    const Eigen::Matrix4d& lu_matrix = lu.matrixLU();
    double umin = std::numeric_limits<double>::infinity(), umax = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double u = std::abs(lu_matrix(i, i));
        umin = std::min(umin, u);
        umax = std::max(umax, u);
    }
    if (!(umax > 0.0) || !std::isfinite(umax)) return std::nullopt;
    const double rcond = umin / umax;
    if (!(rcond > rank_tol)) return std::nullopt;

    const Eigen::Vector4d coeffs =
        scale.asDiagonal() * lu.solve((scale.asDiagonal() * sys.rhs).eval());
    if (!coeffs.allFinite()) return std::nullopt;

    LinearFit fit;
    fit.A = coeffs[0];
    fit.B = coeffs[1];
    fit.C1 = coeffs[2];
    fit.C2 = coeffs[3];
    fit.rcond = rcond;
    return fit;
}

double residual_sum(const LinearFit& fit, const Basis& b,
                    const Eigen::Ref<const Eigen::ArrayXd>& y) {
    const Eigen::ArrayXd model = fit.A + fit.B * b.f + fit.C1 * b.g + fit.C2 * b.h;
    return (y - model).square().sum();
}

void check_window(const PriceSeries& series, int t1, int t2, int min_obs) {
    if (t1 < 0 || t2 >= series.size() || t1 >= t2) {
        throw std::invalid_argument("bad window indices");
    }
    if (t2 - t1 + 1 < min_obs) {
        throw std::invalid_argument("window too short for the linear subproblem");
    }
}

}  // namespace

std::optional<LinearFit> try_solve_linear(double tc, double beta, double omega,
                                          const PriceSeries& series, int t1, int t2,
                                          double rank_tol) {
    check_window(series, t1, t2, 4);
    if (!(tc > t2)) return std::nullopt;
    const Basis b = basis_functions(tc, beta, omega, PriceSeries::window_times(t1, t2));
    return solve_equilibrated(build_normal_equations(b, series.log_window(t1, t2)), rank_tol);
}

LinearFit solve_linear(double tc, double beta, double omega, const PriceSeries& series,
                       int t1, int t2, double rank_tol) {
    if (!(tc > t2)) throw std::domain_error("solve_linear: tc must exceed the window end");
    auto fit = try_solve_linear(tc, beta, omega, series, t1, t2, rank_tol);
    if (!fit) {
        throw SingularSystemError("solve_linear: Gram matrix rank-deficient (degenerate basis)");
    }
    return *fit;
}

std::optional<double> try_profiled_cost(double tc, double beta, double omega,
                                        const PriceSeries& series, int t1, int t2,
                                        double rank_tol) {
    check_window(series, t1, t2, 4);
    if (!(tc > t2) || !std::isfinite(tc) || !std::isfinite(beta) || !std::isfinite(omega)) {
        return std::nullopt;
    }
    const Basis b = basis_functions(tc, beta, omega, PriceSeries::window_times(t1, t2));
    const auto y = series.log_window(t1, t2);
    const auto fit = solve_equilibrated(build_normal_equations(b, y), rank_tol);
    if (!fit) return std::nullopt;
    const double cost = residual_sum(*fit, b, y);
    if (!std::isfinite(cost)) return std::nullopt;
    return cost;
}

double profiled_cost(double tc, double beta, double omega, const PriceSeries& series,
                     int t1, int t2, double rank_tol) {
    if (!(tc > t2)) throw std::domain_error("profiled_cost: tc must exceed the window end");
    auto cost = try_profiled_cost(tc, beta, omega, series, t1, t2, rank_tol);
    if (!cost) {
        throw SingularSystemError("profiled_cost: Gram matrix rank-deficient (degenerate basis)");
    }
    return *cost;
}

double residual_cost(const LpplParams& params, const PriceSeries& series, int t1, int t2) {
    check_window(series, t1, t2, 2);
    const Basis b = basis_functions(params.tc, params.beta, params.omega,
                                    PriceSeries::window_times(t1, t2));
    const LinearFit lin{params.A, params.B, params.C1, params.C2, 1.0};
    return residual_sum(lin, b, series.log_window(t1, t2));
}

}  // namespace lppl
