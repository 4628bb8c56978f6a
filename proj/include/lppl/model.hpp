#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

namespace lppl {

// Log-periodic power law in the linearized parametrization: the log-price at
// time t < tc is
//
//   A + B*(tc-t)^beta + C1*(tc-t)^beta*cos(omega*ln(tc-t))
//                     + C2*(tc-t)^beta*sin(omega*ln(tc-t))
//
// (A, B, C1, C2) enter linearly; (tc, beta, omega) do not. B < 0 describes a
// positive bubble (accelerating rise into tc), B > 0 a negative one.
template <typename Scalar>
struct LpplParamsT {
    Scalar tc{};     // critical time, trading-day units, may be fractional
    Scalar beta{};   // power-law exponent
    Scalar omega{};  // log-frequency of the oscillations
    Scalar A{};      // log-price level at tc
    Scalar B{};      // power-law amplitude; its sign is the bubble sign
    Scalar C1{};     // cosine amplitude
    Scalar C2{};     // sine amplitude

    // Oscillation amplitude C >= 0 and phase in (-pi, pi].
    Scalar amplitude() const {
        using std::sqrt;
        return sqrt(C1 * C1 + C2 * C2);
    }
    Scalar phase() const {
        using std::atan2;
        return atan2(C2, C1);
    }
};

using LpplParams = LpplParamsT<double>;

// The three nonlinear regressors evaluated on a set of times:
//   f = (tc-t)^beta,  g = f*cos(omega*ln(tc-t)),  h = f*sin(omega*ln(tc-t)).
template <typename Scalar>
struct BasisT {
    Eigen::Array<Scalar, Eigen::Dynamic, 1> f, g, h;
};

using Basis = BasisT<double>;

// Evaluates f, g, h over an array expression of times. All times must be
// strictly below tc; throws std::domain_error otherwise.
template <typename Derived>
BasisT<typename Derived::Scalar> basis_functions(typename Derived::Scalar tc,
                                                 typename Derived::Scalar beta,
                                                 typename Derived::Scalar omega,
                                                 const Eigen::ArrayBase<Derived>& times) {
    using Scalar = typename Derived::Scalar;
    using Array = Eigen::Array<Scalar, Eigen::Dynamic, 1>;

    const Array dt = tc - times.derived();
    if ((dt <= Scalar(0)).any()) {
        throw std::domain_error("basis_functions: every time must be < tc");
    }
    BasisT<Scalar> b;
    const Array u = dt.log();
    b.f = (beta * u).exp();  // (tc-t)^beta
    const Array wu = omega * u;
    b.g = b.f * wu.cos();
    b.h = b.f * wu.sin();
    return b;
}

// Model log-price over an array of times. Evaluation order matches the
// residual computation in the fitting path so costs recompute bit-identically.
template <typename Scalar>
Eigen::Array<Scalar, Eigen::Dynamic, 1> log_price(
    const LpplParamsT<Scalar>& p, const Eigen::Array<Scalar, Eigen::Dynamic, 1>& times) {
    const BasisT<Scalar> b = basis_functions(p.tc, p.beta, p.omega, times);
    return p.A + p.B * b.f + p.C1 * b.g + p.C2 * b.h;
}

// Scalar form of the model.
template <typename Scalar>
Scalar log_price(const LpplParamsT<Scalar>& p, Scalar t) {
    using std::log;
    using std::exp;
    using std::cos;
    using std::sin;
    if (!(t < p.tc)) throw std::domain_error("log_price: t must be < tc");
    const Scalar u = log(p.tc - t);
    const Scalar f = exp(p.beta * u);
    const Scalar wu = p.omega * u;
    return p.A + p.B * f + p.C1 * f * cos(wu) + p.C2 * f * sin(wu);
}

}  // namespace lppl
