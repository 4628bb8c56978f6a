#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cmath>

namespace lppl {

struct SimplexOptions {
    double tol = 1e-8;   // stop when max-min cost over vertices falls below this
    int max_iters = 600;
};

struct SimplexResult {
    Eigen::Vector3d x = Eigen::Vector3d::Zero();
    double value = 0;
    bool converged = false;
    int iterations = 0;
};

// Nelder-Mead downhill simplex in three dimensions with the standard
// reflection/expansion/contraction/shrink coefficients 1, 2, 0.5, 0.5.
// `step` gives the per-dimension displacement of the three non-anchor
// vertices of the initial simplex. Non-convergence within max_iters is
// reported through the flag, never as an error.
template <typename F>
SimplexResult nelder_mead(F&& objective, const Eigen::Vector3d& initial,
                          const Eigen::Vector3d& step, const SimplexOptions& opts) {
    constexpr int kDim = 3;
    constexpr int kVerts = kDim + 1;
    constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;

    std::array<Eigen::Vector3d, kVerts> xs;
    std::array<double, kVerts> fs;
    xs[0] = initial;
    fs[0] = objective(xs[0]);
    for (int j = 0; j < kDim; ++j) {
        xs[j + 1] = initial;
        xs[j + 1][j] += step[j];
        fs[j + 1] = objective(xs[j + 1]);
    }

    // Index order: order[0] best ... order[kDim] worst.
    std::array<int, kVerts> order{0, 1, 2, 3};
    auto sort_order = [&] {
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fs[a] < fs[b]; });
    };

    SimplexResult result;
    int iter = 0;
    for (; iter < opts.max_iters; ++iter) {
        sort_order();
        const int best = order[0], worst = order[kVerts - 1], second_worst = order[kVerts - 2];

        const double spread = fs[worst] - fs[best];
        if (spread < opts.tol) {
            result.converged = true;
            break;
        }

        Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
        for (int k = 0; k < kVerts; ++k) {
            if (k != worst) centroid += xs[k];
        }
        centroid /= kDim;

        const Eigen::Vector3d reflected = centroid + kReflect * (centroid - xs[worst]);
        const double f_reflected = objective(reflected);

        if (f_reflected < fs[best]) {
            const Eigen::Vector3d expanded = centroid + kExpand * (reflected - centroid);
            const double f_expanded = objective(expanded);
            if (f_expanded < f_reflected) {
                xs[worst] = expanded;
                fs[worst] = f_expanded;
            } else {
                xs[worst] = reflected;
                fs[worst] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fs[second_worst]) {
            xs[worst] = reflected;
            fs[worst] = f_reflected;
            continue;
        }

        // Contract toward the better of worst/reflected.
        const bool outside = f_reflected < fs[worst];
        const Eigen::Vector3d toward = outside ? reflected : xs[worst];
        const Eigen::Vector3d contracted = centroid + kContract * (toward - centroid);
        const double f_contracted = objective(contracted);
        if (f_contracted < std::min(f_reflected, fs[worst])) {
            xs[worst] = contracted;
            fs[worst] = f_contracted;
            continue;
        }

        // Shrink everything toward the best vertex.
        for (int k = 0; k < kVerts; ++k) {
            if (k == best) continue;
            xs[k] = xs[best] + kShrink * (xs[k] - xs[best]);
            fs[k] = objective(xs[k]);
        }
    }

    sort_order();
    result.x = xs[order[0]];
    result.value = fs[order[0]];
    result.iterations = iter;
    return result;
}

}  // namespace lppl
