#pragma once

#include <Eigen/Core>
#include <vector>

#include "lppl/date.hpp"

namespace lppl {

// Daily price history. Observation i carries trading-day ordinal i (0..N-1),
// a calendar date and a strictly positive price; log-prices are cached since
// every fit works in log space.
class PriceSeries {
public:
    // Validates: N >= 2, dates strictly increasing, prices positive and finite.
    PriceSeries(std::vector<Date> dates, Eigen::ArrayXd prices);

    int size() const { return static_cast<int>(prices_.size()); }
    const std::vector<Date>& dates() const { return dates_; }
    const Eigen::ArrayXd& prices() const { return prices_; }
    const Eigen::ArrayXd& log_prices() const { return log_prices_; }

    double price(int i) const { return prices_[i]; }
    double log_price(int i) const { return log_prices_[i]; }
    const Date& date(int i) const { return dates_[static_cast<std::size_t>(i)]; }

    // Log-prices of the inclusive window [t1, t2].
    auto log_window(int t1, int t2) const { return log_prices_.segment(t1, t2 - t1 + 1); }

    // Trading-day ordinals t1..t2 as a dense array, the abscissa of a fit.
    static Eigen::ArrayXd window_times(int t1, int t2) {
        return Eigen::ArrayXd::LinSpaced(t2 - t1 + 1, t1, t2);
    }

    // Index of the first date >= d, or -1 when all dates are earlier.
    int lower_bound_index(const Date& d) const;
    // Index of the last date <= d, or -1 when all dates are later.
    int upper_bound_index(const Date& d) const;

private:
    std::vector<Date> dates_;
    Eigen::ArrayXd prices_;
    Eigen::ArrayXd log_prices_;
};

}  // namespace lppl
