#include "lppl/price_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lppl {

PriceSeries::PriceSeries(std::vector<Date> dates, Eigen::ArrayXd prices)
    : dates_(std::move(dates)), prices_(std::move(prices)) {
    const auto n = static_cast<std::size_t>(prices_.size());
    if (n < 2) throw std::invalid_argument("PriceSeries needs at least 2 observations");
    if (dates_.size() != n) throw std::invalid_argument("PriceSeries dates/prices length mismatch");
    for (Eigen::Index i = 0; i < prices_.size(); ++i) {
        if (!(prices_[i] > 0.0) || !std::isfinite(prices_[i])) {
            throw std::invalid_argument("PriceSeries prices must be positive and finite");
        }
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(dates_[i - 1] < dates_[i])) {
            throw std::invalid_argument("PriceSeries dates must be strictly increasing");
        }
    }
    log_prices_ = prices_.log();
}

int PriceSeries::lower_bound_index(const Date& d) const {
    const auto it = std::lower_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.end()) return -1;
    return static_cast<int>(it - dates_.begin());
}

int PriceSeries::upper_bound_index(const Date& d) const {
    const auto it = std::upper_bound(dates_.begin(), dates_.end(), d);
    if (it == dates_.begin()) return -1;
    return static_cast<int>(it - dates_.begin()) - 1;
}

}  // namespace lppl
