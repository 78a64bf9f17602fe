#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace padic {

// Neumaier compensated accumulator. Shell sums mix magnitudes like p^{+50}
// and p^{-50} in one pass; the carry keeps the small terms.
class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Sums the terms largest-magnitude first with compensation.
inline double compensated_total(std::vector<double> terms) {
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::abs(a) > std::abs(b); });
    NeumaierSum acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

} // namespace padic
