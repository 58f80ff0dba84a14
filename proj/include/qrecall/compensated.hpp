#pragma once

#include <cmath>
#include <span>

namespace qrecall {

// Neumaier-compensated accumulator. Keeps reduction error near one ulp so the
// 1e-12 agreement budgets hold even at dimension 1024.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }

    double value() const { return sum + comp; }
};

inline double compensated_total(std::span<const double> xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

inline double compensated_sum_squares(std::span<const double> xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x * x);
    return s.value();
}

} // namespace qrecall
