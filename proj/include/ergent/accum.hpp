#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace ergent {

// Kahan-compensated accumulator. Summation order is fixed by the caller,
// so aggregated results do not depend on thread scheduling.
class KahanSum {
  public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct MeanSem {
    double mean = 0.0;
    double sem = 0.0;
    std::size_t n = 0;
};

// Sample mean and standard error (ddof = 1), compensated sums.
inline MeanSem mean_sem(const std::vector<double>& xs) {
    MeanSem out;
    out.n = xs.size();
    if (xs.empty()) return out;
    KahanSum s;
    for (double x : xs) s.add(x);
    out.mean = s.value() / static_cast<double>(xs.size());
    if (xs.size() < 2) return out;
    KahanSum sq;
    for (double x : xs) {
        double d = x - out.mean;
        sq.add(d * d);
    }
    double var = sq.value() / static_cast<double>(xs.size() - 1);
    out.sem = std::sqrt(var / static_cast<double>(xs.size()));
    return out;
}

}  // namespace ergent
