#include <cmath>

#include "homsense/kernels.hpp"

namespace homsense::kernels {

double beat_loglik_sum_scalar(const double* dk, const double* s, std::size_t n, double dx) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = 1.0 + s[i] * std::cos(dk[i] * dx);
        if (v < 1e-300) v = 1e-300;
        acc += std::log(v);
    }
    return acc;
}

}  // namespace homsense::kernels
