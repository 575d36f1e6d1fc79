#pragma once

#include <stdexcept>
#include <string>

namespace homsense {

/// Bad user-supplied parameter (non-positive widths, nu outside [0,1], ...).
struct invalid_parameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Tabulated grid too coarse to resolve the distribution it claims to describe.
struct resolution_error : invalid_parameter {
    using invalid_parameter::invalid_parameter;
};

/// Numerical failure (quadrature did not converge, ...).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// File / stream problems, including malformed CSV (message carries the line number).
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Estimation requested on a sample with no usable events.
struct no_data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Observed counts incompatible with the model (bucket inversion undefined).
struct out_of_model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace homsense
