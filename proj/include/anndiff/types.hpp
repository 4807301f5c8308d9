#pragma once

#include <complex>
#include <stdexcept>

namespace anndiff {

using Complex = std::complex<double>;

/// Branch of the normalized central fiber: the z disc (w = 0) or the w disc (z = 0).
enum class Branch { z, w };

/// A numerical precondition does not hold (aliasing, empty band, contour too
/// close to a zero, ill-conditioned recovery, ...).
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input document or schema mismatch.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace anndiff
