// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace dris {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class Direction { dl, ul };

/// Input that violates a documented invariant; `field()` names the offending parameter.
class ValidationError : public std::invalid_argument {
  public:
    ValidationError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

  private:
    std::string field_;
};

/// Malformed configuration text.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Wraps an angle into [0, 2pi).
inline double wrap_phase(double radians) {
    double r = std::fmod(radians, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    // fmod of a value just below a multiple of 2pi can round up to 2pi
    return r >= kTwoPi ? 0.0 : r;
}

inline Complex unit_phasor(double radians) { return std::polar(1.0, radians); }

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace dris
