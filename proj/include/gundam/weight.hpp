#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gundam {

// Edge weight / capacity, stored in tenths so the integer weights of default
// generation and the one-decimal weights of the textual format are both exact
// under addition and comparison.
struct Weight {
  std::int64_t tenths = 0;

  static Weight from_int(std::int64_t units) { return {units * 10}; }
  static Weight from_tenths(std::int64_t t) { return {t}; }

  Weight operator+(Weight o) const { return {tenths + o.tenths}; }
  Weight& operator+=(Weight o) {
    tenths += o.tenths;
    return *this;
  }
  Weight operator-(Weight o) const { return {tenths - o.tenths}; }
  auto operator<=>(const Weight&) const = default;

  bool integral() const { return tenths % 10 == 0; }
  double to_double() const { return static_cast<double>(tenths) / 10.0; }

  // "7" for whole values, "0.8" otherwise.
  std::string str() const;
};

Weight min(Weight a, Weight b);

}  // namespace gundam
