#ifndef RAMELLIN_COMMON_HPP
#define RAMELLIN_COMMON_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace ramellin {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double euler_gamma = 0.577215664901532860606512090082;

// The even Bernoulli numbers B_2 .. B_26 as exact rationals.
// B_1 = -1/2 never enters the Euler-Maclaurin corrections used here.
inline constexpr double bernoulli2n[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
};

enum EvalFlag : unsigned {
  kCancellation = 1u << 0,
  kTruncated = 1u << 1,
  kNearPole = 1u << 2,
  kOutOfDomain = 1u << 3,
};

/// A scalar result together with an absolute error estimate and status flags.
struct EvalResult {
  double value = std::numeric_limits<double>::quiet_NaN();
  double abs_err_estimate = 0.0;
  unsigned flags = 0;

  bool has(EvalFlag f) const { return (flags & f) != 0; }
  bool out_of_domain() const { return has(kOutOfDomain); }

  static EvalResult ok(double v, double err) { return {v, err, 0}; }
  static EvalResult out_of_domain_result() {
    return {std::numeric_limits<double>::quiet_NaN(),
            std::numeric_limits<double>::infinity(), kOutOfDomain};
  }
};

inline std::string flags_to_string(unsigned flags) {
  std::string s;
  auto add = [&](const char* name) {
    if (!s.empty()) s += '|';
    s += name;
  };
  if (flags & kCancellation) add("CANCELLATION");
  if (flags & kTruncated) add("TRUNCATED");
  if (flags & kNearPole) add("NEAR_POLE");
  if (flags & kOutOfDomain) add("OUT_OF_DOMAIN");
  return s;
}

}  // namespace ramellin

#endif  // RAMELLIN_COMMON_HPP
