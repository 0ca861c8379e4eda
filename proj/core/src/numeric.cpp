#include "portload/numeric.hpp"

#include <charconv>
#include <cstddef>
#include <vector>

namespace portload {

namespace {

// a + b == hi + lo exactly (Knuth two-sum).
inline void two_sum(double a, double b, double& hi, double& lo) {
  hi = a + b;
  const double t = hi - a;
  lo = (a - (hi - t)) + (b - t);
}

}  // namespace

double exact_sum(std::span<const double> values) {
  // Running nonoverlapping expansion of the partial sum (Shewchuk's
  // grow-expansion): the components represent the sum without error.
  std::vector<double> parts;
  parts.reserve(8);
  for (double x : values) {
    std::size_t kept = 0;
    for (double p : parts) {
      double hi = 0.0, lo = 0.0;
      two_sum(x, p, hi, lo);
      if (lo != 0.0) parts[kept++] = lo;
      x = hi;
    }
    parts.resize(kept);
    if (x != 0.0) parts.push_back(x);
  }
  if (parts.empty()) return 0.0;

  // Compress; afterwards the leading component is within half an ulp of the
  // exact sum (Shewchuk's COMPRESS), so it is the nearest double.
  const std::size_t m = parts.size();
  std::vector<double> g(m);
  double q = parts[m - 1];
  std::size_t bottom = m - 1;
  for (std::size_t i = m - 1; i-- > 0;) {
    const double hi = q + parts[i];
    const double lo = parts[i] - (hi - q);  // fast two-sum, |q| >= |parts[i]|
    if (lo != 0.0) {
      g[bottom--] = hi;
      q = lo;
    } else {
      q = hi;
    }
  }
  for (std::size_t i = bottom + 1; i < m; ++i) {
    q = g[i] + q;
  }
  return q;
}

std::string format_double(double value) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

}  // namespace portload
