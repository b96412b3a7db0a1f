#include "teamai/instance.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace teamai {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonMonotone: return "NonMonotone";
    case Errc::NonComplementary: return "NonComplementary";
    case Errc::BadCost: return "BadCost";
    case Errc::BadLength: return "BadLength";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::FullyReplaced: return "FullyReplaced";
    case Errc::Degenerate: return "Degenerate";
    case Errc::Boundary: return "Boundary";
    case Errc::WrongSize: return "WrongSize";
    case Errc::BadAlpha: return "BadAlpha";
    case Errc::BadCapacity: return "BadCapacity";
    case Errc::BadRange: return "BadRange";
    case Errc::IoError: return "IoError";
    case Errc::ConfigError: return "ConfigError";
    case Errc::UnknownSuite: return "UnknownSuite";
    case Errc::InconsistentWages: return "InconsistentWages";
  }
  return "Unknown";
}

Instance validate_instance(int n, double c, std::vector<double> p) {
  if (n < 3) {
    fail(Errc::BadLength, "team size must be at least 3, got " + std::to_string(n));
  }
  if (p.size() != static_cast<std::size_t>(n) + 1) {
    std::ostringstream msg;
    msg << "success-probability vector must have length n+1 = " << n + 1
        << ", got " << p.size();
    fail(Errc::BadLength, msg.str());
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(Errc::BadCost, "effort cost must be positive");
  }
  if (!(p.front() >= 0.0) || !(p.back() <= 1.0)) {
    fail(Errc::NonMonotone, "probabilities must lie in [0, 1]");
  }
  for (int k = 0; k < n; ++k) {
    if (!(p[k] < p[k + 1])) {
      std::ostringstream msg;
      msg << "p[" << k << "] = " << p[k] << " must be strictly below p["
          << k + 1 << "] = " << p[k + 1];
      fail(Errc::NonMonotone, msg.str());
    }
  }
  for (int k = 0; k + 2 <= n; ++k) {
    const double lo = p[k + 1] - p[k];
    const double hi = p[k + 2] - p[k + 1];
    if (!(hi > lo)) {
      std::ostringstream msg;
      msg << "increment p[" << k + 2 << "]-p[" << k + 1 << "] = " << hi
          << " must strictly exceed p[" << k + 1 << "]-p[" << k
          << "] = " << lo;
      fail(Errc::NonComplementary, msg.str());
    }
  }
  return Instance(n, c, std::move(p));
}

std::vector<double> oring_production(double alpha, int n) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    fail(Errc::BadAlpha, "alpha must lie strictly inside (0, 1)");
  }
  if (n < 3) {
    fail(Errc::BadLength, "team size must be at least 3");
  }
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[static_cast<std::size_t>(n)] = 1.0;
  for (int k = n - 1; k >= 0; --k) {
    p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k) + 1] * alpha;
  }
  return p;
}

Instance oring_instance(double alpha, int n, double c) {
  return validate_instance(n, c, oring_production(alpha, n));
}

double ReplacementStrategy::total() const {
  return std::accumulate(x_.begin(), x_.end(), 0.0);
}

ReplacementStrategy validate_strategy(std::vector<double> x, double capacity) {
  if (!(capacity >= 0.0)) {
    fail(Errc::BadCapacity, "capacity must be nonnegative");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || !(x[i] <= 1.0)) {
      fail(Errc::OutOfRange, "x[" + std::to_string(i) + "] outside [0, 1]");
    }
    sum += x[i];
  }
  if (sum > capacity) {
    std::ostringstream msg;
    msg << "sum(x) = " << sum << " exceeds capacity " << capacity;
    fail(Errc::CapacityExceeded, msg.str());
  }
  return ReplacementStrategy(std::move(x), capacity);
}

ReplacementStrategy no_replacement(int n, double capacity) {
  return validate_strategy(std::vector<double>(static_cast<std::size_t>(n), 0.0),
                           capacity);
}

}  // namespace teamai
