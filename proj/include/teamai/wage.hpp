#ifndef TEAMAI_WAGE_HPP
#define TEAMAI_WAGE_HPP

#include <optional>
#include <vector>

#include "teamai/errors.hpp"

namespace teamai {

/// Success-contingent payment per worker. An entry is empty exactly when the
/// generating strategy fully replaces that worker (x_i = 1), in which case no
/// contract is offered.
struct WageSchedule {
  std::vector<std::optional<double>> w;

  int size() const { return static_cast<int>(w.size()); }
  bool present(int i) const { return w[static_cast<std::size_t>(i)].has_value(); }

  /// Wage of worker i; throws FullyReplaced when the entry is absent.
  double value(int i) const {
    const auto& entry = w[static_cast<std::size_t>(i)];
    if (!entry) {
      fail(Errc::FullyReplaced,
           "worker " + std::to_string(i + 1) + " has no wage (fully replaced)");
    }
    return *entry;
  }
};

/// Expected compensation cost split into its AI and wage components.
/// total == ai_cost + wage_cost == sum(per_worker).
struct CostBreakdown {
  double ai_cost = 0.0;    // sum_i x_i c
  double wage_cost = 0.0;  // sum_i (1 - x_i) p_n w_i
  double total = 0.0;
  std::vector<double> per_worker;  // x_i c + (1 - x_i) p_n w_i
};

}  // namespace teamai

#endif  // TEAMAI_WAGE_HPP
