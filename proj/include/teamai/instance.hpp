#ifndef TEAMAI_INSTANCE_HPP
#define TEAMAI_INSTANCE_HPP

#include <vector>

#include "teamai/errors.hpp"

namespace teamai {

/// Production environment of a sequential team: n workers, a common effort
/// cost c, and a success-probability vector p of length n+1 where p[k] is the
/// probability the project succeeds when k positions contribute effort.
///
/// Construction goes through validate_instance(), which enforces
///   0 <= p[0] < p[1] < ... < p[n] <= 1,
///   strictly increasing increments (effort complementarity), and c > 0.
/// Instances are immutable values and safe to share across threads.
class Instance {
 public:
  int n() const { return n_; }
  double c() const { return c_; }
  const std::vector<double>& p() const { return p_; }
  /// Success probability with k contributing positions, k in [0, n].
  double p(int k) const { return p_[static_cast<std::size_t>(k)]; }

 private:
  Instance(int n, double c, std::vector<double> p)
      : n_(n), c_(c), p_(std::move(p)) {}
  friend Instance validate_instance(int n, double c, std::vector<double> p);

  int n_;
  double c_;
  std::vector<double> p_;
};

/// Validates and builds an Instance. Comparisons are strict with zero
/// tolerance: inputs are exact user data, not computed quantities.
/// Throws Error with code BadLength, BadCost, NonMonotone, or
/// NonComplementary.
Instance validate_instance(int n, double c, std::vector<double> p);

/// Success probabilities p[k] = alpha^(n-k) for alpha in (0,1). Computed by
/// repeated multiplication from p[n] = 1 downward so that p[n-1] == alpha and
/// adjacent ratios are exact. The result always satisfies the Instance
/// invariants. Throws BadAlpha.
std::vector<double> oring_production(double alpha, int n);

/// Convenience: validated instance with the power-law production above.
Instance oring_instance(double alpha, int n = 3, double c = 1.0);

/// Per-worker probabilities of being replaced by AI, with the aggregate
/// capacity constraint sum(x) <= capacity. Immutable after validation.
class ReplacementStrategy {
 public:
  const std::vector<double>& x() const { return x_; }
  double x(int i) const { return x_[static_cast<std::size_t>(i)]; }
  double capacity() const { return capacity_; }
  int size() const { return static_cast<int>(x_.size()); }
  /// Aggregate replacement probability sum(x).
  double total() const;

 private:
  ReplacementStrategy(std::vector<double> x, double capacity)
      : x_(std::move(x)), capacity_(capacity) {}
  friend ReplacementStrategy validate_strategy(std::vector<double> x,
                                               double capacity);

  std::vector<double> x_;
  double capacity_;
};

/// Validates x_i in [0,1] for each i and sum(x) <= capacity.
/// Throws OutOfRange or CapacityExceeded.
ReplacementStrategy validate_strategy(std::vector<double> x,
                                      double capacity = 1.0);

/// The all-human benchmark x = (0, ..., 0).
ReplacementStrategy no_replacement(int n, double capacity = 1.0);

/// Team signal structure. Chain: worker i observes worker i-1. Star: workers
/// 0..n-2 are peripheral and all signal the central worker at position n-1.
enum class Topology { Chain, Star };

}  // namespace teamai

#endif  // TEAMAI_INSTANCE_HPP
