#pragma once

#include <cstddef>
#include <functional>

namespace glenostatics::solver {

using Objective = std::function<double(double)>;

/// Closed interval [lo, hi] with lo < hi, both finite.
class Bracket {
 public:
  /// Throws Error{InvalidArgument} unless lo < hi and both are finite.
  Bracket(double lo, double hi);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }

 private:
  double lo_;
  double hi_;
};

struct GridResult {
  double x;
  double fx;
  std::size_t index;
  Bracket neighbors;  // immediate grid neighbours of x, clamped at the ends
};

struct OptimResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
  bool atBoundary = false;
};

/// Contraction ratio of golden-section search, (sqrt(5) - 1) / 2.
double golden_ratio();

/// i-th of n equally spaced abscissae on [lo, hi]; the last one is exactly hi.
double grid_point(const Bracket& b, std::size_t n, std::size_t i);

/// Evaluates f at n >= 3 equally spaced points (endpoints included) and
/// returns the smallest value. Ties keep the first (lowest) abscissa.
/// Throws Error{NonFiniteObjective} naming the offending abscissa.
GridResult grid_min(const Objective& f, const Bracket& b, std::size_t n);

/// Golden-section search on `b` until the bracket width is <= tol or
/// maxIter iterations have run. Never evaluates outside `b`. Hitting the
/// iteration cap returns the best point so far with converged = false.
OptimResult refine_min(const Objective& f, const Bracket& b, double tol, int maxIter);

/// refine_min on -f; `fx` is reported in the sign of f.
OptimResult refine_max(const Objective& f, const Bracket& b, double tol, int maxIter);

struct Settings {
  std::size_t gridPoints = 1001;
  double tol = 1e-9;
  int maxIter = 200;
};

/// grid_min followed by refine_min on the winning neighbour bracket.
/// atBoundary is set when the minimum sits on an end of `b`; x is then that
/// end exactly.
OptimResult minimize(const Objective& f, const Bracket& b, const Settings& s = {});
OptimResult maximize(const Objective& f, const Bracket& b, const Settings& s = {});

}  // namespace glenostatics::solver
