#include "glenostatics/solver.hpp"

#include <cmath>
#include <sstream>

#include "glenostatics/error.hpp"

namespace glenostatics::solver {

namespace {

double eval(const Objective& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "objective is not finite at x = " << x;
    throw Error(ErrorKind::NonFiniteObjective, os.str());
  }
  return v;
}

Objective negated(const Objective& f) {
  return [&f](double x) { return -f(x); };
}

}  // namespace

Bracket::Bracket(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream os;
    os << "bracket [" << lo << ", " << hi << "] must be finite with lo < hi";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

double golden_ratio() { return (std::sqrt(5.0) - 1.0) / 2.0; }

double grid_point(const Bracket& b, std::size_t n, std::size_t i) {
  if (i + 1 >= n) return b.hi();
  return b.lo() + b.width() * (static_cast<double>(i) / static_cast<double>(n - 1));
}

GridResult grid_min(const Objective& f, const Bracket& b, std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "grid_min needs at least 3 points");
  std::size_t best = 0;
  double best_f = eval(f, grid_point(b, n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    const double v = eval(f, grid_point(b, n, i));
    if (v < best_f) {
      best_f = v;
      best = i;
    }
  }
  const std::size_t lo_i = best == 0 ? 0 : best - 1;
  const std::size_t hi_i = best + 1 >= n ? n - 1 : best + 1;
  const double lo = grid_point(b, n, lo_i);
  const double hi = grid_point(b, n, hi_i);
  return {grid_point(b, n, best), best_f, best, Bracket(lo, hi)};
}

OptimResult refine_min(const Objective& f, const Bracket& b, double tol, int maxIter) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tol must be > 0");
  if (maxIter < 1) throw Error(ErrorKind::InvalidArgument, "maxIter must be >= 1");

  const double r = golden_ratio();
  double a = b.lo();
  double c = b.hi();
  double x1 = c - r * (c - a);
  double x2 = a + r * (c - a);
  double f1 = eval(f, x1);
  double f2 = eval(f, x2);

  OptimResult out;
  int it = 0;
  while (c - a > tol && it < maxIter) {
    ++it;
    if (f1 <= f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - r * (c - a);
      f1 = eval(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (c - a);
      f2 = eval(f, x2);
    }
  }
  out.iterations = it;
  out.converged = c - a <= tol;
  if (f1 <= f2) {
    out.x = x1;
    out.fx = f1;
  } else {
    out.x = x2;
    out.fx = f2;
  }
  return out;
}

OptimResult refine_max(const Objective& f, const Bracket& b, double tol, int maxIter) {
  OptimResult r = refine_min(negated(f), b, tol, maxIter);
  r.fx = -r.fx;
  return r;
}

OptimResult minimize(const Objective& f, const Bracket& b, const Settings& s) {
  const GridResult g = grid_min(f, b, s.gridPoints);
  OptimResult r = refine_min(f, g.neighbors, s.tol, s.maxIter);
  if (g.fx < r.fx) {
    r.x = g.x;
    r.fx = g.fx;
  }
  // Compare against the bracket ends so that a monotone objective reports
  // the end itself rather than a point a tolerance away from it.
  const double f_lo = eval(f, b.lo());
  const double f_hi = eval(f, b.hi());
  if (f_lo <= r.fx && r.x - b.lo() <= g.neighbors.width()) {
    r.x = b.lo();
    r.fx = f_lo;
  } else if (f_hi <= r.fx && b.hi() - r.x <= g.neighbors.width()) {
    r.x = b.hi();
    r.fx = f_hi;
  }
  r.atBoundary = r.x == b.lo() || r.x == b.hi();
  return r;
}

OptimResult maximize(const Objective& f, const Bracket& b, const Settings& s) {
  OptimResult r = minimize(negated(f), b, s);
  r.fx = -r.fx;
  return r;
}

}  // namespace glenostatics::solver
