#pragma once

#include <string_view>
#include <vector>

namespace sidi {

// Trigonometric combinations whose monotonicity drives the orderings. The
// two-argument forms take a real x in [2, n-2] and require n > 4.

/// 2cot(pi/x) + 2cot(pi/(n-x)): the (+,+) pair of lengths x and n-x.
double f_cot_cot(double x, double n);
/// 2csc(pi/x) + 2csc(pi/(n-x)): the (-,-) pair.
double f_csc_csc(double x, double n);
/// 2csc(pi/x) + 2cot(pi/(n-x)): the mixed pair with the negative cycle of length x.
double f_csc_cot(double x, double n);
/// (pi/x^2) csc^2(pi/x), for x >= 2.
double f_inv_sq_csc(double x);

enum class TrigFunction { CotCot, CscCsc, CscCot, InvSqCsc };
enum class Direction { Increasing, Decreasing };

std::string_view to_string(TrigFunction f);
std::string_view to_string(Direction d);

/// Evaluates f at x; `n` is ignored for InvSqCsc.
double evaluate(TrigFunction f, double x, double n);

struct MonotoneReport {
  TrigFunction function = TrigFunction::CotCot;
  double n = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double grid_step = 0.0;
  Direction direction = Direction::Increasing;
  // Most adverse adjacent difference, signed so that negative means the
  // claimed direction was violated.
  double worst_adjacent_difference = 0.0;
  bool pass = false;
};

inline constexpr double kMonotoneSlack = 1e-12;

/// Samples f on grid_points + 1 uniform points of [lo, hi] and checks every
/// adjacent step against `direction` (slack kMonotoneSlack).
MonotoneReport certify_monotone(TrigFunction f, double n, double lo, double hi, Direction direction,
                                int grid_points = 10000);

struct MonotoneClaim {
  TrigFunction function;
  double lo;
  double hi;
  Direction direction;
};

/// The monotonicity facts the orderings rely on, for a given n > 4:
/// CotCot increasing on [2, n/2] and decreasing on [n/2, n-2]; CscCsc
/// decreasing on [2, n/2]; CscCot decreasing on [2, n-2]; InvSqCsc
/// decreasing on [2, n-2].
std::vector<MonotoneClaim> monotone_claims(double n);

std::vector<MonotoneReport> certify_claims(double n, int grid_points = 10000);

}  // namespace sidi
