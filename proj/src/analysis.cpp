#include "sidi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace sidi {
namespace {

constexpr double kPi = std::numbers::pi;

double cot(double t) { return std::cos(t) / std::sin(t); }
double csc(double t) { return 1.0 / std::sin(t); }

void check_pair_domain(double x, double n) {
  if (!(n > 4.0)) throw std::invalid_argument("trig combination: n must exceed 4");
  if (!(x >= 2.0 && x <= n - 2.0)) throw std::invalid_argument("trig combination: x outside [2, n-2]");
}

}  // namespace

double f_cot_cot(double x, double n) {
  check_pair_domain(x, n);
  return 2.0 * cot(kPi / x) + 2.0 * cot(kPi / (n - x));
}

double f_csc_csc(double x, double n) {
  check_pair_domain(x, n);
  return 2.0 * csc(kPi / x) + 2.0 * csc(kPi / (n - x));
}

double f_csc_cot(double x, double n) {
  check_pair_domain(x, n);
  return 2.0 * csc(kPi / x) + 2.0 * cot(kPi / (n - x));
}

double f_inv_sq_csc(double x) {
  if (!(x >= 2.0)) throw std::invalid_argument("f_inv_sq_csc: x must be at least 2");
  const double s = csc(kPi / x);
  return kPi / (x * x) * s * s;
}

std::string_view to_string(TrigFunction f) {
  switch (f) {
    case TrigFunction::CotCot: return "2cot(pi/x)+2cot(pi/(n-x))";
    case TrigFunction::CscCsc: return "2csc(pi/x)+2csc(pi/(n-x))";
    case TrigFunction::CscCot: return "2csc(pi/x)+2cot(pi/(n-x))";
    case TrigFunction::InvSqCsc: return "(pi/x^2)csc^2(pi/x)";
  }
  return "?";
}

std::string_view to_string(Direction d) {
  return d == Direction::Increasing ? "increasing" : "decreasing";
}

double evaluate(TrigFunction f, double x, double n) {
  switch (f) {
    case TrigFunction::CotCot: return f_cot_cot(x, n);
    case TrigFunction::CscCsc: return f_csc_csc(x, n);
    case TrigFunction::CscCot: return f_csc_cot(x, n);
    case TrigFunction::InvSqCsc: return f_inv_sq_csc(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

MonotoneReport certify_monotone(TrigFunction f, double n, double lo, double hi, Direction direction,
                                int grid_points) {
  if (grid_points < 1) throw std::invalid_argument("certify_monotone: need at least one grid step");
  if (!(hi > lo)) throw std::invalid_argument("certify_monotone: empty interval");
  MonotoneReport r;
  r.function = f;
  r.n = n;
  r.lo = lo;
  r.hi = hi;
  r.direction = direction;
  r.grid_step = (hi - lo) / grid_points;
  r.worst_adjacent_difference = std::numeric_limits<double>::infinity();

  const double orient = direction == Direction::Increasing ? 1.0 : -1.0;
  // Evaluate at lo + i*step, with the last point pinned to hi.
  auto at = [&](int i) { return i == grid_points ? hi : lo + r.grid_step * i; };
  double prev = evaluate(f, at(0), n);
  for (int i = 1; i <= grid_points; ++i) {
    const double cur = evaluate(f, at(i), n);
    r.worst_adjacent_difference = std::min(r.worst_adjacent_difference, orient * (cur - prev));
    prev = cur;
  }
  r.pass = r.worst_adjacent_difference >= -kMonotoneSlack;
  return r;
}

std::vector<MonotoneClaim> monotone_claims(double n) {
  if (!(n > 4.0)) throw std::invalid_argument("monotone_claims: n must exceed 4");
  return {
      {TrigFunction::CotCot, 2.0, n / 2.0, Direction::Increasing},
      {TrigFunction::CotCot, n / 2.0, n - 2.0, Direction::Decreasing},
      {TrigFunction::CscCsc, 2.0, n / 2.0, Direction::Decreasing},
      {TrigFunction::CscCot, 2.0, n - 2.0, Direction::Decreasing},
      {TrigFunction::InvSqCsc, 2.0, n - 2.0, Direction::Decreasing},
  };
}

std::vector<MonotoneReport> certify_claims(double n, int grid_points) {
  std::vector<MonotoneReport> out;
  for (const MonotoneClaim& c : monotone_claims(n))
    out.push_back(certify_monotone(c.function, n, c.lo, c.hi, c.direction, grid_points));
  return out;
}

}  // namespace sidi
