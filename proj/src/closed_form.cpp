#include "sidi/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sidi {
namespace {

enum class Term { TwoCot, TwoCsc, CscHalf, CotHalf };

double eval(Term t, int n) {
  const double x = std::numbers::pi / n;
  switch (t) {
    case Term::TwoCot: return 2.0 / std::tan(x);
    case Term::TwoCsc: return 2.0 / std::sin(x);
    case Term::CscHalf: return 1.0 / std::sin(x / 2.0);
    case Term::CotHalf: return 1.0 / std::tan(x / 2.0);
  }
  return 0.0;
}

std::string describe(Term t, int n) {
  const std::string k = std::to_string(n);
  switch (t) {
    case Term::TwoCot: return "2*cot(pi/" + k + ")";
    case Term::TwoCsc: return "2*csc(pi/" + k + ")";
    case Term::CscHalf: return "csc(pi/" + std::to_string(2 * n) + ")";
    case Term::CotHalf: return "cot(pi/" + std::to_string(2 * n) + ")";
  }
  return {};
}

void require_length(int n) {
  if (n < 2) throw std::invalid_argument("cycle length must be at least 2");
}

Term energy_term(int n, Sign s) {
  require_length(n);
  if (n % 2 != 0) return Term::CscHalf;
  const bool zero_mod_4 = n % 4 == 0;
  if (s == Sign::Positive) return zero_mod_4 ? Term::TwoCot : Term::TwoCsc;
  return zero_mod_4 ? Term::TwoCsc : Term::TwoCot;
}

Term iota_term(int n, Sign s) {
  require_length(n);
  if (n % 2 != 0) return Term::CotHalf;
  return s == Sign::Positive ? Term::TwoCot : Term::TwoCsc;
}

}  // namespace

double energy_cycle(int n, Sign sign) { return eval(energy_term(n, sign), n); }

double iota_energy_cycle(int n, Sign sign) {
  // cot(pi/2) evaluates to ~1e-16; C_2^+ has the real spectrum {1, -1}.
  if (n == 2 && sign == Sign::Positive) return 0.0;
  return eval(iota_term(n, sign), n);
}

std::string energy_cycle_formula(int n, Sign sign) { return describe(energy_term(n, sign), n); }
std::string iota_energy_cycle_formula(int n, Sign sign) { return describe(iota_term(n, sign), n); }

double pair_iota(const CyclePair& pair) {
  return iota_energy_cycle(pair.c1().length, pair.c1().sign) +
         iota_energy_cycle(pair.c2().length, pair.c2().sign);
}

}  // namespace sidi
