#include "sidi/orderings.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "sidi/closed_form.hpp"

namespace sidi {
namespace {

constexpr Sign kNeg = Sign::Negative;
constexpr Sign kPos = Sign::Positive;

int even_budget(int n) { return n % 2 == 0 ? n : n - 1; }

// Largest even m with m <= total - m.
int central_length(int total) {
  const int half = total / 2;
  return half % 2 == 0 ? half : half - 1;
}

CyclePair both(Sign s, int m, int total, int budget_n) {
  return CyclePair({m, s}, {total - m, s}, budget_n);
}

CyclePair mixed(int negative_length, int positive_length, int budget_n) {
  return CyclePair({negative_length, kNeg}, {positive_length, kPos}, budget_n);
}

bool same_cycles(const CyclePair& a, const CyclePair& b) {
  return a.c1() == b.c1() && a.c2() == b.c2();
}

int sign_pattern(const CyclePair& p) {
  if (p.c1().sign == kNeg && p.c2().sign == kNeg) return 0;
  if (p.c1().sign == kPos && p.c2().sign == kPos) return 2;
  return 1;
}

auto tie_break_key(const CyclePair& p) {
  return std::tuple(-p.total_length(), p.c1().length, sign_pattern(p));
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct SmallChainItem {
  int a;
  int b;
  Sign sign;
  bool tied_with_previous;
};

// Descending iota-energy chain over totals <= 20, headed by (C2+,C20+).
constexpr std::array<SmallChainItem, 46> kSmallChain{{
    {2, 20, kPos, false}, {10, 10, kPos, false}, {8, 12, kPos, false}, {2, 16, kNeg, false},
    {6, 14, kPos, false}, {4, 16, kPos, false},  {4, 14, kNeg, false}, {6, 12, kNeg, false},
    {8, 10, kNeg, false}, {2, 18, kPos, false},  {2, 14, kNeg, false}, {8, 10, kPos, false},
    {6, 12, kPos, false}, {4, 14, kPos, false},  {4, 12, kNeg, false}, {6, 10, kNeg, false},
    {8, 8, kNeg, false},  {2, 16, kPos, false},  {2, 12, kNeg, false}, {8, 8, kPos, false},
    {6, 10, kPos, false}, {4, 12, kPos, false},  {4, 10, kNeg, false}, {6, 8, kNeg, false},
    {2, 14, kPos, false}, {2, 10, kNeg, false},  {6, 8, kPos, false},  {4, 10, kPos, false},
    {4, 8, kNeg, false},  {6, 6, kNeg, false},   {2, 12, kPos, false}, {2, 8, kNeg, false},
    {6, 6, kPos, false},  {4, 8, kPos, false},   {4, 6, kNeg, true},   {2, 10, kPos, false},
    {2, 6, kNeg, false},  {4, 4, kNeg, false},   {4, 6, kPos, false},  {2, 8, kPos, false},
    {2, 4, kNeg, true},   {4, 4, kPos, false},   {2, 2, kNeg, true},   {2, 6, kPos, false},
    {2, 4, kPos, false},  {2, 2, kPos, false},
}};

std::vector<ChainLink> small_chain_for(int budget_n) {
  std::vector<ChainLink> out;
  out.reserve(kSmallChain.size());
  for (const auto& it : kSmallChain)
    out.push_back({CyclePair({it.a, it.sign}, {it.b, it.sign}, budget_n), it.tied_with_previous});
  return out;
}

VerificationReport strictly_descending(std::string check, int budget_n,
                                       const std::vector<CyclePair>& chain) {
  VerificationReport r{std::move(check), budget_n, true, chain.size(), {}};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const double hi = pair_iota(chain[i - 1]);
    const double lo = pair_iota(chain[i]);
    if (!(hi > lo)) {
      r.pass = false;
      r.detail = chain[i - 1].label() + " = " + fmt(hi) + " is not above " + chain[i].label() +
                 " = " + fmt(lo);
      return r;
    }
  }
  r.detail = std::to_string(chain.size()) + " pairs strictly descending";
  return r;
}

}  // namespace

std::vector<CyclePair> enumerate_pairs(int budget_n, SignClass sign_class) {
  if (budget_n < 4) throw std::invalid_argument("enumerate_pairs: budget must be at least 4");
  std::vector<CyclePair> out;
  for (int r1 = 2; r1 <= budget_n - 2; r1 += 2) {
    for (int r2 = r1; r1 + r2 <= budget_n; r2 += 2) {
      if (sign_class == SignClass::SameSign) {
        out.push_back(CyclePair({r1, kNeg}, {r2, kNeg}, budget_n));
        out.push_back(CyclePair({r1, kPos}, {r2, kPos}, budget_n));
      } else {
        out.push_back(CyclePair({r1, kNeg}, {r2, kPos}, budget_n));
        if (r1 != r2) out.push_back(CyclePair({r1, kPos}, {r2, kNeg}, budget_n));
      }
    }
  }
  std::ranges::sort(out);
  return out;
}

bool is_floating_pair(const CyclePair& p) {
  const SignedCycle two_plus{2, kPos};
  if (p.c1() == two_plus) return p.c2().sign == kNeg && p.c2().length >= 4;
  return false;
}

std::vector<OrderingEntry> rank_pairs(std::vector<CyclePair> pairs, double tie_tolerance) {
  std::vector<OrderingEntry> entries;
  entries.reserve(pairs.size());
  for (CyclePair& p : pairs) entries.push_back({p, pair_iota(p), 0, 0});

  std::ranges::sort(entries, [](const OrderingEntry& a, const OrderingEntry& b) {
    if (a.value != b.value) return a.value > b.value;
    return tie_break_key(a.pair) < tie_break_key(b.pair);
  });

  auto by_key = [](const OrderingEntry& a, const OrderingEntry& b) {
    return tie_break_key(a.pair) < tie_break_key(b.pair);
  };
  int group = 0;
  std::size_t begin = 0;
  while (begin < entries.size()) {
    std::size_t end = begin + 1;
    while (end < entries.size() && entries[begin].value - entries[end].value <= tie_tolerance) ++end;
    ++group;
    std::sort(entries.begin() + static_cast<std::ptrdiff_t>(begin),
              entries.begin() + static_cast<std::ptrdiff_t>(end), by_key);
    for (std::size_t i = begin; i < end; ++i) entries[i].tie_group = group;
    begin = end;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].rank = static_cast<int>(i) + 1;
  return entries;
}

OrderingSequence ordered_sequence(int budget_n, SignClass sign_class, bool exclude_floating,
                                  double tie_tolerance) {
  auto pairs = enumerate_pairs(budget_n, sign_class);
  const bool drop = exclude_floating && sign_class == SignClass::MixedSign;
  if (drop) std::erase_if(pairs, is_floating_pair);
  return {budget_n, sign_class, drop, rank_pairs(std::move(pairs), tie_tolerance)};
}

std::vector<ChainLink> small_total_chain() { return small_chain_for(22); }

std::vector<ChainLink> same_sign_chain(int budget_n) {
  if (budget_n < 22) throw std::invalid_argument("same_sign_chain: budget must be at least 22");
  const int n = budget_n;
  const int top = even_budget(n);
  std::vector<ChainLink> chain;
  auto push = [&chain](CyclePair p) { chain.push_back({p, false}); };

  for (int m = 2; m <= central_length(top); m += 2) push(both(kNeg, m, top, n));
  for (int t = top; t >= 22; t -= 2) {
    for (int m = central_length(t); m >= 6; m -= 2) push(both(kPos, m, t, n));
    push(both(kNeg, 2, t - 2, n));
    push(both(kPos, 4, t, n));
    for (int m = 4; m <= central_length(t - 2); m += 2) push(both(kNeg, m, t - 2, n));
    push(both(kPos, 2, t, n));
  }
  auto tail = small_chain_for(n);
  chain.insert(chain.end(), tail.begin() + 1, tail.end());
  return chain;
}

std::vector<ChainLink> mixed_chain(int budget_n) {
  if (budget_n < 4) throw std::invalid_argument("mixed_chain: budget must be at least 4");
  std::vector<ChainLink> chain;
  for (int t = even_budget(budget_n); t >= 6; t -= 2) {
    for (int m = 2; m <= t - 4; m += 2) chain.push_back({mixed(m, t - m, budget_n), false});
  }
  chain.push_back({mixed(2, 2, budget_n), false});
  return chain;
}

VerificationReport compare_chain(std::string check, const std::vector<ChainLink>& chain,
                                 const OrderingSequence& sequence) {
  VerificationReport r{std::move(check), sequence.budget_n, true, 0, {}};
  const auto& entries = sequence.entries;
  const std::size_t common = std::min(chain.size(), entries.size());
  for (std::size_t i = 0; i < common; ++i) {
    ++r.compared;
    if (!same_cycles(chain[i].pair, entries[i].pair)) {
      r.pass = false;
      r.detail = "position " + std::to_string(i + 1) + ": stated " + chain[i].pair.label() +
                 ", numeric " + entries[i].pair.label() + " (" + fmt(entries[i].value) + ")";
      return r;
    }
    const bool tied = i > 0 && entries[i].tie_group == entries[i - 1].tie_group;
    if (tied != chain[i].tied_with_previous) {
      r.pass = false;
      r.detail = "position " + std::to_string(i + 1) + ": " + entries[i].pair.label() +
                 (chain[i].tied_with_previous ? " should tie with " : " should be strictly below ") +
                 entries[i - 1].pair.label();
      return r;
    }
  }
  if (chain.size() != entries.size()) {
    r.pass = false;
    r.detail = "length mismatch: stated " + std::to_string(chain.size()) + ", numeric " +
               std::to_string(entries.size());
    return r;
  }
  r.detail = std::to_string(r.compared) + " pairs match";
  return r;
}

VerificationReport check_same_sign_chain(int budget_n, double tie_tolerance) {
  if (budget_n < 22)
    throw std::invalid_argument("check_same_sign_chain: budget must be at least 22");
  return compare_chain("same-sign ordering", same_sign_chain(budget_n),
                       ordered_sequence(budget_n, SignClass::SameSign, false, tie_tolerance));
}

VerificationReport check_mixed_chain(int budget_n, double tie_tolerance) {
  return compare_chain("mixed ordering", mixed_chain(budget_n),
                       ordered_sequence(budget_n, SignClass::MixedSign, true, tie_tolerance));
}

VerificationReport check_center_chains(int budget_n) {
  const int n = budget_n;
  if (n <= 4 || n % 2 != 0)
    throw std::invalid_argument("check_center_chains: budget must be even and greater than 4");
  std::vector<CyclePair> chain;
  const int c = central_length(n);
  for (int m = 2; m <= c; m += 2) chain.push_back(both(kNeg, m, n, n));
  for (int m = c; m >= 2; m -= 2) chain.push_back(both(kPos, m, n, n));
  return strictly_descending("center chains", n, chain);
}

double crossover_gap(int budget_n) {
  const double pi = std::numbers::pi;
  return 2.0 / std::sin(pi / (budget_n - 4)) - 2.0 / std::tan(pi / (budget_n - 6));
}

VerificationReport check_crossover_inequalities(int budget_n) {
  const int n = budget_n;
  if (n < 22 || n % 2 != 0)
    throw std::invalid_argument("check_crossover_inequalities: budget must be even and at least 22");
  const int c = central_length(n - 2);
  const std::vector<CyclePair> around_top{both(kNeg, c, n - 2, n), both(kPos, 2, n, n),
                                          both(kPos, c, n - 2, n)};
  const std::vector<CyclePair> step{both(kPos, 6, n, n), both(kNeg, 2, n - 2, n),
                                    both(kPos, 4, n, n)};
  auto first = strictly_descending("crossover inequalities", n, around_top);
  if (!first.pass) return first;
  auto second = strictly_descending("crossover inequalities", n, step);
  if (!second.pass) return second;
  second.compared += first.compared;
  second.detail = "central pairs of total " + std::to_string(n - 2) + " bracket " +
                  around_top[1].label() + "; " + step[0].label() + " > " + step[1].label() +
                  " by " + fmt(pair_iota(step[0]) - pair_iota(step[1]));
  return second;
}

std::span<const StatedBracket> stated_floating_brackets() {
  static constexpr std::array<StatedBracket, 5> kBrackets{{
      {10, 16, 2, 4},
      {18, 22, 4, 6},
      {24, 30, 6, 8},
      {32, 38, 8, 10},
      {40, 48, 10, 12},
  }};
  return kBrackets;
}

FloatingPairReport locate_floating_pair(int budget_n, double tie_tolerance) {
  const int n = budget_n;
  if (n < 10 || n % 2 != 0)
    throw std::invalid_argument("locate_floating_pair: budget must be even and at least 10");
  const auto seq = ordered_sequence(n, SignClass::MixedSign, false, tie_tolerance);
  const CyclePair floating = mixed(n - 2, 2, n);
  const auto it = std::ranges::find_if(seq.entries, [&](const OrderingEntry& e) {
    return same_cycles(e.pair, floating);
  });
  const auto idx = static_cast<std::size_t>(it - seq.entries.begin());

  FloatingPairReport r{n, *it, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (idx > 0) r.above = seq.entries[idx - 1];
  if (idx + 1 < seq.entries.size()) r.below = seq.entries[idx + 1];

  for (const StatedBracket& b : stated_floating_brackets()) {
    if (n < b.lo || n > b.hi) continue;
    r.stated = b;
    const CyclePair want_above = mixed(b.above_negative_length, n - 2 - b.above_negative_length, n);
    const CyclePair want_below = mixed(b.below_negative_length, n - 2 - b.below_negative_length, n);
    r.agrees_with_stated = r.above && r.below && same_cycles(r.above->pair, want_above) &&
                           same_cycles(r.below->pair, want_below);
  }
  return r;
}

ExtremalReport extremal_pairs(int budget_n, double tie_tolerance) {
  const int n = budget_n;
  auto pairs = enumerate_pairs(n, SignClass::SameSign);
  auto mixed_pairs = enumerate_pairs(n, SignClass::MixedSign);
  pairs.insert(pairs.end(), mixed_pairs.begin(), mixed_pairs.end());
  const auto entries = rank_pairs(std::move(pairs), tie_tolerance);

  const int top = even_budget(n);
  ExtremalReport r{n, entries.front(), entries.back(), both(kNeg, 2, top, n),
                   both(kPos, 2, 4, n), false};
  r.agrees_with_stated = same_cycles(r.max.pair, r.stated_max) && same_cycles(r.min.pair, r.stated_min);
  return r;
}

}  // namespace sidi
