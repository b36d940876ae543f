#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sidi/graph.hpp"

namespace sidi {

/// Values closer than this are treated as equal when forming tie groups.
inline constexpr double kTieTolerance = 1e-9;

enum class SignClass { SameSign, MixedSign };

struct OrderingEntry {
  CyclePair pair;
  double value = 0.0;
  int rank = 0;        // 1-based position in the sequence
  int tie_group = 0;   // 1-based; equal values share a group
};

struct OrderingSequence {
  int budget_n = 0;
  SignClass sign_class = SignClass::SameSign;
  bool floating_excluded = false;
  std::vector<OrderingEntry> entries;
};

/// All canonical pairs of even cycles (lengths >= 2, total <= budget_n) in the
/// requested sign class, in canonical order.
std::vector<CyclePair> enumerate_pairs(int budget_n, SignClass sign_class);

/// True for (C_m^-, C_2^+) with m >= 4, whose place in the mixed ordering
/// drifts with the budget.
bool is_floating_pair(const CyclePair& pair);

/// Sorts by iota energy, descending, and assigns ranks and tie groups. Inside
/// a tie group: total length descending, then c1 length ascending, then sign
/// pattern (-,-) < (+,-) < (+,+).
std::vector<OrderingEntry> rank_pairs(std::vector<CyclePair> pairs, double tie_tolerance = kTieTolerance);

OrderingSequence ordered_sequence(int budget_n, SignClass sign_class, bool exclude_floating = false,
                                  double tie_tolerance = kTieTolerance);

// ---------------------------------------------------------------------------
// Stated orderings and their numeric verification.

struct ChainLink {
  CyclePair pair;
  bool tied_with_previous = false;
};

/// Fixed chain for small totals: starts at (C2+,C20+) and runs down to
/// (C2+,C2+), with the three exact equalities marked. Pairs carry budget 22.
std::vector<ChainLink> small_total_chain();

/// Stated same-sign ordering for budget_n >= 22: negative pairs of the top
/// even total, then one segment per even total down to 22, then the fixed
/// small-total chain.
std::vector<ChainLink> same_sign_chain(int budget_n);

/// Stated mixed ordering without floating pairs: for each even total T from
/// the top down, (C2-,C_{T-2}+) > (C4-,C_{T-4}+) > ... > (C_{T-4}-,C4+);
/// the total-4 block is (C2-,C2+).
std::vector<ChainLink> mixed_chain(int budget_n);

struct VerificationReport {
  std::string check;
  int budget_n = 0;
  bool pass = true;
  std::size_t compared = 0;
  std::string detail;  // first mismatch, or a summary when passing
};

/// Compares a stated chain with a numeric ordering, including tie structure.
VerificationReport compare_chain(std::string check, const std::vector<ChainLink>& chain,
                                 const OrderingSequence& sequence);

/// same_sign_chain(n) against the numeric same-sign sort. Requires n >= 22.
VerificationReport check_same_sign_chain(int budget_n, double tie_tolerance = kTieTolerance);

/// mixed_chain(n) against the numeric mixed sort with floating pairs removed.
VerificationReport check_mixed_chain(int budget_n, double tie_tolerance = kTieTolerance);

/// For even n > 4: the pairs of total exactly n descend from (C2-,C_{n-2}-)
/// to the central negative pair, then from the central positive pair out to
/// (C2+,C_{n-2}+), strictly.
VerificationReport check_center_chains(int budget_n);

/// For even n >= 22, the three interleaving inequalities between adjacent
/// totals: central pairs of total n-2 around (C2+,C_{n-2}+), and
/// (C6+,C_{n-6}+) > (C2-,C_{n-4}-) > (C4+,C_{n-4}+).
VerificationReport check_crossover_inequalities(int budget_n);

/// 2csc(pi/(n-4)) - 2cot(pi/(n-6)); (C6+,C_{n-6}+) > (C2-,C_{n-4}-) holds
/// exactly when this is below 2*sqrt(3) - 2.
double crossover_gap(int budget_n);

struct StatedBracket {
  int lo = 0;
  int hi = 0;
  int above_negative_length = 0;  // pair (C_a-, C_{n-2-a}+) directly above
  int below_negative_length = 0;  // pair (C_b-, C_{n-2-b}+) directly below
};

/// The stated bracket ranges for the floating pair (even n in 10..48).
std::span<const StatedBracket> stated_floating_brackets();

struct FloatingPairReport {
  int budget_n = 0;
  OrderingEntry floating;
  std::optional<OrderingEntry> above;
  std::optional<OrderingEntry> below;
  std::optional<StatedBracket> stated;
  // Set when n falls in a stated range.
  std::optional<bool> agrees_with_stated;
};

/// Position of (C_{n-2}-, C2+) in the full mixed ordering. Even n >= 10.
FloatingPairReport locate_floating_pair(int budget_n, double tie_tolerance = kTieTolerance);

struct ExtremalReport {
  int budget_n = 0;
  OrderingEntry max;
  OrderingEntry min;
  CyclePair stated_max;  // (C2-,C_{n-2}-) for even n, (C2-,C_{n-3}-) for odd n
  CyclePair stated_min;  // (C2+,C2+)
  bool agrees_with_stated = false;
};

/// Maximum and minimum over both sign classes together.
ExtremalReport extremal_pairs(int budget_n, double tie_tolerance = kTieTolerance);

}  // namespace sidi
