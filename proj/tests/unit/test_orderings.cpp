#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <numbers>
#include <set>
#include <tuple>

#include "sidi/closed_form.hpp"
#include "sidi/orderings.hpp"
#include "sidi/spectra.hpp"

using namespace sidi;

namespace {
constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

// Brute force: every ordered (r1, s1, r2, s2), canonicalized through a set.
std::set<std::tuple<int, int, int, int>> brute_pairs(int n, SignClass cls) {
  std::set<std::tuple<int, int, int, int>> out;
  for (int r1 = 2; r1 <= n; r1 += 2)
    for (int r2 = 2; r1 + r2 <= n; r2 += 2)
      for (Sign s1 : {P, N})
        for (Sign s2 : {P, N}) {
          if ((s1 == s2) != (cls == SignClass::SameSign)) continue;
          auto a = std::make_tuple(r1, to_int(s1));
          auto b = std::make_tuple(r2, to_int(s2));
          if (b < a) std::swap(a, b);
          out.emplace(std::get<0>(a), std::get<1>(a), std::get<0>(b), std::get<1>(b));
        }
  return out;
}

std::tuple<int, int, int, int> key(const CyclePair& p) {
  auto a = std::make_tuple(p.c1().length, to_int(p.c1().sign));
  auto b = std::make_tuple(p.c2().length, to_int(p.c2().sign));
  if (b < a) std::swap(a, b);
  return {std::get<0>(a), std::get<1>(a), std::get<0>(b), std::get<1>(b)};
}

bool same_cycles(const CyclePair& a, const CyclePair& b) { return a.c1() == b.c1() && a.c2() == b.c2(); }

// The fixed small-total chain cut down to totals <= n, with tie marks dropped
// where the tied predecessor was cut.
std::vector<ChainLink> restricted_small_chain(int n) {
  std::vector<ChainLink> out;
  bool prev_kept = false;
  for (const auto& link : small_total_chain()) {
    const bool keep = link.pair.total_length() <= n;
    if (keep) out.push_back({CyclePair(link.pair.c1(), link.pair.c2(), std::max(n, 4)),
                             link.tied_with_previous && prev_kept});
    prev_kept = keep;
  }
  return out;
}
}  // namespace

TEST_CASE("enumerate_pairs examples") {
  const auto four = enumerate_pairs(4, SignClass::SameSign);
  REQUIRE(four.size() == 2);
  CHECK(std::ranges::count_if(four, [](auto& p) { return same_cycles(p, CyclePair({2, P}, {2, P}, 4)); }) == 1);
  CHECK(std::ranges::count_if(four, [](auto& p) { return same_cycles(p, CyclePair({2, N}, {2, N}, 4)); }) == 1);

  const auto six = enumerate_pairs(6, SignClass::MixedSign);
  REQUIRE(six.size() == 3);
  std::set<std::tuple<int, int, int, int>> got;
  for (auto& p : six) got.insert(key(p));
  CHECK(got == std::set<std::tuple<int, int, int, int>>{{2, -1, 2, 1}, {2, -1, 4, 1}, {2, 1, 4, -1}});

  // totals 4: {2,2}; 6: {2,4}; 8: {2,6}, {4,4}; times two sign patterns
  CHECK(enumerate_pairs(8, SignClass::SameSign).size() == 8);
  CHECK_THROWS_AS(enumerate_pairs(3, SignClass::SameSign), std::invalid_argument);
}

TEST_CASE("enumerate_pairs matches brute force") {
  for (int n = 4; n <= 40; ++n)
    for (SignClass cls : {SignClass::SameSign, SignClass::MixedSign}) {
      const auto pairs = enumerate_pairs(n, cls);
      std::set<std::tuple<int, int, int, int>> got;
      for (auto& p : pairs) got.insert(key(p));
      CHECK(got.size() == pairs.size());  // no duplicates
      CHECK(got == brute_pairs(n, cls));
    }
}

TEST_CASE("ordered_sequence examples") {
  const auto s27 = ordered_sequence(27, SignClass::SameSign);
  REQUIRE(!s27.entries.empty());
  CHECK(same_cycles(s27.entries.front().pair, CyclePair({2, N}, {24, N}, 27)));
  CHECK(std::abs(s27.entries.front().value - 17.32) <= 0.01);
  CHECK(same_cycles(s27.entries.back().pair, CyclePair({2, P}, {2, P}, 27)));
  CHECK(s27.entries.back().value == 0.0);

  const auto m6 = ordered_sequence(6, SignClass::MixedSign, true);
  REQUIRE(m6.entries.size() == 2);
  CHECK(same_cycles(m6.entries[0].pair, CyclePair({2, N}, {4, P}, 6)));
  CHECK(m6.entries[0].value == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(same_cycles(m6.entries[1].pair, CyclePair({2, N}, {2, P}, 6)));
  CHECK(m6.entries[1].value == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(m6.floating_excluded);
}

TEST_CASE("n = 22 same-sign ordering has exactly three ties of two") {
  const auto s = ordered_sequence(22, SignClass::SameSign);
  std::map<int, std::vector<OrderingEntry>> groups;
  for (auto& e : s.entries) groups[e.tie_group].push_back(e);
  std::vector<std::vector<OrderingEntry>> ties;
  for (auto& [g, v] : groups)
    if (v.size() > 1) ties.push_back(v);
  REQUIRE(ties.size() == 3);
  for (auto& t : ties) CHECK(t.size() == 2);

  auto has_tie = [&](CyclePair a, CyclePair b) {
    return std::ranges::any_of(ties, [&](auto& t) {
      return same_cycles(t[0].pair, a) && same_cycles(t[1].pair, b);
    });
  };
  // inside a tie the longer total comes first
  CHECK(has_tie(CyclePair({4, P}, {8, P}, 22), CyclePair({4, N}, {6, N}, 22)));
  CHECK(has_tie(CyclePair({2, P}, {8, P}, 22), CyclePair({2, N}, {4, N}, 22)));
  CHECK(has_tie(CyclePair({4, P}, {4, P}, 22), CyclePair({2, N}, {2, N}, 22)));
  for (auto& t : ties) CHECK(std::abs(t[0].value - t[1].value) <= kTieTolerance);
}

TEST_CASE("rank_pairs assigns ranks and tie groups") {
  const auto e = rank_pairs({CyclePair({2, N}, {2, N}, 8), CyclePair({2, P}, {2, P}, 8),
                             CyclePair({4, P}, {4, P}, 8), CyclePair({2, N}, {6, N}, 8)});
  REQUIRE(e.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(e[static_cast<std::size_t>(i)].rank == i + 1);
  CHECK(same_cycles(e[0].pair, CyclePair({2, N}, {6, N}, 8)));
  CHECK(same_cycles(e[1].pair, CyclePair({4, P}, {4, P}, 8)));
  CHECK(same_cycles(e[2].pair, CyclePair({2, N}, {2, N}, 8)));
  CHECK(e[1].tie_group == e[2].tie_group);
  CHECK(e[0].tie_group == 1);
  CHECK(e[3].tie_group == 3);
  CHECK(rank_pairs({}).empty());
}

TEST_CASE("ordered sequences are sorted and cover the family") {
  for (int n = 4; n <= 60; ++n)
    for (SignClass cls : {SignClass::SameSign, SignClass::MixedSign}) {
      const auto s = ordered_sequence(n, cls);
      CHECK(s.entries.size() == enumerate_pairs(n, cls).size());
      for (std::size_t i = 1; i < s.entries.size(); ++i) {
        const auto& a = s.entries[i - 1];
        const auto& b = s.entries[i];
        CHECK(a.value >= b.value - kTieTolerance);
        CHECK(b.rank == a.rank + 1);
        CHECK((b.tie_group == a.tie_group) == (std::abs(a.value - b.value) <= kTieTolerance));
      }
    }
}

TEST_CASE("full and floating-excluded mixed orderings differ only by the floating pairs") {
  for (int n = 6; n <= 60; ++n) {
    const auto full = ordered_sequence(n, SignClass::MixedSign, false);
    const auto cut = ordered_sequence(n, SignClass::MixedSign, true);
    std::vector<CyclePair> kept;
    for (auto& e : full.entries)
      if (!is_floating_pair(e.pair)) kept.push_back(e.pair);
    REQUIRE(kept.size() == cut.entries.size());
    for (std::size_t i = 0; i < kept.size(); ++i) CHECK(same_cycles(kept[i], cut.entries[i].pair));
    CHECK(full.entries.size() - cut.entries.size() == static_cast<std::size_t>((n - 2) / 2 - 1));
  }
  CHECK(is_floating_pair(CyclePair({4, N}, {2, P}, 6)));
  CHECK_FALSE(is_floating_pair(CyclePair({2, N}, {2, P}, 6)));
  CHECK(is_floating_pair(CyclePair({2, P}, {4, N}, 8)));
  CHECK_FALSE(is_floating_pair(CyclePair({4, N}, {4, P}, 8)));
}

TEST_CASE("ordered_sequence is deterministic") {
  for (int n : {22, 27, 48, 60})
    for (SignClass cls : {SignClass::SameSign, SignClass::MixedSign}) {
      const auto a = ordered_sequence(n, cls);
      const auto b = ordered_sequence(n, cls);
      REQUIRE(a.entries.size() == b.entries.size());
      for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].pair == b.entries[i].pair);
        CHECK(std::memcmp(&a.entries[i].value, &b.entries[i].value, sizeof(double)) == 0);
        CHECK(a.entries[i].tie_group == b.entries[i].tie_group);
      }
    }
}

TEST_CASE("distinct values stay well above the tie tolerance") {
  double smallest = 1.0;
  for (int n = 4; n <= 60; ++n)
    for (SignClass cls : {SignClass::SameSign, SignClass::MixedSign}) {
      const auto s = ordered_sequence(n, cls);
      for (std::size_t i = 1; i < s.entries.size(); ++i) {
        const double d = s.entries[i - 1].value - s.entries[i].value;
        if (s.entries[i - 1].tie_group != s.entries[i].tie_group) smallest = std::min(smallest, d);
      }
    }
  CHECK(smallest > 1e-6);
}

TEST_CASE("ordering values match the spectrum of a witness graph") {
  for (int n = 4; n <= 20; ++n)
    for (SignClass cls : {SignClass::SameSign, SignClass::MixedSign})
      for (const auto& e : ordered_sequence(n, cls).entries) {
        const double spectral = iota_energy_of_graph(witness_graph(e.pair));
        CHECK_MESSAGE(std::abs(spectral - e.value) <= 1e-8, e.pair.label() << " n = " << n);
      }
}

TEST_CASE("stated same-sign chain matches the numeric sort for n in [22, 60]") {
  for (int n = 22; n <= 60; ++n) {
    const auto r = check_same_sign_chain(n);
    CHECK_MESSAGE(r.pass, r.detail);
    CHECK(r.compared == enumerate_pairs(n, SignClass::SameSign).size());
  }
  CHECK_THROWS_AS(check_same_sign_chain(21), std::invalid_argument);
}

TEST_CASE("same_sign_chain shape") {
  const auto c24 = same_sign_chain(24);
  REQUIRE(!c24.empty());
  CHECK(same_cycles(c24.front().pair, CyclePair({2, N}, {22, N}, 24)));
  CHECK(same_cycles(c24.back().pair, CyclePair({2, P}, {2, P}, 24)));
  // odd budgets use the even part
  CHECK(same_sign_chain(27).size() == same_sign_chain(26).size());
  CHECK(std::ranges::count_if(small_total_chain(), [](auto& l) { return l.tied_with_previous; }) == 3);
  CHECK(small_total_chain().size() == 46);
}

TEST_CASE("below 22 the small-total chain is the ordering, with the total-20 negative head for n = 20, 21") {
  for (int n = 4; n <= 21; ++n) {
    std::vector<ChainLink> chain;
    if (n >= 20)
      for (int m = 2; m <= 10; m += 2) chain.push_back({CyclePair({m, N}, {20 - m, N}, n), false});
    for (auto& l : restricted_small_chain(n)) chain.push_back(l);
    const auto r = compare_chain("small budgets", chain, ordered_sequence(n, SignClass::SameSign));
    CHECK_MESSAGE(r.pass, "n = " << n << ": " << r.detail);
  }
}

TEST_CASE("stated mixed chain matches the numeric sort for n in [6, 60]") {
  for (int n = 6; n <= 60; ++n) {
    const auto r = check_mixed_chain(n);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  const auto c10 = mixed_chain(10);
  const std::vector<CyclePair> expect{
      CyclePair({2, N}, {8, P}, 10), CyclePair({4, N}, {6, P}, 10), CyclePair({6, N}, {4, P}, 10),
      CyclePair({2, N}, {6, P}, 10), CyclePair({4, N}, {4, P}, 10), CyclePair({2, N}, {4, P}, 10),
      CyclePair({2, N}, {2, P}, 10)};
  REQUIRE(c10.size() == expect.size());
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(same_cycles(c10[i].pair, expect[i]));
  CHECK(mixed_chain(6).size() == 2);
}

TEST_CASE("compare_chain reports a swapped pair") {
  auto chain = mixed_chain(10);
  std::swap(chain[1], chain[2]);
  const auto r = compare_chain("swapped", chain, ordered_sequence(10, SignClass::MixedSign, true));
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("(C4-,C6+)") != std::string::npos);
}

TEST_CASE("center chains") {
  for (int n = 6; n <= 100; n += 2) {
    const auto r = check_center_chains(n);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  // n = 8: (C2-,C6-) > (C4-,C4-) > (C4+,C4+) > (C2+,C6+)
  const double a = pair_iota(CyclePair({2, N}, {6, N}, 8));
  const double b = pair_iota(CyclePair({4, N}, {4, N}, 8));
  const double c = pair_iota(CyclePair({4, P}, {4, P}, 8));
  const double d = pair_iota(CyclePair({2, P}, {6, P}, 8));
  CHECK(a > b);
  CHECK(b > c);
  CHECK(c > d);
  CHECK(check_center_chains(6).compared >= 2);
  CHECK_THROWS_AS(check_center_chains(7), std::invalid_argument);
  CHECK_THROWS_AS(check_center_chains(4), std::invalid_argument);
}

TEST_CASE("crossover inequalities") {
  for (int n = 22; n <= 100; n += 2) {
    const auto r = check_crossover_inequalities(n);
    CHECK_MESSAGE(r.pass, r.detail);
  }
  // n = 22: 2cot(pi/6) + 2cot(pi/16) > 2csc(pi/2) + 2csc(pi/18)
  const double lhs = pair_iota(CyclePair({6, P}, {16, P}, 22));
  const double rhs = pair_iota(CyclePair({2, N}, {18, N}, 22));
  CHECK(lhs - rhs == doctest::Approx(2.0 * std::sqrt(3.0) - 2.0 - crossover_gap(22)).epsilon(1e-12));
  CHECK(std::abs(crossover_gap(22) - 1.463) <= 1e-3);
  CHECK(crossover_gap(22) < 2.0 * std::sqrt(3.0) - 2.0);
  CHECK_THROWS_AS(check_crossover_inequalities(20), std::invalid_argument);
  CHECK_THROWS_AS(check_crossover_inequalities(23), std::invalid_argument);
}

TEST_CASE("floating pair brackets") {
  auto expect = [](int n, int above, int below) {
    const auto r = locate_floating_pair(n);
    CHECK(same_cycles(r.floating.pair, CyclePair({n - 2, N}, {2, P}, n)));
    REQUIRE(r.above);
    REQUIRE(r.below);
    CHECK_MESSAGE(same_cycles(r.above->pair, CyclePair({above, N}, {n - 2 - above, P}, n)), "n = " << n);
    CHECK_MESSAGE(same_cycles(r.below->pair, CyclePair({below, N}, {n - 2 - below, P}, n)), "n = " << n);
    return r;
  };
  CHECK(expect(12, 2, 4).agrees_with_stated == true);
  CHECK(expect(20, 4, 6).agrees_with_stated == true);
  CHECK(expect(40, 10, 12).agrees_with_stated == true);
  // n = 48 lies in the stated 40..48 range, but the pair has already moved
  // one bracket down.
  const auto r48 = expect(48, 12, 14);
  REQUIRE(r48.stated);
  CHECK(r48.stated->above_negative_length == 10);
  CHECK(r48.agrees_with_stated == false);
  CHECK_FALSE(locate_floating_pair(50).agrees_with_stated.has_value());

  for (int n = 10; n <= 46; n += 2) CHECK_MESSAGE(locate_floating_pair(n).agrees_with_stated == true, n);
  CHECK_THROWS_AS(locate_floating_pair(11), std::invalid_argument);
  CHECK_THROWS_AS(locate_floating_pair(8), std::invalid_argument);
}

TEST_CASE("extremal pairs") {
  auto check = [](int n, CyclePair max, double max_value) {
    const auto r = extremal_pairs(n);
    CHECK(same_cycles(r.max.pair, max));
    CHECK(r.max.value == doctest::Approx(max_value).epsilon(1e-12));
    CHECK(same_cycles(r.min.pair, CyclePair({2, P}, {2, P}, n)));
    CHECK(r.min.value == 0.0);
    CHECK(r.agrees_with_stated);
  };
  check(4, CyclePair({2, N}, {2, N}, 4), 4.0);
  check(6, CyclePair({2, N}, {4, N}, 6), 2.0 + 2.0 * std::sqrt(2.0));
  check(10, CyclePair({2, N}, {8, N}, 10), 2.0 + 2.0 / std::sin(std::numbers::pi / 8));
  check(27, CyclePair({2, N}, {24, N}, 27), 2.0 + 2.0 / std::sin(std::numbers::pi / 24));

  // exhaustive over both families
  for (int n = 4; n <= 60; ++n) {
    double hi = -1.0, lo = 1e300;
    for (SignClass cls : {SignClass::SameSign, SignClass::MixedSign})
      for (auto& p : enumerate_pairs(n, cls)) {
        hi = std::max(hi, pair_iota(p));
        lo = std::min(lo, pair_iota(p));
      }
    const auto r = extremal_pairs(n);
    CHECK(r.max.value == hi);
    CHECK(r.min.value == lo);
    CHECK(r.agrees_with_stated);
  }
}
