#pragma once

#include <string>

#include "sidi/graph.hpp"

namespace sidi {

/// Energy (sum of |Re z|) of a signed directed cycle of length n >= 2.
double energy_cycle(int n, Sign sign);

/// Iota energy (sum of |Im z|) of a signed directed cycle of length n >= 2.
double iota_energy_cycle(int n, Sign sign);

/// The analytic case used by the two functions above, e.g. "2*csc(pi/24)".
std::string energy_cycle_formula(int n, Sign sign);
std::string iota_energy_cycle_formula(int n, Sign sign);

/// Iota energy of a bicyclic member: the cycles are its only nontrivial
/// strong components, so the value is the sum of the two cycle terms.
double pair_iota(const CyclePair& pair);

}  // namespace sidi
