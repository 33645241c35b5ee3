#pragma once

#include <optional>
#include <vector>

#include "augcheck/monoid.hpp"

namespace augcheck {

/// Primitivity verdict; a failing monoid carries a nontrivial proper
/// congruence as a partition of the points.
struct CongruenceReport {
  bool primitive = false;
  std::optional<std::vector<uint32_t>> witness;  // class id per point
};

bool is_transitive(const MonoidData& m);

/// 0-transitive: a unique sink fixed by everything, all other orbits full.
std::optional<uint32_t> is_0_transitive(const MonoidData& m);

bool is_2_transitive(const MonoidData& m);

CongruenceReport is_primitive(const MonoidData& m);

/// Orbit of a point under the monoid.
std::vector<uint32_t> orbit(const MonoidData& m, uint32_t point);

/// Pair-transitivity predicates for a subset of elements acting on a subset
/// of points (used for the group criteria over C and R).
bool elements_2_transitive_on(const MonoidData& m, const std::vector<uint32_t>& element_ids,
                              const std::vector<uint32_t>& points);
bool elements_2_homogeneous_on(const MonoidData& m, const std::vector<uint32_t>& element_ids,
                               const std::vector<uint32_t>& points);

/// Smallest congruence identifying the given pair.
std::vector<uint32_t> principal_congruence(const MonoidData& m, uint32_t a, uint32_t b);

}  // namespace augcheck
