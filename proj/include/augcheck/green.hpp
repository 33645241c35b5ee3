#pragma once

#include <vector>

#include "augcheck/monoid.hpp"

namespace augcheck {

/// Green's relation data: R/L/J/H class ids per element, the J-order, and
/// per-J-class bookkeeping.  Class ids are numbered in order of the smallest
/// element id they contain.
struct GreenData {
  std::vector<uint32_t> r_class, l_class, j_class, h_class;
  size_t n_r = 0, n_l = 0, n_j = 0, n_h = 0;

  std::vector<std::vector<uint32_t>> j_members;        // per J-class, sorted element ids
  std::vector<std::vector<uint32_t>> j_idempotents;    // per J-class, sorted element ids
  std::vector<bool> j_regular;
  std::vector<size_t> j_rank;                          // transformation rank of the class
  std::vector<std::vector<bool>> j_below;              // j_below[a][b]: J_a <= J_b
  uint32_t minimal_j = 0;                              // the minimal ideal I(M)
  std::vector<uint32_t> idempotents;                   // all idempotent element ids

  bool j_leq(uint32_t a, uint32_t b) const { return j_below[a][b]; }
};

GreenData green(const MonoidData& m);

/// The minimal ideal I(M), as a J-class id.
uint32_t minimal_ideal(const GreenData& g);

/// J-classes of M minus I(M) that are minimal in the J-order.
std::vector<uint32_t> minimal_classes_above_ideal(const GreenData& g);

/// The maximal subgroup G_e = H_e at an idempotent e, verified to be a group.
std::vector<uint32_t> maximal_subgroup(const MonoidData& m, const GreenData& g, uint32_t e);

}  // namespace augcheck
