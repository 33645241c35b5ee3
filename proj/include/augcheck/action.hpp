#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "augcheck/green.hpp"
#include "augcheck/linalg.hpp"
#include "augcheck/monoid.hpp"

namespace augcheck {

/// Linearized action of a set of monoid elements on a basis.
struct ActionModule {
  enum class Basis { Omega, Aug };
  Basis basis = Basis::Omega;
  FieldTag field = FieldTag::rationals();
  size_t dim = 0;
  std::vector<uint32_t> element_ids;  // which elements the matrices belong to
  std::vector<Matrix> action;         // same order as element_ids
};

/// One |Omega| x |Omega| 0/1 matrix per element: matrix[m.w, w] = 1.
ActionModule omega_module(const MonoidData& m, const FieldTag& field);

/// Change of basis to { w_i - w_0 : i >= 1 }; constants act as zero.
ActionModule aug_module(const ActionModule& omega);

/// Aug matrix of a single transformation in the { w_i - w_0 } basis.
Matrix aug_matrix(const Transformation& t, const FieldTag& field);

/// The G_e = H_e action on eOmega, restricted to its augmentation submodule.
/// Also reports the point set eOmega.
struct RestrictedModule {
  std::vector<uint32_t> points;  // eOmega, sorted
  ActionModule aug;              // dimension |eOmega| - 1
};
RestrictedModule restricted_group_module(const MonoidData& m, const GreenData& g, uint32_t e,
                                         const FieldTag& field);

/// A family of distinct nonempty subsets of the points, as bitsets.
struct SetSystem {
  size_t ground = 0;
  std::vector<uint64_t> blocks;  // first-seen order

  bool contains(uint64_t block) const;
  void add(uint64_t block);  // dedups
};

/// The set system { f^-1(f.w) : f an idempotent of J, w a point }.
SetSystem kernel_blocks(const MonoidData& m, const GreenData& g, uint32_t j_class);

/// |Omega| x |blocks| 0/1 membership matrix.  Rank questions over R/C are
/// delegated to Q, so those tags produce rational matrices here.
Matrix incidence_matrix(const SetSystem& s, const FieldTag& field);

/// Graph on the points with an edge wherever some idempotent of the J-class
/// fixes both endpoints.
struct GammaGraph {
  size_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // sorted pairs, deduped
  std::vector<uint32_t> edge_witness;                // idempotent element id per edge
  std::vector<uint32_t> component;                   // per vertex
  size_t n_components = 0;

  bool connected() const { return n_components == 1; }
  bool has_edge(uint32_t a, uint32_t b) const;
  bool is_complete() const;
  bool is_star(uint32_t center) const;
};

GammaGraph gamma_graph(const MonoidData& m, const GreenData& g, uint32_t j_class);

/// Indicator vector of a block, as a row in F^Omega.
Vector indicator(const FieldTag& field, size_t n, uint64_t block);

}  // namespace augcheck
