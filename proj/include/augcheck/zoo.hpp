#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "augcheck/monoid.hpp"

namespace augcheck {

/// Undirected graph without loops; edges stored as sorted pairs.
struct Graph {
  size_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  Graph(size_t n, std::vector<std::pair<uint32_t, uint32_t>> edge_list);
  bool adjacent(uint32_t a, uint32_t b) const;
  bool connected() const;

  static Graph complete(size_t n);
  static Graph path(size_t n);
  static Graph cycle(size_t n);
  static Graph star(size_t n);  // center 0
};

struct Digraph {
  size_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;  // (init, ter)

  Digraph(size_t n, std::vector<std::pair<uint32_t, uint32_t>> edge_list);
  bool has_edge(uint32_t u, uint32_t v) const;
  bool acyclic() const;
  bool underlying_connected() const;
  /// Reflexive-transitive reachability: order[u][v] iff u = v or a directed
  /// path runs from u to v.
  std::vector<std::vector<bool>> path_order() const;

  static Digraph chain(size_t n);  // 0 -> 1 -> ... -> n-1
};

/// Stored by facets; the face family is their downward closure.
struct SimplicialComplex {
  size_t n = 0;
  std::vector<uint64_t> facets;

  SimplicialComplex(size_t n, std::vector<uint64_t> facet_masks);
  static SimplicialComplex of_graph(const Graph& g);
  bool is_face(uint64_t subset) const;
  Graph one_skeleton() const;
  bool connected() const;
};

struct Poset {
  size_t n = 0;
  std::vector<std::vector<bool>> leq;

  static Poset from_covers(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& covers);
  static Poset chain(size_t n);
  static Poset boolean_lattice(size_t set_size);  // points are subset masks

  std::vector<std::pair<uint32_t, uint32_t>> cover_pairs() const;
  bool hasse_connected() const;
  /// Point order sorted by a linear extension (order-smaller points first).
  std::vector<uint32_t> linear_extension() const;
};

struct MeetSemilattice {
  Poset order;
  std::vector<std::vector<uint32_t>> meet;
  uint32_t minimum = 0;

  static MeetSemilattice from_poset(const Poset& p);
  static MeetSemilattice antichain_with_bottom(size_t antichain_size);
};

struct ZeroOneMatrix {
  std::vector<std::vector<uint8_t>> rows;

  ZeroOneMatrix(std::vector<std::vector<uint8_t>> entries);
  size_t n_rows() const { return rows.size(); }
  size_t n_cols() const { return rows.empty() ? 0 : rows[0].size(); }
  uint64_t column_mask(size_t j) const;
  bool has_zero_column() const;
  bool has_all_ones_column() const;
  bool has_equal_columns() const;
};

/// The n x (n-2) matrix with an all-ones first row, an identity block and a
/// zero last row; its bordered extension always has rank below n.
ZeroOneMatrix deficient_block_matrix(size_t n);

// --- endomorphism monoids -------------------------------------------------

MonoidData end_graph(const Graph& g, const Limits& limits = Limits());
MonoidData end_simplicial(const SimplicialComplex& k, const Limits& limits = Limits());
MonoidData end_digraph_acyclic(const Digraph& d, const Limits& limits = Limits());
MonoidData end_poset(const Poset& p, const Limits& limits = Limits());
MonoidData end_meet_semilattice(const MeetSemilattice& s, const Limits& limits = Limits());
/// All maps of the power set of an x_size-set preserving union and
/// intersection; the point set is the power set.
MonoidData lattice_endos(size_t x_size, const Limits& limits = Limits());

// --- matrix-driven families -------------------------------------------------

/// Identity, all constants, and every rank-2 map with kernel {A_j, ~A_j} and
/// an edge of the graph as image.
MonoidData m_gamma_a(const Graph& g, const ZeroOneMatrix& a, const Limits& limits = Limits());

/// Directed analogue: columns must be upper sets of the path order.
MonoidData m_digraph_b(const Digraph& d, const ZeroOneMatrix& b, const Limits& limits = Limits());

/// Rees matrix monoid over the trivial group acting on a sink plus n points.
MonoidData rees_monoid(const ZeroOneMatrix& a, const Limits& limits = Limits());

// --- partial-map families ---------------------------------------------------

MonoidData symmetric_inverse(size_t n, const Limits& limits = Limits());
MonoidData partial_transformations(size_t n, const Limits& limits = Limits());

/// All maps x -> ax + b over the prime field of order p.
MonoidData affine_monoid(uint32_t p, const Limits& limits = Limits());

/// Closure of the point-killing and point-merging maps on a sink plus n
/// points; 0-transitive with elements of every rank.
MonoidData example_0_tran(size_t n, const Limits& limits = Limits());

}  // namespace augcheck
