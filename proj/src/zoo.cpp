#include "augcheck/zoo.hpp"

#include "augcheck/field.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace augcheck {

namespace {

void check_degree(size_t n, const Limits& limits) {
  if (n > limits.max_degree)
    fail(Errc::SizeBound, "degree " + std::to_string(n) + " exceeds the cap of " +
                              std::to_string(limits.max_degree));
}

// Backtracking enumeration of all self-maps passing the incremental check.
// Points are assigned in the given order; `ok(img, k)` is called right after
// the k-th point of the order has received its image.
std::vector<Transformation> enumerate_maps(
    size_t n, const std::vector<uint32_t>& order,
    const std::function<bool(const std::vector<uint32_t>&, size_t)>& ok) {
  std::vector<Transformation> out;
  std::vector<uint32_t> img(n, 0);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == n) {
      out.push_back(Transformation(img));
      return;
    }
    for (uint32_t v = 0; v < n; ++v) {
      img[order[k]] = v;
      if (ok(img, k + 1)) rec(k + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<uint32_t> identity_order(size_t n) {
  std::vector<uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// The enumerated element sets are mathematically closed; closing them again
// must not grow them.
MonoidData monoid_from_elements(size_t degree, std::vector<Transformation> elements,
                                const Limits& limits) {
  MonoidData m = closure(degree, std::move(elements), limits);
  size_t expected = m.generators().size();
  if (std::none_of(m.generators().begin(), m.generators().end(),
                   [&](const Transformation& t) { return t == Transformation::identity(degree); }))
    ++expected;
  if (m.size() != expected)
    fail(Errc::Internal, "enumerated element set is not closed under composition");
  return m;
}

}  // namespace

// --- combinatorial structures ----------------------------------------------

Graph::Graph(size_t n_, std::vector<std::pair<uint32_t, uint32_t>> edge_list) : n(n_) {
  for (auto& [a, b] : edge_list) {
    if (a >= n || b >= n) fail(Errc::Parse, "edge endpoint out of range");
    if (a == b) fail(Errc::Parse, "loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges = std::move(edge_list);
}

bool Graph::adjacent(uint32_t a, uint32_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool Graph::connected() const {
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<uint32_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    uint32_t v = queue.back();
    queue.pop_back();
    for (const auto& [a, b] : edges) {
      if (a == v && !seen[b]) seen[b] = true, queue.push_back(b);
      if (b == v && !seen[a]) seen[a] = true, queue.push_back(a);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
}

Graph Graph::complete(size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph(n, std::move(e));
}

Graph Graph::path(size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t a = 0; a + 1 < n; ++a) e.push_back({a, a + 1});
  return Graph(n, std::move(e));
}

Graph Graph::cycle(size_t n) {
  Graph g = path(n);
  if (n >= 3) {
    g.edges.push_back({0, static_cast<uint32_t>(n - 1)});
    std::sort(g.edges.begin(), g.edges.end());
  }
  return g;
}

Graph Graph::star(size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t a = 1; a < n; ++a) e.push_back({0, a});
  return Graph(n, std::move(e));
}

Digraph::Digraph(size_t n_, std::vector<std::pair<uint32_t, uint32_t>> edge_list) : n(n_) {
  for (auto& [u, v] : edge_list) {
    if (u >= n || v >= n) fail(Errc::Parse, "edge endpoint out of range");
    if (u == v) fail(Errc::Parse, "loops are not allowed");
  }
  std::sort(edge_list.begin(), edge_list.end());
  edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
  edges = std::move(edge_list);
}

bool Digraph::has_edge(uint32_t u, uint32_t v) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool Digraph::acyclic() const {
  std::vector<uint32_t> indeg(n, 0);
  for (const auto& [u, v] : edges) ++indeg[v];
  std::vector<uint32_t> queue;
  for (uint32_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  size_t removed = 0;
  while (!queue.empty()) {
    uint32_t v = queue.back();
    queue.pop_back();
    ++removed;
    for (const auto& [a, b] : edges)
      if (a == v && --indeg[b] == 0) queue.push_back(b);
  }
  return removed == n;
}

bool Digraph::underlying_connected() const {
  std::vector<std::pair<uint32_t, uint32_t>> und(edges);
  return Graph(n, std::move(und)).connected();
}

std::vector<std::vector<bool>> Digraph::path_order() const {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (uint32_t v = 0; v < n; ++v) leq[v][v] = true;
  for (const auto& [u, v] : edges) leq[u][v] = true;
  for (uint32_t k = 0; k < n; ++k)
    for (uint32_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (uint32_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  return leq;
}

Digraph Digraph::chain(size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Digraph(n, std::move(e));
}

SimplicialComplex::SimplicialComplex(size_t n_, std::vector<uint64_t> facet_masks) : n(n_) {
  if (n == 0 || n > 64) fail(Errc::Parse, "unsupported ground set size");
  uint64_t ground = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  uint64_t covered = 0;
  for (uint64_t f : facet_masks) {
    if (f == 0) fail(Errc::Parse, "empty facet");
    if (f & ~ground) fail(Errc::Parse, "facet vertex out of range");
    covered |= f;
  }
  if (covered != ground) fail(Errc::Parse, "facets must cover the vertex set");
  std::sort(facet_masks.begin(), facet_masks.end());
  facet_masks.erase(std::unique(facet_masks.begin(), facet_masks.end()), facet_masks.end());
  facets = std::move(facet_masks);
}

SimplicialComplex SimplicialComplex::of_graph(const Graph& g) {
  std::vector<uint64_t> facets;
  std::vector<bool> covered(g.n, false);
  for (const auto& [a, b] : g.edges) {
    facets.push_back(uint64_t(1) << a | uint64_t(1) << b);
    covered[a] = covered[b] = true;
  }
  for (uint32_t v = 0; v < g.n; ++v)
    if (!covered[v]) facets.push_back(uint64_t(1) << v);
  return SimplicialComplex(g.n, std::move(facets));
}

bool SimplicialComplex::is_face(uint64_t subset) const {
  if (subset == 0) return true;
  return std::any_of(facets.begin(), facets.end(),
                     [&](uint64_t f) { return (subset & ~f) == 0; });
}

Graph SimplicialComplex::one_skeleton() const {
  std::vector<std::pair<uint32_t, uint32_t>> e;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b)
      if (is_face(uint64_t(1) << a | uint64_t(1) << b)) e.push_back({a, b});
  return Graph(n, std::move(e));
}

bool SimplicialComplex::connected() const { return one_skeleton().connected(); }

Poset Poset::from_covers(size_t n, const std::vector<std::pair<uint32_t, uint32_t>>& covers) {
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (uint32_t v = 0; v < n; ++v) p.leq[v][v] = true;
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n) fail(Errc::Parse, "cover endpoint out of range");
    if (a == b) fail(Errc::Parse, "reflexive cover");
    p.leq[a][b] = true;
  }
  for (uint32_t k = 0; k < n; ++k)
    for (uint32_t i = 0; i < n; ++i)
      if (p.leq[i][k])
        for (uint32_t j = 0; j < n; ++j)
          if (p.leq[k][j]) p.leq[i][j] = true;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      if (a != b && p.leq[a][b] && p.leq[b][a])
        fail(Errc::Cyclic, "cover relation contains a cycle");
  return p;
}

Poset Poset::chain(size_t n) {
  std::vector<std::pair<uint32_t, uint32_t>> covers;
  for (uint32_t v = 0; v + 1 < n; ++v) covers.push_back({v, v + 1});
  return from_covers(n, covers);
}

Poset Poset::boolean_lattice(size_t set_size) {
  size_t n = size_t(1) << set_size;
  Poset p;
  p.n = n;
  p.leq.assign(n, std::vector<bool>(n, false));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) p.leq[a][b] = (a & ~b) == 0;
  return p;
}

std::vector<std::pair<uint32_t, uint32_t>> Poset::cover_pairs() const {
  std::vector<std::pair<uint32_t, uint32_t>> covers;
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool cover = true;
      for (uint32_t w = 0; w < n && cover; ++w)
        if (w != a && w != b && leq[a][w] && leq[w][b]) cover = false;
      if (cover) covers.push_back({a, b});
    }
  return covers;
}

bool Poset::hasse_connected() const {
  std::vector<std::pair<uint32_t, uint32_t>> covers = cover_pairs();
  if (n == 1) return true;
  return Graph(n, std::move(covers)).connected();
}

std::vector<uint32_t> Poset::linear_extension() const {
  std::vector<uint32_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    for (uint32_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (uint32_t u = 0; u < n && ready; ++u)
        if (u != v && leq[u][v] && !placed[u]) ready = false;
      if (ready) {
        order.push_back(v);
        placed[v] = true;
      }
    }
  }
  return order;
}

MeetSemilattice MeetSemilattice::from_poset(const Poset& p) {
  MeetSemilattice s;
  s.order = p;
  const size_t n = p.n;
  s.meet.assign(n, std::vector<uint32_t>(n, 0));
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      std::vector<uint32_t> lower;
      for (uint32_t x = 0; x < n; ++x)
        if (p.leq[x][a] && p.leq[x][b]) lower.push_back(x);
      if (lower.empty()) fail(Errc::NoMinimum, "pair without a common lower bound");
      std::vector<uint32_t> maximal;
      for (uint32_t x : lower) {
        bool is_max = true;
        for (uint32_t y : lower)
          if (y != x && p.leq[x][y]) is_max = false;
        if (is_max) maximal.push_back(x);
      }
      if (maximal.size() != 1) fail(Errc::NotSemilattice, "pair without a greatest lower bound");
      s.meet[a][b] = maximal.front();
    }
  // associativity, commutativity and idempotence of the derived table
  for (uint32_t a = 0; a < n; ++a) {
    if (s.meet[a][a] != a) fail(Errc::NotSemilattice, "meet not idempotent");
    for (uint32_t b = 0; b < n; ++b) {
      if (s.meet[a][b] != s.meet[b][a]) fail(Errc::NotSemilattice, "meet not commutative");
      for (uint32_t c = 0; c < n; ++c)
        if (s.meet[s.meet[a][b]][c] != s.meet[a][s.meet[b][c]])
          fail(Errc::NotSemilattice, "meet not associative");
    }
  }
  std::optional<uint32_t> bottom;
  for (uint32_t v = 0; v < n; ++v) {
    bool is_min = true;
    for (uint32_t u = 0; u < n; ++u)
      if (!p.leq[v][u]) is_min = false;
    if (is_min) bottom = v;
  }
  if (!bottom) fail(Errc::NoMinimum, "semilattice has no minimum");
  s.minimum = *bottom;
  return s;
}

MeetSemilattice MeetSemilattice::antichain_with_bottom(size_t antichain_size) {
  std::vector<std::pair<uint32_t, uint32_t>> covers;
  for (uint32_t v = 1; v <= antichain_size; ++v) covers.push_back({0, v});
  return from_poset(Poset::from_covers(antichain_size + 1, covers));
}

ZeroOneMatrix::ZeroOneMatrix(std::vector<std::vector<uint8_t>> entries) : rows(std::move(entries)) {
  if (rows.empty() || rows[0].empty()) fail(Errc::BadMatrix, "empty 0/1 matrix");
  for (const auto& r : rows) {
    if (r.size() != rows[0].size()) fail(Errc::BadMatrix, "ragged 0/1 matrix");
    for (uint8_t x : r)
      if (x > 1) fail(Errc::BadMatrix, "entries must be 0 or 1");
  }
  if (rows.size() > 64) fail(Errc::SizeBound, "too many rows");
}

uint64_t ZeroOneMatrix::column_mask(size_t j) const {
  uint64_t mask = 0;
  for (size_t i = 0; i < rows.size(); ++i)
    if (rows[i][j]) mask |= uint64_t(1) << i;
  return mask;
}

bool ZeroOneMatrix::has_zero_column() const {
  for (size_t j = 0; j < n_cols(); ++j)
    if (column_mask(j) == 0) return true;
  return false;
}

bool ZeroOneMatrix::has_all_ones_column() const {
  uint64_t full = n_rows() == 64 ? ~uint64_t(0) : (uint64_t(1) << n_rows()) - 1;
  for (size_t j = 0; j < n_cols(); ++j)
    if (column_mask(j) == full) return true;
  return false;
}

bool ZeroOneMatrix::has_equal_columns() const {
  for (size_t j = 0; j < n_cols(); ++j)
    for (size_t k = j + 1; k < n_cols(); ++k)
      if (column_mask(j) == column_mask(k)) return true;
  return false;
}

ZeroOneMatrix deficient_block_matrix(size_t n) {
  if (n < 4) fail(Errc::BadMatrix, "needs at least 4 rows");
  std::vector<std::vector<uint8_t>> rows(n, std::vector<uint8_t>(n - 2, 0));
  for (size_t j = 0; j < n - 2; ++j) rows[0][j] = 1;
  for (size_t i = 1; i + 1 < n; ++i) rows[i][i - 1] = 1;
  return ZeroOneMatrix(std::move(rows));
}

// --- endomorphism monoids ----------------------------------------------------

MonoidData end_simplicial(const SimplicialComplex& k, const Limits& limits) {
  if (k.n < 2) fail(Errc::BadMatrix, "need at least 2 vertices");
  check_degree(k.n, limits);
  if (!k.connected()) fail(Errc::Disconnected, "complex must be connected");
  const size_t n = k.n;
  auto ok = [&](const std::vector<uint32_t>& img, size_t assigned) {
    uint64_t seen = (uint64_t(1) << assigned) - 1;
    uint32_t last = static_cast<uint32_t>(assigned - 1);
    for (uint64_t facet : k.facets) {
      if (!(facet >> last & 1)) continue;
      uint64_t image = 0;
      for (uint32_t v = 0; v < n; ++v)
        if ((facet >> v & 1) && (seen >> v & 1)) image |= uint64_t(1) << img[v];
      if (!k.is_face(image)) return false;
    }
    return true;
  };
  return monoid_from_elements(n, enumerate_maps(n, identity_order(n), ok), limits);
}

MonoidData end_graph(const Graph& g, const Limits& limits) {
  if (g.n < 2) fail(Errc::BadMatrix, "need at least 2 vertices");
  if (!g.connected()) fail(Errc::Disconnected, "graph must be connected");
  return end_simplicial(SimplicialComplex::of_graph(g), limits);
}

MonoidData end_digraph_acyclic(const Digraph& d, const Limits& limits) {
  if (d.n < 2) fail(Errc::BadMatrix, "need at least 2 vertices");
  check_degree(d.n, limits);
  if (!d.acyclic()) fail(Errc::Cyclic, "digraph must be acyclic");
  if (!d.underlying_connected()) fail(Errc::Disconnected, "digraph must be connected");
  const size_t n = d.n;
  auto ok = [&](const std::vector<uint32_t>& img, size_t assigned) {
    uint32_t last = static_cast<uint32_t>(assigned - 1);
    for (const auto& [u, v] : d.edges) {
      if (u >= assigned || v >= assigned) continue;
      if (u != last && v != last) continue;
      if (img[u] != img[v] && !d.has_edge(img[u], img[v])) return false;
    }
    return true;
  };
  return monoid_from_elements(n, enumerate_maps(n, identity_order(n), ok), limits);
}

MonoidData end_poset(const Poset& p, const Limits& limits) {
  if (p.n < 2) fail(Errc::BadMatrix, "need at least 2 points");
  check_degree(p.n, limits);
  if (!p.hasse_connected()) fail(Errc::Disconnected, "Hasse diagram must be connected");
  const size_t n = p.n;
  std::vector<uint32_t> order = identity_order(n);
  auto ok = [&](const std::vector<uint32_t>& img, size_t assigned) {
    uint32_t last = static_cast<uint32_t>(assigned - 1);
    for (uint32_t u = 0; u < assigned; ++u) {
      if (p.leq[u][last] && !p.leq[img[u]][img[last]]) return false;
      if (p.leq[last][u] && !p.leq[img[last]][img[u]]) return false;
    }
    return true;
  };
  return monoid_from_elements(n, enumerate_maps(n, order, ok), limits);
}

MonoidData end_meet_semilattice(const MeetSemilattice& s, const Limits& limits) {
  const size_t n = s.order.n;
  if (n < 2) fail(Errc::BadMatrix, "need at least 2 points");
  check_degree(n, limits);
  std::vector<uint32_t> order = s.order.linear_extension();
  std::vector<size_t> position(n);
  for (size_t i = 0; i < n; ++i) position[order[i]] = i;
  auto ok = [&](const std::vector<uint32_t>& img, size_t assigned) {
    uint32_t q = order[assigned - 1];
    if (q == s.minimum) return img[q] == s.minimum;
    for (size_t i = 0; i + 1 < assigned; ++i) {
      uint32_t u = order[i];
      // meets of already-assigned points are already assigned
      if (img[s.meet[u][q]] != s.meet[img[u]][img[q]]) return false;
    }
    return true;
  };
  return monoid_from_elements(n, enumerate_maps(n, order, ok), limits);
}

MonoidData lattice_endos(size_t x_size, const Limits& limits) {
  if (x_size < 2) fail(Errc::BadMatrix, "the ground set needs at least 2 elements");
  const size_t n = size_t(1) << x_size;  // points are subset masks
  check_degree(n, limits);
  std::vector<Transformation> elements;
  // a union-preserving map is determined by its values on the empty set and
  // the singletons; filter candidates by the full pairwise law on all pairs
  std::vector<uint32_t> atom_image(x_size, 0);
  for (uint32_t z = 0; z < n; ++z) {
    std::function<void(size_t)> rec = [&](size_t a) {
      if (a == x_size) {
        std::vector<uint32_t> img(n);
        img[0] = z;
        for (uint32_t s = 1; s < n; ++s) {
          uint32_t value = 0;
          for (size_t t = 0; t < x_size; ++t)
            if (s >> t & 1) value |= atom_image[t];
          img[s] = value;
        }
        for (uint32_t s = 0; s < n; ++s)
          for (uint32_t t = 0; t < n; ++t) {
            if (img[s | t] != (img[s] | img[t])) return;
            if (img[s & t] != (img[s] & img[t])) return;
          }
        elements.push_back(Transformation(img));
        return;
      }
      for (uint32_t v = 0; v < n; ++v) {
        if ((z & ~v) != 0) continue;  // f(empty) below every atom image
        atom_image[a] = v;
        rec(a + 1);
      }
    };
    rec(0);
  }
  return monoid_from_elements(n, std::move(elements), limits);
}

MonoidData m_gamma_a(const Graph& g, const ZeroOneMatrix& a, const Limits& limits) {
  if (g.n < 2) fail(Errc::BadMatrix, "need at least 2 vertices");
  check_degree(g.n, limits);
  if (!g.connected()) fail(Errc::Disconnected, "graph must be connected");
  if (a.n_rows() != g.n) fail(Errc::BadMatrix, "matrix rows must match the vertex count");
  if (a.has_zero_column() || a.has_all_ones_column())
    fail(Errc::BadMatrix, "columns must be nonempty proper subsets");
  const size_t n = g.n;
  std::vector<Transformation> elements;
  elements.push_back(Transformation::identity(n));
  for (uint32_t v = 0; v < n; ++v) elements.push_back(Transformation::constant(n, v));
  for (const auto& [x, y] : g.edges)
    for (size_t j = 0; j < a.n_cols(); ++j)
      for (auto [alpha, beta] : {std::pair{x, y}, std::pair{y, x}}) {
        std::vector<uint32_t> img(n);
        for (uint32_t w = 0; w < n; ++w) img[w] = a.rows[w][j] ? alpha : beta;
        elements.push_back(Transformation(std::move(img)));
      }
  return monoid_from_elements(n, std::move(elements), limits);
}

MonoidData m_digraph_b(const Digraph& d, const ZeroOneMatrix& b, const Limits& limits) {
  if (d.n < 2) fail(Errc::BadMatrix, "need at least 2 vertices");
  check_degree(d.n, limits);
  if (!d.acyclic()) fail(Errc::Cyclic, "digraph must be acyclic");
  if (!d.underlying_connected()) fail(Errc::Disconnected, "digraph must be connected");
  if (b.n_rows() != d.n) fail(Errc::BadMatrix, "matrix rows must match the vertex count");
  if (b.has_zero_column() || b.has_all_ones_column())
    fail(Errc::BadMatrix, "columns must be nonempty proper subsets");
  std::vector<std::vector<bool>> leq = d.path_order();
  for (size_t j = 0; j < b.n_cols(); ++j)
    for (uint32_t u = 0; u < d.n; ++u)
      for (uint32_t v = 0; v < d.n; ++v)
        if (b.rows[u][j] && leq[u][v] && !b.rows[v][j])
          fail(Errc::NotUpperSets, "column " + std::to_string(j) + " is not an upper set");
  const size_t n = d.n;
  std::vector<Transformation> elements;
  elements.push_back(Transformation::identity(n));
  for (uint32_t v = 0; v < n; ++v) elements.push_back(Transformation::constant(n, v));
  for (const auto& [u, v] : d.edges)
    for (size_t j = 0; j < b.n_cols(); ++j) {
      std::vector<uint32_t> img(n);
      for (uint32_t w = 0; w < n; ++w) img[w] = b.rows[w][j] ? v : u;
      elements.push_back(Transformation(std::move(img)));
    }
  return monoid_from_elements(n, std::move(elements), limits);
}

MonoidData rees_monoid(const ZeroOneMatrix& a, const Limits& limits) {
  if (a.has_zero_column()) fail(Errc::BadMatrix, "zero column breaks faithfulness");
  if (a.has_equal_columns()) fail(Errc::BadMatrix, "equal columns break faithfulness");
  const size_t n = a.n_rows();
  check_degree(n + 1, limits);
  std::vector<Transformation> elements;
  elements.push_back(Transformation::identity(n + 1));
  elements.push_back(Transformation::constant(n + 1, 0));  // the zero map
  for (uint32_t i = 1; i <= n; ++i)
    for (size_t j = 0; j < a.n_cols(); ++j) {
      std::vector<uint32_t> img(n + 1, 0);
      for (uint32_t alpha = 1; alpha <= n; ++alpha)
        if (a.rows[alpha - 1][j]) img[alpha] = i;
      elements.push_back(Transformation(std::move(img)));
    }
  return monoid_from_elements(n + 1, std::move(elements), limits);
}

MonoidData symmetric_inverse(size_t n, const Limits& limits) {
  if (n < 1) fail(Errc::BadMatrix, "need at least one point");
  check_degree(n + 1, limits);
  if (n > 6) fail(Errc::SizeBound, "symmetric inverse monoid enumeration is desk-scale only");
  std::vector<Transformation> elements;
  std::vector<uint32_t> img(n + 1, 0);
  std::function<void(uint32_t)> rec = [&](uint32_t point) {
    if (point == n + 1) {
      elements.push_back(Transformation(img));
      return;
    }
    for (uint32_t v = 0; v <= n; ++v) {
      if (v != 0) {
        bool taken = false;
        for (uint32_t u = 1; u < point; ++u)
          if (img[u] == v) taken = true;
        if (taken) continue;  // partial injective: nonzero values distinct
      }
      img[point] = v;
      rec(point + 1);
    }
  };
  rec(1);
  return monoid_from_elements(n + 1, std::move(elements), limits);
}

MonoidData partial_transformations(size_t n, const Limits& limits) {
  if (n < 1) fail(Errc::BadMatrix, "need at least one point");
  check_degree(n + 1, limits);
  if (n > 6) fail(Errc::SizeBound, "partial transformation enumeration is desk-scale only");
  std::vector<Transformation> elements;
  std::vector<uint32_t> img(n + 1, 0);
  std::function<void(uint32_t)> rec = [&](uint32_t point) {
    if (point == n + 1) {
      elements.push_back(Transformation(img));
      return;
    }
    for (uint32_t v = 0; v <= n; ++v) {
      img[point] = v;
      rec(point + 1);
    }
  };
  rec(1);
  return monoid_from_elements(n + 1, std::move(elements), limits);
}

MonoidData affine_monoid(uint32_t p, const Limits& limits) {
  if (!is_prime(p)) fail(Errc::BadMatrix, "affine monoid needs a prime modulus");
  check_degree(p, limits);
  std::vector<Transformation> elements;
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b) {
      std::vector<uint32_t> img(p);
      for (uint32_t x = 0; x < p; ++x) img[x] = (a * x + b) % p;
      elements.push_back(Transformation(std::move(img)));
    }
  return monoid_from_elements(p, std::move(elements), limits);
}

MonoidData example_0_tran(size_t n, const Limits& limits) {
  if (n < 2) fail(Errc::BadMatrix, "need at least 2 non-sink points");
  check_degree(n + 1, limits);
  std::vector<Transformation> gens;
  gens.push_back(Transformation::identity(n + 1));
  for (uint32_t k = 1; k <= n; ++k) {
    std::vector<uint32_t> img(n + 1);
    std::iota(img.begin(), img.end(), 0);
    img[k] = 0;
    gens.push_back(Transformation(std::move(img)));
  }
  for (uint32_t i = 1; i <= n; ++i)
    for (uint32_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      std::vector<uint32_t> img(n + 1);
      std::iota(img.begin(), img.end(), 0);
      img[i] = j;
      gens.push_back(Transformation(std::move(img)));
    }
  return closure(n + 1, std::move(gens), limits);
}

}  // namespace augcheck
