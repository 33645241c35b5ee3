#include "augcheck/predicates.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace augcheck {

std::vector<uint32_t> orbit(const MonoidData& m, uint32_t point) {
  std::vector<bool> seen(m.degree(), false);
  std::vector<uint32_t> queue{point};
  seen[point] = true;
  for (size_t i = 0; i < queue.size(); ++i)
    for (const Transformation& g : m.generators()) {
      uint32_t w = g(queue[i]);
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool is_transitive(const MonoidData& m) {
  for (uint32_t p = 0; p < m.degree(); ++p)
    if (orbit(m, p).size() != m.degree()) return false;
  return true;
}

std::optional<uint32_t> is_0_transitive(const MonoidData& m) {
  if (m.degree() < 2) return std::nullopt;
  std::optional<uint32_t> sink;
  for (uint32_t p = 0; p < m.degree(); ++p) {
    if (orbit(m, p).size() == 1) {
      if (sink) return std::nullopt;  // two fixed points
      sink = p;
    }
  }
  if (!sink) return std::nullopt;
  for (uint32_t p = 0; p < m.degree(); ++p)
    if (p != *sink && orbit(m, p).size() != m.degree()) return std::nullopt;
  return sink;
}

bool is_2_transitive(const MonoidData& m) {
  const size_t n = m.degree();
  if (n < 2) fail(Errc::DimensionMismatch, "2-transitivity needs degree >= 2");
  std::vector<uint32_t> all_points(n);
  std::iota(all_points.begin(), all_points.end(), 0);
  std::vector<uint32_t> all_ids(m.size());
  std::iota(all_ids.begin(), all_ids.end(), 0);
  return elements_2_transitive_on(m, all_ids, all_points);
}

bool elements_2_transitive_on(const MonoidData& m, const std::vector<uint32_t>& element_ids,
                              const std::vector<uint32_t>& points) {
  const size_t n = points.size();
  if (n < 2) return true;
  const size_t pairs = n * (n - 1);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::set<std::pair<uint32_t, uint32_t>> images;
      for (uint32_t id : element_ids) {
        const Transformation& t = m.element(id);
        uint32_t a = t(points[i]), b = t(points[j]);
        if (a != b) images.insert({a, b});
      }
      if (images.size() != pairs) return false;
    }
  return true;
}

bool elements_2_homogeneous_on(const MonoidData& m, const std::vector<uint32_t>& element_ids,
                               const std::vector<uint32_t>& points) {
  const size_t n = points.size();
  if (n <= 2) return true;
  const size_t pairs = n * (n - 1) / 2;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      std::set<std::pair<uint32_t, uint32_t>> images;
      for (uint32_t id : element_ids) {
        const Transformation& t = m.element(id);
        uint32_t a = t(points[i]), b = t(points[j]);
        if (a != b) images.insert({std::min(a, b), std::max(a, b)});
      }
      if (images.size() != pairs) return false;
    }
  return true;
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<uint32_t> normalize_partition(UnionFind& uf, size_t n) {
  std::vector<uint32_t> label(n, UINT32_MAX), out(n);
  uint32_t next = 0;
  for (uint32_t p = 0; p < n; ++p) {
    uint32_t r = uf.find(p);
    if (label[r] == UINT32_MAX) label[r] = next++;
    out[p] = label[r];
  }
  return out;
}

}  // namespace

std::vector<uint32_t> principal_congruence(const MonoidData& m, uint32_t a, uint32_t b) {
  const size_t n = m.degree();
  UnionFind uf(n);
  std::vector<std::pair<uint32_t, uint32_t>> work;
  if (uf.unite(a, b)) work.push_back({a, b});
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (const Transformation& g : m.generators()) {
      uint32_t gx = g(x), gy = g(y);
      if (uf.unite(gx, gy)) work.push_back({gx, gy});
    }
  }
  return normalize_partition(uf, n);
}

CongruenceReport is_primitive(const MonoidData& m) {
  const size_t n = m.degree();
  CongruenceReport report;
  if (n <= 2) {
    report.primitive = true;  // no nontrivial proper partition exists
    return report;
  }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = a + 1; b < n; ++b) {
      std::vector<uint32_t> part = principal_congruence(m, a, b);
      uint32_t classes = *std::max_element(part.begin(), part.end()) + 1;
      if (classes != 1) {  // nontrivial (a ~ b collapsed) and proper
        report.primitive = false;
        report.witness = part;
        return report;
      }
    }
  report.primitive = true;
  return report;
}

}  // namespace augcheck
