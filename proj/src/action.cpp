#include "augcheck/action.hpp"

#include <algorithm>
#include <numeric>

namespace augcheck {

namespace {

Matrix omega_matrix(const Transformation& t, const FieldTag& f) {
  const size_t n = t.degree();
  Matrix m(f, n, n);
  for (uint32_t w = 0; w < n; ++w) m.set(t(w), w, Scalar::one(f));
  return m;
}

}  // namespace

ActionModule omega_module(const MonoidData& m, const FieldTag& field) {
  if (!field.computable())
    fail(Errc::FieldNotComputable, "action matrices need GF(p) or Q; use the Q matrices for R/C");
  ActionModule mod;
  mod.basis = ActionModule::Basis::Omega;
  mod.field = field;
  mod.dim = m.degree();
  mod.element_ids.resize(m.size());
  std::iota(mod.element_ids.begin(), mod.element_ids.end(), 0);
  mod.action.reserve(m.size());
  for (uint32_t i = 0; i < m.size(); ++i) mod.action.push_back(omega_matrix(m.element(i), field));
  return mod;
}

Matrix aug_matrix(const Transformation& t, const FieldTag& field) {
  const size_t n = t.degree();
  if (n < 2) fail(Errc::DimensionMismatch, "augmentation needs at least 2 points");
  Matrix out(field, n - 1, n - 1);
  const Scalar one = Scalar::one(field);
  // column j-1 is the image of (w_j - w_0): (w_t(j) - w_0) - (w_t(0) - w_0)
  for (uint32_t j = 1; j < n; ++j) {
    uint32_t a = t(j), b = t(0);
    if (a != 0) out.set(a - 1, j - 1, out.at(a - 1, j - 1) + one);
    if (b != 0) out.set(b - 1, j - 1, out.at(b - 1, j - 1) - one);
  }
  return out;
}

ActionModule aug_module(const ActionModule& omega) {
  if (omega.basis != ActionModule::Basis::Omega)
    fail(Errc::DimensionMismatch, "aug_module expects an Omega-basis module");
  if (omega.dim < 2) fail(Errc::DimensionMismatch, "augmentation needs at least 2 points");
  ActionModule mod;
  mod.basis = ActionModule::Basis::Aug;
  mod.field = omega.field;
  mod.dim = omega.dim - 1;
  mod.element_ids = omega.element_ids;
  mod.action.reserve(omega.action.size());
  const size_t n = omega.dim;
  for (const Matrix& M : omega.action) {
    // read the point map back off the 0/1 matrix
    std::vector<uint32_t> img(n);
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i)
        if (!M.at(i, j).is_zero()) {
          img[j] = static_cast<uint32_t>(i);
          break;
        }
    mod.action.push_back(aug_matrix(Transformation(std::move(img)), omega.field));
  }
  return mod;
}

RestrictedModule restricted_group_module(const MonoidData& m, const GreenData& g, uint32_t e,
                                         const FieldTag& field) {
  if (!m.element(e).is_idempotent()) fail(Errc::NotIdempotent, "apex must be an idempotent");
  if (!field.computable())
    fail(Errc::FieldNotComputable, "restricted module needs GF(p) or Q");
  RestrictedModule out;
  out.points = m.element(e).image_set();
  std::vector<uint32_t> group = maximal_subgroup(m, g, e);

  // re-index eOmega as 0..k-1 and restrict each group element to it
  const size_t k = out.points.size();
  std::vector<uint32_t> pos(m.degree(), UINT32_MAX);
  for (uint32_t i = 0; i < k; ++i) pos[out.points[i]] = i;
  out.aug.basis = ActionModule::Basis::Aug;
  out.aug.field = field;
  out.aug.dim = k == 0 ? 0 : k - 1;
  out.aug.element_ids = group;
  for (uint32_t id : group) {
    const Transformation& t = m.element(id);
    std::vector<uint32_t> img(k);
    for (uint32_t i = 0; i < k; ++i) {
      uint32_t target = t(out.points[i]);
      if (pos[target] == UINT32_MAX) fail(Errc::Internal, "group element leaves eOmega");
      img[i] = pos[target];
    }
    if (k >= 2) out.aug.action.push_back(aug_matrix(Transformation(std::move(img)), field));
  }
  return out;
}

bool SetSystem::contains(uint64_t block) const {
  return std::find(blocks.begin(), blocks.end(), block) != blocks.end();
}

void SetSystem::add(uint64_t block) {
  if (block == 0) fail(Errc::BadMatrix, "empty block in set system");
  if (!contains(block)) blocks.push_back(block);
}

SetSystem kernel_blocks(const MonoidData& m, const GreenData& g, uint32_t j_class) {
  if (!g.j_regular[j_class]) fail(Errc::NoIdempotents, "kernel blocks need a regular J-class");
  SetSystem s;
  s.ground = m.degree();
  for (uint32_t f_id : g.j_idempotents[j_class]) {
    const Transformation& f = m.element(f_id);
    for (uint32_t w = 0; w < m.degree(); ++w) {
      uint64_t block = 0;
      uint32_t target = f(w);
      for (uint32_t x = 0; x < m.degree(); ++x)
        if (f(x) == target) block |= uint64_t(1) << x;
      s.add(block);
    }
  }
  return s;
}

Matrix incidence_matrix(const SetSystem& s, const FieldTag& field) {
  const FieldTag f = field.delegate_for_rank();
  Matrix m(f, s.ground, s.blocks.size());
  for (size_t b = 0; b < s.blocks.size(); ++b)
    for (uint32_t w = 0; w < s.ground; ++w)
      if (s.blocks[b] >> w & 1) m.set(w, b, Scalar::one(f));
  return m;
}

bool GammaGraph::has_edge(uint32_t a, uint32_t b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

bool GammaGraph::is_complete() const { return edges.size() == n * (n - 1) / 2; }

bool GammaGraph::is_star(uint32_t center) const {
  if (edges.size() != n - 1) return false;
  for (const auto& [a, b] : edges)
    if (a != center && b != center) return false;
  return true;
}

GammaGraph gamma_graph(const MonoidData& m, const GreenData& g, uint32_t j_class) {
  if (!g.j_regular[j_class]) fail(Errc::NoIdempotents, "gamma graph needs a regular J-class");
  GammaGraph graph;
  graph.n = m.degree();
  std::vector<std::vector<uint32_t>> witness(m.degree(),
                                             std::vector<uint32_t>(m.degree(), UINT32_MAX));
  for (uint32_t f_id : g.j_idempotents[j_class]) {
    const Transformation& f = m.element(f_id);
    std::vector<uint32_t> fixed;  // = image of an idempotent
    for (uint32_t w = 0; w < m.degree(); ++w)
      if (f(w) == w) fixed.push_back(w);
    for (size_t i = 0; i < fixed.size(); ++i)
      for (size_t j = i + 1; j < fixed.size(); ++j)
        if (witness[fixed[i]][fixed[j]] == UINT32_MAX) witness[fixed[i]][fixed[j]] = f_id;
  }
  for (uint32_t a = 0; a < m.degree(); ++a)
    for (uint32_t b = a + 1; b < m.degree(); ++b)
      if (witness[a][b] != UINT32_MAX) {
        graph.edges.push_back({a, b});
        graph.edge_witness.push_back(witness[a][b]);
      }
  // components by union-find
  std::vector<uint32_t> parent(m.degree());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : graph.edges) {
    uint32_t ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  graph.component.resize(m.degree());
  std::vector<uint32_t> label(m.degree(), UINT32_MAX);
  uint32_t next = 0;
  for (uint32_t v = 0; v < m.degree(); ++v) {
    uint32_t r = find(v);
    if (label[r] == UINT32_MAX) label[r] = next++;
    graph.component[v] = label[r];
  }
  graph.n_components = next;
  return graph;
}

Vector indicator(const FieldTag& field, size_t n, uint64_t block) {
  Vector v = zero_vector(field, n);
  for (uint32_t w = 0; w < n; ++w)
    if (block >> w & 1) v[w] = Scalar::one(field);
  return v;
}

}  // namespace augcheck
