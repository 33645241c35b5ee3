#include "support/corpus.hpp"

namespace corpus {

using namespace augcheck;

ZeroOneMatrix rank2_rees_matrix() {
  return ZeroOneMatrix({{1, 0}, {1, 1}, {0, 1}});
}

ZeroOneMatrix identity_matrix(size_t n) {
  std::vector<std::vector<uint8_t>> rows(n, std::vector<uint8_t>(n, 0));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return ZeroOneMatrix(std::move(rows));
}

MonoidData s3_natural() {
  return closure(3, {Transformation({1, 2, 0}), Transformation({1, 0, 2})});
}

MonoidData c4_regular() {
  return closure(4, {Transformation({1, 2, 3, 0})});
}

MonoidData identity_only(size_t degree) { return closure(degree, {}); }

namespace {

Poset fence_poset() {
  // a < b > c
  return Poset::from_covers(3, {{0, 1}, {2, 1}});
}

ZeroOneMatrix full_rank_k3_matrix() {
  return ZeroOneMatrix({{1, 0}, {0, 1}, {0, 0}});
}

ZeroOneMatrix full_rank_p4_matrix() {
  return ZeroOneMatrix({{1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {0, 0, 0}});
}

std::vector<Entry> build() {
  std::vector<Entry> out;
  auto add = [&](std::string name, MonoidData m) { out.push_back({std::move(name), std::move(m)}); };
  add("end-path3", end_graph(Graph::path(3)));
  add("end-path4", end_graph(Graph::path(4)));
  add("end-cycle4", end_graph(Graph::cycle(4)));
  add("end-cycle5", end_graph(Graph::cycle(5)));
  add("end-star4", end_graph(Graph::star(4)));
  add("t3", end_graph(Graph::complete(3)));
  add("t4", end_graph(Graph::complete(4)));
  add("end-complex-tri-tail", end_simplicial(SimplicialComplex(4, {0b0111, 0b1100})));
  add("end-chain2-poset", end_poset(Poset::chain(2)));
  add("end-chain3-poset", end_poset(Poset::chain(3)));
  add("end-fence-poset", end_poset(fence_poset()));
  add("end-chain3-digraph", end_digraph_acyclic(Digraph::chain(3)));
  add("lattice-endos-2", lattice_endos(2));
  add("mgamma-k4-deficient", m_gamma_a(Graph::complete(4), deficient_block_matrix(4)));
  add("mgamma-k5-deficient", m_gamma_a(Graph::complete(5), deficient_block_matrix(5)));
  add("mgamma-k3-fullrank", m_gamma_a(Graph::complete(3), full_rank_k3_matrix()));
  add("mgamma-p4-fullrank", m_gamma_a(Graph::path(4), full_rank_p4_matrix()));
  add("rees-identity3", rees_monoid(identity_matrix(3)));
  add("rees-rank2", rees_monoid(rank2_rees_matrix()));
  add("inverse2", symmetric_inverse(2));
  add("inverse3", symmetric_inverse(3));
  add("partial2", partial_transformations(2));
  add("partial3", partial_transformations(3));
  add("example-0tran-2", example_0_tran(2));
  add("example-0tran-3", example_0_tran(3));
  add("affine3", affine_monoid(3));
  add("s3", s3_natural());
  add("c4-regular", c4_regular());
  add("identity-on-3", identity_only(3));
  return out;
}

}  // namespace

const std::vector<Entry>& shared_corpus() {
  static const std::vector<Entry> corpus = build();
  return corpus;
}

}  // namespace corpus
