#include "augcheck/green.hpp"

#include <algorithm>
#include <map>

namespace augcheck {

namespace {

// Iterative Tarjan SCC; neighbour function yields the out-edges of a node.
template <typename Neighbours>
std::vector<uint32_t> scc_components(size_t n, Neighbours&& neighbours) {
  constexpr uint32_t kUnset = UINT32_MAX;
  std::vector<uint32_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  uint32_t next_index = 0, next_comp = 0;

  struct Frame {
    uint32_t node;
    size_t edge;
  };
  std::vector<Frame> frames;
  for (uint32_t start = 0; start < n; ++start) {
    if (index[start] != kUnset) continue;
    frames.push_back({start, 0});
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& out = neighbours(f.node);
      if (f.edge < out.size()) {
        uint32_t w = out[f.edge++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
      } else {
        uint32_t v = f.node;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
        if (low[v] == index[v]) {
          while (true) {
            uint32_t w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }
  return comp;
}

// Renumber class ids so classes are ordered by their smallest element id.
uint32_t canonicalize(std::vector<uint32_t>& comp) {
  constexpr uint32_t kUnset = UINT32_MAX;
  uint32_t n_classes = 0;
  for (uint32_t c : comp) n_classes = std::max(n_classes, c + 1);
  std::vector<uint32_t> remap(n_classes, kUnset);
  uint32_t next = 0;
  for (uint32_t& c : comp) {
    if (remap[c] == kUnset) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

}  // namespace

GreenData green(const MonoidData& m) {
  const size_t n = m.size();
  const size_t k = m.generators().size();
  GreenData g;

  std::vector<uint32_t> right_out(k), left_out(k), both_out(2 * k);
  auto right_nb = [&](uint32_t v) -> const std::vector<uint32_t>& {
    for (uint32_t i = 0; i < k; ++i) right_out[i] = m.right_product(v, i);
    return right_out;
  };
  auto left_nb = [&](uint32_t v) -> const std::vector<uint32_t>& {
    for (uint32_t i = 0; i < k; ++i) left_out[i] = m.left_product(v, i);
    return left_out;
  };
  auto both_nb = [&](uint32_t v) -> const std::vector<uint32_t>& {
    for (uint32_t i = 0; i < k; ++i) {
      both_out[i] = m.right_product(v, i);
      both_out[k + i] = m.left_product(v, i);
    }
    return both_out;
  };

  g.r_class = scc_components(n, right_nb);
  g.n_r = canonicalize(g.r_class);
  g.l_class = scc_components(n, left_nb);
  g.n_l = canonicalize(g.l_class);
  g.j_class = scc_components(n, both_nb);
  g.n_j = canonicalize(g.j_class);

  // H = R meet L
  g.h_class.resize(n);
  std::map<std::pair<uint32_t, uint32_t>, uint32_t> h_ids;
  for (uint32_t v = 0; v < n; ++v) {
    auto key = std::make_pair(g.r_class[v], g.l_class[v]);
    auto [it, fresh] = h_ids.emplace(key, static_cast<uint32_t>(h_ids.size()));
    g.h_class[v] = it->second;
    (void)fresh;
  }
  g.n_h = canonicalize(g.h_class);

  g.j_members.resize(g.n_j);
  for (uint32_t v = 0; v < n; ++v) g.j_members[g.j_class[v]].push_back(v);

  g.j_idempotents.resize(g.n_j);
  for (uint32_t v = 0; v < n; ++v)
    if (m.element(v).is_idempotent()) {
      g.idempotents.push_back(v);
      g.j_idempotents[g.j_class[v]].push_back(v);
    }
  g.j_regular.resize(g.n_j);
  for (uint32_t c = 0; c < g.n_j; ++c) g.j_regular[c] = !g.j_idempotents[c].empty();

  g.j_rank.resize(g.n_j);
  for (uint32_t c = 0; c < g.n_j; ++c) g.j_rank[c] = m.element(g.j_members[c].front()).rank();

  // J-order by reachability in the two-sided graph: J_a <= J_b iff a in MbM.
  g.j_below.assign(g.n_j, std::vector<bool>(g.n_j, false));
  for (uint32_t c = 0; c < g.n_j; ++c) g.j_below[c][c] = true;
  for (uint32_t src = 0; src < g.n_j; ++src) {
    // breadth-first over class condensation from src
    std::vector<bool> seen(g.n_j, false);
    std::vector<uint32_t> queue{src};
    seen[src] = true;
    while (!queue.empty()) {
      uint32_t c = queue.back();
      queue.pop_back();
      for (uint32_t v : g.j_members[c])
        for (uint32_t w : both_nb(v)) {
          uint32_t d = g.j_class[w];
          if (!seen[d]) {
            seen[d] = true;
            queue.push_back(d);
          }
        }
    }
    for (uint32_t d = 0; d < g.n_j; ++d)
      if (seen[d]) g.j_below[d][src] = true;
  }

  // the unique J-order minimum is the minimal ideal
  uint32_t min_count = 0;
  for (uint32_t c = 0; c < g.n_j; ++c) {
    bool minimal = true;
    for (uint32_t d = 0; d < g.n_j; ++d)
      if (d != c && g.j_below[d][c]) {
        minimal = false;
        break;
      }
    if (minimal) {
      g.minimal_j = c;
      ++min_count;
    }
  }
  if (min_count != 1) fail(Errc::Internal, "minimal ideal is not unique");
  return g;
}

uint32_t minimal_ideal(const GreenData& g) { return g.minimal_j; }

std::vector<uint32_t> minimal_classes_above_ideal(const GreenData& g) {
  std::vector<uint32_t> out;
  for (uint32_t c = 0; c < g.n_j; ++c) {
    if (c == g.minimal_j) continue;
    bool minimal = true;
    for (uint32_t d = 0; d < g.n_j; ++d)
      if (d != c && d != g.minimal_j && g.j_below[d][c]) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<uint32_t> maximal_subgroup(const MonoidData& m, const GreenData& g, uint32_t e) {
  if (!m.element(e).is_idempotent()) fail(Errc::NotIdempotent, "maximal subgroup needs an idempotent");
  std::vector<uint32_t> members;
  for (uint32_t v = 0; v < m.size(); ++v)
    if (g.r_class[v] == g.r_class[e] && g.l_class[v] == g.l_class[e]) members.push_back(v);
  // verify the H-class of e is a group with identity e
  std::vector<bool> in_group(m.size(), false);
  for (uint32_t v : members) in_group[v] = true;
  for (uint32_t a : members) {
    if (m.product(e, a) != a || m.product(a, e) != a)
      fail(Errc::Internal, "H_e member not fixed by e");
    bool has_inverse = false;
    for (uint32_t b : members) {
      if (!in_group[m.product(a, b)]) fail(Errc::Internal, "H_e not closed");
      if (m.product(a, b) == e && m.product(b, a) == e) has_inverse = true;
    }
    if (!has_inverse) fail(Errc::Internal, "H_e member without inverse");
  }
  return members;
}

}  // namespace augcheck
