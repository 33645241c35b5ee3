// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion re-derives its expectations from independent
// routes (brute-force enumeration, hand ranks, the exact oracle).

#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "augcheck/checker.hpp"
#include "augcheck/io.hpp"
#include "augcheck/zoo.hpp"
#include "support/corpus.hpp"

using namespace augcheck;

namespace {

struct Tally {
  size_t checks = 0;
  std::vector<std::string> failures;
  void require(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

const std::vector<FieldTag>& agreement_fields() {
  static const std::vector<FieldTag> fields{FieldTag::gf(2), FieldTag::gf(3), FieldTag::gf(5),
                                            FieldTag::rationals()};
  return fields;
}

const corpus::Entry& entry(const std::string& name) {
  for (const corpus::Entry& e : corpus::shared_corpus())
    if (e.name == name) return e;
  throw std::runtime_error("missing corpus entry " + name);
}

// ---------------------------------------------------------------------------

void criterion_1_checker_oracle_agreement(Tally& t) {
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    GreenData g = green(e.monoid);
    for (const FieldTag& field : agreement_fields()) {
      CheckReport rep = decide(e.monoid, g, field);
      OracleResult oracle = oracle_simple(e.monoid, field);
      t.require(rep.final == oracle.verdict,
                e.name + " over " + field.name() + ": checker says " +
                    verdict_name(rep.final) + ", oracle says " + verdict_name(oracle.verdict));
    }
  }
}

void criterion_2_simplicial_families(Tally& t) {
  const std::vector<std::pair<std::string, Graph>> skeletons = {
      {"end-path3", Graph::path(3)},   {"end-path4", Graph::path(4)},
      {"end-cycle4", Graph::cycle(4)}, {"end-cycle5", Graph::cycle(5)},
      {"end-star4", Graph::star(4)},   {"t3", Graph::complete(3)},
      {"t4", Graph::complete(4)},
      {"end-complex-tri-tail", SimplicialComplex(4, {0b0111, 0b1100}).one_skeleton()},
  };
  for (const auto& [name, skeleton] : skeletons) {
    const MonoidData& m = entry(name).monoid;
    GreenData g = green(m);
    for (const FieldTag& field : {FieldTag::gf(2), FieldTag::gf(3), FieldTag::rationals()}) {
      CheckReport rep = decide(m, g, field);
      t.require(rep.final == Verdict::Simple,
                name + " over " + field.name() + " should be simple");
    }
    std::vector<uint32_t> minimal = minimal_classes_above_ideal(g);
    t.require(minimal.size() == 1, name + ": unique minimal class above the ideal");
    GammaGraph gamma = gamma_graph(m, g, minimal.front());
    t.require(gamma.edges == skeleton.edges, name + ": graph of the monoid is the one-skeleton");
  }
}

void criterion_3_simple_without_2_transitivity(Tally& t) {
  for (const char* name : {"end-path3", "end-cycle5"}) {
    const MonoidData& m = entry(name).monoid;
    t.require(!is_2_transitive(m), std::string(name) + " must not be 2-transitive");
    t.require(decide(m, FieldTag::rationals()).final == Verdict::Simple,
              std::string(name) + " simple over the rationals");
    t.require(decide(m, FieldTag::complexes()).final == Verdict::Simple,
              std::string(name) + " simple over the complexes");
  }
}

void criterion_4_deficient_counterexamples(Tally& t) {
  for (size_t n : {size_t(4), size_t(5)}) {
    MonoidData m = m_gamma_a(Graph::complete(n), deficient_block_matrix(n));
    std::string tag = "deficient family on " + std::to_string(n) + " points";
    t.require(is_2_transitive(m), tag + ": 2-transitive");
    GreenData g = green(m);
    for (const FieldTag& field : {FieldTag::rationals(), FieldTag::complexes()}) {
      CheckReport rep = check_conditions(m, g, field);
      t.require(rep.c4.status == CondStatus::Fails, tag + ": condition (4) fails");
      t.require(rep.incidence_rank && *rep.incidence_rank == n - 1,
                tag + ": incidence rank is n-1");
      t.require(rep.final == Verdict::NotSimple, tag + " not simple over " + field.name());
    }
    OracleResult oracle = oracle_simple(m, FieldTag::rationals());
    t.require(oracle.verdict == Verdict::NotSimple, tag + ": oracle agrees");
    t.require(!oracle.witness.empty(), tag + ": oracle produced a witness subspace");
    ActionModule aug = aug_module(omega_module(m, FieldTag::rationals()));
    RowSpace w(FieldTag::rationals(), aug.dim);
    for (const Vector& v : oracle.witness) w.insert(v);
    bool invariant = w.dim() > 0 && w.dim() < aug.dim;
    for (const Vector& v : w.basis())
      for (const Matrix& act : aug.action)
        if (!w.contains(act.apply(v))) invariant = false;
    t.require(invariant, tag + ": witness is a proper nonzero invariant subspace");
  }
}

void criterion_5_rees_sweep(Tally& t) {
  // every valid 3xr matrix with distinct nonzero columns, r in {2, 3}
  std::vector<uint64_t> nonzero_columns;
  for (uint64_t c = 1; c < 8; ++c) nonzero_columns.push_back(c);
  auto column_entries = [](uint64_t mask) {
    return std::vector<uint8_t>{static_cast<uint8_t>(mask & 1),
                                static_cast<uint8_t>(mask >> 1 & 1),
                                static_cast<uint8_t>(mask >> 2 & 1)};
  };
  size_t swept = 0;
  auto run_one = [&](const std::vector<uint64_t>& cols) {
    std::vector<std::vector<uint8_t>> rows(3, std::vector<uint8_t>(cols.size()));
    std::vector<std::vector<long>> long_rows(3, std::vector<long>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
      std::vector<uint8_t> col = column_entries(cols[j]);
      for (size_t i = 0; i < 3; ++i) {
        rows[i][j] = col[i];
        long_rows[i][j] = col[i];
      }
    }
    MonoidData m = rees_monoid(ZeroOneMatrix(rows));
    GreenData g = green(m);
    for (const FieldTag& field : {FieldTag::gf(2), FieldTag::rationals()}) {
      size_t a_rank = rank(Matrix::from_int_rows(field, long_rows));
      Verdict expected = a_rank == 3 ? Verdict::Simple : Verdict::NotSimple;
      Verdict got = decide(m, g, field).final;
      t.require(got == expected,
                "rees sweep entry disagrees with the rank criterion over " + field.name());
    }
    ++swept;
  };
  for (uint64_t c1 : nonzero_columns)
    for (uint64_t c2 : nonzero_columns) {
      if (c2 == c1) continue;
      run_one({c1, c2});
      for (uint64_t c3 : nonzero_columns) {
        if (c3 == c1 || c3 == c2) continue;
        run_one({c1, c2, c3});
      }
    }
  t.require(swept == 42 + 210, "sweep covers all 3x2 and 3x3 matrices");
}

void criterion_6_power_set_monoid(Tally& t) {
  const MonoidData& m = entry("lattice-endos-2").monoid;
  GreenData g = green(m);
  for (const FieldTag& field : {FieldTag::gf(2), FieldTag::gf(3), FieldTag::rationals()}) {
    CheckReport rep = check_conditions(m, g, field);
    t.require(rep.c1.status == CondStatus::Holds, "c1 holds over " + field.name());
    t.require(rep.c2.status == CondStatus::Holds, "c2 holds over " + field.name());
    t.require(rep.c3.status == CondStatus::Holds, "c3 holds over " + field.name());
    t.require(rep.c5.status == CondStatus::Holds, "c5 holds over " + field.name());
    t.require(rep.c4.status == CondStatus::Fails, "c4 fails over " + field.name());
    // the blocks are the two atom up-sets plus complements: rank |X|+1 = 3,
    // strictly below |Omega| = 4 (see the decisions ledger on the bound)
    t.require(rep.incidence_rank && *rep.incidence_rank == 3 && m.degree() == 4,
              "incidence rank is 3 against 4 points over " + field.name());
    t.require(rep.final == Verdict::NotSimple, "not simple over " + field.name());
    OracleResult oracle = oracle_simple(m, field);
    t.require(oracle.verdict == Verdict::NotSimple, "oracle confirms over " + field.name());
  }
}

void criterion_7_partial_modules(Tally& t) {
  for (size_t n : {size_t(2), size_t(3)}) {
    for (bool inverse : {true, false}) {
      MonoidData m = inverse ? symmetric_inverse(n) : partial_transformations(n);
      GreenData g = green(m);
      std::string tag = (inverse ? "injective partial maps on " : "partial maps on ") +
                        std::to_string(n) + " points";
      for (const FieldTag& field : {FieldTag::gf(2), FieldTag::rationals()}) {
        CheckReport rep = partial_module_simple(m, g, field);
        t.require(rep.final == Verdict::Simple, tag + " simple over " + field.name());
      }
    }
  }
}

void criterion_8_zero_transitive_structure(Tally& t) {
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    auto sink = is_0_transitive(e.monoid);
    if (!sink) continue;
    GreenData g = green(e.monoid);
    for (const FieldTag& field : {FieldTag::gf(2), FieldTag::gf(3), FieldTag::rationals()}) {
      CheckReport rep = check_0_transitive(e.monoid, g, field);
      bool rank2 = rep.minimal_j_rank && *rep.minimal_j_rank == 2;
      bool c4 = rep.c4.status == CondStatus::Holds;
      t.require((rep.final == Verdict::Simple) == (rank2 && c4),
                e.name + ": verdict is rank-2 plus full incidence rank over " + field.name());
      if (rank2)
        t.require(rep.gamma_is_star && *rep.gamma_is_star,
                  e.name + ": the graph is the sink-centred star");
      if (rep.final == Verdict::Simple)
        t.require(rep.group_trivial && *rep.group_trivial,
                  e.name + ": maximal subgroup trivial when simple");
    }
  }
}

void criterion_9_two_transitive_small_degree(Tally& t) {
  size_t examined = 0;
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    if (e.monoid.degree() > 3 || e.monoid.degree() < 2) continue;
    if (!is_2_transitive(e.monoid)) continue;
    ++examined;
    t.require(decide(e.monoid, FieldTag::complexes()).final == Verdict::Simple,
              e.name + " is 2-transitive on <= 3 points, so simple over the complexes");
  }
  t.require(examined >= 3, "at least the full, natural-group and affine cases were examined");
}

void criterion_10_property_suites(Tally& t) {
  // stability and constant rank on J-classes, corpus-wide
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    const MonoidData& m = e.monoid;
    GreenData g = green(m);
    bool stable = true, rank_constant = true;
    for (uint32_t a = 0; a < m.size() && stable && rank_constant; ++a) {
      std::vector<bool> in_aM(m.size(), false), in_Ma(m.size(), false);
      for (uint32_t x = 0; x < m.size(); ++x) {
        in_aM[m.product(a, x)] = true;
        in_Ma[m.product(x, a)] = true;
      }
      for (uint32_t b = 0; b < m.size(); ++b) {
        bool same_j = g.j_class[a] == g.j_class[b];
        if ((same_j && in_aM[b]) != (g.r_class[a] == g.r_class[b])) stable = false;
        if ((same_j && in_Ma[b]) != (g.l_class[a] == g.l_class[b])) stable = false;
        if (same_j && m.element(a).rank() != m.element(b).rank()) rank_constant = false;
      }
    }
    t.require(stable, e.name + ": stability");
    t.require(rank_constant, e.name + ": rank constant on J-classes");
  }

  // block-functional span equality and edge preservation where conditions
  // (1) and (2) hold
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    const MonoidData& m = e.monoid;
    if (m.is_group()) continue;
    GreenData g = green(m);
    bool has_constant = false;
    for (const Transformation& x : m.elements())
      if (x.rank() == 1) has_constant = true;
    std::vector<uint32_t> minimal = minimal_classes_above_ideal(g);
    if (!has_constant || minimal.size() != 1 || !g.j_regular[minimal.front()]) continue;
    uint32_t J = minimal.front();

    GammaGraph gamma = gamma_graph(m, g, J);
    bool edges_preserved = true;
    for (const Transformation& x : m.elements())
      for (const auto& [p, q] : gamma.edges)
        if (x(p) != x(q) && !gamma.has_edge(x(p), x(q))) edges_preserved = false;
    t.require(edges_preserved, e.name + ": the monoid acts simplicially on its graph");

    for (const FieldTag& field : {FieldTag::gf(2), FieldTag::gf(3), FieldTag::rationals()}) {
      SetSystem blocks = kernel_blocks(m, g, J);
      RowSpace all_span(field, m.degree());
      for (uint64_t b : blocks.blocks) all_span.insert(indicator(field, m.degree(), b));
      uint32_t apex = g.j_idempotents[J].front();
      const Transformation& et = m.element(apex);
      std::vector<Vector> seeds;
      std::set<uint64_t> seen;
      for (uint32_t w = 0; w < m.degree(); ++w) {
        uint64_t block = 0;
        for (uint32_t x = 0; x < m.degree(); ++x)
          if (et(x) == et(w)) block |= uint64_t(1) << x;
        if (seen.insert(block).second) seeds.push_back(indicator(field, m.degree(), block));
      }
      ActionModule omega = omega_module(m, field);
      std::vector<Matrix> transposed;
      for (const Matrix& a : omega.action) transposed.push_back(a.transpose());
      t.require(all_span == spin_space(seeds, transposed),
                e.name + ": block span equals its one-idempotent closure over " + field.name());
    }
  }

  // consequences of 2-transitivity wherever it holds on non-groups
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    if (e.monoid.is_group() || e.monoid.degree() < 2) continue;
    if (!is_2_transitive(e.monoid)) continue;
    GreenData g = green(e.monoid);
    t.require(two_transitive_consequences(e.monoid, g).all_hold(),
              e.name + ": structural consequences of 2-transitivity");
  }

  // strong edge transitivity iff adjacent rows differ, on 50 random pairs
  {
    uint64_t state = 2024;
    auto next = [&](uint32_t bound) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      return static_cast<uint32_t>((state >> 33) % bound);
    };
    int built = 0;
    while (built < 50) {
      size_t n = 3 + next(4);  // up to 6 points
      std::vector<std::pair<uint32_t, uint32_t>> edges;
      for (uint32_t v = 1; v < n; ++v) edges.push_back({next(v), v});
      for (int extra = next(4); extra > 0; --extra) {
        uint32_t a = next(n), b = next(n);
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
      }
      Graph graph(n, std::move(edges));
      size_t cols = 1 + next(3);
      std::vector<std::vector<uint8_t>> rows(n, std::vector<uint8_t>(cols));
      for (auto& r : rows)
        for (auto& x : r) x = static_cast<uint8_t>(next(2));
      ZeroOneMatrix a(rows);
      if (a.has_zero_column() || a.has_all_ones_column()) continue;
      MonoidData m = m_gamma_a(graph, a);
      ++built;

      bool rows_differ = true;
      for (const auto& [x, y] : graph.edges)
        if (rows[x] == rows[y]) rows_differ = false;
      bool set = true;
      for (const auto& [a1, a2] : graph.edges)
        for (const auto& [b1, b2] : graph.edges)
          for (auto [s1, s2] : {std::pair{a1, a2}, std::pair{a2, a1}})
            for (auto [t1, t2] : {std::pair{b1, b2}, std::pair{b2, b1}}) {
              bool hit = false;
              for (const Transformation& x : m.elements())
                if (x(s1) == t1 && x(s2) == t2) {
                  hit = true;
                  break;
                }
              if (!hit) set = false;
            }
      t.require(set == rows_differ, "strong edge transitivity iff adjacent rows differ");
    }
  }

  // the Norton-test oracle agrees with brute force everywhere within bound
  for (const corpus::Entry& e : corpus::shared_corpus()) {
    if (e.monoid.degree() < 2) continue;
    for (uint32_t p : {2u, 3u}) {
      FieldTag field = FieldTag::gf(p);
      size_t dim = e.monoid.degree() - 1;
      uint64_t need = 1;
      bool within = true;
      for (size_t i = 0; i < dim; ++i) {
        need *= p;
        if (need > (uint64_t(1) << 20)) {
          within = false;
          break;
        }
      }
      if (!within) continue;
      ActionModule aug = aug_module(omega_module(e.monoid, field));
      bool norton = is_irreducible(aug.action, aug.dim).irreducible;
      bool brute = brute_force_irreducible_gfp(aug.action, aug.dim);
      t.require(norton == brute,
                e.name + " over " + field.name() + ": oracle equals brute force");
    }
  }
}

struct Criterion {
  int number;
  std::string title;
  std::function<void(Tally&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "checker and oracle agree on the corpus over GF(2), GF(3), GF(5) and Q",
       criterion_1_checker_oracle_agreement},
      {2, "connected graph and complex endomorphism monoids are simple with the right graph",
       criterion_2_simplicial_families},
      {3, "simplicity without 2-transitivity for the path and the 5-cycle",
       criterion_3_simple_without_2_transitivity},
      {4, "the deficient matrix family is 2-transitive but never simple",
       criterion_4_deficient_counterexamples},
      {5, "Rees monoid verdict equals the structure-matrix rank test, exhaustively",
       criterion_5_rees_sweep},
      {6, "the power-set monoid fails exactly the incidence rank condition",
       criterion_6_power_set_monoid},
      {7, "partial transformation modules of the rook and partial-map monoids are simple",
       criterion_7_partial_modules},
      {8, "zero-transitive verdicts match the rank-2 and star structure",
       criterion_8_zero_transitive_structure},
      {9, "2-transitive monoids on at most 3 points are simple over the complexes",
       criterion_9_two_transitive_small_degree},
      {10, "property suites: stability, spans, edge preservation, strong edge transitivity, "
           "oracle vs brute force",
       criterion_10_property_suites},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Tally tally;
    std::string error;
    try {
      c.run(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (tally.failures.empty() && error.empty()) {
      std::printf("PASS criterion %2d: %s (%zu checks)\n", c.number, c.title.c_str(),
                  tally.checks);
    } else {
      ++failed;
      std::string first = !error.empty() ? "exception: " + error : tally.failures.front();
      std::printf("FAIL criterion %2d: %s -- %s (%zu of %zu checks failed)\n", c.number,
                  c.title.c_str(), first.c_str(), tally.failures.size(), tally.checks);
    }
    std::fflush(stdout);
  }
  if (failed == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", failed);
  return 1;
}
