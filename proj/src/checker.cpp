#include "augcheck/checker.hpp"

#include <algorithm>
#include <numeric>

namespace augcheck {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "simple";
    case Verdict::NotSimple: return "not-simple";
    case Verdict::Undecidable: return "undecidable";
  }
  return "?";
}

const char* cond_status_name(CondStatus s) {
  switch (s) {
    case CondStatus::Holds: return "holds";
    case CondStatus::Fails: return "fails";
    case CondStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

std::string transitivity_label(const MonoidData& m) {
  if (is_transitive(m)) return "transitive";
  if (is_0_transitive(m)) return "zero-transitive";
  return "neither";
}

// Restriction of selected elements to an invariant point set, as Aug matrices.
std::vector<Matrix> restricted_aug_actions(const MonoidData& m,
                                           const std::vector<uint32_t>& ids,
                                           const std::vector<uint32_t>& points,
                                           const FieldTag& field) {
  std::vector<uint32_t> pos(m.degree(), UINT32_MAX);
  for (uint32_t i = 0; i < points.size(); ++i) pos[points[i]] = i;
  std::vector<Matrix> out;
  out.reserve(ids.size());
  for (uint32_t id : ids) {
    const Transformation& t = m.element(id);
    std::vector<uint32_t> img(points.size());
    for (uint32_t i = 0; i < points.size(); ++i) {
      uint32_t target = t(points[i]);
      if (pos[target] == UINT32_MAX)
        fail(Errc::Internal, "element does not preserve the point set");
      img[i] = pos[target];
    }
    Transformation restricted(std::move(img));
    if (restricted.rank() != points.size())
      fail(Errc::Internal, "element is not a permutation of the point set");
    out.push_back(aug_matrix(restricted, field));
  }
  return out;
}

std::optional<uint32_t> first_constant(const MonoidData& m) {
  for (uint32_t i = 0; i < m.size(); ++i)
    if (m.element(i).rank() == 1) return i;
  return std::nullopt;
}

}  // namespace

bool group_aug_simple(const MonoidData& m, const std::vector<uint32_t>& group_ids,
                      const std::vector<uint32_t>& points, const FieldTag& field,
                      std::string* method_out) {
  auto set_method = [&](const char* s) {
    if (method_out) *method_out = s;
  };
  if (points.size() <= 2) {
    set_method("dimension");
    return true;  // Aug has dimension at most 1
  }
  switch (field.kind()) {
    case FieldTag::Kind::Complexes:
      set_method("2-transitivity");
      return elements_2_transitive_on(m, group_ids, points);
    case FieldTag::Kind::Reals:
      set_method("2-homogeneity");
      return elements_2_homogeneous_on(m, group_ids, points);
    case FieldTag::Kind::GFp:
    case FieldTag::Kind::Rationals: {
      set_method("oracle");
      std::vector<Matrix> actions = restricted_aug_actions(m, group_ids, points, field);
      return is_irreducible(actions, points.size() - 1).irreducible;
    }
  }
  fail(Errc::Internal, "unreachable field kind");
}

OracleResult oracle_simple(const MonoidData& m, const FieldTag& field, const NortonOptions& opts,
                           uint64_t brute_bound) {
  if (!field.computable())
    fail(Errc::FieldNotComputable, "the oracle needs GF(p) or Q, got " + field.name());
  if (m.degree() < 2) fail(Errc::DimensionMismatch, "oracle needs at least 2 points");
  ActionModule aug = aug_module(omega_module(m, field));
  IrredResult r = is_irreducible(aug.action, aug.dim, opts);
  OracleResult out;
  out.verdict = r.irreducible ? Verdict::Simple : Verdict::NotSimple;
  out.method = r.method;
  out.witness = std::move(r.witness);
  if (field.kind() == FieldTag::Kind::GFp) {
    uint64_t need = 1;
    bool within = true;
    for (size_t i = 0; i < aug.dim && within; ++i) {
      if (need > brute_bound / field.prime()) within = false;
      else need *= field.prime();
    }
    if (within && need <= brute_bound) {
      out.brute_ran = true;
      bool brute = brute_force_irreducible_gfp(aug.action, aug.dim, brute_bound);
      if (brute != r.irreducible)
        fail(Errc::Internal, "irreducibility oracle disagrees with brute force enumeration");
    }
  }
  return out;
}

CheckReport check_conditions(const MonoidData& m, const GreenData& g, const FieldTag& field) {
  if (m.is_group()) fail(Errc::IsGroup, "group input: use the group criterion");
  if (m.degree() < 2) fail(Errc::DimensionMismatch, "checker needs at least 2 points");

  CheckReport rep;
  rep.field = field;
  rep.path = "general";
  rep.transitivity = transitivity_label(m);

  // A monoid that is neither transitive nor 0-transitive cannot have a
  // simple augmentation module once |Omega| > 2; report the orbit witness.
  if (m.degree() > 2 && rep.transitivity == "neither") {
    rep.final = Verdict::NotSimple;
    uint32_t best_point = 0;
    std::vector<uint32_t> best_orbit = orbit(m, 0);
    for (uint32_t p = 0; p < m.degree(); ++p) {
      std::vector<uint32_t> o = orbit(m, p);
      if (o.size() < m.degree() && o.size() > 1) {
        best_point = p;
        best_orbit = std::move(o);
        break;
      }
      if (o.size() < best_orbit.size() || best_orbit.size() == m.degree()) {
        best_point = p;
        best_orbit = std::move(o);
      }
    }
    rep.non_transitive_point = best_point;
    rep.non_transitive_orbit = best_orbit;
    return rep;
  }

  // (1) a constant map exists
  std::optional<uint32_t> constant = first_constant(m);
  rep.c1.status = constant ? CondStatus::Holds : CondStatus::Fails;
  if (constant) {
    rep.constant_witness = *constant;
    rep.c1.detail = "constant map, element " + std::to_string(*constant);
  } else {
    rep.c1.detail = "no rank-1 element";
  }

  // (2) unique minimal J-class above the minimal ideal, and regular
  std::vector<uint32_t> minimal = minimal_classes_above_ideal(g);
  bool c2_holds = minimal.size() == 1 && g.j_regular[minimal.front()];
  rep.c2.status = c2_holds ? CondStatus::Holds : CondStatus::Fails;
  if (minimal.size() != 1) {
    rep.c2.detail = std::to_string(minimal.size()) + " minimal J-classes above the ideal";
  } else {
    rep.j_class_witness = minimal.front();
    rep.minimal_j_rank = g.j_rank[minimal.front()];
    rep.c2.detail = g.j_regular[minimal.front()]
                        ? "J-class " + std::to_string(minimal.front())
                        : "J-class " + std::to_string(minimal.front()) + " is not regular";
  }

  if (!constant || !c2_holds) {
    rep.final = Verdict::NotSimple;
    return rep;
  }
  uint32_t J = minimal.front();

  // (3) Aug(F.eOmega) simple as a module over the maximal subgroup
  uint32_t e = g.j_idempotents[J].front();
  rep.apex_idempotent = e;
  std::vector<uint32_t> group = maximal_subgroup(m, g, e);
  std::vector<uint32_t> points = m.element(e).image_set();
  bool c3 = group_aug_simple(m, group, points, field, &rep.group_condition_method);
  rep.c3.status = c3 ? CondStatus::Holds : CondStatus::Fails;
  rep.c3.detail = "G_e of order " + std::to_string(group.size()) + " on " +
                  std::to_string(points.size()) + " points via " + rep.group_condition_method;

  // (4) incidence matrix of the kernel block system has full rank
  SetSystem blocks = kernel_blocks(m, g, J);
  size_t inc_rank = rank(incidence_matrix(blocks, field));
  rep.incidence_rank = inc_rank;
  rep.incidence_blocks = blocks.blocks.size();
  bool c4 = inc_rank == m.degree();
  rep.c4.status = c4 ? CondStatus::Holds : CondStatus::Fails;
  rep.c4.detail = "rank " + std::to_string(inc_rank) + " of " + std::to_string(blocks.blocks.size()) +
                  " blocks against |Omega| = " + std::to_string(m.degree());

  // (5) the graph Gamma(M) is connected
  GammaGraph gamma = gamma_graph(m, g, J);
  rep.gamma_components = gamma.n_components;
  bool c5 = gamma.connected();
  rep.c5.status = c5 ? CondStatus::Holds : CondStatus::Fails;
  rep.c5.detail = std::to_string(gamma.n_components) + " components";

  rep.final = (c3 && c4 && c5) ? Verdict::Simple : Verdict::NotSimple;
  return rep;
}

CheckReport check_0_transitive(const MonoidData& m, const GreenData& g, const FieldTag& field) {
  std::optional<uint32_t> sink = is_0_transitive(m);
  if (!sink) fail(Errc::Not0Transitive, "monoid is not 0-transitive");

  CheckReport rep;
  rep.field = field;
  rep.path = "zero-transitive";
  rep.transitivity = "zero-transitive";
  rep.sink = *sink;

  // I(M) is the zero map; the unique minimal nonzero J-class is regular.
  const auto& ideal = g.j_members[g.minimal_j];
  if (ideal.size() != 1 || m.element(ideal.front()) != Transformation::constant(m.degree(), *sink))
    fail(Errc::Internal, "0-transitive monoid without the zero map as its minimal ideal");
  rep.c1.status = CondStatus::Holds;
  rep.c1.detail = "zero map, element " + std::to_string(ideal.front());
  rep.constant_witness = ideal.front();

  std::vector<uint32_t> minimal = minimal_classes_above_ideal(g);
  if (minimal.size() != 1 || !g.j_regular[minimal.front()])
    fail(Errc::Internal, "0-transitive monoid without a unique regular minimal nonzero J-class");
  uint32_t J = minimal.front();
  rep.j_class_witness = J;
  rep.c2.status = CondStatus::Holds;
  rep.c2.detail = "J-class " + std::to_string(J);

  size_t j_rank = g.j_rank[J];
  rep.minimal_j_rank = j_rank;
  bool rank2 = j_rank == 2;
  rep.c3.status = rank2 ? CondStatus::Holds : CondStatus::Fails;
  rep.c3.detail = "rank of J is " + std::to_string(j_rank);
  rep.group_condition_method = "rank-2";

  SetSystem blocks = kernel_blocks(m, g, J);
  size_t inc_rank = rank(incidence_matrix(blocks, field));
  rep.incidence_rank = inc_rank;
  rep.incidence_blocks = blocks.blocks.size();
  bool c4 = inc_rank == m.degree();
  rep.c4.status = c4 ? CondStatus::Holds : CondStatus::Fails;
  rep.c4.detail = "rank " + std::to_string(inc_rank) + " against |Omega| = " +
                  std::to_string(m.degree());

  GammaGraph gamma = gamma_graph(m, g, J);
  rep.gamma_components = gamma.n_components;
  rep.c5.status = gamma.connected() ? CondStatus::Holds : CondStatus::Fails;
  rep.c5.detail = std::to_string(gamma.n_components) + " components";
  if (rank2) {
    rep.gamma_is_star = gamma.is_star(*sink);
    if (!*rep.gamma_is_star)
      fail(Errc::Internal, "rank-2 zero-transitive monoid whose graph is not the sink star");
  }

  rep.final = (rank2 && c4) ? Verdict::Simple : Verdict::NotSimple;
  if (rep.final == Verdict::Simple) {
    uint32_t e = g.j_idempotents[J].front();
    rep.apex_idempotent = e;
    rep.group_trivial = maximal_subgroup(m, g, e).size() == 1;
    if (!*rep.group_trivial)
      fail(Errc::Internal, "simple verdict with a nontrivial maximal subgroup");
  }
  return rep;
}

CheckReport partial_module_simple(const MonoidData& m, const GreenData& g, const FieldTag& field) {
  for (const Transformation& t : m.elements())
    if (t(0) != 0)
      fail(Errc::NotPartialMonoid, "encoded partial maps must fix the sink at index 0");
  return decide(m, g, field);
}

CheckReport decide(const MonoidData& m, const GreenData& g, const FieldTag& field) {
  if (m.degree() < 2) fail(Errc::DimensionMismatch, "need at least 2 points");
  if (m.is_group()) {
    CheckReport rep;
    rep.field = field;
    rep.path = "group";
    rep.transitivity = transitivity_label(m);
    std::vector<uint32_t> all_ids(m.size());
    std::iota(all_ids.begin(), all_ids.end(), 0);
    std::vector<uint32_t> all_points(m.degree());
    std::iota(all_points.begin(), all_points.end(), 0);
    bool simple = group_aug_simple(m, all_ids, all_points, field, &rep.group_condition_method);
    rep.final = simple ? Verdict::Simple : Verdict::NotSimple;
    return rep;
  }
  if (is_0_transitive(m)) return check_0_transitive(m, g, field);
  return check_conditions(m, g, field);
}

CheckReport decide(const MonoidData& m, const FieldTag& field) {
  GreenData g = green(m);
  return decide(m, g, field);
}

TwoTransitiveReport two_transitive_consequences(const MonoidData& m, const GreenData& g) {
  if (m.is_group()) fail(Errc::IsGroup, "consequence report is for non-groups");
  if (!is_2_transitive(m)) fail(Errc::NotTwoTransitive, "monoid is not 2-transitive");
  TwoTransitiveReport rep;
  rep.has_constant = first_constant(m).has_value();
  std::vector<uint32_t> minimal = minimal_classes_above_ideal(g);
  rep.unique_minimal_regular = minimal.size() == 1 && g.j_regular[minimal.front()];
  if (!rep.unique_minimal_regular) return rep;
  rep.j_class = minimal.front();
  uint32_t e = g.j_idempotents[rep.j_class].front();
  std::vector<uint32_t> group = maximal_subgroup(m, g, e);
  std::vector<uint32_t> points = m.element(e).image_set();
  rep.group_2_transitive_on_image =
      points.size() <= 2 || elements_2_transitive_on(m, group, points);
  rep.gamma_complete = gamma_graph(m, g, rep.j_class).is_complete();
  return rep;
}

}  // namespace augcheck
