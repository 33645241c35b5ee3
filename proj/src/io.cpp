#include "augcheck/io.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

#include "augcheck/zoo.hpp"

namespace augcheck {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::Parse, "invalid JSON");
  return j;
}

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!allowed.contains(key)) fail(Errc::Parse, "unknown field '" + key + "'");
  }
}

size_t get_count(const json& j, const char* key, size_t max = 1'000'000) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    fail(Errc::Parse, std::string("field '") + key + "' must be a non-negative integer");
  size_t v = j[key].get<size_t>();
  if (v > max) fail(Errc::Parse, std::string("field '") + key + "' is out of range");
  return v;
}

std::vector<std::pair<uint32_t, uint32_t>> get_pairs(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    fail(Errc::Parse, std::string("field '") + key + "' must be an array of pairs");
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (const auto& item : j[key]) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
        !item[1].is_number_unsigned())
      fail(Errc::Parse, std::string("entries of '") + key + "' must be pairs of point indices");
    out.push_back({item[0].get<uint32_t>(), item[1].get<uint32_t>()});
  }
  return out;
}

ZeroOneMatrix get_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty())
    fail(Errc::Parse, std::string("field '") + key + "' must be a nonempty array of 0/1 rows");
  std::vector<std::vector<uint8_t>> rows;
  for (const auto& row : j[key]) {
    if (!row.is_array()) fail(Errc::Parse, "matrix rows must be arrays");
    std::vector<uint8_t> r;
    for (const auto& x : row) {
      if (!x.is_number_unsigned() || x.get<uint64_t>() > 1)
        fail(Errc::Parse, "matrix entries must be 0 or 1");
      r.push_back(static_cast<uint8_t>(x.get<uint64_t>()));
    }
    rows.push_back(std::move(r));
  }
  return ZeroOneMatrix(std::move(rows));
}

}  // namespace

MonoidFile MonoidFile::parse(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) fail(Errc::Parse, "monoid file must be a JSON object");
  reject_unknown_keys(j, {"degree", "generators", "partial_with_sink"});
  MonoidFile f;
  f.degree = get_count(j, "degree", 4096);
  if (f.degree == 0) fail(Errc::Parse, "degree must be at least 1");
  if (!j.contains("generators") || !j["generators"].is_array())
    fail(Errc::Parse, "field 'generators' must be an array of image arrays");
  for (const auto& gen : j["generators"]) {
    if (!gen.is_array() || gen.size() != f.degree)
      fail(Errc::Parse, "each generator must list exactly 'degree' image points");
    std::vector<uint32_t> img;
    for (const auto& x : gen) {
      if (!x.is_number_unsigned() || x.get<uint64_t>() >= f.degree)
        fail(Errc::Parse, "image point out of range");
      img.push_back(x.get<uint32_t>());
    }
    f.generators.push_back(std::move(img));
  }
  if (j.contains("partial_with_sink")) {
    if (!j["partial_with_sink"].is_boolean())
      fail(Errc::Parse, "field 'partial_with_sink' must be a boolean");
    f.partial_with_sink = j["partial_with_sink"].get<bool>();
  }
  return f;
}

std::string MonoidFile::serialize() const {
  json j;
  j["degree"] = degree;
  j["generators"] = generators;
  if (partial_with_sink) j["partial_with_sink"] = true;
  return j.dump(2) + "\n";
}

MonoidData MonoidFile::to_monoid(const Limits& limits) const {
  std::vector<Transformation> gens;
  gens.reserve(generators.size());
  for (const auto& img : generators) gens.push_back(Transformation(img));
  if (partial_with_sink)
    for (const Transformation& g : gens)
      if (g(0) != 0) fail(Errc::Parse, "partial_with_sink requires every generator to fix point 0");
  return closure(degree, std::move(gens), limits);
}

MonoidFile MonoidFile::from_monoid(const MonoidData& m, bool partial_with_sink) {
  MonoidFile f;
  f.degree = m.degree();
  f.partial_with_sink = partial_with_sink;
  for (const Transformation& t : m.elements()) {
    auto span = t.image_array();
    f.generators.push_back(std::vector<uint32_t>(span.begin(), span.end()));
  }
  return f;
}

ConstructResult construct_from_structure(const std::string& json_text, const Limits& limits) {
  json j = parse_json(json_text);
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(Errc::Parse, "structure file needs a string field 'kind'");
  const std::string kind = j["kind"].get<std::string>();

  auto done = [&](MonoidData m, bool partial) {
    return ConstructResult{std::move(m), partial, kind};
  };

  if (kind == "graph") {
    reject_unknown_keys(j, {"kind", "vertices", "edges"});
    Graph g(get_count(j, "vertices", 64), get_pairs(j, "edges"));
    return done(end_graph(g, limits), false);
  }
  if (kind == "digraph") {
    reject_unknown_keys(j, {"kind", "vertices", "edges"});
    Digraph d(get_count(j, "vertices", 64), get_pairs(j, "edges"));
    return done(end_digraph_acyclic(d, limits), false);
  }
  if (kind == "poset") {
    reject_unknown_keys(j, {"kind", "size", "covers"});
    Poset p = Poset::from_covers(get_count(j, "size", 64), get_pairs(j, "covers"));
    return done(end_poset(p, limits), false);
  }
  if (kind == "complex") {
    reject_unknown_keys(j, {"kind", "vertices", "facets"});
    size_t n = get_count(j, "vertices", 64);
    if (!j.contains("facets") || !j["facets"].is_array())
      fail(Errc::Parse, "field 'facets' must be an array of vertex lists");
    std::vector<uint64_t> facets;
    for (const auto& facet : j["facets"]) {
      if (!facet.is_array()) fail(Errc::Parse, "facets must be vertex lists");
      uint64_t mask = 0;
      for (const auto& x : facet) {
        if (!x.is_number_unsigned() || x.get<uint64_t>() >= n)
          fail(Errc::Parse, "facet vertex out of range");
        mask |= uint64_t(1) << x.get<uint32_t>();
      }
      facets.push_back(mask);
    }
    return done(end_simplicial(SimplicialComplex(n, std::move(facets)), limits), false);
  }
  if (kind == "semilattice") {
    reject_unknown_keys(j, {"kind", "size", "covers"});
    Poset p = Poset::from_covers(get_count(j, "size", 64), get_pairs(j, "covers"));
    MeetSemilattice s = MeetSemilattice::from_poset(p);
    return done(end_meet_semilattice(s, limits), s.minimum == 0);
  }
  if (kind == "matrix") {  // matrix-driven monoid on a complete graph
    reject_unknown_keys(j, {"kind", "rows"});
    ZeroOneMatrix a = get_matrix(j, "rows");
    return done(m_gamma_a(Graph::complete(a.n_rows()), a, limits), false);
  }
  if (kind == "mgamma") {
    reject_unknown_keys(j, {"kind", "vertices", "edges", "rows"});
    Graph g(get_count(j, "vertices", 64), get_pairs(j, "edges"));
    return done(m_gamma_a(g, get_matrix(j, "rows"), limits), false);
  }
  if (kind == "mdigraph") {
    reject_unknown_keys(j, {"kind", "vertices", "edges", "rows"});
    Digraph d(get_count(j, "vertices", 64), get_pairs(j, "edges"));
    return done(m_digraph_b(d, get_matrix(j, "rows"), limits), false);
  }
  if (kind == "rees") {
    reject_unknown_keys(j, {"kind", "rows"});
    return done(rees_monoid(get_matrix(j, "rows"), limits), true);
  }
  if (kind == "inverse") {
    reject_unknown_keys(j, {"kind", "n"});
    return done(symmetric_inverse(get_count(j, "n", 64), limits), true);
  }
  if (kind == "partial") {
    reject_unknown_keys(j, {"kind", "n"});
    return done(partial_transformations(get_count(j, "n", 64), limits), true);
  }
  if (kind == "affine") {
    reject_unknown_keys(j, {"kind", "p"});
    return done(affine_monoid(static_cast<uint32_t>(get_count(j, "p", 1u << 20)), limits), false);
  }
  if (kind == "boolean-lattice") {
    reject_unknown_keys(j, {"kind", "set_size"});
    return done(lattice_endos(get_count(j, "set_size", 16), limits), false);
  }
  if (kind == "example-0tran") {
    reject_unknown_keys(j, {"kind", "n"});
    return done(example_0_tran(get_count(j, "n", 64), limits), true);
  }
  fail(Errc::Parse, "unknown structure kind '" + kind + "'");
}

namespace {

json condition_json(const ConditionResult& c) {
  json j;
  j["status"] = cond_status_name(c.status);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

json report_json_object(const MonoidData& m, const CheckReport& rep) {
  json j;
  j["field"] = rep.field.name();
  j["degree"] = m.degree();
  j["monoid_size"] = m.size();
  j["path"] = rep.path;
  j["transitivity"] = rep.transitivity;
  json conds;
  conds["c1_constant_map"] = condition_json(rep.c1);
  conds["c2_unique_minimal_regular_j"] = condition_json(rep.c2);
  conds["c3_group_module_simple"] = condition_json(rep.c3);
  conds["c4_incidence_rank"] = condition_json(rep.c4);
  conds["c5_gamma_connected"] = condition_json(rep.c5);
  j["conditions"] = conds;
  if (!rep.group_condition_method.empty())
    j["group_condition_method"] = rep.group_condition_method;
  json w;
  if (rep.constant_witness) w["constant_element"] = *rep.constant_witness;
  if (rep.j_class_witness) w["j_class"] = *rep.j_class_witness;
  if (rep.minimal_j_rank) w["j_class_rank"] = *rep.minimal_j_rank;
  if (rep.apex_idempotent) w["apex_idempotent"] = *rep.apex_idempotent;
  if (rep.incidence_rank) w["incidence_rank"] = *rep.incidence_rank;
  if (rep.incidence_blocks) w["incidence_blocks"] = *rep.incidence_blocks;
  if (rep.gamma_components) w["gamma_components"] = *rep.gamma_components;
  if (rep.gamma_is_star) w["gamma_is_star"] = *rep.gamma_is_star;
  if (rep.group_trivial) w["maximal_subgroup_trivial"] = *rep.group_trivial;
  if (rep.sink) w["sink"] = *rep.sink;
  if (rep.non_transitive_point) {
    w["non_transitive_point"] = *rep.non_transitive_point;
    w["non_transitive_orbit"] = *rep.non_transitive_orbit;
  }
  if (!w.empty()) j["witnesses"] = w;
  j["final"] = verdict_name(rep.final);
  if (rep.oracle) {
    json o;
    o["ran"] = true;
    o["final"] = verdict_name(rep.oracle->verdict);
    o["method"] = rep.oracle->method;
    o["brute_force"] = rep.oracle->brute_ran;
    if (!rep.oracle->witness.empty()) {
      o["witness_dim"] = rep.oracle->witness.size();
      json basis = json::array();
      for (const Vector& v : rep.oracle->witness) {
        json row = json::array();
        for (const Scalar& s : v) row.push_back(s.str());
        basis.push_back(row);
      }
      o["witness_basis"] = basis;
    }
    j["oracle"] = o;
  } else if (!rep.field.computable()) {
    j["oracle"] = {{"ran", false}, {"reason", "field not computable; delegation documented"}};
  }
  if (rep.agreement) j["agreement"] = *rep.agreement;
  return j;
}

}  // namespace

std::string report_to_json(const MonoidData& m, const CheckReport& rep) {
  return report_json_object(m, rep).dump(2) + "\n";
}

std::string report_to_text(const MonoidData& m, const CheckReport& rep) {
  std::ostringstream out;
  out << "augmentation module over " << rep.field.name() << " for a monoid of size " << m.size()
      << " on " << m.degree() << " points\n";
  out << "path: " << rep.path << " (" << rep.transitivity << ")\n";
  auto line = [&](const char* name, const ConditionResult& c) {
    out << "  " << name << ": " << cond_status_name(c.status);
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  };
  line("(1) constant map", rep.c1);
  line("(2) unique minimal regular J-class", rep.c2);
  line("(3) group module simple", rep.c3);
  line("(4) incidence rank full", rep.c4);
  line("(5) graph connected", rep.c5);
  if (!rep.group_condition_method.empty())
    out << "group condition method: " << rep.group_condition_method << "\n";
  if (rep.oracle) {
    out << "oracle: " << verdict_name(rep.oracle->verdict) << " via " << rep.oracle->method;
    if (rep.oracle->brute_ran) out << " (brute force confirmed)";
    out << "\n";
  }
  if (rep.agreement) out << "agreement: " << (*rep.agreement ? "true" : "false") << "\n";
  out << "final: " << verdict_name(rep.final) << "\n";
  return out.str();
}

namespace {

json green_json_object(const MonoidData& m, const GreenData& g) {
  json j;
  j["degree"] = m.degree();
  j["size"] = m.size();
  j["counts"] = {{"r_classes", g.n_r},
                 {"l_classes", g.n_l},
                 {"h_classes", g.n_h},
                 {"j_classes", g.n_j},
                 {"idempotents", g.idempotents.size()}};
  json classes = json::array();
  for (uint32_t c = 0; c < g.n_j; ++c) {
    std::set<uint32_t> r_ids, l_ids;
    for (uint32_t v : g.j_members[c]) {
      r_ids.insert(g.r_class[v]);
      l_ids.insert(g.l_class[v]);
    }
    json cls;
    cls["id"] = c;
    cls["rank"] = g.j_rank[c];
    cls["size"] = g.j_members[c].size();
    cls["regular"] = static_cast<bool>(g.j_regular[c]);
    cls["idempotents"] = g.j_idempotents[c].size();
    cls["r_classes"] = r_ids.size();
    cls["l_classes"] = l_ids.size();
    cls["minimal_ideal"] = c == g.minimal_j;
    classes.push_back(cls);
  }
  j["j_classes"] = classes;
  return j;
}

}  // namespace

std::string green_report_json(const MonoidData& m, const GreenData& g) {
  return green_json_object(m, g).dump(2) + "\n";
}

std::string green_report_text(const MonoidData& m, const GreenData& g) {
  std::ostringstream out;
  out << "monoid of size " << m.size() << " on " << m.degree() << " points: " << g.n_j
      << " J-classes, " << g.n_r << " R-classes, " << g.n_l << " L-classes, " << g.n_h
      << " H-classes, " << g.idempotents.size() << " idempotents\n";
  for (uint32_t c = 0; c < g.n_j; ++c) {
    out << "  J" << c << ": rank " << g.j_rank[c] << ", size " << g.j_members[c].size()
        << (g.j_regular[c] ? ", regular" : ", not regular") << ", "
        << g.j_idempotents[c].size() << " idempotents";
    if (c == g.minimal_j) out << ", minimal ideal";
    out << "\n";
  }
  return out.str();
}

}  // namespace augcheck
