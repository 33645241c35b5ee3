#pragma once

#include <optional>
#include <string>
#include <vector>

#include "augcheck/action.hpp"
#include "augcheck/green.hpp"
#include "augcheck/linalg.hpp"
#include "augcheck/monoid.hpp"
#include "augcheck/predicates.hpp"

namespace augcheck {

enum class Verdict { Simple, NotSimple, Undecidable };
enum class CondStatus { Holds, Fails, NotApplicable };

const char* verdict_name(Verdict v);
const char* cond_status_name(CondStatus s);

struct ConditionResult {
  CondStatus status = CondStatus::NotApplicable;
  std::string detail;
};

struct OracleResult {
  Verdict verdict = Verdict::Undecidable;
  std::string method;
  std::vector<Vector> witness;  // proper invariant subspace when not simple
  bool brute_ran = false;
};

/// Per-condition verdicts with witnesses, plus the final simplicity verdict.
struct CheckReport {
  FieldTag field = FieldTag::rationals();
  std::string path;          // "general" | "group" | "zero-transitive"
  std::string transitivity;  // "transitive" | "zero-transitive" | "neither"
  ConditionResult c1, c2, c3, c4, c5;
  std::string group_condition_method;  // "2-transitivity" | "2-homogeneity" | "oracle" | "dimension"
  Verdict final = Verdict::Undecidable;

  std::optional<uint32_t> constant_witness;  // element id of a rank-1 map
  std::optional<uint32_t> j_class_witness;   // the class J of condition (2)
  std::optional<uint32_t> apex_idempotent;
  std::optional<size_t> incidence_rank;
  std::optional<size_t> incidence_blocks;
  std::optional<size_t> gamma_components;
  std::optional<uint32_t> non_transitive_point;  // trichotomy witness
  std::optional<std::vector<uint32_t>> non_transitive_orbit;

  std::optional<uint32_t> sink;          // zero-transitive path
  std::optional<size_t> minimal_j_rank;  // rank of the J-class of condition (2)
  std::optional<bool> gamma_is_star;
  std::optional<bool> group_trivial;

  std::optional<OracleResult> oracle;
  std::optional<bool> agreement;

  bool simple() const { return final == Verdict::Simple; }
};

/// Five-condition checker for a non-group transformation monoid.
CheckReport check_conditions(const MonoidData& m, const GreenData& g, const FieldTag& field);

/// Simplicity of the augmentation module of a permutation group action:
/// 2-transitivity over C, 2-homogeneity over R, the exact irreducibility
/// oracle over GF(p) and Q.  `method_out` reports which criterion decided.
bool group_aug_simple(const MonoidData& m, const std::vector<uint32_t>& group_ids,
                      const std::vector<uint32_t>& points, const FieldTag& field,
                      std::string* method_out = nullptr);

/// Independent ground truth: irreducibility of the full augmentation action.
OracleResult oracle_simple(const MonoidData& m, const FieldTag& field,
                           const NortonOptions& opts = {},
                           uint64_t brute_bound = uint64_t(1) << 20);

/// Specialized checker for 0-transitive monoids: simple iff the unique
/// minimal nonzero J-class has rank 2 and condition (4) holds.
CheckReport check_0_transitive(const MonoidData& m, const GreenData& g, const FieldTag& field);

/// Verdict for the partial transformation module F.Lambda of a monoid of
/// encoded partial maps (totals fixing the sink at index 0).
CheckReport partial_module_simple(const MonoidData& m, const GreenData& g, const FieldTag& field);

/// Auto-detecting driver: group path, 0-transitive path, or the general
/// five-condition checker.
CheckReport decide(const MonoidData& m, const GreenData& g, const FieldTag& field);
CheckReport decide(const MonoidData& m, const FieldTag& field);

/// Structural consequences of 2-transitivity for non-groups; a property-test
/// harness, not a decision path.
struct TwoTransitiveReport {
  bool has_constant = false;
  bool unique_minimal_regular = false;
  bool group_2_transitive_on_image = false;
  bool gamma_complete = false;
  uint32_t j_class = 0;
  bool all_hold() const {
    return has_constant && unique_minimal_regular && group_2_transitive_on_image && gamma_complete;
  }
};
TwoTransitiveReport two_transitive_consequences(const MonoidData& m, const GreenData& g);

}  // namespace augcheck
