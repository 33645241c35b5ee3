#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "augcheck/transformation.hpp"

namespace augcheck {

struct Limits {
  size_t max_elements = 2'000'000;
  size_t max_degree = 12;
};

/// A transformation monoid enumerated by breadth-first closure under right
/// multiplication by the generators.  Element 0 is always the identity;
/// every element carries the generator word that produces it.
class MonoidData {
 public:
  MonoidData(size_t degree, std::vector<Transformation> generators,
             const Limits& limits = Limits());

  size_t degree() const { return degree_; }
  size_t size() const { return elements_.size(); }
  const std::vector<Transformation>& generators() const { return generators_; }
  const std::vector<Transformation>& elements() const { return elements_; }
  const Transformation& element(uint32_t id) const { return elements_[id]; }

  std::optional<uint32_t> index_of(const Transformation& t) const;

  /// right_product(x, g) = index of elements[x] * generators[g].
  uint32_t right_product(uint32_t elt, uint32_t gen) const { return right_[elt][gen]; }
  /// left_product(x, g) = index of generators[g] * elements[x].
  uint32_t left_product(uint32_t elt, uint32_t gen) const { return left_[elt][gen]; }
  /// Index of the product elements[a] * elements[b].
  uint32_t product(uint32_t a, uint32_t b) const;

  const std::vector<uint32_t>& word_of(uint32_t elt) const { return words_[elt]; }
  Transformation evaluate_word(const std::vector<uint32_t>& word) const;

  std::vector<uint32_t> idempotent_ids() const;
  bool is_group() const;  // all elements permutations

 private:
  size_t degree_;
  std::vector<Transformation> generators_;
  std::vector<Transformation> elements_;
  std::vector<std::vector<uint32_t>> right_;
  std::vector<std::vector<uint32_t>> left_;
  std::vector<std::vector<uint32_t>> words_;
  std::unordered_map<Transformation, uint32_t, TransformationHash> index_;
};

/// Breadth-first closure of the generators, honouring the element cap.
MonoidData closure(size_t degree, std::vector<Transformation> generators,
                   const Limits& limits = Limits());

}  // namespace augcheck
