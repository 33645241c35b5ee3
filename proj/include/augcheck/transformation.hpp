#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "augcheck/error.hpp"

namespace augcheck {

/// A total self-map of the point set {0, .., degree-1}.  Partial maps are
/// encoded as total maps fixing a sink point (index 0 by convention).
class Transformation {
 public:
  explicit Transformation(std::vector<uint32_t> image);
  static Transformation identity(size_t degree);
  static Transformation constant(size_t degree, uint32_t target);

  size_t degree() const { return img_.size(); }
  uint32_t operator()(uint32_t point) const { return img_[point]; }
  std::span<const uint32_t> image_array() const { return img_; }

  /// The monoid product: (a * b)(x) = a(b(x)), b applied first.
  Transformation compose(const Transformation& inner) const;

  size_t rank() const;  // number of distinct image points
  bool is_idempotent() const;
  std::vector<uint32_t> image_set() const;  // sorted distinct values

  friend bool operator==(const Transformation& a, const Transformation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Transformation& a, const Transformation& b) { return !(a == b); }

 private:
  std::vector<uint32_t> img_;
};

struct TransformationHash {
  size_t operator()(const Transformation& t) const noexcept {
    size_t h = 0x9e3779b97f4a7c15ull;
    for (uint32_t v : t.image_array()) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace augcheck
