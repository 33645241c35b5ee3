#include "augcheck/transformation.hpp"

#include <algorithm>

namespace augcheck {

Transformation::Transformation(std::vector<uint32_t> image) : img_(std::move(image)) {
  if (img_.empty()) fail(Errc::BadMatrix, "transformation needs degree >= 1");
  for (uint32_t v : img_)
    if (v >= img_.size()) fail(Errc::BadMatrix, "image point out of range");
}

Transformation Transformation::identity(size_t degree) {
  std::vector<uint32_t> img(degree);
  for (size_t i = 0; i < degree; ++i) img[i] = static_cast<uint32_t>(i);
  return Transformation(std::move(img));
}

Transformation Transformation::constant(size_t degree, uint32_t target) {
  return Transformation(std::vector<uint32_t>(degree, target));
}

Transformation Transformation::compose(const Transformation& inner) const {
  if (degree() != inner.degree()) fail(Errc::DimensionMismatch, "composing different degrees");
  std::vector<uint32_t> img(degree());
  for (size_t i = 0; i < degree(); ++i) img[i] = img_[inner.img_[i]];
  return Transformation(std::move(img));
}

size_t Transformation::rank() const { return image_set().size(); }

std::vector<uint32_t> Transformation::image_set() const {
  std::vector<uint32_t> v(img_);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool Transformation::is_idempotent() const { return compose(*this) == *this; }

}  // namespace augcheck
