#include "augcheck/monoid.hpp"

#include <string>

namespace augcheck {

MonoidData::MonoidData(size_t degree, std::vector<Transformation> generators, const Limits& limits)
    : degree_(degree) {
  if (degree == 0) fail(Errc::BadMatrix, "degree must be at least 1");
  for (const Transformation& g : generators)
    if (g.degree() != degree) fail(Errc::DimensionMismatch, "generator degree mismatch");
  // deduplicate generators, preserving order
  for (Transformation& g : generators) {
    bool dup = false;
    for (const Transformation& h : generators_)
      if (h == g) {
        dup = true;
        break;
      }
    if (!dup) generators_.push_back(std::move(g));
  }

  elements_.push_back(Transformation::identity(degree));
  index_.emplace(elements_[0], 0);
  words_.push_back({});
  for (size_t frontier = 0; frontier < elements_.size(); ++frontier) {
    right_.emplace_back(generators_.size());
    for (uint32_t g = 0; g < generators_.size(); ++g) {
      Transformation prod = elements_[frontier].compose(generators_[g]);
      auto it = index_.find(prod);
      if (it == index_.end()) {
        if (elements_.size() >= limits.max_elements)
          fail(Errc::SizeBound,
               "monoid closure exceeds the element cap of " + std::to_string(limits.max_elements));
        uint32_t id = static_cast<uint32_t>(elements_.size());
        index_.emplace(prod, id);
        elements_.push_back(std::move(prod));
        std::vector<uint32_t> word = words_[frontier];
        word.push_back(g);
        words_.push_back(std::move(word));
        right_[frontier][g] = id;
      } else {
        right_[frontier][g] = it->second;
      }
    }
  }
  left_.resize(elements_.size(), std::vector<uint32_t>(generators_.size()));
  for (uint32_t x = 0; x < elements_.size(); ++x)
    for (uint32_t g = 0; g < generators_.size(); ++g) {
      Transformation prod = generators_[g].compose(elements_[x]);
      left_[x][g] = index_.at(prod);
    }
}

std::optional<uint32_t> MonoidData::index_of(const Transformation& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

uint32_t MonoidData::product(uint32_t a, uint32_t b) const {
  return index_.at(elements_[a].compose(elements_[b]));
}

Transformation MonoidData::evaluate_word(const std::vector<uint32_t>& word) const {
  Transformation t = Transformation::identity(degree_);
  for (uint32_t g : word) t = t.compose(generators_[g]);
  return t;
}

std::vector<uint32_t> MonoidData::idempotent_ids() const {
  std::vector<uint32_t> out;
  for (uint32_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].is_idempotent()) out.push_back(i);
  return out;
}

bool MonoidData::is_group() const {
  for (const Transformation& t : elements_)
    if (t.rank() != degree_) return false;
  return true;
}

MonoidData closure(size_t degree, std::vector<Transformation> generators, const Limits& limits) {
  return MonoidData(degree, std::move(generators), limits);
}

}  // namespace augcheck
