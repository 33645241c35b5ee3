#pragma once

#include <string>
#include <vector>

#include "augcheck/monoid.hpp"
#include "augcheck/zoo.hpp"

namespace corpus {

struct Entry {
  std::string name;
  augcheck::MonoidData monoid;
};

/// The shared verification corpus: endomorphism monoids of small graphs and
/// posets, the matrix-driven families, partial-map monoids and a few groups.
const std::vector<Entry>& shared_corpus();

augcheck::ZeroOneMatrix rank2_rees_matrix();          // 3x2, rank 2 over every field
augcheck::ZeroOneMatrix identity_matrix(size_t n);    // n x n
augcheck::MonoidData s3_natural();
augcheck::MonoidData c4_regular();
augcheck::MonoidData identity_only(size_t degree);

}  // namespace corpus
