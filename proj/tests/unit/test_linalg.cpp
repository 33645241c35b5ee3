#include <doctest.h>

#include <functional>

#include "augcheck/action.hpp"
#include "augcheck/linalg.hpp"
#include "augcheck/zoo.hpp"

using namespace augcheck;

namespace {

// Tiny deterministic generator for property-style checks.
struct Lcg {
  uint64_t state;
  explicit Lcg(uint64_t seed) : state(seed) {}
  uint32_t next(uint32_t bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<uint32_t>((state >> 33) % bound);
  }
};

Matrix random_int_matrix(const FieldTag& f, size_t rows, size_t cols, Lcg& rng, long span) {
  Matrix m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      m.set(i, j, Scalar::from_int(f, static_cast<long>(rng.next(2 * span + 1)) - span));
  return m;
}

bool expect_error(Errc code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("field tags validate and parse") {
  CHECK(FieldTag::gf(2).prime() == 2);
  CHECK(FieldTag::gf(2147483647).prime() == 2147483647u);  // mersenne prime near 2^31
  CHECK(expect_error(Errc::BadMatrix, [] { FieldTag::gf(4); }));
  CHECK(expect_error(Errc::BadMatrix, [] { FieldTag::gf(1); }));
  CHECK(FieldTag::parse("gf:7") == FieldTag::gf(7));
  CHECK(FieldTag::parse("q") == FieldTag::rationals());
  CHECK(FieldTag::parse("r") == FieldTag::reals());
  CHECK(FieldTag::parse("c") == FieldTag::complexes());
  CHECK(expect_error(Errc::Parse, [] { FieldTag::parse("gf:6"); }) == false);  // prime check fires
  CHECK(expect_error(Errc::BadMatrix, [] { FieldTag::parse("gf:6"); }));
  CHECK(expect_error(Errc::Parse, [] { FieldTag::parse("f4"); }));
  CHECK_FALSE(FieldTag::reals().computable());
  CHECK(FieldTag::reals().delegate_for_rank() == FieldTag::rationals());
}

TEST_CASE("scalars stay canonical") {
  Scalar half = Scalar::from_fraction(2, 4);
  CHECK(half.fraction() == Rational(1, 2));
  Scalar negative = Scalar::from_fraction(1, -2);
  CHECK(negative.fraction() == Rational(-1, 2));
  CHECK((half + negative).is_zero());

  FieldTag f5 = FieldTag::gf(5);
  Scalar a = Scalar::from_int(f5, 7);
  CHECK(a.residue() == 2);
  CHECK((a * Scalar::from_int(f5, 3)).residue() == 1);
  CHECK(a.inverse().residue() == 3);
  CHECK((-Scalar::from_int(f5, 2)).residue() == 3);
}

TEST_CASE("no matrices over the representation-only tags") {
  CHECK(expect_error(Errc::FieldNotComputable, [] { Matrix(FieldTag::reals(), 2, 2); }));
  CHECK(expect_error(Errc::FieldNotComputable, [] { Matrix(FieldTag::complexes(), 1, 1); }));
}

TEST_CASE("rank of small matrices") {
  CHECK(rank(Matrix::identity(FieldTag::gf(2), 4)) == 4);
  Matrix m = Matrix::from_int_rows(FieldTag::rationals(), {{1, 1}, {1, 0}, {0, 1}, {0, 0}});
  CHECK(rank(m) == 2);
  // the incidence matrix of the singleton system on 5 points is a permuted identity
  CHECK(rank(Matrix::identity(FieldTag::rationals(), 5)) == 5);
}

TEST_CASE("null spaces with an enumeration oracle") {
  CHECK(null_space(Matrix(FieldTag::gf(3), 2, 2)).size() == 2);
  CHECK(null_space(Matrix::identity(FieldTag::rationals(), 3)).empty());

  Matrix row = Matrix::from_int_rows(FieldTag::gf(2), {{1, 1}});
  std::vector<Vector> basis = null_space(row);
  REQUIRE(basis.size() == 1);
  // oracle: of the four GF(2) vectors exactly (0,0) and (1,1) are killed
  std::vector<Vector> killed;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Vector v{Scalar::from_int(FieldTag::gf(2), x), Scalar::from_int(FieldTag::gf(2), y)};
      if (is_zero_vector(row.apply(v)) && !is_zero_vector(v)) killed.push_back(v);
    }
  REQUIRE(killed.size() == 1);
  CHECK(basis[0] == killed[0]);
}

TEST_CASE("rank plus nullity is the column count") {
  for (const FieldTag& f : {FieldTag::gf(2), FieldTag::gf(3), FieldTag::gf(5), FieldTag::rationals()}) {
    Lcg rng(42);
    for (int trial = 0; trial < 25; ++trial) {
      size_t rows = 1 + rng.next(6), cols = 1 + rng.next(6);
      Matrix m = random_int_matrix(f, rows, cols, rng, 3);
      CHECK(rank(m) + null_space(m).size() == cols);
      for (const Vector& v : null_space(m)) CHECK(is_zero_vector(m.apply(v)));
    }
  }
}

TEST_CASE("0/1 matrices: GF(p) rank never exceeds the rational rank") {
  Lcg rng(7);
  bool equality_seen = false;
  for (int trial = 0; trial < 30; ++trial) {
    size_t rows = 2 + rng.next(5), cols = 2 + rng.next(5);
    std::vector<std::vector<long>> entries(rows, std::vector<long>(cols));
    for (auto& r : entries)
      for (long& x : r) x = rng.next(2);
    size_t q_rank = rank(Matrix::from_int_rows(FieldTag::rationals(), entries));
    bool some_prime_matches = false;
    for (uint32_t p : {2u, 3u, 5u}) {
      size_t p_rank = rank(Matrix::from_int_rows(FieldTag::gf(p), entries));
      CHECK(p_rank <= q_rank);
      if (p_rank == q_rank) some_prime_matches = true;
    }
    CHECK(some_prime_matches);
    equality_seen |= some_prime_matches;
  }
  CHECK(equality_seen);
}

TEST_CASE("spin basics") {
  FieldTag q = FieldTag::rationals();
  std::vector<Matrix> id_only{Matrix::identity(q, 3)};
  CHECK(spin(zero_vector(q, 3), id_only).empty());
  std::vector<Vector> one = spin(unit_vector(q, 3, 0), id_only);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == unit_vector(q, 3, 0));
  CHECK(expect_error(Errc::DimensionMismatch, [&] { spin(zero_vector(q, 2), id_only); }));
}

TEST_CASE("spinning a difference vector fills the augmentation module") {
  // the 0-transitive generator family on 3 points, restricted to Aug
  MonoidData m = example_0_tran(2);
  ActionModule aug = aug_module(omega_module(m, FieldTag::rationals()));
  Vector seed = zero_vector(aug.field, aug.dim);
  seed[0] = -Scalar::one(aug.field);  // the vector w_0 - w_1
  std::vector<Vector> basis = spin(seed, aug.action);
  CHECK(basis.size() == 2);

  // brute-force closure oracle: repeatedly apply every element matrix
  RowSpace space(aug.field, aug.dim);
  space.insert(seed);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const Vector& b : std::vector<Vector>(space.basis()))
      for (const Matrix& a : aug.action)
        if (space.insert(a.apply(b))) grew = true;
  }
  CHECK(space.dim() == basis.size());
}

TEST_CASE("spin output is closed under the actions") {
  MonoidData m = example_0_tran(2);
  ActionModule aug = aug_module(omega_module(m, FieldTag::gf(3)));
  RowSpace space = spin_space({unit_vector(aug.field, aug.dim, 0)}, aug.action);
  for (const Vector& b : space.basis())
    for (const Matrix& a : aug.action) CHECK(space.contains(a.apply(b)));
}

TEST_CASE("irreducibility oracle on groups and trivial cases") {
  FieldTag q = FieldTag::rationals();
  CHECK(is_irreducible({Matrix::identity(q, 1)}, 1).irreducible);

  std::vector<Matrix> id2{Matrix::identity(FieldTag::gf(2), 2)};
  IrredResult r = is_irreducible(id2, 2);
  CHECK_FALSE(r.irreducible);
  REQUIRE(r.witness.size() == 1);

  // cyclic group of order 4 acting regularly: the rational augmentation splits
  Matrix cycle = aug_matrix(Transformation({1, 2, 3, 0}), q);
  IrredResult c4 = is_irreducible({cycle}, 3);
  CHECK_FALSE(c4.irreducible);
  // witness is a proper nonzero invariant subspace
  REQUIRE(!c4.witness.empty());
  CHECK(c4.witness.size() < 3);
  RowSpace w(q, 3);
  for (const Vector& v : c4.witness) w.insert(v);
  for (const Vector& v : c4.witness) CHECK(w.contains(cycle.apply(v)));

  // natural S3: the rational augmentation is the 2-dimensional simple module
  std::vector<Matrix> s3{aug_matrix(Transformation({1, 2, 0}), q),
                         aug_matrix(Transformation({1, 0, 2}), q)};
  CHECK(is_irreducible(s3, 2).irreducible);
}

TEST_CASE("brute force oracle matches and respects its bound") {
  std::vector<Matrix> id2{Matrix::identity(FieldTag::gf(2), 2)};
  CHECK_FALSE(brute_force_irreducible_gfp(id2, 2));
  CHECK(expect_error(Errc::BoundExceeded, [&] { brute_force_irreducible_gfp(id2, 2, 3); }));
  CHECK(expect_error(Errc::FieldNotComputable, [] {
    brute_force_irreducible_gfp({Matrix::identity(FieldTag::rationals(), 2)}, 2);
  }));

  MonoidData path3 = end_graph(Graph::path(3));
  ActionModule aug = aug_module(omega_module(path3, FieldTag::gf(2)));
  CHECK(brute_force_irreducible_gfp(aug.action, aug.dim));
  CHECK(is_irreducible(aug.action, aug.dim).irreducible);
}

TEST_CASE("a field acting on itself is decided without any singular pivot") {
  // the regular 5-cycle: the enveloping algebra of the 4-dimensional
  // augmentation action is a field, so no word combination is singular
  Matrix cycle = aug_matrix(Transformation({1, 2, 3, 4, 0}), FieldTag::rationals());
  IrredResult r = is_irreducible({cycle}, 4);
  CHECK(r.irreducible);
  CHECK(r.method == "basis-spin");
}

namespace {

// 2x2 matrices over a quadratic extension, embedded as 4x4 blocks: the
// natural module is simple but every singular algebra element has even
// nullity, so the nullity-1 shortcut never applies.
std::vector<Matrix> quadratic_matrix_algebra_generators(const FieldTag& f, long d) {
  Matrix s(f, 4, 4);  // multiplication by the square root of d on both columns
  for (size_t block : {size_t(0), size_t(2)}) {
    s.set(block, block + 1, Scalar::from_int(f, d));
    s.set(block + 1, block, Scalar::one(f));
  }
  Matrix e12(f, 4, 4), e21(f, 4, 4);
  for (size_t i = 0; i < 2; ++i) {
    e12.set(i, 2 + i, Scalar::one(f));
    e21.set(2 + i, i, Scalar::one(f));
  }
  return {s, e12, e21};
}

}  // namespace

TEST_CASE("even-nullity pivots are settled by condensation over the rationals") {
  std::vector<Matrix> gens =
      quadratic_matrix_algebra_generators(FieldTag::rationals(), 2);
  IrredResult r = is_irreducible(gens, 4);
  CHECK(r.irreducible);
  CHECK(r.method == "condensation-simple");
}

TEST_CASE("even-nullity pivots are settled by enumeration over GF(2)") {
  // companion of the quadratic irreducible over GF(2): x^2 + x + 1
  FieldTag f = FieldTag::gf(2);
  Matrix s(f, 4, 4);
  for (size_t block : {size_t(0), size_t(2)}) {
    s.set(block, block + 1, Scalar::one(f));
    s.set(block + 1, block, Scalar::one(f));
    s.set(block + 1, block + 1, Scalar::one(f));
  }
  Matrix e12(f, 4, 4), e21(f, 4, 4);
  for (size_t i = 0; i < 2; ++i) {
    e12.set(i, 2 + i, Scalar::one(f));
    e21.set(2 + i, i, Scalar::one(f));
  }
  IrredResult r = is_irreducible({s, e12, e21}, 4);
  CHECK(r.irreducible);
  CHECK(r.method == "norton-null-enumeration");
  CHECK(brute_force_irreducible_gfp({s, e12, e21}, 4));
}

TEST_CASE("oracle matches brute force on random GF action sets") {
  Lcg rng(314159);
  for (int trial = 0; trial < 60; ++trial) {
    uint32_t p = trial % 2 == 0 ? 2 : 3;
    FieldTag f = FieldTag::gf(p);
    size_t dim = 2 + rng.next(3);
    size_t count = 1 + rng.next(3);
    std::vector<Matrix> actions;
    for (size_t k = 0; k < count; ++k) {
      Matrix a(f, dim, dim);
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) a.set(i, j, Scalar::from_int(f, rng.next(p)));
      actions.push_back(std::move(a));
    }
    IrredResult r = is_irreducible(actions, dim);
    CHECK(r.irreducible == brute_force_irreducible_gfp(actions, dim));
    if (!r.irreducible) {
      REQUIRE(!r.witness.empty());
      RowSpace w(f, dim);
      for (const Vector& v : r.witness) w.insert(v);
      CHECK(w.dim() < dim);
      for (const Vector& v : w.basis())
        for (const Matrix& a : actions) CHECK(w.contains(a.apply(v)));
    }
  }
}

TEST_CASE("exact operations are deterministic") {
  Lcg rng(11);
  Matrix m = random_int_matrix(FieldTag::rationals(), 5, 4, rng, 9);
  CHECK(rank(m) == rank(m));
  std::vector<Vector> n1 = null_space(m), n2 = null_space(m);
  CHECK(n1 == n2);
  MonoidData ex = example_0_tran(2);
  ActionModule aug = aug_module(omega_module(ex, FieldTag::rationals()));
  IrredResult a = is_irreducible(aug.action, aug.dim);
  IrredResult b = is_irreducible(aug.action, aug.dim);
  CHECK(a.irreducible == b.irreducible);
  CHECK(a.witness == b.witness);
  CHECK(a.method == b.method);
}
