#include "augcheck/linalg.hpp"

#include <optional>
#include <string>
#include <unordered_set>

namespace augcheck {

namespace {

void require_computable(const Matrix& m) {
  if (!m.field().computable())
    fail(Errc::FieldNotComputable, "exact elimination needs GF(p) or Q, got " + m.field().name());
}

RowSpace row_space(const Matrix& m) {
  require_computable(m);
  RowSpace space(m.field(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    Vector row(m.cols(), Scalar::zero(m.field()));
    for (size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
    space.insert(std::move(row));
  }
  return space;
}

void check_actions(const std::vector<Matrix>& actions, size_t dim) {
  if (actions.empty()) fail(Errc::DimensionMismatch, "no action matrices");
  for (const Matrix& a : actions) {
    if (a.rows() != dim || a.cols() != dim)
      fail(Errc::DimensionMismatch, "action matrices must be square of the module dimension");
    if (a.field() != actions.front().field())
      fail(Errc::DimensionMismatch, "action matrices over mixed fields");
  }
  require_computable(actions.front());
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

Matrix unflatten(const Vector& v, const FieldTag& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.set(i, j, v[i * n + j]);
  return m;
}

std::vector<Matrix> transpose_all(const std::vector<Matrix>& actions) {
  std::vector<Matrix> out;
  out.reserve(actions.size());
  for (const Matrix& a : actions) out.push_back(a.transpose());
  return out;
}

}  // namespace

size_t rank(const Matrix& m) { return row_space(m).dim(); }

size_t nullity(const Matrix& m) { return m.cols() - rank(m); }

std::vector<Vector> null_space(const Matrix& m) {
  RowSpace rref = row_space(m);
  const FieldTag& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  std::vector<size_t> pivot_of_row(rref.dim());
  {
    const auto& rows = rref.basis();
    for (size_t i = 0; i < rows.size(); ++i) {
      size_t p = 0;
      while (p < m.cols() && rows[i][p].is_zero()) ++p;
      pivot_of_row[i] = p;
      is_pivot[p] = true;
    }
  }
  std::vector<Vector> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = Scalar::one(f);
    for (size_t i = 0; i < rref.dim(); ++i) v[pivot_of_row[i]] = -rref.basis()[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RowSpace spin_space(const std::vector<Vector>& seeds, const std::vector<Matrix>& actions) {
  if (actions.empty()) fail(Errc::DimensionMismatch, "no action matrices");
  size_t dim = actions.front().rows();
  check_actions(actions, dim);
  for (const Vector& s : seeds)
    if (s.size() != dim) fail(Errc::DimensionMismatch, "seed length differs from action dimension");
  RowSpace space(actions.front().field(), dim);
  for (const Vector& s : seeds) space.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Vector> snapshot = space.basis();
    for (const Vector& b : snapshot)
      for (const Matrix& a : actions)
        if (space.insert(a.apply(b))) grew = true;
  }
  return space;
}

std::vector<Vector> spin(const Vector& seed, const std::vector<Matrix>& actions) {
  return spin_space({seed}, actions).basis();
}

std::vector<Vector> annihilator(const RowSpace& dual_subspace) {
  const auto& rows = dual_subspace.basis();
  FieldTag f = rows.empty() ? FieldTag::rationals() : rows.front().front().field();
  Matrix m(f, rows.size(), dual_subspace.ambient_dim());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < dual_subspace.ambient_dim(); ++j) m.set(i, j, rows[i][j]);
  return null_space(m);
}

std::vector<Matrix> matrix_algebra_basis(const std::vector<Matrix>& actions, size_t dim) {
  check_actions(actions, dim);
  const FieldTag f = actions.front().field();
  RowSpace space(f, dim * dim);
  space.insert(flatten(Matrix::identity(f, dim)));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Vector> snapshot = space.basis();
    for (const Vector& row : snapshot) {
      Matrix m = unflatten(row, f, dim);
      for (const Matrix& a : actions)
        if (space.insert(flatten(m.multiply(a)))) grew = true;
    }
  }
  std::vector<Matrix> out;
  out.reserve(space.dim());
  for (const Vector& row : space.basis()) out.push_back(unflatten(row, f, dim));
  return out;
}

namespace {

// Candidate pivots: words over the actions in length-lex order (starting from
// the identity), then pairwise differences and sums.
std::vector<Matrix> candidate_words(const std::vector<Matrix>& actions, size_t dim,
                                    const NortonOptions& opts) {
  const FieldTag f = actions.front().field();
  std::vector<Matrix> words;
  std::unordered_set<std::string> seen;
  auto push = [&](Matrix m) {
    if (words.size() >= opts.word_count_cap) return false;
    if (seen.insert(m.key()).second) {
      words.push_back(std::move(m));
      return true;
    }
    return false;
  };
  push(Matrix::identity(f, dim));
  size_t level_begin = 0;
  for (size_t len = 1; len <= opts.word_length_cap && words.size() < opts.word_count_cap; ++len) {
    size_t level_end = words.size();
    for (size_t i = level_begin; i < level_end && words.size() < opts.word_count_cap; ++i)
      for (const Matrix& a : actions) {
        if (words.size() >= opts.word_count_cap) break;
        push(words[i].multiply(a));
      }
    if (words.size() == level_end) break;  // no new words at this length
    level_begin = level_end;
  }
  return words;
}

struct PivotSearch {
  std::vector<Matrix> minimal;  // candidates at the current minimal nullity
  size_t best_nullity = SIZE_MAX;
  static constexpr size_t kKeep = 16;

  bool found() const { return !minimal.empty(); }

  // Returns true once a nullity-1 pivot is found.
  bool consider(const Matrix& m, size_t dim) {
    if (m.is_zero()) return false;
    size_t nul = dim - rank(m);
    if (nul == 0 || nul >= dim) return false;
    if (nul < best_nullity) {
      best_nullity = nul;
      minimal.clear();
    }
    if (nul == best_nullity && minimal.size() < kKeep) minimal.push_back(m);
    return nul == 1;
  }
};

// Scans words and their pairwise combinations for a singular element,
// preferring nullity one.
void scan_for_pivot(const std::vector<Matrix>& words, size_t dim, const NortonOptions& opts,
                    PivotSearch& search) {
  for (const Matrix& w : words)
    if (search.consider(w, dim)) return;
  size_t k = std::min(opts.combo_source_cap, words.size());
  for (size_t j = 1; j < k; ++j)
    for (size_t i = 0; i < j; ++i) {
      if (search.consider(words[i].subtract(words[j]), dim)) return;
      if (search.consider(words[i].add(words[j]), dim)) return;
    }
}

struct SpinCheck {
  const std::vector<Matrix>& actions;
  const std::vector<Matrix>& transposed;
  size_t dim;

  // Spins v; returns a witness when the result is proper.
  std::optional<std::vector<Vector>> primal(const Vector& v) const {
    if (is_zero_vector(v)) return std::nullopt;
    RowSpace s = spin_space({v}, actions);
    if (s.dim() < dim) return s.basis();
    return std::nullopt;
  }
  // Spins a dual vector under the transposed actions; a proper dual spin
  // yields its annihilator as the primal witness.
  std::optional<std::vector<Vector>> dual(const Vector& v) const {
    if (is_zero_vector(v)) return std::nullopt;
    RowSpace s = spin_space({v}, transposed);
    if (s.dim() < dim) return annihilator(s);
    return std::nullopt;
  }
};

std::vector<Vector> pairwise_combos(const std::vector<Vector>& basis) {
  std::vector<Vector> out;
  for (size_t j = 1; j < basis.size(); ++j)
    for (size_t i = 0; i < j; ++i) {
      Vector diff(basis[i]), sum(basis[i]);
      for (size_t t = 0; t < diff.size(); ++t) {
        diff[t] = diff[t] - basis[j][t];
        sum[t] = sum[t] + basis[j][t];
      }
      out.push_back(std::move(diff));
      out.push_back(std::move(sum));
    }
  return out;
}

// Enumerates one representative per line of the span of `basis` over GF(p).
template <typename Fn>
bool for_each_null_line(const std::vector<Vector>& basis, uint32_t p, Fn&& fn) {
  size_t k = basis.size();
  const FieldTag f = basis.front().front().field();
  std::vector<uint32_t> coeff(k, 0);
  // first nonzero coefficient fixed to 1
  for (size_t lead = 0; lead < k; ++lead) {
    coeff.assign(k, 0);
    coeff[lead] = 1;
    bool done = false;
    while (!done) {
      Vector v = zero_vector(f, basis.front().size());
      for (size_t i = lead; i < k; ++i) {
        if (coeff[i] == 0) continue;
        Scalar c = Scalar::from_int(f, coeff[i]);
        for (size_t t = 0; t < v.size(); ++t) v[t] = v[t] + c * basis[i][t];
      }
      if (!fn(v)) return false;
      // odometer over positions after `lead`
      size_t pos = k;
      for (size_t i = k; i > lead + 1; --i) {
        if (coeff[i - 1] + 1 < p) {
          ++coeff[i - 1];
          pos = i - 1;
          break;
        }
        coeff[i - 1] = 0;
      }
      done = pos == k;
    }
  }
  return true;
}

uint64_t pow_checked(uint64_t base, size_t exp, uint64_t cap) {
  uint64_t r = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::optional<IrredResult> condense_and_decide(const Matrix& theta,
                                               const std::vector<Matrix>& actions, size_t dim,
                                               const NortonOptions& opts);

IrredResult decide_with_pivots(const PivotSearch& search, const std::vector<Matrix>& actions,
                               const std::vector<Matrix>& transposed, size_t dim,
                               const NortonOptions& opts) {
  SpinCheck spins{actions, transposed, dim};
  const Matrix& theta = search.minimal.front();
  const size_t theta_nullity = search.best_nullity;
  std::vector<Vector> primal_null = null_space(theta);
  for (const Vector& v : primal_null)
    if (auto w = spins.primal(v)) return {false, *w, "norton-null-spin"};
  std::vector<Vector> dual_null = null_space(theta.transpose());
  if (theta_nullity == 1) {
    if (auto w = spins.dual(dual_null.front())) return {false, *w, "norton-dual-spin"};
    return {true, {}, "norton-nullity-1"};
  }
  for (const Vector& v : dual_null)
    if (auto w = spins.dual(v)) return {false, *w, "norton-dual-spin"};
  for (const Vector& v : pairwise_combos(primal_null))
    if (auto w = spins.primal(v)) return {false, *w, "norton-null-spin"};
  for (const Vector& v : pairwise_combos(dual_null))
    if (auto w = spins.dual(v)) return {false, *w, "norton-dual-spin"};

  const FieldTag f = theta.field();
  if (f.kind() == FieldTag::Kind::GFp &&
      pow_checked(f.prime(), theta_nullity, opts.null_enum_bound) <= opts.null_enum_bound) {
    // exhaustive: a proper submodule must meet one of the two null spaces
    std::optional<IrredResult> found;
    for_each_null_line(primal_null, f.prime(), [&](const Vector& v) {
      if (auto w = spins.primal(v)) {
        found = IrredResult{false, *w, "norton-null-enumeration"};
        return false;
      }
      return true;
    });
    if (found) return *found;
    for_each_null_line(dual_null, f.prime(), [&](const Vector& v) {
      if (auto w = spins.dual(v)) {
        found = IrredResult{false, *w, "norton-dual-enumeration"};
        return false;
      }
      return true;
    });
    if (found) return *found;
    return {true, {}, "norton-null-enumeration"};
  }
  // look for a non-nilpotent pivot among the minimal candidates and settle
  // the question through its Fitting decomposition
  for (const Matrix& candidate : search.minimal)
    if (auto result = condense_and_decide(candidate, actions, dim, opts)) return *result;
  return {true, {}, "norton-basis-heuristic"};
}

// Invert a square matrix by Gauss-Jordan on [m | I].
Matrix invert(const Matrix& m) {
  size_t n = m.rows();
  const FieldTag& f = m.field();
  Matrix aug(f, n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, Scalar::one(f));
  }
  RowSpace space(f, 2 * n);
  {
    for (size_t i = 0; i < n; ++i) {
      Vector row(2 * n, Scalar::zero(f));
      for (size_t j = 0; j < 2 * n; ++j) row[j] = aug.at(i, j);
      space.insert(std::move(row));
    }
  }
  if (space.dim() != n) fail(Errc::Internal, "singular matrix in invert()");
  Matrix inv(f, n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.set(i, j, space.basis()[i][n + j]);
  return inv;
}

// Fitting-idempotent condensation: exact decision for a singular,
// non-nilpotent pivot.  V = K (+) R with K the stable kernel of theta; the
// projection e onto K along R lies in the enveloping algebra A, and V is
// simple iff eV is a simple eAe-module, A.eV = V and no nonzero vector is
// killed by eA.  A nilpotent pivot has no decomposition: returns nothing.
std::optional<IrredResult> condense_and_decide(const Matrix& theta,
                                               const std::vector<Matrix>& actions, size_t dim,
                                               const NortonOptions& opts) {
  const FieldTag f = theta.field();
  Matrix power = theta;
  size_t ker_dim = nullity(power);
  for (size_t step = 0; step < dim; ++step) {
    Matrix next = power.multiply(theta);
    size_t next_dim = nullity(next);
    if (next_dim == ker_dim) break;
    power = std::move(next);
    ker_dim = next_dim;
  }
  std::vector<Vector> kernel = null_space(power);
  RowSpace image(f, dim);
  for (size_t j = 0; j < dim; ++j) {
    Vector col(dim, Scalar::zero(f));
    for (size_t i = 0; i < dim; ++i) col[i] = power.at(i, j);
    image.insert(std::move(col));
  }
  size_t m_dim = kernel.size();
  if (m_dim == 0 || m_dim == dim) return std::nullopt;

  Matrix basis(f, dim, dim);
  for (size_t j = 0; j < m_dim; ++j)
    for (size_t i = 0; i < dim; ++i) basis.set(i, j, kernel[j][i]);
  for (size_t j = 0; j < dim - m_dim; ++j)
    for (size_t i = 0; i < dim; ++i) basis.set(i, m_dim + j, image.basis()[j][i]);
  Matrix basis_inv = invert(basis);
  Matrix proj(f, dim, dim);  // e = B diag(I_K, 0) B^{-1}
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j) {
      Scalar acc = Scalar::zero(f);
      for (size_t t = 0; t < m_dim; ++t) acc = acc + basis.at(i, t) * basis_inv.at(t, j);
      proj.set(i, j, acc);
    }

  SpinCheck spins{actions, actions, dim};
  // A.eV = V?
  RowSpace reach = spin_space(kernel, actions);
  if (reach.dim() < dim) return IrredResult{false, reach.basis(), "condensation-reach"};

  std::vector<Matrix> algebra = matrix_algebra_basis(actions, dim);
  // Z = { v : e a v = 0 for all a } = 0?
  Matrix stacked(f, algebra.size() * dim, dim);
  for (size_t a = 0; a < algebra.size(); ++a) {
    Matrix ea = proj.multiply(algebra[a]);
    for (size_t i = 0; i < dim; ++i)
      for (size_t j = 0; j < dim; ++j) stacked.set(a * dim + i, j, ea.at(i, j));
  }
  std::vector<Vector> killed = null_space(stacked);
  if (!killed.empty()) {
    RowSpace z(f, dim);
    for (const Vector& v : killed) z.insert(v);
    return IrredResult{false, z.basis(), "condensation-killed"};
  }

  // eV simple as an eAe-module?  Express e a e restricted to K in the kernel
  // basis and recurse.
  std::vector<Matrix> condensed;
  condensed.reserve(algebra.size());
  for (const Matrix& a : algebra) {
    Matrix ea = proj.multiply(a);
    Matrix op(f, m_dim, m_dim);
    for (size_t j = 0; j < m_dim; ++j) {
      Vector w = ea.apply(kernel[j]);
      Vector coords = basis_inv.apply(w);
      for (size_t i = 0; i < m_dim; ++i) op.set(i, j, coords[i]);
    }
    condensed.push_back(std::move(op));
  }
  IrredResult inner = is_irreducible(condensed, m_dim, opts);
  if (inner.irreducible) return IrredResult{true, {}, "condensation-simple"};
  // lift the condensed witness U to the proper submodule A.U
  std::vector<Vector> lifted;
  for (const Vector& u : inner.witness) {
    Vector v = zero_vector(f, dim);
    for (size_t j = 0; j < m_dim; ++j)
      for (size_t i = 0; i < dim; ++i) v[i] = v[i] + kernel[j][i] * u[j];
    lifted.push_back(std::move(v));
  }
  RowSpace w = spin_space(lifted, actions);
  if (w.dim() == 0 || w.dim() >= dim) fail(Errc::Internal, "condensation witness lift failed");
  return IrredResult{false, w.basis(), "condensation-module"};
}

}  // namespace

IrredResult is_irreducible(const std::vector<Matrix>& actions, size_t dim,
                           const NortonOptions& opts) {
  if (dim < 1) fail(Errc::DimensionMismatch, "module dimension must be at least 1");
  check_actions(actions, dim);
  if (dim == 1) return {true, {}, "dim-1"};

  const std::vector<Matrix> transposed = transpose_all(actions);
  std::vector<Matrix> words = candidate_words(actions, dim, opts);
  PivotSearch search;
  scan_for_pivot(words, dim, opts, search);
  if (!search.found()) {
    // widen the scan to a full basis of the enveloping algebra
    std::vector<Matrix> algebra = matrix_algebra_basis(actions, dim);
    scan_for_pivot(algebra, dim, opts, search);
  }
  if (search.found()) return decide_with_pivots(search, actions, transposed, dim, opts);

  // No singular element found: the algebra acts like a division ring, so a
  // proper submodule would show up under every basis vector.
  SpinCheck spins{actions, transposed, dim};
  const FieldTag f = actions.front().field();
  for (size_t i = 0; i < dim; ++i)
    if (auto w = spins.primal(unit_vector(f, dim, i))) return {false, *w, "basis-spin"};
  for (size_t i = 0; i < dim; ++i)
    if (auto w = spins.dual(unit_vector(f, dim, i))) return {false, *w, "basis-spin"};
  return {true, {}, "basis-spin"};
}

bool brute_force_irreducible_gfp(const std::vector<Matrix>& actions, size_t dim, uint64_t bound) {
  if (dim < 1) fail(Errc::DimensionMismatch, "module dimension must be at least 1");
  check_actions(actions, dim);
  const FieldTag f = actions.front().field();
  if (f.kind() != FieldTag::Kind::GFp)
    fail(Errc::FieldNotComputable, "brute force oracle is GF(p) only");
  if (pow_checked(f.prime(), dim, bound) > bound)
    fail(Errc::BoundExceeded, "p^dim exceeds the brute force bound");
  if (dim == 1) return true;
  std::vector<Vector> std_basis;
  for (size_t i = 0; i < dim; ++i) std_basis.push_back(unit_vector(f, dim, i));
  bool simple = true;
  for_each_null_line(std_basis, f.prime(), [&](const Vector& v) {
    if (spin_space({v}, actions).dim() < dim) {
      simple = false;
      return false;
    }
    return true;
  });
  return simple;
}

}  // namespace augcheck
