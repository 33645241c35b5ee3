#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>

#include "augcheck/error.hpp"

namespace augcheck {

using Rational = mpq_class;

/// Scalar domain of a matrix: GF(p) with p prime, the rationals, or the
/// representation-only tags for the reals and complexes.  The latter two
/// admit no element arithmetic; rank questions about 0/1 matrices over them
/// are delegated to the rationals by the callers that need it.
class FieldTag {
 public:
  enum class Kind : uint8_t { GFp, Rationals, Reals, Complexes };

  static FieldTag gf(uint32_t p);  // validates primality
  static FieldTag rationals() { return FieldTag(Kind::Rationals, 0); }
  static FieldTag reals() { return FieldTag(Kind::Reals, 0); }
  static FieldTag complexes() { return FieldTag(Kind::Complexes, 0); }

  /// Parses the CLI grammar: "gf:p", "q", "r", "c".
  static FieldTag parse(const std::string& text);

  Kind kind() const { return kind_; }
  uint32_t prime() const;
  bool computable() const { return kind_ == Kind::GFp || kind_ == Kind::Rationals; }
  /// Exact characteristic-0 stand-in used for rank questions over R/C.
  FieldTag delegate_for_rank() const { return computable() ? *this : rationals(); }

  std::string name() const;

  friend bool operator==(const FieldTag& a, const FieldTag& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const FieldTag& a, const FieldTag& b) { return !(a == b); }

 private:
  FieldTag(Kind kind, uint32_t p) : kind_(kind), p_(p) {}
  Kind kind_;
  uint32_t p_;
};

bool is_prime(uint32_t n);

/// An exact scalar together with its field.  GF(p) residues live in [0, p);
/// rationals are kept in lowest terms with positive denominator.
class Scalar {
 public:
  static Scalar zero(const FieldTag& f) { return from_int(f, 0); }
  static Scalar one(const FieldTag& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldTag& f, long v);
  static Scalar from_fraction(long num, long den);
  static Scalar from_rational(Rational r);

  const FieldTag& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  uint64_t residue() const;         // GF(p) only
  const Rational& fraction() const; // rationals only
  std::string str() const;

 private:
  explicit Scalar(const FieldTag& f) : field_(f) {}
  void check_same_field(const Scalar& o) const;

  FieldTag field_ = FieldTag::rationals();
  uint64_t fp_ = 0;
  Rational rat_ = 0;
};

}  // namespace augcheck
