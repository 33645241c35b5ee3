#include "augcheck/field.hpp"

namespace augcheck {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::FieldNotComputable: return "FieldNotComputable";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SizeBound: return "SizeBound";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NoIdempotents: return "NoIdempotents";
    case Errc::IsGroup: return "IsGroup";
    case Errc::Not0Transitive: return "Not0Transitive";
    case Errc::NotTwoTransitive: return "NotTwoTransitive";
    case Errc::NotPartialMonoid: return "NotPartialMonoid";
    case Errc::Disconnected: return "Disconnected";
    case Errc::Cyclic: return "Cyclic";
    case Errc::NoMinimum: return "NoMinimum";
    case Errc::NotSemilattice: return "NotSemilattice";
    case Errc::BadMatrix: return "BadMatrix";
    case Errc::NotUpperSets: return "NotUpperSets";
    case Errc::Parse: return "Parse";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldTag FieldTag::gf(uint32_t p) {
  if (!is_prime(p)) fail(Errc::BadMatrix, "GF(p) requires a prime, got " + std::to_string(p));
  return FieldTag(Kind::GFp, p);
}

FieldTag FieldTag::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "r" || text == "R") return reals();
  if (text == "c" || text == "C") return complexes();
  if (text.rfind("gf:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(Errc::Parse, "bad field spec '" + text + "'");
    unsigned long p = std::stoul(digits);
    if (p > 0x7fffffffUL) fail(Errc::Parse, "prime out of range in '" + text + "'");
    return gf(static_cast<uint32_t>(p));
  }
  fail(Errc::Parse, "unknown field '" + text + "' (expected gf:p, q, r or c)");
}

uint32_t FieldTag::prime() const {
  if (kind_ != Kind::GFp) fail(Errc::Internal, "prime() on non-GF field");
  return p_;
}

std::string FieldTag::name() const {
  switch (kind_) {
    case Kind::GFp: return "gf:" + std::to_string(p_);
    case Kind::Rationals: return "q";
    case Kind::Reals: return "r";
    case Kind::Complexes: return "c";
  }
  return "?";
}

namespace {

uint64_t fp_inverse(uint64_t a, uint64_t p) {
  // extended Euclid; a in (0, p)
  int64_t t = 0, new_t = 1;
  int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

}  // namespace

Scalar Scalar::from_int(const FieldTag& f, long v) {
  if (!f.computable()) fail(Errc::FieldNotComputable, "no element arithmetic over " + f.name());
  Scalar s(f);
  if (f.kind() == FieldTag::Kind::GFp) {
    int64_t p = f.prime();
    int64_t r = v % p;
    if (r < 0) r += p;
    s.fp_ = static_cast<uint64_t>(r);
  } else {
    s.rat_ = v;
  }
  return s;
}

Scalar Scalar::from_fraction(long num, long den) {
  if (den == 0) fail(Errc::BadMatrix, "zero denominator");
  Scalar s(FieldTag::rationals());
  s.rat_ = Rational(num, den);
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::from_rational(Rational r) {
  Scalar s(FieldTag::rationals());
  r.canonicalize();
  s.rat_ = std::move(r);
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind() == FieldTag::Kind::GFp ? fp_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind() == FieldTag::Kind::GFp ? fp_ == 1 : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) fail(Errc::DimensionMismatch, "mixed-field scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldTag::Kind::GFp) {
    s.fp_ = (fp_ + o.fp_) % field_.prime();
  } else {
    s.rat_ = rat_ + o.rat_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldTag::Kind::GFp) {
    uint64_t p = field_.prime();
    s.fp_ = (fp_ + p - o.fp_) % p;
  } else {
    s.rat_ = rat_ - o.rat_;
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar s(field_);
  if (field_.kind() == FieldTag::Kind::GFp) {
    s.fp_ = (fp_ * o.fp_) % field_.prime();
  } else {
    s.rat_ = rat_ * o.rat_;
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.kind() == FieldTag::Kind::GFp) {
    s.fp_ = fp_ == 0 ? 0 : field_.prime() - fp_;
  } else {
    s.rat_ = -rat_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(Errc::BadMatrix, "inverse of zero");
  Scalar s(field_);
  if (field_.kind() == FieldTag::Kind::GFp) {
    s.fp_ = fp_inverse(fp_, field_.prime());
  } else {
    s.rat_ = 1 / rat_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.kind() == FieldTag::Kind::GFp ? a.fp_ == b.fp_ : a.rat_ == b.rat_;
}

uint64_t Scalar::residue() const {
  if (field_.kind() != FieldTag::Kind::GFp) fail(Errc::Internal, "residue() on non-GF scalar");
  return fp_;
}

const Rational& Scalar::fraction() const {
  if (field_.kind() != FieldTag::Kind::Rationals) fail(Errc::Internal, "fraction() on non-rational scalar");
  return rat_;
}

std::string Scalar::str() const {
  if (field_.kind() == FieldTag::Kind::GFp) return std::to_string(fp_);
  return rat_.get_str();
}

}  // namespace augcheck
