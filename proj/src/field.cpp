#include "lagsub/field.hpp"

#include <cctype>

namespace lagsub {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::MixedContexts: return "MixedContexts";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnsupportedContext: return "UnsupportedContext";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegenerateRestriction: return "DegenerateRestriction";
    case ErrorKind::IsotropicSearchExhausted: return "IsotropicSearchExhausted";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::NotLagrangian: return "NotLagrangian";
    case ErrorKind::OddAmbient: return "OddAmbient";
    case ErrorKind::NonSplitExtension: return "NonSplitExtension";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldCtx FieldCtx::prime(std::int64_t p) {
  if (p < 3 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::InvalidContext,
                "field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
  return {Kind::PrimeField, static_cast<std::uint32_t>(p)};
}

std::string FieldCtx::str() const {
  return is_prime_field() ? "F_" + std::to_string(p) : std::string("Q");
}

// ---- ModP ----

ModP::ModP(std::int64_t value, std::uint32_t p) : value_(reduce(value, p)), p_(p) {}

ModP::ModP(std::int64_t value, const FieldCtx& ctx)
    : ModP(ScalarTraits<ModP>::make(ctx, value)) {}

std::uint32_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    throw Error(ErrorKind::MixedContexts,
                "F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
  return a.p_ != 0 ? a.p_ : b.p_;
}

ModP operator+(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) return ModP(a.value_ + b.value_);
  return ModP(ModP::reduce(a.value_, p) + ModP::reduce(b.value_, p), p);
}

ModP operator-(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) return ModP(a.value_ - b.value_);
  return ModP(ModP::reduce(a.value_, p) - ModP::reduce(b.value_, p), p);
}

ModP operator*(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) return ModP(a.value_ * b.value_);
  return ModP(ModP::reduce(a.value_, p) * ModP::reduce(b.value_, p), p);
}

ModP operator/(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) {
    if (b.value_ == 0) throw Error(ErrorKind::DivisionByZero, "literal division by zero");
    if (a.value_ % b.value_ != 0)
      throw Error(ErrorKind::UnsupportedContext, "non-integral quotient of untyped literals");
    return ModP(a.value_ / b.value_);
  }
  return ModP(a.value_, p) * ModP(b.value_, p).inverse();
}

ModP operator-(const ModP& a) {
  if (a.p_ == 0) return ModP(-a.value_);
  return ModP(-a.value_, a.p_);
}

bool operator==(const ModP& a, const ModP& b) {
  const auto p = ModP::common_modulus(a, b);
  if (p == 0) return a.value_ == b.value_;
  return ModP::reduce(a.value_, p) == ModP::reduce(b.value_, p);
}

ModP ModP::pow(std::uint64_t exponent) const {
  ModP base = *this;
  ModP acc = p_ == 0 ? ModP(1) : ModP(1, p_);
  while (exponent > 0) {
    if (exponent & 1) acc *= base;
    base *= base;
    exponent >>= 1;
  }
  return acc;
}

ModP ModP::inverse() const {
  if (value_ == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (p_ == 0) {
    if (value_ == 1 || value_ == -1) return *this;
    throw Error(ErrorKind::UnsupportedContext, "inverse of untyped literal " + std::to_string(value_));
  }
  return pow(p_ - 2);
}

std::optional<ModP> is_square(const ModP& x) {
  if (x.is_literal()) throw Error(ErrorKind::UnsupportedContext, "square test needs a prime field");
  const std::uint32_t p = x.modulus();
  if (is_zero(x)) return ModP(0, p);
  const std::uint64_t half = (p - 1) / 2;
  if (x.pow(half).residue() != 1) return std::nullopt;

  // Tonelli-Shanks.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  ModP z(2, p);
  while (z.pow(half).residue() == 1) z = z + ModP(1, p);
  ModP c = z.pow(q);
  ModP r = x.pow((q + 1) / 2);
  ModP t = x.pow(q);
  unsigned m = s;
  while (t.residue() != 1) {
    unsigned i = 0;
    ModP t2 = t;
    while (t2.residue() != 1) {
      t2 = t2 * t2;
      ++i;
    }
    ModP b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    r = r * b;
    c = b * b;
    t = t * c;
    m = i;
  }
  if (r.residue() > static_cast<std::int64_t>(p) - r.residue()) r = -r;
  return r;
}

std::string to_string(const ModP& x) { return std::to_string(x.residue()); }

// ---- Rational ----

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw Error(ErrorKind::DivisionByZero, a.str() + " / 0");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::inverse() const {
  if (is_zero(*this)) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational Rational::parse(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto to_mpz = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!valid_int(num)) throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rational(to_mpz(num), mpz_class(1));
  const auto den = text.substr(slash + 1);
  if (!valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
  return Rational(to_mpz(num), to_mpz(den));
}

std::string Rational::str() const { return q_.get_str(10); }

std::optional<Rational> is_square(const Rational&) {
  throw Error(ErrorKind::UnsupportedContext, "square testing over Q is not supported");
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class num = x.numerator();
  const mpz_class den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  return Rational(mpz_class(sqrt(num)), mpz_class(sqrt(den)));
}

}  // namespace lagsub
