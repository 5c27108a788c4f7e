#pragma once

// Exact scalars: arbitrary-precision rationals and residues modulo an odd
// prime. Both types plug into Eigen as custom scalar types, so the dense
// matrix machinery in linalg.hpp is shared between them.

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

#include "lagsub/error.hpp"

namespace lagsub {

bool is_prime(std::uint64_t n) noexcept;

struct FieldCtx {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldCtx rationals() noexcept { return {}; }
  // Rejects p < 3, composite p and p >= 2^31 (products of residues must fit
  // in 64 bits).
  static FieldCtx prime(std::int64_t p);

  bool is_prime_field() const noexcept { return kind == Kind::PrimeField; }
  std::string str() const;

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;
};

// Residue modulo an odd prime.
//
// A value with modulus() == 0 is a context-free integer literal, which is
// what Eigen produces for Scalar(0) and Scalar(1). Literals adopt the modulus
// of the first typed operand they meet; combining two different moduli throws
// MixedContexts.
class ModP {
 public:
  ModP() = default;
  template <std::integral I>
  ModP(I literal) : value_(static_cast<std::int64_t>(literal)) {}
  ModP(std::int64_t value, std::uint32_t p);
  ModP(std::int64_t value, const FieldCtx& ctx);

  std::uint32_t modulus() const noexcept { return p_; }
  bool is_literal() const noexcept { return p_ == 0; }
  // Canonical residue in [0, p); the raw integer for a literal.
  std::int64_t residue() const noexcept { return value_; }

  ModP inverse() const;
  ModP pow(std::uint64_t exponent) const;

  friend ModP operator+(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a, const ModP& b);
  friend ModP operator*(const ModP& a, const ModP& b);
  friend ModP operator/(const ModP& a, const ModP& b);
  friend ModP operator-(const ModP& a);
  friend bool operator==(const ModP& a, const ModP& b);

  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }
  ModP& operator/=(const ModP& b) { return *this = *this / b; }

 private:
  static std::uint32_t common_modulus(const ModP& a, const ModP& b);
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) noexcept {
    v %= static_cast<std::int64_t>(p);
    return v < 0 ? v + p : v;
  }

  std::int64_t value_ = 0;
  std::uint32_t p_ = 0;
};

// Rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "a" or "a/b" with optional sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  std::string str() const;

  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

 private:
  mpq_class q_;
};

// ---- uniform scalar interface used by the generic algorithms ----

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ModP> {
  static ModP make(const FieldCtx& ctx, std::int64_t v) {
    if (!ctx.is_prime_field())
      throw Error(ErrorKind::MixedContexts, "residue requested in " + ctx.str());
    return ModP(v, ctx.p);
  }
  // Attaches ctx to a literal; rejects a residue from another field.
  static ModP retype(const FieldCtx& ctx, const ModP& x) {
    if (!ctx.is_prime_field())
      throw Error(ErrorKind::MixedContexts, "residue used in " + ctx.str());
    if (x.is_literal()) return ModP(x.residue(), ctx.p);
    if (x.modulus() != ctx.p)
      throw Error(ErrorKind::MixedContexts,
                  "mod " + std::to_string(x.modulus()) + " vs " + ctx.str());
    return x;
  }
};

template <>
struct ScalarTraits<Rational> {
  static Rational make(const FieldCtx& ctx, std::int64_t v) {
    if (ctx.is_prime_field())
      throw Error(ErrorKind::MixedContexts, "rational requested in " + ctx.str());
    return Rational(v);
  }
  static Rational retype(const FieldCtx& ctx, const Rational& x) {
    if (ctx.is_prime_field())
      throw Error(ErrorKind::MixedContexts, "rational used in " + ctx.str());
    return x;
  }
};

template <class S>
concept ExactScalar = requires { ScalarTraits<S>::make(FieldCtx{}, 0); };

template <ExactScalar S>
S make_scalar(const FieldCtx& ctx, std::int64_t v) {
  return ScalarTraits<S>::make(ctx, v);
}

inline bool is_zero(const ModP& x) noexcept { return x.residue() == 0; }
inline bool is_zero(const Rational& x) { return sgn(x.value()) == 0; }

inline ModP inverse(const ModP& x) { return x.inverse(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }

// Least square root in [0, p) when x is a quadratic residue, nullopt
// otherwise. Zero is its own root.
std::optional<ModP> is_square(const ModP& x);
// Square testing over the rationals is not offered; always throws
// UnsupportedContext.
std::optional<Rational> is_square(const Rational& x);

// Exact rational square root (non-negative), if the argument is the square of
// a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

inline std::optional<ModP> square_root(const ModP& x) { return is_square(x); }
inline std::optional<Rational> square_root(const Rational& x) { return exact_sqrt(x); }

// A fixed total order used only to sort canonical bases deterministically.
inline bool canonical_less(const ModP& a, const ModP& b) noexcept { return a.residue() < b.residue(); }
inline bool canonical_less(const Rational& a, const Rational& b) { return a < b; }

std::string to_string(const ModP& x);
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

// Hooks Eigen looks up by ADL for custom scalars.
inline const ModP& conj(const ModP& x) { return x; }
inline const ModP& real(const ModP& x) { return x; }
inline ModP imag(const ModP&) { return 0; }
inline ModP abs2(const ModP& x) { return x * x; }
inline const Rational& conj(const Rational& x) { return x; }
inline const Rational& real(const Rational& x) { return x; }
inline Rational imag(const Rational&) { return 0; }
inline Rational abs2(const Rational& x) { return x * x; }

}  // namespace lagsub

namespace Eigen {

template <>
struct NumTraits<lagsub::ModP> : GenericNumTraits<lagsub::ModP> {
  using Real = lagsub::ModP;
  using NonInteger = lagsub::ModP;
  using Nested = lagsub::ModP;
  using Literal = lagsub::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<lagsub::Rational> : GenericNumTraits<lagsub::Rational> {
  using Real = lagsub::Rational;
  using NonInteger = lagsub::Rational;
  using Nested = lagsub::Rational;
  using Literal = lagsub::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
