#pragma once

// JSON encodings:
//   field     {"type":"Q"} | {"type":"Fp","p":5}
//   scalar    JSON integer, decimal string, or "a/b"
//   subspace  {"ambient":d,"basis":[[...],...]}   (a bare row array is accepted on input)
//   gram      {"field":{...},"gram":[[...],...]}
//   lift pair {"plus":<subspace>,"minus":<subspace>}
//   stratum   {"g","n","t","component","stratum_dim","dim_M","flags"}

#include <json.hpp>

#include "lagsub/lagrange.hpp"
#include "lagsub/strata.hpp"

namespace lagsub::json {

using Json = nlohmann::ordered_json;

Json encode(const FieldCtx& ctx);
FieldCtx decode_field(const Json& j);

Json encode(const ModP& x);
Json encode(const Rational& x);

// Integer or rational text reduced into ctx. Parse on malformed input,
// DivisionByZero when a denominator vanishes mod p.
Rational decode_rational(const Json& j);
template <ExactScalar S>
S decode_scalar(const FieldCtx& ctx, const Json& j) {
  const Rational q = decode_rational(j);
  if constexpr (std::is_same_v<S, Rational>) {
    return ScalarTraits<S>::retype(ctx, q);
  } else {
    if (!ctx.is_prime_field()) throw Error(ErrorKind::MixedContexts, "residue requested in " + ctx.str());
    const mpz_class p(static_cast<unsigned long>(ctx.p));
    const mpz_class num = q.numerator() % p;
    const mpz_class den = q.denominator() % p;
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator of " + q.str() + " vanishes mod " + std::to_string(ctx.p));
    return ModP(num.get_si(), ctx.p) / ModP(den.get_si(), ctx.p);
  }
}

template <class S>
Json encode(const Matrix<S>& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// `cols` fixes the width of an empty row list; otherwise it must agree with
// the rows when given.
template <ExactScalar S>
Matrix<S> decode_matrix(const FieldCtx& ctx, const Json& j, Index cols = -1) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
  const Index r = static_cast<Index>(j.size());
  Index c = cols;
  if (r > 0) {
    if (!j[0].is_array()) throw Error(ErrorKind::Parse, "matrix rows must be arrays");
    c = static_cast<Index>(j[0].size());
    if (cols >= 0 && c != cols)
      throw Error(ErrorKind::AmbientMismatch, "rows have length " + std::to_string(c) + ", expected " + std::to_string(cols));
  }
  if (c < 0) throw Error(ErrorKind::Parse, "cannot infer the width of an empty matrix");
  Matrix<S> m = zeros<S>(ctx, r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) throw Error(ErrorKind::Parse, "ragged matrix");
    for (Index k = 0; k < c; ++k) m(i, k) = decode_scalar<S>(ctx, row[static_cast<std::size_t>(k)]);
  }
  return m;
}

template <ExactScalar S>
Json encode(const Subspace<S>& s) {
  Json j;
  j["ambient"] = s.ambient();
  j["basis"] = encode(s.basis());
  return j;
}

template <ExactScalar S>
Subspace<S> decode_subspace(const FieldCtx& ctx, const Json& j, Index ambient = -1) {
  if (j.is_object()) {
    if (!j.contains("ambient") || !j.contains("basis")) throw Error(ErrorKind::Parse, "subspace needs ambient and basis");
    const Index a = j["ambient"].get<Index>();
    if (ambient >= 0 && a != ambient)
      throw Error(ErrorKind::AmbientMismatch, "ambient " + std::to_string(a) + ", expected " + std::to_string(ambient));
    return Subspace<S>::span(ctx, decode_matrix<S>(ctx, j["basis"], a));
  }
  return Subspace<S>::span(ctx, decode_matrix<S>(ctx, j, ambient));
}

template <ExactScalar S>
Json encode(const GramSpace<S>& v) {
  Json j;
  j["field"] = encode(v.ctx());
  j["gram"] = encode(v.gram());
  return j;
}

template <ExactScalar S>
GramSpace<S> decode_gram(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("gram"))
    throw Error(ErrorKind::Parse, "gram space needs field and gram");
  const FieldCtx ctx = decode_field(j["field"]);
  return GramSpace<S>(ctx, decode_matrix<S>(ctx, j["gram"]));
}

template <ExactScalar S>
Json encode(const LiftPair<S>& pair) {
  Json j;
  j["plus"] = encode(pair.plus_lift);
  j["minus"] = encode(pair.minus_lift);
  return j;
}

Json encode(const strata::StratumRow& row);
strata::StratumRow decode_stratum_row(const Json& j);

}  // namespace lagsub::json
