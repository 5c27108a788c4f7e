#include "lagsub/json.hpp"

#include <limits>

namespace lagsub::json {

Json encode(const FieldCtx& ctx) {
  Json j;
  if (ctx.is_prime_field()) {
    j["type"] = "Fp";
    j["p"] = ctx.p;
  } else {
    j["type"] = "Q";
  }
  return j;
}

FieldCtx decode_field(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw Error(ErrorKind::Parse, "field must be {\"type\":\"Q\"} or {\"type\":\"Fp\",\"p\":P}");
  const auto type = j["type"].get<std::string>();
  if (type == "Q") return FieldCtx::rationals();
  if (type == "Fp") {
    if (!j.contains("p") || !j["p"].is_number_integer()) throw Error(ErrorKind::Parse, "Fp field needs an integer p");
    return FieldCtx::prime(j["p"].get<std::int64_t>());
  }
  throw Error(ErrorKind::Parse, "unknown field type '" + type + "'");
}

Json encode(const ModP& x) { return x.residue(); }

Json encode(const Rational& x) {
  if (x.is_integer()) {
    const mpz_class num = x.numerator();
    if (num.fits_slong_p()) return static_cast<std::int64_t>(num.get_si());
  }
  return x.str();
}

Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        return Rational::parse(std::to_string(u));
      return Rational(static_cast<std::int64_t>(u));
    }
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorKind::Parse, "scalar must be an integer or a string, got " + j.dump());
}

Json encode(const strata::StratumRow& row) {
  Json j;
  j["g"] = row.g;
  j["n"] = row.n;
  j["t"] = row.t;
  j["component"] = strata::to_string(row.component);
  j["stratum_dim"] = row.stratum_dim;
  j["dim_M"] = row.dim_max_lagrangians;
  j["flags"] = row.flags;
  return j;
}

strata::StratumRow decode_stratum_row(const Json& j) {
  try {
    strata::StratumRow row;
    row.g = j.at("g").get<std::int64_t>();
    row.n = j.at("n").get<std::int64_t>();
    row.t = j.at("t").get<std::int64_t>();
    row.e = row.t / 2;
    const auto c = j.at("component").get<std::string>();
    if (c != "+" && c != "-") throw Error(ErrorKind::Parse, "component must be + or -");
    row.component = c == "+" ? strata::Sign::Plus : strata::Sign::Minus;
    row.stratum_dim = j.at("stratum_dim").get<std::int64_t>();
    row.dim_max_lagrangians = j.at("dim_M").get<std::int64_t>();
    row.flags = j.at("flags").get<std::vector<std::string>>();
    return row;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

}  // namespace lagsub::json
