#include "cylint/serialization.hpp"

#include <ostream>

#include "cylint/special.hpp"

namespace cylint {

void to_json(Json& out, const Rational& r) { out = r.str(); }

void from_json(const Json& in, Rational& r) {
  if (!in.is_string()) {
    throw DomainError("expected a rational string such as \"-2/15\", got " +
                      in.dump());
  }
  r = Rational::parse(in.get<std::string>());
}

void to_json(Json& out, const EvenPoly& p) {
  out = Json{{"rho2_coeffs", p.coeffs()}};
}

void from_json(const Json& in, EvenPoly& p) {
  p = EvenPoly(in.at("rho2_coeffs").get<std::vector<Rational>>());
}

void to_json(Json& out, const BTable& t) {
  out = Json{{"j", t.j}, {"k", t.k}, {"betas", t.betas}};
}

void from_json(const Json& in, BTable& t) {
  in.at("j").get_to(t.j);
  in.at("k").get_to(t.k);
  in.at("betas").get_to(t.betas);
  if (t.j < 0 || t.k < 0 ||
      t.betas.size() != static_cast<std::size_t>(t.j + t.k + 1)) {
    throw DomainError("coefficient table must hold j + k + 1 betas");
  }
}

void to_json(Json& out, const MuPoly& mu) {
  out = Json{{"m", mu.m}, {"rho2_coeffs", mu.poly.coeffs()}};
}

void from_json(const Json& in, MuPoly& mu) {
  in.at("m").get_to(mu.m);
  mu.poly = EvenPoly(in.at("rho2_coeffs").get<std::vector<Rational>>());
}

void to_json(Json& out, const TheoremReport& r) {
  out = Json{{"j", r.j},
             {"k", r.k},
             {"N", r.N},
             {"residual", r.residual},
             {"is_constant", r.is_constant}};
  out["constant"] = r.constant ? Json(r.constant->str()) : Json(nullptr);
  out["closed_form_constant"] = r.closed_form_constant;
  out["holds"] = r.holds();
}

void from_json(const Json& in, TheoremReport& r) {
  in.at("j").get_to(r.j);
  in.at("k").get_to(r.k);
  in.at("N").get_to(r.N);
  in.at("residual").get_to(r.residual);
  in.at("is_constant").get_to(r.is_constant);
  const Json& c = in.at("constant");
  r.constant = c.is_null() ? std::nullopt : std::optional<Rational>(c.get<Rational>());
  in.at("closed_form_constant").get_to(r.closed_form_constant);
}

void to_json(Json& out, const ConstraintTerm& t) {
  out = Json{{"j", t.j}, {"k", t.k}, {"a", t.a}};
}

void from_json(const Json& in, ConstraintTerm& t) {
  in.at("j").get_to(t.j);
  in.at("k").get_to(t.k);
  t.a = in.contains("a") ? in.at("a").get<Rational>() : Rational(1);
}

void to_json(Json& out, const ConstraintSystem& s) {
  out = Json{{"terms", s.terms}, {"rho_inner", s.rho_inner}, {"rho_outer", s.rho_outer}};
}

void from_json(const Json& in, ConstraintSystem& s) {
  s = ConstraintSystem{};
  in.at("terms").get_to(s.terms);
  if (in.contains("rho_inner")) in.at("rho_inner").get_to(s.rho_inner);
  if (in.contains("rho_outer")) in.at("rho_outer").get_to(s.rho_outer);
}

void to_json(Json& out, const RowRef& r) {
  out = Json{{"radius", to_string(r.radius)}, {"l", r.l}};
}

void from_json(const Json& in, RowRef& r) {
  const std::string radius = in.at("radius").get<std::string>();
  if (radius == "inner") {
    r.radius = Radius::inner;
  } else if (radius == "outer") {
    r.radius = Radius::outer;
  } else {
    throw DomainError("unknown radius tag '" + radius + "'");
  }
  in.at("l").get_to(r.l);
}

void to_json(Json& out, const DedupReport& r) {
  out = Json{{"total_rows", r.total_rows},
             {"rank", r.rank},
             {"redundant_rows", r.redundant_rows},
             {"predicted_independent", r.predicted_independent},
             {"rank_status", r.rank_status()},
             {"witnesses_verified", r.witnesses_verified}};
}

void from_json(const Json& in, DedupReport& r) {
  in.at("total_rows").get_to(r.total_rows);
  in.at("rank").get_to(r.rank);
  in.at("redundant_rows").get_to(r.redundant_rows);
  in.at("predicted_independent").get_to(r.predicted_independent);
  in.at("witnesses_verified").get_to(r.witnesses_verified);
}

void write_btable_csv(std::ostream& os, const BTable& t) {
  os << "l,beta,rho_power\n";
  for (int l = 0; l <= t.order(); ++l) {
    os << l << ',' << t.betas[static_cast<std::size_t>(l)] << ','
       << 2 * (t.order() - l) << '\n';
  }
}

}  // namespace cylint
