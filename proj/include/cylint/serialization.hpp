#ifndef CYLINT_SERIALIZATION_HPP
#define CYLINT_SERIALIZATION_HPP

#include <iosfwd>

#include "json.hpp"

#include "cylint/coefficients.hpp"
#include "cylint/constraints.hpp"
#include "cylint/even_poly.hpp"
#include "cylint/hypergeometric.hpp"
#include "cylint/identities.hpp"
#include "cylint/rational.hpp"

namespace cylint {

// Key order in emitted documents follows insertion order.
using Json = nlohmann::ordered_json;

// Rationals are always JSON strings: "num/den", or "n" for integers.
void to_json(Json& out, const Rational& r);
void from_json(const Json& in, Rational& r);

// {"rho2_coeffs": ["c0", "c1", ...]}
void to_json(Json& out, const EvenPoly& p);
void from_json(const Json& in, EvenPoly& p);

// {"j": J, "k": K, "betas": [...]}
void to_json(Json& out, const BTable& t);
void from_json(const Json& in, BTable& t);

// {"m": m, "rho2_coeffs": [...]}
void to_json(Json& out, const MuPoly& mu);
void from_json(const Json& in, MuPoly& mu);

void to_json(Json& out, const TheoremReport& r);
void from_json(const Json& in, TheoremReport& r);

// {"j": 0, "k": 1, "a": "2/3"}
void to_json(Json& out, const ConstraintTerm& t);
void from_json(const Json& in, ConstraintTerm& t);

// {"terms": [...], "rho_inner": "7/20", "rho_outer": "1"}; radii optional on
// input, defaulting to 7/20 and 1.
void to_json(Json& out, const ConstraintSystem& s);
void from_json(const Json& in, ConstraintSystem& s);

void to_json(Json& out, const RowRef& r);
void from_json(const Json& in, RowRef& r);

void to_json(Json& out, const DedupReport& r);
void from_json(const Json& in, DedupReport& r);

/// Columns l, beta, rho_power (the exponent of rho, 2(j+k-l)).
void write_btable_csv(std::ostream& os, const BTable& t);

}  // namespace cylint

#endif  // CYLINT_SERIALIZATION_HPP
