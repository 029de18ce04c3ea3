#pragma once

// JSON encoding of every value the library exchanges. Big integers and
// rationals are always decimal strings.

#include <json.hpp>

#include <string_view>

#include "evalg/density.hpp"
#include "evalg/functionals.hpp"
#include "evalg/hopf.hpp"
#include "evalg/numerical.hpp"
#include "evalg/pair.hpp"
#include "evalg/poly.hpp"
#include "evalg/transform.hpp"

namespace evalg {

using Json = nlohmann::ordered_json;

/// Parses an arithmetic expression in `ring`: integers, q, i, + - * / ^,
/// parentheses and a trailing +O(q^n) for Laurent windows. Text that is a JSON
/// array or object is read as a literal instead. Throws ParseError,
/// NotDivisible or DivisionByZero.
Element parse_element(std::string_view text, const Ring& ring);

/// Bracketed, comma separated list of expressions ("[0,1,q]"), or a JSON
/// array of literals and expression strings.
std::vector<Element> parse_element_list(std::string_view text, const Ring& ring);

/// Canonical literal: decimal string for Z/Q/F_p, ascending coefficient array
/// for Z[q] and F_p[q], {"num","den"} for F_p(q), [re, im] for Gaussians and
/// {"val","coeffs"} for a Laurent window (exact zero is "0").
Json element_value(const Element& e);
/// {"ring": name, "value": literal}.
Json to_json(const Element& e);
/// Accepts a bare literal, an expression string, a JSON integer or a full
/// {"ring","value"} object (embedded into `ring`).
Element element_from_json(const Json& j, const Ring& ring);
/// Requires the full object form.
Element element_from_json(const Json& j);

Json to_json(const std::vector<Element>& v);
std::vector<Element> elements_from_json(const Json& j, const Ring& ring);

Json to_json(const Poly& p);
/// {"coeffs": [...]} with an optional "ring" (default `ring`), or the
/// sparse {"vars": ["x"], "terms": [...]} form.
Poly poly_from_json(const Json& j, const Ring& ring);

Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j, const Ring& ring);

Json to_json(const GroupRingElement& g);
/// Points are parsed in `point_ring` unless the JSON names "point_ring".
GroupRingElement groupring_from_json(const Json& j, const Ring& coeff_ring, const Ring& point_ring);

Json to_json(const MultiGroupRingElement& g);
MultiGroupRingElement multi_groupring_from_json(const Json& j, const Ring& coeff_ring, const Ring& point_ring);

Json to_json(const DividedPowerVector& v);
DividedPowerVector divided_power_from_json(const Json& j);

Json to_json(const TruncatedSeries& s);
/// {"kind", "depth", "coeffs", "ring"?}; the ring defaults to Q for
/// nottingham and F(p) for pseries (with "p").
TruncatedSeries series_from_json(const Json& j);

Json to_json(const SeriesGroupRing& g);
SeriesGroupRing series_groupring_from_json(const Json& j);

Json to_json(const DualFunctional& f);
DualFunctional dual_functional_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Ring& ring);

Json to_json(const DensityCertificate& c);
DensityCertificate density_certificate_from_json(const Json& j);

Json to_json(const HopfCertificate& c);
HopfCertificate hopf_certificate_from_json(const Json& j);

Json to_json(const DSWitness& w);
Json to_json(const NumericalVerdict& v);
Json to_json(const MembershipVerdict& v);
Json to_json(const KeyFormulaReport& r);
Json to_json(const CertificateCheck& c);
Json to_json(const FiniteImage& f);
Json to_json(const ClassificationReport& r);

}  // namespace evalg
