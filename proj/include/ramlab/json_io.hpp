#ifndef RAMLAB_JSON_IO_HPP
#define RAMLAB_JSON_IO_HPP

#include "json.hpp"

#include "ramlab/census.hpp"
#include "ramlab/conductors.hpp"

namespace ramlab {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// field parameters: {"p": int, "n": int, "modulus": [int,...]} (low-to-high)
Json field_to_json(const FqFieldPtr& field);
FqFieldPtr field_from_json(const Json& j);

// elements as coordinate vectors over the prime field
Json element_to_json(const FqElement& a);
FqElement element_from_json(const Json& j, const FqFieldPtr& field);

Json poly_to_json(const FqPolynomial& f);
FqPolynomial poly_from_json(const Json& j, const FqFieldPtr& field);

// {"lead": int|null, "prec": int|"exact", "coeffs": [[int,...],...]}
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j, const FqFieldPtr& field);

Json rational_to_json(const Rational& r); // [num, den]

// full datum schema; loading also accepts the family shorthand
// {"family": ..., "p"/"q"/"field", "m", "c", "e"}
Json datum_to_json(const GaloisDatumPtr& d);
GaloisDatumPtr datum_from_json(const Json& j);

Json place_to_json(const Place& place);
Place place_from_json(const Json& j, const FqFieldPtr& field);
Json divisor_to_json(const EffectiveDivisor& D);
EffectiveDivisor divisor_from_json(const Json& j, const FqFieldPtr& field);

Json herbrand_to_json(const HerbrandFunction& f);
Json filtration_report_json(const RamificationFiltration& f);
Json conductor_report_json(const ConductorReport& r);
Json swan_bound_report_json(const SwanBoundReport& r);
Json base_change_report_json(const BaseChangeReport& r);
Json census_report_json(const CensusReport& r);
Json chain_report_json(const ChainReport& r);
Json verify_report_json(const VerifyReport& r);

GroupRepresentation representation_from_json(const Json& j, const GroupView& view);

} // namespace ramlab

#endif
