#include "ramlab/json_io.hpp"

namespace ramlab {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw DomainError("bad input: " + msg);
}

long long get_int(const Json& j, const char* key) {
    require(j.contains(key) && j[key].is_number_integer(), std::string(key) + " must be an integer");
    return j[key].get<long long>();
}

} // namespace

Json field_to_json(const FqFieldPtr& field) {
    Json j;
    j["p"] = field->p();
    j["n"] = field->n();
    j["modulus"] = field->modulus();
    return j;
}

FqFieldPtr field_from_json(const Json& j) {
    require(j.is_object(), "field parameters must be an object");
    uint32_t p = (uint32_t)get_int(j, "p");
    uint32_t n = j.contains("n") ? (uint32_t)get_int(j, "n") : 1u;
    if (j.contains("modulus")) {
        require(j["modulus"].is_array(), "modulus must be an array");
        std::vector<uint32_t> mod;
        for (const auto& c : j["modulus"]) mod.push_back(c.get<uint32_t>());
        return FqField::create(p, n, std::move(mod));
    }
    return FqField::create_canonical(p, n);
}

Json element_to_json(const FqElement& a) { return Json(a.coords()); }

FqElement element_from_json(const Json& j, const FqFieldPtr& field) {
    if (j.is_number_integer()) return field->from_int(j.get<long long>());
    require(j.is_array(), "field element must be an integer or a coordinate array");
    std::vector<uint32_t> coords;
    for (const auto& c : j) coords.push_back(c.get<uint32_t>());
    return field->from_coords(std::move(coords));
}

Json poly_to_json(const FqPolynomial& f) {
    Json out = Json::array();
    for (const auto& c : f.coeffs()) out.push_back(element_to_json(c));
    return out;
}

FqPolynomial poly_from_json(const Json& j, const FqFieldPtr& field) {
    require(j.is_array(), "polynomial must be an array of coefficients");
    std::vector<FqElement> coeffs;
    for (const auto& c : j) coeffs.push_back(element_from_json(c, field));
    return FqPolynomial(field, std::move(coeffs));
}

Json series_to_json(const LaurentSeries& s) {
    Json j;
    if (s.is_zero_to_prec())
        j["lead"] = nullptr;
    else
        j["lead"] = s.lead();
    if (s.is_exact())
        j["prec"] = "exact";
    else
        j["prec"] = s.prec();
    Json coeffs = Json::array();
    for (const auto& c : s.window()) coeffs.push_back(element_to_json(c));
    j["coeffs"] = coeffs;
    return j;
}

LaurentSeries series_from_json(const Json& j, const FqFieldPtr& field) {
    require(j.is_object(), "series must be an object");
    long long prec = LaurentSeries::kExact;
    if (j.contains("prec") && !j["prec"].is_null()) {
        if (j["prec"].is_string()) {
            require(j["prec"] == "exact", "prec must be an integer or \"exact\"");
        } else {
            prec = j["prec"].get<long long>();
        }
    }
    if (!j.contains("lead") || j["lead"].is_null()) {
        if (prec == LaurentSeries::kExact) return LaurentSeries::exact_zero(field);
        return LaurentSeries::zero_to_prec(field, prec);
    }
    long long lead = j["lead"].get<long long>();
    std::vector<FqElement> coeffs;
    if (j.contains("coeffs")) {
        require(j["coeffs"].is_array(), "coeffs must be an array");
        for (const auto& c : j["coeffs"]) coeffs.push_back(element_from_json(c, field));
    }
    return LaurentSeries::make(field, lead, std::move(coeffs), prec);
}

Json rational_to_json(const Rational& r) { return Json::array({r.num(), r.den()}); }

Json datum_to_json(const GaloisDatumPtr& d) {
    Json j;
    j["field"] = field_to_json(d->field());
    j["e"] = d->e();
    j["w"] = d->w();
    Json mp = Json::array();
    for (const auto& c : d->minpoly()) mp.push_back(series_to_json(c));
    j["minpoly"] = mp;
    Json grp = Json::array();
    for (const auto& g : d->group()) {
        Json ge;
        ge["id"] = g.id;
        Json act = Json::array();
        for (const auto& c : g.action) act.push_back(series_to_json(c));
        ge["action"] = act;
        grp.push_back(ge);
    }
    j["group"] = grp;
    j["unif"] = Json::array({d->unif_a(), d->unif_b()});
    j["label"] = family_name(d->label());
    return j;
}

GaloisDatumPtr datum_from_json(const Json& j) {
    require(j.is_object(), "datum must be an object");
    if (j.contains("family")) {
        std::string fam = j["family"].get<std::string>();
        FqFieldPtr field;
        if (j.contains("field")) {
            field = field_from_json(j["field"]);
        } else if (j.contains("p") || j.contains("q")) {
            long long p = j.contains("p") ? get_int(j, "p") : 0;
            long long q = j.contains("q") ? get_int(j, "q") : 0;
            if (q == 0) q = p;
            if (p == 0) {
                // recover the characteristic: q is a prime power
                for (long long d = 2; d * d <= q; ++d)
                    if (q % d == 0) { p = d; break; }
                if (p == 0) p = q;
            }
            require(p >= 2, "need p or q");
            uint32_t n = 0;
            long long qq = q;
            while (qq > 1 && qq % p == 0) { qq /= p; ++n; }
            require(qq == 1 && n >= 1, "q must be a power of p");
            field = FqField::create_canonical((uint32_t)p, n);
        } else {
            throw DomainError("family shorthand needs field, p or q");
        }
        if (fam == "trivial") return build_trivial(field);
        if (fam == "tame_kummer") return build_tame_kummer(field, get_int(j, "e"));
        if (fam == "artin_schreier") {
            FqElement c = j.contains("c") ? element_from_json(j["c"], field) : field->one();
            return build_artin_schreier(field, get_int(j, "m"), c);
        }
        throw DomainError("unknown family: " + fam);
    }
    FqFieldPtr field = field_from_json(j.at("field"));
    long long e = get_int(j, "e");
    long long w = get_int(j, "w");
    require(j.contains("minpoly") && j["minpoly"].is_array(), "minpoly must be an array");
    std::vector<LaurentSeries> minpoly;
    for (const auto& c : j["minpoly"]) minpoly.push_back(series_from_json(c, field));
    require(j.contains("group") && j["group"].is_array(), "group must be an array");
    std::vector<GroupElement> group;
    for (const auto& ge : j["group"]) {
        GroupElement g;
        g.id = (int)get_int(ge, "id");
        require(ge.contains("action") && ge["action"].is_array(), "group action must be an array");
        for (const auto& c : ge["action"]) g.action.push_back(series_from_json(c, field));
        group.push_back(std::move(g));
    }
    long long ua = 0, ub = 1;
    if (j.contains("unif")) {
        require(j["unif"].is_array() && j["unif"].size() == 2, "unif must be [a, b]");
        ua = j["unif"][0].get<long long>();
        ub = j["unif"][1].get<long long>();
    } else {
        throw DomainError("datum needs unif exponents [a, b]");
    }
    Family label = j.contains("label") ? family_from_name(j["label"].get<std::string>())
                                       : Family::custom;
    return GaloisDatum::create(field, e, w, std::move(minpoly), std::move(group), ua, ub, label);
}

Json place_to_json(const Place& place) {
    if (place.is_infinity()) return Json("inf");
    return poly_to_json(place.poly());
}

Place place_from_json(const Json& j, const FqFieldPtr& field) {
    if (j.is_string()) {
        require(j == "inf", "place string must be \"inf\"");
        return Place::infinity(field);
    }
    return Place::finite(poly_from_json(j, field));
}

Json divisor_to_json(const EffectiveDivisor& D) {
    Json entries = Json::array();
    for (const auto& [place, mult] : D.entries()) {
        Json e;
        e["place"] = place_to_json(place);
        e["mult"] = mult;
        entries.push_back(e);
    }
    Json j;
    j["entries"] = entries;
    return j;
}

EffectiveDivisor divisor_from_json(const Json& j, const FqFieldPtr& field) {
    require(j.is_object() && j.contains("entries") && j["entries"].is_array(),
            "divisor must be {\"entries\": [...]}");
    EffectiveDivisor D(field);
    for (const auto& e : j["entries"])
        D.add(place_from_json(e.at("place"), field), get_int(e, "mult"));
    return D;
}

Json herbrand_to_json(const HerbrandFunction& f) {
    Json j;
    Json bps = Json::array(), slopes = Json::array(), values = Json::array();
    for (const auto& x : f.breakpoints()) bps.push_back(rational_to_json(x));
    for (const auto& s : f.slopes()) slopes.push_back(rational_to_json(s));
    for (const auto& v : f.values()) values.push_back(rational_to_json(v));
    j["breakpoints"] = bps;
    j["slopes"] = slopes;
    j["values"] = values;
    return j;
}

Json filtration_report_json(const RamificationFiltration& f) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["breaks_lower"] = f.breaks;
    Json upper = Json::array();
    UpperFiltration u = upper_filtration(f);
    for (const auto& b : u.breaks) upper.push_back(rational_to_json(b));
    j["breaks_upper"] = upper;
    Json dvals = Json::object();
    for (const auto& [id, dv] : f.d_values) dvals[std::to_string(id)] = dv;
    j["d_values"] = dvals;
    j["different"] = different_valuation(f);
    j["discriminant"] = discriminant_valuation(f);
    j["phi"] = herbrand_to_json(herbrand_phi(f));
    Json subs = Json::object();
    for (const auto& [mu, mask] : f.subgroup_at) {
        Json ids = Json::array();
        for (int i = 0; i < f.group_size; ++i)
            if (mask >> i & 1) ids.push_back(i);
        subs[std::to_string(mu)] = ids;
    }
    j["subgroups_lower"] = subs;
    return j;
}

Json conductor_report_json(const ConductorReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["swan"] = r.swan.as_integer();
    j["epsilon"] = r.epsilon;
    j["artin"] = r.artin.as_integer();
    return j;
}

Json swan_bound_report_json(const SwanBoundReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["swan"] = rational_to_json(r.swan);
    j["dim_times_lambda"] = rational_to_json(r.dim_times_lambda);
    j["ok"] = r.ok;
    return j;
}

Json base_change_report_json(const BaseChangeReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["eprime"] = r.eprime;
    j["lambda_before"] = rational_to_json(r.lambda_before);
    j["bound"] = rational_to_json(r.bound);
    j["lambda_after"] = rational_to_json(r.lambda_after);
    j["ok"] = r.ok;
    return j;
}

Json census_report_json(const CensusReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["count_classes"] = r.count_classes;
    j["count_fields"] = r.count_fields;
    j["count_constant"] = r.count_constant;
    Json classes = Json::array();
    for (const auto& g : r.classes) {
        Json c;
        c["num"] = poly_to_json(g.num());
        c["den"] = poly_to_json(g.den());
        classes.push_back(c);
    }
    j["classes"] = classes;
    return j;
}

Json chain_report_json(const ChainReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["counts"] = r.counts;
    j["ok"] = r.ok;
    return j;
}

Json verify_report_json(const VerifyReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["all_pass"] = r.all_pass();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

GroupRepresentation representation_from_json(const Json& j, const GroupView& view) {
    require(j.is_object() && j.contains("kind"), "representation needs a kind");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "character") {
        require(j.contains("values") && j["values"].is_array(), "character needs values");
        std::vector<long long> values;
        for (const auto& v : j["values"]) values.push_back(v.get<long long>());
        long long modulus = j.contains("modulus") ? get_int(j, "modulus") : view.size;
        return GroupRepresentation::character(view, std::move(values), modulus);
    }
    if (kind == "trivial_character") return GroupRepresentation::trivial_character(view);
    if (kind == "regular") return GroupRepresentation::regular(view);
    if (kind == "permutation") {
        require(j.contains("images") && j["images"].is_array(), "permutation needs images");
        std::vector<std::vector<int>> images;
        for (const auto& row : j["images"]) images.push_back(row.get<std::vector<int>>());
        return GroupRepresentation::permutation(view, std::move(images));
    }
    if (kind == "direct_sum") {
        require(j.contains("parts") && j["parts"].is_array(), "direct_sum needs parts");
        std::vector<GroupRepresentation> parts;
        for (const auto& part : j["parts"]) parts.push_back(representation_from_json(part, view));
        return GroupRepresentation::direct_sum(std::move(parts));
    }
    throw DomainError("unknown representation kind: " + kind);
}

} // namespace ramlab
