#include "ramlab/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "ramlab/json_io.hpp"

namespace ramlab {

namespace {

struct CommonOpts {
    std::string input_path;
    std::string inline_json;
    std::string output_path;
    std::string family;
    long long p = 0, q = 0, n = 0;
    long long m = 0;
    std::string c = "1";
    long long e = 1;
    int workers = 1;
    long long seed = 0;
};

void add_field_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--p", o.p, "field characteristic");
    cmd->add_option("--q", o.q, "field size (prime power)");
    cmd->add_option("--n", o.n, "extension degree over the prime field");
}

void add_datum_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input_path, "path to a datum JSON document");
    cmd->add_option("--json", o.inline_json, "inline datum JSON");
    cmd->add_option("--family", o.family, "family shorthand: trivial|tame_kummer|artin_schreier");
    add_field_flags(cmd, o);
    cmd->add_option("--m", o.m, "Artin-Schreier pole order");
    cmd->add_option("--c", o.c, "Artin-Schreier coefficient (int or comma-separated coords)");
    cmd->add_option("--e", o.e, "Kummer degree");
}

FqFieldPtr resolve_field(const CommonOpts& o) {
    long long p = o.p, q = o.q, n = o.n;
    if (q == 0 && p == 0) throw DomainError("need --p or --q");
    if (p == 0) {
        p = q;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) { p = d; break; }
    }
    if (q == 0) {
        if (n == 0) n = 1;
        q = 1;
        for (long long i = 0; i < n; ++i) q *= p;
    }
    long long nn = 0, qq = q;
    while (qq > 1 && qq % p == 0) { qq /= p; ++nn; }
    if (qq != 1 || nn < 1 || (n != 0 && n != nn))
        throw DomainError("q must be a power of p");
    return FqField::create_canonical((uint32_t)p, (uint32_t)nn);
}

FqElement parse_element(const std::string& text, const FqFieldPtr& field) {
    std::vector<uint32_t> coords;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        coords.push_back((uint32_t)((std::stoll(tok) % field->p() + field->p()) % field->p()));
    if (coords.empty()) throw DomainError("empty field element");
    if (coords.size() == 1) return field->from_int((long long)coords[0]);
    return field->from_coords(std::move(coords));
}

Json load_json_input(const CommonOpts& o) {
    std::string text;
    if (!o.input_path.empty()) {
        std::ifstream in(o.input_path);
        if (!in) throw DomainError("cannot open input file: " + o.input_path);
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        text = o.inline_json;
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& ex) {
        throw DomainError(std::string("malformed JSON: ") + ex.what());
    }
}

GaloisDatumPtr resolve_datum(const CommonOpts& o) {
    if (!o.input_path.empty() || !o.inline_json.empty()) return datum_from_json(load_json_input(o));
    if (o.family.empty())
        throw DomainError("need --input/--json or --family with its parameters");
    FqFieldPtr field = resolve_field(o);
    Family fam = family_from_name(o.family);
    switch (fam) {
        case Family::trivial: return build_trivial(field);
        case Family::tame_kummer: return build_tame_kummer(field, o.e);
        case Family::artin_schreier:
            return build_artin_schreier(field, o.m, parse_element(o.c, field));
        case Family::custom: break;
    }
    throw DomainError("custom data must be supplied as JSON");
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

// tiny polynomial expression parser: sums of c, t, c*t^k, t^k
FqPolynomial parse_poly_expr(const std::string& expr, const FqFieldPtr& field) {
    std::vector<FqElement> coeffs;
    auto ensure = [&](size_t deg) {
        while (coeffs.size() <= deg) coeffs.push_back(field->zero());
    };
    std::stringstream ss(expr);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = strip(term);
        if (term.empty()) throw DomainError("empty term in polynomial: " + expr);
        size_t tpos = term.find('t');
        if (tpos == std::string::npos) {
            ensure(0);
            coeffs[0] = coeffs[0] + field->from_int(std::stoll(term));
            continue;
        }
        std::string coef_text = strip(term.substr(0, tpos));
        if (!coef_text.empty() && coef_text.back() == '*') coef_text.pop_back();
        FqElement coef = coef_text.empty() ? field->one() : field->from_int(std::stoll(coef_text));
        size_t caret = term.find('^', tpos);
        long long deg = 1;
        if (caret != std::string::npos) deg = std::stoll(term.substr(caret + 1));
        if (deg < 0) throw DomainError("negative exponent in polynomial: " + expr);
        ensure((size_t)deg);
        coeffs[(size_t)deg] = coeffs[(size_t)deg] + coef;
    }
    return FqPolynomial(field, std::move(coeffs));
}

Place parse_place(const std::string& text, const FqFieldPtr& field) {
    std::string s = strip(text);
    if (s == "inf" || s == "infty" || s == "oo") return Place::infinity(field);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw DomainError("unterminated coefficient list: " + s);
        std::vector<FqElement> coeffs;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string tok;
        while (std::getline(ss, tok, ','))
            coeffs.push_back(field->from_int(std::stoll(strip(tok))));
        return Place::finite(FqPolynomial(field, std::move(coeffs)));
    }
    if (s.find('t') != std::string::npos) return Place::finite(parse_poly_expr(s, field));
    // an integer a denotes the rational point t = a
    FqElement a = field->from_int(std::stoll(s));
    return Place::finite(FqPolynomial(field, {-a, field->one()}));
}

EffectiveDivisor parse_divisor(const std::string& text, const FqFieldPtr& field) {
    EffectiveDivisor D(field);
    std::string s = strip(text);
    if (s.empty() || s == "0") return D;
    // split on '+' at bracket depth zero
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    terms.push_back(cur);
    for (const auto& term : terms) {
        std::string tt = strip(term);
        size_t open = tt.find('[');
        if (open == std::string::npos || tt.back() != ']')
            throw DomainError("divisor term must look like m[place]: " + tt);
        long long mult = std::stoll(strip(tt.substr(0, open)));
        Place place = parse_place(tt.substr(open + 1, tt.size() - open - 2), field);
        D.add(place, mult);
    }
    return D;
}

std::set<Place> parse_support(const std::string& text, const FqFieldPtr& field) {
    std::set<Place> S;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = strip(tok);
        if (!tok.empty()) S.insert(parse_place(tok, field));
    }
    return S;
}

void emit(const Json& j, const CommonOpts& o, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (!o.output_path.empty()) {
        std::ofstream f(o.output_path);
        if (!f) throw DomainError("cannot open output file: " + o.output_path);
        f << text;
    } else {
        out << text;
    }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ramification invariants of local fields F_q((t)) and abelian covers of P^1"};
    app.require_subcommand(1);

    CommonOpts o;
    app.add_option("--output", o.output_path, "write the JSON report to a file");
    app.add_option("--workers", o.workers, "parallel census workers")->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "seed for sampled property runs (reserved; checks are exhaustive)");

    auto* cmd_filtration = app.add_subcommand("filtration", "lower/upper filtration report");
    add_datum_flags(cmd_filtration, o);
    auto* cmd_herbrand = app.add_subcommand("herbrand", "Herbrand phi/psi tables");
    add_datum_flags(cmd_herbrand, o);
    long long samples = 0;
    cmd_herbrand->add_option("--samples", samples, "emit a dense rational sampling of phi");
    auto* cmd_swan = app.add_subcommand("swan", "Swan conductor of a representation");
    add_datum_flags(cmd_swan, o);
    std::string rep_json = R"({"kind":"regular"})";
    cmd_swan->add_option("--rep", rep_json, "representation JSON");
    auto* cmd_artin = app.add_subcommand("artin", "Artin conductor report");
    add_datum_flags(cmd_artin, o);
    cmd_artin->add_option("--rep", rep_json, "representation JSON");
    auto* cmd_different = app.add_subcommand("different", "different/discriminant valuations");
    add_datum_flags(cmd_different, o);
    auto* cmd_bound = app.add_subcommand("bound", "discriminant-to-ramification bound n*n!*m");
    long long bound_m = 0, bound_n = 1;
    cmd_bound->add_option("--m", bound_m, "discriminant valuation bound")->required();
    cmd_bound->add_option("--n", bound_n, "extension degree")->required();
    auto* cmd_bcc = app.add_subcommand("base-change-check", "ramification bound under base change");
    add_datum_flags(cmd_bcc, o);
    long long eprime = 1;
    cmd_bcc->add_option("--eprime", eprime, "base ramification index e'")->required();
    auto* cmd_census_as = app.add_subcommand("census-as", "Artin-Schreier cover census");
    add_field_flags(cmd_census_as, o);
    std::string divisor_text = "0";
    cmd_census_as->add_option("--divisor", divisor_text, "bound divisor, e.g. \"3[inf]\"")->required();
    long long census_cap = 12;
    cmd_census_as->add_option("--cap", census_cap, "divisor degree cap");
    auto* cmd_census_k = app.add_subcommand("census-kummer", "tame Kummer cover census");
    add_field_flags(cmd_census_k, o);
    long long kummer_e = 1;
    std::string support_text;
    cmd_census_k->add_option("--e", kummer_e, "Kummer degree (e | q-1)")->required();
    cmd_census_k->add_option("--support", support_text, "allowed ramification places, e.g. \"0,inf\"");
    auto* cmd_chain = app.add_subcommand("census-chain", "census monotonicity along a divisor chain");
    add_field_flags(cmd_chain, o);
    std::string chain_text;
    cmd_chain->add_option("--chain", chain_text, "divisors separated by ';'")->required();
    cmd_chain->add_option("--cap", census_cap, "divisor degree cap");
    auto* cmd_verify = app.add_subcommand("verify", "verify a Galois datum");
    add_datum_flags(cmd_verify, o);

    try {
        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& ex) {
            if (ex.get_exit_code() == 0) { // --help
                out << app.help();
                return 0;
            }
            throw DomainError(std::string("argument error: ") + ex.what());
        }

        if (cmd_filtration->parsed()) {
            auto filt = lower_filtration(resolve_datum(o));
            emit(filtration_report_json(filt), o, out);
        } else if (cmd_herbrand->parsed()) {
            auto filt = lower_filtration(resolve_datum(o));
            HerbrandFunction phi = herbrand_phi(filt);
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["phi"] = herbrand_to_json(phi);
            j["psi"] = herbrand_to_json(herbrand_psi(phi));
            if (samples > 0) {
                Json table = Json::array();
                Rational hi = Rational(filt.max_break() >= 0 ? filt.max_break() + 1 : 1);
                for (long long i = 0; i <= samples; ++i) {
                    Rational x = Rational(-1) + (hi - Rational(-1)) * Rational(i, samples);
                    table.push_back(Json::array({rational_to_json(x), rational_to_json(phi.eval(x))}));
                }
                j["samples"] = table;
            }
            emit(j, o, out);
        } else if (cmd_swan->parsed()) {
            auto d = resolve_datum(o);
            auto u = upper_filtration(lower_filtration(d));
            auto rep = representation_from_json(Json::parse(rep_json, nullptr, true), d->group_view());
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["swan"] = swan_conductor(u, rep).as_integer();
            emit(j, o, out);
        } else if (cmd_artin->parsed()) {
            auto d = resolve_datum(o);
            auto u = upper_filtration(lower_filtration(d));
            auto rep = representation_from_json(Json::parse(rep_json, nullptr, true), d->group_view());
            emit(conductor_report_json(artin_conductor(u, rep)), o, out);
        } else if (cmd_different->parsed()) {
            auto filt = lower_filtration(resolve_datum(o));
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["different"] = different_valuation(filt);
            j["discriminant"] = discriminant_valuation(filt);
            emit(j, o, out);
        } else if (cmd_bound->parsed()) {
            Json j;
            j["schema_version"] = kSchemaVersion;
            j["m_prime"] = disc_bound_to_ram_bound(bound_m, bound_n);
            emit(j, o, out);
        } else if (cmd_bcc->parsed()) {
            emit(base_change_report_json(check_base_change_bound(resolve_datum(o), eprime)), o, out);
        } else if (cmd_census_as->parsed()) {
            FqFieldPtr field = resolve_field(o);
            EffectiveDivisor D = parse_divisor(divisor_text, field);
            CensusOptions opts;
            opts.degree_cap = census_cap;
            opts.workers = o.workers;
            emit(census_report_json(census_artin_schreier(field, D, opts)), o, out);
        } else if (cmd_census_k->parsed()) {
            FqFieldPtr field = resolve_field(o);
            emit(census_report_json(census_kummer(field, parse_support(support_text, field), kummer_e)),
                 o, out);
        } else if (cmd_chain->parsed()) {
            FqFieldPtr field = resolve_field(o);
            std::vector<EffectiveDivisor> chain;
            std::stringstream ss(chain_text);
            std::string tok;
            while (std::getline(ss, tok, ';')) chain.push_back(parse_divisor(tok, field));
            CensusOptions opts;
            opts.degree_cap = census_cap;
            opts.workers = o.workers;
            emit(chain_report_json(census_monotonicity_check(field, chain, opts)), o, out);
        } else if (cmd_verify->parsed()) {
            emit(verify_report_json(verify_datum(resolve_datum(o))), o, out);
        }
        return 0;
    } catch (const PrecisionError& ex) {
        Json j{{"schema_version", kSchemaVersion},
               {"error", {{"type", "precision"}, {"message", ex.what()}}}};
        out << j.dump(2) << "\n";
        err << "precision error: " << ex.what() << "\n";
        return 2;
    } catch (const ResourceError& ex) {
        Json j{{"schema_version", kSchemaVersion},
               {"error", {{"type", "resource"}, {"message", ex.what()}}}};
        out << j.dump(2) << "\n";
        err << "resource error: " << ex.what() << "\n";
        return 2;
    } catch (const InternalInconsistencyError& ex) {
        Json j{{"schema_version", kSchemaVersion},
               {"error", {{"type", "internal"}, {"message", ex.what()}}}};
        out << j.dump(2) << "\n";
        err << "internal inconsistency: " << ex.what() << "\n";
        return 3;
    } catch (const UnsupportedFamilyError& ex) {
        Json j{{"schema_version", kSchemaVersion},
               {"error", {{"type", "unsupported"}, {"message", ex.what()}}}};
        out << j.dump(2) << "\n";
        err << "unsupported: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        Json j{{"schema_version", kSchemaVersion},
               {"error", {{"type", "domain"}, {"message", ex.what()}}}};
        out << j.dump(2) << "\n";
        err << "error: " << ex.what() << "\n";
        return 1;
    }
}

} // namespace ramlab
