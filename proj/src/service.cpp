#include "gca/service.hpp"

#include "gca/errors.hpp"
#include "gca/mutation_class.hpp"
#include "gca/realize.hpp"
#include "gca/text.hpp"

namespace gca::service {

namespace {

json integer(const Integer& v) {
    if (v.fits_slong_p())
        return v.get_si();
    return v.get_str();
}

std::string ring_name(GroundRing r) {
    switch (r) {
    case GroundRing::Integers:
        return "Z";
    case GroundRing::Rationals:
        return "Q";
    case GroundRing::AlgebraicClosure:
        return "Qbar";
    }
    return "Q";
}

GroundRing parse_ring(const json& doc) {
    if (!doc.contains("ring"))
        return GroundRing::Rationals;
    const auto& r = doc["ring"];
    if (r == "Z")
        return GroundRing::Integers;
    if (r == "Q")
        return GroundRing::Rationals;
    if (r == "Qbar")
        return GroundRing::AlgebraicClosure;
    throw malformed("ring", "expected \"Z\", \"Q\" or \"Qbar\"");
}

std::int64_t get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer())
        throw malformed(where, "expected an integer");
    return v.get<std::int64_t>();
}

std::size_t get_count(const json& doc, const std::string& key) {
    if (!doc.contains(key))
        throw malformed(key, "missing");
    const auto v = get_int(doc[key], key);
    if (v < 0)
        throw malformed(key, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

const json& get_array(const json& doc, const std::string& key, std::size_t size, const std::string& where) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw malformed(where, "expected an array");
    if (doc[key].size() != size)
        throw malformed(where, "expected " + std::to_string(size) + " entries");
    return doc[key];
}

std::vector<std::string> get_names(const json& doc, std::size_t count) {
    if (!doc.contains("names"))
        return default_names(count);
    const auto& names = get_array(doc, "names", count, "names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < count; ++i) {
        if (!names[i].is_string())
            throw malformed("names[" + std::to_string(i) + "]", "expected a string");
        out.push_back(names[i].get<std::string>());
    }
    return out;
}

LaurentPolynomial get_polynomial(const json& v, const std::vector<std::string>& names, const std::string& where) {
    if (v.is_number_integer())
        return LaurentPolynomial::constant(names.size(), Rational(v.get<long>()));
    if (!v.is_string())
        throw malformed(where, "expected a polynomial string");
    try {
        return parse_polynomial(v.get<std::string>(), names);
    } catch (const ParseError& e) {
        throw malformed(where, e.what());
    } catch (const std::exception& e) {
        throw malformed(where, e.what());
    }
}

std::string at(const std::string& key, std::size_t i) { return key + "[" + std::to_string(i) + "]"; }

json violations_json(const std::vector<Violation>& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back({{"code", x.code}, {"message", x.message}});
    return out;
}

GeneralizedSeed valid_generalized(const json& doc) {
    auto s = generalized_seed_from_json(doc);
    const auto v = validate_seed(s);
    if (!v.empty())
        throw precondition("valid-seed", v.front().message, violations_json(v));
    return s;
}

LPSeed valid_lp(const json& doc) {
    auto s = lp_seed_from_json(doc);
    const auto v = validate_lp_seed(s);
    if (!v.ok())
        throw precondition("valid-lp-seed", v.violations.front().message, violations_json(v.violations));
    return s;
}

std::size_t direction(long k, std::size_t n) {
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw precondition("direction", "direction " + std::to_string(k) + " is outside 1.." + std::to_string(n));
    return static_cast<std::size_t>(k - 1);
}

std::vector<std::string> strings(const std::vector<LaurentPolynomial>& ps, const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (const auto& p : ps)
        out.push_back(to_string(p, names));
    return out;
}

json matrix_json(const IntegerMatrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(integer(m(r, c)));
        out.push_back(row);
    }
    return out;
}

json integers(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(integer(x));
    return out;
}

}  // namespace

ServiceError malformed(const std::string& location, const std::string& message) {
    return ServiceError(ServiceError::Kind::Invalid,
                        {{"error", "malformed-input"}, {"location", location}, {"message", message}});
}

ServiceError precondition(const std::string& name, const std::string& message, json violations) {
    json payload{{"error", "precondition"}, {"precondition", name}, {"message", message}};
    if (!violations.is_null())
        payload["violations"] = std::move(violations);
    return ServiceError(ServiceError::Kind::Invalid, std::move(payload));
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw malformed("byte " + std::to_string(e.byte), e.what());
    }
}

json to_json(const GeneralizedSeed& s) {
    json B = json::array();
    for (std::size_t r = 0; r < s.B.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < s.B.cols(); ++c)
            row.push_back(s.B(r, c));
        B.push_back(row);
    }
    json rho = json::array();
    for (const auto& string : s.rho)
        rho.push_back(strings(string, s.names));
    return {{"ring", ring_name(s.ring)}, {"n", s.n}, {"m", s.m}, {"names", s.names},
            {"B", B},                    {"d", s.d}, {"rho", rho}};
}

json to_json(const LPSeed& s) {
    return {{"ring", ring_name(s.ring)}, {"n", s.n}, {"names", s.names}, {"F", strings(s.F, s.names)}};
}

bool is_lp_document(const json& doc) { return doc.is_object() && doc.contains("F"); }

GeneralizedSeed generalized_seed_from_json(const json& doc) {
    if (!doc.is_object())
        throw malformed("document", "expected an object");
    GeneralizedSeed s;
    s.ring = parse_ring(doc);
    s.n = get_count(doc, "n");
    s.m = doc.contains("m") ? get_count(doc, "m") : 0;
    const std::size_t N = s.n + s.m;
    s.names = get_names(doc, N);
    const auto& B = get_array(doc, "B", N, "B");
    s.B = ExchangeMatrix(N, s.n);
    for (std::size_t r = 0; r < N; ++r) {
        if (!B[r].is_array() || B[r].size() != s.n)
            throw malformed(at("B", r), "expected " + std::to_string(s.n) + " entries");
        for (std::size_t c = 0; c < s.n; ++c)
            s.B(r, c) = get_int(B[r][c], at("B", r) + "[" + std::to_string(c) + "]");
    }
    if (doc.contains("d")) {
        const auto& d = get_array(doc, "d", s.n, "d");
        for (std::size_t i = 0; i < s.n; ++i)
            s.d.push_back(get_int(d[i], at("d", i)));
    } else {
        s.d.assign(s.n, 1);
    }
    if (doc.contains("rho")) {
        const auto& rho = get_array(doc, "rho", s.n, "rho");
        for (std::size_t i = 0; i < s.n; ++i) {
            if (!rho[i].is_array())
                throw malformed(at("rho", i), "expected an array");
            std::vector<LaurentPolynomial> string;
            for (std::size_t j = 0; j < rho[i].size(); ++j)
                string.push_back(get_polynomial(rho[i][j], s.names, at("rho", i) + "[" + std::to_string(j) + "]"));
            s.rho.push_back(std::move(string));
        }
    } else {
        for (std::size_t i = 0; i < s.n; ++i) {
            if (s.d[i] != 1)
                throw malformed("rho", "strings are required when some d_i differs from 1");
            s.rho.push_back({LaurentPolynomial::constant(N, 1), LaurentPolynomial::constant(N, 1)});
        }
    }
    return s;
}

LPSeed lp_seed_from_json(const json& doc) {
    if (!doc.is_object())
        throw malformed("document", "expected an object");
    LPSeed s;
    s.ring = parse_ring(doc);
    s.n = get_count(doc, "n");
    s.names = get_names(doc, s.n);
    const auto& F = get_array(doc, "F", s.n, "F");
    for (std::size_t i = 0; i < s.n; ++i)
        s.F.push_back(get_polynomial(F[i], s.names, at("F", i)));
    return s;
}

std::optional<FieldMode> parse_mode(const std::string& text) {
    if (text == "rational")
        return FieldMode::Rational;
    if (text == "closed")
        return FieldMode::AlgebraicallyClosed;
    return std::nullopt;
}

json guarded(const std::function<json()>& op) {
    try {
        return op();
    } catch (const ServiceError&) {
        throw;
    } catch (const PreconditionError& e) {
        throw precondition(e.name(), e.what());
    } catch (const ResourceLimitExceeded& e) {
        throw precondition("budget", e.what());
    } catch (const ParseError& e) {
        throw malformed("input", e.what());
    } catch (const json::exception& e) {
        throw malformed("document", e.what());
    } catch (const std::exception& e) {
        throw ServiceError(ServiceError::Kind::Internal, {{"error", "internal"}, {"message", e.what()}});
    }
}

json validate(const json& doc) {
    if (is_lp_document(doc)) {
        const auto s = valid_lp(doc);
        const auto v = validate_lp_seed(s);
        json irreducibility = json::array();
        for (auto flag : v.irreducibility)
            irreducibility.push_back(flag == Irreducibility::Verified ? "verified" : "accepted-unverified");
        return {{"kind", "lp"},
                {"valid", true},
                {"irreducibility", irreducibility},
                {"sign_skew_symmetric", is_sign_skew_symmetric(s)}};
    }
    const auto s = valid_generalized(doc);
    return {{"kind", "generalized"}, {"valid", true}, {"acyclic", is_acyclic(s)}, {"coprime", is_coprime(s)}};
}

json mutate(const json& doc, long k) {
    if (is_lp_document(doc))
        return lp_mutate(doc, k);
    const auto s = valid_generalized(doc);
    return to_json(gca::mutate(s, direction(k, s.n)));
}

json exchange_polys(const json& doc) {
    if (is_lp_document(doc)) {
        const auto s = valid_lp(doc);
        return {{"exchange_polynomials", strings(s.F, s.names)},
                {"exchange_laurent", strings(exchange_laurent(s).Fhat, s.names)}};
    }
    const auto s = valid_generalized(doc);
    return {{"exchange_polynomials", strings(exchange_polynomials(s), s.names)}};
}

json classgroup(const json& doc, std::optional<FieldMode> requested) {
    const auto s = generalized_seed_from_json(doc);
    const FieldMode mode = requested.value_or(default_mode(s.ring));
    const ClassGroupResult g = class_group(s, mode);
    json primes = json::array();
    for (const auto& p : g.primes) {
        json prime{{"source", p.source + 1}, {"multiplicity", p.multiplicity}};
        if (p.factor) {
            prime["witness"] = to_string(*p.factor, s.names);
        } else {
            const auto& w = *p.closed;
            prime["witness"] = {{"monomial", to_string(LaurentPolynomial::monomial(w.direction), s.names)},
                                {"stretch", w.stretch},
                                {"block", w.block.to_string("t")},
                                {"block_degree", w.block_degree},
                                {"root", w.root + 1}};
        }
        primes.push_back(prime);
    }
    json images = json::array();
    for (const auto& image : g.images)
        images.push_back(integers(image));
    return {{"mode", mode == FieldMode::Rational ? "rational" : "closed"},
            {"r", g.r},
            {"free_rank", g.free_rank},
            {"torsion", integers(g.torsion)},
            {"primes", primes},
            {"valuation", matrix_json(g.valuation)},
            {"images", images}};
}

json realize(long free_rank, const std::vector<long>& torsion) {
    if (free_rank < 0)
        throw malformed("free-rank", "expected a non-negative integer");
    AbelianGroupSpec spec{static_cast<std::size_t>(free_rank), {}};
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i] < 1)
            throw malformed(at("torsion", i), "expected a positive integer");
        spec.torsion.push_back(torsion[i]);
    }
    spec = spec.normalized();
    const GeneralizedSeed s = realize_seed(spec);
    const ClassGroupResult g = class_group(s, FieldMode::AlgebraicallyClosed);
    const bool verified = g.free_rank == spec.free_rank && g.torsion == invariant_factors(spec);
    return {{"seed", to_json(s)},
            {"requested", {{"free_rank", spec.free_rank}, {"torsion", spec.torsion}}},
            {"class_group", {{"free_rank", g.free_rank}, {"torsion", integers(g.torsion)}}},
            {"verified", verified}};
}

json lp_mutate(const json& doc, long k) {
    const auto s = valid_lp(doc);
    return to_json(gca::lp_mutate(s, direction(k, s.n)));
}

std::string display(const RationalExpression& e, const std::vector<std::string>& names) {
    if (!e.is_laurent() || e.numerator().is_zero())
        return e.to_string(names);
    const auto [shift, rest] = e.numerator().split_monomial();
    ExponentVector up(shift.size()), down(shift.size());
    bool has_down = false;
    for (std::size_t i = 0; i < shift.size(); ++i) {
        up[i] = std::max<std::int64_t>(shift[i], 0);
        down[i] = std::max<std::int64_t>(-shift[i], 0);
        has_down = has_down || down[i] > 0;
    }
    const auto num = rest.shifted(up);
    std::string top = to_string(num, names);
    if (!has_down)
        return top;
    if (num.size() > 1)
        top = "(" + top + ")";
    std::string bottom = to_string(LaurentPolynomial::monomial(down), names);
    if (bottom.find('*') != std::string::npos)
        bottom = "(" + bottom + ")";
    return top + "/" + bottom;
}

json lp_enumerate(const json& doc, long depth) {
    if (depth < 0)
        throw malformed("depth", "expected a non-negative integer");
    const auto s = valid_lp(doc);
    const auto e = enumerate_lp_cluster_variables(s, static_cast<std::size_t>(depth));
    json variables = json::array(), shown = json::array();
    for (const auto& v : e.variables) {
        variables.push_back(v.to_string(s.names));
        shown.push_back(display(v, s.names));
    }
    return {{"depth", depth},
            {"count", e.variables.size()},
            {"variables", variables},
            {"display", shown},
            {"seeds_visited", e.seeds_visited},
            {"repeated_exchange_laurent", e.repeated_exchange_laurent}};
}

json verify_laurent(const json& doc, const std::vector<long>& sequence, double max_terms) {
    const auto s = valid_generalized(doc);
    std::vector<std::size_t> seq;
    for (long k : sequence)
        seq.push_back(direction(k, s.n));
    const auto exprs = expand_in_initial(s, seq, gca::mutate, ExpansionLimits{max_terms});
    json shown = json::array();
    bool laurent = true;
    for (const auto& e : exprs) {
        shown.push_back(e.to_string(s.names));
        laurent = laurent && e.is_laurent();
    }
    return {{"sequence", sequence}, {"laurent", laurent}, {"expressions", shown}};
}

json explore(const json& doc, long max_seeds) {
    if (max_seeds < 1)
        throw malformed("max-seeds", "expected a positive integer");
    const auto s = valid_generalized(doc);
    const auto r = explore_mutation_class(s, static_cast<std::size_t>(max_seeds));
    return {{"max_seeds", max_seeds}, {"seeds_found", r.seeds_found}, {"exhausted", r.exhausted}};
}

std::string render(const json& result, bool pretty) { return (pretty ? result.dump(2) : result.dump()) + "\n"; }

}  // namespace gca::service
