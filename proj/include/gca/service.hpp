#pragma once

#include "gca/classgroup.hpp"
#include "gca/lp.hpp"
#include "gca/seed.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gca::service {

using nlohmann::json;

/// Failure carrying the JSON payload shared by the CLI (stderr, exit code)
/// and the service (HTTP status).
class ServiceError : public std::runtime_error {
public:
    enum class Kind { Invalid, NotFound, Internal };
    ServiceError(Kind kind, json payload)
        : std::runtime_error(payload.value("message", "")), kind_(kind), payload_(std::move(payload)) {}
    Kind kind() const { return kind_; }
    const json& payload() const { return payload_; }
    int exit_code() const { return kind_ == Kind::Internal ? 1 : 2; }
    int http_status() const { return kind_ == Kind::NotFound ? 404 : kind_ == Kind::Internal ? 500 : 422; }

private:
    Kind kind_;
    json payload_;
};

/// {"error": "malformed-input", "location": ..., "message": ...}
ServiceError malformed(const std::string& location, const std::string& message);
/// {"error": "precondition", "precondition": name, "message": ..., "violations"?: [...]}
ServiceError precondition(const std::string& name, const std::string& message, json violations = nullptr);

/// Parses text, reporting the byte offset of a syntax error.
json parse_document(const std::string& text);

json to_json(const GeneralizedSeed& s);
json to_json(const LPSeed& s);
GeneralizedSeed generalized_seed_from_json(const json& doc);
LPSeed lp_seed_from_json(const json& doc);
/// LP documents carry "F"; everything else is a generalized seed.
bool is_lp_document(const json& doc);

std::optional<FieldMode> parse_mode(const std::string& text);

/// Runs an operation, translating library exceptions into ServiceError.
json guarded(const std::function<json()>& op);

// Operations shared by the CLI and the service. Directions are one-based.
json validate(const json& doc);
json mutate(const json& doc, long direction);
json exchange_polys(const json& doc);
json classgroup(const json& doc, std::optional<FieldMode> mode);
json realize(long free_rank, const std::vector<long>& torsion);
json lp_mutate(const json& doc, long direction);
json lp_enumerate(const json& doc, long depth);
json verify_laurent(const json& doc, const std::vector<long>& sequence, double max_terms);
json explore(const json& doc, long max_seeds);

/// Laurent expressions as "(numerator)/(monomial)", e.g. "(x2 + 1)/(x1*x3)".
std::string display(const RationalExpression& e, const std::vector<std::string>& names);

/// Serialized form used on stdout and in HTTP bodies.
std::string render(const json& result, bool pretty = false);

}  // namespace gca::service
