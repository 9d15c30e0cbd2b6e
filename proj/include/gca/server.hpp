#pragma once

#include "gca/service.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace httplib {
class Server;
}

namespace gca::service {

/// Exploration sessions over a generalized or LP seed. Each session keeps the
/// stack of visited states; the top is the current seed and replaying the
/// history from the initial seed reproduces it.
class SessionStore {
public:
    json create(const json& seed_document);
    json view(const std::string& id, std::optional<FieldMode> mode = std::nullopt);
    /// body {"direction": k}, one-based.
    json mutate(const std::string& id, const json& body);
    json undo(const std::string& id);
    /// Class group payload, or {"error": "preconditions-not-met", ...}.
    json classgroup(const std::string& id, std::optional<FieldMode> mode = std::nullopt);
    /// True when replaying the history from the initial seed gives the current seed.
    bool replay_matches(const std::string& id);

private:
    struct State {
        json seed;
        std::vector<RationalExpression> expressions;
        bool expressions_complete = true;
    };
    struct Session {
        std::mutex mutex;
        bool lp = false;
        json initial;
        std::vector<long> history;
        std::vector<State> stack;
    };

    std::shared_ptr<Session> find(const std::string& id);
    json render_view(const std::string& id, Session& s, std::optional<FieldMode> mode);
    json classgroup_payload(const Session& s, std::optional<FieldMode> mode);

    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::size_t next_id_ = 1;
};

/// Routes: POST /session, GET /session/{id}, POST /session/{id}/mutate,
/// POST /session/{id}/undo, GET /session/{id}/classgroup, POST /realize.
void install_routes(httplib::Server& server, SessionStore& store);

/// Blocks serving on host:port.
int serve(const std::string& host, int port);

}  // namespace gca::service
