#include "gca/server.hpp"

#include <httplib.h>

#include <iostream>

namespace gca::service {

namespace {

constexpr std::size_t max_tracked_terms = 5000;

std::vector<RationalExpression> initial_cluster(std::size_t size) {
    std::vector<RationalExpression> out;
    for (std::size_t i = 0; i < size; ++i)
        out.emplace_back(LaurentPolynomial::variable(size, i));
    return out;
}

json expression_strings(const std::vector<RationalExpression>& exprs, const std::vector<std::string>& names,
                        bool shown) {
    json out = json::array();
    for (const auto& e : exprs)
        out.push_back(shown ? display(e, names) : e.to_string(names));
    return out;
}

ServiceError not_found(const std::string& id) {
    return ServiceError(ServiceError::Kind::NotFound,
                        {{"error", "not-found"}, {"message", "no session " + id}});
}

}  // namespace

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end())
        throw not_found(id);
    return it->second;
}

json SessionStore::create(const json& doc) {
    auto session = std::make_shared<Session>();
    guarded([&] {
        service::validate(doc);
        session->lp = is_lp_document(doc);
        session->initial = session->lp ? to_json(lp_seed_from_json(doc)) : to_json(generalized_seed_from_json(doc));
        const std::size_t size = session->lp ? lp_seed_from_json(doc).n
                                             : session->initial["n"].get<std::size_t>() +
                                                   session->initial["m"].get<std::size_t>();
        session->stack.push_back({session->initial, initial_cluster(size), true});
        return json();
    });
    std::string id;
    {
        std::lock_guard lock(mutex_);
        id = "s" + std::to_string(next_id_++);
        sessions_[id] = session;
    }
    std::lock_guard lock(session->mutex);
    return render_view(id, *session, std::nullopt);
}

json SessionStore::view(const std::string& id, std::optional<FieldMode> mode) {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    return render_view(id, *session, mode);
}

json SessionStore::mutate(const std::string& id, const json& body) {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    if (!body.is_object() || !body.contains("direction") || !body["direction"].is_number_integer())
        throw malformed("direction", "expected {\"direction\": k}");
    const long k = body["direction"].get<long>();
    const State& top = session->stack.back();
    State next;
    next.seed = guarded([&] { return service::mutate(top.seed, k); });
    next.expressions = top.expressions;
    next.expressions_complete = top.expressions_complete;
    if (next.expressions_complete) {
        guarded([&] {
            const auto i = static_cast<std::size_t>(k - 1);
            if (session->lp) {
                next.expressions[i] = lp_exchange(lp_seed_from_json(top.seed), i, top.expressions);
            } else {
                const auto f = exchange_polynomial(generalized_seed_from_json(top.seed), i);
                next.expressions[i] = evaluate(f, top.expressions) / top.expressions[i];
            }
            if (next.expressions[i].numerator().size() + next.expressions[i].denominator().size() > max_tracked_terms)
                next.expressions_complete = false;
            return json();
        });
    }
    session->stack.push_back(std::move(next));
    session->history.push_back(k);
    return render_view(id, *session, std::nullopt);
}

json SessionStore::undo(const std::string& id) {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    if (session->history.empty())
        throw precondition("history", "nothing to undo");
    session->stack.pop_back();
    session->history.pop_back();
    return render_view(id, *session, std::nullopt);
}

json SessionStore::classgroup(const std::string& id, std::optional<FieldMode> mode) {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    return classgroup_payload(*session, mode);
}

bool SessionStore::replay_matches(const std::string& id) {
    auto session = find(id);
    std::lock_guard lock(session->mutex);
    json seed = session->initial;
    for (long k : session->history)
        seed = service::mutate(seed, k);
    return seed == session->stack.back().seed;
}

json SessionStore::classgroup_payload(const Session& s, std::optional<FieldMode> mode) {
    if (s.lp)
        return {{"error", "preconditions-not-met"},
                {"precondition", "generalized-seed"},
                {"message", "class groups are computed for generalized seeds"}};
    try {
        return guarded([&] { return service::classgroup(s.stack.back().seed, mode); });
    } catch (const ServiceError& e) {
        if (e.kind() == ServiceError::Kind::Internal)
            throw;
        json payload = e.payload();
        payload["error"] = "preconditions-not-met";
        return payload;
    }
}

json SessionStore::render_view(const std::string& id, Session& s, std::optional<FieldMode> mode) {
    const State& top = s.stack.back();
    json out{{"id", id}, {"kind", s.lp ? "lp" : "generalized"}, {"seed", top.seed}, {"history", s.history}};
    return guarded([&] {
        json vertices = json::array(), edges = json::array();
        std::vector<std::string> names;
        if (s.lp) {
            const auto seed = lp_seed_from_json(top.seed);
            names = seed.names;
            for (std::size_t i = 0; i < seed.n; ++i)
                vertices.push_back({{"index", i + 1}, {"name", names[i]}, {"frozen", false}});
            // j -> i when x_j occurs in F_i
            for (std::size_t i = 0; i < seed.n; ++i)
                for (std::size_t j = 0; j < seed.n; ++j)
                    if (seed.F[i].involves(j))
                        edges.push_back({j + 1, i + 1});
            out["exchange_polynomials"] = top.seed["F"];
            out["sign_skew_symmetric"] = is_sign_skew_symmetric(seed);
        } else {
            const auto seed = generalized_seed_from_json(top.seed);
            names = seed.names;
            for (std::size_t i = 0; i < seed.n + seed.m; ++i)
                vertices.push_back({{"index", i + 1}, {"name", names[i]}, {"frozen", i >= seed.n}});
            for (const auto& [a, b] : digraph(seed).edges)
                edges.push_back({a + 1, b + 1});
            out["exchange_polynomials"] = exchange_polys(top.seed)["exchange_polynomials"];
            out["acyclic"] = is_acyclic(seed);
            out["coprime"] = is_coprime(seed);
            out["class_group"] = classgroup_payload(s, mode);
        }
        out["graph"] = {{"vertices", vertices}, {"edges", edges}};
        const auto initial_names = s.initial["names"].get<std::vector<std::string>>();
        if (top.expressions_complete) {
            out["expressions"] = expression_strings(top.expressions, initial_names, false);
            out["display"] = expression_strings(top.expressions, initial_names, true);
        } else {
            out["expressions"] = nullptr;
            out["display"] = nullptr;
        }
        return out;
    });
}

namespace {

void respond(httplib::Response& res, const std::function<json()>& op) {
    res.set_header("Access-Control-Allow-Origin", "*");
    try {
        res.set_content(render(op()), "application/json");
    } catch (const ServiceError& e) {
        res.status = e.http_status();
        res.set_content(render(e.payload()), "application/json");
    } catch (const std::exception& e) {
        res.status = 500;
        res.set_content(render({{"error", "internal"}, {"message", e.what()}}), "application/json");
    }
}

std::optional<FieldMode> mode_of(const httplib::Request& req) {
    if (!req.has_param("mode"))
        return std::nullopt;
    const auto mode = parse_mode(req.get_param_value("mode"));
    if (!mode)
        throw malformed("mode", "expected rational or closed");
    return mode;
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
    server.Post("/session", [&](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] { return store.create(parse_document(req.body)); });
    });
    server.Get(R"(/session/([A-Za-z0-9]+))", [&](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] { return store.view(req.matches[1], mode_of(req)); });
    });
    server.Post(R"(/session/([A-Za-z0-9]+)/mutate)", [&](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] { return store.mutate(req.matches[1], parse_document(req.body)); });
    });
    server.Post(R"(/session/([A-Za-z0-9]+)/undo)", [&](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] { return store.undo(req.matches[1]); });
    });
    server.Get(R"(/session/([A-Za-z0-9]+)/classgroup)", [&](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] { return store.classgroup(req.matches[1], mode_of(req)); });
    });
    server.Post("/realize", [&](const httplib::Request& req, httplib::Response& res) {
        respond(res, [&] {
            const json body = parse_document(req.body);
            if (!body.is_object() || !body.contains("free_rank") || !body["free_rank"].is_number_integer())
                throw malformed("free_rank", "expected an integer");
            std::vector<long> torsion;
            if (body.contains("torsion")) {
                if (!body["torsion"].is_array())
                    throw malformed("torsion", "expected an array");
                for (const auto& t : body["torsion"]) {
                    if (!t.is_number_integer())
                        throw malformed("torsion", "expected integers");
                    torsion.push_back(t.get<long>());
                }
            }
            return guarded([&] { return realize(body["free_rank"].get<long>(), torsion); });
        });
    });
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
}

int serve(const std::string& host, int port) {
    httplib::Server server;
    SessionStore store;
    install_routes(server, store);
    std::cerr << "listening on http://" << host << ":" << port << "\n";
    return server.listen(host, port) ? 0 : 1;
}

}  // namespace gca::service
