#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gca/server.hpp"
#include "random_seeds.hpp"

#include <httplib.h>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>
#include <thread>

using namespace gca;
using namespace gca::service;

namespace {

const std::string seeds = GCA_SEEDS_DIR;

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(GCA_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        out.append(buffer, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

json load(const std::string& name) { return parse_document(read_file(seeds + "/" + name)); }

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = std::string(GCA_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

struct LiveServer {
    httplib::Server server;
    SessionStore store;
    std::thread thread;
    int port = 0;

    LiveServer() {
        install_routes(server, store);
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~LiveServer() {
        server.stop();
        thread.join();
    }
    httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

std::string post(httplib::Client& c, const std::string& path, const json& body, int expected = 200) {
    auto res = c.Post(path, body.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == expected);
    return res->body;
}

std::string get(httplib::Client& c, const std::string& path, int expected = 200) {
    auto res = c.Get(path);
    REQUIRE(res);
    CHECK(res->status == expected);
    return res->body;
}

}  // namespace

TEST_SUITE("seed json") {
    TEST_CASE("round trip") {
        for (const auto& name : {"torsion_z2.json", "a2.json", "cycle3.json"}) {
            const auto s = generalized_seed_from_json(load(name));
            CHECK(generalized_seed_from_json(to_json(s)) == s);
        }
        const auto lp = lp_seed_from_json(load("a3_lp.json"));
        CHECK(lp_seed_from_json(to_json(lp)) == lp);
        std::mt19937 rng(3);
        for (int t = 0; t < 30; ++t) {
            const auto s = testing::random_seed(rng);
            CHECK(generalized_seed_from_json(to_json(s)) == s);
        }
    }

    TEST_CASE("defaults") {
        const auto s = generalized_seed_from_json(load("a2.json"));
        CHECK(s.d == std::vector<std::int64_t>{1, 1});
        CHECK(s.names == std::vector<std::string>{"x1", "x2"});
        CHECK(s.ring == GroundRing::Rationals);
        CHECK(s == GeneralizedSeed::classical({{0, 1}, {-1, 0}}, 2));
    }

    TEST_CASE("malformed documents name the location") {
        auto location = [](const std::string& text) {
            try {
                generalized_seed_from_json(parse_document(text));
            } catch (const ServiceError& e) {
                return e.payload()["location"].get<std::string>();
            }
            return std::string();
        };
        CHECK(location(R"({"n": 2, "B": [[0, 1], [-1, "a"]]})") == "B[1][1]");
        CHECK(location(R"({"n": 2, "B": [[0, 1]]})") == "B");
        CHECK(location(R"({"n": 1, "B": [[0]], "d": [2], "rho": [["1", "2*", "1"]]})") == "rho[0][1]");
        CHECK(location(R"({"n": 1, "B": [[0]], "ring": "R"})") == "ring");
        CHECK(location(R"({"n": 2, "B": )") == "byte 15");
    }
}

TEST_SUITE("cli") {
    TEST_CASE("class group of the torsion example") {
        const auto r = run("classgroup " + seeds + "/torsion_z2.json");
        CHECK(r.status == 0);
        const auto out = parse_document(r.out);
        CHECK(out["free_rank"] == 0);
        CHECK(out["torsion"] == json::array({2}));
        CHECK(out["valuation"] == json::parse("[[1,0],[0,2]]"));
    }

    TEST_CASE("mutate twice returns the seed") {
        const auto once = run("mutate --dir 1 " + seeds + "/torsion_z2.json");
        REQUIRE(once.status == 0);
        CHECK(parse_document(once.out)["B"] == json::parse("[[0,2],[-1,0]]"));
        const auto path = write_temp("once.json", once.out);
        const auto twice = run("mutate --dir 1 " + path);
        CHECK(twice.status == 0);
        CHECK(twice.out == render(to_json(generalized_seed_from_json(load("torsion_z2.json")))));
    }

    TEST_CASE("realize") {
        const auto r = run("realize --free-rank 2 --torsion 3");
        CHECK(r.status == 0);
        const auto out = parse_document(r.out);
        CHECK(out["class_group"] == json::parse(R"({"free_rank":2,"torsion":[3]})"));
        CHECK(out["verified"] == true);
        CHECK(out["seed"]["n"] == 4);
    }

    TEST_CASE("exit codes") {
        CHECK(run("classgroup " + seeds + "/cycle3.json").status == 2);
        CHECK(run("mutate --dir 5 " + seeds + "/a2.json").status == 2);
        CHECK(run("validate " + write_temp("broken.json", "{\"n\": ")).status == 2);
        CHECK(run("validate " + write_temp("invalid.json", R"({"n": 2, "B": [[0, 1], [1, 0]]})")).status == 2);
        CHECK(run("bogus").status == 2);
        CHECK(run("validate " + seeds + "/markov_lp.json").status == 0);
    }

    TEST_CASE("stdin and pretty output") {
        const auto r = run("--format pretty exchange-polys < " + seeds + "/torsion_z2.json");
        CHECK(r.status == 0);
        CHECK(r.out == render(parse_document(r.out), true));
        CHECK(parse_document(r.out)["exchange_polynomials"] == json::array({"x2 + 1", "x1^2 + 2*x1 + 1"}));
    }

    TEST_CASE("LP commands") {
        const auto e = run("lp-enumerate --depth 4 " + seeds + "/a3_lp.json");
        CHECK(e.status == 0);
        CHECK(parse_document(e.out)["count"] == 7);
        const auto m = run("lp-mutate --dir 1 " + seeds + "/a3_lp.json");
        CHECK(parse_document(m.out)["F"] == json::array({"x2 + 1", "x1'*x3^2 + 1", "x2 + 1"}));
    }

    TEST_CASE("verify-laurent and explore") {
        const auto v = run("verify-laurent --sequence 1,2,1 " + seeds + "/torsion_z2.json");
        CHECK(parse_document(v.out)["laurent"] == true);
        const auto x = run("explore --max-seeds 50 " + seeds + "/a2.json");
        CHECK(parse_document(x.out)["seeds_found"] == 5);
        CHECK(run("verify-laurent --sequence 1,2,1,2 --max-terms 1 " + seeds + "/torsion_z2.json").status == 2);
    }
}

TEST_SUITE("service") {
    TEST_CASE("session on the torsion example") {
        LiveServer live;
        auto c = live.client();
        const auto created = parse_document(post(c, "/session", load("torsion_z2.json")));
        const std::string id = created["id"];
        CHECK(created["class_group"]["torsion"] == json::array({2}));
        CHECK(created["graph"]["edges"] == json::parse("[[2,1]]"));
        const auto group = parse_document(get(c, "/session/" + id + "/classgroup"));
        CHECK(group["torsion"] == json::array({2}));

        const auto mutated = parse_document(post(c, "/session/" + id + "/mutate", {{"direction", 1}}));
        CHECK(mutated["seed"]["B"] == json::parse("[[0,2],[-1,0]]"));
        CHECK(mutated["history"] == json::array({1}));
        CHECK(mutated["expressions"][0] == "x1^-1*x2 + x1^-1");
        const auto undone = parse_document(post(c, "/session/" + id + "/undo", json::object()));
        CHECK(undone == created);

        const auto twice_1 = post(c, "/session/" + id + "/mutate", {{"direction", 1}});
        const auto twice_2 = parse_document(post(c, "/session/" + id + "/mutate", {{"direction", 1}}));
        CHECK(twice_2["seed"] == created["seed"]);
        CHECK(twice_2["expressions"] == created["expressions"]);
        CHECK(twice_2["history"].size() == 2);
        CHECK(live.store.replay_matches(id));
    }

    TEST_CASE("errors") {
        LiveServer live;
        auto c = live.client();
        get(c, "/session/s99", 404);
        post(c, "/session/s99/mutate", {{"direction", 1}}, 404);
        const std::string id = parse_document(post(c, "/session", load("a2.json")))["id"];
        const auto bad = parse_document(post(c, "/session/" + id + "/mutate", {{"direction", 3}}, 422));
        CHECK(bad["precondition"] == "direction");
        post(c, "/session/" + id + "/undo", json::object(), 422);
        auto res = c.Post("/session", "{\"n\":", "application/json");
        REQUIRE(res);
        CHECK(res->status == 422);
        CHECK(parse_document(res->body)["error"] == "malformed-input");
        const auto invalid = parse_document(post(c, "/session", json::parse(R"({"n": 2, "B": [[0, 1], [1, 0]]})"), 422));
        CHECK(invalid["precondition"] == "valid-seed");
        CHECK(invalid["violations"][0]["code"] == "skew-symmetrizable");
    }

    TEST_CASE("class group preconditions are a payload, not an error") {
        LiveServer live;
        auto c = live.client();
        const auto created = parse_document(post(c, "/session", load("cycle3.json")));
        CHECK(created["class_group"]["error"] == "preconditions-not-met");
        CHECK(created["class_group"]["precondition"] == "acyclic");
        const auto group = parse_document(get(c, "/session/" + created["id"].get<std::string>() + "/classgroup"));
        CHECK(group["precondition"] == "acyclic");
    }

    TEST_CASE("LP session shows the new A3 variable") {
        LiveServer live;
        auto c = live.client();
        const std::string id = parse_document(post(c, "/session", load("a3_lp.json")))["id"];
        const auto mutated = parse_document(post(c, "/session/" + id + "/mutate", {{"direction", 1}}));
        CHECK(mutated["display"][0] == "(x2 + 1)/(x1*x3)");
        CHECK(mutated["kind"] == "lp");
        CHECK_FALSE(mutated.contains("class_group"));
    }

    TEST_CASE("realize and byte identity with the CLI") {
        LiveServer live;
        auto c = live.client();
        CHECK(post(c, "/realize", json::parse(R"({"free_rank":2,"torsion":[3]})")) ==
              run("realize --free-rank 2 --torsion 3").out);
        const std::string id = parse_document(post(c, "/session", load("torsion_z2.json")))["id"];
        CHECK(get(c, "/session/" + id + "/classgroup") == run("classgroup " + seeds + "/torsion_z2.json").out);
        CHECK(get(c, "/session/" + id + "/classgroup?mode=closed") ==
              run("classgroup --mode closed " + seeds + "/torsion_z2.json").out);
        const auto mutated = parse_document(post(c, "/session/" + id + "/mutate", {{"direction", 2}}));
        CHECK(render(mutated["seed"]) == run("mutate --dir 2 " + seeds + "/torsion_z2.json").out);
        const auto error = post(c, "/session/" + id + "/mutate", {{"direction", 7}}, 422);
        CHECK(error == render(parse_document(error)));
    }
}

TEST_SUITE("sessions") {
    TEST_CASE("replay invariant under interleaved mutate and undo") {
        std::mt19937 rng(19);
        testing::SeedBounds bounds;
        bounds.max_n = 3;
        bounds.max_entry = 2;
        bounds.max_d = 2;
        SessionStore store;
        for (int t = 0; t < 10; ++t) {
            const auto s = testing::random_seed(rng, bounds);
            const std::string id = store.create(to_json(s))["id"];
            std::size_t depth = 0;
            for (int step = 0; step < 12; ++step) {
                if (depth > 0 && testing::uniform(rng, 0, 2) == 0) {
                    store.undo(id);
                    --depth;
                } else {
                    store.mutate(id, {{"direction", testing::uniform(rng, 1, static_cast<long>(s.n))}});
                    ++depth;
                }
                CHECK(store.replay_matches(id));
                CHECK(store.view(id)["history"].size() == depth);
            }
        }
    }

    TEST_CASE("concurrent writers on one session") {
        SessionStore store;
        const std::string id = store.create(load("torsion_z2.json"))["id"];
        std::vector<std::thread> workers;
        for (int w = 0; w < 4; ++w)
            workers.emplace_back([&, w] {
                for (int i = 0; i < 10; ++i)
                    store.mutate(id, {{"direction", 1 + (w + i) % 2}});
            });
        for (auto& t : workers)
            t.join();
        CHECK(store.view(id)["history"].size() == 40);
        CHECK(store.replay_matches(id));
    }
}
