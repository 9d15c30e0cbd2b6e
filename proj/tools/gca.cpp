#include "gca/server.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace gca::service;

namespace {

std::string slurp(const std::string& path) {
    std::stringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in)
        throw malformed(path, "cannot open file");
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized cluster algebras and LP algebras: mutation, class groups, realization"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::string mode_text;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "pretty"}));
    app.add_option("--mode", mode_text, "Field mode for class groups")->check(CLI::IsMember({"rational", "closed"}));

    std::string file;
    long direction = 0, depth = 0, free_rank = 0, max_seeds = 1000, port = 8080;
    double max_terms = 0;
    std::vector<long> torsion, sequence;
    std::string host = "127.0.0.1";

    auto seed_command = [&](const std::string& name, const std::string& help) {
        auto* cmd = app.add_subcommand(name, help);
        cmd->add_option("file", file, "Seed JSON (default: stdin)");
        return cmd;
    };
    auto* validate_cmd = seed_command("validate", "Validate a generalized or LP seed");
    auto* mutate_cmd = seed_command("mutate", "Mutate in one direction");
    mutate_cmd->add_option("--dir", direction, "Direction (1-based)")->required();
    auto* exchange_cmd = seed_command("exchange-polys", "Exchange polynomials");
    auto* classgroup_cmd = seed_command("classgroup", "Class group of an acyclic coprime seed");
    auto* realize_cmd = app.add_subcommand("realize", "Seed with a prescribed class group");
    realize_cmd->add_option("--free-rank", free_rank, "Free rank")->required();
    realize_cmd->add_option("--torsion", torsion, "Torsion orders")->delimiter(',')->allow_extra_args(false);
    auto* lp_mutate_cmd = seed_command("lp-mutate", "Mutate an LP seed");
    lp_mutate_cmd->add_option("--dir", direction, "Direction (1-based)")->required();
    auto* lp_enumerate_cmd = seed_command("lp-enumerate", "LP cluster variables up to a depth");
    lp_enumerate_cmd->add_option("--depth", depth, "Mutation depth")->required();
    auto* laurent_cmd = seed_command("verify-laurent", "Expand a mutation sequence in the initial cluster");
    laurent_cmd->add_option("--sequence", sequence, "Directions (1-based)")->delimiter(',')->allow_extra_args(false)->required();
    laurent_cmd->add_option("--max-terms", max_terms, "Term budget (0 = unlimited)");
    auto* explore_cmd = seed_command("explore", "Breadth-first search of the mutation class");
    explore_cmd->add_option("--max-seeds", max_seeds, "Seed bound");
    auto* serve_cmd = app.add_subcommand("serve", "Local HTTP/JSON service");
    serve_cmd->add_option("--host", host, "Bind address");
    serve_cmd->add_option("--port", port, "Port");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (serve_cmd->parsed())
        return serve(host, static_cast<int>(port));

    const bool pretty = format == "pretty";
    try {
        const json result = guarded([&]() -> json {
            const auto mode = mode_text.empty() ? std::nullopt : parse_mode(mode_text);
            if (realize_cmd->parsed())
                return realize(free_rank, torsion);
            const json doc = parse_document(slurp(file));
            if (validate_cmd->parsed())
                return validate(doc);
            if (mutate_cmd->parsed())
                return mutate(doc, direction);
            if (exchange_cmd->parsed())
                return exchange_polys(doc);
            if (classgroup_cmd->parsed())
                return classgroup(doc, mode);
            if (lp_mutate_cmd->parsed())
                return lp_mutate(doc, direction);
            if (lp_enumerate_cmd->parsed())
                return lp_enumerate(doc, depth);
            if (laurent_cmd->parsed())
                return verify_laurent(doc, sequence, max_terms);
            if (explore_cmd->parsed())
                return explore(doc, max_seeds);
            throw std::logic_error("no command");
        });
        std::cout << render(result, pretty);
        return 0;
    } catch (const ServiceError& e) {
        std::cerr << render(e.payload(), pretty);
        return e.exit_code();
    }
}
