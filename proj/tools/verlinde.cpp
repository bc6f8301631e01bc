// Command-line front end. Every subcommand prints a single document on stdout;
// failures print {"error": {...}} and exit nonzero.
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "verlinde/cli.hpp"

namespace {

unsigned threads_from_env() {
    const char* v = std::getenv("VERLINDE_THREADS");
    if (!v) return 1;
    try {
        const long n = std::stol(v);
        return n > 0 ? static_cast<unsigned>(n) : 1u;
    } catch (const std::exception&) {
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using verlinde::cli::CommandRequest;
    CLI::App app{"Verlinde numbers, fusion rings and alcove cut collections"};
    app.require_subcommand(1);

    CommandRequest req;
    std::string format = "json";
    std::string epsilon, mu0, polytope;
    std::uint64_t seed = 0;

    auto add_group = [&](CLI::App* sub) { sub->add_option("--group,-G", req.group, "Lie type, e.g. A1, A2, C2, G2"); };
    auto add_level = [&](CLI::App* sub) { sub->add_option("--level,-k", req.level, "level (csv sweeps accept a range like 1-6)"); };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format,-f", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto* fusion = app.add_subcommand("fusion-table", "level-k fusion coefficients");
    add_group(fusion);
    add_level(fusion);
    add_format(fusion);

    auto* verl = app.add_subcommand("verlinde", "dimension of conformal blocks by gluing trinions");
    add_group(verl);
    add_level(verl);
    add_format(verl);
    verl->add_option("--genus,-g", req.genus, "genus (csv sweeps accept a range like 2-5)");
    verl->add_option("--markings,-m", req.markings, "boundary labels, e.g. \"1,0;0,1\"");
    verl->add_flag("--naive", req.naive, "enumerate all edge labelings instead of eliminating");

    auto* trace = app.add_subcommand("trace", "closed-surface value via the handle matrix");
    add_group(trace);
    add_level(trace);
    add_format(trace);
    trace->add_option("--genus,-g", req.genus, "genus, at least 2");

    auto* goldman = app.add_subcommand("goldman", "SU(2) polytope of a pants decomposition");
    add_format(goldman);
    goldman->add_option("--genus,-g", req.genus, "genus");
    goldman->add_option("--boundary,-b", req.boundary, "number of boundary circles");
    goldman->add_option("--polytope", polytope, "trinion H-representation file (default: the SU(2) trinion)");

    auto* euler = app.add_subcommand("euler-check", "Euler identity of an alcove cut collection");
    add_group(euler);
    add_level(euler);
    add_format(euler);
    euler->add_option("--epsilon", epsilon, "cut offset as a rational, e.g. 1/7");
    euler->add_option("--mu0", mu0, "base point as rationals, e.g. 1/5,1/7");
    auto* seed_opt = euler->add_option("--seed", seed, "draw a random generic collection from this seed");

    auto* axioms = app.add_subcommand("axioms", "fusion axioms and character spectra");
    add_group(axioms);
    add_level(axioms);
    add_format(axioms);

    auto* dims = app.add_subcommand("dims", "dimension formulas for boundary faces");
    add_group(dims);
    add_format(dims);
    dims->add_option("--genus,-g", req.genus, "genus");
    dims->add_option("--face", req.faces, "vanishing walls per boundary circle, e.g. \"1;-;0,1\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cout << verlinde::cli::error_document("arguments", e.what()).body;
        return 2;
    }

    req.subcommand = app.get_subcommands().front()->get_name();
    req.threads = threads_from_env();
    req.format = verlinde::cli::parse_format(format);
    if (!epsilon.empty()) req.epsilon = epsilon;
    if (!mu0.empty()) req.mu0 = mu0;
    if (!polytope.empty()) req.polytope_file = polytope;
    if (seed_opt->count()) req.seed = seed;

    const auto doc = verlinde::cli::run(req);
    std::cout << doc.body;
    return doc.exit_code;
}
