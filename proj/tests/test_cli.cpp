#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "verlinde/cli.hpp"

using namespace verlinde;
using cli::CommandRequest;

namespace {

CommandRequest request(std::string sub, std::string group, std::string level) {
    CommandRequest r;
    r.subcommand = std::move(sub);
    r.group = std::move(group);
    r.level = std::move(level);
    return r;
}

io::Json parse(const cli::OutputDocument& doc) { return io::Json::parse(doc.body); }

struct Process {
    int status = -1;
    std::string out;
};

Process run_binary(const std::string& args) {
    Process p;
    const std::string cmd = std::string(VERLINDE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return p;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, n);
    const int raw = pclose(pipe);
    p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return p;
}

}  // namespace

TEST(Cli, VerlindeValue) {
    auto r = request("verlinde", "A1", "2");
    r.genus = "2";
    const auto doc = cli::run(r);
    EXPECT_EQ(doc.exit_code, 0);
    const auto j = parse(doc);
    EXPECT_EQ(j.at("value"), 10);
    EXPECT_EQ(j.at("group"), "A1");
    EXPECT_EQ(j.at("decomposition_hash"), pants_graph(2, 0).hash());
    r.naive = true;
    EXPECT_EQ(parse(cli::run(r)).at("value"), 10);
}

TEST(Cli, MarkedVerlinde) {
    auto r = request("verlinde", "A2", "2");
    r.genus = "0";
    r.markings = "1,0;0,1;0,0";
    EXPECT_EQ(parse(cli::run(r)).at("value"), 1);
    r.markings = "1,0;1,0;1,0";
    EXPECT_EQ(parse(cli::run(r)).at("value"), 1);
    r.markings = "1,0;1,0;0,0";
    EXPECT_EQ(parse(cli::run(r)).at("value"), 0);
}

TEST(Cli, AxiomsAllPass) {
    const auto doc = cli::run(request("axioms", "A2", "1"));
    EXPECT_EQ(doc.exit_code, 0);
    const auto j = parse(doc);
    EXPECT_TRUE(j.at("all_pass").get<bool>());
    for (const auto* key : {"symmetry", "unit", "duality", "associativity"}) EXPECT_TRUE(j.at(key).get<bool>());
    EXPECT_TRUE(j.at("character_spectra").at("pass").get<bool>());
    EXPECT_TRUE(j.at("character_spectra").contains("tolerance"));
}

TEST(Cli, FusionTableJson) {
    const auto j = parse(cli::run(request("fusion-table", "A1", "1")));
    EXPECT_EQ(j.at("coeffs"), io::Json::parse("[1,0,0,1,0,1,1,0]"));
    EXPECT_EQ(j.at("labels"), io::Json::parse("[[0],[1]]"));
    EXPECT_EQ(j.at("level"), 1);
    EXPECT_EQ(j.at("rank"), 1);
    EXPECT_EQ(j.at("type"), "A1");
    EXPECT_TRUE(j.contains("index_legend"));
}

TEST(Cli, CsvSweep) {
    auto r = request("verlinde", "A1", "1-3");
    r.genus = "2-5";
    r.format = cli::Format::csv;
    const auto doc = cli::run(r);
    EXPECT_EQ(doc.exit_code, 0);
    EXPECT_EQ(std::count(doc.body.begin(), doc.body.end(), '\n'), 1 + 3 * 4);
    EXPECT_NE(doc.body.find("A1,2,2,\"\",10,"), std::string::npos);
    EXPECT_NE(doc.body.find("A1,1,2,\"\",4,"), std::string::npos);
    r.format = cli::Format::json;
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "level");
}

TEST(Cli, TraceMatchesVerlinde) {
    auto r = request("trace", "A2", "3");
    r.genus = "4";
    const auto t = parse(cli::run(r));
    r.subcommand = "verlinde";
    EXPECT_EQ(parse(cli::run(r)).at("value"), t.at("value"));
    EXPECT_TRUE(t.at("numeric_check").at("pass").get<bool>());
}

TEST(Cli, GoldmanOutputs) {
    CommandRequest r;
    r.subcommand = "goldman";
    r.genus = "1";
    r.boundary = 1;
    r.format = cli::Format::text;
    const auto text = cli::run(r).body;
    const auto p = io::parse_hrep(text);
    EXPECT_EQ(p, goldman_polytope(pants_graph(1, 1)));
    r.format = cli::Format::json;
    const auto j = parse(cli::run(r));
    EXPECT_EQ(j.at("affine_dimension"), 2);
    EXPECT_EQ(io::polytope_from_json(j.at("polytope")), p);

    // A user-supplied trinion polytope is read from an H-rep file.
    const auto path = std::filesystem::temp_directory_path() / "verlinde_trinion_test.hrep";
    std::ofstream(path) << io::hrep_text(trinion_polytope_su2());
    r.polytope_file = path.string();
    EXPECT_EQ(io::polytope_from_json(parse(cli::run(r)).at("polytope")), p);
    r.polytope_file = (std::filesystem::temp_directory_path() / "verlinde_missing.hrep").string();
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "polytope");
    std::filesystem::remove(path);
}

TEST(Cli, EulerCheckSeedRecordedAndDeterministic) {
    auto r = request("euler-check", "A2", "4");
    r.seed = 12345;
    const auto a = cli::run(r);
    const auto b = cli::run(r);
    EXPECT_EQ(a.body, b.body);
    EXPECT_EQ(a.exit_code, 0);
    const auto j = parse(a);
    EXPECT_EQ(j.at("seed"), 12345);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_TRUE(j.at("coverage").get<bool>());
    r.seed = 54321;
    EXPECT_NE(cli::run(r).body, a.body);
}

TEST(Cli, EulerCheckExplicitParameters) {
    auto r = request("euler-check", "A1", "3");
    r.epsilon = "1/7";
    r.mu0 = "1/2";
    const auto j = parse(cli::run(r));
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("collection").at("codims").size(), 5u);
    r.epsilon = "2/3";  // lattice points on cut boundaries
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "epsilon");
    r.epsilon = "one";
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "epsilon");
    r.epsilon.reset();
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "epsilon");
}

TEST(Cli, Dims) {
    CommandRequest r;
    r.subcommand = "dims";
    r.group = "A1";
    r.genus = "1";
    r.faces = "1";
    const auto j = parse(cli::run(r));
    EXPECT_EQ(j.at("cross_section_dim_v1"), 6);
    EXPECT_EQ(j.at("cross_section_dim_v2"), 6);
    r.faces = "5";
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "faces");
    r.faces = "0,1";
    EXPECT_EQ(parse(cli::run(r)).at("error").at("parameter"), "faces");
}

TEST(Cli, ErrorsNameTheParameter) {
    const std::vector<std::pair<CommandRequest, std::string>> cases = [] {
        std::vector<std::pair<CommandRequest, std::string>> c;
        c.emplace_back(request("axioms", "Q7", "1"), "group");
        c.emplace_back(request("axioms", "A2", "0"), "level");
        c.emplace_back(request("axioms", "A2", "x"), "level");
        auto m = request("verlinde", "A1", "2");
        m.genus = "0";
        m.markings = "3;1;1";
        c.emplace_back(m, "markings");
        auto g = request("verlinde", "A1", "2");
        g.genus = "1";
        c.emplace_back(g, "genus");
        auto t = request("trace", "A1", "2");
        t.genus = "1";
        c.emplace_back(t, "genus");
        c.emplace_back(request("frobnicate", "A1", "1"), "subcommand");
        return c;
    }();
    for (const auto& [req, param] : cases) {
        const auto doc = cli::run(req);
        EXPECT_NE(doc.exit_code, 0) << param;
        const auto j = parse(doc);
        EXPECT_EQ(j.at("error").at("parameter"), param) << doc.body;
        EXPECT_FALSE(j.at("error").at("message").get<std::string>().empty());
    }
}

TEST(Cli, JsonRoundTripAndDeterminism) {
    std::vector<CommandRequest> reqs = {request("fusion-table", "G2", "2"), request("axioms", "C2", "2"),
                                        request("verlinde", "A2", "2"), request("euler-check", "C2", "3")};
    reqs.back().seed = 9;
    CommandRequest gold;
    gold.subcommand = "goldman";
    gold.genus = "2";
    reqs.push_back(gold);
    CommandRequest dims;
    dims.subcommand = "dims";
    dims.group = "A2";
    dims.genus = "2";
    dims.faces = "-;1,2;0";
    reqs.push_back(dims);
    for (const auto& r : reqs) {
        const auto doc = cli::run(r);
        ASSERT_EQ(doc.exit_code, 0) << doc.body;
        const auto j = io::Json::parse(doc.body);
        EXPECT_EQ(io::Json::parse(j.dump()), j);
        EXPECT_EQ(j.dump(2) + "\n", doc.body);
        EXPECT_EQ(cli::run(r).body, doc.body);
    }
}

TEST(Binary, SubcommandsAndExitCodes) {
    const auto ok = run_binary("verlinde --group A1 --level 2 --genus 2");
    EXPECT_EQ(ok.status, 0);
    EXPECT_EQ(io::Json::parse(ok.out).at("value"), 10);
    const auto text = run_binary("verlinde -G A2 -k 1 -g 2 -f text");
    EXPECT_EQ(text.out, "9\n");
    const auto bad = run_binary("verlinde --group A1 --level 2 --genus 2 --markings 9");
    EXPECT_NE(bad.status, 0);
    EXPECT_EQ(io::Json::parse(bad.out).at("error").at("parameter"), "markings");
    const auto unknown = run_binary("verlinde --bogus");
    EXPECT_NE(unknown.status, 0);
    EXPECT_TRUE(io::Json::parse(unknown.out).contains("error"));
}

TEST(Binary, ThreadCountFromEnvironment) {
    const auto one = run_binary("fusion-table -G A2 -k 4");
    const auto many = run_binary("fusion-table -G A2 -k 4");
    setenv("VERLINDE_THREADS", "4", 1);
    const auto threaded = run_binary("fusion-table -G A2 -k 4");
    unsetenv("VERLINDE_THREADS");
    EXPECT_EQ(one.out, many.out);
    EXPECT_EQ(one.out, threaded.out);
    EXPECT_EQ(threaded.status, 0);
}
