#include "doctest.h"

#include "loggw/commands.hpp"
#include "loggw/errors.hpp"
#include "support.hpp"

#include <fstream>
#include <sstream>

using namespace loggw;
using namespace loggw::testing;
using io::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JobSpec job_from_args(const std::vector<std::string>& args) {
    JobSpec job;
    job.command = args.at(0);
    for (std::size_t i = 1; i + 1 < args.size(); i += 2) {
        const std::string& k = args[i];
        std::string v = args[i + 1];
        std::string path = fixture(v);
        if (k == "--graph") job.graph = path;
        else if (k == "--type") job.type = path;
        else if (k == "--tau") job.tau = path;
        else if (k == "--contacts") job.contacts = path;
        else if (k == "--point") job.point = path;
        else if (k == "--skeleton") job.skeleton = path;
        else if (k == "--mode") job.mode = v;
        else if (k == "--cap") job.cap = std::stoul(v);
        else if (k == "--cycle-bound") job.cycle_bound = Int::from_string(v);
    }
    return job;
}

}  // namespace

TEST_CASE("integers beyond 64 bits round trip as strings") {
    Int big = Int::from_string("123456789012345678901234567890");
    json j = io::emit(big);
    CHECK(j.is_string());
    CHECK(io::parse_int(j, "x") == big);
    CHECK(io::emit(Int(-5)).is_number_integer());
    CHECK(io::parse_int(json("-17"), "x") == Int(-17));
    CHECK_THROWS_AS(io::parse_int(json(1.5), "x"), ValidationError);
    CHECK_THROWS_AS(io::parse_int(json("12a"), "x"), ValidationError);
}

TEST_CASE("matrices must be rectangular") {
    CHECK_THROWS_AS(io::parse_mat(json::parse("[[1,2],[3]]"), "m"), ValidationError);
    CHECK(io::parse_mat(json::parse("[[1,2],[3,4]]"), "m") == M({{1, 2}, {3, 4}}));
}

TEST_CASE("unknown keys are rejected") {
    json g = io::read_file(fixture("ex1/graph.json"));
    g["colour"] = "blue";
    CHECK_THROWS_AS(io::parse_graph(g), ValidationError);
    json m = json::parse(R"({"ambient_rank": 1, "generators": [[1]], "extra": 0})");
    CHECK_THROWS_AS(io::parse_monoid(m, "m"), ValidationError);
}

TEST_CASE("graph round trip through names") {
    GhostCurve g = load_graph("toric_conic");
    CHECK(g.vertices.size() == 6);
    CHECK(g.edges.size() == 5);
    CHECK(g.legs.size() == 6);
    CHECK(g.edges[0].name == "q1");
    MapType t = load_type("toric_conic", g);
    json e = io::emit_type(g, t);
    MapType back = io::parse_type(e, g);
    CHECK(back.u_q == t.u_q);
    CHECK(back.u_p == t.u_p);
}

TEST_CASE("every manifest job reproduces its expected document") {
    json manifest = io::read_file(fixture("manifest.json"));
    for (const auto& entry : manifest) {
        std::string id = entry["id"];
        CAPTURE(id);
        JobSpec job = job_from_args(entry["args"].get<std::vector<std::string>>());
        job.exec = Exec::Serial;
        json doc;
        int code = 0;
        try {
            doc = run_job(job);
        } catch (const std::exception& e) {
            auto f = describe_failure(e);
            doc = f.document;
            code = f.exit_code;
        }
        CHECK(code == entry["exit"].get<int>());
        CHECK(io::dump(doc) == slurp(fixture("expected/" + id + ".json")));
    }
}

TEST_CASE("error documents carry the exit code") {
    auto f = describe_failure(ValidationError("nope"));
    CHECK(f.exit_code == 2);
    CHECK(f.document["kind"] == "validation");
    CHECK(describe_failure(CapacityError("x")).exit_code == 3);
    CHECK(describe_failure(EnumerationCapError("x")).exit_code == 4);
    CHECK(describe_failure(InvariantError("x")).exit_code == 5);
    CHECK(describe_failure(std::runtime_error("x")).exit_code == 5);
}
