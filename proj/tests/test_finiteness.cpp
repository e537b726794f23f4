#include "doctest.h"

#include "loggw/errors.hpp"
#include "loggw/finiteness.hpp"
#include "loggw/tropical.hpp"
#include "support.hpp"

using namespace loggw;
using namespace loggw::testing;

namespace {

struct Inputs {
    GhostCurve g;
    std::vector<TauEntry> tau;
    std::vector<Vec> contacts;
};

Inputs inputs(const std::string& name, bool with_contacts = true) {
    Inputs in{load_graph(name), {}, {}};
    in.tau = io::parse_tau(io::read_file(fixture(name + "/tau.json")), in.g);
    if (with_contacts) in.contacts = io::parse_contacts(io::read_file(fixture(name + "/contacts.json")), in.g);
    return in;
}

}  // namespace

TEST_CASE("square degeneration: the type is forced") {
    Inputs in = inputs("squaremonoideg");
    EnumerationConfig cfg;
    TypesResult r = enumerate_types(in.g, in.tau, in.contacts, cfg);
    CHECK(r.exact);
    REQUIRE(r.types.size() == 1);
    const MapType& t = r.types[0].candidate.type;
    for (const auto& u : t.u_q) CHECK(*u == V({1}));
    for (std::size_t v = 0; v < in.g.vertices.size(); ++v) CHECK(check_component_balancing(in.g, t, static_cast<int>(v)).ok);
}

TEST_CASE("two components: the type is forced") {
    Inputs in = inputs("twocomponent");
    TypesResult r = enumerate_types(in.g, in.tau, in.contacts, EnumerationConfig{});
    CHECK(r.exact);
    REQUIRE(r.types.size() == 1);
    for (const auto& u : r.types[0].candidate.type.u_q) CHECK(*u == V({1, 1}));
}

TEST_CASE("toric conic: the designed type is the only one") {
    Inputs in = inputs("toric_conic");
    GhostCurve g = in.g;
    MapType expected = load_type("toric_conic", g);
    EnumerationConfig cfg;
    cfg.mode = EnumerationMode::QuasiGeneratedFixedContacts;
    TypesResult r = enumerate_types(g, in.tau, in.contacts, cfg);
    REQUIRE(r.types.size() == 1);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        CHECK(same_functional(g.edges[e].stalk, *r.types[0].candidate.type.u_q[e], *expected.u_q[e]));
}

TEST_CASE("certificates lie in the dual basic cone") {
    Inputs in = inputs("squaremonoideg");
    TypesResult r = enumerate_types(in.g, in.tau, in.contacts, EnumerationConfig{});
    REQUIRE_FALSE(r.types.empty());
    const auto& c = r.types[0].candidate;
    ToricMonoid dual = dual_basic_cone(in.g, c.type);
    Vec point;
    for (const auto& v : c.certificate_V) point.insert(point.end(), v.begin(), v.end());
    point.insert(point.end(), c.certificate_e.begin(), c.certificate_e.end());
    CHECK(dual.in_cone(point));
    for (const auto& e : c.certificate_e) CHECK(e >= Int(1));
}

TEST_CASE("infeasible contacts give no types") {
    Inputs in = inputs("infeasible");
    TypesResult r = enumerate_types(in.g, in.tau, in.contacts, EnumerationConfig{});
    CHECK(r.types.empty());
}

TEST_CASE("contact assignments are enumerated and capped") {
    Inputs in = inputs("basicrelative_11", false);
    auto all = enumerate_contact_assignments(in.g, in.tau);
    REQUIRE(all.size() == 1);
    CHECK(all[0][0] == V({1}));
    CHECK(all[0][1] == V({1}));

    Inputs tc = inputs("twocomponent", false);
    CHECK_THROWS_AS(enumerate_contact_assignments(tc.g, tc.tau, 10), EnumerationCapError);
}

TEST_CASE("dual feasibility of a complete type") {
    GhostCurve g = load_graph("ex2");
    MapType t = load_type("ex2", g);
    auto cert = dual_feasibility(g, t);
    REQUIRE(cert.has_value());
    auto d = TropicalData{cert->first, cert->second};
    auto u = type_from_tropical_data(g, d);
    for (std::size_t e = 0; e < g.edges.size(); ++e) CHECK(same_functional(g.edges[e].stalk, u[e], *t.u_q[e]));

    // Opposite orientations around a two-edge cycle cannot close up.
    MapType bad = t;
    bad.u_q[1] = neg(*t.u_q[1]);
    CHECK_FALSE(dual_feasibility(g, bad).has_value());
}

TEST_CASE("serial and parallel enumeration agree") {
    Inputs in = inputs("squaremonoideg", false);
    EnumerationConfig s, p;
    s.exec = Exec::Serial;
    p.exec = Exec::Parallel;
    TypesResult a = enumerate_types(in.g, in.tau, std::nullopt, s);
    TypesResult b = enumerate_types(in.g, in.tau, std::nullopt, p);
    REQUIRE(a.types.size() == b.types.size());
    for (std::size_t i = 0; i < a.types.size(); ++i) {
        CHECK(a.types[i].candidate.type.u_q == b.types[i].candidate.type.u_q);
        CHECK(a.types[i].candidate.type.u_p == b.types[i].candidate.type.u_p);
    }
    CHECK(a.contacts == b.contacts);
}
