#include "loggw/commands.hpp"

#include "loggw/errors.hpp"

namespace loggw {

using io::emit;
using io::json;

namespace {

const std::string& need_path(const std::string& p, const char* flag) {
    if (p.empty()) throw ValidationError(std::string("missing required option ") + flag);
    return p;
}

json with_schema(json doc, const std::string& cmd) {
    doc["schema"] = "loggw/" + cmd + "@1";
    return doc;
}

SectionMode section_mode(const std::string& m) {
    if (m.empty() || m == "sections") return SectionMode::Sections;
    if (m == "group-sections") return SectionMode::GroupSections;
    throw ValidationError("unknown mode '" + m + "' (expected sections or group-sections)");
}

EnumerationMode enumeration_mode(const std::string& m) {
    if (m.empty() || m == "almost-generated") return EnumerationMode::AlmostGenerated;
    if (m == "quasi-generated") return EnumerationMode::QuasiGeneratedFixedContacts;
    throw ValidationError("unknown mode '" + m + "' (expected almost-generated or quasi-generated)");
}

}  // namespace

json cmd_basic_monoid(const JobSpec& job) {
    GhostCurve g = io::parse_graph(io::read_file(need_path(job.graph, "--graph")));
    MapType t = io::parse_type(io::read_file(need_path(job.type, "--type")), g);
    require_valid(g, t);
    BasicResult r = compute_basic_monoid(g, t);
    return with_schema(io::emit_basic(g, r), "basic-monoid");
}

json cmd_enumerate_types(const JobSpec& job) {
    GhostCurve g = io::parse_graph(io::read_file(need_path(job.graph, "--graph")));
    std::vector<TauEntry> tau;
    if (!job.tau.empty()) tau = io::parse_tau(io::read_file(job.tau), g);
    std::optional<std::vector<Vec>> contacts;
    if (!job.contacts.empty()) contacts = io::parse_contacts(io::read_file(job.contacts), g);
    EnumerationConfig cfg;
    cfg.mode = enumeration_mode(job.mode);
    cfg.cycle_bound = job.cycle_bound;
    cfg.cap = job.cap;
    cfg.exec = job.exec;
    TypesResult res = enumerate_types(g, tau, contacts, cfg);
    json types = json::array();
    for (const auto& et : res.types) {
        json cert{{"V", json::object()}, {"e", json::object()}};
        for (std::size_t v = 0; v < g.vertices.size(); ++v) cert["V"][g.vertices[v].name] = emit(et.candidate.certificate_V[v]);
        for (std::size_t e = 0; e < g.edges.size(); ++e) cert["e"][g.edges[e].name] = emit(et.candidate.certificate_e[e]);
        types.push_back(json{{"type", io::emit_type(g, et.candidate.type)},
                             {"basic", io::emit_basic(g, et.basic)},
                             {"certificate", cert}});
    }
    json contact_list = json::array();
    for (const auto& c : res.contacts) {
        json m = json::object();
        for (std::size_t l = 0; l < g.legs.size(); ++l) m[g.legs[l].name] = emit(c[l]);
        contact_list.push_back(m);
    }
    json doc{{"types", types},
             {"count", res.types.size()},
             {"status", res.exact ? "exact" : "bound-limited"},
             {"cycle_bound", emit(res.bound)},
             {"scanned", res.scanned},
             {"contacts", contact_list}};
    return with_schema(doc, "enumerate-types");
}

json cmd_tropicalize(const JobSpec& job) {
    LogSpaceSkeleton s = io::parse_skeleton(io::read_file(need_path(job.skeleton, "--skeleton")));
    ConeComplex c = build_trop(s);
    return with_schema(io::emit_complex(s, c), "tropicalize");
}

json cmd_trop_curve(const JobSpec& job) {
    GhostCurve g = io::parse_graph(io::read_file(need_path(job.graph, "--graph")));
    MapType t = io::parse_type(io::read_file(need_path(job.type, "--type")), g);
    require_valid(g, t);
    json pj = io::read_file(need_path(job.point, "--point"));
    if (!pj.is_object()) throw ValidationError("point: expected an object");
    for (const auto& [k, v] : pj.items())
        if (k != "point" && k != "V" && k != "e") throw ValidationError("point: unknown key '" + k + "'");
    TropicalData d;
    if (pj.contains("point")) {
        if (pj.contains("V") || pj.contains("e")) throw ValidationError("point: give either 'point' or 'V' and 'e'");
        BasicResult r = compute_basic_monoid(g, t);
        d = tropical_data_from_point(g, r, io::parse_vec(pj["point"], "point"));
    } else {
        if (!pj.contains("V") || (!pj.contains("e") && !g.edges.empty()))
            throw ValidationError("point: needs 'V' and 'e'");
        const json& V = pj["V"];
        if (!V.is_object()) throw ValidationError("point: V must map vertex names to vectors");
        for (const auto& [k, v] : V.items())
            if (g.vertex_index(k) < 0) throw ValidationError("point: unknown vertex '" + k + "'");
        for (const auto& vx : g.vertices) {
            if (!V.contains(vx.name)) throw ValidationError("point: missing V for '" + vx.name + "'");
            d.V.push_back(io::parse_vec(V[vx.name], "V " + vx.name));
            if (d.V.back().size() != vx.stalk.ambient()) throw ValidationError("point: V for '" + vx.name + "' has the wrong length");
        }
        json lengths = pj.contains("e") ? pj["e"] : json::object();
        if (!lengths.is_object()) throw ValidationError("point: e must map edge names to integers");
        for (const auto& [k, v] : lengths.items())
            if (g.edge_index(k) < 0) throw ValidationError("point: unknown edge '" + k + "'");
        for (const auto& ed : g.edges) {
            if (!lengths.contains(ed.name)) throw ValidationError("point: missing e for '" + ed.name + "'");
            d.e.push_back(io::parse_int(lengths[ed.name], "e " + ed.name));
        }
        // The data must reproduce the type on every edge; zero lengths give degenerate curves.
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            const Edge& E = g.edges[e];
            if (d.e[e] < 0) throw ValidationError("point: edge length of " + E.name + " is negative");
            Vec diff = sub(vec_mul(d.V[static_cast<std::size_t>(E.v2)], E.chi2, E.stalk.ambient()),
                           vec_mul(d.V[static_cast<std::size_t>(E.v1)], E.chi1, E.stalk.ambient()));
            if (!same_functional(E.stalk, diff, scale(d.e[e], *t.u_q[e])))
                throw ValidationError("point: tropical data does not match u_q at " + E.name);
        }
    }
    TropicalCurve c = build_tropical_curve(g, t, d, section_mode(job.mode));
    CurveBalance b = check_tropical_balancing(c);
    json doc = io::emit_tropical_curve(c);
    json bal = json::object();
    for (std::size_t v = 0; v < c.vertices.size(); ++v) bal[c.vertices[v].name] = static_cast<bool>(b.balanced[v]);
    doc["balanced"] = bal;
    doc["edge_geometry"] = check_edge_geometry(c);
    return with_schema(doc, "trop-curve");
}

json run_job(const JobSpec& job) {
    if (job.command == "basic-monoid") return cmd_basic_monoid(job);
    if (job.command == "enumerate-types") return cmd_enumerate_types(job);
    if (job.command == "tropicalize") return cmd_tropicalize(job);
    if (job.command == "trop-curve") return cmd_trop_curve(job);
    throw ValidationError("unknown command '" + job.command + "'");
}

JobFailure describe_failure(const std::exception& e) {
    std::string kind = "internal";
    int code = 5;
    if (dynamic_cast<const ValidationError*>(&e)) {
        kind = "validation";
        code = 2;
    } else if (dynamic_cast<const CapacityError*>(&e)) {
        kind = "capacity";
        code = 3;
    } else if (dynamic_cast<const EnumerationCapError*>(&e)) {
        kind = "enumeration-cap";
        code = 4;
    } else if (dynamic_cast<const InvariantError*>(&e)) {
        kind = "invariant";
    }
    return {json{{"schema", "loggw/error@1"}, {"error", e.what()}, {"kind", kind}, {"exit_code", code}}, code};
}

}  // namespace loggw
