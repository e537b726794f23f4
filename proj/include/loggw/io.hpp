#pragma once

#include "loggw/basic.hpp"
#include "loggw/finiteness.hpp"
#include "loggw/tropical.hpp"
#include "loggw/tropicalization.hpp"

#include <json.hpp>

#include <string>

namespace loggw::io {

using json = nlohmann::json;

json read_file(const std::string& path);

// Integers: JSON numbers, or decimal strings for values beyond 64 bits.
Int parse_int(const json& j, const std::string& where);
Vec parse_vec(const json& j, const std::string& where);
Mat parse_mat(const json& j, const std::string& where);
ToricMonoid parse_monoid(const json& j, const std::string& where);

GhostCurve parse_graph(const json& j);
std::vector<TauEntry> parse_tau(const json& j, const GhostCurve& g);
// Contacts are keyed by leg name.
std::vector<Vec> parse_contacts(const json& j, const GhostCurve& g);
MapType parse_type(const json& j, const GhostCurve& g);
LogSpaceSkeleton parse_skeleton(const json& j);

json emit(const Int& x);
json emit(const Vec& v);
json emit(const Mat& m);
json emit(const ToricMonoid& m);
json emit_type(const GhostCurve& g, const MapType& t);
json emit_basic(const GhostCurve& g, const BasicResult& r);
json emit_tropical_curve(const TropicalCurve& c);
json emit_complex(const LogSpaceSkeleton& s, const ConeComplex& c);

// Stable textual form: sorted keys, two-space indent, trailing newline.
std::string dump(const json& doc);

}  // namespace loggw::io
