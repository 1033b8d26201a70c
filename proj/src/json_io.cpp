#include "cycoh/json_io.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

namespace cycoh {

namespace {

constexpr std::int64_t kMaxDegreeKey = 1'000'000;

[[noreturn]] void schema_fail(const std::string& where, const std::string& what) {
    throw SchemaError(where + ": " + what);
}

const Json& require_field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) schema_fail(where, "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) schema_fail(where, std::string("missing field '") + key + "'");
    return *it;
}

void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) schema_fail(where, "unknown field '" + key + "'");
    }
}

std::int64_t int64_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        schema_fail(where, "expected an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        schema_fail(where, "integer out of range");
    return j.get<std::int64_t>();
}

Int entry_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(Int::Rep(j.get<std::uint64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        std::size_t pos = s.empty() || s[0] != '-' ? 0 : 1;
        if (pos == s.size()) schema_fail(where, "bad integer literal '" + s + "'");
        for (; pos < s.size(); ++pos)
            if (!std::isdigit(static_cast<unsigned char>(s[pos])))
                schema_fail(where, "bad integer literal '" + s + "'");
        return Int(s);
    }
    schema_fail(where, "expected an integer or decimal string");
}

Json entry_to_json(const Int& x) {
    static const Int kMin(std::numeric_limits<std::int64_t>::min());
    static const Int kMax(std::numeric_limits<std::int64_t>::max());
    if (x >= kMin && x <= kMax) return Json(to_int64(x));
    return Json(x.str());
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, /*cb=*/nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw SchemaError("input: not valid JSON");
    return j;
}

Json matrix_to_json(const IntMatrix& a) {
    Json rows = Json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < a.cols(); ++j) row.push_back(entry_to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) schema_fail(where, "expected an array of rows");
    const Index rows = static_cast<Index>(j.size());
    Index cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) schema_fail(where, "expected rows to be arrays");
        cols = static_cast<Index>(j[0].size());
    }
    IntMatrix a(rows, cols);
    for (Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            schema_fail(where, "ragged matrix rows");
        for (Index c = 0; c < cols; ++c)
            a(r, c) = entry_from_json(row[static_cast<std::size_t>(c)], where);
    }
    return a;
}

Json group_to_json(const FinAbGroup& g) { return Json(to_string(g)); }

FinAbGroup group_from_json(const Json& j, const std::string& where) {
    if (!j.is_string()) schema_fail(where, "expected a group string like \"Z^2 + Z/4\"");
    try {
        return group_from_string(j.get<std::string>());
    } catch (const InvalidInputError& e) {
        schema_fail(where, e.what());
    }
}

Json gmodule_to_json(const GModule& a) {
    Json j;
    j["m"] = entry_to_json(a.m);
    j["action"] = matrix_to_json(a.action);
    return j;
}

GModule gmodule_from_json(const Json& j) {
    const std::string where = "module";
    reject_unknown_keys(j, {"m", "action"}, where);
    const std::int64_t m = int64_from_json(require_field(j, "m", where), where + ".m");
    if (m < 1) schema_fail(where, "m must be >= 1");
    GModule module{Int(m), matrix_from_json(require_field(j, "action", where), where + ".action")};
    try {
        validate(module);
    } catch (const InvalidInputError& e) {
        schema_fail(where, e.what());
    }
    return module;
}

Json graded_to_json(const GradedGroup& table) {
    Json j = Json::object();
    for (const auto& [degree, group] : table.entries())
        j[std::to_string(degree)] = group_to_json(group);
    return j;
}

GradedGroup graded_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) schema_fail(where, "expected an object of degree -> group");
    std::int64_t max_degree = 0;
    std::vector<std::pair<std::int64_t, FinAbGroup>> parsed;
    for (const auto& [key, value] : j.items()) {
        std::int64_t degree = -1;
        try {
            std::size_t used = 0;
            degree = std::stoll(key, &used);
            if (used != key.size()) degree = -1;
        } catch (...) {
            degree = -1;
        }
        if (degree < 0 || degree > kMaxDegreeKey)
            schema_fail(where, "bad degree key '" + key + "'");
        max_degree = std::max(max_degree, degree);
        parsed.emplace_back(degree, group_from_json(value, where + "." + key));
    }
    GradedGroup table(max_degree, Tail::kZero);
    for (auto& [degree, group] : parsed) table.set(degree, std::move(group));
    return table;
}

Json abmap_to_json(const AbMap& f) {
    Json j;
    j["source"] = group_to_json(f.source);
    j["target"] = group_to_json(f.target);
    j["matrix"] = matrix_to_json(f.matrix);
    return j;
}

AbMap abmap_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) schema_fail(where, "expected an object");
    reject_unknown_keys(j, {"source", "target", "matrix"}, where);
    AbMap f;
    f.source = group_from_json(require_field(j, "source", where), where + ".source");
    f.target = group_from_json(require_field(j, "target", where), where + ".target");
    f.matrix = matrix_from_json(require_field(j, "matrix", where), where + ".matrix");
    // An empty matrix leaves the column count ambiguous; take the shape the
    // endpoint groups dictate.
    if (f.matrix.rows() == 0 || f.matrix.cols() == 0)
        f.matrix = IntMatrix::Zero(generator_count(f.target), generator_count(f.source));
    return f;
}

Json surface_to_json(const SurfaceWithAction& s) {
    Json j;
    j["name"] = s.name;
    j["m"] = entry_to_json(s.m);
    j["action"] = matrix_to_json(s.h2.action);
    j["fixed_curve_genera"] = s.fixed_curve_genera;
    j["isolated_fixed_points"] = s.isolated_fixed_points;
    j["h1_zero"] = s.h1_zero;
    j["stabilizers_ok"] = s.stabilizers_ok;
    return j;
}

SurfaceWithAction surface_from_json(const Json& j) {
    const std::string where = "surface";
    if (!j.is_object()) schema_fail(where, "expected an object");
    reject_unknown_keys(j,
                        {"name", "m", "action", "fixed_curve_genera", "isolated_fixed_points",
                         "h1_zero", "stabilizers_ok"},
                        where);
    SurfaceWithAction s;
    const Json& name = require_field(j, "name", where);
    if (!name.is_string()) schema_fail(where, "name must be a string");
    s.name = name.get<std::string>();
    const std::int64_t m = int64_from_json(require_field(j, "m", where), where + ".m");
    if (m < 2) schema_fail(where, "m must be >= 2");
    s.m = Int(m);
    s.h2 = GModule{s.m, matrix_from_json(require_field(j, "action", where), where + ".action")};
    try {
        validate(s.h2);
    } catch (const InvalidInputError& e) {
        schema_fail(where, e.what());
    }
    const Json& genera = require_field(j, "fixed_curve_genera", where);
    if (!genera.is_array()) schema_fail(where, "fixed_curve_genera must be an array");
    for (const Json& g : genera) {
        const std::int64_t genus = int64_from_json(g, where + ".fixed_curve_genera");
        if (genus < 0) schema_fail(where, "fixed_curve_genera entries must be >= 0");
        s.fixed_curve_genera.push_back(genus);
    }
    s.isolated_fixed_points =
        int64_from_json(require_field(j, "isolated_fixed_points", where), where);
    if (s.isolated_fixed_points < 0)
        schema_fail(where, "isolated_fixed_points must be >= 0");
    const Json& h1 = require_field(j, "h1_zero", where);
    const Json& stab = require_field(j, "stabilizers_ok", where);
    if (!h1.is_boolean() || !stab.is_boolean())
        schema_fail(where, "h1_zero and stabilizers_ok must be booleans");
    s.h1_zero = h1.get<bool>();
    s.stabilizers_ok = stab.get<bool>();
    return s;
}

Json snf_to_json(const SnfCertificate& cert) {
    Json j;
    j["u"] = matrix_to_json(cert.u);
    j["d"] = matrix_to_json(cert.d);
    j["v"] = matrix_to_json(cert.v);
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["admissible"] = v.admissible;
    j["violations"] = v.violations;
    j["lhs"] = group_to_json(v.lhs);
    j["rhs"] = group_to_json(v.rhs);
    j["isomorphic"] = v.isomorphic;
    return j;
}

Json double_cover_to_json(const DoubleCoverReport& r) {
    Json j;
    j["d"] = r.d;
    j["r"] = r.r;
    j["genus"] = r.genus;
    j["lhs"] = group_to_json(r.lhs_abstract);
    j["rhs"] = group_to_json(r.rhs_abstract);
    j["consistent"] = r.consistent;
    return j;
}

Json exactness_to_json(const ExactnessReport& r) {
    Json nodes = Json::array();
    for (const NodeReport& n : r.nodes) {
        Json node;
        node["index"] = n.index;
        node["group"] = group_to_json(n.group);
        node["composite_zero"] = n.composite_zero;
        node["exact"] = n.exact;
        node["homology"] = n.homology ? group_to_json(*n.homology) : Json(nullptr);
        nodes.push_back(std::move(node));
    }
    Json j;
    j["all_exact"] = r.all_exact;
    j["nodes"] = std::move(nodes);
    return j;
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cycoh
