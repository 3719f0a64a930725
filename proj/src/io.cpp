#include "spectile/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace spectile {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

json parse_or_fail(const std::string& text, const char* kind) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        fail(std::string(kind) + ": invalid structured text: " + ex.what());
    }
}

void require_keys(const json& j, const char* kind, const std::vector<std::string>& allowed) {
    if (!j.is_object())
        fail(std::string(kind) + ": top level must be an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const auto& k : allowed)
            known = known || item.key() == k;
        if (!known)
            fail(std::string(kind) + ": unknown field '" + item.key() + "'");
    }
}

std::int64_t get_int(const json& j, const char* kind, const std::string& field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        fail(std::string(kind) + ": field '" + field + "' missing or not an integer");
    return j[field].get<std::int64_t>();
}

std::vector<std::int64_t> get_int_list(const json& v, const char* kind, const std::string& field) {
    if (!v.is_array())
        fail(std::string(kind) + ": field '" + field + "' must be an array of integers");
    std::vector<std::int64_t> out;
    for (const auto& x : v) {
        if (!x.is_number_integer())
            fail(std::string(kind) + ": field '" + field + "' must contain integers only");
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

} // namespace

PointSet set_from_text(const std::string& text) {
    const char* kind = "set file";
    json j = parse_or_fail(text, kind);
    require_keys(j, kind, {"moduli", "points"});
    if (!j.contains("moduli"))
        fail(std::string(kind) + ": field 'moduli' missing");
    std::vector<std::int64_t> moduli = get_int_list(j["moduli"], kind, "moduli");
    if (moduli.empty())
        fail(std::string(kind) + ": field 'moduli' must be non-empty");
    GroupSpec g = make_group(moduli);
    if (!j.contains("points") || !j["points"].is_array())
        fail(std::string(kind) + ": field 'points' missing or not an array");
    std::vector<GroupElement> pts;
    for (const auto& p : j["points"]) {
        GroupElement x = get_int_list(p, kind, "points");
        if (x.size() != g.dim())
            fail(std::string(kind) + ": field 'points' has a point of wrong dimension");
        pts.push_back(std::move(x));
    }
    return PointSet(g, std::move(pts));
}

std::string set_to_text(const PointSet& s) {
    ordered_json j;
    j["moduli"] = s.group().moduli;
    j["points"] = ordered_json::array();
    for (const auto& p : s.points())
        j["points"].push_back(p);
    return j.dump(2) + "\n";
}

MatrixFile matrix_from_text(const std::string& text) {
    const char* kind = "matrix file";
    json j = parse_or_fail(text, kind);
    require_keys(j, kind, {"denominator", "modulus", "rows"});
    MatrixFile mf;
    if (j.contains("denominator"))
        mf.denominator = get_int(j, kind, "denominator");
    if (j.contains("modulus"))
        mf.modulus = get_int(j, kind, "modulus");
    if (mf.denominator && mf.modulus)
        fail(std::string(kind) + ": fields 'denominator' and 'modulus' are mutually exclusive");
    if (!mf.denominator && !mf.modulus)
        fail(std::string(kind) + ": one of 'denominator' or 'modulus' is required");
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].empty())
        fail(std::string(kind) + ": field 'rows' missing or empty");
    std::size_t width = 0;
    for (const auto& r : j["rows"]) {
        std::vector<std::int64_t> row = get_int_list(r, kind, "rows");
        if (mf.rows.empty())
            width = row.size();
        else if (row.size() != width)
            fail(std::string(kind) + ": field 'rows' is ragged");
        mf.rows.push_back(std::move(row));
    }
    if (width == 0)
        fail(std::string(kind) + ": field 'rows' has empty rows");
    return mf;
}

MatrixFile read_matrix_file(const std::string& path) {
    return matrix_from_text(read_text_file(path));
}

RationalMatrix as_rational_matrix(const MatrixFile& mf) {
    std::int64_t den = mf.denominator ? *mf.denominator : *mf.modulus;
    return RationalMatrix::from_rows(den, mf.rows);
}

IntMatrixModN as_int_matrix(const MatrixFile& mf, std::optional<std::int64_t> modulus_override) {
    std::int64_t n;
    if (modulus_override) {
        n = *modulus_override;
        std::int64_t carried = mf.modulus ? *mf.modulus : (mf.denominator ? *mf.denominator : n);
        if (carried != n)
            fail("matrix file: stored modulus " + std::to_string(carried) +
                 " conflicts with requested modulus " + std::to_string(n));
    } else {
        n = mf.modulus ? *mf.modulus : *mf.denominator;
    }
    return IntMatrixModN::from_rows(n, mf.rows);
}

std::string rational_matrix_to_text(const RationalMatrix& m) {
    ordered_json j;
    j["denominator"] = m.den();
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.num(i, c));
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string int_matrix_to_text(const IntMatrixModN& m) {
    ordered_json j;
    j["modulus"] = m.modulus();
    j["rows"] = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m.at(i, c));
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

SimpleGraph graph_from_text(const std::string& text) {
    const char* kind = "graph file";
    json j = parse_or_fail(text, kind);
    require_keys(j, kind, {"n", "edges"});
    std::int64_t n = get_int(j, kind, "n");
    if (n < 1 || n > 1'000'000)
        fail(std::string(kind) + ": field 'n' out of range");
    if (!j.contains("edges") || !j["edges"].is_array())
        fail(std::string(kind) + ": field 'edges' missing or not an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        std::vector<std::int64_t> pair = get_int_list(e, kind, "edges");
        if (pair.size() != 2)
            fail(std::string(kind) + ": field 'edges' must hold pairs");
        if (pair[0] < 1 || pair[0] > n || pair[1] < 1 || pair[1] > n)
            fail(std::string(kind) + ": field 'edges' has an endpoint outside 1..n");
        edges.emplace_back(static_cast<int>(pair[0]), static_cast<int>(pair[1]));
    }
    try {
        return SimpleGraph(static_cast<int>(n), std::move(edges));
    } catch (const std::invalid_argument& ex) {
        fail(std::string(kind) + ": field 'edges' invalid: " + ex.what());
    }
}

std::string graph_to_text(const SimpleGraph& g) {
    ordered_json j;
    j["n"] = g.n();
    j["edges"] = ordered_json::array();
    for (const auto& [a, b] : g.edges())
        j["edges"].push_back(ordered_json::array({a, b}));
    return j.dump(2) + "\n";
}

SimpleGraph read_graph_file(const std::string& path) {
    return graph_from_text(read_text_file(path));
}

PointSet read_set_file(const std::string& path) { return set_from_text(read_text_file(path)); }

void write_set_file(const std::string& path, const PointSet& s) {
    write_text_file(path, set_to_text(s));
}

PointSet parse_inline_set(const std::string& text, const GroupSpec& g) {
    if (g.dim() != 1)
        fail("inline sets are only supported for cyclic groups; use a set file");
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t.push_back(c);
    if (!t.empty() && t.front() == '{') {
        if (t.size() < 2 || t.back() != '}')
            fail("inline set: expected {a,b,...}");
        t = t.substr(1, t.size() - 2);
    }
    std::vector<std::int64_t> values;
    if (!t.empty()) {
        std::istringstream is(t);
        std::string token;
        while (std::getline(is, token, ',')) {
            try {
                std::size_t used = 0;
                values.push_back(std::stoll(token, &used));
                if (used != token.size())
                    fail("");
            } catch (const std::exception&) {
                fail("inline set: '" + token + "' is not an integer");
            }
        }
        if (!t.empty() && t.back() == ',')
            fail("inline set: trailing comma");
    }
    return PointSet::from_residues(g, values);
}

std::vector<std::int64_t> parse_moduli(const std::string& text) {
    std::vector<std::int64_t> moduli;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        try {
            std::size_t used = 0;
            moduli.push_back(std::stoll(token, &used));
            if (used != token.size())
                fail("");
        } catch (const std::exception&) {
            fail("group moduli: '" + token + "' is not an integer");
        }
    }
    if (moduli.empty())
        fail("group moduli: empty list");
    return moduli;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail("cannot write file: " + path);
    out << content;
}

} // namespace spectile
