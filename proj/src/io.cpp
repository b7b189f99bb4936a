#include "cacodes/io.hpp"

#include "cacodes/error.hpp"

namespace cacodes::io {

namespace {

[[noreturn]] void bad_file(const std::string& what) { fail("InvalidCodeFile", what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad_file(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::size_t size_member(const Json& j, const char* key) {
    const Json& v = member(j, key);
    if (!v.is_number_unsigned()) bad_file(std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Field field_member(const Json& j) {
    const Json& v = member(j, "q");
    if (v.is_string()) return Field::parse(v.get<std::string>());
    if (v.is_number_unsigned()) return Field::make(v.get<std::uint32_t>());
    bad_file("'q' must be a field spec string");
}

std::vector<Vector> rows_from_json(const Field& field, std::size_t cols, const Json& rows) {
    if (!rows.is_array()) bad_file("expected an array of rows");
    std::vector<Vector> out;
    for (const auto& r : rows) {
        if (!r.is_array() || r.size() != cols) bad_file("row length differs from " + std::to_string(cols));
        Vector v;
        v.reserve(cols);
        for (const auto& e : r) v.push_back(element_from_json(field, e));
        out.push_back(std::move(v));
    }
    return out;
}

Json rows_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (const auto e : m.row(i)) r.push_back(element_to_json(m.field(), e));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

Json element_to_json(const Field& field, Elem a) {
    if (field.is_prime_field()) return a;
    return field.coords(a);
}

Elem element_from_json(const Field& field, const Json& j) {
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v >= field.p()) bad_file("entry " + std::to_string(v) + " out of range for F_" + field.spec());
        return static_cast<Elem>(v);
    }
    if (j.is_array()) {
        std::vector<std::uint32_t> coords;
        for (const auto& c : j) {
            if (!c.is_number_unsigned()) bad_file("coordinates must be non-negative integers");
            coords.push_back(c.get<std::uint32_t>());
        }
        return field.from_coords(coords);
    }
    bad_file("field element must be an integer or coordinate array");
}

Json matrix_to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["q"] = m.field().spec();
    j["entries"] = rows_json(m);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    const Field field = field_member(j);
    const std::size_t rows = size_member(j, "rows");
    const std::size_t cols = size_member(j, "cols");
    const auto entries = rows_from_json(field, cols, member(j, "entries"));
    if (entries.size() != rows) bad_file("row count differs from 'rows'");
    return Matrix::from_rows(field, cols, entries);
}

Json rows_to_json(const Subspace& s) { return rows_json(s.basis()); }

Json code_to_json(const GrassmannianCode& code) {
    Json j;
    j["q"] = code.field().spec();
    j["n"] = code.ambient_n();
    Json words = Json::array();
    for (const auto& w : code.codewords()) words.push_back(rows_to_json(w));
    j["codewords"] = std::move(words);
    return j;
}

GrassmannianCode code_from_json(const Json& doc) {
    const Json& j = doc.is_object() && doc.contains("code") ? doc.at("code") : doc;
    const Field field = field_member(j);
    const std::size_t n = size_member(j, "n");
    const Json& words = member(j, "codewords");
    if (!words.is_array()) bad_file("'codewords' must be an array");
    std::vector<Subspace> codewords;
    for (const auto& w : words) {
        const Subspace s = Subspace::from_rows(Matrix::from_rows(field, n, rows_from_json(field, n, w)));
        if (s.dim() != w.size()) bad_file("codeword rows are linearly dependent");
        codewords.push_back(s);
    }
    return GrassmannianCode(field, n, std::move(codewords));
}

Json polynomial_to_json(const Polynomial& p) {
    Json j;
    j["coeffs"] = to_text(p);
    j["display"] = display(p);
    return j;
}

Json params_to_json(const CodeParams& p) {
    Json j;
    j["n"] = p.n;
    j["max_dim"] = p.max_dim;
    j["size"] = p.size;
    j["log_q_size"] = p.log_q_size;
    if (p.min_distance) {
        j["min_distance"] = *p.min_distance;
    } else {
        j["min_distance"] = nullptr;
        j["min_distance_note"] = "undefined: fewer than two codewords";
    }
    return j;
}

Json profile_to_json(const GcdProfile& p) {
    Json j;
    j["max_gcd_degree"] = p.max_gcd_degree;
    j["witness_pair"] = {p.witness.first, p.witness.second};
    j["pairwise_degrees"] = p.degrees;
    return j;
}

Json stats_to_json(const SimulationStats& s) {
    Json j;
    j["trials"] = s.trials;
    j["successes"] = s.successes;
    j["ambiguities"] = s.ambiguities;
    j["failures"] = s.failures;
    j["guarantee_violations"] = s.guarantee_violations;
    j["code_min_distance"] = s.code_min_distance ? Json(*s.code_min_distance) : Json(nullptr);
    j["success_rate"] = s.success_rate;
    j["ambiguity_rate"] = s.ambiguity_rate;
    j["mean_distance_to_sent"] = s.mean_distance_to_sent;
    Json hist = Json::array();
    for (const auto& [d, count] : s.distance_histogram) hist.push_back({{"distance", d}, {"count", count}});
    j["distance_histogram"] = std::move(hist);
    return j;
}

}  // namespace cacodes::io
