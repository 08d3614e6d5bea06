#include "quotfan/json_io.hpp"

#include <limits>
#include <sstream>

namespace quotfan {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
    throw Error("malformed JSON at '" + field + "': " + why);
}

} // namespace

Json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<long long>::min() &&
        x <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(x));
    return Json(x.str());
}

Json rat_to_json(const Rat& q) {
    if (den(q) == 1) return int_to_json(num(q));
    return Json(to_string(q));
}

Int json_to_int(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (...) {
            bad_field(field, "not an integer");
        }
    }
    bad_field(field, "expected an integer");
}

Rat json_to_rat(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (...) {
            bad_field(field, "not a rational");
        }
    }
    bad_field(field, "expected a rational");
}

Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", rows}};
}

IntMatrix json_to_matrix(const Json& j, const std::string& field) {
    const Json* rows = &j;
    if (j.is_object()) {
        if (!j.contains("rows")) bad_field(field + ".rows", "missing");
        rows = &j.at("rows");
    }
    if (!rows->is_array()) bad_field(field + ".rows", "expected an array of rows");
    std::vector<IntVec> data;
    size_t cols = 0;
    for (size_t i = 0; i < rows->size(); ++i) {
        const Json& row = (*rows)[i];
        if (!row.is_array())
            bad_field(field + ".rows[" + std::to_string(i) + "]", "expected an array");
        IntVec v;
        for (size_t k = 0; k < row.size(); ++k)
            v.push_back(json_to_int(row[k], field + ".rows[" + std::to_string(i) + "][" +
                                                std::to_string(k) + "]"));
        if (i == 0) cols = v.size();
        if (v.size() != cols) bad_field(field + ".rows", "ragged rows");
        data.push_back(std::move(v));
    }
    return IntMatrix::from_rows(data, cols);
}

Json vec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(int_to_json(x));
    return a;
}

Json ratvec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

RatVec json_to_ratvec(const Json& j, const std::string& field) {
    if (!j.is_array()) bad_field(field, "expected an array");
    RatVec v;
    for (size_t i = 0; i < j.size(); ++i)
        v.push_back(json_to_rat(j[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

Json fan_to_json(const Fan& f) {
    Json rays = Json::array();
    for (const auto& r : f.rays()) rays.push_back(vec_to_json(r));
    Json cones = Json::array();
    for (const auto& c : f.max_cones()) {
        Json ci = Json::array();
        for (size_t i : c) ci.push_back(i);
        cones.push_back(ci);
    }
    return Json{{"rank", f.rank()}, {"rays", rays}, {"max_cones", cones}};
}

Fan json_to_fan(const Json& j) {
    if (!j.is_object() || !j.contains("rank")) bad_field("fan.rank", "missing");
    if (!j.contains("rays")) bad_field("fan.rays", "missing");
    if (!j.contains("max_cones")) bad_field("fan.max_cones", "missing");
    if (!j.at("rank").is_number_unsigned()) bad_field("fan.rank", "expected a count");
    size_t rank = j.at("rank").get<size_t>();
    std::vector<IntVec> rays;
    for (size_t i = 0; i < j.at("rays").size(); ++i) {
        IntVec r;
        for (size_t k = 0; k < j.at("rays")[i].size(); ++k)
            r.push_back(json_to_int(j.at("rays")[i][k], "fan.rays[" + std::to_string(i) + "]"));
        if (r.size() != rank) bad_field("fan.rays", "ray length differs from rank");
        rays.push_back(r);
    }
    std::vector<Cone> cones;
    for (const auto& c : j.at("max_cones")) {
        std::vector<IntVec> gens;
        for (const auto& idx : c) {
            if (!idx.is_number_unsigned()) bad_field("fan.max_cones", "expected ray indices");
            size_t i = idx.get<size_t>();
            if (i >= rays.size()) bad_field("fan.max_cones", "ray index out of range");
            gens.push_back(rays[i]);
        }
        cones.push_back(Cone::from_generators(gens, rank));
    }
    if (cones.empty()) return Fan::trivial(rank);
    return Fan::from_cones(cones, rank);
}

Json polytope_to_json(const Polytope& p, bool with_vertices) {
    Polytope canon = p.canonicalized();
    auto forms_to_json = [](const std::vector<AffineForm>& forms) {
        Json arr = Json::array();
        for (const auto& f : forms) {
            Json row = Json::array();
            for (const auto& c : f.coeffs) row.push_back(int_to_json(c));
            row.push_back(int_to_json(f.offset));
            arr.push_back(row);
        }
        return arr;
    };
    Json out{{"rank", p.rank()},
             {"inequalities", forms_to_json(canon.inequalities())},
             {"equations", forms_to_json(canon.equations())}};
    if (with_vertices) {
        Json verts = Json::array();
        for (const auto& v : p.vertices()) verts.push_back(ratvec_to_json(v));
        out["vertices"] = verts;
        out["bounded"] = p.bounded();
        out["empty"] = p.empty();
    }
    return out;
}

Polytope json_to_polytope(const Json& j) {
    if (!j.is_object() || !j.contains("rank")) bad_field("polytope.rank", "missing");
    size_t rank = j.at("rank").get<size_t>();
    auto read_forms = [&](const char* key) {
        std::vector<AffineForm> forms;
        if (!j.contains(key)) return forms;
        const Json& arr = j.at(key);
        if (!arr.is_array()) bad_field(std::string("polytope.") + key, "expected an array");
        for (size_t i = 0; i < arr.size(); ++i) {
            const Json& row = arr[i];
            if (!row.is_array() || row.size() != rank + 1)
                bad_field(std::string("polytope.") + key + "[" + std::to_string(i) + "]",
                          "expected coefficients plus offset");
            IntVec c;
            for (size_t k = 0; k < rank; ++k)
                c.push_back(json_to_int(row[k], std::string("polytope.") + key));
            forms.push_back(
                AffineForm{c, json_to_int(row[rank], std::string("polytope.") + key)});
        }
        return forms;
    };
    return Polytope::from_h_rep(read_forms("inequalities"), read_forms("equations"), rank);
}

Json weight_system_to_json(const WeightSystem& ws) {
    Json weights = Json::array();
    for (size_t j = 0; j < ws.coordinate_count(); ++j)
        weights.push_back(vec_to_json(ws.weight(j)));
    Json labels = Json::array();
    for (const auto& l : ws.labels()) labels.push_back(l);
    return Json{{"weights", weights}, {"labels", labels}};
}

WeightSystem json_to_weight_system(const Json& j) {
    if (j.is_object() && j.contains("rows")) return WeightSystem(json_to_matrix(j, "weights"));
    if (!j.is_object() || !j.contains("weights")) bad_field("weights", "missing");
    const Json& cols = j.at("weights");
    if (!cols.is_array() || cols.empty()) bad_field("weights", "expected a nonempty array");
    std::vector<IntVec> columns;
    for (size_t i = 0; i < cols.size(); ++i) {
        if (!cols[i].is_array()) bad_field("weights[" + std::to_string(i) + "]", "expected an array");
        IntVec c;
        for (size_t k = 0; k < cols[i].size(); ++k)
            c.push_back(json_to_int(cols[i][k], "weights[" + std::to_string(i) + "]"));
        columns.push_back(c);
    }
    size_t rank = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != rank) bad_field("weights", "ragged weight vectors");
    std::vector<std::string> labels;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) {
            if (!l.is_string()) bad_field("labels", "expected strings");
            labels.push_back(l.get<std::string>());
        }
    return WeightSystem(IntMatrix::from_cols(columns, rank), labels);
}

Json chamber_complex_to_json(const ChamberComplex& cc) {
    Json chambers = Json::array();
    for (size_t i = 0; i < cc.chambers.size(); ++i) {
        Json gens = Json::array();
        for (const auto& g : cc.chambers[i].rays()) gens.push_back(vec_to_json(g));
        chambers.push_back(Json{{"generators", gens},
                                {"representative", vec_to_json(cc.representatives[i])}});
    }
    Json support = Json::array();
    for (const auto& g : cc.support.rays()) support.push_back(vec_to_json(g));
    return Json{{"ambient_rank", cc.ambient_rank},
                {"support_generators", support},
                {"chambers", chambers}};
}

Json fan_report_to_json(const FanReport& r) {
    Json out{{"is_smooth", r.is_smooth},
             {"is_simplicial", r.is_simplicial},
             {"is_complete", r.is_complete},
             {"ray_count", r.ray_count},
             {"max_cone_count", r.max_cone_count}};
    if (r.picard_number) out["picard_number"] = *r.picard_number;
    else out["picard_number"] = nullptr;
    return out;
}

Json relation_report_to_json(const RelationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(
            Json{{"relation", c.relation}, {"holds", c.holds}, {"witness", c.witness}});
    return Json{{"all_hold", r.all_hold}, {"mode", r.mode}, {"seed", r.seed}, {"checks", checks}};
}

RatVec parse_rational_vector(const std::string& s) {
    RatVec v;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ',')) {
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw Error("empty entry in rational vector");
        v.push_back(parse_rational(item.substr(a, b - a + 1)));
    }
    return v;
}

} // namespace quotfan
