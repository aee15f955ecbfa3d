#include "skewrep/json_io.hpp"

#include <fstream>

namespace skewrep {

namespace {

i64 as_int(const Json& j, const std::string& ctx) {
    if (!j.is_number_integer())
        throw ParseError(ctx + ": expected an integer, got " + j.dump());
    return j.get<i64>();
}

std::string as_str(const Json& j, const std::string& ctx) {
    if (!j.is_string()) throw ParseError(ctx + ": expected a string, got " + j.dump());
    return j.get<std::string>();
}

const Json& member(const Json& j, const std::string& key, const std::string& ctx) {
    if (!j.is_object()) throw ParseError(ctx + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(ctx + ": missing key \"" + key + "\"");
    return *it;
}

std::vector<i64> int_list(const Json& j, const std::string& ctx) {
    if (!j.is_array()) throw ParseError(ctx + ": expected a list of integers");
    std::vector<i64> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(as_int(v, ctx));
    return out;
}

} // namespace

Json field_to_json(const Fq& f) {
    Json j;
    j["p"] = f.p();
    j["e"] = f.e();
    if (f.e() == 1)
        j["modulus"] = nullptr;
    else
        j["modulus"] = f.modulus();
    return j;
}

Fq field_from_json(const Json& j) {
    i64 p = as_int(member(j, "p", "field"), "field.p");
    i64 e = as_int(member(j, "e", "field"), "field.e");
    if (e < 1 || e > 64) throw ParseError("field.e: out of range");
    const Json& mod = member(j, "modulus", "field");
    try {
        if (mod.is_null()) return Fq(p, static_cast<int>(e));
        return Fq(p, static_cast<int>(e), int_list(mod, "field.modulus"));
    } catch (const FieldError& err) {
        throw ParseError(std::string("field: ") + err.what());
    }
}

Json element_to_json(const Fq& f, const FieldElement& a) {
    if (f.e() == 1) return a.coeffs[0];
    return Json(a.coeffs);
}

FieldElement element_from_json(const Fq& f, const Json& j) {
    try {
        if (f.e() == 1) return f.from_int(as_int(j, "element"));
        auto coeffs = int_list(j, "element");
        if (static_cast<int>(coeffs.size()) != f.e())
            throw ParseError("element: expected " + std::to_string(f.e()) + " coefficients, got " +
                             std::to_string(coeffs.size()));
        return f.from_coeffs(std::move(coeffs));
    } catch (const FieldError& err) {
        throw ParseError(std::string("element: ") + err.what());
    }
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Fq& f, int rows, int cols, const Json& j, const std::string& ctx) {
    if (!j.is_array()) throw ParseError(ctx + ": expected a list of rows");
    if (static_cast<int>(j.size()) != rows)
        throw ParseError(ctx + ": expected " + std::to_string(rows) + " rows, got " +
                         std::to_string(j.size()));
    Matrix m(f, rows, cols);
    for (int r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError(ctx + " row " + std::to_string(r) + ": expected " +
                             std::to_string(cols) + " entries");
        for (int c = 0; c < cols; ++c)
            m.set(r, c, element_from_json(f, row[static_cast<size_t>(c)]));
    }
    return m;
}

Json quiver_to_json(const Quiver& q, const QuiverAutomorphism& s) {
    Json j;
    j["vertices"] = q.vertices();
    Json arrows = Json::array();
    for (const auto& a : q.arrows())
        arrows.push_back(Json{{"name", a.name}, {"from", a.from}, {"to", a.to}});
    j["arrows"] = std::move(arrows);
    j["automorphism"] = Json{{"vertices", s.vertex_map()}, {"arrows", s.arrow_map()}};
    return j;
}

QuiverFile quiver_from_json(const Json& j) {
    const Json& vj = member(j, "vertices", "quiver");
    if (!vj.is_array()) throw ParseError("quiver.vertices: expected a list");
    std::vector<std::string> vertices;
    for (const auto& v : vj) vertices.push_back(as_str(v, "quiver.vertices"));
    const Json& aj = member(j, "arrows", "quiver");
    if (!aj.is_array()) throw ParseError("quiver.arrows: expected a list");
    std::vector<Arrow> arrows;
    for (const auto& a : aj)
        arrows.push_back(Arrow{as_str(member(a, "name", "arrow"), "arrow.name"),
                               as_str(member(a, "from", "arrow"), "arrow.from"),
                               as_str(member(a, "to", "arrow"), "arrow.to")});
    auto quiver = std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
    const Json& auto_j = member(j, "automorphism", "quiver");
    auto read_map = [&](const Json& mj, const std::string& ctx) {
        if (!mj.is_object()) throw ParseError(ctx + ": expected an object");
        std::map<std::string, std::string> out;
        for (const auto& [k, v] : mj.items()) out[k] = as_str(v, ctx);
        return out;
    };
    QuiverAutomorphism sigma(*quiver,
                             read_map(member(auto_j, "vertices", "automorphism"),
                                      "automorphism.vertices"),
                             read_map(member(auto_j, "arrows", "automorphism"),
                                      "automorphism.arrows"));
    return QuiverFile{std::move(quiver), std::move(sigma)};
}

Json rep_to_json(const Representation& r) {
    Json j;
    j["field"] = field_to_json(r.field());
    j["dims"] = r.dims();
    Json maps;
    for (const auto& [a, m] : r.maps()) maps[a] = matrix_to_json(m);
    j["maps"] = std::move(maps);
    return j;
}

Representation rep_from_json(const Json& j, std::shared_ptr<const Quiver> q) {
    Fq field = field_from_json(member(j, "field", "representation"));
    const Json& dj = member(j, "dims", "representation");
    if (!dj.is_object()) throw ParseError("dims: expected an object");
    std::map<std::string, int> dims;
    for (const auto& [k, v] : dj.items()) dims[k] = static_cast<int>(as_int(v, "dims." + k));
    const Json& mj = member(j, "maps", "representation");
    if (!mj.is_object()) throw ParseError("maps: expected an object");
    std::map<std::string, Matrix> maps;
    for (const auto& [name, entry] : mj.items()) {
        if (!q->has_arrow(name)) throw ParseError("maps: unknown arrow \"" + name + "\"");
        const Arrow& a = q->arrow(name);
        auto dto = dims.find(a.to), dfrom = dims.find(a.from);
        if (dto == dims.end() || dfrom == dims.end())
            throw ParseError("maps." + name + ": endpoints missing from dims");
        maps.emplace(name, matrix_from_json(field, dto->second, dfrom->second, entry,
                                            "maps." + name));
    }
    return Representation(std::move(q), std::move(field), std::move(dims), std::move(maps));
}

Json smash_to_json(const SmashModule& m) {
    Json j = rep_to_json(m.rep());
    Json action;
    for (const auto& [v, b] : m.action()) action[v] = matrix_to_json(b);
    j["sigma"] = std::move(action);
    j["subgroup_power"] = m.subgroup_power();
    return j;
}

SmashModule smash_from_json(const Json& j, const QuiverFile& qf) {
    Representation rep = rep_from_json(j, qf.quiver);
    int d = static_cast<int>(as_int(member(j, "subgroup_power", "module"), "subgroup_power"));
    if (d < 1) throw ParseError("subgroup_power: must be positive");
    const Json& aj = member(j, "sigma", "module");
    if (!aj.is_object()) throw ParseError("sigma: expected an object of matrices");
    std::map<std::string, Matrix> action;
    for (const auto& [v, entry] : aj.items()) {
        if (!qf.quiver->has_vertex(v)) throw ParseError("sigma: unknown vertex \"" + v + "\"");
        action.emplace(v, matrix_from_json(rep.field(), rep.dim(v),
                                           rep.dim(qf.sigma.vertex(v, -d)), entry,
                                           "sigma." + v));
    }
    return SmashModule(std::move(rep), qf.sigma, std::move(action), d);
}

Json morphism_to_json(const Fq& f, const RepMorphism& t) {
    (void)f;
    Json j;
    for (const auto& [v, b] : t.blocks) j[v] = matrix_to_json(b);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failed for " + path);
}

} // namespace skewrep
