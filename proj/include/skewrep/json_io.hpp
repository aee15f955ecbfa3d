#pragma once

#include <string>

#include "json.hpp"
#include "skewrep/smash.hpp"

namespace skewrep {

using Json = nlohmann::json;

// malformed or ill-typed input data
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// unreadable or unwritable files
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// field spec: {"p": int, "e": int, "modulus": [int] | null}
Json field_to_json(const Fq& f);
Fq field_from_json(const Json& j);

// elements: plain int when e = 1, little-endian coefficient list otherwise
Json element_to_json(const Fq& f, const FieldElement& a);
FieldElement element_from_json(const Fq& f, const Json& j);

// matrices: row-major nested lists of element encodings
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Fq& f, int rows, int cols, const Json& j,
                        const std::string& ctx = "matrix");

// quiver file: {"vertices": [...], "arrows": [{"name","from","to"}],
//               "automorphism": {"vertices": {...}, "arrows": {...}}}
struct QuiverFile {
    std::shared_ptr<const Quiver> quiver;
    QuiverAutomorphism sigma;
};
Json quiver_to_json(const Quiver& q, const QuiverAutomorphism& s);
QuiverFile quiver_from_json(const Json& j);

// representation file: {"field": ..., "dims": {...}, "maps": {...}}
Json rep_to_json(const Representation& r);
Representation rep_from_json(const Json& j, std::shared_ptr<const Quiver> q);

// smash-module file: representation fields plus
// {"sigma": {vertex: matrix}, "subgroup_power": int}
Json smash_to_json(const SmashModule& m);
SmashModule smash_from_json(const Json& j, const QuiverFile& qf);

Json morphism_to_json(const Fq& f, const RepMorphism& t);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

} // namespace skewrep
