#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewrep/field.hpp"

namespace skewrep {

// Raised when a quiver, automorphism, representation or module breaks a
// structural precondition.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

struct Arrow {
    std::string name;
    std::string from;
    std::string to;

    bool operator==(const Arrow&) const = default;
};

// Finite connected quiver without oriented cycles.  Vertex and arrow order
// is the declaration order and is used for every canonical ordering
// downstream.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_vertex(const std::string& v) const;
    const Arrow& arrow(const std::string& name) const;
    bool has_arrow(const std::string& name) const;

    bool operator==(const Quiver& o) const {
        return vertices_ == o.vertices_ && arrows_ == o.arrows_;
    }

private:
    void validate() const;

    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::map<std::string, size_t> arrow_index_;
};

// Quiver automorphism sigma: compatible vertex and arrow permutations.  The
// group it generates is cyclic of order n = order().
class QuiverAutomorphism {
public:
    QuiverAutomorphism(const Quiver& q,
                       std::map<std::string, std::string> vertex_map,
                       std::map<std::string, std::string> arrow_map);

    int order() const { return order_; }

    // j-fold application, j may be negative
    std::string vertex(const std::string& v, int j = 1) const;
    std::string arrow(const std::string& a, int j = 1) const;

    const std::map<std::string, std::string>& vertex_map() const { return vmap_; }
    const std::map<std::string, std::string>& arrow_map() const { return amap_; }

    bool operator==(const QuiverAutomorphism& o) const {
        return vmap_ == o.vmap_ && amap_ == o.amap_;
    }

private:
    std::map<std::string, std::string> vmap_, amap_;
    std::map<std::string, std::string> vinv_, ainv_;
    int order_;
};

} // namespace skewrep
