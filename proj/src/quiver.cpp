#include "skewrep/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace skewrep {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (size_t i = 0; i < arrows_.size(); ++i) arrow_index_[arrows_[i].name] = i;
    validate();
}

bool Quiver::has_vertex(const std::string& v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Quiver::has_arrow(const std::string& name) const {
    return arrow_index_.count(name) > 0;
}

const Arrow& Quiver::arrow(const std::string& name) const {
    auto it = arrow_index_.find(name);
    if (it == arrow_index_.end()) throw StructureError("unknown arrow: " + name);
    return arrows_[it->second];
}

void Quiver::validate() const {
    if (vertices_.empty()) throw StructureError("quiver has no vertices");
    std::set<std::string> vs(vertices_.begin(), vertices_.end());
    if (vs.size() != vertices_.size()) throw StructureError("duplicate vertex names");
    if (arrow_index_.size() != arrows_.size()) throw StructureError("duplicate arrow names");
    for (const auto& a : arrows_) {
        if (!vs.count(a.from)) throw StructureError("arrow " + a.name + " has unknown source " + a.from);
        if (!vs.count(a.to)) throw StructureError("arrow " + a.name + " has unknown target " + a.to);
    }

    // connectivity of the underlying graph
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& a : arrows_) {
        adj[a.from].push_back(a.to);
        adj[a.to].push_back(a.from);
    }
    std::set<std::string> seen{vertices_.front()};
    std::vector<std::string> stack{vertices_.front()};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const auto& w : adj[v]) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    if (seen.size() != vertices_.size()) throw StructureError("quiver is not connected");

    // acyclicity via Kahn's algorithm
    std::map<std::string, int> indeg;
    for (const auto& v : vertices_) indeg[v] = 0;
    for (const auto& a : arrows_) ++indeg[a.to];
    std::vector<std::string> queue;
    for (const auto& [v, d] : indeg)
        if (d == 0) queue.push_back(v);
    size_t removed = 0;
    while (!queue.empty()) {
        std::string v = queue.back();
        queue.pop_back();
        ++removed;
        for (const auto& a : arrows_) {
            if (a.from != v) continue;
            if (--indeg[a.to] == 0) queue.push_back(a.to);
        }
    }
    if (removed != vertices_.size()) throw StructureError("quiver has an oriented cycle");
}

QuiverAutomorphism::QuiverAutomorphism(const Quiver& q,
                                       std::map<std::string, std::string> vertex_map,
                                       std::map<std::string, std::string> arrow_map)
    : vmap_(std::move(vertex_map)), amap_(std::move(arrow_map)) {
    // both maps must be permutations of the declared vertices and arrows
    std::set<std::string> vimg;
    for (const auto& v : q.vertices()) {
        auto it = vmap_.find(v);
        if (it == vmap_.end()) throw StructureError("automorphism misses vertex " + v);
        if (!q.has_vertex(it->second)) throw StructureError("automorphism maps to unknown vertex " + it->second);
        vimg.insert(it->second);
    }
    if (vmap_.size() != q.vertices().size() || vimg.size() != q.vertices().size())
        throw StructureError("vertex map is not a permutation");
    std::set<std::string> aimg;
    for (const auto& a : q.arrows()) {
        auto it = amap_.find(a.name);
        if (it == amap_.end()) throw StructureError("automorphism misses arrow " + a.name);
        if (!q.has_arrow(it->second)) throw StructureError("automorphism maps to unknown arrow " + it->second);
        aimg.insert(it->second);
    }
    if (amap_.size() != q.arrows().size() || aimg.size() != q.arrows().size())
        throw StructureError("arrow map is not a permutation");

    // compatibility with sources and targets
    for (const auto& a : q.arrows()) {
        const Arrow& b = q.arrow(amap_.at(a.name));
        if (b.from != vmap_.at(a.from) || b.to != vmap_.at(a.to))
            throw StructureError("automorphism breaks incidence at arrow " + a.name);
    }

    for (const auto& [k, v] : vmap_) vinv_[v] = k;
    for (const auto& [k, v] : amap_) ainv_[v] = k;

    // true order: lcm of cycle lengths over vertices and arrows
    i64 ord = 1;
    auto cycle_lcm = [&ord](const std::map<std::string, std::string>& m) {
        std::set<std::string> done;
        for (const auto& [start, unused] : m) {
            (void)unused;
            if (done.count(start)) continue;
            i64 len = 0;
            std::string cur = start;
            do {
                done.insert(cur);
                cur = m.at(cur);
                ++len;
            } while (cur != start);
            ord = std::lcm(ord, len);
        }
    };
    cycle_lcm(vmap_);
    cycle_lcm(amap_);
    order_ = static_cast<int>(ord);
}

std::string QuiverAutomorphism::vertex(const std::string& v, int j) const {
    int n = order_;
    int k = ((j % n) + n) % n;
    std::string cur = v;
    if (vmap_.find(cur) == vmap_.end()) throw StructureError("unknown vertex: " + v);
    for (int i = 0; i < k; ++i) cur = vmap_.at(cur);
    return cur;
}

std::string QuiverAutomorphism::arrow(const std::string& a, int j) const {
    int n = order_;
    int k = ((j % n) + n) % n;
    std::string cur = a;
    if (amap_.find(cur) == amap_.end()) throw StructureError("unknown arrow: " + a);
    for (int i = 0; i < k; ++i) cur = amap_.at(cur);
    return cur;
}

} // namespace skewrep
