// graph.hpp -- dual graphs labeled by self-intersection, isomorphism testing
// and DOT output
//
// Graphs here are tiny (a valid configuration never produces more than ~20
// vertices), so isomorphism is a plain backtracking search over label- and
// degree-compatible assignments.
#ifndef DELPEZZO_GRAPH_HPP
#define DELPEZZO_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace delpezzo {

struct DualGraph {
    struct Vertex {
        std::string label;
        std::int64_t self_int = -1;
    };

    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;  // unordered, simple

    int add_vertex(std::string label, std::int64_t self_int) {
        vertices.push_back({std::move(label), self_int});
        return static_cast<int>(vertices.size()) - 1;
    }

    void add_edge(int a, int b) {
        if (a == b) return;
        if (a > b) std::swap(a, b);
        if (!has_edge(a, b)) edges.emplace_back(a, b);
    }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(vertices.size());
        for (auto [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        return adj;
    }

    // multiset of (self_int, degree) -- cheap invariant
    std::multiset<std::pair<std::int64_t, int>> signature() const {
        auto adj = adjacency();
        std::multiset<std::pair<std::int64_t, int>> sig;
        for (size_t i = 0; i < vertices.size(); ++i)
            sig.insert({vertices[i].self_int, static_cast<int>(adj[i].size())});
        return sig;
    }

    bool every_component_is_tree() const {
        // |V| - #components == |E| exactly for forests
        std::vector<int> parent(vertices.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        int merges = 0;
        for (auto [a, b] : edges) {
            int ra = find(a), rb = find(b);
            if (ra == rb) return false;
            parent[ra] = rb;
            merges++;
        }
        return merges == static_cast<int>(edges.size());
    }
};

// Isomorphism of self-intersection-labeled graphs.
inline bool isomorphic(const DualGraph& g, const DualGraph& h) {
    if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return false;
    if (g.signature() != h.signature()) return false;

    const int n = static_cast<int>(g.vertices.size());
    auto ga = g.adjacency();
    auto ha = h.adjacency();
    std::vector<int> map(n, -1), used(n, 0);

    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (g.vertices[v].self_int != h.vertices[w].self_int) continue;
            if (ga[v].size() != ha[w].size()) continue;
            bool ok = true;
            for (int u : ga[v]) {
                if (map[u] < 0) continue;
                if (!h.has_edge(map[u], w)) {
                    ok = false;
                    break;
                }
            }
            // no spurious edges into already-mapped vertices
            if (ok) {
                for (int u = 0; u < v; ++u) {
                    bool ge = g.has_edge(u, v), he = h.has_edge(map[u], w);
                    if (ge != he) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (assign(v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    return assign(0);
}

// Deterministic structural key: vertices sorted by (self_int, degree), edge
// list re-indexed accordingly.  Equal keys do not imply isomorphism in
// general, but the key is stable for a fixed model and good for diffs.
inline std::string structural_key(const DualGraph& g) {
    auto adj = g.adjacency();
    std::vector<int> order(g.vertices.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        auto ka = std::make_pair(g.vertices[a].self_int, adj[a].size());
        auto kb = std::make_pair(g.vertices[b].self_int, adj[b].size());
        return ka < kb;
    });
    std::vector<int> pos(order.size());
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    std::ostringstream os;
    for (int v : order) os << g.vertices[v].self_int << ";";
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges) es.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
    std::sort(es.begin(), es.end());
    os << "|";
    for (auto [a, b] : es) os << a << "-" << b << ";";
    return os.str();
}

// DOT rendering.  Vertex conventions: a (-1)-curve is an unfilled circle, a
// (-2)-curve a filled one, a (-n)-curve a circle labeled n.  The raw
// self-intersection is attached as a `selfint` attribute for machine use.
inline std::string to_dot(const DualGraph& g, const std::string& name = "dual_graph") {
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    os << "  node [shape=circle, fixedsize=true, width=0.35];\n";
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        os << "  v" << i << " [selfint=" << v.self_int;
        if (!v.label.empty()) os << ", tooltip=\"" << v.label << "\"";
        if (v.self_int == -1)
            os << ", label=\"\"";
        else if (v.self_int == -2)
            os << ", label=\"\", style=filled, fillcolor=black";
        else
            os << ", label=\"" << -v.self_int << "\"";
        os << "];\n";
    }
    for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace delpezzo

#endif
