#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "delpezzo/graph.hpp"

using namespace delpezzo;

namespace {

// ground truth: try every vertex permutation
bool isomorphic_brute(const DualGraph& g, const DualGraph& h) {
    if (g.vertices.size() != h.vertices.size() || g.edges.size() != h.edges.size()) return false;
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = g.vertices[i].self_int == h.vertices[perm[i]].self_int;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                ok = g.has_edge(i, j) == h.has_edge(perm[i], perm[j]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

DualGraph random_graph(Rng& rng, int n) {
    DualGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("", -rng.range(1, 3));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.range(0, 2) == 0) g.add_edge(i, j);
    return g;
}

DualGraph shuffled(Rng& rng, const DualGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.range(0, i)]);
    DualGraph h;
    h.vertices.resize(n);
    for (int i = 0; i < n; ++i) h.vertices[perm[i]] = g.vertices[i];
    for (auto [a, b] : g.edges) h.add_edge(perm[a], perm[b]);
    return h;
}

}  // namespace

TEST_CASE("isomorphism testing agrees with permutation search") {
    Rng rng(0xfeedface12345ull);
    int positives = 0, negatives = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const int n = rng.range(1, 7);
        DualGraph g = random_graph(rng, n);
        // a shuffled copy is always isomorphic
        DualGraph h = shuffled(rng, g);
        CHECK(isomorphic(g, h));
        // an independent graph agrees with the brute-force verdict
        DualGraph f = random_graph(rng, n);
        const bool want = isomorphic_brute(g, f);
        CHECK(isomorphic(g, f) == want);
        (want ? positives : negatives)++;
    }
    CHECK(positives > 10);
    CHECK(negatives > 10);
}

TEST_CASE("forest detection") {
    DualGraph path;
    for (int i = 0; i < 4; ++i) path.add_vertex("", -2);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(path.every_component_is_tree());
    path.add_edge(2, 0);
    CHECK(!path.every_component_is_tree());
}

TEST_CASE("DOT output carries the vertex conventions") {
    DualGraph g;
    g.add_vertex("a", -1);
    g.add_vertex("b", -2);
    g.add_vertex("c", -5);
    g.add_edge(0, 1);
    const std::string dot = to_dot(g, "probe");
    CHECK(dot.find("graph \"probe\"") != std::string::npos);
    CHECK(dot.find("v0 [selfint=-1, tooltip=\"a\", label=\"\"]") != std::string::npos);
    CHECK(dot.find("style=filled, fillcolor=black") != std::string::npos);  // the (-2)-curve
    CHECK(dot.find("label=\"5\"") != std::string::npos);                    // the (-5)-curve
    CHECK(dot.find("v0 -- v1;") != std::string::npos);
    CHECK(dot.find("v2 --") == std::string::npos);  // isolated vertex has no edge
}
