/**
 * @file stable_graph.hpp
 * @brief Stable graphs (dual graphs of stable curves) with labelled legs,
 *        enumerated up to isomorphism together with their automorphism counts.
 *
 * A graph has vertices with genera, legs 1..r attached to vertices, and an
 * edge-multiplicity matrix m (m_uu counts loops at u). Isomorphism classes
 * are found by minimizing the encoding over all vertex relabellings, which is
 * adequate for the handful of vertices occurring at genus <= 2. The
 * automorphism count includes permutations of parallel edges and flips of
 * loops:
 *   |Aut| = #{vertex permutations preserving the graph} * prod_{u<v} m_uv! * prod_u m_uu! 2^{m_uu}.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hilbgw {

struct StableGraph {
    std::vector<int> genus;               ///< genus of each vertex
    std::vector<int> leg_vertex;          ///< leg i (0-based) sits at vertex leg_vertex[i]
    std::vector<std::vector<int>> mult;   ///< symmetric edge multiplicities, loops on the diagonal
    long automorphisms = 1;

    int vertices() const { return static_cast<int>(genus.size()); }
    int edges() const {
        int e = 0;
        for (int u = 0; u < vertices(); ++u)
            for (int v = u; v < vertices(); ++v) e += mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        return e;
    }
    /** @brief Number of half-edges and legs at vertex u. */
    int valence(int u) const {
        int val = 0;
        for (int x : leg_vertex) val += (x == u);
        for (int v = 0; v < vertices(); ++v) val += (u == v ? 2 : 1) * mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        return val;
    }
    /** @brief Total genus sum g(v) + h^1. */
    int total_genus() const {
        return std::accumulate(genus.begin(), genus.end(), 0) + edges() - vertices() + 1;
    }
    /** @brief Edges as (u, v) pairs with u <= v, each repeated by multiplicity. */
    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertices(); ++u)
            for (int v = u; v < vertices(); ++v)
                for (int k = 0; k < mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; ++k) out.emplace_back(u, v);
        return out;
    }
    std::string str() const {
        std::string s = "genus=[";
        for (int i = 0; i < vertices(); ++i) s += (i ? "," : "") + std::to_string(genus[static_cast<std::size_t>(i)]);
        s += "] legs=[";
        for (std::size_t i = 0; i < leg_vertex.size(); ++i) s += (i ? "," : "") + std::to_string(leg_vertex[i]);
        s += "] edges=[";
        bool first = true;
        for (auto [u, v] : edge_list()) {
            s += (first ? "" : ",") + std::string("(") + std::to_string(u) + "," + std::to_string(v) + ")";
            first = false;
        }
        return s + "] aut=" + std::to_string(automorphisms);
    }
};

namespace detail {

using GraphCode = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

inline GraphCode encode(const StableGraph& G, const std::vector<int>& perm) {
    // perm maps old vertex -> new vertex
    const int V = G.vertices();
    std::vector<int> gen(static_cast<std::size_t>(V)), legs, adj(static_cast<std::size_t>(V * V));
    for (int u = 0; u < V; ++u) gen[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = G.genus[static_cast<std::size_t>(u)];
    for (int x : G.leg_vertex) legs.push_back(perm[static_cast<std::size_t>(x)]);
    for (int u = 0; u < V; ++u)
        for (int v = 0; v < V; ++v)
            adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)] * V + perm[static_cast<std::size_t>(v)])] =
                G.mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    return {gen, legs, adj};
}

inline bool connected(const StableGraph& G) {
    const int V = G.vertices();
    std::vector<int> seen(static_cast<std::size_t>(V), 0), stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < V; ++v)
            if (!seen[static_cast<std::size_t>(v)] && G.mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

inline long factorial_long(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

/** @brief All stable graphs of genus g with r legs up to isomorphism; supports g <= 2. */
inline std::vector<StableGraph> enumerate_stable_graphs(int g, int r) {
    if (g < 0 || r < 0 || 2 * g - 2 + r <= 0) throw std::invalid_argument("enumerate_stable_graphs: unstable (g, r)");
    if (g > 2) throw std::invalid_argument("enumerate_stable_graphs: genus above 2 is not supported");
    std::vector<StableGraph> out;
    std::vector<detail::GraphCode> seen;
    const int Vmax = 2 * g - 2 + r;
    for (int V = 1; V <= Vmax; ++V) {
        // Genus assignments, leg assignments and multiplicities by plain odometers.
        std::vector<int> gen(static_cast<std::size_t>(V), 0);
        auto next_gen = [&]() {
            for (int i = 0; i < V; ++i) {
                if (++gen[static_cast<std::size_t>(i)] <= g) return true;
                gen[static_cast<std::size_t>(i)] = 0;
            }
            return false;
        };
        do {
            int sg = std::accumulate(gen.begin(), gen.end(), 0);
            int E = g - sg + V - 1;
            if (E < V - 1) continue;
            std::vector<int> legs(static_cast<std::size_t>(r), 0);
            auto next_legs = [&]() {
                for (int i = 0; i < r; ++i) {
                    if (++legs[static_cast<std::size_t>(i)] < V) return true;
                    legs[static_cast<std::size_t>(i)] = 0;
                }
                return false;
            };
            do {
                std::vector<std::pair<int, int>> slots;
                for (int u = 0; u < V; ++u)
                    for (int v = u; v < V; ++v) slots.emplace_back(u, v);
                std::vector<int> m(slots.size(), 0);
                auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
                    if (idx == slots.size()) {
                        if (left != 0) return;
                        StableGraph G;
                        G.genus = gen;
                        G.leg_vertex = legs;
                        G.mult.assign(static_cast<std::size_t>(V), std::vector<int>(static_cast<std::size_t>(V), 0));
                        for (std::size_t s = 0; s < slots.size(); ++s) {
                            auto [u, v] = slots[s];
                            G.mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = m[s];
                            G.mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = m[s];
                        }
                        if (!detail::connected(G)) return;
                        for (int u = 0; u < V; ++u)
                            if (2 * G.genus[static_cast<std::size_t>(u)] - 2 + G.valence(u) <= 0) return;
                        std::vector<int> perm(static_cast<std::size_t>(V));
                        std::iota(perm.begin(), perm.end(), 0);
                        auto ident = detail::encode(G, perm);
                        auto best = ident;
                        long fixing = 0;
                        do {
                            auto c = detail::encode(G, perm);
                            if (c < best) best = c;
                            if (c == ident) ++fixing;
                        } while (std::next_permutation(perm.begin(), perm.end()));
                        if (std::find(seen.begin(), seen.end(), best) != seen.end()) return;
                        seen.push_back(best);
                        long aut = fixing;
                        for (int u = 0; u < V; ++u)
                            for (int v = u; v < V; ++v) {
                                int k = G.mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                                aut *= detail::factorial_long(k);
                                if (u == v) aut *= (1L << k);
                            }
                        G.automorphisms = aut;
                        out.push_back(std::move(G));
                        return;
                    }
                    for (int k = 0; k <= left; ++k) {
                        m[idx] = k;
                        self(self, idx + 1, left - k);
                    }
                    m[idx] = 0;
                };
                rec(rec, 0, E);
            } while (next_legs());
        } while (next_gen());
    }
    return out;
}

}  // namespace hilbgw
