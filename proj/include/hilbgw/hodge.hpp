/**
 * @file hodge.hpp
 * @brief Top-degree Hodge integrals on M_{1,1} and M_2, derived from Mumford's
 *        Grothendieck-Riemann-Roch formula and psi intersection numbers.
 *
 * Mumford's formula for the Chern character of the Hodge bundle reads
 *   ch_{2l-1}(E) = B_{2l}/(2l)! [ kappa_{2l-1} - sum_i psi_i^{2l-1}
 *                  + sum_{one-edge graphs G} (1/|Aut G|) iota_G* sum_{a=0}^{2l-2} (-1)^a psi'^a psi''^{2l-2-a} ],
 * and ch_{2l}(E) = 0 for l >= 1. A single kappa integrates as
 * int_{M_{g,n}} kappa_b = int_{M_{g,n+1}} psi_{n+1}^{b+1}.
 * In genus 2, lambda_3 = 0 and ch_2 = 0 give lambda_1^2 = 2 lambda_2 and
 * ch_3 = -lambda_1^3 / 12, hence lambda_1^3 = -12 ch_3 and lambda_1 lambda_2 = lambda_1^3 / 2.
 */
#pragma once

#include "bernoulli.hpp"
#include "stable_graph.hpp"
#include "wk.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hilbgw {

/** @brief int_{M_{g,n}} ch_{2l-1}(E) where 2l - 1 = 3g - 3 + n. */
inline Rational hodge_ch_top_integral(int g, int n) {
    const int dim = 3 * g - 3 + n;
    if (dim < 1 || dim % 2 == 0) throw std::invalid_argument("hodge_ch_top_integral: dimension must be odd and positive");
    const int l = (dim + 1) / 2;
    Rational bracket(0);
    // kappa_{2l-1}
    std::vector<int> kap(static_cast<std::size_t>(n), 0);
    kap.push_back(2 * l);
    bracket += psi_integral(g, kap);
    // - sum_i psi_i^{2l-1}
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        a[static_cast<std::size_t>(i)] = 2 * l - 1;
        bracket -= psi_integral(g, a);
    }
    // boundary: one-edge graphs
    for (const auto& G : enumerate_stable_graphs(g, n)) {
        if (G.edges() != 1) continue;
        auto [u, v] = G.edge_list().front();
        Rational s(0);
        for (int a = 0; a <= 2 * l - 2; ++a) {
            int b = 2 * l - 2 - a;
            Rational term;
            if (u == v) {
                std::vector<int> e;
                for (int x : G.leg_vertex) (void)x, e.push_back(0);
                e.push_back(a);
                e.push_back(b);
                term = psi_integral(G.genus[static_cast<std::size_t>(u)], e);
            } else {
                std::vector<int> eu, ev;
                for (int x : G.leg_vertex) (x == u ? eu : ev).push_back(0);
                eu.push_back(a);
                ev.push_back(b);
                term = psi_integral(G.genus[static_cast<std::size_t>(u)], eu) * psi_integral(G.genus[static_cast<std::size_t>(v)], ev);
            }
            s += (a % 2 ? -term : term);
        }
        bracket += s / Rational(G.automorphisms);
    }
    return bernoulli_number(2 * l) / factorial(2 * l) * bracket;
}

/** @brief Lambda-monomial integrals keyed by exponent vectors (e_1, ..., e_g) of lambda_1^{e_1} ... lambda_g^{e_g}. */
struct HodgeTable {
    std::map<int, std::map<std::vector<int>, Rational>> values;

    Rational get(int g, const std::vector<int>& exps) const {
        auto it = values.find(g);
        if (it == values.end()) throw std::invalid_argument("HodgeTable: unsupported genus");
        auto jt = it->second.find(exps);
        if (jt == it->second.end()) return Rational(0);
        return jt->second;
    }
};

/**
 * @brief Derive the genus 1 and 2 tables: int_{M_{1,1}} lambda_1, int_{M_2} lambda_1^3, lambda_1 lambda_2.
 */
inline HodgeTable derive_hodge_table() {
    HodgeTable t;
    t.values[1][{1}] = hodge_ch_top_integral(1, 1);
    Rational ch3 = hodge_ch_top_integral(2, 0);
    Rational l13 = Rational(-12) * ch3;
    t.values[2][{3, 0}] = l13;
    t.values[2][{1, 1}] = l13 / Rational(2);
    return t;
}

}  // namespace hilbgw
