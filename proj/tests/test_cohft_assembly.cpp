/**
 * @file test_cohft_assembly.cpp
 * @brief Stable graphs, psi and Hodge integrals, the psi-integral cache, the
 *        degree-0 oracle and the graph-sum reconstruction.
 */
#include "hilbgw/cohft.hpp"
#include "hilbgw/hodge_io.hpp"
#include "hilbgw/wk_cache.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <string>

using namespace hilbgw;

namespace {

const Scalar t1 = Scalar::t1();
const Scalar t2 = Scalar::t2();

std::vector<long> automorphism_list(int g, int r) {
    std::vector<long> out;
    for (const auto& G : enumerate_stable_graphs(g, r)) out.push_back(G.automorphisms);
    std::sort(out.begin(), out.end());
    return out;
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = cache_directory() / "unit" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(StableGraphs, CountsAndAutomorphisms) {
    EXPECT_EQ(automorphism_list(0, 3), (std::vector<long>{1}));
    EXPECT_EQ(automorphism_list(1, 1), (std::vector<long>{1, 2}));
    EXPECT_EQ(automorphism_list(2, 0), (std::vector<long>{1, 2, 2, 2, 8, 8, 12}));
    EXPECT_EQ(enumerate_stable_graphs(0, 4).size(), 4u);
    EXPECT_EQ(enumerate_stable_graphs(1, 2).size(), 5u);
    for (const auto& G : enumerate_stable_graphs(2, 1)) {
        EXPECT_EQ(G.total_genus(), 2) << G.str();
        for (int v = 0; v < G.vertices(); ++v)
            EXPECT_GT(2 * G.genus[static_cast<std::size_t>(v)] - 2 + G.valence(v), 0) << G.str();
    }
    EXPECT_THROW(enumerate_stable_graphs(3, 0), std::invalid_argument);
    EXPECT_THROW(enumerate_stable_graphs(0, 2), std::invalid_argument);
}

TEST(PsiIntegrals, KnownValues) {
    EXPECT_EQ(psi_integral(0, {0, 0, 0}), Rational(1));
    EXPECT_EQ(psi_integral(0, {1, 0, 0, 0}), Rational(1));
    EXPECT_EQ(psi_integral(1, {1}), Rational(1, 24));
    EXPECT_EQ(psi_integral(2, {4}), Rational(1, 1152));
    EXPECT_EQ(psi_integral(2, {3, 2}), Rational(29, 5760));
    EXPECT_EQ(psi_integral(3, {7}), Rational(1, 82944));
    EXPECT_EQ(psi_integral(1, {2}), Rational(0));
}

TEST(PsiIntegrals, StringAndDilaton) {
    PsiIntegralTable t;
    EXPECT_TRUE(string_residual(t, 1, {2, 0}).is_zero());
    EXPECT_TRUE(dilaton_residual(t, 2, {3, 2}).is_zero());
    EXPECT_TRUE(dilaton_residual(t, 1, {1}).is_zero());
}

TEST(HodgeIntegrals, DerivedValues) {
    auto h = derive_hodge_table();
    EXPECT_EQ(h.get(1, {1}), Rational(1, 24));
    EXPECT_EQ(h.get(2, {3, 0}), Rational(1, 2880));
    EXPECT_EQ(h.get(2, {1, 1}), Rational(1, 5760));
    EXPECT_EQ(h.get(2, {0, 0}), Rational(0));
    EXPECT_THROW(h.get(3, {0, 0, 0}), std::invalid_argument);
}

TEST(HodgeIntegrals, FixtureMatchesDerivation) {
    std::ifstream in(HILBGW_HODGE_FIXTURE);
    ASSERT_TRUE(in.good()) << HILBGW_HODGE_FIXTURE;
    nlohmann::json doc;
    in >> doc;
    EXPECT_EQ(hodge_table_from_json(doc).values, derive_hodge_table().values);
    EXPECT_EQ(hodge_table_to_json(derive_hodge_table()), doc);
}

TEST(PsiCache, RoundTrip) {
    PsiIntegralTable t;
    t.fill(2, 4);
    auto path = scratch_dir("round_trip") / "wk_cache.json";
    save_psi_cache(t, path);
    PsiIntegralTable u;
    std::size_t loaded = load_psi_cache(u, path);
    EXPECT_GT(loaded, 0u);
    EXPECT_EQ(u.get(2, {4}), Rational(1, 1152));
    EXPECT_EQ(psi_table_to_json(u)["entries"], psi_table_to_json(t)["entries"]);
    std::ifstream in(path);
    nlohmann::json doc;
    in >> doc;
    for (const auto& e : doc["entries"]) {
        EXPECT_TRUE(e.contains("g"));
        EXPECT_TRUE(e.contains("exponents"));
        EXPECT_NE(e["value"].get<std::string>().find('/'), std::string::npos);
    }
    EXPECT_EQ(load_psi_cache(u, path.parent_path() / "absent.json"), 0u);
}

TEST(PsiCache, CorruptionDetected) {
    PsiIntegralTable t;
    t.fill(1, 3);
    auto path = scratch_dir("corrupt") / "wk_cache.json";
    save_psi_cache(t, path);
    nlohmann::json doc;
    {
        std::ifstream in(path);
        in >> doc;
    }
    doc["entries"][0]["value"] = "12345/1";
    {
        std::ofstream out(path);
        out << doc.dump(1);
    }
    PsiIntegralTable u;
    EXPECT_THROW(load_psi_cache(u, path), CacheCorrupted);
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    EXPECT_THROW(load_psi_cache(u, path), CacheCorrupted);
}

TEST(DegreeZero, OracleAtLevelOne) {
    auto h = derive_hodge_table();
    EXPECT_EQ(degree0_oracle(1, {Partition{1}}, 1, h), Scalar(Rational(-1, 24)) * (Scalar(1) / t1 + Scalar(1) / t2));
    EXPECT_THROW(degree0_oracle(1, {}, 1, h), std::invalid_argument);
    EXPECT_THROW(degree0_oracle(2, {Partition{1}}, 1, h), std::invalid_argument);
}

TEST(DegreeZero, ReconstructionMatchesOracle) {
    auto h = derive_hodge_table();
    for (int n = 1; n <= 2; ++n) {
        auto E = eigen_decompose(n, 0);
        auto R = compute_R(E, 3);
        for (const auto& mu : E.basis)
            EXPECT_EQ(reconstruct_invariant(1, {mu}, E, R)[0], degree0_oracle(1, {mu}, n, h)) << mu.str();
        EXPECT_EQ(reconstruct_invariant(2, {}, E, R)[0], degree0_oracle(2, {}, n, h)) << "n=" << n;
    }
}

TEST(Reconstruction, TranslationStartsAtSecondOrder) {
    auto E = eigen_decompose(2, 3);
    auto R = compute_R(E, 3);
    Reconstruction<Scalar> rec(E, R);
    for (int b : {0, 1})
        for (const auto& x : rec.translation(b)) EXPECT_TRUE(x.is_zero());
    bool nonzero = false;
    for (const auto& x : rec.translation(2)) nonzero = nonzero || !x.is_zero();
    EXPECT_TRUE(nonzero);
}

TEST(Reconstruction, GenusZeroThreePointIsTqft) {
    auto E = eigen_decompose(2, 4);
    auto R = compute_R(E, 2);
    for (const auto& a : E.basis)
        for (const auto& b : E.basis) {
            auto lhs = reconstruct_invariant(0, {a, Partition{2}, b}, E, R);
            EXPECT_EQ(lhs, three_point_series(a, b, 4)) << a.str() << " " << b.str();
        }
}

TEST(Reconstruction, GenusOneClosedFormAtLevelTwo) {
    auto E = eigen_decompose(2, 5);
    auto R = compute_R(E, 3);
    auto s = reconstruct_invariant(1, {Partition{2}}, E, R);
    Scalar c = Scalar(Rational(-1, 24)) * (t1 + t2) * (t1 + t2) / (t1 * t2);
    EXPECT_EQ(s[0], c);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(s[k], Scalar(2) * c) << "q^" << k;
}

TEST(Reconstruction, DivisorEquationWithSignedClass) {
    auto E = eigen_decompose(2, 6);
    auto R = compute_R(E, 3);
    auto one = reconstruct_invariant(1, {Partition{2}}, E, R);
    auto two = reconstruct_invariant(1, {Partition{2}, Partition{2}}, E, R);
    // D = -|2>, so <(2), (2)>_{1,d} = -d <(2)>_{1,d}.
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(two[d], Scalar(-d) * one[d]) << "q^" << d;
}

TEST(Reconstruction, ThreadCountDoesNotChangeResult) {
    auto E = eigen_decompose(2, 3);
    auto R = compute_R(E, 4);
    auto a = reconstruct_invariant(2, {Partition{2}}, E, R, ActionConvention::Inverse, 1);
    auto b = reconstruct_invariant(2, {Partition{2}}, E, R, ActionConvention::Inverse, 3);
    EXPECT_EQ(a, b);
    EXPECT_THROW(reconstruct_invariant(0, {Partition{2}}, E, R), std::invalid_argument);
}
