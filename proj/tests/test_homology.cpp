#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <vector>

#include "arrtop/chain_complex.hpp"
#include "arrtop/graded_group.hpp"
#include "arrtop/simplicial_complex.hpp"

using namespace arrtop;

namespace {

SimplicialComplex complex_of(int n,
                             std::initializer_list<std::vector<int>> facets) {
    std::vector<index_set> fs;
    for (const auto& f : facets) fs.push_back(set_of(f));
    return SimplicialComplex::from_facets(n, std::move(fs));
}

GradedAbelianGroup group_of(
    std::initializer_list<std::pair<int, long>> ranks,
    std::initializer_list<std::pair<int, long>> torsion = {}) {
    GradedAbelianGroup g;
    for (auto [deg, r] : ranks) g.add_rank(deg, r);
    for (auto [deg, t] : torsion) g.add_torsion(deg, {mpz_class(t)});
    return g;
}

SimplicialComplex projective_plane_6() {
    return complex_of(6, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 6},
                          {1, 5, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 6},
                          {3, 4, 5}, {4, 5, 6}});
}

std::vector<index_set> random_facets(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<int> size(1, n);
    std::uniform_int_distribution<int> vertex(1, n);
    std::vector<index_set> fs;
    int members = count(rng);
    for (int i = 0; i < members; ++i) {
        index_set s = 0;
        int k = size(rng);
        for (int j = 0; j < k; ++j) s = with_vertex(s, vertex(rng));
        fs.push_back(s);
    }
    return fs;
}

}  // namespace

TEST_CASE("reduced homology of pinned spaces") {
    SUBCASE("two points") {
        CHECK(reduced_homology(complex_of(2, {{1}, {2}})) ==
              group_of({{0, 1}}));
    }
    SUBCASE("the empty complex carries degree -1") {
        GradedAbelianGroup h = reduced_homology(SimplicialComplex::empty_complex(3));
        CHECK(h == group_of({{-1, 1}}));
        CHECK(h.min_degree() == -1);
    }
    SUBCASE("a triangle boundary is a circle") {
        CHECK(reduced_homology(complex_of(3, {{1, 2}, {2, 3}, {1, 3}})) ==
              group_of({{1, 1}}));
    }
    SUBCASE("a tetrahedron boundary is a 2-sphere") {
        CHECK(reduced_homology(
                  complex_of(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})) ==
              group_of({{2, 1}}));
    }
    SUBCASE("a full simplex is acyclic") {
        CHECK(reduced_homology(SimplicialComplex::full_simplex(5)).is_trivial());
    }
    SUBCASE("point plus circle") {
        CHECK(reduced_homology(complex_of(4, {{4}, {1, 2}, {2, 3}, {1, 3}})) ==
              group_of({{0, 1}, {1, 1}}));
    }
    SUBCASE("two disjoint edges") {
        CHECK(reduced_homology(complex_of(4, {{1, 2}, {3, 4}})) ==
              group_of({{0, 1}}));
    }
}

TEST_CASE("projective plane homology has 2-torsion") {
    SimplicialComplex K = projective_plane_6();
    GradedAbelianGroup h = reduced_homology(K);
    CHECK(h == group_of({}, {{1, 2}}));
    CHECK(h.to_text() == "H_1 = Z/2");
    CHECK(h.betti() == std::vector<long>{0, 0});

    // Cross-check over F_2, where both H_1 and H_2 see the torsion class.
    ChainComplex C = simplicial_chain_complex(K, true);
    C.verify_square_zero();
    std::map<int, long> mod2 = C.homology_ranks_mod_p(2);
    CHECK(mod2 == std::map<int, long>{{1, 1}, {2, 1}});
    // Over F_3 the plane looks acyclic.
    CHECK(C.homology_ranks_mod_p(3).empty());
}

TEST_CASE("homology is invariant under relabeling") {
    std::mt19937_64 rng(60221);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        SimplicialComplex K =
            SimplicialComplex::from_facets(n, random_facets(rng, n));
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<index_set> relabeled;
        for (index_set f : K.facets) {
            index_set g = 0;
            for (int v : vertices_of(f))
                g = with_vertex(g, perm[static_cast<size_t>(v - 1)]);
            relabeled.push_back(g);
        }
        SimplicialComplex K2 = SimplicialComplex::from_facets(n, relabeled);
        CAPTURE(trial); CAPTURE(n);
        REQUIRE(reduced_homology(K) == reduced_homology(K2));
    }
}

TEST_CASE("cones are acyclic") {
    std::mt19937_64 rng(112358);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<index_set> facets = random_facets(rng, n);
        for (index_set& f : facets) f = with_vertex(f, n + 1);
        SimplicialComplex cone = SimplicialComplex::from_facets(n + 1, facets);
        CAPTURE(trial); CAPTURE(n);
        REQUIRE(reduced_homology(cone).is_trivial());
    }
}

TEST_CASE("chain complexes square to zero and balance Euler counts") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        SimplicialComplex K =
            SimplicialComplex::from_facets(n, random_facets(rng, n));
        ChainComplex C = simplicial_chain_complex(K, true);
        C.verify_square_zero();

        long chain_euler = 0;
        for (size_t i = 0; i < C.slots(); ++i) {
            int deg = C.degree_of_slot(i);
            chain_euler += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(C.dims[i]);
        }
        long homology_euler = 0;
        GradedAbelianGroup h = reduced_homology(K);
        for (const auto& [deg, summand] : h.by_degree())
            homology_euler += (((deg % 2) + 2) % 2 == 0 ? 1 : -1) * summand.rank;
        CAPTURE(trial); CAPTURE(n);
        REQUIRE(chain_euler == homology_euler);
    }
}

TEST_CASE("labels track the faces of each degree") {
    SimplicialComplex K = complex_of(3, {{1, 2}, {3}});
    ChainComplex C = simplicial_chain_complex(K, true);
    REQUIRE(C.slots() == 3);
    CHECK(C.lowest_degree == -1);
    CHECK(C.labels[0] == std::vector<std::string>{"{}"});
    CHECK(C.labels[1] == std::vector<std::string>{"{1}", "{2}", "{3}"});
    CHECK(C.labels[2] == std::vector<std::string>{"{1,2}"});
}

TEST_CASE("full subcomplexes") {
    SimplicialComplex K = complex_of(3, {{1, 2}, {2, 3}, {1, 3}});
    SUBCASE("restriction to an edge keeps the edge") {
        SimplicialComplex sub = K.full_subcomplex(set_of({1, 2}));
        CHECK(sub.facets == std::vector<index_set>{set_of({1, 2})});
    }
    SUBCASE("restriction to the empty set is the empty complex") {
        SimplicialComplex sub = K.full_subcomplex(0);
        CHECK(sub.dim() == -1);
    }
    SUBCASE("restriction to all vertices is the complex itself") {
        CHECK(K.full_subcomplex(full_set(3)) == K);
    }
    SUBCASE("vertices outside the complex do not appear") {
        SimplicialComplex L = complex_of(4, {{1, 2}});
        SimplicialComplex sub = L.full_subcomplex(set_of({1, 4}));
        CHECK(sub.facets == std::vector<index_set>{set_of({1})});
    }
}
