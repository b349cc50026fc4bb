#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "arrtop/arrangement.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/monomial.hpp"
#include "arrtop/parse.hpp"
#include "arrtop/poset.hpp"
#include "arrtop/simplicial_complex.hpp"

using namespace arrtop;

namespace {

Monomial sf(std::initializer_list<int> support, int n) {
    return Monomial::squarefree(set_of(std::vector<int>(support)), n);
}

Arrangement arr_of(int n, std::initializer_list<std::vector<int>> members) {
    Arrangement a;
    a.n = n;
    for (const auto& m : members) a.subspaces.push_back(set_of(m));
    return a;
}

std::vector<std::string> generator_strings(const MonomialIdeal& ideal) {
    std::vector<std::string> out;
    for (const Monomial& g : ideal.generators) out.push_back(g.to_string());
    return out;
}

// Membership in the ideal of the union = the support hits every member;
// membership in the generated ideal = divisibility by some generator.
bool hits_every_member(index_set support, const Arrangement& a) {
    for (index_set member : a.subspaces)
        if ((support & member) == 0) return false;
    return true;
}

bool divisible_by_some_generator(index_set support, const MonomialIdeal& I) {
    for (const Monomial& g : I.generators)
        if (subset_of(g.support(), support)) return true;
    return false;
}

// Random subset family with mixed sizes, deterministic.
std::vector<index_set> random_family(std::mt19937_64& rng, int n,
                                     int max_members) {
    std::uniform_int_distribution<int> count(1, max_members);
    std::uniform_int_distribution<int> size(1, n);
    std::uniform_int_distribution<int> vertex(1, n);
    std::vector<index_set> family;
    int members = count(rng);
    for (int i = 0; i < members; ++i) {
        index_set s = 0;
        int k = size(rng);
        for (int j = 0; j < k; ++j) s = with_vertex(s, vertex(rng));
        family.push_back(s);
    }
    return family;
}

}  // namespace

TEST_CASE("monomial basics") {
    Monomial m = Monomial::from_exponents(6, {{1, 1}, {3, 2}});
    CHECK(m.to_string() == "x1*x3^2");
    CHECK(m.total_degree() == 3);
    CHECK(!m.is_squarefree());
    CHECK(m.support() == set_of({1, 3}));
    CHECK(Monomial::one(4).to_string() == "1");
    CHECK(Monomial::one(4).is_squarefree());
    CHECK(sf({2, 4, 5}, 6).to_string() == "x2*x4*x5");

    SUBCASE("divisibility") {
        CHECK(sf({1, 3}, 6).divides(sf({1, 2, 3}, 6)));
        CHECK(!sf({1, 4}, 6).divides(sf({1, 2, 3}, 6)));
        CHECK(Monomial::one(6).divides(sf({1}, 6)));
        CHECK(Monomial::from_exponents(2, {{1, 1}})
                  .divides(Monomial::from_exponents(2, {{1, 2}})));
        CHECK(!Monomial::from_exponents(2, {{1, 2}})
                   .divides(Monomial::from_exponents(2, {{1, 1}})));
    }

    SUBCASE("weighted degree") {
        std::vector<long> w = {3, 2};
        CHECK(Monomial::from_exponents(2, {{1, 2}}).weighted_degree(w) == 6);
        CHECK(Monomial::from_exponents(2, {{2, 3}}).weighted_degree(w) == 6);
    }
}

TEST_CASE("minimal generators") {
    SUBCASE("divisibility pruning") {
        MonomialIdeal I = minimal_generators({sf({1, 2}, 3), sf({1, 2, 3}, 3)});
        CHECK(generator_strings(I) == std::vector<std::string>{"x1*x2"});
    }
    SUBCASE("already minimal list is preserved in order") {
        std::vector<Monomial> gens = {sf({1, 3, 4, 6}, 6), sf({1, 3, 5}, 6),
                                      sf({2, 3, 5}, 6), sf({2, 4, 6}, 6),
                                      sf({2, 4, 5}, 6)};
        MonomialIdeal I = minimal_generators(gens);
        CHECK(generator_strings(I) ==
              std::vector<std::string>{"x1*x3*x4*x6", "x1*x3*x5", "x2*x3*x5",
                                       "x2*x4*x6", "x2*x4*x5"});
    }
    SUBCASE("empty input is the zero ideal") {
        MonomialIdeal I = minimal_generators({});
        CHECK(I.is_zero());
        CHECK(I.to_string() == "(0)");
    }
    SUBCASE("a constant generator gives the unit ideal") {
        MonomialIdeal I = minimal_generators({sf({1, 2}, 3), Monomial::one(3)});
        CHECK(I.is_unit());
        CHECK(I.to_string() == "(1)");
    }
    SUBCASE("duplicates collapse") {
        MonomialIdeal I =
            minimal_generators({sf({1, 2}, 3), sf({1, 2}, 3), sf({3}, 3)});
        CHECK(generator_strings(I) ==
              std::vector<std::string>{"x1*x2", "x3"});
    }
    SUBCASE("mixed ambient sizes are rejected") {
        CHECK_THROWS_AS(minimal_generators({sf({1}, 2), sf({1}, 3)}),
                        input_error);
    }
}

TEST_CASE("union ideal") {
    SUBCASE("origin in C^2") {
        MonomialIdeal I = union_ideal(arr_of(2, {{1, 2}}));
        CHECK(generator_strings(I) == std::vector<std::string>{"x1", "x2"});
    }
    SUBCASE("two disjoint planes in C^4") {
        MonomialIdeal I = union_ideal(arr_of(4, {{1, 2}, {3, 4}}));
        CHECK(generator_strings(I) ==
              std::vector<std::string>{"x1*x3", "x1*x4", "x2*x3", "x2*x4"});
    }
    SUBCASE("five 2-planes in C^6") {
        MonomialIdeal I = union_ideal(
            arr_of(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}));
        std::vector<std::string> got = generator_strings(I);
        std::vector<std::string> want = {"x1*x3*x4*x6", "x1*x3*x5",
                                         "x2*x3*x5", "x2*x4*x6", "x2*x4*x5"};
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
    SUBCASE("empty family is the zero ideal") {
        CHECK(union_ideal(arr_of(3, {})).is_zero());
    }
    SUBCASE("the whole space as a member gives the unit ideal") {
        Arrangement a = arr_of(3, {{1, 2}});
        a.subspaces.push_back(0);
        CHECK(union_ideal(a).is_unit());
    }
    SUBCASE("redundant members do not change the ideal") {
        MonomialIdeal minimal = union_ideal(arr_of(4, {{1, 2}, {3, 4}}));
        MonomialIdeal padded =
            union_ideal(arr_of(4, {{1, 2}, {3, 4}, {1, 2, 3}, {1, 2, 4}}));
        CHECK(generator_strings(minimal) == generator_strings(padded));
    }
}

TEST_CASE("union ideal matches brute-force membership on random families") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);  // up to 6
        Arrangement a;
        a.n = n;
        a.subspaces = random_family(rng, n, 6);
        MonomialIdeal I = union_ideal(a);
        REQUIRE(!I.is_unit());  // members are nonempty by construction
        for (index_set s = 0; s < full_set(n) + 1; ++s) {
            bool in_union_ideal = hits_every_member(s, a);
            bool in_generated = divisible_by_some_generator(s, I);
            CAPTURE(n); CAPTURE(trial); CAPTURE(s);
            REQUIRE(in_union_ideal == in_generated);
        }
    }
}

TEST_CASE("minimal transversal duality: Tr(Tr(F)) = min(F)") {
    std::mt19937_64 rng(777001);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<index_set> family = random_family(rng, n, 6);
        std::vector<index_set> tr = minimal_transversals(family, n);
        std::vector<index_set> back = minimal_transversals(tr, n);
        std::vector<index_set> expected = minimal_sets(family);
        CAPTURE(n); CAPTURE(trial);
        REQUIRE(back == expected);
    }
}

TEST_CASE("round trip: arrangement_of inverts union_ideal") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Arrangement a;
        a.n = n;
        a.subspaces = minimal_sets(random_family(rng, n, 5));
        MonomialIdeal I = union_ideal(a);
        Arrangement back = arrangement_of(I);
        REQUIRE(back.subspaces == a.subspaces);
        MonomialIdeal again = union_ideal(back);
        REQUIRE(generator_strings(again) == generator_strings(I));
    }
}

TEST_CASE("simplicial complex construction") {
    SUBCASE("facets form a maximalized antichain") {
        SimplicialComplex K = SimplicialComplex::from_facets(
            3, {set_of({1}), set_of({1, 2}), set_of({3})});
        CHECK(K.facets == std::vector<index_set>{set_of({3}), set_of({1, 2})});
    }
    SUBCASE("empty complex has only the empty face") {
        SimplicialComplex K = SimplicialComplex::empty_complex(4);
        CHECK(K.dim() == -1);
        CHECK(K.all_faces() == std::vector<index_set>{0});
    }
    SUBCASE("full simplex") {
        SimplicialComplex K = SimplicialComplex::full_simplex(3);
        CHECK(K.dim() == 2);
        CHECK(K.all_faces().size() == 8);
    }
    SUBCASE("downward closure on exhaustive small complexes") {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 60; ++trial) {
            int n = 2 + static_cast<int>(rng() % 5);
            SimplicialComplex K = SimplicialComplex::from_facets(
                n, random_family(rng, n, 5));
            for (index_set f : K.all_faces()) {
                index_set sub = f;
                while (true) {
                    REQUIRE(K.is_face(sub));
                    if (sub == 0) break;
                    sub = (sub - 1) & f;
                }
            }
            // antichain
            for (index_set a : K.facets)
                for (index_set b : K.facets)
                    if (a != b) REQUIRE(!subset_of(a, b));
        }
    }
}

TEST_CASE("stanley-reisner dictionary") {
    SUBCASE("(x1x2) gives two isolated vertices") {
        MonomialIdeal I = minimal_generators({sf({1, 2}, 2)});
        SimplicialComplex K = stanley_reisner_complex(I);
        CHECK(K.facets == std::vector<index_set>{set_of({1}), set_of({2})});
    }
    SUBCASE("path-graph edge ideal gives the 21-face independence complex") {
        MonomialIdeal I = minimal_generators(
            {sf({1, 2}, 6), sf({2, 3}, 6), sf({3, 4}, 6), sf({4, 5}, 6),
             sf({5, 6}, 6)});
        SimplicialComplex K = stanley_reisner_complex(I);
        CHECK(K.all_faces().size() == 21);
        // brute-force definition: faces contain no generator support
        size_t count = 0;
        for (index_set s = 0; s < 64; ++s) {
            bool face = true;
            for (const Monomial& g : I.generators)
                if (subset_of(g.support(), s)) face = false;
            if (face) {
                ++count;
                REQUIRE(K.is_face(s));
            } else {
                REQUIRE(!K.is_face(s));
            }
        }
        CHECK(count == 21);
    }
    SUBCASE("zero ideal gives the full simplex") {
        SimplicialComplex K = stanley_reisner_complex(MonomialIdeal::zero(3));
        CHECK(K.facets == std::vector<index_set>{full_set(3)});
    }
    SUBCASE("unit ideal is rejected with the empty-complement message") {
        CHECK_THROWS_WITH_AS(
            stanley_reisner_complex(MonomialIdeal::unit_ideal(3)),
            doctest::Contains("empty complement"), input_error);
    }
    SUBCASE("non-square-free ideal is rejected with the exact message") {
        MonomialIdeal I = minimal_generators(
            {Monomial::from_exponents(2, {{1, 2}})});
        CHECK_THROWS_WITH_AS(stanley_reisner_complex(I),
                             doctest::Contains(
                                 "invariant computation requires square-free"),
                             input_error);
    }
    SUBCASE("round trip through minimal non-faces") {
        std::mt19937_64 rng(2024);
        for (int trial = 0; trial < 80; ++trial) {
            int n = 2 + static_cast<int>(rng() % 5);
            std::vector<index_set> family = random_family(rng, n, 5);
            std::vector<Monomial> gens;
            for (index_set s : family) gens.push_back(Monomial::squarefree(s, n));
            MonomialIdeal I = minimal_generators(gens);
            if (I.is_unit() || I.is_zero()) continue;
            SimplicialComplex K = stanley_reisner_complex(I);
            MonomialIdeal back = stanley_reisner_ideal(K);
            // the round trip canonicalizes the generator order, so compare
            // the two ideals as sets
            std::vector<std::string> got = generator_strings(back);
            std::vector<std::string> want = generator_strings(I);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("intersection poset") {
    SUBCASE("single subspace") {
        IntersectionPoset P = intersection_poset(arr_of(2, {{1, 2}}));
        CHECK(P.elements == std::vector<index_set>{0, set_of({1, 2})});
    }
    SUBCASE("two atoms make a Boolean poset") {
        IntersectionPoset P = intersection_poset(arr_of(4, {{1, 2}, {3, 4}}));
        CHECK(P.elements ==
              std::vector<index_set>{0, set_of({1, 2}), set_of({3, 4}),
                                     set_of({1, 2, 3, 4})});
    }
    SUBCASE("path arrangement poset matches brute-force union closure") {
        Arrangement a = arr_of(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
        IntersectionPoset P = intersection_poset(a);
        std::set<index_set> brute;
        for (unsigned mask = 1; mask < 32; ++mask) {
            index_set u = 0;
            for (int i = 0; i < 5; ++i)
                if (mask & (1u << i)) u |= a.subspaces[i];
            brute.insert(u);
        }
        CHECK(P.elements.size() == brute.size() + 1);  // plus the bottom
        for (index_set e : P.elements)
            if (e != 0) CHECK(brute.count(e) == 1);
        CHECK(P.elements.front() == 0);
    }
    SUBCASE("join-closed") {
        std::mt19937_64 rng(5150);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 2 + static_cast<int>(rng() % 4);
            Arrangement a;
            a.n = n;
            a.subspaces = random_family(rng, n, 4);
            IntersectionPoset P = intersection_poset(a);
            for (index_set x : P.elements)
                for (index_set y : P.elements)
                    REQUIRE(P.contains(x | y));
        }
    }
    SUBCASE("the whole space cannot be a member") {
        Arrangement a = arr_of(2, {{1}});
        a.subspaces.push_back(0);
        CHECK_THROWS_AS(intersection_poset(a), input_error);
    }
}

TEST_CASE("order complex") {
    SUBCASE("an atom has the empty order complex") {
        IntersectionPoset P = intersection_poset(arr_of(2, {{1, 2}}));
        SimplicialComplex D = order_complex(P, set_of({1, 2}));
        CHECK(D.dim() == -1);
        CHECK(D.all_faces() == std::vector<index_set>{0});
    }
    SUBCASE("Boolean top gives two isolated points") {
        IntersectionPoset P = intersection_poset(arr_of(4, {{1, 2}, {3, 4}}));
        SimplicialComplex D = order_complex(P, full_set(4));
        CHECK(D.facets.size() == 2);
        CHECK(D.dim() == 0);
    }
    SUBCASE("x must be above the bottom and in the poset") {
        IntersectionPoset P = intersection_poset(arr_of(2, {{1, 2}}));
        CHECK_THROWS_AS(order_complex(P, 0), input_error);
        CHECK_THROWS_AS(order_complex(P, set_of({1})), input_error);
    }
    SUBCASE("chains in a three-level poset") {
        // {1} < {1,2}, {1} < {1,3}, both < {1,2,3}; interval below the top
        // has the two mid elements adjacent to the atom: a path, dim 1
        IntersectionPoset P =
            intersection_poset(arr_of(3, {{1}, {1, 2}, {1, 3}}));
        SimplicialComplex D = order_complex(P, full_set(3));
        CHECK(D.dim() == 1);
        CHECK(D.facets.size() == 2);  // {atom, mid1}, {atom, mid2}
    }
}
