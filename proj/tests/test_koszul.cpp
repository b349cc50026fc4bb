#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "arrtop/complement.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/koszul.hpp"
#include "arrtop/monomial.hpp"
#include "arrtop/simplicial_complex.hpp"

using namespace arrtop;

namespace {

MonomialIdeal ideal_of(int n,
                       std::initializer_list<std::vector<int>> supports) {
    std::vector<Monomial> gens;
    for (const auto& s : supports)
        gens.push_back(Monomial::squarefree(set_of(s), n));
    return minimal_generators(gens);
}

KoszulModel sphere_model() {  // two points; the complement is S^3
    return KoszulModel::build(complement_model_complex(ideal_of(2, {{1}, {2}})));
}

KoszulModel product_model() {  // 4-cycle; the complement is S^3 x S^3
    return KoszulModel::build(complement_model_complex(
        ideal_of(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}})));
}

KoszulModel chain_model() {  // the five-plane chain in C^6
    return KoszulModel::build(complement_model_complex(
        ideal_of(6, {{1, 3, 4, 6}, {1, 3, 5}, {2, 3, 5}, {2, 4, 6},
                     {2, 4, 5}})));
}

QVec unit_vec(size_t dim, size_t at) {
    QVec v(dim, 0);
    v[at] = 1;
    return v;
}

bool is_zero(const QVec& v) {
    for (const mpq_class& q : v)
        if (q != 0) return false;
    return true;
}

MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> vertex(1, n);
    std::vector<Monomial> gens;
    int members = count(rng);
    for (int i = 0; i < members; ++i) {
        index_set s = 0;
        int k = 1 + static_cast<int>(rng() % n);
        for (int j = 0; j < k; ++j) s = with_vertex(s, vertex(rng));
        gens.push_back(Monomial::squarefree(s, n));
    }
    return minimal_generators(gens);
}

}  // namespace

TEST_CASE("the two-point model is the minimal S^3 algebra") {
    KoszulModel m = sphere_model();
    CHECK(m.basis_size() == 8);
    CHECK(m.top_degree() == 3);
    CHECK(m.slice_dim(0) == 1);
    CHECK(m.slice_dim(1) == 2);  // u1, u2
    CHECK(m.slice_dim(2) == 3);  // u{1,2}, v1, v2
    CHECK(m.slice_dim(3) == 2);  // u1 v2, u2 v1

    // cohomology: one class in degree 0, one in degree 3, nothing else
    CHECK(cohomology_classes(m, 0).size() == 1);
    CHECK(cohomology_classes(m, 1).empty());
    CHECK(cohomology_classes(m, 2).empty());
    CHECK(cohomology_classes(m, 3).size() == 1);

    SUBCASE("labels and rendering") {
        CHECK(m.element(0).label == "1");
        CHECK(m.describe(3, QVec{1, -2}) == "u{1}v{2} - 2 u{2}v{1}");
        CHECK(m.describe(2, QVec{0, 0, 0}) == "0");
    }
    SUBCASE("the differential pairs u-letters with v-letters") {
        // d(u1) = v1, d(u2) = v2, d(u{1,2}) = v1 u2 - u1 v2 (not a face times
        // anything here, both survive since {1} and {2} are faces)
        QVec du1 = m.apply_d(1, QVec{1, 0});
        CHECK(!is_zero(du1));
        // d^2 = 0 across all degrees, via the public interface
        for (int deg = 0; deg < m.top_degree(); ++deg) {
            for (const QVec& col : m.differential_columns(deg))
                REQUIRE(is_zero(m.apply_d(deg + 1, col)));
        }
    }
}

TEST_CASE("a cone point kills everything above degree 0") {
    // full simplex on one vertex: the complement of the empty arrangement in C
    KoszulModel m = KoszulModel::build(SimplicialComplex::full_simplex(1));
    CHECK(m.basis_size() == 3);  // 1, u1, v1
    CHECK(cohomology_classes(m, 0).size() == 1);
    CHECK(cohomology_classes(m, 1).empty());
    CHECK(cohomology_classes(m, 2).empty());
}

TEST_CASE("model cohomology matches the subset-sum Betti numbers") {
    SUBCASE("five-plane chain, pinned") {
        KoszulModel m = chain_model();
        CHECK(m.basis_size() == 448);
        CHECK(m.top_degree() == 9);
        std::vector<size_t> ranks;
        for (int deg = 0; deg <= m.top_degree(); ++deg)
            ranks.push_back(cohomology_classes(m, deg).size());
        CHECK(ranks ==
              std::vector<size_t>{1, 0, 0, 5, 4, 0, 3, 4, 1, 0});
    }
    SUBCASE("random ideals") {
        std::mt19937_64 rng(909090);
        int done = 0;
        for (int trial = 0; done < 15; ++trial) {
            REQUIRE(trial < 200);
            int n = 2 + static_cast<int>(rng() % 3);  // up to 4
            MonomialIdeal I = random_squarefree_ideal(rng, n);
            if (I.is_unit()) continue;
            KoszulModel m = KoszulModel::build(complement_model_complex(I));
            GradedAbelianGroup h = hochster_homology(I);
            CAPTURE(trial); CAPTURE(n);
            for (int deg = 0; deg <= m.top_degree(); ++deg)
                REQUIRE(cohomology_classes(m, deg).size() ==
                        static_cast<size_t>(h.rank(deg)));
            ++done;
        }
    }
}

TEST_CASE("cohomology class vectors are primitive integer vectors") {
    KoszulModel m = chain_model();
    for (int deg : {3, 4, 6, 7, 8}) {
        for (const QVec& cls : cohomology_classes(m, deg)) {
            mpz_class gcd = 0;
            for (const mpq_class& q : cls) {
                REQUIRE(q.get_den() == 1);
                mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(),
                        q.get_num().get_mpz_t());
            }
            REQUIRE(gcd == 1);
        }
    }
}

TEST_CASE("products are graded commutative") {
    KoszulModel m = product_model();
    std::mt19937_64 rng(1618);
    for (int trial = 0; trial < 200; ++trial) {
        int p = 1 + static_cast<int>(rng() % m.top_degree());
        int q = 1 + static_cast<int>(rng() % m.top_degree());
        if (m.slice_dim(p) == 0 || m.slice_dim(q) == 0) continue;
        QVec a = unit_vec(m.slice_dim(p), rng() % m.slice_dim(p));
        QVec b = unit_vec(m.slice_dim(q), rng() % m.slice_dim(q));
        QVec ab = m.multiply(p, a, q, b);
        QVec ba = m.multiply(q, b, p, a);
        if ((p * q) % 2 != 0)
            for (mpq_class& x : ba) x = -x;
        CAPTURE(trial); CAPTURE(p); CAPTURE(q);
        REQUIRE(ab == ba);
    }
}

TEST_CASE("basis cap refusal") {
    CHECK_THROWS_WITH_AS(
        KoszulModel::build(SimplicialComplex::full_simplex(4), 50),
        doctest::Contains("exceeds cap"), input_error);
}

TEST_CASE("triple products on the sphere are trivial") {
    KoszulModel m = sphere_model();
    QVec a = cohomology_classes(m, 3)[0];
    MasseyResult r = massey_triple(m, 3, a, 3, a, 3, a);
    CHECK(r.trivial);
    CHECK(is_zero(r.representative));
}

TEST_CASE("massey inputs are validated") {
    KoszulModel m = product_model();
    QVec a = cohomology_classes(m, 3)[0];
    QVec b = cohomology_classes(m, 3)[1];

    SUBCASE("wrong vector length") {
        CHECK_THROWS_WITH_AS(massey_triple(m, 3, QVec{1}, 3, a, 3, b),
                             doctest::Contains("does not match its degree"),
                             input_error);
    }
    SUBCASE("non-cocycle input") {
        // u1 alone is not a cocycle: d(u1) = v1
        QVec u1(m.slice_dim(1), 0);
        u1[0] = 1;
        CHECK_THROWS_WITH_AS(massey_triple(m, 1, u1, 3, a, 3, b),
                             doctest::Contains("is not a cocycle"),
                             input_error);
    }
    SUBCASE("obstructed product") {
        // classes from the two sphere factors multiply to the top class,
        // which is not a coboundary, so the bracket is undefined
        bool threw = false;
        for (const QVec& x : cohomology_classes(m, 3)) {
            try {
                massey_triple(m, 3, a, 3, x, 3, x);
            } catch (const input_error& e) {
                threw = true;
                CHECK(std::string(e.what()).find(
                          "product obstruction nonzero") != std::string::npos);
            }
        }
        CHECK(threw);
    }
}

TEST_CASE("the five-plane chain carries a nontrivial triple product") {
    KoszulModel m = chain_model();
    FormalityReport report = formality_probe(m);
    CHECK(report.degree_cap == 10);
    CHECK(report.triples_scanned == 15);
    CHECK(report.triples_checked == 12);
    REQUIRE(report.witness.has_value());
    const FormalityWitness& w = *report.witness;
    CHECK(w.degrees[0] == 3);
    CHECK(w.degrees[1] == 3);
    CHECK(w.degrees[2] == 3);
    CHECK(w.class_indices[0] == 0);
    CHECK(w.class_indices[1] == 2);
    CHECK(w.class_indices[2] == 4);

    const MasseyResult& massey = w.massey;
    CHECK(!massey.trivial);
    CHECK(massey.indeterminacy_dim == 0);
    CHECK(m.describe(3, massey.a) == "u{1}v{2}");
    CHECK(m.describe(3, massey.b) == "u{3}v{4}");
    CHECK(m.describe(3, massey.c) == "u{5}v{6}");
    CHECK(m.describe(8, massey.representative) ==
          "-u{1,3,4,5}v{2,6} - u{1,3,5,6}v{2,4}");

    SUBCASE("the verdict survives different defining-system choices") {
        MasseyResult again = massey_triple(m, 3, massey.a, 3, massey.b, 3,
                                           massey.c, true);
        CHECK(!again.trivial);
        CHECK(again.indeterminacy_dim == 0);
    }
    SUBCASE("the verdict survives rescaling the classes") {
        QVec a2 = massey.a, c3 = massey.c;
        for (mpq_class& x : a2) x *= 2;
        for (mpq_class& x : c3) x *= -3;
        MasseyResult scaled = massey_triple(m, 3, a2, 3, massey.b, 3, c3);
        CHECK(!scaled.trivial);
    }
    SUBCASE("the representative satisfies the defining identities") {
        // dx = -(a b), dy = -(b c), w = a y + (-1)^(p+1) x c
        QVec ab = m.multiply(3, massey.a, 3, massey.b);
        QVec dx = m.apply_d(5, massey.x);
        for (size_t i = 0; i < ab.size(); ++i) REQUIRE(dx[i] == -ab[i]);
        QVec bc = m.multiply(3, massey.b, 3, massey.c);
        QVec dy = m.apply_d(5, massey.y);
        for (size_t i = 0; i < bc.size(); ++i) REQUIRE(dy[i] == -bc[i]);
        QVec ay = m.multiply(3, massey.a, 5, massey.y);
        QVec xc = m.multiply(5, massey.x, 3, massey.c);
        for (size_t i = 0; i < ay.size(); ++i)
            REQUIRE(massey.representative[i] == ay[i] + xc[i]);
        REQUIRE(is_zero(m.apply_d(8, massey.representative)));
    }
}

TEST_CASE("formal fixtures yield no witness") {
    SUBCASE("S^3 x S^3") {
        FormalityReport r = formality_probe(product_model());
        CHECK(!r.witness.has_value());
    }
    SUBCASE("the origin in C^4 (a 7-sphere)") {
        MonomialIdeal I = ideal_of(4, {{1}, {2}, {3}, {4}});
        KoszulModel m = KoszulModel::build(complement_model_complex(I));
        CHECK(m.complex() ==
              SimplicialComplex::from_facets(
                  4, {set_of({2, 3, 4}), set_of({1, 3, 4}), set_of({1, 2, 4}),
                      set_of({1, 2, 3})}));
        FormalityReport r = formality_probe(m);
        CHECK(!r.witness.has_value());
    }
    SUBCASE("four hyperplanes (a torus): products obstruct, brackets vanish") {
        MonomialIdeal I = ideal_of(4, {{1, 2, 3, 4}});
        FormalityReport r =
            formality_probe(KoszulModel::build(complement_model_complex(I)));
        CHECK(!r.witness.has_value());
        CHECK(r.triples_scanned > 0);
        CHECK(r.triples_checked > 0);
    }
    SUBCASE("two points") {
        FormalityReport r = formality_probe(sphere_model());
        CHECK(!r.witness.has_value());
    }
}

TEST_CASE("probe results are identical across thread counts") {
    KoszulModel m = chain_model();
    FormalityReport base = formality_probe(m, std::nullopt, 1);
    for (int threads : {2, 3, 8}) {
        FormalityReport r = formality_probe(m, std::nullopt, threads);
        CAPTURE(threads);
        REQUIRE(r.witness.has_value() == base.witness.has_value());
        REQUIRE(r.triples_scanned == base.triples_scanned);
        REQUIRE(r.triples_checked == base.triples_checked);
        if (base.witness) {
            for (int i = 0; i < 3; ++i) {
                REQUIRE(r.witness->degrees[i] == base.witness->degrees[i]);
                REQUIRE(r.witness->class_indices[i] ==
                        base.witness->class_indices[i]);
            }
            REQUIRE(r.witness->massey.representative ==
                    base.witness->massey.representative);
        }
    }
}

TEST_CASE("a tight degree cap silences the witness") {
    KoszulModel m = chain_model();
    FormalityReport r = formality_probe(m, 8);
    CHECK(!r.witness.has_value());
    CHECK(r.degree_cap == 8);
    CHECK(r.triples_scanned == 0);  // the cheapest triple already has degree 9
}
