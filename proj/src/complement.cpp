#include "arrtop/complement.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "arrtop/chain_complex.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/moment_angle.hpp"
#include "arrtop/poset.hpp"

namespace arrtop {

std::string to_string(TriState t) {
    switch (t) {
        case TriState::certified_true: return "certified-true";
        case TriState::certified_false: return "certified-false";
        default: return "unknown";
    }
}

SimplicialComplex complement_model_complex(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) throw input_error("empty complement");
    if (!ideal.is_squarefree())
        throw input_error("invariant computation requires square-free ideal");
    if (ideal.is_zero()) return SimplicialComplex::full_simplex(ideal.n);
    // sigma is a face iff the points with exactly the sigma-coordinates zero
    // avoid every component V(T), i.e. sigma contains no T.  The components
    // T are the minimal transversals of the generator supports, so the
    // maximal faces are the complements of the supports themselves.
    std::vector<index_set> facets;
    for (index_set s : ideal.supports())
        facets.push_back(full_set(ideal.n) & ~s);
    return SimplicialComplex::from_facets(ideal.n, std::move(facets));
}

namespace {

// Vertex contained in every facet => the complex is a cone => acyclic, and
// its face-count Euler characteristic is exactly zero (faces pair up with
// their cone extensions), so such subsets contribute nothing at all.
bool is_cone(const SimplicialComplex& K) {
    index_set common = ~index_set{0};
    for (index_set f : K.facets) common &= f;
    return common != 0;
}

struct HochsterChunk {
    GradedAbelianGroup homology;
    long euler_from_faces = 0;  // sum over J of (-1)^(|J|+1) * chiTilde(K_J)
};

HochsterChunk hochster_range(const SimplicialComplex& K, index_set begin,
                             index_set end) {
    HochsterChunk chunk;
    for (index_set J = begin; J < end; ++J) {
        SimplicialComplex KJ = K.full_subcomplex(J);
        if (is_cone(KJ)) continue;
        long chi = 0;
        for (index_set f : KJ.all_faces()) chi += set_size(f) % 2 == 0 ? -1 : 1;
        chunk.euler_from_faces += set_size(J) % 2 == 0 ? -chi : chi;
        GradedAbelianGroup reduced = reduced_homology(KJ);
        int shift = set_size(J) + 1;
        for (const auto& [degree, summand] : reduced.by_degree()) {
            chunk.homology.add_rank(degree + shift, summand.rank);
            chunk.homology.add_torsion(degree + shift, summand.torsion);
        }
    }
    return chunk;
}

}  // namespace

GradedAbelianGroup hochster_homology(const MonomialIdeal& ideal, int threads) {
    if (ideal.n > 20)
        throw input_error(
            "the subset sum iterates 2^n subsets; n > 20 is refused");
    if (threads < 1) throw input_error("thread count must be >= 1");
    SimplicialComplex K = complement_model_complex(ideal);

    index_set total = full_set(ideal.n) + 1;  // subset count
    size_t chunk_count =
        std::min<size_t>(static_cast<size_t>(threads), total);
    std::vector<HochsterChunk> chunks(chunk_count);
    if (chunk_count <= 1) {
        chunks[0] = hochster_range(K, 0, total);
    } else {
        std::vector<std::thread> workers;
        index_set per = total / chunk_count;
        for (size_t t = 0; t < chunk_count; ++t) {
            index_set begin = per * t;
            index_set end = t + 1 == chunk_count ? total : per * (t + 1);
            workers.emplace_back([&, t, begin, end] {
                chunks[t] = hochster_range(K, begin, end);
            });
        }
        for (auto& w : workers) w.join();
    }

    GradedAbelianGroup H;
    long euler_faces = 0;
    for (const HochsterChunk& chunk : chunks) {
        H.merge(chunk.homology);
        euler_faces += chunk.euler_from_faces;
    }

    long euler_ranks = 0;
    for (const auto& [degree, summand] : H.by_degree())
        euler_ranks += degree % 2 == 0 ? summand.rank : -summand.rank;
    if (euler_faces != euler_ranks)
        throw internal_error(
            "Euler characteristic double-count failed: face count gives " +
            std::to_string(euler_faces) + ", homology ranks give " +
            std::to_string(euler_ranks));
    return H;
}

std::vector<long> goresky_macpherson_betti(const Arrangement& arrangement) {
    if (arrangement.subspaces.empty())
        throw input_error("the poset route needs a nonempty arrangement");
    for (index_set s : arrangement.subspaces)
        if (s == 0)
            throw input_error("the poset route needs proper subspaces");

    IntersectionPoset poset = intersection_poset(arrangement);
    std::vector<long> betti(1, 0);
    for (index_set x : poset.elements) {
        if (x == 0) continue;
        GradedAbelianGroup h = reduced_homology(order_complex(poset, x));
        for (const auto& [degree, summand] : h.by_degree()) {
            int i = IntersectionPoset::real_codim(x) - 2 - degree;
            if (i < 0)
                throw internal_error(
                    "poset contribution below degree 0 at element " +
                    set_to_string(x));
            if (betti.size() <= static_cast<size_t>(i))
                betti.resize(static_cast<size_t>(i) + 1, 0);
            betti[static_cast<size_t>(i)] += summand.rank;
        }
    }
    betti[0] += 1;  // back to unreduced counting
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    return betti;
}

TriState simply_connected_codim_check(const Arrangement& arrangement) {
    bool all_deep = true, some_hyperplane = false;
    for (index_set s : arrangement.subspaces) {
        if (set_size(s) < 2) all_deep = false;
        if (set_size(s) == 1) some_hyperplane = true;
    }
    if (all_deep) return TriState::certified_true;
    if (some_hyperplane) return TriState::certified_false;
    return TriState::unknown;
}

std::optional<std::vector<long>> circle_factor_test(
    const std::vector<long>& betti) {
    if (betti.empty() || betti[0] < 1)
        throw input_error("Betti vector must start with b_0 >= 1");
    std::vector<long> c(betti.size(), 0);
    long prev = 0;
    for (size_t k = 0; k < betti.size(); ++k) {
        c[k] = betti[k] - prev;
        if (c[k] < 0) return std::nullopt;
        prev = c[k];
    }
    if (c.back() != 0) return std::nullopt;
    c.pop_back();
    return c;
}

namespace {

std::string betti_text(const std::vector<long>& betti) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < betti.size(); ++i) {
        if (i) out << ',';
        out << betti[i];
    }
    out << ')';
    return out.str();
}

std::vector<long> trimmed(std::vector<long> betti) {
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    if (betti.empty()) betti.push_back(0);
    return betti;
}

}  // namespace

ComplementReport complement_report(
    const MonomialIdeal& ideal,
    const std::optional<Arrangement>& given_arrangement, FormulaSelection sel,
    int threads) {
    if (ideal.is_unit()) throw input_error("empty complement");
    if (!sel.hochster && !sel.gm && !sel.oracle)
        throw input_error("no computation route selected");

    ComplementReport report;
    report.ideal = ideal;
    report.arrangement =
        given_arrangement ? *given_arrangement : arrangement_of(ideal);

    std::optional<GradedAbelianGroup> hochster, oracle;
    std::optional<std::vector<long>> gm;
    if (sel.hochster) {
        hochster = hochster_homology(ideal, threads);
        report.methods.push_back("hochster");
    }
    if (sel.gm) {
        if (report.arrangement.subspaces.empty()) {
            report.notices.push_back(
                "poset route skipped: empty arrangement has no poset atoms");
        } else {
            gm = goresky_macpherson_betti(report.arrangement);
            report.methods.push_back("gm");
        }
    }
    if (sel.oracle) {
        oracle = oracle_homology(complement_model_complex(ideal));
        report.methods.push_back("oracle");
    }

    if (report.methods.empty())
        throw input_error(
            "no applicable route: the poset route cannot handle this input "
            "(empty arrangement)");

    if (hochster && oracle && !(*hochster == *oracle))
        throw verification_error(
            "subset-sum and moment-angle answers disagree: " +
            hochster->to_text() + " vs " + oracle->to_text());

    report.homology = hochster ? *hochster
                      : oracle ? *oracle
                               : GradedAbelianGroup{};
    if (!hochster && !oracle) {
        // Poset route only: ranks are all we have.
        for (size_t i = 0; i < gm->size(); ++i)
            report.homology.add_rank(static_cast<int>(i), (*gm)[i]);
    }
    report.betti = trimmed(report.homology.betti());

    if (gm && (hochster || oracle)) {
        std::vector<long> gm_trimmed = trimmed(*gm);
        if (gm_trimmed != report.betti)
            throw verification_error("Betti vectors disagree: poset route " +
                                     betti_text(gm_trimmed) +
                                     " vs subset sum " +
                                     betti_text(report.betti));
    }

    if (report.homology.rank(0) != 1)
        throw internal_error("complement must be connected (rank 1 in degree 0)");

    report.simply_connected = simply_connected_codim_check(report.arrangement);
    if (report.simply_connected == TriState::certified_true &&
        report.homology.rank(1) != 0)
        throw internal_error(
            "codimension >= 2 certified but first homology has rank " +
            std::to_string(report.homology.rank(1)));
    if (report.simply_connected == TriState::certified_false &&
        report.homology.rank(1) == 0)
        throw internal_error("hyperplane present but first homology vanished");

    // Sanity envelope: nothing above degree 2n - (minimum support size).
    if (!ideal.generators.empty()) {
        int min_support = ideal.n;
        for (const Monomial& g : ideal.generators)
            min_support = std::min(min_support, set_size(g.support()));
        if (report.homology.max_degree() > 2 * ideal.n - min_support)
            throw internal_error("homology above the degree envelope");
    }

    report.circle_factor = circle_factor_test(report.betti);
    return report;
}

}  // namespace arrtop
