#include "arrtop/arrangement.hpp"

#include <algorithm>
#include <set>

#include "arrtop/errors.hpp"

namespace arrtop {

std::vector<index_set> minimal_sets(const std::vector<index_set>& family) {
    std::vector<index_set> out;
    for (size_t i = 0; i < family.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < family.size() && !redundant; ++j) {
            if (i == j) continue;
            if (family[j] == family[i])
                redundant = j < i;
            else if (subset_of(family[j], family[i]))
                redundant = true;
        }
        if (!redundant) out.push_back(family[i]);
    }
    std::sort(out.begin(), out.end(), vertex_lex_less);
    return out;
}

namespace {

// Extends the partial transversal by hitting the first unhit set, branching
// over its vertices.  Non-minimal leaves are filtered afterwards; the same
// minimal transversal can be reached along several branches, so results are
// collected into an ordered set.
void extend_transversal(const std::vector<index_set>& family,
                        size_t first_unhit,
                        index_set partial,
                        std::set<index_set, decltype(&vertex_lex_less)>& found,
                        size_t cap) {
    while (first_unhit < family.size() &&
           (family[first_unhit] & partial) != 0)
        ++first_unhit;
    if (first_unhit == family.size()) {
        // partial is a transversal; keep it only if every vertex is critical
        // (drops to a non-transversal when removed).
        for (int v : vertices_of(partial)) {
            index_set without = without_vertex(partial, v);
            bool still_hits_all = true;
            for (index_set s : family) {
                if ((s & without) == 0) {
                    still_hits_all = false;
                    break;
                }
            }
            if (still_hits_all) return;  // v was not needed
        }
        found.insert(partial);
        if (found.size() > cap)
            throw input_error("minimal transversal count exceeds cap");
        return;
    }
    for (int v : vertices_of(family[first_unhit]))
        extend_transversal(family, first_unhit + 1,
                           with_vertex(partial, v), found, cap);
}

}  // namespace

std::vector<index_set> minimal_transversals(const std::vector<index_set>& family,
                                            int n,
                                            size_t cap) {
    check_vertex_count(n);
    for (index_set s : family)
        if (!subset_of(s, full_set(n)))
            throw input_error("subspace index set exceeds ambient dimension");
    // A family member that is empty cannot be hit by anything.
    for (index_set s : family)
        if (s == 0) return {};
    if (family.empty()) return {index_set{0}};

    // Transversality only depends on the inclusion-minimal members.
    std::vector<index_set> reduced = minimal_sets(family);
    std::sort(reduced.begin(), reduced.end(), size_value_less);

    std::set<index_set, decltype(&vertex_lex_less)> found(&vertex_lex_less);
    extend_transversal(reduced, 0, 0, found, cap);
    return {found.begin(), found.end()};
}

MonomialIdeal union_ideal(const Arrangement& arrangement) {
    check_vertex_count(arrangement.n);
    for (index_set s : arrangement.subspaces)
        if (s == 0) return MonomialIdeal::unit_ideal(arrangement.n);
    if (arrangement.subspaces.empty())
        return MonomialIdeal::zero(arrangement.n);

    MonomialIdeal ideal;
    ideal.n = arrangement.n;
    for (index_set t : minimal_transversals(arrangement.subspaces, arrangement.n))
        ideal.generators.push_back(Monomial::squarefree(t, arrangement.n));
    return ideal;
}

Arrangement arrangement_of(const MonomialIdeal& ideal) {
    Arrangement arr;
    arr.n = ideal.n;
    if (ideal.is_unit()) {
        arr.subspaces.push_back(0);
        return arr;
    }
    if (ideal.is_zero()) return arr;
    if (!ideal.is_squarefree())
        throw input_error("invariant computation requires square-free ideal");
    arr.subspaces = minimal_transversals(ideal.supports(), ideal.n);
    return arr;
}

}  // namespace arrtop
