#include "arrtop/poset.hpp"

#include <algorithm>
#include <set>

#include "arrtop/errors.hpp"

namespace arrtop {

size_t IntersectionPoset::index_of(index_set e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e,
                               size_value_less);
    if (it == elements.end() || *it != e)
        throw input_error("element not in poset: " + set_to_string(e));
    return static_cast<size_t>(it - elements.begin());
}

bool IntersectionPoset::contains(index_set e) const {
    return std::binary_search(elements.begin(), elements.end(), e,
                              size_value_less);
}

IntersectionPoset intersection_poset(const Arrangement& arrangement) {
    check_vertex_count(arrangement.n);
    for (index_set s : arrangement.subspaces) {
        if (s == 0)
            throw input_error(
                "the whole ambient space cannot be a poset member");
        if (!subset_of(s, full_set(arrangement.n)))
            throw input_error("subspace index set exceeds ambient dimension");
    }

    // Close the member set under pairwise union; this reaches every union of
    // a nonempty subfamily.
    std::set<index_set> closure(arrangement.subspaces.begin(),
                                arrangement.subspaces.end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<index_set> snapshot(closure.begin(), closure.end());
        for (size_t i = 0; i < snapshot.size(); ++i)
            for (size_t j = i + 1; j < snapshot.size(); ++j)
                if (closure.insert(snapshot[i] | snapshot[j]).second)
                    grew = true;
    }

    IntersectionPoset poset;
    poset.n = arrangement.n;
    poset.elements.push_back(0);
    poset.elements.insert(poset.elements.end(), closure.begin(), closure.end());
    std::sort(poset.elements.begin(), poset.elements.end(), size_value_less);

    // e' covers e when e < e' with nothing in between.
    size_t count = poset.elements.size();
    poset.upper_covers.assign(count, {});
    for (size_t i = 0; i < count; ++i) {
        for (size_t j = i + 1; j < count; ++j) {
            index_set lo = poset.elements[i], hi = poset.elements[j];
            if (lo == hi || !subset_of(lo, hi)) continue;
            bool covered = true;
            for (size_t k = 0; k < count && covered; ++k) {
                if (k == i || k == j) continue;
                index_set mid = poset.elements[k];
                if (mid != lo && mid != hi && subset_of(lo, mid) &&
                    subset_of(mid, hi))
                    covered = false;
            }
            if (covered) poset.upper_covers[i].push_back(j);
        }
    }
    return poset;
}

namespace {

void extend_chain(const std::vector<index_set>& interval,
                  const std::vector<std::vector<size_t>>& next_in_interval,
                  size_t at,
                  index_set chain,
                  std::vector<index_set>& out) {
    chain = with_vertex(chain, static_cast<int>(at) + 1);
    if (next_in_interval[at].empty()) {
        out.push_back(chain);
        return;
    }
    for (size_t succ : next_in_interval[at])
        extend_chain(interval, next_in_interval, succ, chain, out);
}

}  // namespace

SimplicialComplex order_complex(const IntersectionPoset& poset, index_set x) {
    poset.index_of(x);  // validates membership
    if (x == 0) throw input_error("order complex needs a non-bottom element");

    // Elements strictly between the bottom and x, in (size, value) order;
    // their positions give the vertex labels 1..m.
    std::vector<index_set> interval;
    for (index_set e : poset.elements)
        if (e != 0 && e != x && subset_of(e, x)) interval.push_back(e);
    size_t m = interval.size();
    if (m == 0) return SimplicialComplex::empty_complex(0);

    // Cover relation inside the interval.  A lower interval of the poset is
    // convex, so the ambient covers restrict correctly, but recomputing is
    // simpler than translating stored indices.
    std::vector<std::vector<size_t>> next(m);
    std::vector<bool> has_pred(m, false);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (i == j || interval[i] == interval[j]) continue;
            if (!subset_of(interval[i], interval[j])) continue;
            bool covered = true;
            for (size_t k = 0; k < m && covered; ++k) {
                if (k == i || k == j) continue;
                if (interval[k] != interval[i] && interval[k] != interval[j] &&
                    subset_of(interval[i], interval[k]) &&
                    subset_of(interval[k], interval[j]))
                    covered = false;
            }
            if (covered) {
                next[i].push_back(j);
                has_pred[j] = true;
            }
        }
    }

    // Maximal chains = paths from interval-minimal elements along covers.
    std::vector<index_set> facets;
    for (size_t i = 0; i < m; ++i)
        if (!has_pred[i]) extend_chain(interval, next, i, 0, facets);
    return SimplicialComplex::from_facets(static_cast<int>(m),
                                          std::move(facets));
}

}  // namespace arrtop
