#include "arrtop/graded_group.hpp"

#include <algorithm>
#include <sstream>

#include "arrtop/errors.hpp"
#include "arrtop/smith.hpp"

namespace arrtop {

void GradedAbelianGroup::add_rank(int degree, long rank) {
    if (rank < 0) throw internal_error("negative rank");
    if (rank == 0) return;
    groups_[degree].rank += rank;
}

void GradedAbelianGroup::add_torsion(int degree,
                                     const std::vector<mpz_class>& orders) {
    if (orders.empty()) return;
    auto& list = groups_[degree].torsion;
    for (const mpz_class& t : orders) {
        if (t < 1) throw internal_error("torsion order below 1");
        if (t > 1) list.push_back(t);
    }
    normalize(degree);
}

void GradedAbelianGroup::merge(const GradedAbelianGroup& other) {
    for (const auto& [degree, summand] : other.groups_) {
        add_rank(degree, summand.rank);
        add_torsion(degree, summand.torsion);
    }
}

void GradedAbelianGroup::normalize(int degree) {
    auto it = groups_.find(degree);
    if (it == groups_.end()) return;
    auto& torsion = it->second.torsion;
    if (!torsion.empty()) {
        // Z/a + Z/b = Z/gcd + Z/lcm; equivalently, the invariant factors of
        // the diagonal matrix of the collected orders.
        IntMatrix diag(torsion.size(), torsion.size());
        for (size_t i = 0; i < torsion.size(); ++i) diag.set(i, i, torsion[i]);
        torsion = smith_normal_form(diag).torsion();
    }
    if (it->second.rank == 0 && torsion.empty()) groups_.erase(it);
}

long GradedAbelianGroup::rank(int degree) const {
    auto it = groups_.find(degree);
    return it == groups_.end() ? 0 : it->second.rank;
}

int GradedAbelianGroup::min_degree() const {
    return groups_.empty() ? 0 : groups_.begin()->first;
}

int GradedAbelianGroup::max_degree() const {
    return groups_.empty() ? 0 : groups_.rbegin()->first;
}

std::vector<long> GradedAbelianGroup::betti() const {
    std::vector<long> out;
    if (groups_.empty()) return out;
    out.assign(static_cast<size_t>(std::max(0, max_degree())) + 1, 0);
    for (const auto& [degree, summand] : groups_)
        if (degree >= 0) out[static_cast<size_t>(degree)] = summand.rank;
    return out;
}

std::string GradedAbelianGroup::to_text() const {
    if (groups_.empty()) return "0";
    std::ostringstream out;
    bool first_degree = true;
    for (const auto& [degree, summand] : groups_) {
        if (!first_degree) out << ", ";
        first_degree = false;
        out << "H_" << degree << " = ";
        bool first_part = true;
        if (summand.rank == 1) {
            out << "Z";
            first_part = false;
        } else if (summand.rank > 1) {
            out << "Z^" << summand.rank;
            first_part = false;
        }
        for (const mpz_class& t : summand.torsion) {
            if (!first_part) out << " + ";
            first_part = false;
            out << "Z/" << t.get_str();
        }
    }
    return out.str();
}

}  // namespace arrtop
