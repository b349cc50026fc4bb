#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace arrtop {

// A finitely generated graded abelian group: per degree, a free rank and a
// divisibility chain of torsion orders.  Degrees with zero rank and no
// torsion are never stored.
class GradedAbelianGroup {
  public:
    struct Summand {
        long rank = 0;
        std::vector<mpz_class> torsion;  // each >= 2, each dividing the next
    };

    void add_rank(int degree, long rank);
    // Torsion orders may arrive in any order and from many sources; they are
    // renormalized into a divisibility chain (drop 1s, fix the chain).
    void add_torsion(int degree, const std::vector<mpz_class>& orders);
    void merge(const GradedAbelianGroup& other);

    bool is_trivial() const { return groups_.empty(); }
    long rank(int degree) const;
    const std::map<int, Summand>& by_degree() const { return groups_; }
    int min_degree() const;  // 0 when trivial
    int max_degree() const;  // 0 when trivial

    // Free ranks from degree 0 through max_degree (negative degrees, which
    // only arise for odd chain complexes, are excluded).
    std::vector<long> betti() const;

    // "H_0 = Z, H_3 = Z^5, H_5 = Z^2 + Z/2 + Z/4"; "0" when trivial.
    std::string to_text() const;

    bool operator==(const GradedAbelianGroup& other) const {
        return groups_ == other.groups_;
    }

  private:
    void normalize(int degree);
    std::map<int, Summand> groups_;
};

inline bool operator==(const GradedAbelianGroup::Summand& a,
                       const GradedAbelianGroup::Summand& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
}

}  // namespace arrtop
