#include "arrtop/monomial.hpp"

#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

Monomial Monomial::one(int n) {
    check_vertex_count(n);
    Monomial m;
    m.n = n;
    return m;
}

Monomial Monomial::squarefree(index_set support, int n) {
    check_vertex_count(n);
    if (!subset_of(support, full_set(n)))
        throw input_error("monomial support exceeds variable range");
    Monomial m;
    m.n = n;
    for (int v : vertices_of(support)) m.exponents[v] = 1;
    return m;
}

Monomial Monomial::from_exponents(int n, const std::map<int, int>& exps) {
    check_vertex_count(n);
    Monomial m;
    m.n = n;
    for (auto [var, e] : exps) {
        if (var < 1 || var > n)
            throw input_error("variable index out of range in monomial");
        if (e < 0) throw input_error("negative exponent in monomial");
        if (e > 0) m.exponents[var] = e;
    }
    return m;
}

index_set Monomial::support() const {
    index_set s = 0;
    for (auto [var, e] : exponents) s = with_vertex(s, var);
    return s;
}

bool Monomial::is_squarefree() const {
    for (auto [var, e] : exponents)
        if (e > 1) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    for (auto [var, e] : exponents) {
        auto it = other.exponents.find(var);
        if (it == other.exponents.end() || it->second < e) return false;
    }
    return true;
}

long Monomial::total_degree() const {
    long d = 0;
    for (auto [var, e] : exponents) d += e;
    return d;
}

long Monomial::weighted_degree(const std::vector<long>& x_weights) const {
    if (static_cast<int>(x_weights.size()) != n)
        throw input_error("weight vector length does not match variable count");
    long d = 0;
    for (auto [var, e] : exponents) d += x_weights[var - 1] * e;
    return d;
}

std::string Monomial::to_string() const {
    if (exponents.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (auto [var, e] : exponents) {
        if (!first) out << '*';
        first = false;
        out << 'x' << var;
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

bool lex_less(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare(
        a.exponents.begin(), a.exponents.end(),
        b.exponents.begin(), b.exponents.end());
}

MonomialIdeal MonomialIdeal::zero(int n) {
    check_vertex_count(n);
    MonomialIdeal ideal;
    ideal.n = n;
    return ideal;
}

MonomialIdeal MonomialIdeal::unit_ideal(int n) {
    check_vertex_count(n);
    MonomialIdeal ideal;
    ideal.n = n;
    ideal.unit = true;
    return ideal;
}

bool MonomialIdeal::is_squarefree() const {
    for (const Monomial& g : generators)
        if (!g.is_squarefree()) return false;
    return true;
}

std::vector<index_set> MonomialIdeal::supports() const {
    std::vector<index_set> out;
    out.reserve(generators.size());
    for (const Monomial& g : generators) out.push_back(g.support());
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (unit) return "(1)";
    if (generators.empty()) return "(0)";
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < generators.size(); ++i) {
        if (i) out << ", ";
        out << generators[i].to_string();
    }
    out << ')';
    return out.str();
}

MonomialIdeal minimal_generators(const std::vector<Monomial>& gens) {
    if (gens.empty()) return MonomialIdeal::zero(0);
    int n = gens.front().n;
    for (const Monomial& g : gens)
        if (g.n != n)
            throw input_error("generators live in different variable counts");
    // A constant generator makes the whole ring.
    for (const Monomial& g : gens)
        if (g.is_one()) return MonomialIdeal::unit_ideal(n);
    MonomialIdeal ideal;
    ideal.n = n;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j] == gens[i]) {
                redundant = j < i;  // keep the first copy only
            } else if (gens[j].divides(gens[i])) {
                redundant = true;
            }
        }
        if (!redundant) ideal.generators.push_back(gens[i]);
    }
    return ideal;
}

}  // namespace arrtop
