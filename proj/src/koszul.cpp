#include "arrtop/koszul.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

std::string element_label(index_set J, index_set sigma) {
    if (J == 0 && sigma == 0) return "1";
    std::string out;
    if (J != 0) out += "u" + set_to_string(J);
    if (sigma != 0) out += "v" + set_to_string(sigma);
    return out;
}

// Parity of the inversions when the ascending u-letters of J2 are merged
// after those of J1: pairs (a in J1, b in J2) with b < a.
int inversion_parity(index_set J1, index_set J2) {
    int parity = 0;
    for (int a : vertices_of(J1))
        parity ^= set_size(J2 & (singleton(a) - 1)) & 1;
    return parity;
}

}  // namespace

KoszulModel KoszulModel::build(const SimplicialComplex& K, size_t basis_cap) {
    KoszulModel m;
    m.complex_ = K;

    for (index_set sigma : K.all_faces()) {
        index_set rest = full_set(K.n) & ~sigma;
        index_set J = rest;
        while (true) {
            m.basis_.push_back({J, sigma,
                                set_size(J) + 2 * set_size(sigma),
                                element_label(J, sigma)});
            if (m.basis_.size() > basis_cap)
                throw input_error("cochain model basis exceeds cap");
            if (J == 0) break;
            J = (J - 1) & rest;
        }
    }
    std::sort(m.basis_.begin(), m.basis_.end(),
              [](const KoszulBasisElement& a, const KoszulBasisElement& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  if (a.J != b.J) return a.J < b.J;
                  return a.sigma < b.sigma;
              });

    std::map<std::pair<index_set, index_set>, size_t> index;
    for (size_t g = 0; g < m.basis_.size(); ++g)
        index[{m.basis_[g].J, m.basis_[g].sigma}] = g;

    int top = m.basis_.empty() ? -1 : m.basis_.back().degree;
    m.slices_.resize(static_cast<size_t>(top) + 1);
    m.position_in_slice_.resize(m.basis_.size());
    for (size_t g = 0; g < m.basis_.size(); ++g) {
        auto& slice = m.slices_[static_cast<size_t>(m.basis_[g].degree)];
        m.position_in_slice_[g] = slice.size();
        slice.push_back(g);
    }

    m.differential_.resize(m.basis_.size());
    for (size_t g = 0; g < m.basis_.size(); ++g) {
        const KoszulBasisElement& e = m.basis_[g];
        std::vector<int> letters = vertices_of(e.J);
        for (size_t i = 0; i < letters.size(); ++i) {
            index_set grown = with_vertex(e.sigma, letters[i]);
            if (!K.is_face(grown)) continue;
            size_t target =
                index.at({without_vertex(e.J, letters[i]), grown});
            m.differential_[g].push_back({target, i % 2 == 0 ? 1 : -1});
        }
    }

    m.products_.assign(m.basis_.size() * m.basis_.size(), ProductEntry{});
    for (size_t a = 0; a < m.basis_.size(); ++a) {
        const KoszulBasisElement& ea = m.basis_[a];
        index_set a_all = ea.J | ea.sigma;
        for (size_t b = 0; b < m.basis_.size(); ++b) {
            const KoszulBasisElement& eb = m.basis_[b];
            if ((a_all & (eb.J | eb.sigma)) != 0) continue;
            index_set united = ea.sigma | eb.sigma;
            if (!K.is_face(united)) continue;
            ProductEntry& entry = m.products_[a * m.basis_.size() + b];
            entry.target =
                static_cast<int32_t>(index.at({ea.J | eb.J, united}));
            entry.coeff = inversion_parity(ea.J, eb.J) == 0 ? 1 : -1;
        }
    }

    m.verify_structure();
    return m;
}

void KoszulModel::verify_structure() const {
    // Square-zero, degreewise.
    for (size_t g = 0; g < basis_.size(); ++g) {
        std::map<size_t, int> acc;
        for (auto [t1, c1] : differential_[g])
            for (auto [t2, c2] : differential_[t1]) acc[t2] += c1 * c2;
        for (auto& [t, c] : acc)
            if (c != 0)
                throw internal_error("model differential fails square-zero at " +
                                     basis_[g].label);
    }

    // Graded Leibniz rule on every basis pair.
    for (size_t a = 0; a < basis_.size(); ++a) {
        int sign_a = basis_[a].degree % 2 == 0 ? 1 : -1;
        for (size_t b = 0; b < basis_.size(); ++b) {
            std::map<size_t, int> diff;
            const ProductEntry& ab = product_entry(a, b);
            if (ab.target >= 0)
                for (auto [t, c] : differential_[static_cast<size_t>(ab.target)])
                    diff[t] += ab.coeff * c;
            for (auto [t, c] : differential_[a]) {
                const ProductEntry& p = product_entry(t, b);
                if (p.target >= 0)
                    diff[static_cast<size_t>(p.target)] -= c * p.coeff;
            }
            for (auto [t, c] : differential_[b]) {
                const ProductEntry& p = product_entry(a, t);
                if (p.target >= 0)
                    diff[static_cast<size_t>(p.target)] -= sign_a * c * p.coeff;
            }
            for (auto& [t, c] : diff)
                if (c != 0)
                    throw internal_error("model differential fails Leibniz on " +
                                         basis_[a].label + " * " +
                                         basis_[b].label);
        }
    }

    // Associativity on every basis triple.
    size_t count = basis_.size();
    for (size_t a = 0; a < count; ++a) {
        for (size_t b = 0; b < count; ++b) {
            const ProductEntry& ab = product_entry(a, b);
            for (size_t c = 0; c < count; ++c) {
                const ProductEntry& bc = product_entry(b, c);
                int32_t left = -1, right = -1;
                int lc = 0, rc = 0;
                if (ab.target >= 0) {
                    const ProductEntry& p =
                        product_entry(static_cast<size_t>(ab.target), c);
                    if (p.target >= 0) {
                        left = p.target;
                        lc = ab.coeff * p.coeff;
                    }
                }
                if (bc.target >= 0) {
                    const ProductEntry& p =
                        product_entry(a, static_cast<size_t>(bc.target));
                    if (p.target >= 0) {
                        right = p.target;
                        rc = bc.coeff * p.coeff;
                    }
                }
                if (left != right || lc != rc)
                    throw internal_error("model product fails associativity on " +
                                         basis_[a].label + ", " +
                                         basis_[b].label + ", " +
                                         basis_[c].label);
            }
        }
    }
}

int KoszulModel::top_degree() const {
    return static_cast<int>(slices_.size()) - 1;
}

size_t KoszulModel::slice_dim(int degree) const {
    return slice(degree).size();
}

const std::vector<size_t>& KoszulModel::slice(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(slices_.size()))
        return empty_slice_;
    return slices_[static_cast<size_t>(degree)];
}

std::vector<QVec> KoszulModel::differential_columns(int degree) const {
    const auto& source = slice(degree);
    size_t target_dim = slice_dim(degree + 1);
    std::vector<QVec> cols(source.size(), QVec(target_dim, 0));
    for (size_t i = 0; i < source.size(); ++i)
        for (auto [t, c] : differential_[source[i]])
            cols[i][position_in_slice_[t]] = c;
    return cols;
}

QVec KoszulModel::apply_d(int degree, const QVec& v) const {
    const auto& source = slice(degree);
    if (v.size() != source.size())
        throw internal_error("slice vector length mismatch in d");
    QVec out(slice_dim(degree + 1), 0);
    for (size_t i = 0; i < source.size(); ++i) {
        if (v[i] == 0) continue;
        for (auto [t, c] : differential_[source[i]])
            out[position_in_slice_[t]] += c * v[i];
    }
    return out;
}

QVec KoszulModel::multiply(int deg_a, const QVec& a, int deg_b,
                           const QVec& b) const {
    const auto& sa = slice(deg_a);
    const auto& sb = slice(deg_b);
    if (a.size() != sa.size() || b.size() != sb.size())
        throw internal_error("slice vector length mismatch in product");
    QVec out(slice_dim(deg_a + deg_b), 0);
    for (size_t i = 0; i < sa.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < sb.size(); ++j) {
            if (b[j] == 0) continue;
            const ProductEntry& p = product_entry(sa[i], sb[j]);
            if (p.target < 0) continue;
            out[position_in_slice_[static_cast<size_t>(p.target)]] +=
                a[i] * b[j] * p.coeff;
        }
    }
    return out;
}

std::string KoszulModel::describe(int degree, const QVec& v) const {
    const auto& s = slice(degree);
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < s.size(); ++i) {
        if (v[i] == 0) continue;
        mpq_class coeff = v[i];
        if (first) {
            if (coeff < 0) out << '-';
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        mpq_class mag = abs(coeff);
        if (mag != 1) out << mag.get_str() << ' ';
        out << basis_[s[i]].label;
    }
    return first ? "0" : out.str();
}

std::vector<QVec> cohomology_classes(const KoszulModel& model, int degree) {
    if (degree < 0 || degree > model.top_degree()) return {};
    std::vector<QVec> cocycles = kernel_basis(
        model.differential_columns(degree), model.slice_dim(degree + 1));
    RationalEchelon boundaries(model.slice_dim(degree));
    if (degree > 0)
        for (QVec& col : model.differential_columns(degree - 1))
            boundaries.insert(std::move(col));
    std::vector<QVec> out;
    for (QVec& z : cocycles)
        if (boundaries.insert(QVec(z)))
            out.push_back(primitive_integer_scaled(z));
    return out;
}

namespace {

// Per-degree caches shared across many triple-product evaluations.
struct Workspace {
    const KoszulModel& model;
    bool reversed;
    std::map<int, LinearSolver> solvers;
    std::map<int, std::vector<QVec>> cocycles;
    std::map<int, RationalEchelon> coboundaries;

    LinearSolver& solver(int source_degree) {
        auto it = solvers.find(source_degree);
        if (it == solvers.end())
            it = solvers
                     .emplace(source_degree,
                              LinearSolver(
                                  model.differential_columns(source_degree),
                                  model.slice_dim(source_degree + 1), reversed))
                     .first;
        return it->second;
    }
    const std::vector<QVec>& cocycle_basis(int degree) {
        auto it = cocycles.find(degree);
        if (it == cocycles.end())
            it = cocycles
                     .emplace(degree,
                              kernel_basis(model.differential_columns(degree),
                                           model.slice_dim(degree + 1)))
                     .first;
        return it->second;
    }
    // Echelon of the coboundary space inside the degree slice.
    const RationalEchelon& coboundary_echelon(int degree) {
        auto it = coboundaries.find(degree);
        if (it == coboundaries.end()) {
            RationalEchelon e(model.slice_dim(degree));
            if (degree > 0)
                for (QVec& col : model.differential_columns(degree - 1))
                    e.insert(std::move(col));
            it = coboundaries.emplace(degree, std::move(e)).first;
        }
        return it->second;
    }
};

bool all_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const mpq_class& x) { return x == 0; });
}

QVec negated(QVec v) {
    for (mpq_class& x : v) x = -x;
    return v;
}

MasseyResult massey_core(const KoszulModel& model, Workspace& ws, int p,
                         const QVec& a, int q, const QVec& b, int r,
                         const QVec& c) {
    if (a.size() != model.slice_dim(p) || b.size() != model.slice_dim(q) ||
        c.size() != model.slice_dim(r))
        throw input_error("class vector length does not match its degree");
    if (!all_zero(model.apply_d(p, a)))
        throw input_error("first class is not a cocycle");
    if (!all_zero(model.apply_d(q, b)))
        throw input_error("second class is not a cocycle");
    if (!all_zero(model.apply_d(r, c)))
        throw input_error("third class is not a cocycle");

    MasseyResult res;
    res.p = p;
    res.q = q;
    res.r = r;
    res.a = a;
    res.b = b;
    res.c = c;

    QVec ab = model.multiply(p, a, q, b);
    auto x = ws.solver(p + q - 1).solve(negated(ab));
    if (!x)
        throw input_error("product obstruction nonzero: a*b is not a coboundary");
    QVec bc = model.multiply(q, b, r, c);
    auto y = ws.solver(q + r - 1).solve(negated(bc));
    if (!y)
        throw input_error("product obstruction nonzero: b*c is not a coboundary");
    res.x = *x;
    res.y = *y;

    int m = p + q + r - 1;
    QVec w = model.multiply(p, a, q + r - 1, res.y);
    QVec xc = model.multiply(p + q - 1, res.x, r, c);
    int sign = (p + 1) % 2 == 0 ? 1 : -1;  // (-1)^(p+1)
    for (size_t i = 0; i < w.size(); ++i) w[i] += sign * xc[i];
    res.representative = w;
    if (!all_zero(model.apply_d(m, w)))
        throw internal_error("triple-product representative is not a cocycle");

    // Triviality = the class lands in a*H + H*c, tested at cochain level:
    // membership in span(a * cocycles, cocycles * c, coboundaries).
    RationalEchelon span = ws.coboundary_echelon(m);  // copy
    for (const QVec& z : ws.cocycle_basis(q + r - 1)) {
        QVec az = model.multiply(p, a, q + r - 1, z);
        if (span.insert(QVec(az))) {
            res.indeterminacy.push_back(std::move(az));
        }
    }
    for (const QVec& z : ws.cocycle_basis(p + q - 1)) {
        QVec zc = model.multiply(p + q - 1, z, r, c);
        if (span.insert(QVec(zc))) {
            res.indeterminacy.push_back(std::move(zc));
        }
    }
    res.indeterminacy_dim = res.indeterminacy.size();
    res.trivial = span.contains(w);
    return res;
}

}  // namespace

MasseyResult massey_triple(const KoszulModel& model, int p, const QVec& a,
                           int q, const QVec& b, int r, const QVec& c,
                           bool reversed_solve) {
    Workspace ws{model, reversed_solve, {}, {}, {}};
    return massey_core(model, ws, p, a, q, b, r, c);
}

FormalityReport formality_probe(const KoszulModel& model,
                                std::optional<int> total_degree_cap,
                                int threads) {
    if (threads < 1) throw input_error("thread count must be at least 1");
    int top = model.top_degree();
    FormalityReport report;
    report.degree_cap = total_degree_cap.value_or(top + 1);

    struct Entry {
        int degree;
        size_t index;  // position within this degree's class list
        const QVec* vec;
    };
    std::map<int, std::vector<QVec>> classes;
    std::vector<Entry> flat;
    for (int deg = 1; deg <= top; ++deg) {
        auto cs = cohomology_classes(model, deg);
        if (cs.empty()) continue;
        auto& stored = classes.emplace(deg, std::move(cs)).first->second;
        for (size_t i = 0; i < stored.size(); ++i)
            flat.push_back({deg, i, &stored[i]});
    }

    // Triples ordered by total degree, then by flat position (the flat list
    // is already degree-ascending, so ties break lexicographically).
    struct Triple {
        int total;
        size_t i, j, k;
    };
    std::vector<Triple> triples;
    for (size_t i = 0; i < flat.size(); ++i)
        for (size_t j = 0; j < flat.size(); ++j)
            for (size_t k = 0; k < flat.size(); ++k) {
                int total =
                    flat[i].degree + flat[j].degree + flat[k].degree;
                if (total > report.degree_cap) continue;
                if (total - 1 > top) continue;  // representative space is zero
                triples.push_back({total, i, j, k});
            }
    std::stable_sort(triples.begin(), triples.end(),
                     [](const Triple& a, const Triple& b) {
                         return a.total < b.total;
                     });

    // Each worker owns the triples whose first class index falls in its
    // residue class, walks them in global enumeration order, and stops at
    // its own first witness.  The reduction takes the witness of smallest
    // enumeration ordinal, and the reported counters cover exactly the
    // prefix up to that ordinal — every worker has complete results there —
    // so the outcome matches the single-threaded scan byte for byte.
    size_t worker_count =
        std::min<size_t>(static_cast<size_t>(threads),
                         std::max<size_t>(flat.size(), 1));
    struct WorkerState {
        std::vector<size_t> checked_ordinals;
        std::optional<std::pair<size_t, FormalityWitness>> found;
        std::exception_ptr failure;
    };
    std::vector<WorkerState> states(worker_count);

    auto run_worker = [&](size_t worker) {
        WorkerState& st = states[worker];
        try {
            Workspace ws{model, false, {}, {}, {}};
            for (size_t ord = 0; ord < triples.size(); ++ord) {
                const Triple& t = triples[ord];
                if (t.i % worker_count != worker) continue;
                const Entry &ea = flat[t.i], &eb = flat[t.j], &ec = flat[t.k];
                MasseyResult res;
                try {
                    res = massey_core(model, ws, ea.degree, *ea.vec,
                                      eb.degree, *eb.vec, ec.degree, *ec.vec);
                } catch (const input_error&) {
                    continue;  // pairwise products do not vanish; not defined
                }
                st.checked_ordinals.push_back(ord);
                if (!res.trivial) {
                    FormalityWitness w;
                    w.degrees[0] = ea.degree;
                    w.degrees[1] = eb.degree;
                    w.degrees[2] = ec.degree;
                    w.class_indices[0] = ea.index;
                    w.class_indices[1] = eb.index;
                    w.class_indices[2] = ec.index;
                    w.massey = std::move(res);
                    st.found = {ord, std::move(w)};
                    break;
                }
            }
        } catch (...) {
            st.failure = std::current_exception();
        }
    };

    if (worker_count == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (size_t w = 0; w < worker_count; ++w)
            pool.emplace_back(run_worker, w);
        for (std::thread& th : pool) th.join();
    }
    for (WorkerState& st : states)
        if (st.failure) std::rethrow_exception(st.failure);

    std::optional<size_t> winner;
    for (WorkerState& st : states)
        if (st.found && (!winner || st.found->first < *winner))
            winner = st.found->first;
    size_t horizon = winner ? *winner + 1 : triples.size();
    report.triples_scanned = horizon;
    for (WorkerState& st : states)
        for (size_t ord : st.checked_ordinals)
            if (ord < horizon) ++report.triples_checked;
    if (winner)
        for (WorkerState& st : states)
            if (st.found && st.found->first == *winner)
                report.witness = std::move(st.found->second);
    return report;
}

}  // namespace arrtop
