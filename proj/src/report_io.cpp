#include "arrtop/report_io.hpp"

#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

long long torsion_to_int(const mpz_class& t) {
    if (!t.fits_slong_p())
        throw internal_error("torsion order too large for the JSON report");
    return t.get_si();
}

ordered_json ideal_generators_json(const MonomialIdeal& ideal) {
    ordered_json out = ordered_json::array();
    // The unit ideal has no stored generators; "1" is its canonical one, and
    // emitting it keeps the output parseable as the same ideal.
    if (ideal.is_unit()) {
        out.push_back("1");
        return out;
    }
    for (const Monomial& g : ideal.generators) out.push_back(g.to_string());
    return out;
}

ordered_json arrangement_json(const Arrangement& arrangement) {
    ordered_json out = ordered_json::array();
    for (index_set member : arrangement.subspaces) {
        ordered_json set = ordered_json::array();
        for (int v : vertices_of(member)) set.push_back(v);
        out.push_back(std::move(set));
    }
    return out;
}

std::string arrangement_text(const Arrangement& arrangement) {
    if (arrangement.subspaces.empty()) return "(none)";
    std::string out;
    for (size_t i = 0; i < arrangement.subspaces.size(); ++i) {
        if (i > 0) out += ' ';
        out += set_to_string(arrangement.subspaces[i]);
    }
    return out;
}

template <typename T>
std::string joined(const std::vector<T>& values, const char* sep) {
    std::ostringstream out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << sep;
        out << values[i];
    }
    return out.str();
}

ordered_json long_array(const std::vector<long>& values) {
    ordered_json out = ordered_json::array();
    for (long v : values) out.push_back(v);
    return out;
}

ordered_json methods_json(const std::vector<std::string>& methods) {
    ordered_json out = ordered_json::object();
    for (const std::string& m : methods) out[m] = true;
    return out;
}

ordered_json circle_factor_json(
    const std::optional<std::vector<long>>& factor) {
    if (!factor) return nullptr;
    return long_array(*factor);
}

ordered_json string_array(const std::vector<std::string>& values) {
    ordered_json out = ordered_json::array();
    for (const std::string& v : values) out.push_back(v);
    return out;
}

ordered_json coordinates_json(const QVec& v) {
    ordered_json out = ordered_json::array();
    for (const mpq_class& x : v) out.push_back(x.get_str());
    return out;
}

ordered_json slice_vector_json(const KoszulModel& model, int degree,
                               const QVec& v) {
    ordered_json out = ordered_json::object();
    out["degree"] = degree;
    out["text"] = model.describe(degree, v);
    out["coordinates"] = coordinates_json(v);
    return out;
}

std::vector<long> model_cohomology_ranks(const KoszulModel& model) {
    std::vector<long> ranks;
    for (int degree = 0; degree <= model.top_degree(); ++degree)
        ranks.push_back(
            static_cast<long>(cohomology_classes(model, degree).size()));
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    return ranks;
}

std::string formality_verdict(const FormalityReport& report) {
    return report.witness ? "non-formality certified"
                          : "no obstruction found at triple level";
}

}  // namespace

ordered_json homology_to_json(const GradedAbelianGroup& group) {
    ordered_json out = ordered_json::array();
    for (const auto& [degree, summand] : group.by_degree()) {
        if (summand.rank == 0 && summand.torsion.empty()) continue;
        ordered_json entry = ordered_json::object();
        entry["degree"] = degree;
        entry["rank"] = summand.rank;
        ordered_json torsion = ordered_json::array();
        for (const mpz_class& t : summand.torsion)
            torsion.push_back(torsion_to_int(t));
        entry["torsion"] = std::move(torsion);
        out.push_back(std::move(entry));
    }
    return out;
}

std::string complement_report_to_text(const ComplementReport& report) {
    std::ostringstream out;
    out << "ideal: " << report.ideal.to_string() << '\n';
    out << "n: " << report.ideal.n << '\n';
    out << "arrangement: " << arrangement_text(report.arrangement) << '\n';
    out << "methods: " << joined(report.methods, ", ") << '\n';
    out << "homology: " << report.homology.to_text() << '\n';
    out << "betti: " << joined(report.betti, " ") << '\n';
    out << "simply connected: " << to_string(report.simply_connected)
        << '\n';
    if (report.circle_factor)
        out << "circle factor: " << joined(*report.circle_factor, " ")
            << '\n';
    else
        out << "circle factor: none\n";
    for (const std::string& notice : report.notices)
        out << "notice: " << notice << '\n';
    return out.str();
}

ordered_json complement_report_to_json(const ComplementReport& report) {
    ordered_json out = ordered_json::object();
    out["schema"] = 1;
    out["ideal"] = ideal_generators_json(report.ideal);
    out["n"] = report.ideal.n;
    out["arrangement"] = arrangement_json(report.arrangement);
    out["homology"] = homology_to_json(report.homology);
    out["betti"] = long_array(report.betti);
    out["methods"] = methods_json(report.methods);
    out["simply_connected"] = to_string(report.simply_connected);
    out["circle_factor"] = circle_factor_json(report.circle_factor);
    out["notices"] = string_array(report.notices);
    return out;
}

std::string milnor_report_to_text(const MilnorReport& report,
                                  const MonomialIdeal& ideal) {
    std::ostringstream out;
    out << "ideal: " << ideal.to_string() << '\n';
    out << "polynomial: " << report.polynomial.to_text() << '\n';
    out << "variables: " << report.polynomial.variable_count() << " (x: "
        << report.polynomial.x_count << ", y: " << report.polynomial.y_count
        << ")\n";
    out << "x-weights: " << joined(report.weights.x_weights, " ") << '\n';
    out << "y-weights: " << joined(report.weights.y_weights, " ") << '\n';
    out << "total weighted degree: " << report.weights.total_degree << '\n';
    out << "Milnor fibre homology: " << report.complement.homology.to_text()
        << '\n';
    out << "betti: " << joined(report.complement.betti, " ") << '\n';
    out << "simply connected: "
        << to_string(report.complement.simply_connected) << '\n';
    if (report.complement.circle_factor)
        out << "circle factor: "
            << joined(*report.complement.circle_factor, " ") << '\n';
    else
        out << "circle factor: none\n";
    out << "monodromy: trivial\n";
    out << "formality: " << report.formality_verdict << '\n';
    if (report.formality && report.formality->witness) {
        const FormalityWitness& w = *report.formality->witness;
        out << "formality witness: degrees (" << w.degrees[0] << ", "
            << w.degrees[1] << ", " << w.degrees[2]
            << "), representative degree "
            << (w.degrees[0] + w.degrees[1] + w.degrees[2] - 1)
            << ", indeterminacy dimension " << w.massey.indeterminacy_dim
            << '\n';
    }
    for (const std::string& notice : report.complement.notices)
        out << "notice: " << notice << '\n';
    return out.str();
}

ordered_json milnor_report_to_json(const MilnorReport& report,
                                   const MonomialIdeal& ideal) {
    ordered_json out = ordered_json::object();
    out["schema"] = 1;
    out["ideal"] = ideal_generators_json(ideal);
    out["n"] = ideal.n;

    ordered_json poly = ordered_json::object();
    poly["text"] = report.polynomial.to_text();
    ordered_json terms = ordered_json::array();
    for (const PolynomialTerm& term : report.polynomial.terms) {
        ordered_json t = ordered_json::object();
        t["y"] = term.y_index;
        t["factor"] = term.factor;
        terms.push_back(std::move(t));
    }
    poly["terms"] = std::move(terms);
    poly["x_count"] = report.polynomial.x_count;
    poly["y_count"] = report.polynomial.y_count;
    poly["variable_count"] = report.polynomial.variable_count();
    out["polynomial"] = std::move(poly);

    ordered_json weights = ordered_json::object();
    weights["x"] = long_array(report.weights.x_weights);
    weights["y"] = long_array(report.weights.y_weights);
    weights["total_degree"] = report.weights.total_degree;
    out["weights"] = std::move(weights);

    out["milnor_fibre_homology"] =
        homology_to_json(report.complement.homology);
    out["betti"] = long_array(report.complement.betti);
    out["simply_connected"] =
        to_string(report.complement.simply_connected);
    out["circle_factor"] =
        circle_factor_json(report.complement.circle_factor);
    out["monodromy"] = "trivial";
    out["formality"] = report.formality_verdict;
    if (report.formality) {
        const FormalityReport& probe = *report.formality;
        ordered_json p = ordered_json::object();
        p["degree_cap"] = probe.degree_cap;
        p["triples_scanned"] = probe.triples_scanned;
        p["triples_checked"] = probe.triples_checked;
        if (probe.witness) {
            ordered_json w = ordered_json::object();
            w["degrees"] = {probe.witness->degrees[0],
                            probe.witness->degrees[1],
                            probe.witness->degrees[2]};
            w["class_indices"] = {probe.witness->class_indices[0],
                                  probe.witness->class_indices[1],
                                  probe.witness->class_indices[2]};
            w["indeterminacy_dimension"] =
                probe.witness->massey.indeterminacy_dim;
            p["witness"] = std::move(w);
        } else {
            p["witness"] = nullptr;
        }
        out["formality_probe"] = std::move(p);
    }
    out["notices"] = string_array(report.complement.notices);
    return out;
}

std::string formality_report_to_text(const KoszulModel& model,
                                     const FormalityReport& report) {
    std::ostringstream out;
    out << "basis elements: " << model.basis_size() << '\n';
    out << "top degree: " << model.top_degree() << '\n';
    out << "cohomology ranks: " << joined(model_cohomology_ranks(model), " ")
        << '\n';
    out << "degree cap: " << report.degree_cap << '\n';
    out << "triples scanned: " << report.triples_scanned << '\n';
    out << "triples checked: " << report.triples_checked << '\n';
    out << "verdict: " << formality_verdict(report) << '\n';
    if (report.witness) {
        const FormalityWitness& w = *report.witness;
        const MasseyResult& m = w.massey;
        out << "witness classes: H^" << w.degrees[0] << " class "
            << w.class_indices[0] + 1 << ", H^" << w.degrees[1] << " class "
            << w.class_indices[1] + 1 << ", H^" << w.degrees[2] << " class "
            << w.class_indices[2] + 1 << '\n';
        out << "a = " << model.describe(m.p, m.a) << '\n';
        out << "b = " << model.describe(m.q, m.b) << '\n';
        out << "c = " << model.describe(m.r, m.c) << '\n';
        out << "representative (degree " << m.p + m.q + m.r - 1
            << ") = " << model.describe(m.p + m.q + m.r - 1, m.representative)
            << '\n';
        out << "indeterminacy dimension: " << m.indeterminacy_dim << '\n';
    }
    return out.str();
}

ordered_json formality_report_to_json(const KoszulModel& model,
                                      const FormalityReport& report) {
    ordered_json out = ordered_json::object();
    out["schema"] = 1;
    out["basis_elements"] = model.basis_size();
    out["top_degree"] = model.top_degree();
    out["cohomology_ranks"] = long_array(model_cohomology_ranks(model));
    out["degree_cap"] = report.degree_cap;
    out["triples_scanned"] = report.triples_scanned;
    out["triples_checked"] = report.triples_checked;
    out["verdict"] = formality_verdict(report);
    if (report.witness) {
        const FormalityWitness& w = *report.witness;
        const MasseyResult& m = w.massey;
        ordered_json witness = ordered_json::object();
        witness["degrees"] = {w.degrees[0], w.degrees[1], w.degrees[2]};
        witness["class_indices"] = {w.class_indices[0], w.class_indices[1],
                                    w.class_indices[2]};
        witness["a"] = slice_vector_json(model, m.p, m.a);
        witness["b"] = slice_vector_json(model, m.q, m.b);
        witness["c"] = slice_vector_json(model, m.r, m.c);
        witness["representative"] =
            slice_vector_json(model, m.p + m.q + m.r - 1, m.representative);
        witness["indeterminacy_dimension"] = m.indeterminacy_dim;
        out["witness"] = std::move(witness);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

std::string union_ideal_to_text(const MonomialIdeal& ideal) {
    if (ideal.is_unit()) return "1\n";
    std::string out;
    for (const Monomial& g : ideal.generators) {
        out += g.to_string();
        out += '\n';
    }
    return out;
}

ordered_json union_ideal_to_json(const MonomialIdeal& ideal) {
    ordered_json out = ordered_json::object();
    out["schema"] = 1;
    out["n"] = ideal.n;
    out["ideal"] = ideal_generators_json(ideal);
    return out;
}

}  // namespace arrtop
