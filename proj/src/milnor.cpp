#include "arrtop/milnor.hpp"

#include <algorithm>
#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

std::string PolynomialTerm::to_text() const {
    std::string head = "y" + std::to_string(y_index);
    if (factor == "1") return head;
    bool needs_brackets =
        factor.find('+') != std::string::npos ||
        factor.find('-') != std::string::npos;
    if (needs_brackets) return head + "*(" + factor + ")";
    return head + "*" + factor;
}

std::string PolynomialExpr::to_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out << " + ";
        out << terms[i].to_text();
    }
    return out.str();
}

namespace {

PolynomialExpr assemble(std::vector<std::string> factors, int n) {
    if (factors.empty())
        throw input_error(
            "the polynomial needs at least one generator; got none");
    PolynomialExpr expr;
    expr.x_count = n;
    expr.y_count = static_cast<int>(factors.size());
    for (size_t i = 0; i < factors.size(); ++i)
        expr.terms.push_back(
            {static_cast<int>(i) + 1, std::move(factors[i])});
    return expr;
}

}  // namespace

PolynomialExpr milnor_polynomial(const MonomialIdeal& ideal) {
    std::vector<std::string> factors;
    for (const Monomial& g : ideal.generators)
        factors.push_back(g.to_string());
    return assemble(std::move(factors), ideal.n);
}

PolynomialExpr milnor_polynomial(const std::vector<std::string>& generators,
                                 int n) {
    return assemble(generators, n);
}

WeightSystem quasi_homogeneous_weights(const MonomialIdeal& ideal,
                                       const std::vector<long>& x_weights,
                                       std::optional<long> total_degree) {
    if (ideal.generators.empty())
        throw input_error("a weight system needs at least one generator");
    if (static_cast<int>(x_weights.size()) != ideal.n)
        throw input_error("expected " + std::to_string(ideal.n) +
                          " x-weights, got " +
                          std::to_string(x_weights.size()));
    for (long w : x_weights)
        if (w < 1) throw input_error("x-weights must be positive integers");

    std::vector<long> degrees;
    long max_degree = 0;
    for (const Monomial& g : ideal.generators) {
        long deg = g.weighted_degree(x_weights);
        degrees.push_back(deg);
        max_degree = std::max(max_degree, deg);
    }

    WeightSystem ws;
    ws.x_weights = x_weights;
    ws.total_degree = total_degree.value_or(max_degree + 1);
    if (ws.total_degree <= max_degree)
        throw input_error(
            "total degree " + std::to_string(ws.total_degree) +
            " must exceed the largest generator degree " +
            std::to_string(max_degree));
    for (long deg : degrees) ws.y_weights.push_back(ws.total_degree - deg);

    // Re-derive every term's weight from scratch; any mismatch is a bug.
    for (size_t i = 0; i < ideal.generators.size(); ++i) {
        long term = ws.y_weights[i] +
                    ideal.generators[i].weighted_degree(ws.x_weights);
        if (term != ws.total_degree)
            throw internal_error("term " + std::to_string(i + 1) +
                                 " weighs " + std::to_string(term) +
                                 ", expected " +
                                 std::to_string(ws.total_degree));
        if (ws.y_weights[i] < 1)
            throw internal_error("y-weight " + std::to_string(i + 1) +
                                 " is not positive");
    }
    return ws;
}

MilnorReport milnor_report(const MonomialIdeal& ideal,
                           const std::vector<long>& x_weights,
                           std::optional<long> total_degree,
                           bool run_formality_probe,
                           std::optional<int> probe_degree_cap, int threads) {
    MilnorReport report;
    report.polynomial = milnor_polynomial(ideal);
    std::vector<long> weights = x_weights;
    if (weights.empty()) weights.assign(static_cast<size_t>(ideal.n), 1);
    report.weights = quasi_homogeneous_weights(ideal, weights, total_degree);

    FormulaSelection sel;  // subset-sum route: exact groups with torsion
    report.complement = complement_report(ideal, std::nullopt, sel, threads);
    report.monodromy_trivial = true;

    if (run_formality_probe) {
        KoszulModel model =
            KoszulModel::build(complement_model_complex(ideal));
        report.formality =
            formality_probe(model, probe_degree_cap, threads);
        report.formality_verdict = report.formality->witness
                                       ? "non-formality certified"
                                       : "no obstruction found at triple level";
    } else {
        report.formality_verdict = "not computed";
    }
    return report;
}

}  // namespace arrtop
