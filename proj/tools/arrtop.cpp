#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrtop/arrangement.hpp"
#include "arrtop/complement.hpp"
#include "arrtop/errors.hpp"
#include "arrtop/koszul.hpp"
#include "arrtop/milnor.hpp"
#include "arrtop/moment_angle.hpp"
#include "arrtop/parse.hpp"
#include "arrtop/report_io.hpp"

namespace {

using namespace arrtop;

struct InputSource {
    std::string path;
    std::string inline_text;
};

void add_input_options(CLI::App* cmd, InputSource& source) {
    cmd->add_option("input", source.path,
                    "input file: a monomial ideal (one generator per line, "
                    "x1*x2*x5 or {1,2,5}) or an arrangement (n=<int> header, "
                    "then one {i,j,...} per line); '-' reads stdin");
    cmd->add_option("--inline", source.inline_text,
                    "inline input instead of a file; ';' separates lines");
}

ParsedInput load_input(const InputSource& source) {
    if (!source.path.empty() && !source.inline_text.empty())
        throw input_error("pass an input file or --inline, not both");
    std::string text;
    if (!source.inline_text.empty()) {
        text = source.inline_text;
        for (char& c : text)
            if (c == ';') c = '\n';
    } else if (source.path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (!source.path.empty()) {
        text = read_text_file(source.path);
    } else {
        throw input_error("no input: pass a file path, '-', or --inline");
    }
    return parse_input_text(text);
}

FormulaSelection selection_from(const std::string& formula) {
    FormulaSelection sel;
    sel.hochster = formula == "hochster" || formula == "all";
    sel.gm = formula == "gm" || formula == "all";
    sel.oracle = formula == "oracle" || formula == "all";
    return sel;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << content;
}

// Boundary matrices of the model complex (reduced simplicial chains) and,
// when the oracle route is selected, of the moment-angle cell complex, one
// coordinate-format file per degree.
void dump_matrices(const std::string& dir, const MonomialIdeal& ideal,
                   bool with_oracle) {
    std::filesystem::create_directories(dir);
    SimplicialComplex K = complement_model_complex(ideal);
    ChainComplex simplicial = simplicial_chain_complex(K, true);
    for (size_t i = 0; i < simplicial.slots(); ++i)
        write_file(dir + "/complex_boundary_" +
                       std::to_string(simplicial.degree_of_slot(i)) + ".txt",
                   simplicial.boundaries[i].coordinate_format());
    if (with_oracle) {
        ChainComplex cells = moment_angle_complex(K);
        for (size_t i = 0; i < cells.slots(); ++i)
            write_file(dir + "/oracle_boundary_" +
                           std::to_string(cells.degree_of_slot(i)) + ".txt",
                       cells.boundaries[i].coordinate_format());
    }
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_complement(const InputSource& source, const std::string& formula,
                   bool json, int threads, const std::string& dump_dir) {
    ParsedInput parsed = load_input(source);
    MonomialIdeal ideal = ideal_of(parsed);
    std::optional<Arrangement> given;
    if (const auto* arr = std::get_if<Arrangement>(&parsed)) given = *arr;
    FormulaSelection sel = selection_from(formula);
    if (!dump_dir.empty()) dump_matrices(dump_dir, ideal, sel.oracle);
    ComplementReport report = complement_report(ideal, given, sel, threads);
    if (json)
        print_json(complement_report_to_json(report));
    else
        std::cout << complement_report_to_text(report);
    return 0;
}

int cmd_milnor(const InputSource& source, bool json, int threads,
               const std::vector<long>& x_weights,
               std::optional<long> total_degree, bool formality,
               std::optional<int> degree_cap) {
    MonomialIdeal ideal = ideal_of(load_input(source));
    MilnorReport report = milnor_report(ideal, x_weights, total_degree,
                                        formality, degree_cap, threads);
    if (json)
        print_json(milnor_report_to_json(report, ideal));
    else
        std::cout << milnor_report_to_text(report, ideal);
    return 0;
}

int cmd_union_ideal(const InputSource& source, bool json) {
    MonomialIdeal ideal = ideal_of(load_input(source));
    if (json)
        print_json(union_ideal_to_json(ideal));
    else
        std::cout << union_ideal_to_text(ideal);
    return 0;
}

int cmd_massey(const InputSource& source, bool json, int threads,
               std::optional<int> degree_cap) {
    MonomialIdeal ideal = ideal_of(load_input(source));
    KoszulModel model = KoszulModel::build(complement_model_complex(ideal));
    FormalityReport report = formality_probe(model, degree_cap, threads);
    if (json)
        print_json(formality_report_to_json(model, report));
    else
        std::cout << formality_report_to_text(model, report);
    return 0;
}

int cmd_oracle_check(const InputSource& source, bool json, int threads) {
    MonomialIdeal ideal = ideal_of(load_input(source));
    GradedAbelianGroup subset_sum = hochster_homology(ideal, threads);
    GradedAbelianGroup oracle =
        oracle_homology(complement_model_complex(ideal));
    bool agree = subset_sum == oracle;
    if (json) {
        ordered_json out = ordered_json::object();
        out["schema"] = 1;
        ordered_json gens = ordered_json::array();
        for (const Monomial& g : ideal.generators)
            gens.push_back(g.to_string());
        out["ideal"] = std::move(gens);
        out["n"] = ideal.n;
        out["subset_sum"] = homology_to_json(subset_sum);
        out["oracle"] = homology_to_json(oracle);
        out["agree"] = agree;
        print_json(out);
    } else {
        std::cout << "subset-sum: " << subset_sum.to_text() << '\n';
        std::cout << "moment-angle oracle: " << oracle.to_text() << '\n';
        std::cout << "agreement: " << (agree ? "yes" : "NO") << '\n';
    }
    if (!agree)
        throw verification_error(
            "subset-sum and moment-angle answers disagree: " +
            subset_sum.to_text() + " vs " + oracle.to_text());
    return 0;
}

// The built-in reference input: the union of the five coordinate 2-planes
// V(x_i, x_{i+1}), i = 1..5, inside C^6, with every number it determines.
struct ReferenceExample {
    Arrangement arrangement;
    std::vector<std::string> generators;
    GradedAbelianGroup homology;
    std::vector<long> betti;
    std::string polynomial;
    std::vector<long> y_weights;
    long total_degree;
};

ReferenceExample reference_example() {
    ReferenceExample ref;
    ref.arrangement.n = 6;
    for (int i = 1; i <= 5; ++i)
        ref.arrangement.subspaces.push_back(set_of({i, i + 1}));
    ref.generators = {"x1*x3*x4*x6", "x1*x3*x5", "x2*x3*x5", "x2*x4*x6",
                      "x2*x4*x5"};
    ref.homology.add_rank(0, 1);
    ref.homology.add_rank(3, 5);
    ref.homology.add_rank(4, 4);
    ref.homology.add_rank(6, 3);
    ref.homology.add_rank(7, 4);
    ref.homology.add_rank(8, 1);
    ref.betti = {1, 0, 0, 5, 4, 0, 3, 4, 1};
    ref.polynomial =
        "y1*x1*x3*x4*x6 + y2*x1*x3*x5 + y3*x2*x3*x5 + y4*x2*x4*x6 + "
        "y5*x2*x4*x5";
    ref.y_weights = {1, 2, 2, 2, 2};
    ref.total_degree = 5;
    return ref;
}

int cmd_verify_example(int threads) {
    ReferenceExample ref = reference_example();
    int failures = 0;
    auto check = [&](bool ok, const std::string& what,
                     const std::string& expected, const std::string& got) {
        if (ok) {
            std::cout << "ok: " << what << " = " << got << '\n';
        } else {
            std::cout << "MISMATCH: " << what << ": expected " << expected
                      << ", got " << got << '\n';
            ++failures;
        }
    };

    MonomialIdeal ideal = union_ideal(ref.arrangement);
    std::vector<std::string> gens;
    for (const Monomial& g : ideal.generators) gens.push_back(g.to_string());
    std::vector<std::string> sorted_got = gens, sorted_want = ref.generators;
    std::sort(sorted_got.begin(), sorted_got.end());
    std::sort(sorted_want.begin(), sorted_want.end());
    auto join = [](const std::vector<std::string>& v) {
        std::string out;
        for (size_t i = 0; i < v.size(); ++i)
            out += (i ? ", " : "") + v[i];
        return out;
    };
    check(sorted_got == sorted_want, "union ideal generators",
          join(ref.generators), join(gens));

    GradedAbelianGroup hochster = hochster_homology(ideal, threads);
    check(hochster == ref.homology, "subset-sum homology",
          ref.homology.to_text(), hochster.to_text());

    std::vector<long> gm = goresky_macpherson_betti(ref.arrangement);
    auto betti_text = [](const std::vector<long>& b) {
        std::string out;
        for (size_t i = 0; i < b.size(); ++i)
            out += (i ? " " : "") + std::to_string(b[i]);
        return out;
    };
    check(gm == ref.betti, "poset-route Betti numbers", betti_text(ref.betti),
          betti_text(gm));

    SimplicialComplex K = complement_model_complex(ideal);
    GradedAbelianGroup oracle = oracle_homology(K);
    check(oracle == ref.homology, "moment-angle oracle homology",
          ref.homology.to_text(), oracle.to_text());

    TriState sc = simply_connected_codim_check(ref.arrangement);
    check(sc == TriState::certified_true, "simple connectivity",
          "certified-true", to_string(sc));

    // The polynomial pairs y_i with the i-th generator, so it is checked
    // against the reference list in its stored order (the recomputed union
    // ideal sorts generators by vertex order instead).
    std::string reference_lines;
    for (const std::string& g : ref.generators)
        reference_lines += g + "\n";
    MonomialIdeal ordered_ideal = parse_ideal_text(reference_lines);
    PolynomialExpr poly = milnor_polynomial(ordered_ideal);
    check(poly.to_text() == ref.polynomial && poly.variable_count() == 11,
          "polynomial (11 variables)", ref.polynomial, poly.to_text());

    WeightSystem ws = quasi_homogeneous_weights(
        ordered_ideal, std::vector<long>(6, 1), ref.total_degree);
    auto weights_text = [](const std::vector<long>& w) {
        std::string out;
        for (size_t i = 0; i < w.size(); ++i)
            out += (i ? " " : "") + std::to_string(w[i]);
        return out;
    };
    check(ws.y_weights == ref.y_weights, "y-weights at total degree 5",
          weights_text(ref.y_weights), weights_text(ws.y_weights));

    KoszulModel model = KoszulModel::build(K);
    std::vector<long> ranks;
    for (int d = 0; d <= model.top_degree(); ++d)
        ranks.push_back(
            static_cast<long>(cohomology_classes(model, d).size()));
    while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
    check(ranks == ref.betti, "cochain model cohomology ranks",
          betti_text(ref.betti), betti_text(ranks));

    FormalityReport probe = formality_probe(model, std::nullopt, threads);
    check(probe.witness.has_value(), "nontrivial triple Massey product",
          "non-formality certified",
          probe.witness ? "non-formality certified"
                        : "no obstruction found at triple level");

    if (failures == 0) {
        std::cout << "all checks passed\n";
        return 0;
    }
    throw verification_error(std::to_string(failures) +
                             " reference check(s) failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coordinate subspace arrangement complements: homology by "
        "subset-sum and poset formulas, a moment-angle oracle, Milnor-fibre "
        "polynomials, and Massey-product formality probes"};
    app.require_subcommand(1);

    InputSource source;
    bool json = false;
    int threads = 1;
    std::string formula = "hochster";
    std::string dump_dir;
    std::vector<long> x_weights;
    long total_degree = 0;
    int degree_cap = 0;
    bool formality = false;

    CLI::App* complement = app.add_subcommand(
        "complement", "homology of the complement of V(ideal)");
    add_input_options(complement, source);
    complement->add_option("--formula", formula,
                           "route: subset-sum (hochster), intersection-poset "
                           "Betti (gm), cellular oracle, or all cross-checked")
        ->check(CLI::IsMember({"hochster", "gm", "oracle", "all"}));
    complement->add_flag("--json", json, "emit the JSON report");
    complement->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);
    complement->add_option("--dump-matrices", dump_dir,
                           "write boundary matrices (row col value) here");

    CLI::App* milnor =
        app.add_subcommand("milnor", "Milnor-fibre report for the ideal");
    add_input_options(milnor, source);
    milnor->add_flag("--json", json, "emit the JSON report");
    milnor->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);
    CLI::Option* total_degree_opt = milnor->add_option(
        "--total-degree", total_degree,
        "weighted degree of the polynomial (default: max generator degree "
        "+ 1)");
    milnor->add_option("--x-weights", x_weights,
                       "comma-separated positive x-weights (default: all 1)")
        ->delimiter(',');
    milnor->add_flag("--formality", formality,
                     "also run the Massey triple-product probe");
    CLI::Option* milnor_cap_opt = milnor->add_option(
        "--degree-cap", degree_cap, "total-degree cap for the probe");

    CLI::App* union_ideal_cmd = app.add_subcommand(
        "union-ideal", "minimal generators of the arrangement's ideal");
    add_input_options(union_ideal_cmd, source);
    union_ideal_cmd->add_flag("--json", json, "emit the JSON report");

    CLI::App* massey = app.add_subcommand(
        "massey", "triple Massey product scan over the cochain model");
    add_input_options(massey, source);
    massey->add_flag("--json", json, "emit the JSON report");
    massey->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);
    CLI::Option* massey_cap_opt = massey->add_option(
        "--degree-cap", degree_cap,
        "only scan triples with p+q+r up to this total degree");

    CLI::App* oracle_check = app.add_subcommand(
        "oracle-check",
        "compare the subset-sum answer against the cellular oracle");
    add_input_options(oracle_check, source);
    oracle_check->add_flag("--json", json, "emit the JSON report");
    oracle_check->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);

    CLI::App* verify_example = app.add_subcommand(
        "verify-example",
        "recompute the built-in C^6 reference example (five coordinate "
        "2-planes) and compare every number against the stored answers");
    verify_example->add_option("--threads", threads, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*complement)
            return cmd_complement(source, formula, json, threads, dump_dir);
        if (*milnor) {
            std::optional<long> d;
            if (*total_degree_opt) d = total_degree;
            std::optional<int> cap;
            if (*milnor_cap_opt) cap = degree_cap;
            return cmd_milnor(source, json, threads, x_weights, d, formality,
                              cap);
        }
        if (*union_ideal_cmd) return cmd_union_ideal(source, json);
        if (*massey) {
            std::optional<int> cap;
            if (*massey_cap_opt) cap = degree_cap;
            return cmd_massey(source, json, threads, cap);
        }
        if (*oracle_check) return cmd_oracle_check(source, json, threads);
        if (*verify_example) return cmd_verify_example(threads);
        throw internal_error("no subcommand dispatched");
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const verification_error& e) {
        std::cerr << "verification mismatch: " << e.what() << '\n';
        return 3;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
