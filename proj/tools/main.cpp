// Command-line front end for the springer library: membership decisions,
// construction traces, meander statistics, intersection classification,
// enumeration and the exhaustive validation suite.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "springer/springer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitValidation = 3;

using namespace springer;

struct Options {
    std::string tau;
    std::string T;
    std::string S;
    std::string shape;
    std::string criterion = "dominance";
    std::string svg_path;
    std::string dot_path;
    std::string batch_path;
    std::string list = "standard";
    std::string family;
    int max_boxes = 0;
    bool trace = false;
    bool machine = false;
};

std::vector<Criterion> applicable_families(const YoungDiagram& shape) {
    const auto fam = classify(shape);
    std::vector<Criterion> out;
    if (fam.hook) out.push_back(Criterion::hook_A);
    if (fam.two_row) out.push_back(Criterion::two_row_A);
    if (fam.two_column) out.push_back(Criterion::two_col_A);
    return out;
}

bool run_inductive(const RowStandardTableau& tau, const StandardTableau& t, Criterion family) {
    switch (family) {
        case Criterion::hook_A: return hook_A(tau, t);
        case Criterion::two_row_A: return two_row_A(tau, t);
        case Criterion::two_col_A: return two_col_A(tau, t);
        default: throw std::invalid_argument("not a family criterion");
    }
}

int decide_member(const RowStandardTableau& tau, const StandardTableau& t,
                  const std::string& criterion, std::ostream& out) {
    const auto families = applicable_families(tau.shape());
    if (families.empty()) {
        std::cerr << "error: membership undecided for general shapes\n";
        return kExitInput;
    }

    std::vector<std::pair<std::string, bool>> verdicts;
    if (criterion == "dominance" || criterion == "all")
        verdicts.emplace_back("dominance", member(tau, t).member);
    if (criterion == "inductive" || criterion == "all")
        for (Criterion f : families)
            verdicts.emplace_back(criterion_name(f), run_inductive(tau, t, f));
    if (criterion == "construct" || criterion == "all") {
        // one label for the construction route; every applicable algorithm
        // must agree with it
        bool first = true;
        for (Criterion f : families) {
            const bool success = construct(tau, t, f).success;
            if (first)
                verdicts.emplace_back("constructible", success);
            else if (success != verdicts.back().second)
                verdicts.emplace_back(std::string(criterion_name(f)) + ":construct", success);
            first = false;
        }
    }
    if (verdicts.empty()) {
        std::cerr << "error: unknown criterion \"" << criterion << "\"\n";
        return kExitInput;
    }

    bool agree = true;
    for (const auto& [name, value] : verdicts) agree = agree && value == verdicts[0].second;

    out << (verdicts[0].second ? "true" : "false") << " (";
    for (std::size_t k = 0; k < verdicts.size(); ++k) {
        if (k > 0) out << (agree ? "=" : "; ");
        out << verdicts[k].first;
        if (!agree) out << (verdicts[k].second ? "=true" : "=false");
    }
    out << ")\n";

    if (!agree) {
        std::cerr << "error: criteria disagree\n";
        return kExitValidation;
    }
    return verdicts[0].second ? kExitOk : kExitFalse;
}

int cmd_member(const Options& opt) {
    if (!opt.batch_path.empty()) {
        std::ifstream in(opt.batch_path);
        if (!in) {
            std::cerr << "error: cannot open " << opt.batch_path << "\n";
            return kExitInput;
        }
        std::string line;
        int status = kExitOk;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto sep = line.find('|');
            if (sep == std::string::npos) {
                std::cerr << "error: batch line without '|': " << line << "\n";
                return kExitInput;
            }
            const auto tau = RowStandardTableau::parse(line.substr(0, sep));
            const auto t = StandardTableau::parse(line.substr(sep + 1));
            std::ostringstream verdict;
            const int code = decide_member(tau, t, opt.criterion, verdict);
            if (code == kExitValidation || code == kExitInput) return code;
            std::cout << line << " -> " << verdict.str();
            if (code == kExitFalse) status = kExitFalse;
        }
        return status;
    }
    const auto tau = RowStandardTableau::parse(opt.tau);
    const auto t = StandardTableau::parse(opt.T);
    if (tau.shape() != t.shape()) {
        std::cerr << "error: shape mismatch between tau and T\n";
        return kExitInput;
    }
    return decide_member(tau, t, opt.criterion, std::cout);
}

int cmd_construct(const Options& opt) {
    const auto tau = RowStandardTableau::parse(opt.tau);
    const auto t = StandardTableau::parse(opt.T);
    if (tau.shape() != t.shape()) {
        std::cerr << "error: shape mismatch between tau and T\n";
        return kExitInput;
    }
    auto families = applicable_families(tau.shape());
    if (!opt.family.empty()) {
        Criterion wanted;
        if (opt.family == "hook")
            wanted = Criterion::hook_A;
        else if (opt.family == "two-row")
            wanted = Criterion::two_row_A;
        else if (opt.family == "two-column")
            wanted = Criterion::two_col_A;
        else {
            std::cerr << "error: unknown family \"" << opt.family << "\"\n";
            return kExitInput;
        }
        if (std::find(families.begin(), families.end(), wanted) == families.end()) {
            std::cerr << "error: shape is not of the requested family\n";
            return kExitInput;
        }
        families = {wanted};
    }
    if (families.empty()) {
        std::cerr << "error: no construction algorithm for general shapes\n";
        return kExitInput;
    }
    std::optional<bool> first;
    for (Criterion f : families) {
        const auto result = construct(tau, t, f);
        std::cout << criterion_name(f) << ": ";
        if (result.success)
            std::cout << "constructible\n";
        else
            std::cout << "fails at step " << result.failure_step << ", kind "
                      << result.failure_kind << " (" << result.failure_label << ")\n";
        if (opt.trace) std::cout << result.render();
        if (first.has_value() && *first != result.success) {
            std::cerr << "error: construction algorithms disagree\n";
            return kExitValidation;
        }
        first = result.success;
    }
    return *first ? kExitOk : kExitFalse;
}

int cmd_meander(const Options& opt) {
    const auto t = StandardTableau::parse(opt.T);
    const auto s = StandardTableau::parse(opt.S);
    const auto m = meander(t, s);
    const auto inter = intersection_2row(t, s);
    std::cout << (m.even ? "even" : "odd") << ", loops=" << m.loops << ", intervals=[";
    for (std::size_t k = 0; k < m.interval_lengths.size(); ++k) {
        if (k > 0) std::cout << ",";
        std::cout << m.interval_lengths[k];
    }
    std::cout << "], codim1=" << (inter.codim_one ? "true" : "false") << "\n";
    if (!opt.svg_path.empty()) {
        std::ofstream out(opt.svg_path);
        if (!out) {
            std::cerr << "error: cannot write " << opt.svg_path << "\n";
            return kExitInput;
        }
        out << render_svg(m);
        std::cout << "wrote " << opt.svg_path << "\n";
    }
    return kExitOk;
}

int cmd_intersect(const Options& opt) {
    if (!opt.shape.empty()) {
        const auto shape = YoungDiagram::parse(opt.shape);
        ShapeUniverse universe;
        const auto graph = intersection_graph(shape, universe);
        std::cout << "shape " << shape.to_string() << ": " << graph.nodes.size()
                  << " components, " << graph.edges.size() << " intersecting pairs\n";
        for (const auto& e : graph.edges)
            std::cout << graph.nodes[e.a].to_string() << " | " << graph.nodes[e.b].to_string()
                      << (e.codim_one ? "  [codim 1]" : "") << "\n";
        if (!opt.dot_path.empty()) {
            std::ofstream out(opt.dot_path);
            if (!out) {
                std::cerr << "error: cannot write " << opt.dot_path << "\n";
                return kExitInput;
            }
            out << graph.to_dot();
            std::cout << "wrote " << opt.dot_path << "\n";
        }
        return kExitOk;
    }

    const auto t = StandardTableau::parse(opt.T);
    const auto s = StandardTableau::parse(opt.S);
    if (t.shape() != s.shape()) {
        std::cerr << "error: shape mismatch between T and S\n";
        return kExitInput;
    }
    const auto fam = classify(t.shape());
    if (!fam.any()) {
        std::cerr << "error: intersection classification undecided for general shapes\n";
        return kExitInput;
    }
    if (fam.two_row) {
        const auto inter = intersection_2row(t, s);
        std::cout << "two-row: nonempty=" << (inter.nonempty ? "true" : "false");
        if (inter.dim) std::cout << ", dim=" << *inter.dim;
        std::cout << ", codim1=" << (inter.codim_one ? "true" : "false") << "\n";
    }
    if (fam.hook) {
        const auto inter = hook_intersection(t, s);
        std::cout << "hook: nonempty=" << (inter.nonempty ? "true" : "false");
        if (inter.codim) std::cout << ", codim=" << *inter.codim;
        std::cout << ", codim1=" << (inter.codim_one ? "true" : "false") << "\n";
    }
    if (fam.two_column) {
        std::cout << "two-column: nonempty=true, codim1="
                  << (two_col_codim_one(t, s) ? "true" : "false") << "\n";
    }
    return kExitOk;
}

int cmd_vogan(const Options& opt) {
    const auto shape = YoungDiagram::parse(opt.shape);
    const auto pairs = vogan_set(shape);
    std::cout << pairs.size() << " pairs\n";
    for (const auto& p : pairs)
        std::cout << p.first.to_string() << " | " << p.second.to_string() << "\n";
    return kExitOk;
}

int cmd_enumerate(const Options& opt) {
    const auto shape = YoungDiagram::parse(opt.shape);
    if (opt.list == "standard") {
        for (const auto& t : enumerate_standard(shape)) std::cout << t.to_string() << "\n";
    } else if (opt.list == "row-standard") {
        for (const auto& t : enumerate_row_standard(shape)) std::cout << t.to_string() << "\n";
    } else if (opt.list == "k-pairs") {
        ShapeUniverse universe;
        for (const auto& [tau, t] : k_pairs(shape, universe))
            std::cout << tau.to_string() << "|" << t.to_string() << "\n";
    } else {
        std::cerr << "error: unknown listing \"" << opt.list << "\"\n";
        return kExitInput;
    }
    return kExitOk;
}

int cmd_cross_validate(const Options& opt) {
    ShapeUniverse universe;
    std::vector<std::pair<YoungDiagram, CheckSet>> suite;
    if (!opt.shape.empty())
        suite.emplace_back(YoungDiagram::parse(opt.shape), CheckSet::all());
    else
        suite = default_suite(opt.max_boxes > 0 ? opt.max_boxes : 8);

    bool ok = true;
    for (const auto& [shape, checks] : suite) {
        const auto report = cross_validate(shape, universe, checks);
        ok = ok && report.ok();
        std::cout << (opt.machine ? report.to_machine() : report.to_table());
    }
    std::cout << (ok ? "all checks passed\n" : "CHECKS FAILED\n");
    return ok ? kExitOk : kExitValidation;
}

int cmd_schuetzenberger(const Options& opt) {
    const auto t = StandardTableau::parse(opt.T);
    std::cout << schuetzenberger(t).to_string() << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torus-fixed flags in Springer fiber components: membership, construction\n"
                 "traces, meanders and intersection classification on hook, two-row and\n"
                 "two-column shapes."};
    app.require_subcommand(1);
    Options opt;

    auto* member_cmd = app.add_subcommand("member", "Decide whether tau lies in the component of T");
    member_cmd->add_option("--tau", opt.tau, "row-standard tableau, e.g. \"2,3,5/4/1\"");
    member_cmd->add_option("--T", opt.T, "standard tableau");
    member_cmd->add_option("--criterion", opt.criterion, "dominance|inductive|construct|all")
        ->capture_default_str();
    member_cmd->add_option("--batch", opt.batch_path, "file with one tau|T pair per line");

    auto* construct_cmd = app.add_subcommand("construct", "Run the insertion algorithm for the pair");
    construct_cmd->add_option("--tau", opt.tau, "row-standard tableau")->required();
    construct_cmd->add_option("--T", opt.T, "standard tableau")->required();
    construct_cmd->add_option("--family", opt.family,
                              "hook|two-row|two-column (default: every applicable)");
    construct_cmd->add_flag("--trace", opt.trace, "print every intermediate state");

    auto* meander_cmd = app.add_subcommand("meander", "Meander statistics of two standard tableaux");
    meander_cmd->add_option("--T", opt.T, "standard tableau (arcs above)")->required();
    meander_cmd->add_option("--S", opt.S, "standard tableau (arcs below)")->required();
    meander_cmd->add_option("--svg", opt.svg_path, "write an SVG drawing to this path");

    auto* intersect_cmd =
        app.add_subcommand("intersect", "Classify the intersection of two components");
    intersect_cmd->add_option("--T", opt.T, "standard tableau");
    intersect_cmd->add_option("--S", opt.S, "standard tableau");
    intersect_cmd->add_option("--shape", opt.shape, "classify all pairs of this shape");
    intersect_cmd->add_option("--dot", opt.dot_path, "write the intersection graph as DOT");

    auto* vogan_cmd = app.add_subcommand("vogan", "Pairs generated by the swap transformations");
    vogan_cmd->add_option("--shape", opt.shape, "shape, e.g. \"5,4\"")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "List tableaux or member pairs of a shape");
    enum_cmd->add_option("--shape", opt.shape, "shape")->required();
    bool list_standard = false, list_row_standard = false, list_k_pairs = false;
    enum_cmd->add_flag("--standard", list_standard, "standard tableaux (default)");
    enum_cmd->add_flag("--row-standard", list_row_standard, "row-standard tableaux");
    enum_cmd->add_flag("--k-pairs", list_k_pairs, "pairs tau|T with tau in the component of T");

    auto* validate_cmd =
        app.add_subcommand("cross-validate", "Run the consistency suite over small shapes");
    validate_cmd->add_option("--shape", opt.shape, "validate a single shape");
    validate_cmd->add_option("--max-boxes", opt.max_boxes, "validate the default suite up to here");
    validate_cmd->add_flag("--machine", opt.machine, "machine-readable report lines");

    auto* schuetz_cmd = app.add_subcommand("schuetzenberger", "Schützenberger transform of T");
    schuetz_cmd->add_option("--T", opt.T, "standard tableau")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (member_cmd->parsed()) {
            if (opt.batch_path.empty() && (opt.tau.empty() || opt.T.empty())) {
                std::cerr << "error: member needs --tau and --T (or --batch)\n";
                return kExitInput;
            }
            return cmd_member(opt);
        }
        if (construct_cmd->parsed()) return cmd_construct(opt);
        if (meander_cmd->parsed()) return cmd_meander(opt);
        if (intersect_cmd->parsed()) {
            if (opt.shape.empty() && (opt.T.empty() || opt.S.empty())) {
                std::cerr << "error: intersect needs --T and --S, or --shape\n";
                return kExitInput;
            }
            return cmd_intersect(opt);
        }
        if (vogan_cmd->parsed()) return cmd_vogan(opt);
        if (enum_cmd->parsed()) {
            if (list_k_pairs) opt.list = "k-pairs";
            if (list_row_standard) opt.list = "row-standard";
            if (list_standard) opt.list = "standard";
            return cmd_enumerate(opt);
        }
        if (validate_cmd->parsed()) return cmd_cross_validate(opt);
        if (schuetz_cmd->parsed()) return cmd_schuetzenberger(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        // Internal consistency tripwires, e.g. disagreeing classifiers.
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
