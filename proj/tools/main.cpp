// cycoh command-line front end: JSON in, JSON or aligned text out.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cycoh/equichern.hpp"
#include "cycoh/json_io.hpp"

namespace {

using namespace cycoh;

Json load_input(const std::string& source) {
    const std::size_t first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '['))
        return parse_json_text(source);
    std::ifstream in(source, std::ios::binary);
    if (!in) throw SchemaError("cannot read input file: " + source);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

void emit(const std::string& output_format, const Json& j, const std::string& text) {
    if (output_format == "json") {
        std::cout << canonical_dump(j);
        return;
    }
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
}

std::string format_matrix(const IntMatrix& a) {
    std::ostringstream out;
    out << "(" << a.rows() << " x " << a.cols() << ")\n";
    if (a.rows() > 0 && a.cols() > 0) out << a << "\n";
    return out.str();
}

std::string format_table(const GradedGroup& table) {
    std::size_t width = 0;
    for (std::int64_t d = 0; d <= table.max_degree(); ++d)
        width = std::max(width, ("H^" + std::to_string(d)).size());
    std::ostringstream out;
    for (std::int64_t d = 0; d <= table.max_degree(); ++d)
        out << std::left << std::setw(static_cast<int>(width)) << ("H^" + std::to_string(d))
            << "  " << table.at(d) << "\n";
    return out.str();
}

std::string format_report(const ExactnessReport& report) {
    std::size_t width = 0;
    std::size_t index_width = 1;
    for (const NodeReport& n : report.nodes) {
        width = std::max(width, to_string(n.group).size());
        index_width = std::max(index_width, std::to_string(n.index).size());
    }
    std::ostringstream out;
    for (const NodeReport& n : report.nodes) {
        out << "node " << std::right << std::setw(static_cast<int>(index_width)) << n.index
            << "  group=" << std::left << std::setw(static_cast<int>(width)) << to_string(n.group)
            << "  composite zero: " << (n.composite_zero ? "yes" : "no ")
            << "  exact: " << (n.exact ? "yes" : "no");
        if (n.homology && !n.homology->is_trivial()) out << "  homology=" << *n.homology;
        out << "\n";
    }
    out << "all exact: " << (report.all_exact ? "yes" : "no") << "\n";
    return out.str();
}

std::string format_verdict(const SurfaceWithAction& s, const Verdict& v) {
    std::ostringstream out;
    out << "surface: " << s.name << "\n";
    out << "admissible: " << (v.admissible ? "yes" : "no") << "\n";
    for (const std::string& violation : v.violations) out << "  violation: " << violation << "\n";
    out << "lhs  H^1(G, H^2(M, Z))      = " << v.lhs << "\n";
    out << "rhs  sum H^1(D, Z) (x) Z/m  = " << v.rhs << "\n";
    out << "isomorphic: " << (v.isomorphic ? "yes" : "no") << "\n";
    return out.str();
}

const Json& require_key(const Json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(std::string(where) + ": missing field '" + key + "'");
    return j.at(key);
}

[[noreturn]] void missing_flag(const std::string& name) {
    throw SchemaError("missing required flag " + name + " for this operation");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycoh: exact cohomology of finite cyclic group actions"};
    app.require_subcommand(1);
    std::string output_format = "json";
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--output", output_format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    // snf
    auto* snf = app.add_subcommand("snf", "Smith normal form with unimodular certificates");
    add_common(snf);
    std::string snf_input;
    snf->add_option("input", snf_input, "matrix as JSON rows [[..],..], file path or inline")
        ->required();
    snf->callback([&] {
        const SnfCertificate cert = smith_normal_form(matrix_from_json(load_input(snf_input), "matrix"));
        emit(output_format, snf_to_json(cert),
             "D " + format_matrix(cert.d) + "U " + format_matrix(cert.u) + "V " +
                 format_matrix(cert.v));
    });

    // groupcoh
    auto* groupcoh = app.add_subcommand("groupcoh", "group cohomology H^i(Z/m, A) of a G-module");
    add_common(groupcoh);
    std::string gc_input;
    std::int64_t gc_degree = 0;
    std::int64_t gc_max = 0;
    groupcoh->add_option("input", gc_input, "G-module JSON {\"m\": .., \"action\": [[..]]}")
        ->required();
    auto* gc_deg_opt = groupcoh->add_option("--degree", gc_degree, "single degree i >= 0")
                           ->check(CLI::NonNegativeNumber);
    auto* gc_max_opt =
        groupcoh->add_option("--max-degree", gc_max, "print the whole table H^0..H^max")
            ->check(CLI::NonNegativeNumber);
    gc_deg_opt->excludes(gc_max_opt);
    groupcoh->callback([&] {
        const GModule a = gmodule_from_json(load_input(gc_input));
        if (gc_max_opt->count() > 0) {
            GradedGroup table(gc_max, Tail::kUnknown);
            for (std::int64_t i = 0; i <= gc_max; ++i) table.set(i, group_cohomology(a, i));
            emit(output_format, graded_to_json(table), format_table(table));
        } else if (gc_deg_opt->count() > 0) {
            const FinAbGroup h = group_cohomology(a, gc_degree);
            Json j;
            j["degree"] = gc_degree;
            j["group"] = to_string(h);
            emit(output_format, j, to_string(h));
        } else {
            missing_flag("--degree or --max-degree");
        }
    });

    // space
    auto* space = app.add_subcommand("space", "standard equivariant cohomology tables");
    add_common(space);
    std::string sp_kind;
    std::string sp_input;
    std::int64_t sp_m = 0;
    std::int64_t sp_n = 0;
    std::int64_t sp_max = 0;
    space
        ->add_option("--kind", sp_kind,
                     "bg | lens | lens-homology | cone-lens | equivariant-rep | k-groups")
        ->required()
        ->check(CLI::IsMember(
            {"bg", "lens", "lens-homology", "cone-lens", "equivariant-rep", "k-groups"}));
    auto* sp_m_opt = space->add_option("--m", sp_m, "group order");
    auto* sp_n_opt = space->add_option("--n", sp_n, "dimension parameter n >= 1");
    auto* sp_max_opt = space->add_option("--max-degree", sp_max, "truncation degree")
                           ->check(CLI::NonNegativeNumber);
    space->add_option("input", sp_input, "fixed-locus table JSON (k-groups only)");
    space->callback([&] {
        if (sp_m_opt->count() == 0) missing_flag("--m");
        const Int m(sp_m);
        GradedGroup table;
        if (sp_kind == "bg" || sp_kind == "equivariant-rep" || sp_kind == "k-groups") {
            if (sp_max_opt->count() == 0) missing_flag("--max-degree");
        } else if (sp_n_opt->count() == 0) {
            missing_flag("--n");
        }
        if (sp_kind == "bg") table = bg_cohomology(m, sp_max);
        else if (sp_kind == "lens") table = lens_cohomology(sp_n, m);
        else if (sp_kind == "lens-homology") table = lens_homology(sp_n, m);
        else if (sp_kind == "cone-lens") table = cone_lens_compact(sp_n, m);
        else if (sp_kind == "equivariant-rep") {
            if (sp_n_opt->count() == 0) missing_flag("--n");
            table = equivariant_rep_compact(sp_n, m, sp_max);
        } else {
            if (sp_input.empty()) missing_flag("the fixed-locus table input");
            table = k_groups(graded_from_json(load_input(sp_input), "fixed_locus"), m, sp_max);
        }
        emit(output_format, graded_to_json(table), format_table(table));
    });

    // kunneth
    auto* kunneth = app.add_subcommand("kunneth", "Kunneth group of a product in one degree");
    add_common(kunneth);
    std::string kn_input;
    std::int64_t kn_degree = 0;
    kunneth->add_option("input", kn_input, "JSON {\"a\": table, \"b\": table}")->required();
    kunneth->add_option("--degree", kn_degree, "degree of the product cohomology")
        ->required()
        ->check(CLI::NonNegativeNumber);
    kunneth->callback([&] {
        const Json j = load_input(kn_input);
        const GradedGroup a = graded_from_json(require_key(j, "a", "kunneth"), "a");
        const GradedGroup b = graded_from_json(require_key(j, "b", "kunneth"), "b");
        const FinAbGroup g = kunneth_degree(a, b, kn_degree);
        Json out;
        out["degree"] = kn_degree;
        out["group"] = to_string(g);
        emit(output_format, out, to_string(g));
    });

    // les-check
    auto* les = app.add_subcommand("les-check", "exactness report for a chain of maps");
    add_common(les);
    std::string les_input;
    les->add_option("input", les_input, "JSON {\"maps\": [{source, target, matrix}, ..]}")
        ->required();
    les->callback([&] {
        const Json j = load_input(les_input);
        const Json& maps_json = require_key(j, "maps", "les-check");
        if (!maps_json.is_array()) throw SchemaError("les-check: 'maps' must be an array");
        std::vector<AbMap> maps;
        for (std::size_t k = 0; k < maps_json.size(); ++k)
            maps.push_back(abmap_from_json(maps_json[k], "maps[" + std::to_string(k) + "]"));
        const ExactnessReport report = exactness_check(maps);
        emit(output_format, exactness_to_json(report), format_report(report));
    });

    // verify-surface
    auto* verify = app.add_subcommand("verify-surface", "check the main isomorphism on a surface");
    add_common(verify);
    std::string vs_input;
    verify->add_option("input", vs_input, "surface-with-action JSON")->required();
    verify->callback([&] {
        const SurfaceWithAction s = surface_from_json(load_input(vs_input));
        const Verdict v = check_main_theorem(s);
        Json j = verdict_to_json(v);
        j["name"] = s.name;
        emit(output_format, j, format_verdict(s, v));
    });

    // double-cover
    auto* cover = app.add_subcommand("double-cover", "branched double cover of the plane, degree 2d");
    add_common(cover);
    std::int64_t dc_d = 0;
    cover->add_option("--d", dc_d, "half the branch curve degree, d >= 1")->required();
    cover->callback([&] {
        const DoubleCoverReport r = double_cover_family(dc_d);
        std::ostringstream text;
        text << "d=" << r.d << "  r=" << r.r << "  genus=" << r.genus << "  lhs="
             << to_string(r.lhs_abstract) << "  rhs=" << to_string(r.rhs_abstract)
             << "  consistent: " << (r.consistent ? "yes" : "no") << "\n";
        emit(output_format, double_cover_to_json(r), text.str());
    });

    // chern
    auto* chern = app.add_subcommand("chern", "equivariant Chern arithmetic in Z[x]/(mx)");
    add_common(chern);
    std::string ch_op;
    std::string ch_p;
    std::string ch_q;
    std::int64_t ch_m = 0;
    std::int64_t ch_j = 0;
    std::int64_t ch_k = 0;
    std::vector<std::int64_t> ch_chern;
    std::vector<std::int64_t> ch_ranks;
    chern->add_option("--op", ch_op, "mul | c1-power | top-chern | leading | unit-check")
        ->required()
        ->check(CLI::IsMember({"mul", "c1-power", "top-chern", "leading", "unit-check"}));
    auto* ch_m_opt = chern->add_option("--m", ch_m, "group order m >= 2");
    auto* ch_p_opt = chern->add_option("--p", ch_p, "polynomial, e.g. \"3 + 2x + x^2\"");
    auto* ch_q_opt = chern->add_option("--q", ch_q, "second polynomial");
    auto* ch_j_opt = chern->add_option("--j", ch_j, "character weight j");
    auto* ch_k_opt = chern->add_option("--k", ch_k, "power k >= 0")->check(CLI::NonNegativeNumber);
    auto* ch_c_opt = chern->add_option("--chern", ch_chern, "total Chern coefficients c0,..,cn")
                         ->delimiter(',');
    auto* ch_r_opt =
        chern->add_option("--ranks", ch_ranks, "isotypic ranks n0,..,n(m-1)")->delimiter(',');
    chern->callback([&] {
        if (ch_m_opt->count() == 0) missing_flag("--m");
        const Int m(ch_m);
        Json j;
        j["op"] = ch_op;
        std::string text;
        if (ch_op == "mul") {
            if (ch_p_opt->count() == 0) missing_flag("--p");
            if (ch_q_opt->count() == 0) missing_flag("--q");
            text = to_string(
                bg_mul(bg_polynomial_from_string(m, ch_p), bg_polynomial_from_string(m, ch_q)));
            j["result"] = text;
        } else if (ch_op == "c1-power") {
            if (ch_j_opt->count() == 0) missing_flag("--j");
            if (ch_k_opt->count() == 0) missing_flag("--k");
            text = to_string(c1_power_character(m, Int(ch_j), ch_k));
            j["result"] = text;
        } else if (ch_op == "top-chern") {
            if (ch_c_opt->count() == 0) missing_flag("--chern");
            if (ch_j_opt->count() == 0) missing_flag("--j");
            std::vector<Int> coeffs(ch_chern.begin(), ch_chern.end());
            text = to_string(top_chern_tensor_character(coeffs, Int(ch_j), m));
            j["result"] = text;
        } else {
            if (ch_r_opt->count() == 0) missing_flag("--ranks");
            const IsotypicRanks ranks{m, ch_ranks};
            validate(ranks);
            if (ch_op == "leading") {
                const Int lead = top_chern_leading_coefficient(ranks);
                text = lead.str();
                j["result"] = to_int64(lead);
            } else {
                const bool ok = gysin_unit_check(ranks);
                text = ok ? "true" : "false";
                j["result"] = ok;
            }
        }
        emit(output_format, j, text);
    });

    // p1-ring
    auto* p1 = app.add_subcommand("p1-ring", "arithmetic in Z[x,h]/(mx, h^2+xh)");
    add_common(p1);
    std::string p1_op;
    std::string p1_p;
    std::string p1_q;
    std::string p1_point;
    std::string p1_class;
    std::int64_t p1_m = 0;
    std::int64_t p1_degree = 0;
    std::int64_t p1_max = 0;
    p1->add_option("--op", p1_op, "mul | gysin | graded-piece | injectivity")
        ->required()
        ->check(CLI::IsMember({"mul", "gysin", "graded-piece", "injectivity"}));
    auto* p1_m_opt = p1->add_option("--m", p1_m, "group order m >= 2");
    auto* p1_p_opt = p1->add_option("--p", p1_p, "ring element, e.g. \"h + x + 5x^2h\"");
    auto* p1_q_opt = p1->add_option("--q", p1_q, "second ring element");
    auto* p1_pt_opt = p1->add_option("--point", p1_point, "zero | infinity")
                          ->check(CLI::IsMember({"zero", "infinity"}));
    auto* p1_cls_opt = p1->add_option("--class", p1_class, "BG class to push forward");
    auto* p1_deg_opt = p1->add_option("--degree", p1_degree, "degree of the graded piece")
                           ->check(CLI::NonNegativeNumber);
    auto* p1_max_opt = p1->add_option("--max-degree", p1_max, "degree bound for the kernel scan")
                           ->check(CLI::NonNegativeNumber);
    p1->callback([&] {
        if (p1_m_opt->count() == 0) missing_flag("--m");
        const Int m(p1_m);
        Json j;
        j["op"] = p1_op;
        std::string text;
        if (p1_op == "mul") {
            if (p1_p_opt->count() == 0) missing_flag("--p");
            if (p1_q_opt->count() == 0) missing_flag("--q");
            text = to_string(
                p1_mul(p1_element_from_string(m, p1_p), p1_element_from_string(m, p1_q)));
            j["result"] = text;
        } else if (p1_op == "gysin") {
            if (p1_pt_opt->count() == 0) missing_flag("--point");
            if (p1_cls_opt->count() == 0) missing_flag("--class");
            const P1Point point = p1_point == "zero" ? P1Point::kZero : P1Point::kInfinity;
            text = to_string(p1_gysin(m, point, bg_polynomial_from_string(m, p1_class)));
            j["result"] = text;
        } else if (p1_op == "graded-piece") {
            if (p1_deg_opt->count() == 0) missing_flag("--degree");
            text = to_string(p1_graded_piece(m, p1_degree));
            j["result"] = text;
        } else {
            if (p1_max_opt->count() == 0) missing_flag("--max-degree");
            const bool ok = p1_gysin_injectivity(m, p1_max);
            text = ok ? "true" : "false";
            j["result"] = ok;
        }
        emit(output_format, j, text);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const TorsionFixedLocusError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
