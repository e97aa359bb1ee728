#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homsuper/homsuper.hpp"

namespace homsuper {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw structural_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw structural_error("cannot write file '" + path + "'");
    outf << content;
}

struct AtValue {
    std::string param;
    Rational value;
};

/// "--at lambda=2" or "--at 2" (parameter name optional).
inline AtValue parse_at(const std::string& s, const std::optional<std::string>& algebra_param) {
    auto eq = s.find('=');
    std::string name;
    std::string val = s;
    if (eq != std::string::npos) {
        name = s.substr(0, eq);
        val = s.substr(eq + 1);
    }
    if (!name.empty() && algebra_param && name != *algebra_param)
        throw structural_error("--at parameter '" + name + "' does not match the algebra parameter '" +
                               *algebra_param + "'");
    if (name.empty()) name = algebra_param ? *algebra_param : "p";
    return {name, parse_rational(val)};
}

} // namespace detail

/// Parse and execute one CLI invocation (without the program name).
/// Exit codes: 0 all checks pass, 1 a check failed, 2 parse/structural error.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact symbolic checker for Z2-graded Hom-algebra identities", "homsuper"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string format = "text";
    std::size_t max_violations = kDefaultMaxViolations;
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-violations", max_violations, "max violations stored per report")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

    struct {
        std::string file;
        std::string identity;
        std::string mode = "jacobi";
        std::string at;
    } check_opts;
    CLI::App* check = app.add_subcommand("check", "run an identity check on an algebra file");
    check->fallthrough();
    check->add_option("file", check_opts.file, "algebra definition file")->required();
    check->add_option("--identity", check_opts.identity,
                      "hom-assoc | hom-lie-super | hom-leibniz | admissible | g-assoc:G1..G6")
        ->required();
    check->add_option("--mode", check_opts.mode, "admissibility route")
        ->check(CLI::IsMember({"jacobi", "s-criterion"}));
    check->add_option("--at", check_opts.at, "evaluate residuals at param=<rational>");

    struct {
        std::string file;
        std::string alpha;
        std::string out_path;
    } twist_opts;
    CLI::App* twist_cmd = app.add_subcommand("twist", "twist a Lie superalgebra by an endomorphism");
    twist_cmd->fallthrough();
    twist_cmd->add_option("file", twist_opts.file, "algebra definition file")->required();
    twist_cmd->add_option("--alpha", twist_opts.alpha, "endomorphism file (alpha lines)")->required();
    twist_cmd->add_option("--out", twist_opts.out_path, "write the twisted algebra here");

    struct {
        std::string id;
        std::string export_path;
    } builtin_opts;
    CLI::App* builtin_cmd = app.add_subcommand("builtin", "print or export a builtin algebra");
    builtin_cmd->fallthrough();
    builtin_cmd->add_option("id", builtin_opts.id, "osp12 | osp12-lambda | abelian2 | affine3")
        ->required();
    builtin_cmd->add_option("--export", builtin_opts.export_path, "write the algebra file here");

    struct {
        std::string window;
        std::string what;
    } qwitt_opts;
    CLI::App* qwitt_cmd = app.add_subcommand("qwitt", "verify the q-deformed Witt superalgebra");
    qwitt_cmd->fallthrough();
    qwitt_cmd->add_option("--window", qwitt_opts.window, "inclusive index range lo:hi")->required();
    qwitt_cmd->add_option("--check", qwitt_opts.what, "jacobi | structure | conditions")
        ->required()
        ->check(CLI::IsMember({"jacobi", "structure", "conditions"}));

    struct {
        std::string file_a;
        std::string file_b;
        std::string map;
    } morphism_opts;
    CLI::App* morphism_cmd = app.add_subcommand("morphism", "verify a morphism of Hom-superalgebras");
    morphism_cmd->fallthrough();
    morphism_cmd->add_option("fileA", morphism_opts.file_a, "source algebra file")->required();
    morphism_cmd->add_option("fileB", morphism_opts.file_b, "target algebra file")->required();
    morphism_cmd->add_option("--map", morphism_opts.map, "map file (alpha lines: source -> target)")
        ->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    ReportFormat fmt = format == "json" ? ReportFormat::json : ReportFormat::text;
    std::vector<ReportDocument> docs;

    try {
        if (app.got_subcommand(check)) {
            AlgebraFile f = parse_algebra_file(detail::read_file(check_opts.file));
            CheckReport rep;
            const std::string& id = check_opts.identity;
            if (id == "hom-assoc") {
                rep = check_hom_associative_super(f.hom, max_violations);
            } else if (id == "hom-lie-super") {
                rep = check_hom_lie_super(f.hom, max_violations);
            } else if (id == "hom-leibniz") {
                rep = check_hom_leibniz(f.hom, max_violations);
            } else if (id == "admissible") {
                AdmissibleMode mode = check_opts.mode == "s-criterion" ? AdmissibleMode::s_criterion
                                                                       : AdmissibleMode::jacobi;
                rep = check_hom_lie_admissible(f.hom, mode, max_violations);
            } else if (id.rfind("g-assoc:", 0) == 0) {
                std::string g = id.substr(8);
                if (g.size() != 2 || g[0] != 'G' || g[1] < '1' || g[1] > '6')
                    throw structural_error("unknown subgroup '" + g + "' (use G1..G6)");
                rep = check_g_hom_associative(f.hom, static_cast<SubgroupId>(g[1] - '1'),
                                              max_violations);
            } else {
                throw structural_error("unknown identity '" + id + "'");
            }
            if (!check_opts.at.empty()) {
                detail::AtValue at = detail::parse_at(check_opts.at, f.hom.algebra.parameter());
                docs.push_back(make_document_at(rep, f.hom.algebra.basis(), at.param, at.value));
            } else {
                docs.push_back(make_document(rep));
            }
        } else if (app.got_subcommand(twist_cmd)) {
            AlgebraFile f = parse_algebra_file(detail::read_file(twist_opts.file));
            EvenMap alpha = parse_alpha_file(detail::read_file(twist_opts.alpha),
                                             f.hom.algebra.basis(), f.hom.algebra.parameter());
            HomSuperAlgebra twisted = yau_twist(f.hom.algebra, alpha);
            std::string text = export_algebra(AlgebraFile{f.name + "_twisted", twisted});
            if (!twist_opts.out_path.empty())
                detail::write_file(twist_opts.out_path, text);
            else
                out << text;
            return 0;
        } else if (app.got_subcommand(builtin_cmd)) {
            auto id = builtin_from_string(builtin_opts.id);
            if (!id) throw structural_error("unknown builtin '" + builtin_opts.id + "'");
            HomSuperAlgebra h = builtin(*id);
            std::string file_name = builtin_opts.id;
            for (char& c : file_name)
                if (c == '-') c = '_';
            std::string text = export_algebra(AlgebraFile{file_name, h});
            if (!builtin_opts.export_path.empty())
                detail::write_file(builtin_opts.export_path, text);
            else
                out << text;
            return 0;
        } else if (app.got_subcommand(qwitt_cmd)) {
            Window w = parse_window(qwitt_opts.window);
            if (qwitt_opts.what == "conditions") {
                QhlConfig cfg = qwitt_config();
                docs.push_back(make_document(check_sigma_derivation(cfg, w, max_violations)));
                docs.push_back(make_document(check_bracket_conditions(cfg, w, max_violations)));
            } else if (qwitt_opts.what == "structure") {
                docs.push_back(make_document(check_qwitt_structure(w, "q", max_violations)));
            } else {
                docs.push_back(make_document(check_qwitt_hom_lie(w, "q", max_violations)));
                docs.push_back(
                    make_document(check_qhl_identity(qwitt_config(), w, max_violations)));
            }
        } else if (app.got_subcommand(morphism_cmd)) {
            AlgebraFile a = parse_algebra_file(detail::read_file(morphism_opts.file_a));
            AlgebraFile b = parse_algebra_file(detail::read_file(morphism_opts.file_b));
            EvenMap f = parse_map_file(detail::read_file(morphism_opts.map), a.hom.algebra.basis(),
                                       b.hom.algebra.basis(), a.hom.algebra.parameter());
            docs.push_back(make_document(check_morphism(f, a.hom, b.hom, max_violations)));
        }
    } catch (const twist_precondition_error& e) {
        docs.push_back(make_document(e.report()));
        out << render_reports(docs, fmt);
        err << "twist rejected: " << e.what() << "\n";
        return 1;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const unsupported_input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const evaluation_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const arithmetic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << render_reports(docs, fmt);
    for (const auto& d : docs)
        if (!d.pass) return 1;
    return 0;
}

} // namespace homsuper
