#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homsuper/algebra.hpp"
#include "homsuper/parse.hpp"
#include "homsuper/report.hpp"
#include "homsuper/version.hpp"

namespace homsuper {

/// Render an algebra (and its non-identity alpha) in the definition file
/// grammar. Output is deterministic: basis order, then table entries by
/// ordered index pair, then alpha lines by basis index.
inline std::string export_algebra(const AlgebraFile& file) {
    const SuperAlgebra& A = file.hom.algebra;
    const SuperBasis& basis = A.basis();
    std::ostringstream out;
    out << "algebra " << file.name << "\n";
    std::optional<std::string> param = A.parameter();
    if (!param) param = file.hom.alpha.param();
    if (param) out << "param " << *param << "\n";
    for (int i = 0; i < basis.size(); ++i)
        out << "basis " << basis.name(i) << " : " << (basis.parity(i) == Parity::even ? "even" : "odd")
            << "\n";
    const char* vocab = A.kind() == TableKind::product ? "mul" : "bracket";
    for (const auto& [ij, value] : A.table()) {
        out << vocab << " " << basis.name(ij.first) << " " << basis.name(ij.second) << " = "
            << value.to_string(basis) << "\n";
    }
    if (!file.hom.alpha.is_identity()) {
        for (int i = 0; i < basis.size(); ++i) {
            Element img = file.hom.alpha.column(i);
            if (img == Element::unit(i)) continue;
            out << "alpha " << basis.name(i) << " = " << img.to_string(basis) << "\n";
        }
    }
    return out.str();
}

/// Flat, render-ready view of any check report, the unit the CLI emits.
struct ReportDocument {
    std::string check;
    bool pass = true;
    long long examined = 0;
    long long violations_total = 0;
    struct Violation {
        std::vector<std::string> inputs;
        std::string residual;
        std::optional<std::string> residual_at;
    };
    std::vector<Violation> violations;
    std::vector<std::string> notes;
};

template <typename Residual>
ReportDocument make_document(const BasicCheckReport<Residual>& rep) {
    ReportDocument doc;
    doc.check = rep.check;
    doc.pass = rep.pass();
    doc.examined = rep.examined;
    doc.violations_total = rep.violations_total;
    for (const auto& v : rep.violations) doc.violations.push_back({v.inputs, v.residual_text, {}});
    doc.notes = rep.notes;
    return doc;
}

/// make_document plus an evaluated column at a sample parameter value.
inline ReportDocument make_document_at(const CheckReport& rep, const SuperBasis& basis,
                                       const std::string& param_name, const Rational& value) {
    ReportDocument doc = make_document(rep);
    for (std::size_t i = 0; i < rep.violations.size(); ++i) {
        const Element& r = rep.violations[i].residual;
        std::string rendered;
        for (const auto& [k, c] : r.coords()) {
            Rational rv = eval_at(c, value);
            std::string term;
            if (rv.is_zero()) continue;
            if (rv.is_one()) term = basis.name(k);
            else if ((-rv).is_one()) term = "-" + basis.name(k);
            else term = rv.to_string() + "*" + basis.name(k);
            if (rendered.empty()) rendered = term;
            else if (term.front() == '-') rendered += " - " + term.substr(1);
            else rendered += " + " + term;
        }
        if (rendered.empty()) rendered = "0";
        doc.violations[i].residual_at = param_name + "=" + value.to_string() + ": " + rendered;
    }
    return doc;
}

enum class ReportFormat { text, json };

inline std::string render_text(const ReportDocument& doc) {
    std::ostringstream out;
    out << "check " << doc.check << ": " << (doc.pass ? "PASS" : "FAIL") << " (examined "
        << doc.examined << ", violations " << doc.violations_total;
    if (static_cast<long long>(doc.violations.size()) < doc.violations_total)
        out << ", showing " << doc.violations.size();
    out << ")\n";
    for (const auto& n : doc.notes) out << "  note: " << n << "\n";
    for (const auto& v : doc.violations) {
        out << "  (";
        for (std::size_t i = 0; i < v.inputs.size(); ++i) out << (i ? ", " : "") << v.inputs[i];
        out << "): residual = " << v.residual;
        if (v.residual_at) out << "  | at " << *v.residual_at;
        out << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["check"] = doc.check;
    j["status"] = doc.pass ? "pass" : "fail";
    nlohmann::ordered_json viols = nlohmann::ordered_json::array();
    for (const auto& v : doc.violations) {
        nlohmann::ordered_json jv;
        jv["inputs"] = v.inputs;
        jv["residual"] = v.residual;
        if (v.residual_at) jv["residual_at"] = *v.residual_at;
        viols.push_back(std::move(jv));
    }
    j["violations"] = std::move(viols);
    j["violations_total"] = doc.violations_total;
    j["examined"] = doc.examined;
    j["notes"] = doc.notes;
    j["version"] = kVersion;
    return j;
}

/// One text block per report, or a single JSON document (object for one
/// report, array otherwise).
inline std::string render_reports(const std::vector<ReportDocument>& docs, ReportFormat fmt) {
    if (fmt == ReportFormat::text) {
        std::string out;
        for (const auto& d : docs) out += render_text(d);
        return out;
    }
    if (docs.size() == 1) return to_json(docs[0]).dump(2) + "\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& d : docs) arr.push_back(to_json(d));
    return arr.dump(2) + "\n";
}

} // namespace homsuper
