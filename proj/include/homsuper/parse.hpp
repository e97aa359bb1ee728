#pragma once

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "homsuper/algebra.hpp"
#include "homsuper/errors.hpp"
#include "homsuper/sigma_bracket.hpp"

namespace homsuper {

/// A parsed algebra definition file: the declared name plus the algebra and
/// its twisting map (identity when no alpha lines are present).
struct AlgebraFile {
    std::string name;
    HomSuperAlgebra hom;
};

namespace detail {

struct Token {
    enum class Type { ident, integer, sym, newline, end };
    Type type;
    std::string text;
    int line;
    int col;
};

inline std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Token::Type t, std::string s, int l, int c) {
        out.push_back({t, std::move(s), l, c});
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            push(Token::Type::newline, "\n", line, col);
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == '#') { // comment to end of line
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            ++col;
            continue;
        }
        int startcol = col;
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string s;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                s += text[i++];
                ++col;
            }
            push(Token::Type::ident, std::move(s), line, startcol);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string s;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                s += text[i++];
                ++col;
            }
            push(Token::Type::integer, std::move(s), line, startcol);
            continue;
        }
        if (std::string_view("()=+-*/^:").find(ch) != std::string_view::npos) {
            push(Token::Type::sym, std::string(1, ch), line, startcol);
            ++i;
            ++col;
            continue;
        }
        throw parse_error(std::string("unexpected character '") + ch + "'", line, col);
    }
    push(Token::Type::end, "", line, col);
    return out;
}

/// Recursive-descent scalar expressions over one formal parameter.
/// In combo context the multiplicative chain stops in front of
/// "* <basis name>" so the caller can read off the basis vector.
class ScalarExprParser {
public:
    ScalarExprParser(const std::vector<Token>& toks, std::size_t& pos,
                     const std::optional<std::string>& param, const SuperBasis* basis)
        : toks_(toks), pos_(pos), param_(param), basis_(basis) {}

    Scalar parse_expr() {
        bool neg = false;
        if (is_sym("-")) {
            ++pos_;
            neg = true;
        }
        Scalar acc = parse_term();
        if (neg) acc = -acc;
        while (is_sym("+") || is_sym("-")) {
            bool minus = cur().text == "-";
            ++pos_;
            Scalar t = parse_term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    Scalar parse_term() {
        Scalar acc = parse_factor();
        while (is_sym("*") || is_sym("/")) {
            if (is_sym("*") && stops_before_basis()) break;
            bool divide = cur().text == "/";
            const Token& op = cur();
            ++pos_;
            Scalar f = parse_factor();
            if (divide) {
                if (f.is_zero()) throw parse_error("division by zero in coefficient", op.line, op.col);
                acc = acc / f;
            } else {
                acc = acc * f;
            }
        }
        return acc;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t& pos_;
    const std::optional<std::string>& param_;
    const SuperBasis* basis_;

    const Token& cur() const { return toks_[pos_]; }
    bool is_sym(std::string_view s) const {
        return cur().type == Token::Type::sym && cur().text == s;
    }

    bool stops_before_basis() const {
        // at '*': if the next token is a basis identifier (and not the
        // parameter), the '*' belongs to the combo term, not the scalar
        const Token& next = toks_[pos_ + 1];
        if (next.type != Token::Type::ident) return false;
        if (param_ && next.text == *param_) return false;
        return basis_ != nullptr && basis_->index_of(next.text).has_value();
    }

    Scalar parse_factor() {
        const Token& t = cur();
        if (t.type == Token::Type::integer) {
            ++pos_;
            return Scalar(Rational(BigInt(t.text)));
        }
        if (t.type == Token::Type::ident) {
            if (!param_ || t.text != *param_) {
                if (basis_ && basis_->index_of(t.text))
                    throw parse_error("basis name '" + t.text + "' cannot appear inside a coefficient",
                                      t.line, t.col);
                throw parse_error("unknown identifier '" + t.text +
                                      "' in coefficient (missing param declaration?)",
                                  t.line, t.col);
            }
            ++pos_;
            long long e = 1;
            if (is_sym("^")) {
                ++pos_;
                bool neg = false;
                if (is_sym("-")) {
                    ++pos_;
                    neg = true;
                }
                if (cur().type != Token::Type::integer)
                    throw parse_error("expected integer exponent after '^'", cur().line, cur().col);
                try {
                    e = std::stoll(cur().text);
                } catch (const std::out_of_range&) {
                    throw parse_error("exponent out of range", cur().line, cur().col);
                }
                if (neg) e = -e;
                ++pos_;
            }
            return Scalar::parameter(*param_, e);
        }
        if (is_sym("(")) {
            ++pos_;
            Scalar inner = parse_expr();
            if (!is_sym(")"))
                throw parse_error("expected ')'", cur().line, cur().col);
            ++pos_;
            return inner;
        }
        throw parse_error("expected a number, parameter, or '(' in coefficient", t.line, t.col);
    }
};

class FileParser {
public:
    explicit FileParser(std::string_view text) : toks_(lex(text)) {}

    AlgebraFile parse() {
        collect_declarations();
        parse_body();
        finish();
        return AlgebraFile{name_, HomSuperAlgebra{algebra_, alpha_}};
    }

    /// Map-file mode: basis comes from the host algebra(s); only header,
    /// param and alpha lines are allowed (basis lines must match the host).
    EvenMap parse_map(const SuperBasis& domain, const SuperBasis& codomain,
                      const std::optional<std::string>& host_param) {
        map_domain_ = &domain;
        map_codomain_ = &codomain;
        param_ = host_param;
        collect_declarations();
        basis_ = domain; // names on the left-hand side of alpha lines
        algebra_ = SuperAlgebra(basis_, TableKind::bracket, param_);
        alpha_ = EvenMap::zero_map(codomain.size());
        parse_body();
        for (int i = 0; i < basis_.size(); ++i) {
            if (!alpha_rows_.count(i)) {
                if (domain.size() != codomain.size())
                    throw structural_error("map file: missing line for basis '" + basis_.name(i) + "'");
                alpha_.set(i, i, Scalar(1)); // unspecified rows default to identity
            }
        }
        CheckReport even = even_map_report();
        if (!even.pass())
            throw structural_error("map file: map is not even (first offense: " +
                                   even.violations.front().inputs[0] + " -> " +
                                   even.violations.front().inputs[1] + ")");
        return alpha_;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::string name_;
    std::optional<std::string> param_;
    SuperBasis basis_;
    SuperAlgebra algebra_;
    EvenMap alpha_;
    std::set<std::pair<int, int>> entries_seen_;
    std::set<int> alpha_rows_;
    std::optional<std::string> vocabulary_; // "mul" or "bracket"
    const SuperBasis* map_domain_ = nullptr;
    const SuperBasis* map_codomain_ = nullptr;

    bool map_mode() const { return map_domain_ != nullptr; }

    const Token& cur() const { return toks_[pos_]; }

    void skip_newlines() {
        while (cur().type == detail::Token::Type::newline) ++pos_;
    }

    void expect_line_end(const char* what) {
        if (cur().type != Token::Type::newline && cur().type != Token::Type::end)
            throw parse_error(std::string("unexpected trailing input after ") + what, cur().line,
                              cur().col);
    }

    std::string expect_ident(const char* what) {
        if (cur().type != Token::Type::ident)
            throw parse_error(std::string("expected ") + what, cur().line, cur().col);
        return toks_[pos_++].text;
    }

    void expect_sym(std::string_view s) {
        if (cur().type != Token::Type::sym || cur().text != s)
            throw parse_error("expected '" + std::string(s) + "'", cur().line, cur().col);
        ++pos_;
    }

    // pass 1: header, param and basis declarations
    void collect_declarations() {
        pos_ = 0;
        skip_newlines();
        if (cur().type != Token::Type::ident || cur().text != "algebra")
            throw parse_error("file must start with 'algebra <name>'", cur().line, cur().col);
        ++pos_;
        name_ = expect_ident("algebra name");
        expect_line_end("algebra header");

        while (cur().type != Token::Type::end) {
            skip_newlines();
            if (cur().type == Token::Type::end) break;
            if (cur().type != Token::Type::ident)
                throw parse_error("expected a directive (param/basis/mul/bracket/alpha)",
                                  cur().line, cur().col);
            const Token& head = cur();
            if (head.text == "param") {
                ++pos_;
                std::string p = expect_ident("parameter name");
                if (param_ && *param_ != p)
                    throw parse_error("a file may declare at most one parameter", head.line, head.col);
                param_ = p;
                expect_line_end("param line");
            } else if (head.text == "basis") {
                ++pos_;
                std::string n = expect_ident("basis name");
                expect_sym(":");
                std::string par = expect_ident("'even' or 'odd'");
                if (par != "even" && par != "odd")
                    throw parse_error("basis parity must be 'even' or 'odd'", head.line, head.col);
                if (map_mode()) {
                    auto idx = map_domain_->index_of(n);
                    Parity want = par == "even" ? Parity::even : Parity::odd;
                    if (!idx || map_domain_->parity(*idx) != want)
                        throw parse_error("basis line does not match the host algebra's basis",
                                          head.line, head.col);
                } else {
                    if (basis_.index_of(n))
                        throw parse_error("duplicate basis name '" + n + "'", head.line, head.col);
                    basis_.add(n, par == "even" ? Parity::even : Parity::odd);
                }
                expect_line_end("basis line");
            } else {
                skip_rest_of_line();
            }
        }
        if (param_ && basis_.index_of(*param_))
            throw parse_error("parameter '" + *param_ + "' collides with a basis name", 1, 1);
        if (!map_mode()) {
            algebra_ = SuperAlgebra(basis_, TableKind::bracket, param_);
            alpha_ = EvenMap::identity_map(basis_.size());
        }
    }

    void skip_rest_of_line() {
        while (cur().type != Token::Type::newline && cur().type != Token::Type::end) ++pos_;
    }

    // pass 2: table entries and alpha lines
    void parse_body() {
        pos_ = 0;
        skip_newlines();
        // skip the header
        pos_ += 2;
        while (cur().type != Token::Type::end) {
            skip_newlines();
            if (cur().type == Token::Type::end) break;
            const Token& head = cur();
            if (head.type != Token::Type::ident)
                throw parse_error("expected a directive (param/basis/mul/bracket/alpha)",
                                  head.line, head.col);
            if (head.text == "param" || head.text == "basis") {
                skip_rest_of_line();
            } else if (head.text == "mul" || head.text == "bracket") {
                if (map_mode())
                    throw parse_error("table entries are not allowed in a map file", head.line,
                                      head.col);
                if (vocabulary_ && *vocabulary_ != head.text)
                    throw parse_error("file mixes 'mul' and 'bracket' vocabulary", head.line,
                                      head.col);
                vocabulary_ = head.text;
                ++pos_;
                int i = expect_basis(basis_, "left factor");
                int j = expect_basis(basis_, "right factor");
                expect_sym("=");
                Element v = parse_combo(basis_);
                if (!entries_seen_.insert({i, j}).second)
                    throw parse_error("duplicate table entry for this basis pair", head.line,
                                      head.col);
                algebra_.set_entry(i, j, std::move(v));
                expect_line_end("table entry");
            } else if (head.text == "alpha") {
                ++pos_;
                const SuperBasis& lhs_basis = map_mode() ? *map_domain_ : basis_;
                const SuperBasis& rhs_basis = map_mode() ? *map_codomain_ : basis_;
                int i = expect_basis(lhs_basis, "alpha argument");
                expect_sym("=");
                Element v = parse_combo(rhs_basis);
                if (!alpha_rows_.insert(i).second)
                    throw parse_error("duplicate alpha line for this basis vector", head.line,
                                      head.col);
                for (int k = 0; k < rhs_basis.size(); ++k) alpha_.set(k, i, v.coeff(k));
                expect_line_end("alpha line");
            } else {
                throw parse_error("unknown directive '" + head.text + "'", head.line, head.col);
            }
        }
    }

    int expect_basis(const SuperBasis& basis, const char* what) {
        const Token& t = cur();
        std::string n = expect_ident(what);
        auto idx = basis.index_of(n);
        if (!idx) throw parse_error("undeclared basis name '" + n + "'", t.line, t.col);
        return *idx;
    }

    Element parse_combo(const SuperBasis& basis) {
        // literal zero
        if (cur().type == Token::Type::integer && cur().text == "0") {
            const Token& next = toks_[pos_ + 1];
            if (next.type == Token::Type::newline || next.type == Token::Type::end) {
                ++pos_;
                return Element();
            }
        }
        Element acc;
        bool neg = false;
        if (cur().type == Token::Type::sym && cur().text == "-") {
            ++pos_;
            neg = true;
        }
        acc += parse_combo_term(basis, neg);
        while (cur().type == Token::Type::sym && (cur().text == "+" || cur().text == "-")) {
            bool minus = cur().text == "-";
            ++pos_;
            acc += parse_combo_term(basis, minus);
        }
        return acc;
    }

    Element parse_combo_term(const SuperBasis& basis, bool negate) {
        // bare basis name
        if (cur().type == Token::Type::ident && basis.index_of(cur().text) &&
            !(param_ && cur().text == *param_)) {
            int idx = *basis.index_of(cur().text);
            ++pos_;
            return Element::term(idx, Scalar(negate ? -1 : 1));
        }
        ScalarExprParser sp(toks_, pos_, param_, &basis);
        Scalar c = sp.parse_term();
        expect_sym("*");
        int idx = expect_basis(basis, "basis name after coefficient");
        if (negate) c = -c;
        return Element::term(idx, std::move(c));
    }

    CheckReport even_map_report() {
        CheckReport rep;
        rep.check = "even-map";
        const SuperBasis& dom = *map_domain_;
        const SuperBasis& cod = *map_codomain_;
        for (int i = 0; i < dom.size(); ++i)
            for (int k = 0; k < cod.size(); ++k)
                if (!alpha_.at(k, i).is_zero() && cod.parity(k) != dom.parity(i)) {
                    Element bad = Element::term(k, alpha_.at(k, i));
                    rep.add_violation({dom.name(i), cod.name(k)}, bad, bad.to_string(cod));
                }
        return rep;
    }

    void finish() {
        if (vocabulary_ && *vocabulary_ == "mul") algebra_.set_kind(TableKind::product);
        CheckReport even = check_even_structure(algebra_);
        if (!even.pass()) {
            const auto& v = even.violations.front();
            throw structural_error("table entry (" + v.inputs[0] + ", " + v.inputs[1] +
                                   ") violates evenness at basis vector " + v.inputs[2]);
        }
        CheckReport even_alpha = check_even_map(alpha_, basis_);
        if (!even_alpha.pass()) {
            const auto& v = even_alpha.violations.front();
            throw structural_error("alpha(" + v.inputs[0] + ") violates evenness at basis vector " +
                                   v.inputs[1]);
        }
    }
};

} // namespace detail

/// Parse a complete algebra definition file. Evenness of the table and of
/// alpha is validated; violations surface as structural errors.
inline AlgebraFile parse_algebra_file(std::string_view text) {
    detail::FileParser p(text);
    return p.parse();
}

/// Parse a map file (alpha lines only) against a host basis.
inline EvenMap parse_map_file(std::string_view text, const SuperBasis& domain,
                              const SuperBasis& codomain,
                              const std::optional<std::string>& host_param) {
    detail::FileParser p(text);
    return p.parse_map(domain, codomain, host_param);
}

/// Convenience for a standalone endomorphism file on one algebra.
inline EvenMap parse_alpha_file(std::string_view text, const SuperBasis& basis,
                                const std::optional<std::string>& host_param) {
    return parse_map_file(text, basis, basis, host_param);
}

/// "lo:hi" inclusive.
inline Window parse_window(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw structural_error("window must look like lo:hi");
    try {
        long long lo = std::stoll(std::string(s.substr(0, colon)));
        long long hi = std::stoll(std::string(s.substr(colon + 1)));
        return Window(lo, hi);
    } catch (const std::invalid_argument&) {
        throw structural_error("window must look like lo:hi");
    } catch (const std::out_of_range&) {
        throw structural_error("window bounds out of range");
    }
}

/// "a" or "a/b" with optional sign.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    return Rational(BigInt(std::string(s.substr(0, slash))),
                    BigInt(std::string(s.substr(slash + 1))));
}

} // namespace homsuper
