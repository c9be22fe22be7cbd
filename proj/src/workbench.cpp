#include "hsw/workbench.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace hsw {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message), line_(line),
      column_(column)
{
}

namespace {

template <class T>
const T* find_named(const std::vector<Named<T>>& v, const std::string& name)
{
    for (const auto& n : v)
        if (n.name == name)
            return &n.value;
    return nullptr;
}

template <class T>
const T& lookup(const std::vector<Named<T>>& v, const std::string& name, const char* kind)
{
    if (const auto* p = find_named(v, name))
        return *p;
    throw UnresolvedReference(std::string("no ") + kind + " named '" + name + "'");
}

} // namespace

const SuperAlgebra& Workbench::algebra(const std::string& name) const { return lookup(algebras, name, "algebra"); }
const DendriformAlgebra& Workbench::dendriform(const std::string& name) const
{
    return lookup(dendriforms, name, "dendriform algebra");
}
const MapDef& Workbench::map(const std::string& name) const { return lookup(maps, name, "map"); }
const Representation& Workbench::rep(const std::string& name) const { return lookup(reps, name, "representation").rep; }
const TensorElement& Workbench::tensor(const std::string& name) const { return lookup(tensors, name, "tensor").tensor; }
const BilinearForm& Workbench::form(const std::string& name) const { return lookup(forms, name, "form").form; }
bool Workbench::has_algebra(const std::string& name) const { return find_named(algebras, name) != nullptr; }
bool Workbench::has_dendriform(const std::string& name) const { return find_named(dendriforms, name) != nullptr; }

namespace {

enum class Tok { ident, number, symbol };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column;
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) { return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80; }

std::vector<Token> tokenize(const std::string& line, std::size_t lineno)
{
    std::vector<Token> out;
    std::size_t i = 0;
    const auto n = line.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(line[i]);
        if (c == '#')
            break;
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (ident_start(c)) {
            while (i < n && ident_char(static_cast<unsigned char>(line[i])))
                ++i;
            // A trailing '*' belongs to the name (dual basis) unless an operand follows it.
            while (i < n && line[i] == '*') {
                const auto next = i + 1 < n ? static_cast<unsigned char>(line[i + 1]) : ' ';
                if (std::isalnum(next) || next == '(' || next == '_' || next == '-' || next >= 0x80)
                    break;
                ++i;
            }
            out.push_back({Tok::ident, line.substr(start, i - start), start + 1});
        } else if (std::isdigit(c)) {
            while (i < n && std::isdigit(static_cast<unsigned char>(line[i])))
                ++i;
            out.push_back({Tok::number, line.substr(start, i - start), start + 1});
        } else if (std::string_view("+-*/^()=:").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Tok::symbol, std::string(1, static_cast<char>(c)), start + 1});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", lineno, start + 1);
        }
    }
    return out;
}

/// Recursive-descent evaluator for rational coefficient expressions.
class ExprParser {
public:
    ExprParser(const std::vector<Token>& toks, std::size_t begin, std::size_t end, std::size_t lineno,
               const std::map<std::string, mpq_class>& params)
        : t_(toks), pos_(begin), end_(end), line_(lineno), params_(params)
    {
    }

    mpq_class parse_all()
    {
        auto v = expr();
        if (pos_ != end_)
            fail("unexpected '" + t_[pos_].text + "' in coefficient", t_[pos_].column);
        return v;
    }

private:
    mpq_class expr()
    {
        auto v = term();
        while (pos_ < end_ && is_symbol("+-")) {
            const char op = t_[pos_++].text[0];
            auto r = term();
            v = op == '+' ? mpq_class(v + r) : mpq_class(v - r);
        }
        return v;
    }

    mpq_class term()
    {
        auto v = power();
        while (pos_ < end_ && is_symbol("*/")) {
            const auto& tok = t_[pos_++];
            auto r = power();
            if (tok.text == "/") {
                if (r == 0)
                    fail("division by zero in coefficient", tok.column);
                v /= r;
            } else {
                v *= r;
            }
        }
        return v;
    }

    /// factor [^ [-]integer]
    mpq_class power()
    {
        auto v = factor();
        if (pos_ < end_ && is_symbol("^")) {
            const auto& caret = t_[pos_++];
            bool negative = false;
            if (pos_ < end_ && is_symbol("-")) {
                negative = true;
                ++pos_;
            }
            if (pos_ >= end_ || t_[pos_].kind != Tok::number)
                fail("expected an integer exponent", caret.column);
            const auto e = std::stoul(t_[pos_++].text);
            mpq_class r = 1;
            for (unsigned long k = 0; k < e; ++k)
                r *= v;
            if (negative) {
                if (r == 0)
                    fail("division by zero in coefficient", caret.column);
                r = 1 / r;
            }
            v = r;
        }
        return v;
    }

    mpq_class factor()
    {
        if (pos_ >= end_)
            fail("expected a coefficient", end_ < t_.size() ? t_[end_].column : last_column());
        const auto& tok = t_[pos_];
        if (tok.kind == Tok::symbol && tok.text == "-") {
            ++pos_;
            return -power();
        }
        if (tok.kind == Tok::symbol && tok.text == "+") {
            ++pos_;
            return power();
        }
        if (tok.kind == Tok::symbol && tok.text == "(") {
            ++pos_;
            auto v = expr();
            if (pos_ >= end_ || t_[pos_].text != ")")
                fail("missing ')'", pos_ < end_ ? t_[pos_].column : last_column());
            ++pos_;
            return v;
        }
        if (tok.kind == Tok::number) {
            ++pos_;
            return mpq_class(tok.text, 10);
        }
        if (tok.kind == Tok::ident) {
            const auto it = params_.find(tok.text);
            if (it == params_.end())
                fail("unknown parameter '" + tok.text + "'", tok.column);
            ++pos_;
            return it->second;
        }
        fail("unexpected '" + tok.text + "'", tok.column);
    }

    bool is_symbol(const char* set) const
    {
        return t_[pos_].kind == Tok::symbol && std::string_view(set).find(t_[pos_].text[0]) != std::string_view::npos;
    }

    std::size_t last_column() const { return t_.empty() ? 1 : t_.back().column + t_.back().text.size(); }

    [[noreturn]] void fail(const std::string& msg, std::size_t col) const { throw ParseError(msg, line_, col); }

    const std::vector<Token>& t_;
    std::size_t pos_;
    std::size_t end_;
    std::size_t line_;
    const std::map<std::string, mpq_class>& params_;
};

enum class BlockKind { none, params, algebra, dendriform, map, rep, tensor, form };

struct Entry {
    std::size_t line;
    std::size_t column;
};

struct Block {
    BlockKind kind = BlockKind::none;
    std::string name;
    std::size_t line = 0;
    std::size_t name_column = 0;

    std::optional<GradedSpace> space;
    bool supercommutative = false;
    // algebra / dendriform
    std::optional<ProductTensor> product, left, right;
    std::map<std::pair<std::size_t, std::size_t>, Entry> product_seen, left_seen, right_seen;
    std::optional<Matrix> twist;
    std::set<std::size_t> twist_seen;
    // map / rep / tensor / form
    std::string target;
    std::optional<Matrix> matrix;
    std::set<std::size_t> image_seen;
    std::map<std::pair<std::size_t, std::size_t>, Entry> entry_seen;
    std::vector<Matrix> action;
    std::set<std::pair<std::size_t, std::size_t>> action_seen;
    std::string directive;
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Workbench run()
    {
        std::istringstream in(text_);
        std::string line;
        while (std::getline(in, line)) {
            ++lineno_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            toks_ = tokenize(line, lineno_);
            if (toks_.empty())
                continue;
            if (block_.kind == BlockKind::none)
                top_level();
            else if (is_word(0, "end"))
                close_block();
            else
                block_line();
        }
        if (block_.kind != BlockKind::none)
            throw ParseError("block '" + block_.name + "' is missing 'end'", block_.line, 1);
        return std::move(wb_);
    }

private:
    // ---- helpers -------------------------------------------------------------------------

    [[noreturn]] void fail(const std::string& msg, std::size_t col) const { throw ParseError(msg, lineno_, col); }

    std::size_t end_column() const { return toks_.back().column + toks_.back().text.size(); }

    bool is_word(std::size_t i, const char* w) const
    {
        return i < toks_.size() && toks_[i].kind == Tok::ident && toks_[i].text == w;
    }

    const Token& ident_at(std::size_t i, const char* what) const
    {
        if (i >= toks_.size())
            fail(std::string("expected ") + what, end_column());
        if (toks_[i].kind != Tok::ident)
            fail(std::string("expected ") + what + ", found '" + toks_[i].text + "'", toks_[i].column);
        return toks_[i];
    }

    void expect_symbol(std::size_t i, const char* s) const
    {
        if (i >= toks_.size())
            fail(std::string("expected '") + s + "'", end_column());
        if (toks_[i].text != s)
            fail(std::string("expected '") + s + "', found '" + toks_[i].text + "'", toks_[i].column);
    }

    void expect_end(std::size_t i) const
    {
        if (i < toks_.size())
            fail("unexpected '" + toks_[i].text + "'", toks_[i].column);
    }

    Scalar to_field(const mpq_class& q, std::size_t col) const
    {
        try {
            return Scalar::from_rational(wb_.field, q);
        } catch (const DivisionByZero&) {
            fail("coefficient " + q.get_str() + " has no value in " + wb_.field.name(), col);
        }
    }

    Scalar coefficient(std::size_t begin, std::size_t end) const
    {
        if (begin == end)
            fail("expected a coefficient", begin < toks_.size() ? toks_[begin].column : end_column());
        ExprParser p(toks_, begin, end, lineno_, params_);
        return to_field(p.parse_all(), toks_[begin].column);
    }

    std::size_t basis_index(const GradedSpace& sp, const Token& tok, const char* what) const
    {
        const auto i = sp.index_of(tok.text);
        if (i == sp.dim())
            fail(std::string("unresolved ") + what + " '" + tok.text + "'", tok.column);
        return i;
    }

    /// Parses `<coeff> <id> [+ <coeff> <id> ...]` from token `begin` to the end of the line.
    /// `expected` is the parity each component must have.
    Vector combination(std::size_t begin, const GradedSpace& sp, Parity expected) const
    {
        Vector v = zero_vector(wb_.field, sp.dim());
        if (begin >= toks_.size())
            fail("expected a linear combination", end_column());
        std::size_t i = begin;
        bool first = true;
        while (i < toks_.size()) {
            int sign = 1;
            if (!first) {
                if (toks_[i].kind != Tok::symbol || (toks_[i].text != "+" && toks_[i].text != "-"))
                    fail("expected '+' or '-' between terms, found '" + toks_[i].text + "'", toks_[i].column);
                sign = toks_[i].text == "-" ? -1 : 1;
                ++i;
            }
            const std::size_t cstart = i;
            int depth = 0;
            std::size_t j = i;
            for (; j < toks_.size(); ++j) {
                const auto& t = toks_[j];
                if (t.text == "(")
                    ++depth;
                else if (t.text == ")")
                    --depth;
                else if (depth == 0 && t.kind == Tok::ident && sp.index_of(t.text) != sp.dim()) {
                    if (params_.count(t.text))
                        fail("'" + t.text + "' is both a parameter and a basis element", t.column);
                    break;
                }
            }
            if (j == toks_.size()) {
                // Only a bare zero may stand without a basis element.
                const auto k = coefficient(cstart, j);
                if (first && k.is_zero())
                    return v;
                const auto& bad = toks_[j - 1];
                if (bad.kind == Tok::ident && !params_.count(bad.text))
                    fail("unresolved basis element '" + bad.text + "'", bad.column);
                fail("expected a basis element after the coefficient", end_column());
            }
            Scalar k = Scalar::one(wb_.field);
            if (j > cstart) {
                const bool only_minus = j == cstart + 1 && toks_[cstart].text == "-";
                const bool only_plus = j == cstart + 1 && toks_[cstart].text == "+";
                if (only_minus)
                    k = -k;
                else if (!only_plus)
                    k = coefficient(cstart, j);
            }
            if (sign < 0)
                k = -k;
            const auto idx = sp.index_of(toks_[j].text);
            if (!k.is_zero() && sp.parity(idx) != expected)
                fail("parity violation: '" + toks_[j].text + "' is " + parity_name(sp.parity(idx)) + ", expected "
                         + parity_name(expected),
                     toks_[j].column);
            v[idx] += k;
            first = false;
            i = j + 1;
        }
        return v;
    }

    template <class T>
    void require_unique(const std::vector<Named<T>>& v, const Token& name, const char* kind) const
    {
        if (find_named(v, name.text))
            fail(std::string("duplicate ") + kind + " '" + name.text + "'", name.column);
    }

    // ---- top level -----------------------------------------------------------------------

    void top_level()
    {
        const auto& head = ident_at(0, "a directive");
        const auto& w = head.text;
        if (w == "field") {
            if (defined_any_)
                fail("'field' must precede all definitions", head.column);
            if (field_seen_)
                fail("duplicate 'field' directive", head.column);
            field_seen_ = true;
            std::string spec;
            for (std::size_t i = 1; i < toks_.size(); ++i)
                spec += toks_[i].text;
            if (spec == "Q" || spec == "QQ" || spec == "rationals") {
                wb_.field = Field::rationals();
            } else if (spec.size() > 2 && (spec.rfind("gf", 0) == 0 || spec.rfind("GF", 0) == 0)) {
                std::string digits = spec.substr(2);
                if (!digits.empty() && digits.front() == '(' && digits.back() == ')')
                    digits = digits.substr(1, digits.size() - 2);
                try {
                    std::size_t used = 0;
                    const auto p = std::stoul(digits, &used);
                    if (used != digits.size())
                        throw Error("bad prime");
                    wb_.field = Field::prime(static_cast<std::uint32_t>(p));
                } catch (const std::exception&) {
                    fail("unsupported field '" + spec + "'", toks_.size() > 1 ? toks_[1].column : end_column());
                }
            } else {
                fail("unsupported field '" + spec + "'", toks_.size() > 1 ? toks_[1].column : end_column());
            }
            return;
        }
        block_ = Block{};
        block_.line = lineno_;
        if (w == "params") {
            expect_end(1);
            block_.kind = BlockKind::params;
            return;
        }
        const auto& name = ident_at(1, "a name");
        block_.name = name.text;
        block_.name_column = name.column;
        defined_any_ = true;
        if (w == "algebra" || w == "dendriform") {
            if (w == "algebra")
                require_unique(wb_.algebras, name, "algebra");
            else
                require_unique(wb_.dendriforms, name, "dendriform algebra");
            expect_end(2);
            block_.kind = w == "algebra" ? BlockKind::algebra : BlockKind::dendriform;
            return;
        }
        const char* link = w == "rep" ? "of" : "on";
        if (w != "map" && w != "rep" && w != "tensor" && w != "form")
            fail("unknown directive '" + w + "'", head.column);
        if (!is_word(2, link))
            fail(std::string("expected '") + link + "'", toks_.size() > 2 ? toks_[2].column : end_column());
        const auto& target = ident_at(3, "a name");
        expect_end(4);
        block_.target = target.text;
        const auto f = wb_.field;
        if (w == "map") {
            require_unique(wb_.maps, name, "map");
            block_.kind = BlockKind::map;
            if (const auto* a = find_named(wb_.algebras, target.text)) {
                block_.space = a->space();
                block_.matrix = Matrix(f, a->dim(), a->dim());
            } else if (const auto* r = find_named(wb_.reps, target.text)) {
                block_.space = r->rep.space();
                block_.matrix = Matrix(f, r->rep.base().dim(), r->rep.dim());
            } else {
                fail("unresolved reference '" + target.text + "' (no algebra or representation)", target.column);
            }
            return;
        }
        const auto* a = find_named(wb_.algebras, target.text);
        if (!a)
            fail("unresolved algebra '" + target.text + "'", target.column);
        if (w == "rep") {
            require_unique(wb_.reps, name, "representation");
            block_.kind = BlockKind::rep;
        } else if (w == "tensor") {
            require_unique(wb_.tensors, name, "tensor");
            block_.kind = BlockKind::tensor;
            block_.matrix = Matrix(f, a->dim(), a->dim());
        } else {
            require_unique(wb_.forms, name, "form");
            block_.kind = BlockKind::form;
            block_.matrix = Matrix(f, a->dim(), a->dim());
        }
    }

    // ---- block bodies --------------------------------------------------------------------

    void block_line()
    {
        switch (block_.kind) {
        case BlockKind::params:
            return params_line();
        case BlockKind::algebra:
        case BlockKind::dendriform:
            return algebra_line();
        case BlockKind::map:
            return map_line();
        case BlockKind::rep:
            return rep_line();
        case BlockKind::tensor:
        case BlockKind::form:
            return entry_line();
        case BlockKind::none:
            break;
        }
    }

    void params_line()
    {
        const auto& name = ident_at(0, "a parameter name");
        expect_symbol(1, "=");
        if (params_.count(name.text))
            fail("duplicate parameter '" + name.text + "'", name.column);
        ExprParser p(toks_, 2, toks_.size(), lineno_, params_);
        if (toks_.size() <= 2)
            fail("expected a value", end_column());
        const auto v = p.parse_all();
        params_[name.text] = v;
        wb_.params.push_back({name.text, v});
    }

    void basis_line()
    {
        if (block_.space)
            fail("duplicate 'basis' line", toks_[0].column);
        std::vector<Parity> par;
        std::vector<std::string> names;
        std::size_t i = 1;
        while (i < toks_.size()) {
            const auto& id = ident_at(i, "a basis name");
            expect_symbol(i + 1, ":");
            const auto& kind = ident_at(i + 2, "'even' or 'odd'");
            if (kind.text != "even" && kind.text != "odd")
                fail("expected 'even' or 'odd', found '" + kind.text + "'", kind.column);
            for (const auto& n : names)
                if (n == id.text)
                    fail("duplicate basis element '" + id.text + "'", id.column);
            names.push_back(id.text);
            par.push_back(kind.text == "even" ? Parity::even : Parity::odd);
            i += 3;
        }
        block_.space = GradedSpace(std::move(par), std::move(names));
    }

    const GradedSpace& need_space() const
    {
        if (!block_.space)
            fail("'basis' must come first", toks_[0].column);
        return *block_.space;
    }

    void algebra_line()
    {
        const auto& head = ident_at(0, "a directive");
        const auto& w = head.text;
        const auto f = wb_.field;
        if (w == "basis") {
            basis_line();
            const auto n = block_.space->dim();
            block_.product = block_.left = block_.right = ProductTensor(f, n);
            block_.twist = Matrix::identity(f, n);
            return;
        }
        if (w == "supercommutative" && block_.kind == BlockKind::algebra) {
            expect_end(1);
            block_.supercommutative = true;
            return;
        }
        const auto& sp = need_space();
        if (w == "twist") {
            const auto& id = ident_at(1, "a basis element");
            const auto i = basis_index(sp, id, "basis element");
            expect_symbol(2, "=");
            if (!block_.twist_seen.insert(i).second)
                fail("duplicate twist image for '" + id.text + "'", id.column);
            const auto v = combination(3, sp, sp.parity(i));
            for (std::size_t k = 0; k < sp.dim(); ++k)
                (*block_.twist)(k, i) = v[k];
            return;
        }
        const bool is_product = w == "product" && block_.kind == BlockKind::algebra;
        const bool is_left = w == "left" && block_.kind == BlockKind::dendriform;
        const bool is_right = w == "right" && block_.kind == BlockKind::dendriform;
        if (!is_product && !is_left && !is_right)
            fail("unknown directive '" + w + "'", head.column);
        auto& tensor = is_product ? *block_.product : is_left ? *block_.left : *block_.right;
        auto& seen = is_product ? block_.product_seen : is_left ? block_.left_seen : block_.right_seen;
        const auto& a = ident_at(1, "a basis element");
        const auto& b = ident_at(2, "a basis element");
        const auto i = basis_index(sp, a, "basis element");
        const auto j = basis_index(sp, b, "basis element");
        expect_symbol(3, "=");
        if (!seen.emplace(std::make_pair(i, j), Entry{lineno_, head.column}).second)
            fail("duplicate definition of " + w + " " + a.text + " " + b.text, head.column);
        const auto v = combination(4, sp, sp.parity(i) + sp.parity(j));
        for (std::size_t k = 0; k < sp.dim(); ++k)
            tensor(i, j, k) = v[k];
    }

    void map_line()
    {
        const auto& sp = *block_.space;
        const auto& head = ident_at(0, "'image'");
        if (head.text != "image")
            fail("unknown directive '" + head.text + "'", head.column);
        const auto& id = ident_at(1, "a basis element");
        const auto j = basis_index(sp, id, "basis element");
        expect_symbol(2, "=");
        if (!block_.image_seen.insert(j).second)
            fail("duplicate image for '" + id.text + "'", id.column);
        const auto& target = target_space();
        const auto v = combination(3, target, sp.parity(j));
        for (std::size_t k = 0; k < target.dim(); ++k)
            (*block_.matrix)(k, j) = v[k];
    }

    const GradedSpace& target_space() const
    {
        if (const auto* a = find_named(wb_.algebras, block_.target))
            return a->space();
        return find_named(wb_.reps, block_.target)->rep.base().space();
    }

    void rep_line()
    {
        const auto& head = ident_at(0, "a directive");
        const auto& w = head.text;
        const auto& base = *find_named(wb_.algebras, block_.target);
        const auto f = wb_.field;
        if (w == "adjoint" || w == "coadjoint") {
            expect_end(1);
            if (!block_.directive.empty() || block_.space)
                fail("'" + w + "' must be the only line of a rep block", head.column);
            block_.directive = w;
            return;
        }
        if (!block_.directive.empty())
            fail("'" + block_.directive + "' must be the only line of a rep block", head.column);
        if (w == "basis") {
            basis_line();
            const auto m = block_.space->dim();
            block_.action.assign(base.dim(), Matrix(f, m, m));
            block_.twist = Matrix::identity(f, m);
            return;
        }
        const auto& sp = need_space();
        if (w == "twist") {
            const auto& id = ident_at(1, "a module basis element");
            const auto i = basis_index(sp, id, "module basis element");
            expect_symbol(2, "=");
            if (!block_.twist_seen.insert(i).second)
                fail("duplicate twist image for '" + id.text + "'", id.column);
            const auto v = combination(3, sp, sp.parity(i));
            for (std::size_t k = 0; k < sp.dim(); ++k)
                (*block_.twist)(k, i) = v[k];
            return;
        }
        if (w != "action")
            fail("unknown directive '" + w + "'", head.column);
        const auto& a = ident_at(1, "an algebra basis element");
        const auto& u = ident_at(2, "a module basis element");
        const auto i = basis_index(base.space(), a, "algebra basis element");
        const auto j = basis_index(sp, u, "module basis element");
        expect_symbol(3, "=");
        if (!block_.action_seen.insert({i, j}).second)
            fail("duplicate definition of action " + a.text + " " + u.text, head.column);
        const auto v = combination(4, sp, base.space().parity(i) + sp.parity(j));
        for (std::size_t k = 0; k < sp.dim(); ++k)
            block_.action[i](k, j) = v[k];
    }

    void entry_line()
    {
        const auto& base = *find_named(wb_.algebras, block_.target);
        const auto& sp = base.space();
        const auto& head = ident_at(0, "'entry'");
        if (head.text != "entry")
            fail("unknown directive '" + head.text + "'", head.column);
        const auto& a = ident_at(1, "a basis element");
        const auto& b = ident_at(2, "a basis element");
        const auto i = basis_index(sp, a, "basis element");
        const auto j = basis_index(sp, b, "basis element");
        expect_symbol(3, "=");
        if (!block_.entry_seen.emplace(std::make_pair(i, j), Entry{lineno_, head.column}).second)
            fail("duplicate entry " + a.text + " " + b.text, head.column);
        const auto k = coefficient(4, toks_.size());
        if (!k.is_zero() && sp.parity(i) != sp.parity(j))
            fail("parity violation: entry " + a.text + " " + b.text + " mixes even and odd", head.column);
        (*block_.matrix)(i, j) = k;
    }

    // ---- closing -------------------------------------------------------------------------

    void close_block()
    {
        expect_end(1);
        try {
            close_block_impl();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), block_.line, block_.name_column ? block_.name_column : 1);
        }
        block_ = Block{};
    }

    void close_block_impl()
    {
        switch (block_.kind) {
        case BlockKind::params:
        case BlockKind::none:
            return;
        case BlockKind::algebra: {
            if (!block_.space)
                throw ParseError("algebra '" + block_.name + "' has no basis", block_.line, block_.name_column);
            const auto& sp = *block_.space;
            if (block_.supercommutative)
                fill_supercommutative(sp);
            EvenLinearMap twist(sp, sp, *block_.twist);
            wb_.algebras.push_back({block_.name, SuperAlgebra(sp, *block_.product, twist, block_.name)});
            return;
        }
        case BlockKind::dendriform: {
            if (!block_.space)
                throw ParseError("dendriform '" + block_.name + "' has no basis", block_.line, block_.name_column);
            const auto& sp = *block_.space;
            EvenLinearMap twist(sp, sp, *block_.twist);
            wb_.dendriforms.push_back(
                {block_.name, DendriformAlgebra(sp, *block_.left, *block_.right, twist, block_.name)});
            return;
        }
        case BlockKind::map: {
            const auto& target = target_space();
            wb_.maps.push_back({block_.name, MapDef{block_.target, EvenLinearMap(*block_.space, target, *block_.matrix)}});
            return;
        }
        case BlockKind::rep: {
            const auto& base = *find_named(wb_.algebras, block_.target);
            Representation r;
            if (block_.directive == "adjoint") {
                r = adjoint_rep(base);
            } else if (block_.directive == "coadjoint") {
                r = coadjoint_rep(base);
            } else {
                if (!block_.space)
                    throw ParseError("rep '" + block_.name + "' has no basis", block_.line, block_.name_column);
                const auto& sp = *block_.space;
                r = Representation(base, sp, block_.action, EvenLinearMap(sp, sp, *block_.twist), block_.name);
            }
            wb_.reps.push_back({block_.name, RepDef{block_.target, std::move(r)}});
            return;
        }
        case BlockKind::tensor: {
            const auto& base = *find_named(wb_.algebras, block_.target);
            wb_.tensors.push_back({block_.name, TensorDef{block_.target, TensorElement(base, *block_.matrix)}});
            return;
        }
        case BlockKind::form: {
            const auto& base = *find_named(wb_.algebras, block_.target);
            wb_.forms.push_back({block_.name, FormDef{block_.target, BilinearForm(base, *block_.matrix)}});
            return;
        }
        }
    }

    void fill_supercommutative(const GradedSpace& sp)
    {
        auto& c = *block_.product;
        const auto f = wb_.field;
        const auto n = sp.dim();
        for (const auto& [ij, where] : block_.product_seen) {
            const auto [i, j] = ij;
            const auto sign = koszul_scalar(f, sp.parity(i), sp.parity(j));
            if (i == j) {
                // x·x = s(x,x) x·x forces odd squares to vanish outside characteristic 2.
                for (std::size_t k = 0; k < n; ++k)
                    if (!(c(i, i, k) == sign * c(i, i, k)))
                        throw ParseError("supercommutative conflict: odd square " + sp.name(i) + " " + sp.name(i)
                                             + " must vanish",
                                         where.line, where.column);
                continue;
            }
            const auto other = block_.product_seen.find({j, i});
            if (other != block_.product_seen.end()) {
                for (std::size_t k = 0; k < n; ++k)
                    if (!(c(j, i, k) == sign * c(i, j, k))) {
                        const auto& later = other->second.line > where.line ? other->second : where;
                        throw ParseError("supercommutative conflict between product " + sp.name(i) + " "
                                             + sp.name(j) + " and product " + sp.name(j) + " " + sp.name(i),
                                         later.line, later.column);
                    }
                continue;
            }
            for (std::size_t k = 0; k < n; ++k)
                c(j, i, k) = sign * c(i, j, k);
        }
    }

    const std::string& text_;
    Workbench wb_;
    std::map<std::string, mpq_class> params_;
    std::vector<Token> toks_;
    std::size_t lineno_ = 0;
    Block block_;
    bool field_seen_ = false;
    bool defined_any_ = false;
};

std::string combo(const Vector& v, const GradedSpace& sp) { return format_combination(v, sp); }

std::string basis_line(const GradedSpace& sp)
{
    std::string s = "  basis";
    for (std::size_t i = 0; i < sp.dim(); ++i)
        s += " " + sp.name(i) + ":" + parity_name(sp.parity(i));
    return s + "\n";
}

std::string twist_lines(const Matrix& t, const GradedSpace& sp)
{
    std::string s;
    for (std::size_t j = 0; j < sp.dim(); ++j) {
        const auto col = t.column(j);
        if (col == basis_vector(t.field(), sp.dim(), j))
            continue;
        s += "  twist " + sp.name(j) + " = " + combo(col, sp) + "\n";
    }
    return s;
}

std::string product_lines(const char* word, const ProductTensor& c, const GradedSpace& sp)
{
    std::string s;
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j) {
            const auto v = c.basis_product(i, j);
            if (!is_zero(v))
                s += std::string("  ") + word + " " + sp.name(i) + " " + sp.name(j) + " = " + combo(v, sp) + "\n";
        }
    return s;
}

std::string entry_lines(const Matrix& m, const GradedSpace& sp)
{
    std::string s;
    for (std::size_t i = 0; i < sp.dim(); ++i)
        for (std::size_t j = 0; j < sp.dim(); ++j)
            if (!m(i, j).is_zero())
                s += "  entry " + sp.name(i) + " " + sp.name(j) + " = " + m(i, j).to_short_string() + "\n";
    return s;
}

} // namespace

Workbench parse_workbench(const std::string& text) { return Parser(text).run(); }

Workbench load_workbench(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_workbench(ss.str());
}

std::string emit_algebra(const std::string& name, const SuperAlgebra& a)
{
    return "algebra " + name + "\n" + basis_line(a.space()) + product_lines("product", a.product(), a.space())
           + twist_lines(a.twist().matrix(), a.space()) + "end\n";
}

std::string emit_dendriform(const std::string& name, const DendriformAlgebra& d)
{
    return "dendriform " + name + "\n" + basis_line(d.space()) + product_lines("left", d.left().product(), d.space())
           + product_lines("right", d.right().product(), d.space()) + twist_lines(d.twist().matrix(), d.space())
           + "end\n";
}

std::string emit_map(const std::string& name, const std::string& on, const EvenLinearMap& m)
{
    std::string s = "map " + name + " on " + on + "\n";
    for (std::size_t j = 0; j < m.source().dim(); ++j) {
        const auto col = m.image(j);
        if (!is_zero(col))
            s += "  image " + m.source().name(j) + " = " + combo(col, m.target()) + "\n";
    }
    return s + "end\n";
}

std::string emit_rep(const std::string& name, const std::string& of, const Representation& r)
{
    std::string s = "rep " + name + " of " + of + "\n" + basis_line(r.space());
    const auto& bs = r.base().space();
    for (std::size_t i = 0; i < bs.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            const auto col = r.action(i).column(j);
            if (!is_zero(col))
                s += "  action " + bs.name(i) + " " + r.space().name(j) + " = " + combo(col, r.space()) + "\n";
        }
    return s + twist_lines(r.twist().matrix(), r.space()) + "end\n";
}

std::string emit_tensor(const std::string& name, const std::string& on, const TensorElement& t)
{
    return "tensor " + name + " on " + on + "\n" + entry_lines(t.coefficients(), t.algebra().space()) + "end\n";
}

std::string emit_form(const std::string& name, const std::string& on, const BilinearForm& b)
{
    return "form " + name + " on " + on + "\n" + entry_lines(b.matrix(), b.algebra().space()) + "end\n";
}

std::string emit_workbench(const Workbench& wb)
{
    std::string s = "field " + wb.field.token() + "\n";
    if (!wb.params.empty()) {
        s += "params\n";
        for (const auto& p : wb.params)
            s += "  " + p.name + " = " + p.value.get_str() + "\n";
        s += "end\n";
    }
    for (const auto& a : wb.algebras)
        s += emit_algebra(a.name, a.value);
    for (const auto& d : wb.dendriforms)
        s += emit_dendriform(d.name, d.value);
    // Representations before maps: a map may be declared on a representation.
    for (const auto& r : wb.reps)
        s += emit_rep(r.name, r.value.of, r.value.rep);
    for (const auto& m : wb.maps)
        s += emit_map(m.name, m.value.on, m.value.map);
    for (const auto& t : wb.tensors)
        s += emit_tensor(t.name, t.value.on, t.value.tensor);
    for (const auto& b : wb.forms)
        s += emit_form(b.name, b.value.on, b.value.form);
    return s;
}

} // namespace hsw
