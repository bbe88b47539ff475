#include "homlie/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace homlie {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take()
    {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance()
    {
        skip();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Tok::end;
            tok_.text.clear();
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                    s_[pos_] == '\''))
                id.push_back(get());
            tok_.kind = Tok::ident;
            tok_.text = id;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                num.push_back(get());
            if (pos_ + 1 < s_.size() && s_[pos_] == '.' &&
                std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
                throw ParseError("floating literals are not allowed", line_, col_);
            tok_.kind = Tok::number;
            tok_.text = num;
            return;
        }
        if (c == '-' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            get();
            get();
            tok_.kind = Tok::punct;
            tok_.text = "->";
            return;
        }
        tok_.kind = Tok::punct;
        tok_.text = std::string(1, get());
    }

    void skip()
    {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
                while (pos_ < s_.size() && s_[pos_] != '\n')
                    get();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    char get()
    {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& msg)
{
    throw ParseError(msg, t.line, t.col);
}

// -------- raw AST --------

struct RawExprTerm {
    Rat coef;
    std::string name;  // empty for a constant term (must be zero)
    Token where;
};
using RawExpr = std::vector<RawExprTerm>;

struct RawAlgebra {
    std::string name;
    std::vector<std::pair<std::string, Token>> basis;
    std::vector<std::tuple<std::string, std::string, RawExpr, Token>> brackets;
    bool alpha_id = false;
    std::vector<std::tuple<std::string, RawExpr, Token>> alphas;
    Token where;
};

struct RawModule {
    std::string name;
    std::string over;
    Token over_tok;
    std::optional<std::string> space;
    Token space_tok;
    std::vector<std::pair<std::string, Token>> basis;
    std::vector<std::tuple<std::string, std::string, RawExpr, Token>> actions;
    bool alpha_id = false;
    std::vector<std::tuple<std::string, RawExpr, Token>> alphas;
    Token where;
};

struct RawMap {
    std::string name;
    std::string source, target;
    bool wedge = false;
    Token src_tok, tgt_tok;
    // entries: single name or pair, then expression
    std::vector<std::tuple<std::string, std::string, RawExpr, Token>> entries;
    Token where;
};

struct RawDoc {
    std::vector<RawAlgebra> algebras;
    std::vector<RawModule> modules;
    std::vector<RawMap> maps;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    RawDoc parse()
    {
        RawDoc doc;
        while (lex_.peek().kind != Tok::end) {
            Token head = expect_ident("block keyword");
            if (head.text == "algebra")
                doc.algebras.push_back(parse_algebra(head));
            else if (head.text == "module")
                doc.modules.push_back(parse_module(head));
            else if (head.text == "map")
                doc.maps.push_back(parse_map(head));
            else
                fail(head, "expected 'algebra', 'module' or 'map'");
        }
        return doc;
    }

private:
    Token expect_ident(const std::string& what)
    {
        Token t = lex_.take();
        if (t.kind != Tok::ident)
            fail(t, "expected " + what);
        return t;
    }
    Token expect_punct(const std::string& p)
    {
        Token t = lex_.take();
        if (t.kind != Tok::punct || t.text != p)
            fail(t, "expected '" + p + "'");
        return t;
    }
    bool at_punct(const std::string& p)
    {
        return lex_.peek().kind == Tok::punct && lex_.peek().text == p;
    }

    Rat parse_number(bool negative)
    {
        Token t = lex_.take();
        if (t.kind != Tok::number)
            fail(t, "expected a number");
        std::string text = t.text;
        if (at_punct("/")) {
            lex_.take();
            Token d = lex_.take();
            if (d.kind != Tok::number)
                fail(d, "expected a denominator");
            if (d.text.find_first_not_of('0') == std::string::npos)
                fail(d, "zero denominator");
            text += "/" + d.text;
        }
        auto r = parse_rational(text);
        if (!r)
            fail(t, "bad rational literal");
        return negative ? Rat(-*r) : *r;
    }

    RawExpr parse_expr()
    {
        RawExpr expr;
        bool neg = false;
        if (at_punct("-")) {
            lex_.take();
            neg = true;
        } else if (at_punct("+")) {
            lex_.take();
        }
        while (true) {
            RawExprTerm term;
            term.where = lex_.peek();
            if (lex_.peek().kind == Tok::number) {
                term.coef = parse_number(neg);
                if (at_punct("*")) {
                    lex_.take();
                    term.name = expect_ident("a basis name").text;
                }
            } else {
                Token id = expect_ident("a basis name or scalar");
                term.coef = neg ? Rat(-1) : Rat(1);
                term.name = id.text;
            }
            expr.push_back(term);
            if (at_punct("+")) {
                lex_.take();
                neg = false;
            } else if (at_punct("-")) {
                lex_.take();
                neg = true;
            } else {
                break;
            }
        }
        return expr;
    }

    std::vector<std::pair<std::string, Token>> parse_name_list()
    {
        std::vector<std::pair<std::string, Token>> names;
        while (true) {
            Token t = expect_ident("a basis name");
            names.emplace_back(t.text, t);
            if (at_punct(","))
                lex_.take();
            else
                break;
        }
        return names;
    }

    RawAlgebra parse_algebra(const Token& head)
    {
        RawAlgebra a;
        a.where = head;
        a.name = expect_ident("an algebra name").text;
        expect_punct("{");
        std::string section;
        while (!at_punct("}")) {
            Token t = lex_.peek();
            if (t.kind == Tok::ident &&
                (t.text == "basis" || t.text == "bracket" || t.text == "alpha")) {
                section = lex_.take().text;
                if (section == "basis") {
                    auto names = parse_name_list();
                    a.basis.insert(a.basis.end(), names.begin(), names.end());
                    expect_punct(";");
                    continue;
                }
                if (section == "alpha" && lex_.peek().kind == Tok::ident &&
                    lex_.peek().text == "id") {
                    lex_.take();
                    a.alpha_id = true;
                    expect_punct(";");
                    continue;
                }
            }
            if (section == "bracket") {
                Token open = expect_punct("[");
                std::string x = expect_ident("a basis name").text;
                expect_punct(",");
                std::string y = expect_ident("a basis name").text;
                expect_punct("]");
                expect_punct("=");
                a.brackets.emplace_back(x, y, parse_expr(), open);
                expect_punct(";");
            } else if (section == "alpha") {
                Token id = expect_ident("a basis name");
                expect_punct("->");
                a.alphas.emplace_back(id.text, parse_expr(), id);
                expect_punct(";");
            } else {
                fail(t, "expected 'basis', 'bracket' or 'alpha' statement");
            }
        }
        expect_punct("}");
        return a;
    }

    RawModule parse_module(const Token& head)
    {
        RawModule m;
        m.where = head;
        m.name = expect_ident("a module name").text;
        Token over = expect_ident("'over'");
        if (over.text != "over")
            fail(over, "expected 'over'");
        m.over_tok = lex_.peek();
        m.over = expect_ident("an algebra name").text;
        expect_punct("{");
        std::string section;
        while (!at_punct("}")) {
            Token t = lex_.peek();
            if (t.kind == Tok::ident && (t.text == "basis" || t.text == "space" ||
                                         t.text == "action" || t.text == "alpha")) {
                section = lex_.take().text;
                if (section == "basis") {
                    auto names = parse_name_list();
                    m.basis.insert(m.basis.end(), names.begin(), names.end());
                    expect_punct(";");
                    continue;
                }
                if (section == "space") {
                    m.space_tok = lex_.peek();
                    m.space = expect_ident("an algebra name").text;
                    expect_punct(";");
                    continue;
                }
                if (section == "alpha" && lex_.peek().kind == Tok::ident &&
                    lex_.peek().text == "id") {
                    lex_.take();
                    m.alpha_id = true;
                    expect_punct(";");
                    continue;
                }
            }
            if (section == "action") {
                Token id = lex_.peek();
                std::string x = expect_ident("an actor basis name").text;
                expect_punct(".");
                std::string v = expect_ident("a module basis name").text;
                expect_punct("=");
                m.actions.emplace_back(x, v, parse_expr(), id);
                expect_punct(";");
            } else if (section == "alpha") {
                Token id = expect_ident("a basis name");
                expect_punct("->");
                m.alphas.emplace_back(id.text, parse_expr(), id);
                expect_punct(";");
            } else {
                fail(t, "expected 'basis', 'space', 'action' or 'alpha' statement");
            }
        }
        expect_punct("}");
        return m;
    }

    RawMap parse_map(const Token& head)
    {
        RawMap mp;
        mp.where = head;
        mp.name = expect_ident("a map name").text;
        expect_punct(":");
        mp.src_tok = lex_.peek();
        mp.source = expect_ident("a source name").text;
        if (at_punct("^")) {
            lex_.take();
            Token again = expect_ident("the source name");
            if (again.text != mp.source)
                fail(again, "wedge source must repeat the source name");
            mp.wedge = true;
        }
        expect_punct("->");
        mp.tgt_tok = lex_.peek();
        mp.target = expect_ident("a target name").text;
        expect_punct("{");
        while (!at_punct("}")) {
            if (mp.wedge) {
                Token open = expect_punct("[");
                std::string x = expect_ident("a basis name").text;
                expect_punct(",");
                std::string y = expect_ident("a basis name").text;
                expect_punct("]");
                expect_punct("->");
                mp.entries.emplace_back(x, y, parse_expr(), open);
                expect_punct(";");
            } else {
                Token id = lex_.peek();
                std::string x = expect_ident("a basis name").text;
                expect_punct("->");
                mp.entries.emplace_back(x, "", parse_expr(), id);
                expect_punct(";");
            }
        }
        expect_punct("}");
        return mp;
    }

    Lexer lex_;
};

// -------- resolution --------

class Resolver {
public:
    explicit Resolver(const RawDoc& doc) : doc_(doc) {}

    Workspace run()
    {
        for (const RawAlgebra& ra : doc_.algebras)
            ws_.algebras.push_back(resolve_algebra(ra));
        for (const RawModule& rm : doc_.modules)
            ws_.modules.push_back(resolve_module(rm));
        for (const RawMap& rp : doc_.maps)
            ws_.maps.push_back(resolve_map(rp));
        return ws_;
    }

private:
    static std::map<std::string, int> index_basis(const std::vector<std::pair<std::string, Token>>& names)
    {
        std::map<std::string, int> idx;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (idx.count(names[i].first))
                fail(names[i].second, "duplicate basis name '" + names[i].first + "'");
            idx[names[i].first] = static_cast<int>(i);
        }
        return idx;
    }

    static Vec resolve_expr(const RawExpr& expr, const std::map<std::string, int>& idx, int dim)
    {
        Vec v(dim, Rat(0));
        for (const RawExprTerm& t : expr) {
            if (t.name.empty()) {
                if (t.coef != 0)
                    fail(t.where, "constant terms must be zero");
                continue;
            }
            auto it = idx.find(t.name);
            if (it == idx.end())
                fail(t.where, "unknown identifier '" + t.name + "'");
            v[it->second] += t.coef;
        }
        return v;
    }

    AlgebraDef resolve_algebra(const RawAlgebra& ra)
    {
        if (ws_.find_algebra(ra.name) || ws_.find_module(ra.name))
            fail(ra.where, "duplicate object name '" + ra.name + "'");
        AlgebraDef def;
        def.name = ra.name;
        for (const auto& [name, tok] : ra.basis)
            def.basis.push_back(name);
        auto idx = index_basis(ra.basis);
        const int n = static_cast<int>(def.basis.size());
        def.algebra.dim = n;
        def.algebra.c = Tensor3(n, n, n);
        def.algebra.alpha = ra.alpha_id ? Matrix::identity(n) : Matrix(n, n);
        std::map<std::pair<int, int>, Vec> assigned;
        for (const auto& [x, y, expr, tok] : ra.brackets) {
            auto ix = idx.find(x), iy = idx.find(y);
            if (ix == idx.end())
                fail(tok, "unknown identifier '" + x + "'");
            if (iy == idx.end())
                fail(tok, "unknown identifier '" + y + "'");
            Vec v = resolve_expr(expr, idx, n);
            int i = ix->second, j = iy->second;
            if (i == j && !vec_is_zero(v))
                fail(tok, "conflicting bracket assignment: [x,x] must vanish");
            auto check = [&](std::pair<int, int> key, const Vec& val) {
                auto it = assigned.find(key);
                if (it != assigned.end() && !(it->second == val))
                    fail(tok, "conflicting bracket assignment");
                assigned[key] = val;
            };
            check({i, j}, v);
            check({j, i}, vec_scale(Rat(-1), v));
        }
        for (const auto& [key, val] : assigned)
            def.algebra.c.set_at(key.first, key.second, val);
        if (ra.alpha_id && !ra.alphas.empty())
            fail(ra.where, "conflicting twist: both 'alpha id' and explicit images");
        for (const auto& [name, expr, tok] : ra.alphas) {
            auto it = idx.find(name);
            if (it == idx.end())
                fail(tok, "unknown identifier '" + name + "'");
            def.algebra.alpha.set_col(it->second, resolve_expr(expr, idx, n));
        }
        return def;
    }

    ModuleDef resolve_module(const RawModule& rm)
    {
        if (ws_.find_algebra(rm.name) || ws_.find_module(rm.name))
            fail(rm.where, "duplicate object name '" + rm.name + "'");
        ModuleDef def;
        def.name = rm.name;
        def.over = rm.over;
        const AlgebraDef* actor = ws_.find_algebra(rm.over);
        if (!actor)
            fail(rm.over_tok, "unknown algebra '" + rm.over + "'");
        def.action.actor = actor->algebra;

        std::map<std::string, int> idx;
        if (rm.space) {
            if (!rm.basis.empty() || !rm.alphas.empty() || rm.alpha_id)
                fail(rm.space_tok, "'space' modules take basis and twist from the algebra");
            const AlgebraDef* sp = ws_.find_algebra(*rm.space);
            if (!sp)
                fail(rm.space_tok, "unknown algebra '" + *rm.space + "'");
            def.space = rm.space;
            def.basis = sp->basis;
            def.action.target = sp->algebra;
            for (std::size_t i = 0; i < sp->basis.size(); ++i)
                idx[sp->basis[i]] = static_cast<int>(i);
        } else {
            for (const auto& [name, tok] : rm.basis)
                def.basis.push_back(name);
            idx = index_basis(rm.basis);
            const int m = static_cast<int>(def.basis.size());
            Matrix am = rm.alpha_id ? Matrix::identity(m) : Matrix(m, m);
            def.action.target = HomLieAlgebra::abelian(m, am);
            for (const auto& [name, expr, tok] : rm.alphas) {
                auto it = idx.find(name);
                if (it == idx.end())
                    fail(tok, "unknown identifier '" + name + "'");
                def.action.target.alpha.set_col(it->second, resolve_expr(expr, idx, m));
            }
        }
        std::map<std::string, int> actor_idx;
        for (std::size_t i = 0; i < actor->basis.size(); ++i)
            actor_idx[actor->basis[i]] = static_cast<int>(i);
        const int m = static_cast<int>(def.basis.size());
        def.action.act = Tensor3(actor->algebra.dim, m, m);
        for (const auto& [x, v, expr, tok] : rm.actions) {
            auto ix = actor_idx.find(x);
            if (ix == actor_idx.end())
                fail(tok, "unknown actor basis name '" + x + "'");
            auto iv = idx.find(v);
            if (iv == idx.end())
                fail(tok, "unknown module basis name '" + v + "'");
            def.action.act.set_at(ix->second, iv->second, resolve_expr(expr, idx, m));
        }
        return def;
    }

    MapDef resolve_map(const RawMap& rp)
    {
        if (ws_.find_map(rp.name))
            fail(rp.where, "duplicate map name '" + rp.name + "'");
        MapDef def;
        def.name = rp.name;
        def.source = rp.source;
        def.target = rp.target;
        def.wedge_source = rp.wedge;
        std::vector<std::string> src_basis;
        try {
            src_basis = ws_.space_basis(rp.source);
        } catch (const std::out_of_range&) {
            fail(rp.src_tok, "unknown object '" + rp.source + "'");
        }
        std::vector<std::string> tgt_basis;
        try {
            tgt_basis = ws_.space_basis(rp.target);
        } catch (const std::out_of_range&) {
            fail(rp.tgt_tok, "unknown object '" + rp.target + "'");
        }
        std::map<std::string, int> sidx, tidx;
        for (std::size_t i = 0; i < src_basis.size(); ++i)
            sidx[src_basis[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < tgt_basis.size(); ++i)
            tidx[tgt_basis[i]] = static_cast<int>(i);
        const int n = static_cast<int>(src_basis.size());
        const int cols = rp.wedge ? n * (n - 1) / 2 : n;
        def.matrix = Matrix(static_cast<int>(tgt_basis.size()), cols);
        auto pair_index = [n](int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); };
        for (const auto& [x, y, expr, tok] : rp.entries) {
            Vec v = resolve_expr(expr, tidx, static_cast<int>(tgt_basis.size()));
            auto ix = sidx.find(x);
            if (ix == sidx.end())
                fail(tok, "unknown identifier '" + x + "'");
            if (rp.wedge) {
                auto iy = sidx.find(y);
                if (iy == sidx.end())
                    fail(tok, "unknown identifier '" + y + "'");
                int i = ix->second, j = iy->second;
                if (i == j) {
                    if (!vec_is_zero(v))
                        fail(tok, "conflicting wedge entry: [x,x] must vanish");
                    continue;
                }
                if (i < j)
                    def.matrix.set_col(pair_index(i, j), v);
                else
                    def.matrix.set_col(pair_index(j, i), vec_scale(Rat(-1), v));
            } else {
                def.matrix.set_col(ix->second, v);
            }
        }
        return def;
    }

    const RawDoc& doc_;
    Workspace ws_;
};

// -------- emission --------

std::string format_combo(const Vec& v, const std::vector<std::string>& basis)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        Rat c = v[i];
        if (first) {
            if (c == 1)
                os << basis[i];
            else if (c == -1)
                os << "-" << basis[i];
            else
                os << rat_to_string(c) << "*" << basis[i];
            first = false;
        } else {
            bool neg = c < 0;
            Rat a = neg ? Rat(-c) : c;
            os << (neg ? " - " : " + ");
            if (a == 1)
                os << basis[i];
            else
                os << rat_to_string(a) << "*" << basis[i];
        }
    }
    if (first)
        os << "0";
    return os.str();
}

}  // namespace

const AlgebraDef* Workspace::find_algebra(const std::string& name) const
{
    for (const AlgebraDef& a : algebras)
        if (a.name == name)
            return &a;
    return nullptr;
}

const ModuleDef* Workspace::find_module(const std::string& name) const
{
    for (const ModuleDef& m : modules)
        if (m.name == name)
            return &m;
    return nullptr;
}

const MapDef* Workspace::find_map(const std::string& name) const
{
    for (const MapDef& m : maps)
        if (m.name == name)
            return &m;
    return nullptr;
}

int Workspace::space_dim(const std::string& name) const
{
    return static_cast<int>(space_basis(name).size());
}

std::vector<std::string> Workspace::space_basis(const std::string& name) const
{
    if (const AlgebraDef* a = find_algebra(name))
        return a->basis;
    if (const ModuleDef* m = find_module(name))
        return m->basis;
    throw std::out_of_range("no algebra or module named '" + name + "'");
}

Workspace parse_workspace(const std::string& text)
{
    Parser parser(text);
    RawDoc doc = parser.parse();
    Resolver resolver(doc);
    return resolver.run();
}

std::string emit_workspace(const Workspace& w)
{
    std::ostringstream os;
    bool first_block = true;
    auto sep = [&] {
        if (!first_block)
            os << "\n";
        first_block = false;
    };
    for (const AlgebraDef& a : w.algebras) {
        sep();
        os << "algebra " << a.name << " {\n";
        if (!a.basis.empty()) {
            os << "  basis ";
            for (std::size_t i = 0; i < a.basis.size(); ++i)
                os << (i ? ", " : "") << a.basis[i];
            os << ";\n";
        }
        bool any = false;
        for (int i = 0; i < a.algebra.dim; ++i)
            for (int j = i + 1; j < a.algebra.dim; ++j) {
                Vec v = a.algebra.bracket_basis(i, j);
                if (vec_is_zero(v))
                    continue;
                os << (any ? "  " : "  bracket ") << "[" << a.basis[i] << "," << a.basis[j]
                   << "] = " << format_combo(v, a.basis) << ";\n";
                any = true;
            }
        if (a.algebra.alpha == Matrix::identity(a.algebra.dim)) {
            if (a.algebra.dim > 0)
                os << "  alpha id;\n";
        } else {
            bool anya = false;
            for (int j = 0; j < a.algebra.dim; ++j) {
                Vec v = a.algebra.alpha.col(j);
                if (vec_is_zero(v))
                    continue;
                os << (anya ? "  " : "  alpha ") << a.basis[j] << " -> "
                   << format_combo(v, a.basis) << ";\n";
                anya = true;
            }
        }
        os << "}\n";
    }
    for (const ModuleDef& m : w.modules) {
        sep();
        os << "module " << m.name << " over " << m.over << " {\n";
        if (m.space) {
            os << "  space " << *m.space << ";\n";
        } else if (!m.basis.empty()) {
            os << "  basis ";
            for (std::size_t i = 0; i < m.basis.size(); ++i)
                os << (i ? ", " : "") << m.basis[i];
            os << ";\n";
        }
        const AlgebraDef* actor = w.find_algebra(m.over);
        bool any = false;
        for (int i = 0; i < m.action.actor.dim; ++i)
            for (int j = 0; j < m.action.target.dim; ++j) {
                Vec v = m.action.act.at(i, j);
                if (vec_is_zero(v))
                    continue;
                os << (any ? "  " : "  action ") << (actor ? actor->basis[i] : "?") << " . "
                   << m.basis[j] << " = " << format_combo(v, m.basis) << ";\n";
                any = true;
            }
        if (!m.space) {
            const Matrix& am = m.action.target.alpha;
            if (am == Matrix::identity(m.action.target.dim)) {
                if (m.action.target.dim > 0)
                    os << "  alpha id;\n";
            } else {
                bool anya = false;
                for (int j = 0; j < m.action.target.dim; ++j) {
                    Vec v = am.col(j);
                    if (vec_is_zero(v))
                        continue;
                    os << (anya ? "  " : "  alpha ") << m.basis[j] << " -> "
                       << format_combo(v, m.basis) << ";\n";
                    anya = true;
                }
            }
        }
        os << "}\n";
    }
    for (const MapDef& mp : w.maps) {
        sep();
        os << "map " << mp.name << " : " << mp.source << (mp.wedge_source ? " ^ " : "")
           << (mp.wedge_source ? mp.source : "") << " -> " << mp.target << " {\n";
        std::vector<std::string> src = w.space_basis(mp.source);
        std::vector<std::string> tgt = w.space_basis(mp.target);
        const int n = static_cast<int>(src.size());
        if (mp.wedge_source) {
            int col = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++col) {
                    Vec v = mp.matrix.col(col);
                    if (vec_is_zero(v))
                        continue;
                    os << "  [" << src[i] << "," << src[j] << "] -> " << format_combo(v, tgt)
                       << ";\n";
                }
        } else {
            for (int j = 0; j < n; ++j) {
                Vec v = mp.matrix.col(j);
                if (vec_is_zero(v))
                    continue;
                os << "  " << src[j] << " -> " << format_combo(v, tgt) << ";\n";
            }
        }
        os << "}\n";
    }
    return os.str();
}

}  // namespace homlie
