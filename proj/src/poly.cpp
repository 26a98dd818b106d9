#include "k3dn/poly.hpp"
#include "k3dn/textfmt.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace k3dn {

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
        if (da && db) {
            std::size_t i2 = i, j2 = j;
            while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
            while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
            Int x(a.substr(i, i2 - i)), y(b.substr(j, j2 - j));
            if (x != y) return x < y;
            if (i2 - i != j2 - j) return i2 - i < j2 - j;
            i = i2;
            j = j2;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

bool ParamMonomialLess::operator()(const ParamMonomial& a, const ParamMonomial& b) const {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].first != b[i].first) return natural_less(a[i].first, b[i].first);
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

static ParamMonomial mono_mul(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && natural_less(a[i].first, b[j].first))) {
            r.push_back(a[i++]);
        } else if (i == a.size() || natural_less(b[j].first, a[i].first)) {
            r.push_back(b[j++]);
        } else {
            long e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

static long mono_degree(const ParamMonomial& m) {
    long d = 0;
    for (const auto& [n, e] : m) d += e;
    return d;
}

ParamPolynomial::ParamPolynomial(const Rat& c) {
    if (c != 0) terms_[{}] = c;
}

ParamPolynomial ParamPolynomial::param(const std::string& name, long exp) {
    ParamPolynomial p;
    if (exp == 0) p.terms_[{}] = 1;
    else p.terms_[{{name, exp}}] = 1;
    return p;
}

ParamPolynomial ParamPolynomial::monomial(const ParamMonomial& m, const Rat& c) {
    ParamPolynomial p;
    p.add_term(m, c);
    return p;
}

void ParamPolynomial::add_term(const ParamMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

bool ParamPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ParamPolynomial::constant() const {
    if (!is_constant()) throw Error("coefficient is not a rational constant: " + str());
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

std::set<std::string, NaturalLess> ParamPolynomial::parameters() const {
    std::set<std::string, NaturalLess> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [n, e] : m) s.insert(n);
    return s;
}

ParamPolynomial ParamPolynomial::operator-() const {
    ParamPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ParamPolynomial& ParamPolynomial::operator+=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPolynomial& ParamPolynomial::operator-=(const ParamPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b) {
    ParamPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

ParamPolynomial& ParamPolynomial::operator*=(const ParamPolynomial& o) { return *this = *this * o; }

ParamPolynomial ParamPolynomial::inverse() const {
    if (!is_monomial()) throw Error("only monomial coefficients are invertible: " + str());
    const auto& [m, c] = *terms_.begin();
    ParamMonomial inv = m;
    for (auto& [n, e] : inv) e = -e;
    return monomial(inv, 1 / c);
}

ParamPolynomial ParamPolynomial::pow(long e) const {
    ParamPolynomial b = e < 0 ? inverse() : *this;
    if (e < 0) e = -e;
    ParamPolynomial r(1);
    while (e > 0) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return r;
}

ParamPolynomial ParamPolynomial::substitute(const std::map<std::string, Rat>& values) const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        Rat k = c;
        ParamMonomial rest;
        for (const auto& [n, e] : m) {
            auto it = values.find(n);
            if (it == values.end()) {
                rest.emplace_back(n, e);
            } else {
                if (it->second == 0 && e < 0) throw Error("parameter " + n + " set to 0 has a negative exponent");
                k *= rat_pow(it->second, e);
            }
        }
        r.add_term(rest, k);
    }
    return r;
}

ParamPolynomial ParamPolynomial::substitute(const std::map<std::string, ParamPolynomial>& values) const {
    ParamPolynomial r;
    for (const auto& [m, c] : terms_) {
        ParamPolynomial t(c);
        for (const auto& [n, e] : m) {
            auto it = values.find(n);
            t *= it == values.end() ? param(n, e) : it->second.pow(e);
        }
        r += t;
    }
    return r;
}

static std::string mono_str(const ParamMonomial& m) {
    std::string s;
    for (const auto& [n, e] : m) {
        if (!s.empty()) s += "*";
        s += n;
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

static std::string scaled_str(const Rat& c, const std::string& mono) {
    if (mono.empty()) return to_string(c);
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return to_string(c) + "*" + mono;
}

std::string ParamPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<ParamMonomial, Rat>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        long da = mono_degree(a.first), db = mono_degree(b.first);
        if (da != db) return da > db;
        return ParamMonomialLess()(b.first, a.first);
    });
    std::string s;
    for (const auto& [m, c] : ts) {
        std::string t = scaled_str(c, mono_str(m));
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

// ---- LaurentPolynomial

LaurentPolynomial LaurentPolynomial::constant(std::size_t n, const ParamPolynomial& c) {
    LaurentPolynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const ParamPolynomial& c) {
    LaurentPolynomial p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t n, std::size_t i, long exp) {
    if (i >= n) throw Error("variable index out of range");
    Exponent e(n, 0);
    e[i] = exp;
    return monomial(e);
}

ParamPolynomial LaurentPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamPolynomial() : it->second;
}

std::vector<Exponent> LaurentPolynomial::support() const {
    std::vector<Exponent> s;
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

bool LaurentPolynomial::is_rational() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_constant()) return false;
    return true;
}

std::set<std::string, NaturalLess> LaurentPolynomial::parameters() const {
    std::set<std::string, NaturalLess> s;
    for (const auto& [e, c] : terms_)
        for (const auto& n : c.parameters()) s.insert(n);
    return s;
}

void LaurentPolynomial::add_term(const Exponent& e, const ParamPolynomial& c) {
    if (e.size() != n_) throw Error("exponent has wrong dimension");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void LaurentPolynomial::check_dims(const LaurentPolynomial& o) const {
    if (n_ != o.n_) throw Error("Laurent polynomials in different numbers of variables");
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    check_dims(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    check_dims(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    a.check_dims(b);
    LaurentPolynomial r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

LaurentPolynomial operator*(const ParamPolynomial& c, const LaurentPolynomial& p) {
    LaurentPolynomial r(p.n_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : p.terms_) r.add_term(e, c * k);
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(long e) const {
    LaurentPolynomial b = *this;
    if (e < 0) {
        b = divide_exact(constant(n_, 1), *this);
        e = -e;
    }
    LaurentPolynomial r = constant(n_, 1);
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::shift(const Exponent& s) const {
    if (s.size() != n_) throw Error("shift has wrong dimension");
    LaurentPolynomial r(n_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        for (std::size_t i = 0; i < n_; ++i) f[i] += s[i];
        r.terms_.emplace(f, c);
    }
    return r;
}

// ---- exact division in a flattened ring Q[x_1..x_n, a_1..a_k] (Laurent in all of them)

namespace {

using FlatPoly = std::map<Exponent, Rat>;

struct Flattener {
    std::size_t n;
    std::vector<std::string> params;

    FlatPoly flatten(const LaurentPolynomial& p) const {
        FlatPoly f;
        for (const auto& [e, c] : p.terms())
            for (const auto& [m, k] : c.terms()) {
                Exponent g(n + params.size(), 0);
                std::copy(e.begin(), e.end(), g.begin());
                for (const auto& [name, x] : m) {
                    auto it = std::find(params.begin(), params.end(), name);
                    g[n + (it - params.begin())] = x;
                }
                f[g] += k;
            }
        return f;
    }

    LaurentPolynomial unflatten(const FlatPoly& f) const {
        LaurentPolynomial p(n);
        for (const auto& [g, k] : f) {
            ParamMonomial m;
            for (std::size_t i = 0; i < params.size(); ++i)
                if (g[n + i] != 0) m.emplace_back(params[i], g[n + i]);
            p.add_term(Exponent(g.begin(), g.begin() + n), ParamPolynomial::monomial(m, k));
        }
        return p;
    }
};

Exponent min_exponents(const FlatPoly& f) {
    Exponent m = f.begin()->first;
    for (const auto& [e, c] : f)
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

FlatPoly shifted(const FlatPoly& f, const Exponent& s, long sign) {
    FlatPoly r;
    for (const auto& [e, c] : f) {
        Exponent g = e;
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += sign * s[i];
        r.emplace(std::move(g), c);
    }
    return r;
}

}  // namespace

LaurentPolynomial divide_exact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.n_vars() != b.n_vars()) throw Error("Laurent polynomials in different numbers of variables");
    if (b.is_zero()) throw Error("division by zero");
    std::size_t n = a.n_vars();
    if (a.is_zero()) return LaurentPolynomial(n);
    Flattener fl{n, {}};
    {
        auto ps = a.parameters();
        for (const auto& s : b.parameters()) ps.insert(s);
        fl.params.assign(ps.begin(), ps.end());
    }
    FlatPoly fa = fl.flatten(a), fb = fl.flatten(b);
    Exponent sa = min_exponents(fa), sb = min_exponents(fb);
    FlatPoly A = shifted(fa, sa, -1), B = shifted(fb, sb, -1);
    // B is not divisible by any variable, so a/b is Laurent iff B divides A
    const auto& [lb, lcb] = *B.rbegin();
    FlatPoly Q;
    while (!A.empty()) {
        const auto [la, lca] = *A.rbegin();
        Exponent d(la.size());
        for (std::size_t i = 0; i < la.size(); ++i) {
            d[i] = la[i] - lb[i];
            if (d[i] < 0)
                throw Error("non-exact division: divisor " + format_laurent(b) + " does not divide " +
                            format_laurent(a));
        }
        Rat k = lca / lcb;
        Q[d] += k;
        for (const auto& [e, c] : B) {
            Exponent g = e;
            for (std::size_t i = 0; i < g.size(); ++i) g[i] += d[i];
            auto it = A.find(g);
            if (it == A.end()) {
                A.emplace(std::move(g), -k * c);
            } else {
                it->second -= k * c;
                if (it->second == 0) A.erase(it);
            }
        }
    }
    Exponent s(sa.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = sa[i] - sb[i];
    return fl.unflatten(shifted(Q, s, 1));
}

// ---- parser

std::string variable_name(std::size_t n, std::size_t i) {
    if (n <= 3) return std::string(1, "xyz"[i]);
    return "x" + std::to_string(i + 1);
}

namespace {

// 0-based variable index or -1 for a parameter
long variable_index(const std::string& id) {
    if (id == "x") return 0;
    if (id == "y") return 1;
    if (id == "z") return 2;
    if (id.size() >= 2 && id[0] == 'x' && id[1] != '0') {
        for (std::size_t i = 1; i < id.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(id[i]))) return -1;
        if (id.size() > 8) return -1;
        return std::stol(id.substr(1)) - 1;
    }
    return -1;
}

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = s[i];
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j < s.size() && s[j] == '.')
                throw ParseError("<expr>", 1, static_cast<int>(j + 1), "decimal numbers are not supported");
            out.push_back({Token::Num, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*/^()").find(static_cast<char>(c)) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError("<expr>", 1, static_cast<int>(i + 1), std::string("unexpected character '") +
                                                                        static_cast<char>(c) + "'");
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

struct ExprParser {
    std::vector<Token> toks;
    std::size_t n;
    std::size_t k = 0;

    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw ParseError("<expr>", 1, static_cast<int>(pos + 1), msg);
    }
    const Token& peek() const { return toks[k]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }

    LaurentPolynomial expr() {
        LaurentPolynomial r = term();
        while (is_op("+") || is_op("-")) {
            bool minus = peek().text == "-";
            ++k;
            LaurentPolynomial t = term();
            if (minus) r -= t;
            else r += t;
        }
        return r;
    }

    LaurentPolynomial term() {
        LaurentPolynomial r = factor();
        while (is_op("*") || is_op("/")) {
            bool div = peek().text == "/";
            std::size_t pos = peek().pos;
            ++k;
            LaurentPolynomial f = factor();
            if (!div) {
                r = r * f;
                continue;
            }
            if (f.is_zero()) fail("division by zero", pos);
            try {
                r = divide_exact(r, f);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                fail(e.what(), pos);
            }
        }
        return r;
    }

    long exponent() {
        std::size_t pos = peek().pos;
        bool paren = false;
        if (is_op("(")) {
            paren = true;
            ++k;
        }
        long sign = 1;
        if (is_op("-") || is_op("+")) {
            if (peek().text == "-") sign = -1;
            ++k;
        }
        if (peek().kind != Token::Num) fail("non-integer exponent", pos);
        if (peek().text.size() > 9) fail("exponent too large", pos);
        long e = sign * std::stol(peek().text);
        ++k;
        if (paren) {
            if (!is_op(")")) fail("non-integer exponent", pos);
            ++k;
        }
        return e;
    }

    LaurentPolynomial factor() {
        if (is_op("-")) {
            ++k;
            return -factor();
        }
        if (is_op("+")) {
            ++k;
            return factor();
        }
        LaurentPolynomial b = base();
        if (is_op("^")) {
            std::size_t pos = peek().pos;
            ++k;
            long e = exponent();
            try {
                b = b.pow(e);
            } catch (const Error& err) {
                fail(err.what(), pos);
            }
        }
        return b;
    }

    LaurentPolynomial base() {
        const Token t = peek();
        switch (t.kind) {
        case Token::Num:
            ++k;
            return LaurentPolynomial::constant(n, ParamPolynomial(Rat(Int(t.text))));
        case Token::Ident: {
            ++k;
            long v = variable_index(t.text);
            if (v < 0) return LaurentPolynomial::constant(n, ParamPolynomial::param(t.text));
            if (static_cast<std::size_t>(v) >= n) fail("variable '" + t.text + "' out of range", t.pos);
            return LaurentPolynomial::variable(n, static_cast<std::size_t>(v));
        }
        case Token::Op:
            if (t.text == "(") {
                ++k;
                LaurentPolynomial r = expr();
                if (!is_op(")")) fail("expected ')'", peek().pos);
                ++k;
                return r;
            }
            fail("unexpected '" + t.text + "'", t.pos);
        case Token::End:
            break;
        }
        fail("unexpected end of expression", t.pos);
    }
};

}  // namespace

LaurentPolynomial parse_laurent(const std::string& text, std::size_t n_vars) {
    std::vector<Token> toks = tokenize(text);
    std::size_t need = 0;
    for (const auto& t : toks)
        if (t.kind == Token::Ident) {
            long v = variable_index(t.text);
            if (v >= 0) need = std::max(need, static_cast<std::size_t>(v) + 1);
        }
    if (n_vars == 0) n_vars = std::max<std::size_t>(need, 1);
    ExprParser p{std::move(toks), n_vars};
    if (p.peek().kind == Token::End) p.fail("empty expression", 0);
    LaurentPolynomial r = p.expr();
    if (p.peek().kind != Token::End) p.fail("unexpected '" + p.peek().text + "'", p.peek().pos);
    return r;
}

// ---- formatter

static std::string monomial_str(std::size_t n, const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += variable_name(n, i);
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string format_laurent(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::size_t n = p.n_vars();
    std::vector<std::pair<Exponent, ParamPolynomial>> ts(p.terms().begin(), p.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        long da = std::accumulate(a.first.begin(), a.first.end(), 0L);
        long db = std::accumulate(b.first.begin(), b.first.end(), 0L);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    std::string s;
    for (const auto& [e, c] : ts) {
        std::string m = monomial_str(n, e), t;
        if (c.is_monomial()) {
            const auto& [pm, k] = *c.terms().begin();
            std::string pms = mono_str(pm);
            if (m.empty()) t = scaled_str(k, pms);
            else t = scaled_str(k, pms.empty() ? m : pms + "*" + m);
        } else {
            t = "(" + c.str() + ")";
            if (!m.empty()) t += "*" + m;
        }
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

LaurentPolynomial specialize(const LaurentPolynomial& p, const std::map<std::string, Rat>& values) {
    LaurentPolynomial r(p.n_vars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.substitute(values));
    return r;
}

LaurentPolynomial substitute_params(const LaurentPolynomial& p, const std::map<std::string, ParamPolynomial>& values) {
    LaurentPolynomial r(p.n_vars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.substitute(values));
    return r;
}

LaurentPolynomial monomial_transform(const LaurentPolynomial& p, const IntegerMatrix& A,
                                     const std::vector<ParamPolynomial>& scalings) {
    std::size_t n = p.n_vars();
    if (A.rows() != n || A.cols() != n) throw Error("transform matrix has wrong size");
    Int d = determinant(A);
    if (d != 1 && d != -1) throw Error("transform matrix is not unimodular");
    if (!scalings.empty() && scalings.size() != n) throw Error("need one scaling per variable");
    for (const auto& s : scalings)
        if (!s.is_monomial()) throw Error("scalings must be nonzero monomials in the parameters");
    std::vector<std::vector<long>> a(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = A(i, j).convert_to<long>();
    LaurentPolynomial r(n);
    for (const auto& [e, c] : p.terms()) {
        Exponent f(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) f[i] += a[i][j] * e[j];
        ParamPolynomial k = c;
        if (!scalings.empty())
            for (std::size_t j = 0; j < n; ++j)
                if (e[j] != 0) k *= scalings[j].pow(e[j]);
        r.add_term(f, k);
    }
    return r;
}

IntegerMatrix substitution_matrix(const std::vector<Exponent>& images) {
    std::size_t n = images.size();
    IntegerMatrix A(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (images[j].size() != n) throw Error("substitution image has wrong dimension");
        for (std::size_t i = 0; i < n; ++i) A(i, j) = images[j][i];
    }
    return A;
}

std::map<std::string, Rat> parse_assignments(const std::string& text) {
    std::map<std::string, Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        auto eq = item.find('=');
        std::string name = item.substr(0, eq);
        name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }),
                   name.end());
        if (!name.empty() || eq != std::string::npos) {
            if (eq == std::string::npos || name.empty()) throw Error("bad assignment '" + item + "'");
            out[name] = parse_rat(item.substr(eq + 1));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace k3dn
