#include "k3dn/textfmt.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace k3dn {

ParseError::ParseError(const std::string& source, int l, int c, const std::string& msg)
    : Error(source + (l > 0 ? ":" + std::to_string(l) + (c > 0 ? ":" + std::to_string(c) : "") : "") + ": " + msg),
      line(l),
      col(c) {}

std::string Value::str() const {
    if (!is_list) return scalar;
    std::string s = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ", ";
        s += items[i].str();
    }
    return s + "]";
}

const Entry* Section::find(const std::string& key) const {
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

std::vector<const Entry*> Section::find_all(const std::string& key) const {
    std::vector<const Entry*> out;
    for (const auto& e : entries)
        if (e.key == key) out.push_back(&e);
    return out;
}

static std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

namespace {

struct ValueParser {
    const std::string& text;
    const std::string& source;
    int line;
    int col0;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source, line, col0 + static_cast<int>(pos), msg);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    Value parse() {
        skip_ws();
        Value v;
        v.line = line;
        v.col = col0 + static_cast<int>(pos);
        if (pos < text.size() && text[pos] == '[') {
            ++pos;
            v.is_list = true;
            skip_ws();
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                return v;
            }
            for (;;) {
                v.items.push_back(parse());
                skip_ws();
                if (pos >= text.size()) fail("unterminated list");
                if (text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (text[pos] == ']') {
                    ++pos;
                    return v;
                }
                fail(std::string("unexpected '") + text[pos] + "' in list");
            }
        }
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && text[pos] != ']' && text[pos] != '[') ++pos;
        v.scalar = trim(text.substr(start, pos - start));
        if (v.scalar.empty()) fail("empty value");
        return v;
    }
};

}  // namespace

Value parse_value(const std::string& text, const std::string& source, int line, int col) {
    ValueParser p{text, source, line, col};
    Value v = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing characters after value");
    return v;
}

Document Document::parse(const std::string& text, const std::string& source) {
    Document d;
    d.source_ = source;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    Section* cur = nullptr;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        auto hash = s.find('#');
        if (hash != std::string::npos) {
            std::string comment = trim(s.substr(hash + 1));
            const std::string tag = "fixture format version";
            if (comment.rfind(tag, 0) == 0) {
                std::string v = trim(comment.substr(tag.size()));
                if (v != std::to_string(kFormatVersion))
                    throw ParseError(source, line, static_cast<int>(hash + 1),
                                     "unsupported fixture format version '" + v + "' (this build reads " +
                                         std::to_string(kFormatVersion) + ")");
            }
            s = s.substr(0, hash);
        }
        std::string t = trim(s);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw ParseError(source, line, 1, "malformed section header");
            std::string name = trim(t.substr(1, t.size() - 2));
            if (name.empty()) throw ParseError(source, line, 2, "empty section name");
            for (const auto& sec : d.sections_)
                if (sec.name == name) throw ParseError(source, line, 1, "duplicate section [" + name + "]");
            d.sections_.push_back({name, {}, line});
            cur = &d.sections_.back();
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(source, line, 1, "expected 'key = value'");
        if (!cur) throw ParseError(source, line, 1, "entry outside of any section");
        std::string key = trim(s.substr(0, eq));
        if (key.empty()) throw ParseError(source, line, 1, "empty key");
        for (char c : key)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-')
                throw ParseError(source, line, 1, "invalid key '" + key + "'");
        std::string val = s.substr(eq + 1);
        std::size_t lead = 0;
        while (lead < val.size() && std::isspace(static_cast<unsigned char>(val[lead]))) ++lead;
        std::string v = trim(val);
        if (v.empty()) throw ParseError(source, line, static_cast<int>(eq + 2), "missing value");
        cur->entries.push_back({key, v, line, static_cast<int>(eq + 2 + lead)});
    }
    return d;
}

Document Document::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

const Section* Document::find(const std::string& name) const {
    for (const auto& s : sections_)
        if (s.name == name) return &s;
    return nullptr;
}

const Section& Document::require(const std::string& name) const {
    const Section* s = find(name);
    if (!s) throw ParseError(source_, 0, 0, "missing section [" + name + "]");
    return *s;
}

const Entry& Document::require(const std::string& section, const std::string& key) const {
    const Section& s = require(section);
    const Entry* e = s.find(key);
    if (!e) throw ParseError(source_, s.line, 1, "missing key '" + key + "' in [" + section + "]");
    return *e;
}

Value Document::value(const Entry& e) const { return parse_value(e.raw, source_, e.line, e.col); }

void Document::fail(const Entry& e, const std::string& msg) const {
    throw ParseError(source_, e.line, e.col, msg);
}

void Document::fail(int line, const std::string& msg) const { throw ParseError(source_, line, 1, msg); }

void Document::check_keys(const std::vector<std::pair<std::string, std::vector<std::string>>>& allowed,
                          bool strict, std::vector<std::string>* warnings) const {
    for (const auto& sec : sections_) {
        auto it = std::find_if(allowed.begin(), allowed.end(), [&](const auto& a) { return a.first == sec.name; });
        std::vector<std::string> problems;
        if (it == allowed.end()) {
            problems.push_back("unknown section [" + sec.name + "]");
            if (strict) throw ParseError(source_, sec.line, 1, problems.back());
            if (warnings) warnings->push_back(source_ + ":" + std::to_string(sec.line) + ": " + problems.back());
            continue;
        }
        const auto& keys = it->second;
        if (std::find(keys.begin(), keys.end(), "*") != keys.end()) continue;
        for (const auto& e : sec.entries) {
            if (std::find(keys.begin(), keys.end(), e.key) != keys.end()) continue;
            std::string msg = "unknown key '" + e.key + "' in [" + sec.name + "]";
            if (strict) throw ParseError(source_, e.line, 1, msg);
            if (warnings) warnings->push_back(source_ + ":" + std::to_string(e.line) + ": " + msg);
        }
    }
}

Int Document::get_int(const Entry& e) const {
    try {
        return parse_int(e.raw);
    } catch (const ParseError&) {
        throw;
    } catch (const Error& ex) {
        fail(e, ex.what());
    }
}

Rat Document::get_rat(const Entry& e) const {
    try {
        return parse_rat(e.raw);
    } catch (const Error& ex) {
        fail(e, ex.what());
    }
}

namespace {

template <class T, class F>
std::vector<T> scalars(const Document& d, const Entry& e, const Value& v, F conv) {
    if (!v.is_list) d.fail(e, "expected a list");
    std::vector<T> out;
    for (const auto& it : v.items) {
        if (it.is_list) throw ParseError(d.source(), it.line, it.col, "expected a scalar");
        try {
            out.push_back(conv(it.scalar));
        } catch (const Error& ex) {
            throw ParseError(d.source(), it.line, it.col, ex.what());
        }
    }
    return out;
}

}  // namespace

std::vector<Int> Document::get_int_vector(const Entry& e) const {
    return scalars<Int>(*this, e, value(e), [](const std::string& s) { return parse_int(s); });
}

std::vector<Rat> Document::get_rat_vector(const Entry& e) const {
    return scalars<Rat>(*this, e, value(e), [](const std::string& s) { return parse_rat(s); });
}

std::vector<std::string> Document::get_string_list(const Entry& e) const {
    return scalars<std::string>(*this, e, value(e), [](const std::string& s) { return s; });
}

IntegerMatrix Document::get_int_matrix(const Entry& e) const {
    Value v = value(e);
    if (!v.is_list) fail(e, "expected a matrix");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : v.items) {
        Entry sub{e.key, r.str(), r.line, r.col};
        rows.push_back(scalars<Int>(*this, sub, r, [](const std::string& s) { return parse_int(s); }));
        if (rows.back().size() != rows.front().size()) throw ParseError(source_, r.line, r.col, "ragged matrix");
    }
    return IntegerMatrix::from_rows(rows);
}

std::vector<std::vector<Rat>> Document::get_rat_matrix(const Entry& e) const {
    Value v = value(e);
    if (!v.is_list) fail(e, "expected a matrix");
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : v.items) {
        Entry sub{e.key, r.str(), r.line, r.col};
        rows.push_back(scalars<Rat>(*this, sub, r, [](const std::string& s) { return parse_rat(s); }));
        if (rows.back().size() != rows.front().size()) throw ParseError(source_, r.line, r.col, "ragged matrix");
    }
    return rows;
}

}  // namespace k3dn
