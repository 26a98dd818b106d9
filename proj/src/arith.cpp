#include "k3dn/arith.hpp"

#include <cctype>

namespace k3dn {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
    if (den(v) == 1) return num(v).str();
    return num(v).str() + "/" + den(v).str();
}

static bool valid_int_text(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Int parse_int(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (!valid_int_text(s)) throw Error("not an integer: '" + raw + "'");
    if (s[0] == '+') s = s.substr(1);
    return Int(s);
}

Rat parse_rat(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d == 0) throw Error("zero denominator: '" + raw + "'");
    return Rat(n, d);
}

Rat rat_pow(const Rat& base, long e) {
    Rat b = base;
    if (e < 0) {
        if (b == 0) throw Error("zero to a negative power");
        b = Rat(den(b), num(b));
        e = -e;
    }
    Rat r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

}  // namespace k3dn
