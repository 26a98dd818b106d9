#include "k3dn/periodmap.hpp"

#include <numeric>

namespace k3dn {

namespace {

ParamPolynomial formula(const std::string& text, const std::map<std::string, ParamPolynomial>& values) {
    return parse_laurent(text, 1).constant_term().substitute(values);
}

const char* kAlpha233 = "1/9*(144*a1*a2*a3*a4 + 24*a0*a1*a4*a5 + a5^4)";
const char* kBeta233 = "-1/27*(216*a0^2*a1^2*a4^2 - 648*a1*a2*a3*a4*a5^2 + 36*a0*a1*a4*a5^3 + a5^6)";
const char* kGamma233 = "1024*a3*a2*a0^2*a4^3*a1^3";
const char* kDelta233 = "1024/3*a3*a2*a4^3*a1^3*(12*a2^2*a3^2 - 12*a0*a2*a3*a5 + a0^2*a5^2)";

const char* kPiAB[4] = {
    "1/9*(144*a*lam^4 + 24*a*b*lam^3*mu + b^4*mu^4)",
    "-1/27*(216*a^2*lam^6 - 648*a*b^2*lam^4*mu^2 + 36*a*b^3*lam^3*mu^3 + b^6*mu^6)",
    "1024*a^3*lam^10",
    "1024/3*a^3*lam^10*(12*lam^2 - 12*b*lam*mu + b^2*mu^2)",
};

const char* kPiCD[4] = {
    "1/9*(d^4*lam^4 - 4*d^3*lam^3*mu - 24*c*d*lam^3*mu + 6*d^2*lam^2*mu^2 + 168*c*lam^2*mu^2 - 4*d*lam*mu^3 "
    "+ mu^4)",
    "-1/27*(d^6*lam^6 - 6*d^5*lam^5*mu - 36*c*d^3*lam^5*mu + 15*d^4*lam^4*mu^2 - 540*c*d^2*lam^4*mu^2 "
    "- 20*d^3*lam^3*mu^3 + 216*c^2*lam^4*mu^2 + 1188*c*d*lam^3*mu^3 + 15*d^2*lam^2*mu^4 - 612*c*lam^2*mu^4 "
    "- 6*d*lam*mu^5 + mu^6)",
    "1024*c^3*mu^4*lam^6",
    "1024/3*c^3*mu^4*lam^6*(d^2*lam^2 + 10*d*lam*mu + mu^2)",
};

// second and third coordinates of the 2.1 map; the first is lam^(2/3)
const char* kPiC[2] = {"1728*c*mu^2 - lam^2 + 864*lam*mu", "2^12*3^6*(c*mu + lam)*mu^3*c"};

ParamPolynomial need(const std::map<std::string, ParamPolynomial>& params, const std::string& name,
                     const std::string& family) {
    auto it = params.find(name);
    if (it == params.end()) throw Error("period map " + family + " needs parameter " + name);
    return it->second;
}

}  // namespace

std::array<ParamPolynomial, 4> modular_invariants_233(const std::array<ParamPolynomial, 6>& a) {
    std::map<std::string, ParamPolynomial> v;
    for (int i = 0; i < 6; ++i) v.emplace("a" + std::to_string(i), a[i]);
    return {formula(kAlpha233, v), formula(kBeta233, v), formula(kGamma233, v), formula(kDelta233, v)};
}

std::vector<long> period_map_weights(const std::string& family) {
    if (family == "2.1") return {2, 3, 6};
    if (family == "2.28" || family == "2.33") return {2, 3, 5, 6};
    throw Error("no period map for family " + family);
}

WPoint period_map_eval(const std::string& family, const std::map<std::string, ParamPolynomial>& params,
                       const ParamPolynomial& lambda, const ParamPolynomial& mu) {
    std::map<std::string, ParamPolynomial> v{{"lam", lambda}, {"mu", mu}};
    if (family == "2.33" || family == "2.28") {
        const char* const* f = family == "2.33" ? kPiAB : kPiCD;
        for (const char* p : family == "2.33" ? std::vector<const char*>{"a", "b"} : std::vector<const char*>{"c", "d"})
            v.emplace(p, need(params, p, family));
        return {formula(f[0], v), formula(f[1], v), formula(f[2], v), formula(f[3], v)};
    }
    if (family == "2.1") {
        v.emplace("c", need(params, "c", family));
        ParamPolynomial beta = formula(kPiC[0], v), delta = formula(kPiC[1], v);
        if (lambda.is_zero()) return {ParamPolynomial(0), beta, delta};
        if (!lambda.is_monomial()) throw Error("period map 2.1 needs lambda to be zero or a monomial");
        ParamPolynomial inv = lambda.inverse();
        return {ParamPolynomial(1), beta * inv, delta * inv * inv};
    }
    throw Error("no period map for family " + family);
}

bool wp_equal(const WPoint& p, const WPoint& q, const std::vector<long>& w) {
    if (p.size() != w.size() || q.size() != w.size()) throw Error("weighted point has wrong length");
    auto all_zero = [](const WPoint& x) {
        for (const auto& c : x)
            if (!c.is_zero()) return false;
        return true;
    };
    if (all_zero(p) || all_zero(q)) throw Error("weighted point with all coordinates zero");
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] <= 0) throw Error("weights must be positive");
        if (p[i].is_zero() != q[i].is_zero()) return false;
        if (!p[i].is_zero()) S.push_back(i);
    }
    // Bezout coefficients k with sum k_i w_i = g over S
    long g = 0;
    std::vector<long> k(w.size(), 0);
    for (std::size_t i : S) {
        if (g == 0) {
            g = w[i];
            k[i] = 1;
            continue;
        }
        // extended gcd of g and w_i
        long r0 = g, r1 = w[i], s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1 != 0) {
            long qt = r0 / r1;
            r0 -= qt * r1, std::swap(r0, r1);
            s0 -= qt * s1, std::swap(s0, s1);
            t0 -= qt * t1, std::swap(t0, t1);
        }
        for (std::size_t j : S)
            if (j != i) k[j] *= s0;
        k[i] = t0;
        g = r0;
    }
    // s = prod (p_j/q_j)^{k_j}; need p_i/q_i = s^{w_i/g}
    for (std::size_t i : S) {
        long e = w[i] / g;
        ParamPolynomial lhs = p[i], rhs = q[i];
        for (std::size_t j : S) {
            long c = k[j] * e;
            if (c > 0) {
                lhs *= q[j].pow(c);
                rhs *= p[j].pow(c);
            } else if (c < 0) {
                lhs *= p[j].pow(-c);
                rhs *= q[j].pow(-c);
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

bool wp_equal(const std::vector<Rat>& p, const std::vector<Rat>& q, const std::vector<long>& weights) {
    WPoint a, b;
    for (const auto& x : p) a.emplace_back(x);
    for (const auto& x : q) b.emplace_back(x);
    return wp_equal(a, b, weights);
}

}  // namespace k3dn
