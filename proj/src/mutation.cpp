#include "k3dn/mutation.hpp"

#include "k3dn/polytope.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace k3dn {

namespace {

long dot(const Exponent& a, const Exponent& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// multiply by g^w, dividing exactly when w < 0
LaurentPolynomial weight_factor(const LaurentPolynomial& part, const LaurentPolynomial& g, long w) {
    if (w >= 0) return part * g.pow(w);
    return divide_exact(part, g.pow(-w));
}

}  // namespace

LaurentPolynomial mutate(const LaurentPolynomial& p, const Exponent& m, const LaurentPolynomial& g) {
    std::size_t n = p.n_vars();
    if (m.size() != n || g.n_vars() != n) throw Error("mutation data has wrong dimension");
    if (std::all_of(m.begin(), m.end(), [](long v) { return v == 0; })) throw Error("mutation direction is zero");
    if (g.is_zero()) throw Error("mutation factor is zero");
    for (const auto& e : g.support())
        if (dot(m, e) != 0) throw Error("mutation factor support is not orthogonal to the direction");
    std::map<long, LaurentPolynomial> graded;
    for (const auto& [e, c] : p.terms()) {
        auto it = graded.try_emplace(dot(m, e), n).first;
        it->second.add_term(e, c);
    }
    LaurentPolynomial out(n);
    for (const auto& [w, part] : graded) {
        try {
            out += weight_factor(part, g, w);
        } catch (const Error&) {
            throw Error("not mutable along (m,g): weight " + std::to_string(w) + " part " + format_laurent(part) +
                        " is not divisible by (" + format_laurent(g) + ")^" + std::to_string(-w));
        }
    }
    return out;
}

LaurentPolynomial mutate_triple(const LaurentPolynomial& p, const MutationTriple& t) {
    if (p.n_vars() != 3 || t.f.n_vars() != 3) throw Error("mutation triples act on three variables");
    for (const auto& e : t.f.support())
        if (e[2] != 0) throw Error("mutation triple factor must not involve z");
    LaurentPolynomial q = monomial_transform(p, t.M.transpose());
    std::map<long, LaurentPolynomial> graded;
    for (const auto& [e, c] : q.terms()) {
        auto it = graded.try_emplace(e[2], 3).first;
        it->second.add_term(e, c);
    }
    LaurentPolynomial r(3);
    for (const auto& [w, part] : graded) {
        try {
            r += weight_factor(part, t.f, w);
        } catch (const Error&) {
            throw Error("mutation triple gives a non-Laurent result at z-degree " + std::to_string(w));
        }
    }
    return monomial_transform(r, t.N.transpose());
}

namespace {

// exponent vectors v from which the origin is still reachable in R steps: -v in R * Newton(p)
struct Reach {
    std::vector<Facet> facets;
    Point lo, hi;

    bool ok(const Exponent& v, long R) const {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (-v[i] < R * lo[i] || -v[i] > R * hi[i]) return false;
        for (const auto& f : facets) {
            long s = 0;
            for (std::size_t i = 0; i < v.size(); ++i) s -= f.normal[i] * v[i];
            if (s < R * f.offset) return false;
        }
        return true;
    }
};

using Dense = std::map<Exponent, Rat>;

Dense multiply_range(Dense::const_iterator first, Dense::const_iterator last,
                     const std::vector<std::pair<Exponent, Rat>>& p, const Reach& reach, long R) {
    Dense out;
    for (auto it = first; it != last; ++it)
        for (const auto& [e, c] : p) {
            Exponent v = it->first;
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += e[i];
            if (!reach.ok(v, R)) continue;
            out[v] += it->second * c;
        }
    return out;
}

}  // namespace

std::vector<Rat> main_period(const LaurentPolynomial& p, int N, unsigned threads) {
    if (N < 0) throw Error("period length must be nonnegative");
    if (!p.is_rational()) throw Error("main period needs rational coefficients; specialize the parameters first");
    std::size_t n = p.n_vars();
    std::vector<Rat> out{Rat(1)};
    if (N == 0) return out;
    if (p.is_zero()) {
        out.resize(N + 1, Rat(0));
        return out;
    }
    std::vector<std::pair<Exponent, Rat>> terms;
    for (const auto& [e, c] : p.terms()) terms.emplace_back(e, c.constant());

    Reach reach;
    reach.lo = reach.hi = terms[0].first;
    for (const auto& [e, c] : terms)
        for (std::size_t i = 0; i < n; ++i) {
            reach.lo[i] = std::min(reach.lo[i], e[i]);
            reach.hi[i] = std::max(reach.hi[i], e[i]);
        }
    if (n > 0 && n <= 3) {
        LatticePolytope P = newton_polytope(p);
        if (P.full_dimensional()) reach.facets = P.facets();
    }

    Dense cur{{Exponent(n, 0), Rat(1)}};
    threads = std::max(1u, threads);
    for (int j = 1; j <= N; ++j) {
        long R = N - j;
        Dense next;
        if (threads == 1 || cur.size() < 256) {
            next = multiply_range(cur.begin(), cur.end(), terms, reach, R);
        } else {
            std::vector<std::future<Dense>> parts;
            std::size_t chunk = (cur.size() + threads - 1) / threads;
            auto it = cur.begin();
            while (it != cur.end()) {
                auto first = it;
                for (std::size_t k = 0; k < chunk && it != cur.end(); ++k) ++it;
                parts.push_back(std::async(std::launch::async, multiply_range, first, it,
                                           std::cref(terms), std::cref(reach), R));
            }
            for (auto& f : parts)
                for (auto& [e, c] : f.get()) next[e] += c;
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        auto z = next.find(Exponent(n, 0));
        out.push_back(z == next.end() ? Rat(0) : z->second);
        cur = std::move(next);
    }
    return out;
}

}  // namespace k3dn
