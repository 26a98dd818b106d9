#include "k3dn/lgmodels.hpp"

#include "k3dn/polytope.hpp"

#include <algorithm>
#include <map>

namespace k3dn {

namespace {

ParamPolynomial a(int k) { return ParamPolynomial::param("a" + std::to_string(k)); }

using Coeffs = std::map<Point, ParamPolynomial>;

// points added after x + y + a1 x^-1 y^-1, one per blown-up point
const std::vector<Point> kBlowupPoints{{-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -2}, {2, 1}};

std::vector<Point> keys(const Coeffs& c) {
    std::vector<Point> v;
    for (const auto& [p, k] : c) v.push_back(p);
    return v;
}

// resolution model: each new point gets c_L c_R a_k from its boundary neighbours
Coeffs resolved_dp(int degree) {
    Coeffs c{{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, a(1)}};
    for (int k = 2; k <= 10 - degree; ++k) {
        const Point& K = kBlowupPoints[k - 2];
        std::vector<Point> pts = keys(c);
        pts.push_back(K);
        std::vector<Point> cyc = boundary_cycle(convex_hull(pts, 2));
        auto it = std::find(cyc.begin(), cyc.end(), K);
        if (it == cyc.end()) throw Error("internal: new point is not on the boundary");
        std::size_t i = it - cyc.begin(), n = cyc.size();
        const Point& L = cyc[(i + n - 1) % n];
        const Point& R = cyc[(i + 1) % n];
        if (!c.count(L) || !c.count(R)) throw Error("internal: boundary neighbour without coefficient");
        c[K] = c[L] * c[R] * a(k);
    }
    return c;
}

// boundary edges with interior points get prod (c_j + c_{j+1} s) / prod_{interior} c_j
Coeffs modify(const Coeffs& c) {
    LatticePolytope P = convex_hull(keys(c), 2);
    std::vector<Point> cyc = boundary_cycle(P);
    std::vector<Point> corners = P.vertices();
    auto is_vertex = [&](const Point& p) { return std::find(corners.begin(), corners.end(), p) != corners.end(); };
    std::size_t start = 0;
    while (!is_vertex(cyc[start])) ++start;
    Coeffs out = c;
    std::size_t n = cyc.size();
    for (std::size_t i = 0; i < n;) {
        std::vector<Point> edge{cyc[(start + i) % n]};
        std::size_t j = i + 1;
        while (!is_vertex(cyc[(start + j) % n])) edge.push_back(cyc[(start + j++) % n]);
        edge.push_back(cyc[(start + j) % n]);
        i = j;
        if (edge.size() <= 2) continue;
        std::vector<ParamPolynomial> cs;
        for (const auto& p : edge) {
            auto f = c.find(p);
            if (f == c.end()) throw Error("internal: boundary point without coefficient");
            cs.push_back(f->second);
        }
        std::vector<ParamPolynomial> poly{ParamPolynomial(1)};
        for (std::size_t t = 0; t + 1 < cs.size(); ++t) {
            std::vector<ParamPolynomial> next(poly.size() + 1, ParamPolynomial(0));
            for (std::size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d] * cs[t];
                next[d + 1] += poly[d] * cs[t + 1];
            }
            poly = std::move(next);
        }
        ParamPolynomial denom(1);
        for (std::size_t t = 1; t + 1 < cs.size(); ++t) denom *= cs[t];
        ParamPolynomial inv = denom.inverse();
        for (std::size_t t = 0; t < edge.size(); ++t) out[edge[t]] = poly[t] * inv;
    }
    return out;
}

LaurentPolynomial from_coeffs(const Coeffs& c, std::size_t n) {
    LaurentPolynomial p(n);
    for (const auto& [e, k] : c) {
        Exponent x(n, 0);
        std::copy(e.begin(), e.end(), x.begin());
        p.add_term(x, k);
    }
    return p;
}

struct Family {
    std::string surface;
    int z_param;
    std::vector<Exponent> images;
};

const std::map<std::string, Family>& families() {
    static const std::map<std::string, Family> f{
        {"2.34", {"dP9", 2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}},
        {"3.27", {"quadric-T4", 3, {}}},
        {"3.28", {"dP8", 3, {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}}}},
        {"4.10", {"dP7", 4, {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}}},
        {"5.3", {"dP6", 5, {{0, -1, 0}, {0, 0, 1}, {1, 0, 0}}}},
        {"6.1", {"dP5", 6, {{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}}},
        {"7.1", {"dP4", 7, {{0, -1, 0}, {-1, 1, 0}, {0, 0, 1}}}},
        {"8.1", {"dP3", 8, {{0, 1, -1}, {0, 0, 1}, {1, 0, 0}}}},
    };
    return f;
}

}  // namespace

std::vector<std::string> lg_targets() {
    std::vector<std::string> t{"dP9", "dP8", "dP7", "dP6", "dP5", "dP5~", "dP4", "dP4~", "dP3", "dP3~",
                               "quadric-T4", "quadric-T2", "quadric-T2~"};
    for (const auto& [id, f] : families()) t.push_back(id);
    return t;
}

LaurentPolynomial lg_constructor(const std::string& target) {
    if (target == "quadric-T4") return parse_laurent("x + a*x^-1 + y + b*y^-1", 2);
    if (target == "quadric-T2") return parse_laurent("y + a*x^-1*y^-1 + (a + b)*y^-1 + b*x*y^-1", 2);
    if (target == "quadric-T2~") return parse_laurent("y + b*x^-1*y^-1 + a*y^-1 + x*y^-1", 2);
    if (target.size() >= 3 && target.compare(0, 2, "dP") == 0) {
        bool tilde = target.back() == '~';
        std::string deg = target.substr(2, target.size() - 2 - (tilde ? 1 : 0));
        if (deg.size() == 1 && deg[0] >= '3' && deg[0] <= '9') {
            Coeffs c = resolved_dp(deg[0] - '0');
            return from_coeffs(tilde ? c : modify(c), 2);
        }
        if (deg == "1" || deg == "2")
            throw Error("unsupported target " + target + ": no Gorenstein toric degeneration in degree " + deg);
    }
    auto it = families().find(target);
    if (it == families().end()) throw Error("unsupported target: " + target);
    const Family& f = it->second;
    LaurentPolynomial s = lg_constructor(f.surface);
    if (f.surface == "quadric-T4") s = substitute_params(s, {{"a", a(1)}, {"b", a(2)}});
    LaurentPolynomial p(3);
    for (const auto& [e, c] : s.terms()) p.add_term({e[0], e[1], 0}, c);
    p.add_term({0, 0, 1}, 1);
    p.add_term({0, 0, -1}, a(f.z_param));
    return p;
}

std::optional<std::vector<Exponent>> standard_change_of_variables(const std::string& family) {
    auto it = families().find(family);
    if (it == families().end() || it->second.images.empty()) return std::nullopt;
    return it->second.images;
}

}  // namespace k3dn
