#include "k3dn/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace k3dn {

std::string MinkowskiDatum::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += "(" + parts[i].summand.str() + ", " + std::to_string(parts[i].multiplicity) + ")";
    }
    return s + "}";
}

MinkowskiDatum trivial_datum(const LatticePolytope& face) { return {{{face.normalized(), 1}}}; }

namespace {

struct Edge {
    Point dir;  // primitive, local coordinates
    long length;
};

std::vector<Edge> local_edges(const LatticePolytope& p) {
    if (p.dim() == 1) {
        const auto& v = p.local_vertices();
        long len = std::max(v[0][0], v[1][0]) - std::min(v[0][0], v[1][0]);
        return {{{1}, len}, {{-1}, len}};
    }
    std::vector<Point> cyc = ccw_local_vertices(p);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Point& a = cyc[i];
        const Point& b = cyc[(i + 1) % cyc.size()];
        Point d{b[0] - a[0], b[1] - a[1]};
        out.push_back({primitive(d), lattice_length(d)});
    }
    return out;
}

using PointSet = std::set<Point>;

PointSet set_sum(const PointSet& a, const PointSet& b) {
    PointSet r;
    for (const auto& u : a)
        for (const auto& v : b) {
            Point w = u;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
            r.insert(w);
        }
    return r;
}

// summand polygon in local coordinates walked out from edge multiplicities
std::vector<Point> walk(const std::vector<Edge>& edges, const std::vector<long>& m, std::size_t k) {
    std::vector<Point> pts{Point(k, 0)};
    Point cur(k, 0);
    for (std::size_t j = 0; j < edges.size(); ++j) {
        for (std::size_t i = 0; i < k; ++i) cur[i] += m[j] * edges[j].dir[i];
        pts.push_back(cur);
    }
    return pts;
}

LatticePolytope to_ambient_summand(const LatticePolytope& face, const std::vector<Point>& local) {
    std::vector<Point> amb;
    Point zero(face.ambient(), 0);
    for (const auto& q : local) {
        Point p = zero;
        for (std::size_t j = 0; j < q.size(); ++j)
            for (std::size_t i = 0; i < face.ambient(); ++i) p[i] += q[j] * face.basis()[j][i];
        amb.push_back(p);
    }
    return convex_hull(amb, face.ambient()).normalized();
}

void integer_partitions(long n, long max_part, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        integer_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

PointSet lattice_point_set(const LatticePolytope& p) {
    auto v = p.lattice_points();
    return PointSet(v.begin(), v.end());
}

bool datum_less(const MinkowskiDatum& a, const MinkowskiDatum& b) {
    auto key = [](const MinkowskiDatum& d) {
        long total = 0;
        for (const auto& p : d.parts) total += p.multiplicity;
        return std::make_pair(static_cast<long>(d.parts.size()), total);
    };
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    std::vector<std::pair<std::vector<Point>, long>> va, vb;
    for (const auto& p : a.parts) va.emplace_back(p.summand.vertices(), p.multiplicity);
    for (const auto& p : b.parts) vb.emplace_back(p.summand.vertices(), p.multiplicity);
    return va < vb;
}

}  // namespace

std::vector<MinkowskiDatum> minkowski_decompositions(const LatticePolytope& polygon) {
    if (polygon.empty()) throw Error("empty polytope");
    if (polygon.dim() > 2) throw Error("only facets supported: decompositions need dimension <= 2");
    if (polygon.dim() == 0) return {trivial_datum(polygon)};
    std::size_t k = static_cast<std::size_t>(polygon.dim());
    std::vector<Edge> edges = local_edges(polygon);

    // closed sub-vectors of the edge-length vector
    std::vector<std::vector<long>> closed;
    {
        double space = 1;
        for (const auto& e : edges) space *= static_cast<double>(e.length + 1);
        if (space > 2e6) throw Error("polygon too large for exhaustive decomposition");
        std::vector<long> m(edges.size(), 0);
        for (;;) {
            std::size_t i = 0;
            while (i < m.size() && m[i] == edges[i].length) m[i] = 0, ++i;
            if (i == m.size()) break;
            ++m[i];
            Point s(k, 0);
            for (std::size_t j = 0; j < edges.size(); ++j)
                for (std::size_t t = 0; t < k; ++t) s[t] += m[j] * edges[j].dir[t];
            if (s == Point(k, 0)) closed.push_back(m);
        }
    }

    std::vector<LatticePolytope> local_summands, ambient_summands;
    std::vector<PointSet> summand_points;
    for (const auto& m : closed) {
        LatticePolytope loc = convex_hull(walk(edges, m, k), k);
        local_summands.push_back(loc);
        summand_points.push_back(lattice_point_set(loc));
        ambient_summands.push_back(to_ambient_summand(polygon, loc.vertices()));
    }
    PointSet target;
    {
        LatticePolytope loc = convex_hull(polygon.local_vertices(), k);
        target = lattice_point_set(loc.normalized());
    }

    std::vector<MinkowskiDatum> out;
    std::vector<long> counts(closed.size(), 0);
    std::vector<long> full;
    for (const auto& e : edges) full.push_back(e.length);

    std::function<void(std::size_t, std::vector<long>&)> rec = [&](std::size_t idx, std::vector<long>& rest) {
        if (std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; })) {
            // lattice-point condition
            PointSet sum{Point(k, 0)};
            for (std::size_t i = 0; i < closed.size(); ++i)
                for (long c = 0; c < counts[i]; ++c) sum = set_sum(sum, summand_points[i]);
            Point lo = *sum.begin();
            PointSet shifted;
            for (const auto& p : sum) {
                Point q = p;
                for (std::size_t t = 0; t < k; ++t) q[t] -= lo[t];
                shifted.insert(q);
            }
            if (shifted != target) return;
            // repeated summands split by integer partitions of their count
            std::vector<std::vector<std::vector<long>>> splits;
            std::vector<std::size_t> used;
            for (std::size_t i = 0; i < closed.size(); ++i)
                if (counts[i] > 0) {
                    std::vector<long> cur;
                    std::vector<std::vector<long>> parts;
                    integer_partitions(counts[i], counts[i], cur, parts);
                    splits.push_back(parts);
                    used.push_back(i);
                }
            std::vector<std::size_t> choice(splits.size(), 0);
            for (;;) {
                MinkowskiDatum d;
                for (std::size_t u = 0; u < used.size(); ++u)
                    for (long mult : splits[u][choice[u]]) d.parts.push_back({ambient_summands[used[u]], mult});
                out.push_back(std::move(d));
                std::size_t u = 0;
                while (u < choice.size() && choice[u] + 1 == splits[u].size()) choice[u] = 0, ++u;
                if (u == choice.size()) break;
                ++choice[u];
            }
            return;
        }
        if (idx == closed.size()) return;
        const auto& m = closed[idx];
        long most = -1;
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[j] > 0) {
                long c = rest[j] / m[j];
                most = most < 0 ? c : std::min(most, c);
            }
        for (long c = most; c >= 0; --c) {
            counts[idx] = c;
            for (std::size_t j = 0; j < m.size(); ++j) rest[j] -= c * m[j];
            rec(idx + 1, rest);
            for (std::size_t j = 0; j < m.size(); ++j) rest[j] += c * m[j];
        }
        counts[idx] = 0;
    };
    rec(0, full);
    std::sort(out.begin(), out.end(), [](const MinkowskiDatum& a, const MinkowskiDatum& b) {
        if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
        return datum_less(a, b);
    });
    return out;
}

bool is_lattice_decomposition(const LatticePolytope& polygon, const MinkowskiDatum& datum) {
    if (datum.parts.empty()) return false;
    std::size_t n = polygon.ambient();
    LatticePolytope sum = convex_hull({Point(n, 0)}, n);
    PointSet pts{Point(n, 0)};
    for (const auto& part : datum.parts) {
        if (part.multiplicity < 1) return false;
        PointSet sp = lattice_point_set(part.summand);
        for (long c = 0; c < part.multiplicity; ++c) {
            sum = minkowski_sum(sum, part.summand);
            pts = set_sum(pts, sp);
        }
    }
    if (!sum.same_up_to_translation(polygon)) return false;
    PointSet target = lattice_point_set(polygon);
    if (pts.size() != target.size()) return false;
    Point t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = target.begin()->at(i) - pts.begin()->at(i);
    for (const auto& p : pts) {
        Point q = p;
        for (std::size_t i = 0; i < n; ++i) q[i] += t[i];
        if (!target.count(q)) return false;
    }
    return true;
}

bool refines(const MinkowskiDatum& m1, const MinkowskiDatum& m2) {
    const auto& S = m1.parts;
    const auto& D = m2.parts;
    if (S.empty() || D.empty()) return false;
    std::size_t l = S.size(), k = D.size();
    std::size_t n = S[0].summand.ambient();
    // e[i][j] copies of sigma_i go to delta_j, with sum_j n_j e_ij = m_i
    std::vector<std::vector<long>> e(l, std::vector<long>(k, 0));
    std::function<bool(std::size_t, std::size_t, long)> rec = [&](std::size_t i, std::size_t j, long left) -> bool {
        if (i == l) {
            for (std::size_t jj = 0; jj < k; ++jj) {
                LatticePolytope sum = convex_hull({Point(n, 0)}, n);
                bool any = false;
                for (std::size_t ii = 0; ii < l; ++ii)
                    for (long c = 0; c < e[ii][jj]; ++c) {
                        sum = minkowski_sum(sum, S[ii].summand);
                        any = true;
                    }
                if (!any || !sum.same_up_to_translation(D[jj].summand)) return false;
            }
            return true;
        }
        if (j == k) return left == 0 && rec(i + 1, 0, i + 1 < l ? S[i + 1].multiplicity : 0);
        long nj = D[j].multiplicity;
        for (long c = left / nj; c >= 0; --c) {
            e[i][j] = c;
            if (rec(i, j + 1, left - c * nj)) return true;
        }
        e[i][j] = 0;
        return false;
    };
    return rec(0, 0, S[0].multiplicity);
}

// ---- Minkowski polynomials

bool is_unit_segment(const LatticePolytope& s) {
    return s.dim() == 1 && lattice_length([&] {
               Point d = s.vertices()[1];
               for (std::size_t i = 0; i < d.size(); ++i) d[i] -= s.vertices()[0][i];
               return d;
           }()) == 1;
}

static Point diff(const Point& a, const Point& b) {
    Point r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

long an_triangle_index(const LatticePolytope& s) {
    if (s.dim() != 2 || s.vertices().size() != 3) return 0;
    const auto& v = s.vertices();
    std::vector<long> len{lattice_length(diff(v[1], v[0])), lattice_length(diff(v[2], v[1])),
                          lattice_length(diff(v[0], v[2]))};
    std::sort(len.begin(), len.end());
    if (len[0] != 1 || len[1] != 1) return 0;
    // no interior points: |points| = boundary count n + 2
    if (static_cast<long>(s.lattice_points().size()) != len[2] + 2) return 0;
    return len[2];
}

static Int binom(long n, long k) {
    Int r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// normalized factor: 1 + x^u on a unit segment, (1+y)^n + x on an A_n triangle
static LaurentPolynomial normalized_factor(const LatticePolytope& s) {
    std::size_t n = s.ambient();
    const auto& v = s.vertices();
    if (is_unit_segment(s)) return LaurentPolynomial::monomial(v[0]) + LaurentPolynomial::monomial(v[1]);
    long idx = an_triangle_index(s);
    if (idx == 0) throw Error("summand is neither a unit segment nor an A_n triangle");
    for (std::size_t a = 0; a < 3; ++a) {
        std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
        Point d = diff(v[b], v[a]);
        if (lattice_length(d) != idx) continue;
        Point step = primitive(d);
        LaurentPolynomial h = LaurentPolynomial::monomial(v[c]);
        for (long t = 0; t <= idx; ++t) {
            Point e = v[a];
            for (std::size_t i = 0; i < n; ++i) e[i] += t * step[i];
            h.add_term(e, ParamPolynomial(Rat(binom(idx, t))));
        }
        return h;
    }
    throw Error("internal: A_n triangle without a long edge");
}

static Exponent lex_min(const LaurentPolynomial& p) { return p.terms().begin()->first; }

// p == q * x^nu for some nu
static bool equal_up_to_monomial(const LaurentPolynomial& p, const LaurentPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.size() != q.size()) return false;
    Exponent a = lex_min(p), b = lex_min(q), s(a.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] - b[i];
    return q.shift(s) == p;
}

MinkowskiCheck is_minkowski_polynomial(const LaurentPolynomial& p) {
    if (p.n_vars() != 3) throw Error("Minkowski polynomials are defined for three variables");
    LatticePolytope P = newton_polytope(p);
    DualResult d = dual_and_reflexive(P);
    if (!d.reflexive) throw Error("non-reflexive Newton polytope: " + d.reason);
    MinkowskiCheck out;
    for (const Face& f : faces(P)) {
        LatticePolytope fp = f.polytope();
        LaurentPolynomial pf = face_polynomial(p, fp);
        if (f.dim == 0) {
            if (pf.coefficient(f.vertices[0]) != ParamPolynomial(1)) {
                out.reason = "vertex coefficient " + pf.coefficient(f.vertices[0]).str() + " at " + fp.str();
                return out;
            }
        } else if (f.dim == 1) {
            const Point& a = fp.vertices()[0];
            Point step = primitive(diff(fp.vertices()[1], a));
            long len = lattice_length(diff(fp.vertices()[1], a));
            for (long t = 0; t <= len; ++t) {
                Point e = a;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += t * step[i];
                if (pf.coefficient(e) != ParamPolynomial(Rat(binom(len, t)))) {
                    out.reason = "edge " + fp.str() + " does not have binomial coefficients";
                    return out;
                }
            }
        } else {
            bool found = false;
            for (const auto& datum : minkowski_decompositions(fp)) {
                bool admissible = true;
                for (const auto& part : datum.parts)
                    if (!is_unit_segment(part.summand) && an_triangle_index(part.summand) == 0) admissible = false;
                if (!admissible) continue;
                FaceDecomposition w{fp, datum, {}};
                LaurentPolynomial prod = LaurentPolynomial::constant(3, 1);
                for (const auto& part : datum.parts) {
                    w.witness.push_back(normalized_factor(part.summand));
                    prod = prod * w.witness.back().pow(part.multiplicity);
                }
                if (equal_up_to_monomial(pf, prod)) {
                    out.witness.push_back(std::move(w));
                    found = true;
                    break;
                }
            }
            if (!found) {
                out.reason = "facet " + fp.str() + " admits no normalized factorization";
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

MCheck verify_M_polynomial(const LaurentPolynomial& p, const std::vector<FaceDecomposition>& data) {
    MCheck out;
    for (const auto& fd : data) {
        if (fd.witness.size() != fd.datum.parts.size())
            throw Error("witness/datum shape mismatch on face " + fd.face.str());
        std::string where = "face " + fd.face.str() + ": ";
        LaurentPolynomial pf = face_polynomial(p, fd.face);
        LaurentPolynomial prod = LaurentPolynomial::constant(p.n_vars(), 1);
        bool shapes = true;
        for (std::size_t i = 0; i < fd.witness.size(); ++i) {
            const auto& h = fd.witness[i];
            if (h.is_zero() || h.n_vars() != p.n_vars() ||
                !newton_polytope(h).same_up_to_translation(fd.datum.parts[i].summand)) {
                out.failures.push_back(where + "Newton polytope of witness " + std::to_string(i + 1) +
                                       " differs from its summand");
                shapes = false;
                continue;
            }
            prod = prod * h.pow(fd.datum.parts[i].multiplicity);
        }
        if (!shapes) continue;
        if (!equal_up_to_monomial(pf, prod)) out.failures.push_back(where + "face polynomial is not the product");
    }
    out.ok = out.failures.empty();
    return out;
}

std::vector<FaceDecomposition> trivial_decompositions(const LaurentPolynomial& p) {
    std::vector<FaceDecomposition> out;
    for (const Face& f : faces(newton_polytope(p))) {
        LatticePolytope fp = f.polytope();
        out.push_back({fp, trivial_datum(fp), {face_polynomial(p, fp)}});
    }
    return out;
}

}  // namespace k3dn
