#include "k3dn/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace k3dn {

long lattice_length(const Point& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

Point primitive(const Point& v) {
    long g = lattice_length(v);
    if (g == 0) return v;
    Point r = v;
    for (auto& x : r) x /= g;
    return r;
}

static long dot(const Point& a, const Point& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

static Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

static std::size_t point_rank(const std::vector<Point>& rows, std::size_t n) {
    if (rows.empty()) return 0;
    IntegerMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return rank(m);
}

namespace {

// facets of the hull of points in Z^k, k in {1,2,3}
std::vector<Facet> local_hull_facets(const std::vector<Point>& pts, std::size_t k) {
    std::set<std::pair<Point, long>> found;
    std::size_t n = pts.size();
    auto add = [&](const Point& u0, const Point& base) {
        Point u = primitive(u0);
        if (lattice_length(u) == 0) return;
        long c = dot(u, base);
        bool ge = true, le = true;
        for (const auto& p : pts) {
            long v = dot(u, p);
            if (v < c) ge = false;
            if (v > c) le = false;
        }
        if (ge) found.insert({u, c});
        if (le) {
            Point w = u;
            for (auto& x : w) x = -x;
            found.insert({w, -c});
        }
    };
    if (k == 1) {
        add({1}, *std::min_element(pts.begin(), pts.end()));
        add({1}, *std::max_element(pts.begin(), pts.end()));
    } else if (k == 2) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Point d = sub(pts[j], pts[i]);
                add({-d[1], d[0]}, pts[i]);
            }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Point a = sub(pts[j], pts[i]);
                for (std::size_t l = j + 1; l < n; ++l) {
                    Point b = sub(pts[l], pts[i]);
                    Point u{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
                    add(u, pts[i]);
                }
            }
    }
    // keep only hyperplanes that actually bound a (k-1)-dimensional face
    std::vector<Facet> out;
    for (const auto& [u, c] : found) {
        std::vector<Point> on;
        for (const auto& p : pts)
            if (dot(u, p) == c) on.push_back(p);
        std::vector<Point> diffs;
        for (const auto& p : on) diffs.push_back(sub(p, on[0]));
        if (point_rank(diffs, k) + 1 == k) out.push_back({u, c});
    }
    return out;
}

}  // namespace

LatticePolytope convex_hull(const std::vector<Point>& input, std::size_t ambient) {
    if (ambient > 3) throw Error("convex hulls are only supported in dimension <= 3");
    LatticePolytope P;
    P.ambient_ = ambient;
    std::vector<Point> pts = input;
    for (const auto& p : pts)
        if (p.size() != ambient) throw Error("point has wrong dimension");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return P;

    // local frame of the affine hull
    std::vector<Point> diffs;
    for (const auto& p : pts) diffs.push_back(sub(p, pts[0]));
    std::size_t k = point_rank(diffs, ambient);
    P.dim_ = static_cast<int>(k);
    if (k == ambient) {
        P.origin_ = Point(ambient, 0);
        for (std::size_t i = 0; i < ambient; ++i) {
            Point e(ambient, 0);
            e[i] = 1;
            P.basis_.push_back(e);
            P.to_local_.push_back(e);
        }
    } else {
        P.origin_ = pts[0];
        IntegerMatrix M(diffs.size(), ambient);
        for (std::size_t i = 0; i < diffs.size(); ++i)
            for (std::size_t j = 0; j < ambient; ++j) M(i, j) = diffs[i][j];
        SmithForm s = smith_normal_form(M);
        IntegerMatrix W = unimodular_inverse(s.V);
        for (std::size_t i = 0; i < k; ++i) {
            Point b(ambient);
            for (std::size_t j = 0; j < ambient; ++j) b[j] = W(i, j).convert_to<long>();
            P.basis_.push_back(b);
        }
        for (std::size_t i = 0; i < ambient; ++i) {
            Point r(ambient);
            for (std::size_t j = 0; j < ambient; ++j) r[j] = s.V(i, j).convert_to<long>();
            P.to_local_.push_back(r);
        }
    }
    std::vector<Point> local;
    for (const auto& p : pts) local.push_back(P.to_local(p));

    if (k == 0) {
        P.vertices_ = pts;
        P.local_vertices_ = {Point{}};
    } else {
        P.local_facets_ = local_hull_facets(local, k);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<Point> normals;
            for (const auto& f : P.local_facets_)
                if (dot(f.normal, local[i]) == f.offset) normals.push_back(f.normal);
            if (point_rank(normals, k) == k) {
                P.vertices_.push_back(pts[i]);
                P.local_vertices_.push_back(local[i]);
            }
        }
    }
    if (k == ambient) P.facets_ = P.local_facets_;
    return P;
}

const std::vector<Facet>& LatticePolytope::facets() const {
    if (!full_dimensional()) throw Error("facet inequalities need a full-dimensional polytope");
    return facets_;
}

Point LatticePolytope::to_local(const Point& p) const {
    Point d = sub(p, origin_);
    Point q(static_cast<std::size_t>(dim_), 0);
    for (std::size_t j = 0; j < q.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) q[j] += d[i] * to_local_[i][j];
    return q;
}

Point LatticePolytope::from_local(const Point& q) const {
    Point p = origin_;
    for (std::size_t j = 0; j < q.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) p[i] += q[j] * basis_[j][i];
    return p;
}

bool LatticePolytope::in_affine_lattice(const Point& p) const {
    if (empty() || p.size() != ambient_) return false;
    return from_local(to_local(p)) == p;
}

bool LatticePolytope::contains(const Point& p) const {
    if (!in_affine_lattice(p)) return false;
    Point q = to_local(p);
    for (const auto& f : local_facets_)
        if (dot(f.normal, q) < f.offset) return false;
    return true;
}

std::vector<Point> LatticePolytope::lattice_points() const {
    std::vector<Point> out;
    if (empty()) return out;
    std::size_t k = static_cast<std::size_t>(dim_);
    Point lo = local_vertices_[0], hi = local_vertices_[0];
    for (const auto& v : local_vertices_)
        for (std::size_t i = 0; i < k; ++i) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    Point q = lo;
    for (;;) {
        bool in = true;
        for (const auto& f : local_facets_)
            if (dot(f.normal, q) < f.offset) {
                in = false;
                break;
            }
        if (in) out.push_back(from_local(q));
        std::size_t i = 0;
        while (i < k && q[i] == hi[i]) q[i] = lo[i], ++i;
        if (i == k) break;
        ++q[i];
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticePolytope LatticePolytope::normalized() const {
    if (empty()) return *this;
    std::vector<Point> vs;
    for (const auto& v : vertices_) vs.push_back(sub(v, vertices_[0]));
    return convex_hull(vs, ambient_);
}

bool LatticePolytope::same_up_to_translation(const LatticePolytope& o) const {
    if (ambient_ != o.ambient_ || vertices_.size() != o.vertices_.size()) return false;
    if (empty()) return o.empty();
    Point t = sub(o.vertices_[0], vertices_[0]);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (sub(o.vertices_[i], vertices_[i]) != t) return false;
    return true;
}

static std::string point_str(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + ")";
}

std::string LatticePolytope::str() const {
    std::string s = "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ", ";
        s += point_str(vertices_[i]);
    }
    return s + "}";
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.ambient() != b.ambient()) throw Error("Minkowski sum of polytopes in different dimensions");
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Point> pts;
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) {
            Point w = u;
            for (std::size_t i = 0; i < w.size(); ++i) w[i] += v[i];
            pts.push_back(w);
        }
    return convex_hull(pts, a.ambient());
}

LatticePolytope dilate(const LatticePolytope& a, long k) {
    if (k < 1) throw Error("dilation factor must be positive");
    std::vector<Point> pts = a.vertices();
    for (auto& p : pts)
        for (auto& x : p) x *= k;
    return convex_hull(pts, a.ambient());
}

std::vector<Point> ccw_local_vertices(const LatticePolytope& p) {
    if (p.dim() != 2) throw Error("polygon expected");
    std::vector<Point> v = p.local_vertices();
    std::sort(v.begin(), v.end());
    auto cross = [](const Point& o, const Point& a, const Point& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Point> h(2 * v.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], v[i]) <= 0) --k;
        h[k++] = v[i];
    }
    for (std::size_t i = v.size() - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(h[k - 2], h[k - 1], v[i - 1]) <= 0) --k;
        h[k++] = v[i - 1];
    }
    h.resize(k - 1);
    return h;
}

std::vector<Point> boundary_cycle(const LatticePolytope& p) {
    std::vector<Point> cyc = ccw_local_vertices(p), out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Point& a = cyc[i];
        Point d = sub(cyc[(i + 1) % cyc.size()], a);
        long len = lattice_length(d);
        Point step = primitive(d);
        for (long j = 0; j < len; ++j) out.push_back(p.from_local({a[0] + j * step[0], a[1] + j * step[1]}));
    }
    return out;
}

LatticePolytope Face::polytope() const {
    if (vertices.empty()) return {};
    return convex_hull(vertices, vertices[0].size());
}

std::vector<Face> faces(const LatticePolytope& p) {
    std::vector<Face> out;
    if (p.empty() || p.dim() == 0) return out;
    const auto& lv = p.local_vertices();
    std::set<std::vector<std::size_t>> sets;
    std::vector<std::vector<std::size_t>> frontier;
    for (const auto& f : p.local_facets()) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < lv.size(); ++i)
            if (dot(f.normal, lv[i]) == f.offset) s.push_back(i);
        if (sets.insert(s).second) frontier.push_back(s);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        std::vector<std::vector<std::size_t>> all(sets.begin(), sets.end());
        for (const auto& a : frontier)
            for (const auto& b : all) {
                std::vector<std::size_t> c;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
                if (!c.empty() && sets.insert(c).second) next.push_back(c);
            }
        frontier = std::move(next);
    }
    for (const auto& s : sets) {
        Face f;
        for (std::size_t i : s) f.vertices.push_back(p.vertices()[i]);
        std::vector<Point> diffs;
        for (const auto& v : f.vertices) diffs.push_back(sub(v, f.vertices[0]));
        f.dim = static_cast<int>(point_rank(diffs, p.ambient()));
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        return a.vertices < b.vertices;
    });
    return out;
}

LatticePolytope newton_polytope(const LaurentPolynomial& p) {
    if (p.is_zero()) throw Error("zero polynomial has no Newton polytope");
    return convex_hull(p.support(), p.n_vars());
}

DualResult dual_and_reflexive(const LatticePolytope& p) {
    DualResult r;
    if (!p.full_dimensional()) {
        r.reason = "polytope is not full-dimensional";
        return r;
    }
    for (const auto& f : p.facets())
        if (f.offset >= 0) {
            r.reason = "origin is not an interior point";
            return r;
        }
    for (const auto& f : p.facets())
        if (f.offset != -1) {
            r.reason = "facet " + point_str(f.normal) + " at lattice distance " + std::to_string(-f.offset);
            return r;
        }
    std::vector<Point> normals;
    for (const auto& f : p.facets()) normals.push_back(f.normal);
    r.reflexive = true;
    r.dual = convex_hull(normals, p.ambient());
    return r;
}

LaurentPolynomial face_polynomial(const LaurentPolynomial& p, const LatticePolytope& face) {
    LaurentPolynomial r(p.n_vars());
    for (const auto& [e, c] : p.terms())
        if (face.contains(e)) r.add_term(e, c);
    return r;
}

}  // namespace k3dn
