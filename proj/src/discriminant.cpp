#include "k3dn/discriminant.hpp"

#include <algorithm>
#include <functional>

namespace k3dn {

Int FiniteQuadraticForm::order() const {
    Int o = 1;
    for (const auto& d : orders) o *= d;
    return o;
}

std::vector<Int> FiniteQuadraticForm::invariant_factors() const {
    std::size_t n = orders.size();
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = orders[i];
    std::vector<Int> out;
    for (const auto& d : smith_normal_form(m).diagonal())
        if (d > 1) out.push_back(d);
    return out;
}

Rat FiniteQuadraticForm::b(const std::vector<Int>& x, const std::vector<Int>& y) const {
    Rat s = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < orders.size(); ++j)
            if (y[j] != 0) s += Rat(x[i] * y[j]) * bilinear[i][j];
    }
    return mod1(s);
}

Rat FiniteQuadraticForm::q(const std::vector<Int>& x) const {
    if (!has_quadratic) throw Error("form has no quadratic refinement");
    Rat s = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (x[i] == 0) continue;
        s += Rat(x[i] * x[i]) * quadratic[i];
        for (std::size_t j = i + 1; j < orders.size(); ++j)
            if (x[j] != 0) s += 2 * Rat(x[i] * x[j]) * bilinear[i][j];
    }
    return mod2(s);
}

std::vector<std::vector<Int>> FiniteQuadraticForm::elements() const {
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(orders.size(), Int(0));
    for (;;) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < cur.size(); ++i) {
            cur[i] += 1;
            if (cur[i] < orders[i]) break;
            cur[i] = 0;
        }
        if (i == cur.size()) break;
    }
    return out;
}

FiniteQuadraticForm make_form(std::vector<Int> orders, std::vector<std::vector<Rat>> bilinear,
                              std::vector<Rat> quadratic) {
    std::size_t n = orders.size();
    if (bilinear.size() != n) throw Error("bilinear matrix size does not match generator count");
    for (const auto& row : bilinear)
        if (row.size() != n) throw Error("bilinear matrix is not square");
    bool has_q = !quadratic.empty() || n == 0;
    if (has_q && quadratic.size() != n) throw Error("quadratic vector size does not match generator count");
    FiniteQuadraticForm f;
    f.has_quadratic = has_q;
    for (std::size_t i = 0; i < n; ++i)
        if (orders[i] < 1) throw Error("generator orders must be positive");
    for (auto& row : bilinear)
        for (auto& v : row) v = mod1(v);
    for (auto& v : quadratic) v = mod2(v);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (bilinear[i][j] != bilinear[j][i]) throw Error("bilinear form is not symmetric");
            if (den(Rat(orders[i]) * bilinear[i][j]) != 1)
                throw Error("bilinear value incompatible with generator order");
        }
        if (has_q) {
            if (mod1(quadratic[i]) != bilinear[i][i]) throw Error("q(g) and b(g,g) disagree mod 1");
            Rat t = Rat(orders[i] * orders[i]) * quadratic[i];
            if (den(t) != 1 || num(t) % 2 != 0) throw Error("quadratic value incompatible with generator order");
        }
    }
    f.orders = std::move(orders);
    f.bilinear = std::move(bilinear);
    f.quadratic = std::move(quadratic);
    return f;
}

FiniteQuadraticForm discriminant_group(const IntegralLattice& l) {
    std::size_t n = l.rank();
    if (determinant(l.gram) == 0) throw Error("radical nonzero");
    SmithForm s = smith_normal_form(l.gram);
    FiniteQuadraticForm f;
    f.has_quadratic = is_even(l.gram);
    for (std::size_t i = 0; i < n; ++i) {
        if (s.D(i, i) == 1) continue;
        std::vector<Rat> g(n);
        for (std::size_t k = 0; k < n; ++k) g[k] = Rat(s.V(k, i), s.D(i, i));
        f.orders.push_back(s.D(i, i));
        f.generators.push_back(std::move(g));
    }
    std::size_t m = f.orders.size();
    RatMatrix gram = to_rational(l.gram);
    auto pair = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        Rat acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (b[j] != 0) acc += a[i] * gram[i][j] * b[j];
        }
        return acc;
    };
    f.bilinear.assign(m, std::vector<Rat>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            Rat v = pair(f.generators[i], f.generators[j]);
            f.bilinear[i][j] = f.bilinear[j][i] = mod1(v);
            if (i == j && f.has_quadratic) f.quadratic.push_back(mod2(v));
        }
    return f;
}

FiniteQuadraticForm negate_form(const FiniteQuadraticForm& f) {
    FiniteQuadraticForm g = f;
    for (auto& row : g.bilinear)
        for (auto& v : row) v = mod1(-v);
    for (auto& v : g.quadratic) v = mod2(-v);
    for (auto& gen : g.generators) gen.clear();
    g.generators.clear();
    return g;
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    FiniteQuadraticForm f;
    f.has_quadratic = a.has_quadratic && b.has_quadratic;
    std::size_t n = a.ngens(), m = b.ngens();
    f.orders = a.orders;
    f.orders.insert(f.orders.end(), b.orders.begin(), b.orders.end());
    f.bilinear.assign(n + m, std::vector<Rat>(n + m, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f.bilinear[i][j] = a.bilinear[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) f.bilinear[n + i][n + j] = b.bilinear[i][j];
    if (f.has_quadratic) {
        f.quadratic = a.quadratic;
        f.quadratic.insert(f.quadratic.end(), b.quadratic.begin(), b.quadratic.end());
    }
    return f;
}

namespace {

std::vector<Int> add_mod(const std::vector<Int>& x, const std::vector<Int>& y,
                         const std::vector<Int>& orders) {
    std::vector<Int> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_pos(x[i] + y[i], orders[i]);
    return r;
}

std::size_t index_of(const std::vector<Int>& x, const std::vector<Int>& orders) {
    std::size_t idx = 0, mul = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        idx += x[i].convert_to<std::size_t>() * mul;
        mul *= orders[i].convert_to<std::size_t>();
    }
    return idx;
}

Int element_order(const std::vector<Int>& x, const std::vector<Int>& orders) {
    Int o = 1;
    for (std::size_t i = 0; i < x.size(); ++i) o = int_lcm(o, orders[i] / int_gcd(x[i], orders[i]));
    return o;
}

}  // namespace

bool check_compatibility(const FiniteQuadraticForm& f) {
    auto els = f.elements();
    for (const auto& x : els)
        for (const auto& y : els) {
            auto s = add_mod(x, y, f.orders);
            if (f.b(x, y) != f.b(y, x)) return false;
            if (!f.has_quadratic) continue;
            if (mod2(f.q(s) - f.q(x) - f.q(y) - 2 * f.b(x, y)) != 0) return false;
            // q read through an unreduced representative must agree with the reduced one
            std::vector<Int> raw(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) raw[i] = x[i] + y[i];
            if (f.q(raw) != f.q(s)) return false;
        }
    return true;
}

std::vector<Rat> sorted_q_values(const FiniteQuadraticForm& f) {
    std::vector<Rat> v;
    for (const auto& x : f.elements()) v.push_back(f.has_quadratic ? f.q(x) : f.b(x, x));
    std::sort(v.begin(), v.end());
    return v;
}

bool forms_equivalent(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const Int& bound) {
    if (a.order() != b.order()) return false;
    if (a.order() > bound) throw Error("brute-force bound exceeded");
    if (a.invariant_factors() != b.invariant_factors()) return false;
    const bool use_q = a.has_quadratic && b.has_quadratic;
    auto self_value = [&](const FiniteQuadraticForm& f, const std::vector<Int>& x) {
        return use_q ? f.q(x) : f.b(x, x);
    };
    auto values = [&](const FiniteQuadraticForm& f) {
        std::vector<Rat> v;
        for (const auto& x : f.elements()) v.push_back(self_value(f, x));
        std::sort(v.begin(), v.end());
        return v;
    };
    if (values(a) != values(b)) return false;

    // source generators of a (order-1 generators carry no information)
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < a.ngens(); ++i)
        if (a.orders[i] > 1) gens.push_back(i);
    if (gens.empty()) return true;

    auto els = b.elements();
    std::size_t total = els.size();
    std::vector<Rat> val(total);
    std::vector<Int> ord(total);
    std::vector<std::vector<Rat>> brow(total, std::vector<Rat>(b.ngens()));
    for (std::size_t e = 0; e < total; ++e) {
        val[e] = self_value(b, els[e]);
        ord[e] = element_order(els[e], b.orders);
        for (std::size_t j = 0; j < b.ngens(); ++j) {
            Rat s = 0;
            for (std::size_t i = 0; i < b.ngens(); ++i)
                if (els[e][i] != 0) s += Rat(els[e][i]) * b.bilinear[i][j];
            brow[e][j] = mod1(s);
        }
    }
    auto pair_b = [&](std::size_t x, std::size_t y) {
        Rat s = 0;
        for (std::size_t j = 0; j < b.ngens(); ++j)
            if (els[y][j] != 0) s += Rat(els[y][j]) * brow[x][j];
        return mod1(s);
    };

    std::vector<std::vector<std::size_t>> cand(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t i = gens[k];
        std::vector<Int> unit(a.ngens(), Int(0));
        unit[i] = 1;
        Rat target = self_value(a, unit);
        for (std::size_t e = 0; e < total; ++e)
            if (ord[e] == a.orders[i] && val[e] == target) cand[k].push_back(e);
        if (cand[k].empty()) return false;
    }

    std::vector<std::size_t> image(gens.size());
    std::function<bool(std::size_t, const std::vector<char>&, const std::vector<std::size_t>&)> search;
    search = [&](std::size_t k, const std::vector<char>& in_sub, const std::vector<std::size_t>& members) {
        if (k == gens.size()) return true;
        const Int& o = a.orders[gens[k]];
        for (std::size_t e : cand[k]) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if (pair_b(e, image[j]) != a.bilinear[gens[k]][gens[j]]) ok = false;
            if (!ok) continue;
            // injectivity: c*e must avoid the current subgroup for 0 < c < o
            std::vector<std::size_t> multiples;
            std::vector<Int> m = els[e];
            for (Int c = 1; c < o; ++c) {
                std::size_t idx = index_of(m, b.orders);
                if (in_sub[idx]) {
                    ok = false;
                    break;
                }
                multiples.push_back(idx);
                m = add_mod(m, els[e], b.orders);
            }
            if (!ok) continue;
            std::vector<char> next_in = in_sub;
            std::vector<std::size_t> next_members = members;
            for (std::size_t s : members)
                for (std::size_t mi : multiples) {
                    std::size_t idx = index_of(add_mod(els[s], els[mi], b.orders), b.orders);
                    if (!next_in[idx]) {
                        next_in[idx] = 1;
                        next_members.push_back(idx);
                    }
                }
            image[k] = e;
            if (search(k + 1, next_in, next_members)) return true;
        }
        return false;
    };
    std::vector<char> in0(total, 0);
    in0[0] = 1;
    return search(0, in0, {0});
}

std::string to_string(EmbeddingResult r) {
    switch (r) {
    case EmbeddingResult::exists_unique: return "exists_unique";
    case EmbeddingResult::exists: return "exists";
    case EmbeddingResult::inconclusive: return "inconclusive";
    }
    return "?";
}

EmbeddingResult embedding_criteria(const IntegralLattice& l, const EmbeddingTarget& target) {
    if (!is_even(l.gram)) throw Error("embedding criteria need an even lattice");
    if ((static_cast<long>(target.pos) - static_cast<long>(target.neg)) % 8 != 0)
        throw Error("target signature is not that of an even unimodular lattice");
    Signature s = signature(l.gram);
    if (s.zero != 0) throw Error("radical nonzero");
    std::size_t r = l.rank();
    std::size_t len = discriminant_group(l).length();
    std::size_t big = target.pos + target.neg;
    if (s.pos < target.pos && s.neg < target.neg && r + len + target.unique_slack <= big)
        return EmbeddingResult::exists_unique;
    if (s.pos <= target.pos && s.neg <= target.neg && r + len + target.exists_slack <= big)
        return EmbeddingResult::exists;
    return EmbeddingResult::inconclusive;
}

GenusSymbol genus_of(const IntegralLattice& l) {
    GenusSymbol g;
    g.rank = l.rank();
    g.sig = signature(l.gram);
    g.even = is_even(l.gram);
    g.disc = discriminant_group(l);
    return g;
}

bool genus_equal(const GenusSymbol& a, const GenusSymbol& b) {
    return a.rank == b.rank && a.sig == b.sig && a.even == b.even && forms_equivalent(a.disc, b.disc);
}

bool DualReport::pass() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return !checks.empty();
}

DualReport dn_dual_verify(const IntegralLattice& ls, const IntegralLattice& pic) {
    if (determinant(ls.gram) == 0 || determinant(pic.gram) == 0) throw Error("degenerate input");
    DualReport r;
    std::size_t rl = ls.rank(), rp = pic.rank();
    r.checks.push_back({"even", is_even(ls.gram) && is_even(pic.gram), ""});
    r.checks.push_back({"rank_sum", rl + rp == 20,
                        std::to_string(rl) + " + " + std::to_string(rp) + " = " + std::to_string(rl + rp)});
    Signature sl = signature(ls.gram);
    r.checks.push_back({"signature_LS", sl.pos == 1 && sl.neg + 1 == rl,
                        "(" + std::to_string(sl.pos) + "," + std::to_string(sl.neg) + ")"});
    IntegralLattice hp = direct_sum(hyperbolic_plane(), pic);
    Signature sh = signature(hp.gram);
    r.checks.push_back({"signature_H+Pic", sh.pos == 2 && sh.neg == rp,
                        "(" + std::to_string(sh.pos) + "," + std::to_string(sh.neg) + ")"});
    bool dual = forms_equivalent(discriminant_group(hp), negate_form(discriminant_group(ls)));
    r.checks.push_back({"disc_duality", dual, ""});
    if (r.checks[0].ok) {
        EmbeddingResult e = embedding_criteria(ls);
        r.checks.push_back({"embedding", e != EmbeddingResult::inconclusive, to_string(e)});
    } else {
        r.checks.push_back({"embedding", false, "odd lattice"});
    }
    return r;
}

}  // namespace k3dn
