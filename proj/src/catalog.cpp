#include "unimax/catalog.hpp"

#include <toml.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <unordered_map>

namespace unimax {

namespace {

using Elem = GF::Elem;
using Vec = std::vector<Elem>;

/// Square matrix over a GF, row-major; acts on row vectors from the right.
struct Mat {
    unsigned n = 0;
    std::vector<Elem> a;
    Elem& at(unsigned i, unsigned j) { return a[i * n + j]; }
    Elem at(unsigned i, unsigned j) const { return a[i * n + j]; }
    static Mat identity(unsigned n) {
        Mat m{n, std::vector<Elem>(n * n, 0)};
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

Vec apply(const GF& F, const Vec& v, const Mat& m) {
    Vec out(m.n, 0);
    for (unsigned j = 0; j < m.n; ++j) {
        Elem s = 0;
        for (unsigned i = 0; i < m.n; ++i) s = F.add(s, F.mul(v[i], m.at(i, j)));
        out[j] = s;
    }
    return out;
}

Mat inverse(const GF& F, Mat m) {
    const unsigned n = m.n;
    Mat inv = Mat::identity(n);
    for (unsigned c = 0; c < n; ++c) {
        unsigned piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) throw CatalogError("matrix generator is singular");
        for (unsigned j = 0; j < n; ++j) {
            std::swap(m.at(c, j), m.at(piv, j));
            std::swap(inv.at(c, j), inv.at(piv, j));
        }
        Elem s = F.inv(m.at(c, c));
        for (unsigned j = 0; j < n; ++j) {
            m.at(c, j) = F.mul(m.at(c, j), s);
            inv.at(c, j) = F.mul(inv.at(c, j), s);
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == c || m.at(i, c) == 0) continue;
            Elem t = m.at(i, c);
            for (unsigned j = 0; j < n; ++j) {
                m.at(i, j) = F.sub(m.at(i, j), F.mul(t, m.at(c, j)));
                inv.at(i, j) = F.sub(inv.at(i, j), F.mul(t, inv.at(c, j)));
            }
        }
    }
    return inv;
}

Mat transpose(const Mat& m) {
    Mat t = m;
    for (unsigned i = 0; i < m.n; ++i)
        for (unsigned j = 0; j < m.n; ++j) t.at(i, j) = m.at(j, i);
    return t;
}

Vec frob_vec(const GF& F, Vec v, unsigned k) {
    for (auto& x : v)
        for (unsigned i = 0; i < k; ++i) x = F.frob(x);
    return v;
}

/// Projective points of a vector space, each normalised so its first nonzero entry is 1.
class ProjectivePoints {
public:
    ProjectivePoints(const GF& F, unsigned n) : F_(F), n_(n) {}

    /// Restrict to the given normalised vectors (e.g. isotropic points).
    void set_points(std::vector<Vec> pts) {
        pts_ = std::move(pts);
        index_.clear();
        for (std::size_t i = 0; i < pts_.size(); ++i) index_[key(pts_[i])] = static_cast<Point>(i);
    }
    void all_points() {
        std::vector<Vec> pts;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < n_; ++i) total *= F_.q();
        for (std::uint64_t c = 1; c < total; ++c) {
            Vec v(n_);
            std::uint64_t x = c;
            for (unsigned i = 0; i < n_; ++i) {
                v[i] = static_cast<Elem>(x % F_.q());
                x /= F_.q();
            }
            if (normalise(v) == v) pts.push_back(v);
        }
        set_points(std::move(pts));
    }

    Vec normalise(Vec v) const {
        for (Elem x : v)
            if (x != 0) {
                Elem s = F_.inv(x);
                for (auto& y : v) y = F_.mul(y, s);
                return v;
            }
        throw CatalogError("zero vector has no projective point");
    }
    Point index(const Vec& v) const {
        auto it = index_.find(key(normalise(v)));
        if (it == index_.end()) throw CatalogError("generator does not preserve the point set");
        return it->second;
    }
    std::size_t size() const { return pts_.size(); }
    const std::vector<Vec>& points() const { return pts_; }

private:
    std::uint64_t key(const Vec& v) const {
        std::uint64_t k = 0;
        for (Elem x : v) k = k * F_.q() + x;
        return k;
    }
    const GF& F_;
    unsigned n_;
    std::vector<Vec> pts_;
    std::unordered_map<std::uint64_t, Point> index_;
};

/// Permutation induced by v -> frob^k(v) * m on the points, and on hyperplanes when with_lines.
Perm semilinear_perm(const GF& F, const ProjectivePoints& P, const Mat& m, unsigned k, bool with_lines) {
    const std::size_t N = P.size();
    std::vector<Point> img(with_lines ? 2 * N : N);
    for (std::size_t i = 0; i < N; ++i) img[i] = P.index(apply(F, frob_vec(F, P.points()[i], k), m));
    if (with_lines) {
        Mat it = transpose(inverse(F, m));
        for (std::size_t i = 0; i < N; ++i)
            img[N + i] = static_cast<Point>(N + P.index(apply(F, frob_vec(F, P.points()[i], k), it)));
    }
    return Perm(std::move(img));
}

/// Swap of each point with the hyperplane that has the same coordinate vector.
Perm duality_perm(std::size_t N) {
    std::vector<Point> img(2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        img[i] = static_cast<Point>(N + i);
        img[N + i] = static_cast<Point>(i);
    }
    return Perm(std::move(img));
}

GroupInstance finish(std::string name, std::optional<GroupSpec> spec, std::size_t degree,
                     const std::vector<Perm>& socle_gens, const std::vector<Perm>& extra, const BigInt& socle_order,
                     const BigInt& order, std::uint64_t seed) {
    GroupInstance inst;
    inst.name = std::move(name);
    inst.spec = std::move(spec);
    inst.expected_order = order;
    std::vector<Perm> all = socle_gens;
    all.insert(all.end(), extra.begin(), extra.end());
    BuildOptions o;
    o.seed = seed;
    o.known_order = order;
    inst.group = PermGroup::build(degree, all, o);
    inst.socle = extra.empty() ? inst.group : make_subgroup(inst.group, socle_gens, derive_seed(seed, 1), socle_order);
    return inst;
}

/// Keep only generators that enlarge the group generated so far.
std::vector<Perm> prune_generators(std::size_t degree, const std::vector<Perm>& gens, const BigInt& order,
                                   std::uint64_t seed) {
    std::vector<Perm> kept;
    PermGroup g = PermGroup::trivial(degree);
    for (const Perm& x : gens) {
        if (g.contains(x)) continue;
        kept.push_back(x);
        BuildOptions o;
        o.seed = seed;
        g = PermGroup::build(degree, kept, o);
        if (g.order() == order) break;
    }
    return kept;
}

Perm perm_from_function(std::size_t n, const std::function<Point(Point)>& f) {
    std::vector<Point> img(n);
    for (Point x = 0; x < n; ++x) img[x] = f(x);
    return Perm(std::move(img));
}

std::string l2_name(const PrimePowerQ& q, const OuterLabel& o) {
    std::string base = "L2(" + q.q.get_str() + ")";
    if (o.is_trivial()) return base;
    if (o.twisted && q.q == 9) return "M10";
    if (o.twisted) return base + ".2_3";
    if (o.diag == 2 && o.field == 1) return "PGL2(" + q.q.get_str() + ")";
    if (o.diag == 1 && o.field == q.f && q.p != 2 && o.field > 1) return "PSigmaL2(" + q.q.get_str() + ")";
    if (o.diag == 2 && o.field == q.f) return "PGammaL2(" + q.q.get_str() + ")";
    return base + "." + o.describe();
}

}  // namespace

// ---------------------------------------------------------------- alternating

GroupInstance build_alternating(unsigned n, bool symmetric, std::uint64_t seed) {
    if (n < 5 || n > 13) throw CatalogError("alternating degree must lie in 5..13");
    std::vector<Perm> tgens;
    for (Point i = 2; i < n; ++i) tgens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
    std::vector<Perm> extra;
    if (symmetric) extra.push_back(Perm::from_cycles(n, {{0, 1}}));
    GroupSpec s;
    s.family = Family::Alt;
    s.n = n;
    s.outer.diag = symmetric ? 2 : 1;
    BigInt t = socle_order(s);
    return finish(s.describe(), s, n, tgens, extra, t, group_order(s), seed);
}

// ---------------------------------------------------------------- L2(q)

GroupInstance build_psl2(const PrimePowerQ& q, const OuterLabel& outer, std::uint64_t seed) {
    GroupSpec s;
    s.family = Family::L;
    s.n = 2;
    s.q = q;
    s.outer = outer;
    validate(s);
    const GF F(static_cast<std::uint32_t>(q.p), q.f);
    const std::uint32_t Q = F.q();
    const Point inf = Q;
    const Elem lam = F.primitive();
    // Moebius map t -> (a t^(p^k) + b) / (c t^(p^k) + d) on GF(q) u {inf}.
    auto mobius = [&](Elem a, Elem b, Elem c, Elem d, unsigned k) {
        return perm_from_function(Q + 1, [&](Point x) -> Point {
            if (x == inf) return c == 0 ? inf : F.mul(a, F.inv(c));
            Elem t = x;
            for (unsigned i = 0; i < k; ++i) t = F.frob(t);
            Elem num = F.add(F.mul(a, t), b), den = F.add(F.mul(c, t), d);
            return den == 0 ? inf : F.mul(num, F.inv(den));
        });
    };
    std::vector<Perm> tgens{mobius(1, 1, 0, 1, 0), mobius(F.mul(lam, lam), 0, 0, 1, 0), mobius(0, F.neg(1), 1, 0, 0)};
    std::vector<Perm> extra;
    if (outer.twisted) {
        extra.push_back(mobius(lam, 0, 0, 1, q.f / static_cast<unsigned>(outer.field)));
    } else {
        if (outer.diag == 2) extra.push_back(mobius(lam, 0, 0, 1, 0));
        if (outer.field > 1) extra.push_back(mobius(1, 0, 0, 1, q.f / static_cast<unsigned>(outer.field)));
    }
    return finish(l2_name(q, outer), s, Q + 1, tgens, extra, socle_order(s), group_order(s), seed);
}

// ---------------------------------------------------------------- L3(q)

GroupInstance build_psl3(const PrimePowerQ& q, const OuterLabel& outer, std::uint64_t seed) {
    GroupSpec s;
    s.family = Family::L;
    s.n = 3;
    s.q = q;
    s.outer = outer;
    validate(s);
    if (outer.twisted) throw CatalogError("twisted decoration is not defined for L3(q)");
    const GF F(static_cast<std::uint32_t>(q.p), q.f);
    ProjectivePoints P(F, 3);
    P.all_points();
    const bool lines = outer.graph != GraphPart::None;
    std::vector<Perm> tgens;
    Elem basis = 1;
    for (unsigned k = 0; k < q.f; ++k, basis = F.mul(basis, F.primitive()))
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j) {
                if (i == j) continue;
                Mat m = Mat::identity(3);
                m.at(i, j) = basis;
                tgens.push_back(semilinear_perm(F, P, m, 0, lines));
            }
    const std::size_t degree = lines ? 2 * P.size() : P.size();
    tgens = prune_generators(degree, tgens, socle_order(s), seed);
    std::vector<Perm> extra;
    if (outer.diag > 1) {
        Mat m = Mat::identity(3);
        m.at(0, 0) = F.pow(F.primitive(), full_diag(s) / outer.diag);
        extra.push_back(semilinear_perm(F, P, m, 0, lines));
    }
    if (outer.field > 1) extra.push_back(semilinear_perm(F, P, Mat::identity(3), q.f / outer.field, lines));
    if (outer.graph == GraphPart::Graph) extra.push_back(duality_perm(P.size()));
    if (outer.graph == GraphPart::GraphField) {
        if (q.f % 2) throw CatalogError("graph-field involution needs even f");
        extra.push_back(semilinear_perm(F, P, Mat::identity(3), q.f / 2, true) * duality_perm(P.size()));
    }
    std::string name = "L3(" + q.q.get_str() + ")";
    if (!outer.is_trivial()) {
        if (outer.diag == full_diag(s) && outer.diag > 1 && outer.field == 1 && !lines)
            name = "PGL3(" + q.q.get_str() + ")";
        else if (q.q == 4 && outer.order() == 2 && outer.field == 2)
            name += ".2_1";
        else if (q.q == 4 && outer.graph == GraphPart::GraphField && outer.order() == 2)
            name += ".2_2";
        else if (q.q == 4 && outer.graph == GraphPart::Graph && outer.order() == 2)
            name += ".2_3";
        else if (outer.graph == GraphPart::Graph && outer.order() == 2)
            name += ".2";
        else
            name += "." + outer.describe();
    }
    return finish(name, s, degree, tgens, extra, socle_order(s), group_order(s), seed);
}

// ---------------------------------------------------------------- U3(q)

GroupInstance build_psu3(const PrimePowerQ& q, const OuterLabel& outer, std::uint64_t seed) {
    GroupSpec s;
    s.family = Family::U;
    s.n = 3;
    s.q = q;
    s.outer = outer;
    validate(s);
    if (outer.diag != 1 || outer.graph != GraphPart::None) throw CatalogError("only field decorations for U3(q)");
    const GF F(static_cast<std::uint32_t>(q.p), 2 * q.f);
    const std::uint64_t qq = to_u64(q.q);
    auto bar = [&](Elem x) { return F.pow(x, qq); };
    auto herm = [&](const Vec& x, const Vec& y) {
        Elem sum = 0;
        for (unsigned i = 0; i < 3; ++i) sum = F.add(sum, F.mul(x[i], bar(y[i])));
        return sum;
    };
    ProjectivePoints all(F, 3);
    all.all_points();
    std::vector<Vec> iso;
    for (const Vec& v : all.points())
        if (herm(v, v) == 0) iso.push_back(v);
    ProjectivePoints P(F, 3);
    P.set_points(iso);
    // Unitary transvections x -> x + a h(x, v) v with v isotropic and a + a^q = 0.
    std::vector<Perm> tgens;
    for (const Vec& v : iso)
        for (Elem a = 1; a < F.q(); ++a) {
            if (F.add(a, bar(a)) != 0) continue;
            Mat m = Mat::identity(3);
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned j = 0; j < 3; ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(a, F.mul(bar(v[i]), v[j])));
            tgens.push_back(semilinear_perm(F, P, m, 0, false));
        }
    tgens = prune_generators(P.size(), tgens, socle_order(s), seed);
    std::vector<Perm> extra;
    if (outer.field > 1) extra.push_back(semilinear_perm(F, P, Mat::identity(3), 2 * q.f / outer.field, false));
    std::string name = "U3(" + q.q.get_str() + ")";
    if (!outer.is_trivial()) name += "." + std::to_string(outer.order());
    return finish(name, s, P.size(), tgens, extra, socle_order(s), group_order(s), seed);
}

// ---------------------------------------------------------------- Sp6(2)

GroupInstance build_sp6_2(std::uint64_t seed) {
    GroupSpec s;
    s.family = Family::Sp;
    s.n = 6;
    s.q = PrimePowerQ::make(2, 1);
    const GF F(2, 1);
    ProjectivePoints P(F, 6);
    P.all_points();
    auto form = [](const Vec& x, const Vec& y) {
        return (x[0] * y[3] + x[3] * y[0] + x[1] * y[4] + x[4] * y[1] + x[2] * y[5] + x[5] * y[2]) % 2;
    };
    std::vector<Perm> tgens;
    for (const Vec& v : P.points()) {
        tgens.push_back(perm_from_function(P.size(), [&](Point i) {
            Vec x = P.points()[i];
            if (form(x, v))
                for (unsigned k = 0; k < 6; ++k) x[k] ^= v[k];
            return P.index(x);
        }));
    }
    tgens = prune_generators(P.size(), tgens, socle_order(s), seed);
    return finish("Sp6(2)", s, P.size(), tgens, {}, socle_order(s), group_order(s), seed);
}

// ---------------------------------------------------------------- Sz(8)

GroupInstance build_sz8(const OuterLabel& outer, std::uint64_t seed) {
    GroupSpec s;
    s.family = Family::B2_2;
    s.q = PrimePowerQ::make(2, 3);
    s.outer = outer;
    validate(s);
    const GF F(2, 3);
    auto sigma = [&](Elem x) { return F.pow(x, 4); };  // sigma^2 is the Frobenius
    // Tits ovoid: (0,0,1,0) and (x, y, xy + x^(sigma+2) + y^sigma, 1).
    std::vector<Vec> ovoid{{0, 0, 1, 0}};
    for (Elem x = 0; x < 8; ++x)
        for (Elem y = 0; y < 8; ++y) {
            Elem z = F.add(F.add(F.mul(x, y), F.mul(sigma(x), F.mul(x, x))), sigma(y));
            ovoid.push_back({x, y, z, 1});
        }
    ProjectivePoints P(F, 4);
    std::vector<Vec> pts;
    for (const Vec& v : ovoid) pts.push_back(P.normalise(v));
    P.set_points(pts);

    // Solve for the linear map sending frame points P1..P4 to multiples of Q1..Q4 and P5 to a multiple of Q5.
    auto solve = [&](const std::vector<Vec>& rows, const Vec& target) -> std::optional<Vec> {
        // coefficients c with sum c_i rows[i] = target
        Mat m{4, std::vector<Elem>(16)};
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) m.at(i, j) = rows[i][j];
        Mat inv;
        try {
            inv = inverse(F, m);
        } catch (const CatalogError&) {
            return std::nullopt;
        }
        return apply(F, target, inv);
    };
    auto map_frame = [&](const std::array<std::size_t, 5>& src, const std::array<std::size_t, 5>& dst)
        -> std::optional<Mat> {
        std::vector<Vec> ps, qs;
        for (int i = 0; i < 4; ++i) {
            ps.push_back(pts[src[i]]);
            qs.push_back(pts[dst[i]]);
        }
        auto a = solve(ps, pts[src[4]]);
        auto b = solve(qs, pts[dst[4]]);
        if (!a || !b) return std::nullopt;
        for (int i = 0; i < 4; ++i)
            if ((*a)[i] == 0 || (*b)[i] == 0) return std::nullopt;
        // rows of the basis change: P_i -> (b_i / a_i) Q_i
        Mat pm{4, std::vector<Elem>(16)}, qm{4, std::vector<Elem>(16)};
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) {
                pm.at(i, j) = ps[i][j];
                qm.at(i, j) = F.mul(F.mul((*b)[i], F.inv((*a)[i])), qs[i][j]);
            }
        Mat pinv = inverse(F, pm);
        Mat out{4, std::vector<Elem>(16, 0)};
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) {
                Elem acc = 0;
                for (unsigned k = 0; k < 4; ++k) acc = F.add(acc, F.mul(pinv.at(i, k), qm.at(k, j)));
                out.at(i, j) = acc;
            }
        return out;
    };
    auto preserves = [&](const Mat& m) {
        for (const Vec& v : pts) {
            Vec w = P.normalise(apply(F, v, m));
            if (std::find(pts.begin(), pts.end(), w) == pts.end()) return false;
        }
        return true;
    };
    // A frame inside the ovoid: any five points with no four coplanar.
    std::array<std::size_t, 5> frame{};
    {
        bool found = false;
        for (std::size_t c = 3; c < pts.size() && !found; ++c)
            for (std::size_t d = c + 1; d < pts.size() && !found; ++d)
                for (std::size_t e = d + 1; e < pts.size() && !found; ++e) {
                    std::array<std::size_t, 5> fr{0, 1, c, d, e};
                    if (map_frame(fr, fr)) {
                        frame = fr;
                        found = true;
                    }
                }
        if (!found) throw CatalogError("Sz(8): no projective frame in the ovoid");
    }
    // Elements sending the first two frame points to chosen targets; search the remaining images.
    std::vector<Perm> gens;
    auto search = [&](std::size_t t0, std::size_t t1, std::size_t want) {
        std::size_t got = 0;
        for (std::size_t a = 0; a < pts.size() && got < want; ++a)
            for (std::size_t b = 0; b < pts.size() && got < want; ++b)
                for (std::size_t c = 0; c < pts.size() && got < want; ++c) {
                    std::array<std::size_t, 5> dst{t0, t1, a, b, c};
                    std::array<std::size_t, 5> sorted = dst;
                    std::sort(sorted.begin(), sorted.end());
                    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
                    auto m = map_frame(frame, dst);
                    if (!m || !preserves(*m)) continue;
                    gens.push_back(semilinear_perm(F, P, *m, 0, false));
                    ++got;
                }
    };
    search(frame[1], frame[0], 1);
    search(frame[0], frame[2], 1);
    search(frame[0], frame[1], 2);
    BigInt t = socle_order(s);
    std::vector<Perm> extra;
    if (outer.field > 1) extra.push_back(semilinear_perm(F, P, Mat::identity(4), 3 / outer.field, false));
    std::string name = outer.is_trivial() ? "Sz(8)" : "Sz(8)." + std::to_string(outer.order());
    BuildOptions o;
    o.seed = seed;
    PermGroup check = PermGroup::build(P.size(), gens, o);
    if (check.order() != t) throw CatalogError("Sz(8): ovoid stabiliser has order " + check.order().get_str());
    return finish(name, s, P.size(), gens, extra, t, group_order(s), seed);
}

// ---------------------------------------------------------------- M11

GroupInstance build_m11(std::uint64_t seed) {
    GroupSpec s;
    s.family = Family::Sporadic;
    s.sporadic = "M11";
    std::vector<Perm> gens{Perm::from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
                           Perm::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}})};
    return finish("M11", s, 11, gens, {}, socle_order(s), group_order(s), seed);
}

// ---------------------------------------------------------------- dispatch

GroupInstance build_from_spec(const GroupSpec& spec, std::uint64_t seed) {
    validate(spec);
    switch (spec.family) {
        case Family::Alt:
            return build_alternating(spec.n, spec.outer.diag == 2, seed);
        case Family::L:
            if (spec.n == 2) return build_psl2(spec.q, spec.outer, seed);
            if (spec.n == 3) return build_psl3(spec.q, spec.outer, seed);
            break;
        case Family::U:
            if (spec.n == 3 && spec.q.q <= 5) return build_psu3(spec.q, spec.outer, seed);
            break;
        case Family::Sp:
            if (spec.n == 6 && spec.q.q == 2 && spec.outer.is_trivial()) return build_sp6_2(seed);
            break;
        case Family::B2_2:
            if (spec.q.q == 8) return build_sz8(spec.outer, seed);
            break;
        case Family::Sporadic:
            if (spec.sporadic == "M11" && spec.outer.is_trivial()) return build_m11(seed);
            break;
        default:
            break;
    }
    throw CatalogError("no permutation construction for " + spec.describe());
}

// ---------------------------------------------------------------- small groups

namespace {

GroupInstance small(const std::string& name, std::size_t degree, const std::vector<Perm>& gens, std::uint64_t order,
                    std::uint64_t seed) {
    return finish(name, std::nullopt, degree, gens, {}, order, order, seed);
}

Perm cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

/// Affine maps x -> a x + b of GF(p^f) with a in the subgroup generated by mult.
std::vector<Perm> affine_gens(const GF& F, Elem mult) {
    const std::uint32_t q = F.q();
    return {perm_from_function(q, [&](Point x) { return F.add(x, 1); }),
            perm_from_function(q, [&](Point x) { return F.mul(x, mult); }),
            perm_from_function(q, [&](Point x) { return F.add(x, F.primitive()); })};
}

}  // namespace

std::vector<std::string> small_group_names() {
    return {"S3",       "C6",      "D10",    "A4",     "D12",     "Dic12",  "F21",   "S3xC3",  "F20",
            "S4",       "SL2(3)",  "A4xC2",  "D30",    "AGL1(8)", "3^2:Q8", "AGL1(9)", "3^2:2", "A4xC3",
            "S3xS3",    "C7:C3xC2", "D8xC3", "C5:C4xC3"};
}

GroupInstance build_small_group(const std::string& name, std::uint64_t seed) {
    if (name == "S3") return small(name, 3, {cyc(3, {{0, 1}}), cyc(3, {{0, 1, 2}})}, 6, seed);
    if (name == "C6") return small(name, 5, {cyc(5, {{0, 1}, {2, 3, 4}})}, 6, seed);
    if (name == "D10") return small(name, 5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 4}, {2, 3}})}, 10, seed);
    if (name == "A4") return small(name, 4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})}, 12, seed);
    if (name == "D12") return small(name, 6, {cyc(6, {{0, 1, 2, 3, 4, 5}}), cyc(6, {{1, 5}, {2, 4}})}, 12, seed);
    if (name == "Dic12") return small(name, 7, {cyc(7, {{0, 1, 2}}), cyc(7, {{1, 2}, {3, 4, 5, 6}})}, 12, seed);
    if (name == "F21") return small(name, 7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})}, 21, seed);
    if (name == "S3xC3")
        return small(name, 6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4, 5}})}, 18, seed);
    if (name == "F20") return small(name, 5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{1, 2, 4, 3}})}, 20, seed);
    if (name == "S4") return small(name, 4, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})}, 24, seed);
    if (name == "SL2(3)") {
        // Action on the 8 nonzero vectors of GF(3)^2, vector (a, b) at index 3a + b - 1.
        auto mat = [&](int a, int b, int c, int d) {
            return perm_from_function(8, [=](Point i) {
                int x = (i + 1) / 3, y = (i + 1) % 3;
                int u = (x * a + y * c) % 3, v = (x * b + y * d) % 3;
                return static_cast<Point>(3 * u + v - 1);
            });
        };
        return small(name, 8, {mat(1, 1, 0, 1), mat(1, 0, 1, 1)}, 24, seed);
    }
    if (name == "A4xC2")
        return small(name, 6, {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}, {2, 3}}), cyc(6, {{4, 5}})}, 24, seed);
    if (name == "D30") {
        std::vector<Point> c(15);
        for (Point i = 0; i < 15; ++i) c[i] = i;
        std::vector<std::vector<Point>> refl;
        for (Point i = 1; i < 8; ++i) refl.push_back({i, 15 - i});
        return small(name, 15, {cyc(15, {c}), cyc(15, refl)}, 30, seed);
    }
    if (name == "AGL1(8)") {
        GF F(2, 3);
        return small(name, 8, affine_gens(F, F.primitive()), 56, seed);
    }
    if (name == "AGL1(9)") {
        GF F(3, 2);
        return small(name, 9, affine_gens(F, F.primitive()), 72, seed);
    }
    if (name == "3^2:2") {
        GF F(3, 2);
        return small(name, 9, affine_gens(F, F.neg(1)), 18, seed);
    }
    if (name == "3^2:Q8") {
        // Translations of GF(3)^2 with the quaternion group generated by [[0,1],[-1,0]] and [[1,1],[1,-1]].
        auto lin = [&](int a, int b, int c, int d) {
            return perm_from_function(9, [=](Point i) {
                int x = i / 3, y = i % 3;
                int u = ((x * a + y * c) % 3 + 3) % 3, v = ((x * b + y * d) % 3 + 3) % 3;
                return static_cast<Point>(3 * u + v);
            });
        };
        Perm t = perm_from_function(9, [](Point i) { return static_cast<Point>((i + 3) % 9); });
        return small(name, 9, {t, lin(0, 1, -1, 0), lin(1, 1, 1, -1)}, 72, seed);
    }
    if (name == "A4xC3")
        return small(name, 7, {cyc(7, {{0, 1, 2}}), cyc(7, {{0, 1}, {2, 3}}), cyc(7, {{4, 5, 6}})}, 36, seed);
    if (name == "S3xS3")
        return small(name, 6, {cyc(6, {{0, 1}}), cyc(6, {{0, 1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{3, 4, 5}})}, 36, seed);
    if (name == "C7:C3xC2")
        return small(name, 9, {cyc(9, {{0, 1, 2, 3, 4, 5, 6}}), cyc(9, {{1, 2, 4}, {3, 6, 5}}), cyc(9, {{7, 8}})}, 42,
                     seed);
    if (name == "D8xC3")
        return small(name, 7, {cyc(7, {{0, 1, 2, 3}}), cyc(7, {{0, 2}}), cyc(7, {{4, 5, 6}})}, 24, seed);
    if (name == "C5:C4xC3")
        return small(name, 8, {cyc(8, {{0, 1, 2, 3, 4}}), cyc(8, {{1, 2, 4, 3}}), cyc(8, {{5, 6, 7}})}, 60, seed);
    throw CatalogError("unknown small group '" + name + "'");
}

std::vector<SemidirectExample> build_semidirect_examples(std::uint64_t seed) {
    std::vector<SemidirectExample> out;
    auto add = [&](const std::string& name, GroupInstance g, const std::vector<Perm>& ngens,
                   const std::vector<Perm>& kgens, bool irreducible) {
        PermGroup n = make_subgroup(g.group, ngens, derive_seed(seed, out.size() * 2 + 1));
        PermGroup k = make_subgroup(g.group, kgens, derive_seed(seed, out.size() * 2 + 2));
        out.push_back({name, std::move(g), std::move(n), std::move(k), irreducible});
    };
    {
        GF F(2, 3);
        auto g = build_small_group("AGL1(8)", seed);
        Perm t1 = perm_from_function(8, [&](Point x) { return F.add(x, 1); });
        Perm t2 = perm_from_function(8, [&](Point x) { return F.add(x, F.primitive()); });
        Perm t3 = perm_from_function(8, [&](Point x) { return F.add(x, F.mul(F.primitive(), F.primitive())); });
        Perm m = perm_from_function(8, [&](Point x) { return F.mul(x, F.primitive()); });
        add("2^3:7", std::move(g), {t1, t2, t3}, {m}, true);
    }
    {
        auto g = build_small_group("F21", seed);
        add("7:3", std::move(g), {cyc(7, {{0, 1, 2, 3, 4, 5, 6}})}, {cyc(7, {{1, 2, 4}, {3, 6, 5}})}, true);
    }
    {
        GF F(3, 2);
        auto g = build_small_group("AGL1(9)", seed);
        Perm t1 = perm_from_function(9, [&](Point x) { return F.add(x, 1); });
        Perm t2 = perm_from_function(9, [&](Point x) { return F.add(x, F.primitive()); });
        Perm m = perm_from_function(9, [&](Point x) { return F.mul(x, F.primitive()); });
        add("3^2:8", std::move(g), {t1, t2}, {m}, true);
    }
    {
        // (2^2 + 1):3 with C3 irreducible on the first summand and trivial on the second.
        auto g = build_small_group("A4xC2", seed);
        add("(2^2+2):3", std::move(g), {cyc(6, {{0, 1}, {2, 3}}), cyc(6, {{0, 2}, {1, 3}}), cyc(6, {{4, 5}})},
            {cyc(6, {{0, 1, 2}})}, false);
    }
    {
        GF F(3, 2);
        auto g = build_small_group("3^2:2", seed);
        Perm t1 = perm_from_function(9, [&](Point x) { return F.add(x, 1); });
        Perm t2 = perm_from_function(9, [&](Point x) { return F.add(x, F.primitive()); });
        Perm m = perm_from_function(9, [&](Point x) { return F.neg(x); });
        add("3^2:2", std::move(g), {t1, t2}, {m}, false);
    }
    {
        // C3 x C7 acted on by nothing coprime-irreducibly: N = C7 x C2 is not a p-group.
        auto g = build_small_group("C7:C3xC2", seed);
        add("(7x2):3", std::move(g), {cyc(9, {{0, 1, 2, 3, 4, 5, 6}}), cyc(9, {{7, 8}})},
            {cyc(9, {{1, 2, 4}, {3, 6, 5}})}, false);
    }
    return out;
}

// ---------------------------------------------------------------- manifest

namespace {

template <class T>
T required(const toml::table& t, const char* key, const std::string& ctx) {
    auto v = t[key].value<T>();
    if (!v) throw CatalogError(ctx + ": missing or mistyped field '" + key + "'");
    return *v;
}

BigInt big_field(const toml::table& t, const char* key, const std::string& ctx) {
    if (auto s = t[key].value<std::string>()) return BigInt(*s);
    if (auto i = t[key].value<std::int64_t>()) return BigInt(std::to_string(*i));
    throw CatalogError(ctx + ": missing or mistyped field '" + key + "'");
}

}  // namespace

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    toml::table root;
    try {
        root = toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        throw CatalogError("cannot parse manifest " + path + ": " + std::string(e.description()));
    }
    std::vector<ManifestEntry> out;
    auto* groups = root["group"].as_array();
    if (!groups) throw CatalogError(path + ": no [[group]] entries");
    for (auto& node : *groups) {
        auto* t = node.as_table();
        if (!t) throw CatalogError(path + ": [[group]] entry is not a table");
        ManifestEntry e;
        e.name = required<std::string>(*t, "name", path);
        const std::string ctx = path + ": " + e.name;
        e.spec.family = family_from_string(required<std::string>(*t, "family", ctx));
        e.spec.n = static_cast<unsigned>((*t)["n"].value_or<std::int64_t>(0));
        if (auto q = (*t)["q"].value<std::int64_t>()) {
            PrimePowerQ pq;
            if (!as_prime_power(BigInt(std::to_string(*q)), pq)) throw CatalogError(ctx + ": q is not a prime power");
            e.spec.q = pq;
        }
        e.spec.sporadic = (*t)["sporadic"].value_or<std::string>("");
        e.decoration = (*t)["decoration"].value_or<std::string>("1");
        try {
            e.spec.outer = parse_decoration(e.spec, e.decoration);
            validate(e.spec);
        } catch (const SpecError& err) {
            throw CatalogError(ctx + ": " + err.what());
        }
        e.expected_order = big_field(*t, "order", ctx);
        if (group_order(e.spec) != e.expected_order)
            throw CatalogError(ctx + ": recorded order " + e.expected_order.get_str() + " differs from " +
                               group_order(e.spec).get_str());
        e.tier = (*t)["tier"].value_or<std::string>("desk");
        if (auto* checks = (*t)["check"].as_array()) {
            for (auto& cn : *checks) {
                auto* c = cn.as_table();
                if (!c) throw CatalogError(ctx + ": [[group.check]] is not a table");
                ManifestCheck mc;
                mc.r = static_cast<std::uint64_t>(required<std::int64_t>(*c, "r", ctx));
                mc.verdict = required<std::string>(*c, "verdict", ctx);
                if (mc.verdict != "unique" && mc.verdict != "not_unique")
                    throw CatalogError(ctx + ": verdict must be 'unique' or 'not_unique'");
                if ((*c)["overgroup_order"]) mc.overgroup_order = big_field(*c, "overgroup_order", ctx);
                if (auto b = (*c)["weakly_subnormal"].value<bool>()) mc.weakly_subnormal = *b;
                if (auto b = (*c)["ngr0"].value<bool>()) mc.ngr0 = *b;
                if (auto s = (*c)["or_h_nontrivial"].value<std::string>()) mc.or_h_nontrivial = *s;
                e.checks.push_back(std::move(mc));
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string default_manifest_path() {
    if (const char* d = std::getenv("UNIMAX_DATA")) return (std::filesystem::path(d) / "catalog.toml").string();
    return (std::filesystem::path(UNIMAX_SOURCE_DATA_DIR) / "catalog.toml").string();
}

}  // namespace unimax
