#include "doctest.h"
#include "unimax/algorithms.hpp"

#include <algorithm>
#include <set>

using namespace unimax;

namespace {

using ElemSet = std::set<std::vector<Point>>;

// Brute-force closure of a generating set, independent of the chain code.
ElemSet closure(std::size_t n, const std::vector<Perm>& gens) {
    ElemSet seen{Perm(n).images()};
    std::vector<Perm> queue{Perm(n)};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (const Perm& g : gens) {
            Perm h = queue[i] * g;
            if (seen.insert(h.images()).second) queue.push_back(h);
        }
    return seen;
}

ElemSet as_set(const PermGroup& g) {
    ElemSet s;
    for (const Perm& e : g.elements()) s.insert(e.images());
    return s;
}

Perm cyc(std::size_t n, std::vector<std::vector<Point>> c) { return Perm::from_cycles(n, c); }

PermGroup sym(std::size_t n) {
    return PermGroup::build(n, {cyc(n, {{0, 1}}), cyc(n, {[&] {
                                                   std::vector<Point> v(n);
                                                   for (std::size_t i = 0; i < n; ++i) v[i] = Point(i);
                                                   return v;
                                                 }()})});
}

PermGroup alt(std::size_t n) {
    std::vector<Perm> gens;
    for (Point i = 2; i < n; ++i) gens.push_back(cyc(n, {{0, 1, i}}));
    return PermGroup::build(n, gens);
}

// Brute-force normalizer order.
std::size_t brute_normalizer_order(const PermGroup& g, const PermGroup& h) {
    ElemSet hs = as_set(h);
    std::size_t count = 0;
    for (const Perm& x : g.elements()) {
        bool ok = true;
        for (const Perm& y : h.generators())
            if (!hs.count(y.conjugate(x).images())) {
                ok = false;
                break;
            }
        count += ok;
    }
    return count;
}

// Brute-force core: elements lying in every conjugate.
std::size_t brute_core_order(const PermGroup& g, const PermGroup& h) {
    std::vector<Perm> ge = g.elements();
    std::size_t count = 0;
    for (const Perm& y : ge) {
        bool in_all = true;
        for (const Perm& x : ge)
            if (!h.contains(y.conjugate(x.inverse()))) {
                in_all = false;
                break;
            }
        count += in_all;
    }
    return count;
}

// Brute-force maximal subgroup orders via all subgroups generated by at most two elements.
std::multiset<std::size_t> brute_maximal_orders(const PermGroup& g) {
    std::vector<Perm> ge = g.elements();
    std::set<ElemSet> subs;
    for (std::size_t i = 0; i < ge.size(); ++i)
        for (std::size_t j = i; j < ge.size(); ++j) {
            ElemSet s = closure(g.degree(), {ge[i], ge[j]});
            if (s.size() < ge.size()) subs.insert(std::move(s));
        }
    std::multiset<std::size_t> out;
    for (const auto& s : subs) {
        bool maximal = true;
        for (const auto& t : subs)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                maximal = false;
                break;
            }
        if (maximal) out.insert(s.size());
    }
    return out;
}

}  // namespace

TEST_CASE("chain orders match brute-force closure") {
    struct Case {
        std::size_t n;
        std::vector<Perm> gens;
    };
    std::vector<Case> cases{
        {5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})}},
        {6, {cyc(6, {{0, 1}, {2, 3}}), cyc(6, {{0, 2, 4}})}},
        {7, {cyc(7, {{0, 1, 2, 3, 4, 5, 6}}), cyc(7, {{1, 2, 4}, {3, 6, 5}})}},
        {8, {cyc(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cyc(8, {{0, 4}, {1, 7}, {2, 6}, {3, 5}})}},
        {4, {}},
    };
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        for (const auto& c : cases) {
            BuildOptions o;
            o.seed = seed;
            PermGroup g = PermGroup::build(c.n, c.gens, o);
            ElemSet s = closure(c.n, c.gens);
            CHECK(g.order() == s.size());
            CHECK(as_set(g) == s);
            for (const auto& e : s) CHECK(g.contains(Perm(e)));
        }
    }
    CHECK(alt(5).order() == 60);
    CHECK(sym(6).order() == 720);
    CHECK(alt(10).order() == 1814400);
    PermGroup s5 = sym(5);
    CHECK_FALSE(alt(5).contains(cyc(5, {{0, 1}})));
    CHECK(s5.contains(cyc(5, {{0, 1}})));
}

TEST_CASE("L2(17) on 18 points has order 2448") {
    // x -> x+1, x -> 9x, x -> -1/x on the projective line over GF(17); point 17 is infinity.
    const Point inf = 17;
    auto mob = [&](auto f) {
        std::vector<Point> img(18);
        for (Point x = 0; x < 18; ++x) img[x] = f(x);
        return Perm(img);
    };
    Perm t = mob([&](Point x) { return x == inf ? inf : (x + 1) % 17; });
    Perm d = mob([&](Point x) { return x == inf ? inf : (x * 9) % 17; });
    Perm w = mob([&](Point x) -> Point {
        if (x == inf) return 0;
        if (x == 0) return inf;
        for (Point y = 1; y < 17; ++y)
            if ((x * y) % 17 == 1) return (17 - y) % 17;
        return 0;
    });
    PermGroup g = PermGroup::build(18, {t, d, w});
    CHECK(g.order() == 2448);
    CHECK(closure(18, {t, d, w}).size() == 2448);
}

TEST_CASE("subgroups share the ambient base and cosets are enumerated exactly") {
    PermGroup s4 = sym(4);
    PermGroup d8 = make_subgroup(s4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}, 5);
    CHECK(d8.order() == 8);
    CosetSpace cs(s4, d8, 100);
    CHECK(cs.size() == 3);
    for (const Perm& e : s4.elements()) {
        std::size_t i = cs.index_of(e);
        // e and rep(i) lie in the same right coset: e * rep^-1 in D8.
        CHECK(d8.contains(e * cs.rep(i).inverse()));
    }
    CHECK_THROWS_AS(CosetSpace(s4, make_subgroup(s4, {}, 1), 10), Infeasible);
}

TEST_CASE("double cosets, cores, normalizers, intersections") {
    PermGroup s3 = sym(3);
    PermGroup c2 = make_subgroup(s3, {cyc(3, {{0, 1}})}, 1);
    CHECK(double_coset_reps(s3, c2, 100).size() == 2);

    PermGroup s4 = sym(4);
    PermGroup d8 = make_subgroup(s4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}, 5);
    PermGroup k = core(s4, d8, 100, 3);
    CHECK(k.order() == 4);
    CHECK(k.order() == brute_core_order(s4, d8));
    CHECK(is_normal(s4, k));

    PermGroup c4 = make_subgroup(s4, {cyc(4, {{0, 1, 2, 3}})}, 2);
    CHECK(normalizer(s4, c4, 7).order() == 8);
    CHECK(brute_normalizer_order(s4, c4) == 8);

    PermGroup a5 = alt(5);
    PermGroup c5 = make_subgroup(a5, {cyc(5, {{0, 1, 2, 3, 4}})}, 2);
    CHECK(normalizer(a5, c5, 9).order() == 10);

    PermGroup s6 = sym(6);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Rng rng(seed);
        Perm x = s6.random_element(rng);
        Perm y = s6.random_element(rng);
        PermGroup h = make_subgroup(s6, {x}, seed);
        PermGroup hn = normalizer(s6, h, seed);
        CHECK(hn.order() == brute_normalizer_order(s6, h));
        PermGroup a = make_subgroup(s6, {x, y.pow(2)}, seed);
        PermGroup b = make_subgroup(s6, {y}, seed + 1);
        PermGroup i = intersection(s6, a, b, seed);
        ElemSet as = as_set(a), bs = as_set(b), is;
        std::set_intersection(as.begin(), as.end(), bs.begin(), bs.end(), std::inserter(is, is.begin()));
        CHECK(i.order() == is.size());
        PermGroup core_b = core(s6, b, 1000, seed);
        CHECK(core_b.order() == brute_core_order(s6, b));
    }
}

TEST_CASE("Sylow subgroups and O_r") {
    PermGroup s6 = sym(6);
    CHECK(sylow_subgroup(s6, 2, 1).order() == 16);
    CHECK(sylow_subgroup(s6, 3, 1).order() == 9);
    CHECK(sylow_subgroup(s6, 7, 1).order() == 1);
    PermGroup a7 = alt(7);
    CHECK(sylow_subgroup(a7, 2, 4).order() == 8);
    PermGroup s4 = sym(4);
    CHECK(r_core_by_kernel(s4, 2, 100, 1).order() == 4);
    CHECK(r_core_by_intersection(s4, 2, 1).order() == 4);
    CHECK(r_core_by_kernel(s4, 3, 100, 1).order() == 1);
    CHECK(r_core_by_intersection(s4, 3, 1).order() == 1);
    CHECK(r_core_by_kernel(s6, 2, 1000, 1).order() == 1);
}

TEST_CASE("maximal overgroups of small subgroups") {
    PermGroup a5 = alt(5);
    PermGroup p = sylow_subgroup(a5, 2, 1);
    auto m = maximal_overgroups(a5, p, 1000, 1);
    REQUIRE(m.members.size() == 1);
    CHECK(m.members[0].order() == 12);

    PermGroup s3 = sym(3);
    PermGroup a3 = make_subgroup(s3, {cyc(3, {{0, 1, 2}})}, 1);
    auto m3 = maximal_overgroups(s3, a3, 100, 1);
    REQUIRE(m3.members.size() == 1);
    CHECK(same_group(m3.members[0], a3));

    PermGroup a7 = alt(7);
    PermGroup p7 = sylow_subgroup(a7, 7, 1);
    auto m7 = maximal_overgroups(a7, p7, 10000, 1);
    CHECK(m7.members.size() >= 2);
    for (const auto& x : m7.members) CHECK(x.order() == 168);
    CHECK(conjugacy_classes_of_overgroups(a7, p7, m7.members, 1) == 2);

    CHECK(maximal_overgroups(a5, a5, 10, 1).members.empty());
}

TEST_CASE("maximal subgroups of small groups agree with brute force") {
    auto s4 = sym(4);
    auto a4 = alt(4);
    Perm f0 = cyc(5, {{0, 1, 2, 3, 4}});
    Perm f1 = cyc(5, {{1, 2, 4, 3}});
    PermGroup f20 = PermGroup::build(5, {f0, f1});
    for (const PermGroup* g : {&s4, &a4, &f20}) {
        auto subs = maximal_subgroups_small(*g, 10000, 3);
        std::multiset<std::size_t> got;
        for (const auto& m : subs) got.insert(to_u64(m.order()));
        // brute force lists every maximal subgroup; compare the sets of orders
        std::multiset<std::size_t> want = brute_maximal_orders(*g);
        CHECK(std::set<std::size_t>(got.begin(), got.end()) == std::set<std::size_t>(want.begin(), want.end()));
        PermGroup phi = intersection_of_cores(*g, subs, 1);
        CHECK(phi.order() == 1);
    }
    PermGroup c4 = PermGroup::build(4, {cyc(4, {{0, 1, 2, 3}})});
    auto mc4 = maximal_subgroups_small(c4, 100, 1);
    REQUIRE(mc4.size() == 1);
    CHECK(mc4[0].order() == 2);
    CHECK(intersection_of_cores(c4, mc4, 1).order() == 2);
}
