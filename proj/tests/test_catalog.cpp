#include "doctest.h"
#include "unimax/algorithms.hpp"
#include "unimax/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

using namespace unimax;

namespace {

BigInt big(std::uint64_t v) { return BigInt(std::to_string(v)); }

GroupSpec spec_of(Family f, unsigned n, std::uint64_t p, unsigned e) {
    GroupSpec s;
    s.family = f;
    s.n = n;
    s.q = PrimePowerQ::make(p, e);
    return s;
}

// Element orders in the coset gT, by enumeration.
std::set<std::uint64_t> coset_element_orders(const GroupInstance& g) {
    std::set<std::uint64_t> out;
    for (const Perm& x : g.group.elements())
        if (!g.socle.contains(x)) out.insert(x.order());
    return out;
}

void check_instance(const GroupInstance& g, std::uint64_t order, std::size_t degree, std::uint64_t socle) {
    CHECK(g.group.order() == big(order));
    CHECK(g.expected_order == big(order));
    CHECK(g.group.degree() == degree);
    CHECK(g.socle.order() == big(socle));
    CHECK(is_subset(g.socle, g.group));
    CHECK(is_normal(g.group, g.socle));
}

}  // namespace

TEST_CASE("finite field tables satisfy the field axioms") {
    for (auto [p, f] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}, {2, 4}, {3, 3}}) {
        GF F(p, f);
        const auto q = F.q();
        CHECK(F.modulus().size() == f + 1);
        for (GF::Elem a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            CHECK(F.mul(a, 1) == a);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            GF::Elem s = 0;
            for (std::uint32_t i = 0; i < p; ++i) s = F.add(s, a);
            CHECK(s == 0);
            for (GF::Elem b = 0; b < q; ++b) {
                CHECK(F.mul(a, b) == F.mul(b, a));
                CHECK(F.frob(F.mul(a, b)) == F.mul(F.frob(a), F.frob(b)));
                CHECK(F.frob(F.add(a, b)) == F.add(F.frob(a), F.frob(b)));
                for (GF::Elem c = 0; c < q && q <= 9; ++c)
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
        std::set<GF::Elem> powers;
        for (std::uint32_t i = 0; i < q - 1; ++i) powers.insert(F.pow(F.primitive(), i));
        CHECK(powers.size() == q - 1);
        std::uint32_t squares = 0;
        for (GF::Elem a = 1; a < q; ++a) squares += F.is_square(a);
        CHECK(squares == (p == 2 ? q - 1 : (q - 1) / 2));
    }
}

TEST_CASE("alternating and symmetric groups") {
    check_instance(build_alternating(5, false), 60, 5, 60);
    check_instance(build_alternating(6, true), 720, 6, 360);
    check_instance(build_alternating(9, false), 181440, 9, 181440);
}

TEST_CASE("two-dimensional projective groups and their extensions") {
    auto l2 = [](std::uint64_t p, unsigned f, const std::string& deco) {
        GroupSpec s = spec_of(Family::L, 2, p, f);
        return build_psl2(s.q, parse_decoration(s, deco));
    };
    check_instance(l2(7, 1, "1"), 168, 8, 168);
    check_instance(l2(17, 1, "d"), 4896, 18, 2448);
    check_instance(l2(2, 3, "f3"), 1512, 9, 504);
    check_instance(l2(5, 2, "d.f2"), 31200, 26, 7800);
    auto m10 = l2(3, 2, "M10");
    check_instance(m10, 720, 10, 360);
    auto pgl = l2(3, 2, "d");
    auto psl = l2(3, 2, "f2");
    // M10, PGL2(9) and S6 differ in the element orders outside A6.
    CHECK(coset_element_orders(m10) == std::set<std::uint64_t>{4, 8});
    CHECK(coset_element_orders(pgl) == std::set<std::uint64_t>{2, 8, 10});
    CHECK(coset_element_orders(psl) == std::set<std::uint64_t>{2, 4, 6});
}

TEST_CASE("three-dimensional linear groups, with and without dualities") {
    auto l3 = [](std::uint64_t p, unsigned f, const std::string& deco) {
        GroupSpec s = spec_of(Family::L, 3, p, f);
        return build_psl3(s.q, parse_decoration(s, deco));
    };
    check_instance(l3(2, 1, "1"), 168, 7, 168);
    check_instance(l3(2, 1, "g"), 336, 14, 168);
    check_instance(l3(3, 1, "1"), 5616, 13, 5616);
    check_instance(l3(2, 2, "1"), 20160, 21, 20160);
    check_instance(l3(2, 2, "d"), 60480, 21, 20160);
    for (const char* d : {"2_1", "2_2", "2_3"}) check_instance(l3(2, 2, d), 40320, std::string(d) == "2_1" ? 21 : 42, 20160);
    // The graph involution swaps points with lines; the field involution preserves both.
    auto g = l3(2, 2, "2_3");
    auto labels = g.group.orbit_labels();
    CHECK(std::all_of(labels.begin(), labels.end(), [](Point x) { return x == 0; }));
    auto f = l3(2, 2, "2_1");
    CHECK(f.group.degree() == 21);
}

TEST_CASE("unitary, symplectic, Suzuki and Mathieu constructions") {
    GroupSpec u = spec_of(Family::U, 3, 3, 1);
    check_instance(build_psu3(u.q, {}), 6048, 28, 6048);
    check_instance(build_psu3(u.q, parse_decoration(u, "f2")), 12096, 28, 6048);
    check_instance(build_sp6_2(), 1451520, 63, 1451520);
    check_instance(build_sz8({}), 29120, 65, 29120);
    OuterLabel f3;
    f3.field = 3;
    check_instance(build_sz8(f3), 87360, 65, 29120);
    check_instance(build_m11(), 7920, 11, 7920);
}

TEST_CASE("small groups have their stated orders") {
    for (const auto& name : small_group_names()) {
        auto g = build_small_group(name);
        INFO(name);
        CHECK(g.group.order() == g.expected_order);
        CHECK(g.group.elements().size() == to_u64(g.expected_order));
    }
    CHECK_THROWS_AS(build_small_group("nope"), CatalogError);
}

TEST_CASE("semidirect examples are coprime splittings") {
    for (const auto& ex : build_semidirect_examples()) {
        INFO(ex.name);
        const auto n = to_u64(ex.normal.order()), k = to_u64(ex.complement.order());
        CHECK(std::gcd(n, k) == 1);
        CHECK(big(n * k) == ex.group.group.order());
        CHECK(is_normal(ex.group.group, ex.normal));
    }
}

TEST_CASE("manifest loader validates entries") {
    auto dir = std::filesystem::temp_directory_path() / "unimax_manifest_test";
    std::filesystem::create_directories(dir);
    auto write = [&](const std::string& body) {
        std::ofstream(dir / "m.toml") << body;
        return (dir / "m.toml").string();
    };
    auto ok = load_manifest(write(R"toml([[group]]
name = "PGL2(7)"
family = "L"
n = 2
q = 7
decoration = "d"
order = 336
[[group.check]]
r = 2
verdict = "unique"
overgroup_order = "16"
weakly_subnormal = true
)toml"));
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].spec.outer.diag == 2);
    REQUIRE(ok[0].checks.size() == 1);
    CHECK(*ok[0].checks[0].overgroup_order == 16);
    CHECK_THROWS_AS(load_manifest(write("[[group]]\nname=\"x\"\nfamily=\"L\"\nn=2\nq=7\norder=5\n")), CatalogError);
    CHECK_THROWS_AS(load_manifest(write("[[group]]\nname=\"x\"\nfamily=\"L\"\nn=2\nq=6\norder=5\n")), CatalogError);
    CHECK_THROWS_AS(load_manifest(write("not toml [")), CatalogError);
    std::filesystem::remove_all(dir);
}
