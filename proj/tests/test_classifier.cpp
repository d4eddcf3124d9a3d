#include "doctest.h"
#include "unimax/classifier.hpp"

#include <set>

using namespace unimax;

namespace {

using F = Family;

GroupSpec alt(unsigned n, bool sym = false) { return make_spec(F::Alt, n, 0, 0, sym ? "S" : "1"); }
GroupSpec l2(std::uint64_t p, unsigned f, const std::string& deco = "1") { return make_spec(F::L, 2, p, f, deco); }
GroupSpec sporadic(const std::string& name) { return make_spec(F::Sporadic, 0, 0, 0, "1", name); }

std::string row_of(const GroupSpec& s, std::uint64_t r) {
    Verdict v = classify(s, r);
    REQUIRE(v.outcome == Outcome::Unique);
    return v.overgroup->row;
}

BigInt h_order(const GroupSpec& s, std::uint64_t r) {
    Verdict v = classify(s, r);
    REQUIRE(v.outcome == Outcome::Unique);
    REQUIRE(v.overgroup->order.has_value());
    return *v.overgroup->order;
}

bool unique(const GroupSpec& s, std::uint64_t r) { return classify(s, r).outcome == Outcome::Unique; }

/// Every almost simple extension expressible for a socle with the given parameters.
std::vector<GroupSpec> extensions(F fam, unsigned n, std::uint64_t p, unsigned f) {
    GroupSpec base;
    base.family = fam;
    base.n = n;
    base.q = PrimePowerQ::make(p, f);
    std::vector<GroupSpec> out;
    const std::uint64_t fd = full_diag(base);
    for (std::uint64_t d = 1; d <= fd; ++d) {
        if (fd % d) continue;
        for (std::uint64_t k = 1; k <= f; ++k) {
            if (f % k) continue;
            for (GraphPart g : {GraphPart::None, GraphPart::Graph, GraphPart::GraphField}) {
                for (bool tw : {false, true}) {
                    GroupSpec s = base;
                    s.outer = OuterLabel{d, k, g, tw};
                    try {
                        validate(s);
                        out.push_back(s);
                    } catch (const SpecError&) {
                    }
                }
            }
        }
    }
    return out;
}

/// Specs covering every family at small parameters.
std::vector<GroupSpec> sweep() {
    std::vector<GroupSpec> out;
    for (unsigned n = 5; n <= 40; ++n) {
        out.push_back(alt(n));
        out.push_back(alt(n, true));
    }
    std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 59, 61, 67, 71, 73, 79, 127, 131};
    for (std::uint64_t p : primes)
        for (unsigned f = 1; f <= 8; ++f) {
            if (BigInt(pow(BigInt(p), f)) > 300) break;
            for (auto& s : extensions(F::L, 2, p, f)) out.push_back(s);
        }
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}})
        for (unsigned n : {3u, 4u, 5u, 7u})
            for (F fam : {F::L, F::U})
                for (auto& s : extensions(fam, n, p, f)) out.push_back(s);
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}})
        for (unsigned n : {4u, 6u, 8u})
            for (auto& s : extensions(F::Sp, n, p, f)) out.push_back(s);
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}})
        for (unsigned n : {7u, 9u, 11u})
            for (auto& s : extensions(F::O_odd, n, p, f)) out.push_back(s);
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {7, 1}})
        for (unsigned n : {8u, 10u, 12u, 16u}) {
            for (auto& s : extensions(F::O_plus, n, p, f)) out.push_back(s);
            for (auto& s : extensions(F::O_minus, n, p, f)) out.push_back(s);
        }
    for (unsigned f : {3u, 5u, 7u})
        for (auto& s : extensions(F::B2_2, 0, 2, f)) out.push_back(s);
    for (unsigned f : {3u, 5u})
        for (auto& s : extensions(F::G2_2, 0, 3, f)) out.push_back(s);
    for (unsigned f : {3u, 5u})
        for (auto& s : extensions(F::F4_2, 0, 2, f)) out.push_back(s);
    for (auto [p, f] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {4, 1}, {5, 1}, {2, 2}, {7, 1}, {2, 3}, {13, 1}})
        for (F fam : {F::G2, F::D4_3, F::F4, F::E6, F::E6_2, F::E7, F::E8}) {
            if (p == 4) continue;
            for (auto& s : extensions(fam, 0, p, f)) out.push_back(s);
        }
    for (const auto& info : sporadic_groups()) out.push_back(sporadic(info.name));
    return out;
}

}  // namespace

TEST_CASE("precheck rejects trivial socle part and non r-group quotients") {
    auto v = precheck(l2(2, 5, "f5"), 5);
    REQUIRE(v.has_value());
    CHECK(v->outcome == Outcome::NotUnique);

    v = precheck(l2(3, 2, "d"), 3);
    REQUIRE(v.has_value());
    CHECK(v->outcome == Outcome::NotUnique);

    CHECK_FALSE(precheck(alt(6), 3).has_value());

    v = precheck(alt(6), 7);
    REQUIRE(v.has_value());
    CHECK(v->outcome == Outcome::OutOfScope);

    CHECK_THROWS_AS(precheck(alt(6), 4), SpecError);
}

TEST_CASE("classify reproduces the documented rows") {
    CHECK(row_of(alt(9), 3) == "Alt:r-odd:c");
    CHECK(classify(alt(9), 3).overgroup->type == "(S_r wr S_r) cap G");
    CHECK(classify(alt(7), 7).outcome == Outcome::NotUnique);
    CHECK(row_of(make_spec(F::B2_2, 0, 2, 3), 5) == "TableC:2B2:r4");
    CHECK(row_of(sporadic("M11"), 11) == "TableD:M11:11");
    CHECK(classify(sporadic("M11"), 11).overgroup->type == "L_2(11)");
    CHECK(row_of(l2(17, 1, "d"), 2) == "TableA:L2:GL1wrS2");
    CHECK(classify(sporadic("M23"), 23).overgroup->type == "23:11");
}

TEST_CASE("overgroup orders of the desk instances") {
    CHECK(h_order(alt(5), 2) == 12);
    CHECK(h_order(alt(5), 5) == 10);
    CHECK(h_order(alt(6), 3) == 36);
    CHECK(h_order(alt(9), 2) == 20160);
    CHECK(h_order(alt(9), 3) == 648);
    CHECK(h_order(alt(10), 3) == 181440);
    CHECK(h_order(alt(10), 5) == 14400);
    CHECK(h_order(alt(5, true), 2) == 24);
    CHECK(h_order(alt(9, true), 2) == 40320);
    CHECK(h_order(l2(17, 1), 2) == 16);
    CHECK(h_order(l2(17, 1, "d"), 2) == 32);
    CHECK(h_order(l2(17, 1), 3) == 18);
    CHECK(h_order(l2(13, 1), 7) == 14);
    CHECK(h_order(l2(2, 4), 17) == 34);
    CHECK(h_order(l2(2, 5), 3) == 66);
    CHECK(h_order(l2(2, 5), 11) == 66);
    CHECK(h_order(l2(2, 3), 3) == 18);
    CHECK(h_order(l2(2, 3, "f3"), 3) == 54);
    CHECK(h_order(l2(31, 1), 2) == 32);
    CHECK(h_order(l2(23, 1, "d"), 2) == 48);
    CHECK(h_order(make_spec(F::L, 3, 3, 1), 13) == 39);
    CHECK(h_order(make_spec(F::L, 3, 3, 1, "g"), 2) == 96);
    CHECK(h_order(make_spec(F::L, 3, 2, 2, "2_2"), 2) == 384);
    CHECK(h_order(make_spec(F::L, 3, 2, 2, "2_3"), 2) == 384);
    CHECK(h_order(make_spec(F::L, 3, 2, 2, "d"), 3) == 216);
    CHECK(h_order(make_spec(F::U, 3, 3, 1), 3) == 216);
    CHECK(h_order(make_spec(F::U, 3, 3, 1), 7) == 168);
    CHECK(h_order(make_spec(F::Sp, 6, 2, 1), 3) == 51840);
    CHECK(h_order(make_spec(F::B2_2, 0, 2, 3), 2) == 448);
    CHECK(h_order(make_spec(F::B2_2, 0, 2, 3), 5) == 20);
    CHECK(h_order(make_spec(F::B2_2, 0, 2, 3), 13) == 52);
    CHECK(h_order(sporadic("M11"), 11) == 660);
}

TEST_CASE("non-unique desk instances") {
    CHECK_FALSE(unique(alt(5), 3));
    CHECK_FALSE(unique(alt(6), 2));
    CHECK_FALSE(unique(alt(6), 5));
    CHECK_FALSE(unique(l2(23, 1), 2));
    CHECK_FALSE(unique(l2(5, 2), 2));
    CHECK_FALSE(unique(l2(5, 2, "f2"), 2));
    CHECK(unique(l2(5, 2, "d"), 2));
    CHECK(unique(l2(5, 2, "t"), 2));
    CHECK(unique(l2(5, 2, "d.f2"), 2));
    CHECK_FALSE(unique(make_spec(F::L, 3, 2, 2, "2_1"), 2));
    CHECK_FALSE(unique(make_spec(F::L, 3, 2, 2), 7));
    CHECK_FALSE(unique(make_spec(F::L, 3, 3, 1), 2));
    CHECK_FALSE(unique(make_spec(F::U, 3, 3, 1), 2));
    for (std::uint64_t r : {2u, 5u, 7u}) CHECK_FALSE(unique(make_spec(F::Sp, 6, 2, 1), r));
    CHECK_FALSE(unique(make_spec(F::B2_2, 0, 2, 3), 7));
    for (std::uint64_t r : {2u, 3u, 5u, 7u, 13u}) CHECK_FALSE(unique(make_spec(F::B2_2, 0, 2, 3, "f3"), r));
    CHECK_FALSE(unique(sporadic("M11"), 2));
}

TEST_CASE("sporadic rows carry their caveats") {
    Verdict v = classify(sporadic("M"), 47);
    REQUIRE(v.outcome == Outcome::Unique);
    CHECK(v.overgroup->type == "2.B");
    CHECK(v.caveats == std::vector<std::string>{"depends-on-DLP"});
    CHECK(classify(sporadic("M"), 2).outcome == Outcome::NotUnique);
    CHECK(classify(sporadic("J1"), 19).overgroup->order == 114);
}

TEST_CASE("isomorphic inputs give the same verdict") {
    CHECK(h_order(l2(2, 2), 2) == 12);
    CHECK(h_order(l2(5, 1), 2) == 12);
    CHECK(h_order(make_spec(F::L, 3, 2, 1), 7) == 21);
    CHECK(h_order(make_spec(F::L, 3, 2, 1, "g"), 2) == 16);
    CHECK(h_order(make_spec(F::G2_2, 0, 3, 1), 3) == 18);
    CHECK(h_order(make_spec(F::G2, 0, 2, 1), 7) == 168);
}

TEST_CASE("N_G(R_0) rows") {
    CHECK_FALSE(ngr0_unique(alt(13), 13));
    CHECK(ngr0_unique(l2(2, 3), 2));
    CHECK(ngr0_unique(alt(29), 29));
    CHECK(ngr0_row(alt(29), 29)->row == "TableE:Ar");
    CHECK_FALSE(ngr0_unique(alt(23), 23));
    CHECK(ngr0_unique(sporadic("J4"), 43));
    CHECK_FALSE(ngr0_unique(sporadic("M11"), 11));
}

TEST_CASE("weakly subnormal Sylow subgroups") {
    CHECK(weakly_subnormal_sylow(l2(17, 1, "d"), 2));
    CHECK(weakly_subnormal_sylow(l2(2, 3, "f3"), 3));
    CHECK_FALSE(weakly_subnormal_sylow(l2(3, 2, "f2"), 2));
    CHECK(weakly_subnormal_sylow(l2(7, 1, "d"), 2));
    CHECK(weakly_subnormal_sylow(l2(31, 1, "d"), 2));
    CHECK(weakly_subnormal_sylow(l2(3, 2, "M10"), 2));
    CHECK(weakly_subnormal_sylow(l2(3, 2, "d.f2"), 2));
    CHECK(weakly_subnormal_sylow(make_spec(F::L, 3, 2, 1, "g"), 2));
    CHECK(weakly_subnormal_sylow(make_spec(F::L, 3, 2, 2, "2_3"), 2));
    CHECK_FALSE(weakly_subnormal_sylow(make_spec(F::L, 3, 2, 2, "2_2"), 2));
    CHECK(weakly_subnormal_sylow(make_spec(F::U, 3, 2, 3, "f3"), 3));
    CHECK(weakly_subnormal_sylow(make_spec(F::B2_2, 0, 2, 5, "f5"), 5));
    CHECK_FALSE(weakly_subnormal_sylow(alt(5, true), 2));
    CHECK_FALSE(weakly_subnormal_sylow(l2(23, 1, "d"), 2));
}

TEST_CASE("O_r(H) tables") {
    auto a9 = or_h_nontrivial(alt(9), 3);
    CHECK(a9.kind == OrHKind::TableF);
    CHECK(a9.row == "TableF:A9:3");
    CHECK(or_h_nontrivial(make_spec(F::U, 3, 3, 1), 7).kind == OrHKind::No);
    CHECK(or_h_nontrivial(make_spec(F::B2_2, 0, 2, 3), 5).kind == OrHKind::TableE);
    CHECK(or_h_nontrivial(l2(23, 1, "d"), 2).kind == OrHKind::TableF);
    CHECK(or_h_nontrivial(sporadic("M11"), 11).kind == OrHKind::No);
    CHECK_THROWS_AS(or_h_nontrivial(alt(7), 7), ClassifierError);
}

TEST_CASE("M(O_r(H)) = {H}") {
    CHECK(m_or_h_unique(make_spec(F::L, 3, 3, 1, "g"), 2));
    CHECK(m_or_h_unique(l2(23, 1, "d"), 2));
    CHECK(m_or_h_unique(l2(47, 1), 2));
    CHECK_FALSE(m_or_h_unique(alt(9), 3));
    CHECK(m_or_h_unique(l2(5, 2, "d.f2"), 2));
    CHECK(m_or_h_unique(l2(5, 2, "t"), 2));
    CHECK_FALSE(m_or_h_unique(l2(5, 2, "d"), 2));
    // G = L2(23) has |R| = 8, so M(R) is not a singleton and the operation is undefined.
    CHECK_THROWS_AS(m_or_h_unique(l2(23, 1), 2), ClassifierError);
}

TEST_CASE("maximal Sylow subgroups") {
    CHECK(maximal_sylow(l2(7, 1, "d"), 2));
    CHECK(maximal_sylow(l2(3, 2, "M10"), 2));
    CHECK(maximal_sylow(l2(3, 2, "d"), 2));
    CHECK(maximal_sylow(l2(3, 2, "d.f2"), 2));
    CHECK_FALSE(maximal_sylow(l2(3, 2, "f2"), 2));
    CHECK_FALSE(maximal_sylow(alt(6), 2));
    CHECK(maximal_sylow(l2(17, 1), 2));
    CHECK(maximal_sylow(l2(31, 1, "d"), 2));
    CHECK_FALSE(maximal_sylow(l2(7, 1), 2));
    CHECK_FALSE(maximal_sylow(l2(23, 1, "d"), 2));
    CHECK(maximal_sylow(make_spec(F::L, 3, 2, 1, "g"), 2));
}

TEST_CASE("traces replay and corollaries are consistent across a family sweep") {
    std::size_t pairs = 0, uniques = 0;
    std::set<std::string> rows;
    for (const GroupSpec& s : sweep()) {
        const BigInt order = group_order(s);
        std::vector<std::uint64_t> rs;
        for (const BigInt& d : prime_divisors(socle_order(s)))
            if (d < 1000) rs.push_back(to_u64(d));
        for (std::uint64_t r : rs) {
            INFO(s.describe() << " r=" << r);
            ++pairs;
            Verdict v;
            REQUIRE_NOTHROW(v = classify(s, r));
            for (const auto& e : v.trace) CHECK(replay(e) == e.value);
            if (v.outcome == Outcome::Unique) {
                ++uniques;
                rows.insert(v.overgroup->row);
                if (v.overgroup->order) CHECK(order % *v.overgroup->order == 0);
            }
            auto pre = precheck(s, r);
            if (pre && pre->outcome == Outcome::NotUnique) CHECK(v.outcome == Outcome::NotUnique);

            std::vector<TraceEntry> trace;
            const bool ws = weakly_subnormal_sylow(s, r, &trace);
            const bool ngr0 = ngr0_unique(s, r);
            if (ws) CHECK(ngr0);
            if (ngr0) CHECK(v.outcome == Outcome::Unique);
            if (ws) CHECK(m_or_h_unique(s, r));
            if (v.outcome == Outcome::Unique && ngr0) CHECK(or_h_nontrivial(s, r, &trace).kind != OrHKind::No);
            for (const auto& e : trace) CHECK(replay(e) == e.value);
        }
    }
    CHECK(pairs > 1000);
    CHECK(uniques > 100);
    CHECK(rows.size() > 25);
}

TEST_CASE("verdict JSON") {
    Verdict v = classify(l2(17, 1, "d"), 2);
    auto j = to_json(v);
    CHECK(j["schema_version"] == 1);
    CHECK(j["outcome"] == "unique");
    CHECK(j["overgroup"]["row"] == "TableA:L2:GL1wrS2");
    CHECK(j["overgroup"]["order"] == "32");
    CHECK(j["spec"]["family"] == "L");
    CHECK(j["trace"].is_array());
    CHECK(!j["trace"].empty());
    for (const auto& e : j["trace"]) {
        CHECK(e.contains("cond"));
        CHECK(e.contains("value"));
        CHECK(e.contains("operands"));
    }
    CHECK(to_json(classify(alt(7), 7))["overgroup"].is_null());
}
