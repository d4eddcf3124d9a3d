#include "unimax/oracle.hpp"

#include <toml.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace unimax {

using nlohmann::json;

namespace {

std::uint64_t string_tag(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t pair_seed(std::uint64_t seed, const std::string& name, std::uint64_t r) {
    return derive_seed(derive_seed(seed, string_tag(name)), r);
}

bool is_prime_power_order(const BigInt& n) {
    if (n == 1) return false;
    return prime_divisors(n).size() == 1;
}

PermGroup commutator_subgroup(const PermGroup& h, std::uint64_t seed) {
    std::vector<Perm> comms;
    const auto& gens = h.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
            if (!c.is_identity()) comms.push_back(c);
        }
    return normal_closure(h, make_subgroup(h, comms, seed), derive_seed(seed, 1));
}

bool is_soluble(const PermGroup& g, std::uint64_t seed) {
    PermGroup cur = g;
    for (std::uint64_t step = 0; !cur.is_trivial(); ++step) {
        PermGroup next = commutator_subgroup(cur, derive_seed(seed, step));
        if (next.order() == cur.order()) return false;
        cur = std::move(next);
    }
    return true;
}

/// Preimage of Phi(G/N) for a normal subgroup N: the intersection of the maximal subgroups containing N.
PermGroup frattini_preimage(const PermGroup& g, const std::vector<PermGroup>& maxs, const PermGroup& n,
                            std::uint64_t seed) {
    std::vector<PermGroup> over;
    for (const auto& m : maxs)
        if (is_subset(n, m)) over.push_back(m);
    return intersection_of_cores(g, over, seed);
}

/// All four conditions of the N_G(R_0) equivalence from already computed data.
Ngr0Equivalence ngr0_equivalence_from(const PermGroup& g, const PermGroup& t, const PermGroup& r, const PermGroup& r0,
                            const PermGroup& h, const PermGroup& ngr, const PermGroup& ngr0, const PermGroup& orh,
                            bool m_or_h_unique, std::uint64_t seed) {
    Ngr0Equivalence e;
    e.ngr0_equals_ngr = same_group(ngr0, ngr);
    e.m_or_h_unique = m_or_h_unique;
    e.or_h_times_socle_is_g = join_groups(g, orh, t, seed).order() == g.order();
    const PermGroup h0 = intersection(g, h, t, derive_seed(seed, 1));
    e.commutator_in_r0 = true;
    for (const Perm& x : r.generators())
        for (const Perm& y : h0.generators())
            if (!r0.contains(x.inverse() * y.inverse() * x * y)) e.commutator_in_r0 = false;
    return e;
}

struct BruteState {
    OvergroupReport rep;
    PermGroup r, r0, ngr, ngr0;
    std::vector<PermGroup> members;
    std::vector<PermGroup> orh;
    std::optional<Ngr0Equivalence> equiv;
    bool normal_closure_is_g = false;
};

BruteState brute(const GroupInstance& inst, std::uint64_t r, std::size_t bound, std::uint64_t seed) {
    const PermGroup& g = inst.group;
    const PermGroup& t = inst.socle;
    BruteState st;
    OvergroupReport& rep = st.rep;
    rep.instance = inst.name;
    rep.r = r;
    rep.group_order = g.order();
    if (g.order() % r != 0) throw std::invalid_argument("r does not divide |G|");

    st.r = sylow_subgroup(g, r, derive_seed(seed, 1));
    rep.sylow_order = st.r.order();
    st.r0 = action_kernel(g, st.r, t, bound, derive_seed(seed, 2));
    rep.r0_order = st.r0.order();

    OvergroupSearch search = maximal_overgroups(g, st.r, bound, derive_seed(seed, 3));
    rep.double_cosets = search.double_cosets;
    st.members = std::move(search.members);
    std::sort(st.members.begin(), st.members.end(),
              [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
    rep.num_classes_rprime_index = conjugacy_classes_of_overgroups(g, st.r, st.members, derive_seed(seed, 4));

    st.ngr = normalizer(g, st.r, derive_seed(seed, 5));
    rep.ngr = st.ngr.order();
    st.ngr0 = st.r0.is_trivial() ? g : normalizer(g, st.r0, derive_seed(seed, 6));
    rep.ngr0 = st.ngr0.order();

    std::uint64_t tag = 100;
    for (const PermGroup& h : st.members) {
        MemberReport m;
        m.order = h.order();
        for (const Perm& x : h.generators()) m.generators.push_back(x.to_cycle_string());
        m.index_rpart = r_valuation(BigInt(g.order() / h.order()), r).value;
        PermGroup by_kernel = r_core_by_kernel(h, r, bound, derive_seed(seed, ++tag));
        PermGroup by_meet = r_core_by_intersection(h, r, derive_seed(seed, ++tag));
        m.or_h_order = by_kernel.order();
        m.or_h_methods_agree = same_group(by_kernel, by_meet);
        m.core_free = !is_subset(t, h);
        m.contains_ngr = is_subset(st.ngr, h);
        rep.members.push_back(std::move(m));
        st.orh.push_back(make_subgroup(g, by_kernel.generators(), derive_seed(seed, ++tag)));
    }

    rep.unique = st.members.size() == 1;
    if (rep.unique) {
        const PermGroup& h = st.members.front();
        rep.weakly_subnormal = same_group(h, st.ngr);
        rep.ngr0_is_member = same_group(h, st.ngr0);
        rep.sylow_is_maximal = h.order() == st.r.order();
        const PermGroup& o = st.orh.front();
        bool m_unique = false;
        // The trivial subgroup lies in every maximal subgroup, and a group with a nonabelian
        // composition factor has more than one.
        if (!o.is_trivial()) {
            OvergroupSearch so = maximal_overgroups(g, o, bound, derive_seed(seed, 7));
            m_unique = so.members.size() == 1 && same_group(so.members.front(), h);
        }
        rep.m_or_h_unique = m_unique;
        if (rep.ngr0_is_member) {
            st.equiv = ngr0_equivalence_from(g, t, st.r, st.r0, h, st.ngr, st.ngr0, o, m_unique, derive_seed(seed, 8));
            rep.lemma_equiv = st.equiv->all_agree();
        }
        st.normal_closure_is_g = normal_closure(g, st.r, derive_seed(seed, 9)).order() == g.order();
    }
    return st;
}

}  // namespace

bool Ngr0Equivalence::all_agree() const {
    return ngr0_equals_ngr == m_or_h_unique && m_or_h_unique == or_h_times_socle_is_g &&
           or_h_times_socle_is_g == commutator_in_r0;
}

OvergroupReport brute_M_R(const GroupInstance& inst, std::uint64_t r, std::size_t coset_bound, std::uint64_t seed) {
    return brute(inst, r, coset_bound, seed).rep;
}

bool brute_weak_subnormal(const GroupInstance& inst, std::uint64_t r, std::size_t coset_bound, std::uint64_t seed) {
    return brute(inst, r, coset_bound, seed).rep.weakly_subnormal;
}

Ngr0Equivalence check_lemma_equiv(const GroupInstance& inst, std::uint64_t r, std::size_t coset_bound, std::uint64_t seed) {
    BruteState st = brute(inst, r, coset_bound, seed);
    if (!st.equiv) throw std::invalid_argument(inst.name + ", r = " + std::to_string(r) + ": M(R) is not {N_G(R_0)}");
    return *st.equiv;
}

CoprimeCheck check_coprime_lemma(const SemidirectExample& ex, std::uint64_t seed) {
    const PermGroup& g = ex.group.group;
    const PermGroup& n = ex.normal;
    const PermGroup& k = ex.complement;
    if (BigInt(n.order() * k.order()) != g.order() || !is_normal(g, n))
        throw std::invalid_argument(ex.name + ": not a semidirect product N:K");
    CoprimeCheck out;
    const std::size_t bound = to_u64(g.order());
    OvergroupSearch s = maximal_overgroups(g, k, bound, derive_seed(seed, 1));
    out.unique_maximal = s.members.size() == 1;

    if (!is_prime_power_order(n.order())) return out;
    const PermGroup nn = make_subgroup(n, n.generators(), derive_seed(seed, 2));
    std::vector<PermGroup> maxs = maximal_subgroups_small(nn, nn.order(), derive_seed(seed, 3));
    PermGroup phi_n = intersection_of_cores(nn, maxs, derive_seed(seed, 4));
    PermGroup phi = make_subgroup(g, phi_n.generators(), derive_seed(seed, 5));
    const std::vector<Perm> k_elems = k.elements();
    bool irreducible = true;
    std::uint64_t tag = 10;
    for (const Perm& x : n.elements()) {
        if (phi.contains(x)) continue;
        std::vector<Perm> gens = phi.generators();
        for (const Perm& y : k_elems) gens.push_back(x.conjugate(y));
        if (make_subgroup(g, gens, derive_seed(seed, ++tag)).order() != n.order()) {
            irreducible = false;
            break;
        }
    }
    out.p_group_irreducible = irreducible;
    return out;
}

RFrattiniCheck check_rfrattini(const PermGroup& g, std::uint64_t r, std::uint64_t seed) {
    RFrattiniCheck out;
    const std::size_t bound = to_u64(g.order());
    PermGroup o = r_core_by_kernel(g, r, bound, derive_seed(seed, 1));
    out.or_order = o.order();
    std::vector<PermGroup> maxs = maximal_subgroups_small(g, g.order(), derive_seed(seed, 2));
    PermGroup d = frattini_preimage(g, maxs, o, derive_seed(seed, 3));
    out.d_order = d.order();
    std::vector<PermGroup> rprime;
    for (const auto& m : maxs)
        if (BigInt(g.order() / m.order()) % r != 0) rprime.push_back(m);
    PermGroup a = intersection_of_cores(g, rprime, derive_seed(seed, 4));
    out.rprime_intersection_order = a.order();
    out.equal = same_group(d, a);

    PermGroup s = sylow_subgroup(g, r, derive_seed(seed, 5));
    PermGroup sd = join_groups(g, s, d, derive_seed(seed, 6));
    out.quotient_or_trivial = same_group(core(g, sd, bound, derive_seed(seed, 7)), d);
    out.quotient_frattini_trivial = same_group(frattini_preimage(g, maxs, d, derive_seed(seed, 8)), d);
    return out;
}

std::optional<ReductionCheck> check_reduction(const PermGroup& g, std::uint64_t r, std::uint64_t seed) {
    const std::size_t bound = to_u64(g.order());
    PermGroup s = sylow_subgroup(g, r, derive_seed(seed, 1));
    if (is_normal(g, s)) return std::nullopt;
    OvergroupSearch search = maximal_overgroups(g, s, bound, derive_seed(seed, 2));
    if (search.members.size() != 1) return std::nullopt;
    ReductionCheck out;
    PermGroup o = r_core_by_kernel(g, r, bound, derive_seed(seed, 3));
    std::vector<PermGroup> maxs = maximal_subgroups_small(g, g.order(), derive_seed(seed, 4));
    PermGroup d = frattini_preimage(g, maxs, o, derive_seed(seed, 5));
    out.core_is_d = same_group(core(g, search.members.front(), bound, derive_seed(seed, 6)), d);
    out.two_primes = !is_soluble(g, derive_seed(seed, 7)) || prime_divisors(g.order()).size() == 2;
    return out;
}

// ---------------------------------------------------------------- profiles

Profile load_profile(const std::string& path, const std::string& name) {
    toml::table tbl;
    try {
        tbl = toml::parse_file(path);
    } catch (const toml::parse_error& e) {
        throw std::runtime_error("profile file " + path + ": " + std::string(e.description()));
    }
    const toml::table* t = tbl[name].as_table();
    if (!t) throw std::runtime_error("profile '" + name + "' not found in " + path);
    Profile p;
    p.name = name;
    if (auto v = (*t)["max_group_order"].value<std::int64_t>()) p.max_group_order = BigInt(std::to_string(*v));
    if (auto v = (*t)["max_cosets"].value<std::int64_t>()) p.max_cosets = static_cast<std::size_t>(*v);
    if (auto v = (*t)["max_seconds_per_pair"].value<double>()) p.max_seconds_per_pair = *v;
    if (auto arr = (*t)["tiers"].as_array()) {
        p.tiers.clear();
        for (const auto& x : *arr)
            if (auto s = x.value<std::string>()) p.tiers.push_back(*s);
    }
    return p;
}

std::string default_profile_path() {
    if (const char* d = std::getenv("UNIMAX_DATA")) return (std::filesystem::path(d) / "profiles.toml").string();
    return (std::filesystem::path(UNIMAX_SOURCE_DATA_DIR) / "profiles.toml").string();
}

Profile resolve_profile(const std::string& spec) {
    const auto pos = spec.find(".toml");
    if (pos == std::string::npos) return load_profile(default_profile_path(), spec);
    const std::string path = spec.substr(0, pos + 5);
    std::string name = "desk";
    if (pos + 5 < spec.size()) {
        if (spec[pos + 5] != ':') throw std::runtime_error("profile '" + spec + "': expected path.toml[:name]");
        name = spec.substr(pos + 6);
    }
    return load_profile(path, name);
}

namespace {
std::string normalized_name(const std::string& s) {
    std::string out;
    for (unsigned char c : s)
        if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}
}  // namespace

const ManifestEntry* find_entry(const std::vector<ManifestEntry>& manifest, const std::string& name) {
    for (const auto& e : manifest)
        if (e.name == name) return &e;
    const std::string key = normalized_name(name);
    for (const auto& e : manifest)
        if (normalized_name(e.name) == key) return &e;
    return nullptr;
}

std::string summary_table(const std::vector<VerdictDiff>& diffs) {
    std::size_t w = 8;
    for (const auto& d : diffs) w = std::max(w, d.instance.size());
    std::ostringstream os;
    auto row = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& e,
                   const std::string& f, const std::string& g) {
        os << std::left << std::setw(static_cast<int>(w) + 2) << a << std::setw(5) << b << std::setw(14) << c
           << std::setw(14) << e << std::setw(10) << f << g << '\n';
    };
    row("instance", "r", "classifier", "oracle", "status", "detail");
    std::map<std::string, std::size_t> counts;
    for (const auto& d : diffs) {
        ++counts[d.status];
        std::string detail = d.skip_reason;
        for (const auto& m : d.mismatches) detail += (detail.empty() ? "" : "; ") + m;
        row(d.instance, std::to_string(d.r), d.classifier_outcome, d.oracle_outcome, d.status, detail);
    }
    os << "pairs " << diffs.size() << ", ok " << counts["ok"] << ", mismatch " << counts["mismatch"] << ", skipped "
       << counts["skipped"] << '\n';
    return os.str();
}

// ---------------------------------------------------------------- harness

namespace {

bool entry_selected(const ManifestEntry& e, const VerifyOptions& opts) {
    if (std::find(opts.profile.tiers.begin(), opts.profile.tiers.end(), e.tier) == opts.profile.tiers.end())
        return false;
    for (const auto& [key, value] : opts.only) {
        if (key == "family" && to_string(e.spec.family) != value) return false;
        if (key == "name" && e.name != value) return false;
        if (key == "tier" && e.tier != value) return false;
    }
    return true;
}

json condensed(const BruteState& st) {
    const OvergroupReport& rep = st.rep;
    json j;
    j["group_order"] = rep.group_order.get_str();
    j["sylow_order"] = rep.sylow_order.get_str();
    j["r0_order"] = rep.r0_order.get_str();
    json mo = json::array(), oo = json::array();
    for (const auto& m : rep.members) {
        mo.push_back(m.order.get_str());
        oo.push_back(m.or_h_order.get_str());
    }
    j["member_orders"] = mo;
    j["or_h_orders"] = oo;
    j["classes"] = rep.num_classes_rprime_index;
    j["ngr"] = rep.ngr.get_str();
    j["ngr0"] = rep.ngr0.get_str();
    j["double_cosets"] = rep.double_cosets;
    return j;
}

void flag(VerdictDiff& d, const std::string& name, bool classifier, bool oracle) {
    d.flags[name] = {{"classifier", classifier}, {"oracle", oracle}, {"agree", classifier == oracle}};
    if (classifier != oracle)
        d.mismatches.push_back(name + ": classifier " + (classifier ? "true" : "false") + ", oracle " +
                               (oracle ? "true" : "false"));
}

void invariant(VerdictDiff& d, const std::string& name, bool holds) {
    d.flags["invariant:" + name] = holds;
    if (!holds) d.mismatches.push_back("invariant violated: " + name);
}

VerdictDiff verify_pair(const ManifestEntry& e, const GroupInstance& inst, std::uint64_t r, const VerifyOptions& opts) {
    VerdictDiff d;
    d.instance = e.name;
    d.r = r;
    d.flags = json::object();
    const std::uint64_t seed = pair_seed(opts.seed, e.name, r);

    Verdict v;
    try {
        v = classify(e.spec, r);
    } catch (const std::exception& ex) {
        d.status = "mismatch";
        d.mismatches.push_back(std::string("classifier error: ") + ex.what());
        return d;
    }
    d.classifier_outcome = to_string(v.outcome);

    BruteState st;
    try {
        st = brute(inst, r, opts.profile.max_cosets, seed);
    } catch (const Infeasible& ex) {
        d.status = "skipped";
        d.skip_reason = ex.what();
        return d;
    }
    const OvergroupReport& rep = st.rep;
    d.oracle = condensed(st);
    d.oracle_outcome = rep.unique ? "unique" : "not_unique";

    const bool c_unique = v.outcome == Outcome::Unique;
    if (c_unique != rep.unique)
        d.mismatches.push_back("uniqueness: classifier " + d.classifier_outcome + ", oracle " + d.oracle_outcome);
    if (c_unique && rep.unique && v.overgroup->order && *v.overgroup->order != rep.members.front().order)
        d.mismatches.push_back("overgroup order: classifier " + v.overgroup->order->get_str() + ", oracle " +
                               rep.members.front().order.get_str());

    flag(d, "weakly_subnormal", weakly_subnormal_sylow(e.spec, r), rep.weakly_subnormal);
    flag(d, "ngr0", ngr0_unique(e.spec, r), rep.ngr0_is_member);
    flag(d, "maximal_sylow", maximal_sylow(e.spec, r), rep.sylow_is_maximal);
    if (c_unique && rep.unique) {
        OrHResult orh = or_h_nontrivial(e.spec, r);
        d.flags["or_h_row"] = orh.row;
        flag(d, "or_h_nontrivial", orh.kind != OrHKind::No, rep.members.front().or_h_order > 1);
        flag(d, "m_or_h_unique", m_or_h_unique(e.spec, r), *rep.m_or_h_unique);
    }

    // Frozen regression values from the manifest.
    for (const ManifestCheck& c : e.checks) {
        if (c.r != r) continue;
        if (c.verdict != d.oracle_outcome) d.mismatches.push_back("manifest verdict " + c.verdict);
        if (c.overgroup_order && (!rep.unique || *c.overgroup_order != rep.members.front().order))
            d.mismatches.push_back("manifest overgroup order " + c.overgroup_order->get_str());
        if (c.weakly_subnormal && *c.weakly_subnormal != rep.weakly_subnormal)
            d.mismatches.push_back("manifest weakly_subnormal");
        if (c.ngr0 && *c.ngr0 != rep.ngr0_is_member) d.mismatches.push_back("manifest ngr0");
        if (c.or_h_nontrivial) {
            const bool expect_nontrivial = *c.or_h_nontrivial != "no";
            if (!rep.unique || expect_nontrivial != (rep.members.front().or_h_order > 1))
                d.mismatches.push_back("manifest or_h_nontrivial " + *c.or_h_nontrivial);
            else if (c_unique && to_string(or_h_nontrivial(e.spec, r).kind) != *c.or_h_nontrivial)
                d.mismatches.push_back("manifest or_h table " + *c.or_h_nontrivial);
        }
    }

    // Structural statements checked on the enumeration itself.
    const bool r0_trivial = rep.r0_order == 1;
    bool rprime = true, orh_agree = true;
    for (const auto& m : rep.members) {
        rprime = rprime && m.index_rpart == 1;
        orh_agree = orh_agree && m.or_h_methods_agree;
    }
    invariant(d, "members have r'-index", rprime);
    invariant(d, "O_r(H) kernel = intersection", orh_agree);
    if (r0_trivial) {
        invariant(d, "R0 = 1 implies |M(R)| >= 2", rep.members.size() >= 2);
    } else {
        invariant(d, "unique iff one class of r'-index maximals", rep.unique == (rep.num_classes_rprime_index == 1));
        bool core_free_over_ngr = false;
        for (const auto& m : rep.members) core_free_over_ngr = core_free_over_ngr || (m.core_free && m.contains_ngr);
        invariant(d, "core-free member contains N_G(R)", core_free_over_ngr);
        if (rep.unique)
            invariant(d, "unique implies G/T is an r-group",
                      is_r_group(BigInt(rep.group_order / inst.socle.order()), r));
    }
    if (rep.unique) invariant(d, "normal closure of R is G", st.normal_closure_is_g);
    if (rep.lemma_equiv) invariant(d, "N_G(R_0) equivalences agree", *rep.lemma_equiv);

    d.status = d.mismatches.empty() ? "ok" : "mismatch";
    return d;
}

std::vector<VerdictDiff> verify_entry(const ManifestEntry& e, const VerifyOptions& opts) {
    std::vector<VerdictDiff> out;
    const BigInt order = group_order(e.spec);
    std::vector<std::uint64_t> primes;
    for (const BigInt& p : prime_divisors(order)) primes.push_back(to_u64(p));
    auto skip_all = [&](const std::string& reason) {
        for (std::uint64_t r : primes) {
            VerdictDiff d;
            d.instance = e.name;
            d.r = r;
            d.status = "skipped";
            d.skip_reason = reason;
            d.flags = json::object();
            out.push_back(std::move(d));
        }
    };
    if (order > opts.profile.max_group_order) {
        skip_all("group order " + order.get_str() + " exceeds profile bound " + opts.profile.max_group_order.get_str());
        return out;
    }
    GroupInstance inst;
    try {
        inst = build_from_spec(e.spec, derive_seed(opts.seed, string_tag(e.name)));
    } catch (const CatalogError& ex) {
        skip_all(std::string("no construction: ") + ex.what());
        return out;
    }
    for (std::uint64_t r : primes) {
        const auto start = std::chrono::steady_clock::now();
        VerdictDiff d;
        if (inst.group.order() != e.expected_order) {
            d.instance = e.name;
            d.r = r;
            d.flags = json::object();
            d.status = "mismatch";
            d.mismatches.push_back("constructed order " + inst.group.order().get_str());
        } else {
            d = verify_pair(e, inst, r, opts);
        }
        d.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

std::vector<VerdictDiff> run_verification(const std::vector<ManifestEntry>& manifest, const VerifyOptions& opts) {
    std::vector<const ManifestEntry*> selected;
    for (const auto& e : manifest)
        if (entry_selected(e, opts)) selected.push_back(&e);
    // Largest groups first so that long jobs start early.
    std::vector<std::size_t> order(selected.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return group_order(selected[a]->spec) > group_order(selected[b]->spec);
    });

    std::vector<std::vector<VerdictDiff>> results(selected.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= order.size()) return;
            const std::size_t i = order[k];
            try {
                results[i] = verify_entry(*selected[i], opts);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<std::thread> threads;
    for (unsigned j = 1; j < jobs; ++j) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);

    std::vector<VerdictDiff> out;
    for (auto& v : results)
        for (auto& d : v) out.push_back(std::move(d));
    return out;
}

json to_json(const OvergroupReport& rep) {
    json j;
    j["schema_version"] = 1;
    j["instance"] = rep.instance;
    j["r"] = rep.r;
    j["group_order"] = rep.group_order.get_str();
    j["sylow_order"] = rep.sylow_order.get_str();
    j["r0_order"] = rep.r0_order.get_str();
    json members = json::array();
    for (const auto& m : rep.members)
        members.push_back({{"order", m.order.get_str()},
                           {"generators", m.generators},
                           {"index_rpart", m.index_rpart.get_str()},
                           {"or_h_order", m.or_h_order.get_str()},
                           {"core_free", m.core_free},
                           {"contains_ngr", m.contains_ngr}});
    j["members"] = members;
    j["num_classes_rprime_index"] = rep.num_classes_rprime_index;
    j["ngr"] = rep.ngr.get_str();
    j["ngr0"] = rep.ngr0.get_str();
    j["flags"] = {{"unique", rep.unique},
                  {"weakly_subnormal", rep.weakly_subnormal},
                  {"ngr0_is_member", rep.ngr0_is_member},
                  {"sylow_is_maximal", rep.sylow_is_maximal},
                  {"m_or_h_unique", rep.m_or_h_unique ? json(*rep.m_or_h_unique) : json(nullptr)},
                  {"lemma_equiv", rep.lemma_equiv ? json(*rep.lemma_equiv) : json(nullptr)}};
    j["double_cosets"] = rep.double_cosets;
    return j;
}

json to_json(const VerdictDiff& d) {
    json j;
    j["schema_version"] = 1;
    j["instance"] = d.instance;
    j["r"] = d.r;
    j["status"] = d.status;
    j["classifier"] = d.classifier_outcome;
    j["oracle_outcome"] = d.oracle_outcome;
    j["flags"] = d.flags;
    j["mismatches"] = d.mismatches;
    if (!d.skip_reason.empty()) j["skip_reason"] = d.skip_reason;
    j["oracle"] = d.oracle.is_null() ? json::object() : d.oracle;
    return j;
}

}  // namespace unimax
