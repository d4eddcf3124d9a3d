// Acceptance run: prints PASS or FAIL for each criterion with a one-line detail.

#include "unimax/oracle.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

using namespace unimax;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Result {
    bool pass = false;
    std::string detail;
};

constexpr std::size_t kBound = 1000000;

GroupInstance instance(Family fam, unsigned n, std::uint64_t p, unsigned f, const std::string& deco = "1",
                       const std::string& sporadic = "") {
    return build_from_spec(make_spec(fam, n, p, f, deco, sporadic));
}

std::string orders(const OvergroupReport& rep) {
    std::string s = "{";
    for (std::size_t i = 0; i < rep.members.size(); ++i) s += (i ? "," : "") + rep.members[i].order.get_str();
    return s + "}";
}

Result rpart_exhaustive() {
    const auto start = Clock::now();
    std::size_t checked = 0, bad = 0;
    for (std::uint64_t q = 2; q <= 128; ++q) {
        PrimePowerQ pq;
        if (!as_prime_power(BigInt(static_cast<unsigned long>(q)), pq)) continue;
        for (std::uint64_t r = 2; r <= 31; ++r) {
            if (!is_prime(r)) continue;
            for (Sign eps : {Sign::Plus, Sign::Minus}) {
                const BigInt qe = BigInt(static_cast<unsigned long>(q)) - to_int(eps);
                if (qe % r != 0) continue;
                for (unsigned d = 1; d <= 12; ++d)
                    for (PowForm form : {PowForm::MinusEps, PowForm::PlusEps}) {
                        const BigInt qd = pow(BigInt(static_cast<unsigned long>(q)), d);
                        const BigInt lit = form == PowForm::MinusEps ? BigInt(qd - to_int(eps)) : BigInt(qd + to_int(eps));
                        ++checked;
                        if (rpart_q_pow_formula(pq, d, form, eps, r).value != r_valuation(lit, r).value) ++bad;
                    }
            }
        }
    }
    const double t = seconds_since(start);
    std::ostringstream os;
    os << checked << " cases, " << bad << " mismatches, " << t << " s";
    return {bad == 0 && checked > 0 && t < 5, os.str()};
}

Result zsigmondy() {
    std::set<std::pair<std::uint64_t, unsigned>> empty;
    for (std::uint64_t q = 2; q <= 128; ++q) {
        PrimePowerQ pq;
        if (!as_prime_power(BigInt(static_cast<unsigned long>(q)), pq)) continue;
        for (unsigned d = 2; d <= 12; ++d)
            if (ppd(pq, d).empty()) empty.insert({q, d});
    }
    const std::set<std::pair<std::uint64_t, unsigned>> expected{{2, 6}, {3, 2}, {7, 2}, {31, 2}, {127, 2}};
    std::ostringstream os;
    os << empty.size() << " empty (q, d) pairs";
    return {empty == expected, os.str()};
}

struct MasterRun {
    std::vector<VerdictDiff> diffs;
    std::size_t instances = 0;
    double seconds = 0;
};

Result master(const MasterRun& run) {
    std::size_t ok = 0, mismatch = 0, skipped = 0;
    std::string first;
    for (const auto& d : run.diffs) {
        if (d.status == "ok") ++ok;
        if (d.status == "skipped") ++skipped;
        if (d.status == "mismatch") {
            ++mismatch;
            if (first.empty()) first = "; first: " + d.instance + " r=" + std::to_string(d.r) + " " + d.mismatches.front();
        }
    }
    std::ostringstream os;
    os << run.instances << " instances, " << run.diffs.size() << " pairs, ok " << ok << ", mismatch " << mismatch
       << ", skipped " << skipped << ", " << run.seconds << " s" << first;
    return {mismatch == 0 && run.instances >= 50 && run.seconds < 1800, os.str()};
}

Result spot_rows() {
    std::vector<std::string> failures;
    auto expect = [&](const std::string& label, const GroupInstance& inst, std::uint64_t r,
                      std::function<bool(const OvergroupReport&)> pred) {
        OvergroupReport rep = brute_M_R(inst, r, kBound, 0);
        if (!pred(rep)) failures.push_back(label + " got " + orders(rep));
    };
    auto single = [](unsigned long order) {
        return [order](const OvergroupReport& rep) { return rep.unique && rep.members[0].order == order; };
    };
    expect("(A5,2)", instance(Family::Alt, 5, 0, 0), 2, single(12));
    expect("(A6,3)", instance(Family::Alt, 6, 0, 0), 3, single(36));
    expect("(A9,3)", instance(Family::Alt, 9, 0, 0), 3, single(648));
    expect("(A7,7)", instance(Family::Alt, 7, 0, 0), 7, [](const OvergroupReport& rep) { return !rep.unique; });
    expect("(Sz(8),5)", instance(Family::B2_2, 0, 2, 3), 5,
           [](const OvergroupReport& rep) { return rep.unique && rep.members[0].order == 20 && rep.ngr0 == 20; });
    expect("(M11,11)", instance(Family::Sporadic, 0, 0, 0, "1", "M11"), 11, single(660));
    std::string detail = failures.empty() ? "6 rows reproduced" : "";
    for (const auto& f : failures) detail += f + " ";
    return {failures.empty(), detail};
}

Result weak_subnormal() {
    struct Case {
        std::string label;
        GroupInstance inst;
        std::uint64_t r;
        bool expected;
    };
    std::vector<Case> cases;
    cases.push_back({"PGL2(7)", instance(Family::L, 2, 7, 1, "PGL"), 2, true});
    cases.push_back({"PGL2(17)", instance(Family::L, 2, 17, 1, "PGL"), 2, true});
    cases.push_back({"PGL2(31)", instance(Family::L, 2, 31, 1, "PGL"), 2, true});
    cases.push_back({"M10", instance(Family::L, 2, 3, 2, "M10"), 2, true});
    cases.push_back({"L2(9).2^2", instance(Family::L, 2, 3, 2, "2^2"), 2, true});
    cases.push_back({"L2(8).3", instance(Family::L, 2, 2, 3, "f3"), 3, true});
    cases.push_back({"L3(2).2", instance(Family::L, 3, 2, 1, "g"), 2, true});
    cases.push_back({"L3(4).2_3", instance(Family::L, 3, 2, 2, "2_3"), 2, true});
    cases.push_back({"PSigmaL2(9)", instance(Family::L, 2, 3, 2, "PSigmaL"), 2, false});
    std::string bad;
    for (const auto& c : cases)
        if (brute_weak_subnormal(c.inst, c.r, kBound, 0) != c.expected) bad += c.label + " ";
    return {bad.empty(), bad.empty() ? std::to_string(cases.size()) + " cases agree" : "mismatch: " + bad};
}

Result or_h_overgroups() {
    std::string detail;
    bool pass = true;
    auto check = [&](const std::string& label, const GroupInstance& inst, std::uint64_t r, bool expected) {
        OvergroupReport rep = brute_M_R(inst, r, kBound, 0);
        if (!rep.unique) {
            pass = false;
            detail += label + ": M(R) has " + std::to_string(rep.members.size()) + " members, so H is undefined; ";
            return;
        }
        if (*rep.m_or_h_unique != expected) {
            pass = false;
            detail += label + ": got " + (*rep.m_or_h_unique ? "true" : "false") + "; ";
        }
    };
    check("L3(3).2", instance(Family::L, 3, 3, 1, "g"), 2, true);
    check("L2(23)", instance(Family::L, 2, 23, 1), 2, true);
    check("PGL2(23)", instance(Family::L, 2, 23, 1, "PGL"), 2, true);
    check("(A9,3)", instance(Family::Alt, 9, 0, 0), 3, false);
    return {pass, pass ? "4 cases agree" : detail};
}

Result property_suite(const MasterRun& run) {
    std::string detail;
    bool pass = true;
    int coprime_true = 0, coprime_false = 0;
    auto examples = build_semidirect_examples(0);
    for (const auto& ex : examples) {
        CoprimeCheck c = check_coprime_lemma(ex, 0);
        if (!c.agree() || c.unique_maximal != ex.irreducible) {
            pass = false;
            detail += "coprime " + ex.name + " fails; ";
        }
        (c.unique_maximal ? coprime_true : coprime_false)++;
    }
    if (examples.size() < 3 || !coprime_true || !coprime_false) pass = false;

    int frattini_groups = 0;
    for (const auto& name : small_group_names()) {
        auto inst = build_small_group(name);
        const auto primes = prime_divisors(inst.group.order());
        if (inst.group.order() > 200 || primes.size() < 2) continue;
        ++frattini_groups;
        for (const BigInt& p : primes)
            if (!check_rfrattini(inst.group, to_u64(p), 0).ok()) {
                pass = false;
                detail += "r-Frattini " + name + " r=" + p.get_str() + " fails; ";
            }
    }
    if (frattini_groups < 10) pass = false;

    std::size_t invariant_checks = 0, violations = 0;
    for (const auto& d : run.diffs)
        for (auto it = d.flags.begin(); it != d.flags.end(); ++it)
            if (it.key().rfind("invariant:", 0) == 0) {
                ++invariant_checks;
                if (!it.value().get<bool>()) ++violations;
            }
    if (violations) pass = false;
    std::ostringstream os;
    os << examples.size() << " semidirect products (" << coprime_true << " unique, " << coprime_false
       << " not), r-Frattini on " << frattini_groups << " groups, " << invariant_checks << " invariant checks with "
       << violations << " violations";
    if (!detail.empty()) os << "; " << detail;
    return {pass, os.str()};
}

Result determinism() {
    const std::string cmd = std::string(UNIMAX_CLI) + " verify --profile desk --seed 0 -o ";
    const std::string a = "/tmp/unimax_acceptance_a.jsonl", b = "/tmp/unimax_acceptance_b.jsonl";
    const int ca = std::system((cmd + a + " 2>/dev/null").c_str());
    const int cb = std::system((cmd + b + " 2>/dev/null").c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string ta = slurp(a), tb = slurp(b);
    std::ostringstream os;
    os << "exit codes " << ca << "/" << cb << ", " << ta.size() << " bytes, " << (ta == tb ? "identical" : "different");
    return {!ta.empty() && ta == tb, os.str()};
}

}  // namespace

int main() {
    MasterRun run;
    {
        auto manifest = load_manifest(default_manifest_path());
        VerifyOptions opts;
        opts.profile = resolve_profile("desk");
        opts.jobs = std::max(1u, std::thread::hardware_concurrency());
        for (const auto& e : manifest)
            if (e.tier == "desk") ++run.instances;
        const auto start = Clock::now();
        run.diffs = run_verification(manifest, opts);
        run.seconds = seconds_since(start);
    }
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"1 r-part closed form vs direct valuation", rpart_exhaustive},
        {"2 Zsigmondy exceptions", zsigmondy},
        {"3 master cross-validation", [&] { return master(run); }},
        {"4 documented rows by enumeration", spot_rows},
        {"5 weakly subnormal Sylow subgroups", weak_subnormal},
        {"6 M(O_r(H)) = {H}", or_h_overgroups},
        {"7 reduction property suite", [&] { return property_suite(run); }},
        {"8 deterministic verify output", determinism},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        failed += !r.pass;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << name << ": " << r.detail << std::endl;
    }
    return failed ? 1 : 0;
}
