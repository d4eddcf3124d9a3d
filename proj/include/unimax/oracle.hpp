#pragma once
// Brute-force ground truth for maximal overgroups of Sylow subgroups, the reduction-lemma property
// checks, and the manifest-driven cross-validation harness.

#include "unimax/algorithms.hpp"
#include "unimax/catalog.hpp"
#include "unimax/classifier.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace unimax {

/// Feasibility limits for one verification run.
struct Profile {
    std::string name = "desk";
    BigInt max_group_order = 10000000;
    std::size_t max_cosets = 1000000;
    double max_seconds_per_pair = 60;
    std::vector<std::string> tiers{"desk"};
};

/// Load a named profile from a TOML file with one table per profile.
Profile load_profile(const std::string& path, const std::string& name);
/// $UNIMAX_DATA/profiles.toml, else the source tree's data directory.
std::string default_profile_path();
/// "desk" or "stretch" from the default file, or "path.toml[:name]" (name defaults to "desk").
Profile resolve_profile(const std::string& spec);

struct MemberReport {
    BigInt order;
    std::vector<std::string> generators;  // cycle notation
    BigInt index_rpart;                   // r-part of |G : H|; 1 for every member
    BigInt or_h_order;                    // |O_r(H)|
    bool or_h_methods_agree = true;       // kernel and intersection computations coincide
    bool core_free = false;
    bool contains_ngr = false;
};

struct OvergroupReport {
    std::string instance;
    std::uint64_t r = 0;
    BigInt group_order;
    BigInt sylow_order;
    BigInt r0_order;
    std::vector<MemberReport> members;
    std::size_t num_classes_rprime_index = 0;
    BigInt ngr;
    BigInt ngr0;
    bool unique = false;
    bool weakly_subnormal = false;
    bool ngr0_is_member = false;  // M(R) = {N_G(R_0)}
    bool sylow_is_maximal = false;
    std::optional<bool> m_or_h_unique;  // set when unique
    std::optional<bool> lemma_equiv;    // set when M(R) = {N_G(R_0)}: all four conditions agree
    std::size_t double_cosets = 0;
};

/// Enumerate M(R) for a Sylow r-subgroup of the instance and fill every report field.
/// Throws Infeasible when a coset space exceeds the bound.
OvergroupReport brute_M_R(const GroupInstance& inst, std::uint64_t r, std::size_t coset_bound, std::uint64_t seed);

bool brute_weak_subnormal(const GroupInstance& inst, std::uint64_t r, std::size_t coset_bound, std::uint64_t seed);

/// The four conditions of the N_G(R_0) equivalence, computed separately.
struct Ngr0Equivalence {
    bool ngr0_equals_ngr = false;
    bool m_or_h_unique = false;
    bool or_h_times_socle_is_g = false;
    bool commutator_in_r0 = false;
    bool all_agree() const;
};
/// Requires M(R) = {N_G(R_0)}; throws std::invalid_argument otherwise.
Ngr0Equivalence check_lemma_equiv(const GroupInstance& inst, std::uint64_t r, std::size_t coset_bound, std::uint64_t seed);

/// For N:K with coprime orders: K in a unique maximal subgroup, versus N an r-group with K irreducible on N/Phi(N).
struct CoprimeCheck {
    bool unique_maximal = false;
    bool p_group_irreducible = false;
    bool agree() const { return unique_maximal == p_group_irreducible; }
};
CoprimeCheck check_coprime_lemma(const SemidirectExample& ex, std::uint64_t seed);

/// D = preimage of Phi(G/O_r(G)) against the intersection of all maximal subgroups of r'-index.
struct RFrattiniCheck {
    BigInt or_order;
    BigInt d_order;
    BigInt rprime_intersection_order;
    bool equal = false;
    bool quotient_or_trivial = false;
    bool quotient_frattini_trivial = false;
    bool ok() const { return equal && quotient_or_trivial && quotient_frattini_trivial; }
};
RFrattiniCheck check_rfrattini(const PermGroup& g, std::uint64_t r, std::uint64_t seed);

/// For a small group with M(R) = {H} and R not normal: the core of H is D, and an r-soluble G has exactly
/// two prime divisors. Returns nullopt when M(R) is not a singleton or R is normal.
struct ReductionCheck {
    bool core_is_d = false;
    bool two_primes = false;
};
std::optional<ReductionCheck> check_reduction(const PermGroup& g, std::uint64_t r, std::uint64_t seed);

// ---------------------------------------------------------------- verification harness

struct VerdictDiff {
    std::string instance;
    std::uint64_t r = 0;
    std::string status;  // "ok", "mismatch" or "skipped"
    std::string classifier_outcome;
    std::string oracle_outcome;
    nlohmann::json flags;          // per-flag {classifier, oracle, agree}
    std::vector<std::string> mismatches;
    std::string skip_reason;
    nlohmann::json oracle;         // condensed oracle report
    double seconds = 0;            // not serialized
};

struct VerifyOptions {
    Profile profile;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    /// key=value filters on family, name or tier; all must match.
    std::vector<std::pair<std::string, std::string>> only;
};

std::vector<VerdictDiff> run_verification(const std::vector<ManifestEntry>& manifest, const VerifyOptions& opts);

/// Look up a manifest entry by name, ignoring case and punctuation ("Sz8" finds "Sz(8)").
const ManifestEntry* find_entry(const std::vector<ManifestEntry>& manifest, const std::string& name);

/// Aligned per-pair table followed by ok/mismatch/skipped counts.
std::string summary_table(const std::vector<VerdictDiff>& diffs);

nlohmann::json to_json(const OvergroupReport& rep);
nlohmann::json to_json(const VerdictDiff& d);

}  // namespace unimax
