#pragma once
// Concrete permutation representations of desk-scale almost simple groups and small test groups.

#include "unimax/gf.hpp"
#include "unimax/groupspec.hpp"
#include "unimax/permgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace unimax {

struct CatalogError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GroupInstance {
    std::string name;
    std::optional<GroupSpec> spec;  // absent for the small non-almost-simple test groups
    PermGroup group;
    PermGroup socle;  // shares the base of group; equals group for small test groups
    BigInt expected_order;
};

GroupInstance build_alternating(unsigned n, bool symmetric, std::uint64_t seed = 0);
/// L2(q) on the projective line with diagonal, field and twisted decorations.
GroupInstance build_psl2(const PrimePowerQ& q, const OuterLabel& outer, std::uint64_t seed = 0);
/// L3(q) on points, or on points and lines when a graph automorphism is present.
GroupInstance build_psl3(const PrimePowerQ& q, const OuterLabel& outer, std::uint64_t seed = 0);
/// U3(q) on the q^3+1 isotropic points of the Hermitian form with identity Gram matrix.
GroupInstance build_psu3(const PrimePowerQ& q, const OuterLabel& outer, std::uint64_t seed = 0);
/// Sp6(2) on the 63 nonzero vectors.
GroupInstance build_sp6_2(std::uint64_t seed = 0);
/// Sz(8) on the 65 points of the Tits ovoid, optionally extended by field automorphisms.
GroupInstance build_sz8(const OuterLabel& outer, std::uint64_t seed = 0);
GroupInstance build_m11(std::uint64_t seed = 0);

/// Dispatch on the socle family; throws CatalogError when no construction exists.
GroupInstance build_from_spec(const GroupSpec& spec, std::uint64_t seed = 0);

/// Small groups used by the reduction-theorem property tests, keyed by name.
std::vector<std::string> small_group_names();
GroupInstance build_small_group(const std::string& name, std::uint64_t seed = 0);

/// A semidirect product N:K with gcd(|N|, |K|) = 1.
struct SemidirectExample {
    std::string name;
    GroupInstance group;
    PermGroup normal;      // N
    PermGroup complement;  // K
    bool irreducible;      // expected: K lies in a unique maximal subgroup
};
std::vector<SemidirectExample> build_semidirect_examples(std::uint64_t seed = 0);

// ---------------------------------------------------------------- manifest

struct ManifestCheck {
    std::uint64_t r = 0;
    std::string verdict;  // "unique" or "not_unique"
    std::optional<BigInt> overgroup_order;
    std::optional<bool> weakly_subnormal;
    std::optional<bool> ngr0;
    std::optional<std::string> or_h_nontrivial;
};

struct ManifestEntry {
    std::string name;
    GroupSpec spec;
    std::string decoration;
    BigInt expected_order;
    std::string tier = "desk";
    std::vector<ManifestCheck> checks;
};

std::vector<ManifestEntry> load_manifest(const std::string& path);
/// Default manifest location: $UNIMAX_DATA/catalog.toml, else the source tree's data directory.
std::string default_manifest_path();

}  // namespace unimax
