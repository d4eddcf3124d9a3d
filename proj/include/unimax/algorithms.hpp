#pragma once
// Subgroup algorithms on top of the BSGS engine. Every subgroup passed in must have a chain
// whose base starts with the ambient group's base (make_subgroup guarantees this).

#include "unimax/permgroup.hpp"

namespace unimax {

struct Infeasible : GroupError {
    using GroupError::GroupError;
};

struct Bounds {
    std::size_t max_cosets = 200000;
    BigInt max_group_order = 10000000;
    BigInt max_small_order = 10000;
    std::size_t max_normalizer_subgroup = 10000;
};

/// Right cosets S g of a subgroup S in an ambient group A, identified by canonical keys:
/// the lexicographically least tuple of base images over the elements of the coset.
class CosetSpace {
public:
    CosetSpace(const PermGroup& ambient, const PermGroup& sub, std::size_t bound);

    std::size_t size() const { return count_; }
    Perm rep(std::size_t i) const;
    std::size_t index_of(const Perm& g) const;
    /// Coset of rep(i) * x.
    std::size_t image(std::size_t i, const Perm& x) const;
    /// Coset of g * x for a known element g of coset i (avoids reconstructing the rep).
    std::size_t image_of_product(const Perm& g, const Perm& x) const;

private:
    void compute_key(const Perm& g, Point* out) const;
    std::size_t lookup(const Point* key) const;
    std::size_t insert(const Point* key);
    std::uint64_t hash_key(const Point* key) const;
    void rehash();

    const PermGroup& a_;
    const PermGroup& s_;
    std::size_t k_ = 0;
    std::size_t count_ = 0;
    std::vector<Point> keys_;
    std::vector<std::uint32_t> table_;
    mutable Perm cur_, tmp_;
    mutable std::vector<Point> keybuf_;
};

std::vector<Perm> double_coset_reps(const PermGroup& g, const PermGroup& r, std::size_t bound);

/// Kernel of K (a subgroup of ambient) acting on the right cosets of S in ambient.
PermGroup action_kernel(const PermGroup& ambient, const PermGroup& k, const PermGroup& s, std::size_t bound,
                        std::uint64_t seed);

struct CosetAction {
    std::size_t index = 0;
    std::vector<Perm> image_generators;  // images of the ambient generators on the cosets
    PermGroup image;                     // built only for small indices
    bool image_built = false;
    PermGroup kernel;                    // core of H in G
};

CosetAction coset_action_kernel(const PermGroup& g, const PermGroup& h, std::size_t bound, std::uint64_t seed,
                                std::size_t image_build_limit = 5000);

PermGroup core(const PermGroup& g, const PermGroup& h, std::size_t bound, std::uint64_t seed);

PermGroup intersection(const PermGroup& ambient, const PermGroup& a, const PermGroup& b, std::uint64_t seed);

PermGroup conjugate_subgroup(const PermGroup& ambient, const PermGroup& h, const Perm& g, std::uint64_t seed);

PermGroup normal_closure(const PermGroup& g, const PermGroup& h, std::uint64_t seed);

bool is_normal(const PermGroup& g, const PermGroup& h);

PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::uint64_t seed,
                     std::size_t max_subgroup_order = 100000);

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t r, std::uint64_t seed);

/// O_r(H) as the kernel of H acting on the cosets of a Sylow r-subgroup.
PermGroup r_core_by_kernel(const PermGroup& h, std::uint64_t r, std::size_t bound, std::uint64_t seed);
/// O_r(H) as the stable intersection of conjugates of a Sylow r-subgroup.
PermGroup r_core_by_intersection(const PermGroup& h, std::uint64_t r, std::uint64_t seed);

struct OvergroupSearch {
    std::vector<PermGroup> members;
    std::size_t double_cosets = 0;
    std::size_t proper_candidates = 0;
    std::size_t closure_size = 0;
};

OvergroupSearch maximal_overgroups(const PermGroup& g, const PermGroup& r, std::size_t bound, std::uint64_t seed);

/// Number of G-conjugacy classes among members, all of which contain r.
std::size_t conjugacy_classes_of_overgroups(const PermGroup& g, const PermGroup& r,
                                            const std::vector<PermGroup>& members, std::uint64_t seed);

/// Element conjugacy classes of a small group: (representative, class size).
std::vector<std::pair<Perm, std::size_t>> conjugacy_classes_small(const PermGroup& g);

/// One representative per conjugacy class of maximal subgroups, possibly more.
std::vector<PermGroup> maximal_subgroups_small(const PermGroup& g, const BigInt& size_bound, std::uint64_t seed);

/// Intersection of the listed subgroups' cores (the Frattini subgroup for a full class list).
PermGroup intersection_of_cores(const PermGroup& g, const std::vector<PermGroup>& subs, std::uint64_t seed);

bool is_r_group(const BigInt& order, std::uint64_t r);

}  // namespace unimax
