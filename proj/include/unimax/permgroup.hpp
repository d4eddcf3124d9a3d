#pragma once
// Base and strong generating set for permutation groups.

#include "unimax/numtheory.hpp"
#include "unimax/perm.hpp"

#include <optional>

namespace unimax {

struct BuildOptions {
    std::uint64_t seed = 0;
    /// When the randomized phase reaches this order the chain is exact and verification is skipped.
    std::optional<BigInt> known_order;
    /// Base points placed first, in order, even when their basic orbits are trivial.
    std::vector<Point> base_prefix;
    /// Abort early once the order lower bound exceeds this value (result flagged as exceeded).
    std::optional<BigInt> stop_above;
    /// Consecutive trivially-sifting random elements before the deterministic phase.
    std::optional<int> quiet_rounds;
};

class PermGroup {
public:
    struct Level {
        Point point = 0;
        std::vector<Perm> gens;         // strong generators fixing all earlier base points
        std::vector<Point> orbit;       // basic orbit in discovery order
        std::vector<std::int32_t> where;  // point -> index into orbit / transversal, or -1
        std::vector<Perm> u;            // u[i] maps point to orbit[i]
        std::vector<Perm> u_inv;
    };

    PermGroup() = default;

    static PermGroup trivial(std::size_t degree, const std::vector<Point>& base_prefix = {});
    static PermGroup build(std::size_t degree, const std::vector<Perm>& gens, const BuildOptions& opts = {});

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Level>& levels() const { return levels_; }
    std::vector<Point> base() const;
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    /// True when construction stopped because the order bound in stop_above was exceeded.
    bool exceeded() const { return exceeded_; }

    bool contains(const Perm& g) const;
    /// Sift g through levels [start, end); returns the level where sifting stopped
    /// (levels().size() when all levels passed). residue holds the remainder.
    std::size_t sift(const Perm& g, Perm& residue, std::size_t start = 0) const;

    Perm identity() const { return Perm(degree_); }
    /// Uniformly random element (requires a complete chain).
    Perm random_element(Rng& rng) const;
    /// All elements; throws if the order exceeds limit.
    std::vector<Perm> elements(std::size_t limit = 2000000) const;
    /// The unique element whose images of the base points are imgs[0..levels-1].
    Perm element_from_base_images(const Point* imgs) const;
    /// Orbit partition: for every point, the least point in its orbit.
    std::vector<Point> orbit_labels() const;

private:
    friend class ChainBuilder;
    friend struct JoinResult join(const PermGroup&, const PermGroup&, const std::vector<Perm>&, std::uint64_t);
    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
    bool exceeded_ = false;
};

using Subgroup = PermGroup;

/// Subgroup of ambient generated by gens, with a chain that starts at ambient's base.
PermGroup make_subgroup(const PermGroup& ambient, const std::vector<Perm>& gens, std::uint64_t seed,
                        std::optional<BigInt> known_order = std::nullopt);

bool is_subset(const PermGroup& a, const PermGroup& b);
bool same_group(const PermGroup& a, const PermGroup& b);

struct JoinResult {
    bool is_ambient = false;
    PermGroup group;  // empty when is_ambient
};

/// <x, extra> inside ambient; detects the whole ambient group early from the order lower bound.
JoinResult join(const PermGroup& ambient, const PermGroup& x, const std::vector<Perm>& extra, std::uint64_t seed);

/// Smallest subgroup containing a and b, computed inside ambient.
PermGroup join_groups(const PermGroup& ambient, const PermGroup& a, const PermGroup& b, std::uint64_t seed);

}  // namespace unimax
