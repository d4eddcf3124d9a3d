#pragma once
// Symbolic description of an almost simple group: socle family, parameters and G/T.

#include "unimax/numtheory.hpp"

#include <string>
#include <vector>

namespace unimax {

enum class Family { Alt, L, U, Sp, O_odd, O_plus, O_minus, B2_2, G2_2, F4_2, D4_3, G2, F4, E6, E6_2, E7, E8, Sporadic };

std::string to_string(Family f);
Family family_from_string(const std::string& s);
bool is_lie_type(Family f);
bool is_classical(Family f);

struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GraphPart { None, Graph, GraphField };

/// G/T as a subgroup of Out(T), at the granularity the tables need.
struct OuterLabel {
    /// Order of the diagonal part. For Alt, 2 means G = S_n.
    std::uint64_t diag = 1;
    /// Order of the image of G in the field-automorphism quotient.
    std::uint64_t field = 1;
    GraphPart graph = GraphPart::None;
    /// Diagonal and field parts fused into one cyclic factor <delta phi^(f/field)> (e.g. M10).
    bool twisted = false;

    std::uint64_t order() const;
    bool is_trivial() const { return order() == 1; }
    std::string describe() const;
    friend bool operator==(const OuterLabel&, const OuterLabel&) = default;
};

struct GroupSpec {
    Family family = Family::Alt;
    unsigned n = 0;  // degree for Alt, dimension for classical groups
    PrimePowerQ q;   // ignored for Alt and Sporadic
    OuterLabel outer;
    std::string sporadic;  // name for Sporadic

    std::string describe() const;
};

/// Throws SpecError naming the violated invariant.
void validate(const GroupSpec& s);

/// Parse a decoration string (e.g. "1", "d", "f3", "d.f2", "M10", "2_3", "g", "gf") for the given socle.
OuterLabel parse_decoration(const GroupSpec& socle, const std::string& deco);

/// Build and validate a spec; p = 0 for Alt and Sporadic.
GroupSpec make_spec(Family family, unsigned n, std::uint64_t p, unsigned f, const std::string& decoration = "1",
                    const std::string& sporadic = "");

/// Order of the socle T.
BigInt socle_order(const GroupSpec& s);
/// Order of G.
BigInt group_order(const GroupSpec& s);

/// Order of the full diagonal automorphism group Outdiag(T).
std::uint64_t full_diag(const GroupSpec& s);

/// Specs of the same group under the exceptional isomorphisms A5 = L2(4) = L2(5), A6 = L2(9) = Sp4(2)',
/// L3(2) = L2(7), G2(2)' = U3(3), 2G2(3)' = L2(8). The input spec comes first.
std::vector<GroupSpec> isomorphic_views(const GroupSpec& s);

struct SporadicInfo {
    std::string name;
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
};
const std::vector<SporadicInfo>& sporadic_groups();

}  // namespace unimax
