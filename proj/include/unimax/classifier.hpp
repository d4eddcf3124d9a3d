#pragma once
// Table-driven decision of whether a Sylow r-subgroup of an almost simple group lies in a unique
// maximal subgroup, together with the weak-subnormality corollaries.

#include "unimax/groupspec.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace unimax {

struct ClassifierError : std::logic_error {
    using std::logic_error::logic_error;
};

enum class Outcome { Unique, NotUnique, OutOfScope };
std::string to_string(Outcome o);

/// One evaluated side condition. Replaying op on operands reproduces value.
struct TraceEntry {
    std::string cond;
    std::string op;
    bool value = false;
    nlohmann::json operands;
};

struct OvergroupDesc {
    std::string row;                // e.g. "TableA:L2:GL1wrS2"
    std::string type;               // e.g. "GL_1(q) wr S_2"
    std::optional<BigInt> order;    // |H| when the row determines it
};

struct Verdict {
    GroupSpec spec;
    std::uint64_t r = 0;
    Outcome outcome = Outcome::NotUnique;
    std::optional<OvergroupDesc> overgroup;
    std::string reason;               // set for NotUnique / OutOfScope
    std::string view;                 // the isomorphic view whose rows produced the verdict
    std::vector<std::string> caveats; // e.g. "depends-on-DLP"
    std::vector<TraceEntry> trace;
};

/// NotUnique when R meets T trivially or G/T is not an r-group; OutOfScope when r does not divide |G|.
std::optional<Verdict> precheck(const GroupSpec& spec, std::uint64_t r);

/// Full decision. Every non-excluded isomorphic view is evaluated and the views must agree.
Verdict classify(const GroupSpec& spec, std::uint64_t r);

struct RowMatch {
    std::string row;
    std::string type;
};

/// Row certifying M(R) = {N_G(R_0)}, if any (evaluated over all isomorphic views).
std::optional<RowMatch> ngr0_row(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace = nullptr);
bool ngr0_unique(const GroupSpec& spec, std::uint64_t r);

/// R is weakly subnormal, i.e. M(R) = {N_G(R)}.
bool weakly_subnormal_sylow(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace = nullptr);

enum class OrHKind { No, TableE, TableF };
struct OrHResult {
    OrHKind kind = OrHKind::No;
    std::string row;
};
std::string to_string(OrHKind k);
/// Which table certifies O_r(H) != 1. Throws ClassifierError unless classify is Unique.
OrHResult or_h_nontrivial(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace = nullptr);

/// M(O_r(H)) = {H}. Throws ClassifierError unless classify is Unique.
bool m_or_h_unique(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace = nullptr);

/// A Sylow r-subgroup of G is itself maximal.
bool maximal_sylow(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace = nullptr);

/// Re-evaluate a trace entry from its operands.
bool replay(const TraceEntry& e);

nlohmann::json to_json(const GroupSpec& s);
nlohmann::json to_json(const TraceEntry& e);
nlohmann::json to_json(const Verdict& v);

}  // namespace unimax
