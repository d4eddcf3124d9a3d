// Command-line frontend: classify, oracle, verify, catalog.

#include "unimax/oracle.hpp"

#include <CLI11.hpp>
#include <toml.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace unimax;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kInfeasible = 3;

struct Exit {
    int code;
};

[[noreturn]] void fail(int code, const std::string& reason, const std::string& message) {
    std::string line = message;
    for (char& c : line)
        if (c == '\n') c = ' ';
    std::cerr << "error: " << reason << ": " << line << '\n';
    throw Exit{code};
}

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    try {
        return load_manifest(path.empty() ? default_manifest_path() : path);
    } catch (const std::exception& e) {
        fail(kInputError, "manifest_invalid", e.what());
    }
}

Profile read_profile(std::string name) {
    if (const char* env = std::getenv("UNIMAX_PROFILE"); env && *env) name = env;
    try {
        return resolve_profile(name);
    } catch (const std::exception& e) {
        fail(kInputError, "profile_invalid", e.what());
    }
}

void emit(const std::string& output, const std::string& text) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) fail(kInputError, "output_unwritable", output);
    f << text;
}

std::pair<std::string, std::string> split_filter(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(kInputError, "filter_invalid", "expected key=value, got '" + s + "'");
    std::string key = s.substr(0, eq);
    if (key != "family" && key != "name" && key != "tier")
        fail(kInputError, "filter_invalid", "unknown filter key '" + key + "'");
    return {key, s.substr(eq + 1)};
}

/// Rewrite the manifest with check tables taken from oracle results.
std::string frozen_manifest(const std::string& manifest_path, const std::vector<VerdictDiff>& diffs,
                            const std::string& provenance) {
    toml::table root = toml::parse_file(manifest_path);
    auto* groups = root["group"].as_array();
    for (auto& node : *groups) {
        auto& t = *node.as_table();
        const std::string name = t["name"].value_or<std::string>("");
        toml::array checks;
        for (const auto& d : diffs) {
            if (d.instance != name || d.status == "skipped" || d.oracle.is_null()) continue;
            toml::table c;
            c.insert("r", static_cast<std::int64_t>(d.r));
            c.insert("verdict", d.oracle_outcome);
            if (d.oracle_outcome == "unique") {
                c.insert("overgroup_order", d.oracle["member_orders"][0].get<std::string>());
                c.insert("weakly_subnormal", d.flags["weakly_subnormal"]["oracle"].get<bool>());
                c.insert("ngr0", d.flags["ngr0"]["oracle"].get<bool>());
                if (d.flags.contains("or_h_row")) {
                    const bool nontrivial = d.flags["or_h_nontrivial"]["oracle"].get<bool>();
                    const std::string row = d.flags["or_h_row"].get<std::string>();
                    std::string kind = "no";
                    if (nontrivial) kind = row.rfind("TableE", 0) == 0 ? "table_e" : "table_f";
                    c.insert("or_h_nontrivial", kind);
                }
            }
            checks.push_back(std::move(c));
        }
        t.erase("check");
        if (!checks.empty()) t.insert("check", std::move(checks));
    }
    std::ostringstream os;
    os << "# Catalog instances for the verification harness.\n"
       << "# Check values are oracle results frozen by `unimax verify --freeze` at " << provenance << ".\n\n"
       << root << '\n';
    return os.str();
}

int run_classify(const std::string& family, unsigned n, std::uint64_t p, unsigned f, const std::string& outer,
                 const std::string& sporadic, const std::string& instance, const std::string& manifest_path,
                 std::uint64_t r, const std::string& format, const std::string& output) {
    GroupSpec spec;
    if (!instance.empty()) {
        auto manifest = read_manifest(manifest_path);
        const ManifestEntry* e = find_entry(manifest, instance);
        if (!e) fail(kInputError, "unknown_instance", instance);
        spec = e->spec;
    } else {
        try {
            spec = make_spec(family_from_string(family), n, p, f, outer, sporadic);
        } catch (const std::exception& e) {
            fail(kInputError, "spec_invalid", e.what());
        }
    }
    Verdict v;
    try {
        v = classify(spec, r);
    } catch (const SpecError& e) {
        fail(kInputError, "spec_invalid", e.what());
    }
    if (format == "table") {
        std::ostringstream os;
        os << spec.describe() << "  r = " << r << "  " << to_string(v.outcome);
        if (v.overgroup) {
            os << "  " << v.overgroup->row << "  " << v.overgroup->type;
            if (v.overgroup->order) os << "  |H| = " << v.overgroup->order->get_str();
        } else {
            os << "  " << v.reason;
        }
        emit(output, os.str() + '\n');
    } else {
        emit(output, to_json(v).dump(2) + '\n');
    }
    return kOk;
}

GroupInstance resolve_instance(const std::string& name, const std::string& manifest_path, std::uint64_t seed) {
    for (const auto& s : small_group_names())
        if (s == name) return build_small_group(name, seed);
    auto manifest = read_manifest(manifest_path);
    const ManifestEntry* e = find_entry(manifest, name);
    if (!e) fail(kInputError, "unknown_instance", name);
    try {
        return build_from_spec(e->spec, seed);
    } catch (const CatalogError& ex) {
        fail(kInfeasible, "no_construction", ex.what());
    }
}

int run_oracle(const std::string& instance, const std::string& manifest_path, std::uint64_t r,
               const std::string& profile_name, std::uint64_t seed, const std::string& output) {
    const Profile profile = read_profile(profile_name);
    GroupInstance inst = resolve_instance(instance, manifest_path, seed);
    if (inst.group.order() > profile.max_group_order)
        fail(kInfeasible, "infeasible", "group order " + inst.group.order().get_str() + " exceeds profile bound");
    if (r < 2 || !is_prime(BigInt(static_cast<unsigned long>(r))) || inst.group.order() % r != 0)
        fail(kInputError, "r_invalid", "r must be a prime dividing |G|");
    try {
        OvergroupReport rep = brute_M_R(inst, r, profile.max_cosets, seed);
        emit(output, to_json(rep).dump(2) + '\n');
    } catch (const Infeasible& e) {
        fail(kInfeasible, "infeasible", e.what());
    }
    return kOk;
}

int run_verify(const std::string& manifest_path, const std::string& profile_name, unsigned jobs, std::uint64_t seed,
               const std::vector<std::string>& only, const std::string& format, const std::string& output,
               const std::string& freeze, const std::string& provenance) {
    VerifyOptions opts;
    opts.profile = read_profile(profile_name);
    opts.jobs = jobs;
    opts.seed = seed;
    for (const auto& s : only) opts.only.push_back(split_filter(s));
    const std::string path = manifest_path.empty() ? default_manifest_path() : manifest_path;
    auto manifest = read_manifest(path);
    std::vector<VerdictDiff> diffs;
    try {
        diffs = run_verification(manifest, opts);
    } catch (const std::exception& e) {
        fail(kInputError, "verification_error", e.what());
    }
    std::size_t mismatches = 0;
    for (const auto& d : diffs) mismatches += d.status == "mismatch";
    if (format == "table") {
        emit(output, summary_table(diffs));
    } else {
        std::string text;
        for (const auto& d : diffs) text += to_json(d).dump() + '\n';
        emit(output, text);
        std::size_t ok = 0, skipped = 0;
        for (const auto& d : diffs) {
            ok += d.status == "ok";
            skipped += d.status == "skipped";
        }
        std::cerr << "pairs " << diffs.size() << ", ok " << ok << ", mismatch " << mismatches << ", skipped "
                  << skipped << '\n';
    }
    if (!freeze.empty()) {
        if (mismatches) fail(kMismatch, "freeze_refused", "mismatches present; nothing frozen");
        std::ofstream f(freeze, std::ios::binary);
        if (!f) fail(kInputError, "output_unwritable", freeze);
        f << frozen_manifest(path, diffs, provenance.empty() ? "an untagged run" : provenance);
    }
    return mismatches ? kMismatch : kOk;
}

int run_catalog_list(const std::string& manifest_path, const std::string& format, const std::string& output) {
    auto manifest = read_manifest(manifest_path);
    if (format == "json") {
        json arr = json::array();
        for (const auto& e : manifest)
            arr.push_back({{"name", e.name},
                           {"spec", to_json(e.spec)},
                           {"order", e.expected_order.get_str()},
                           {"tier", e.tier},
                           {"checks", e.checks.size()}});
        emit(output, json{{"schema_version", 1}, {"instances", arr}}.dump(2) + '\n');
        return kOk;
    }
    std::size_t w = 4;
    for (const auto& e : manifest) w = std::max(w, e.name.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(w) + 2) << "name" << std::setw(12) << "order" << std::setw(9)
       << "tier" << "checks\n";
    for (const auto& e : manifest)
        os << std::left << std::setw(static_cast<int>(w) + 2) << e.name << std::setw(12) << e.expected_order.get_str()
           << std::setw(9) << e.tier << e.checks.size() << '\n';
    emit(output, os.str());
    return kOk;
}

int run_catalog_describe(const std::string& name, const std::string& manifest_path, const std::string& output) {
    auto manifest = read_manifest(manifest_path);
    const ManifestEntry* e = find_entry(manifest, name);
    if (!e) fail(kInputError, "unknown_instance", name);
    json checks = json::array();
    for (const auto& c : e->checks) {
        json j{{"r", c.r}, {"verdict", c.verdict}};
        if (c.overgroup_order) j["overgroup_order"] = c.overgroup_order->get_str();
        if (c.weakly_subnormal) j["weakly_subnormal"] = *c.weakly_subnormal;
        if (c.ngr0) j["ngr0"] = *c.ngr0;
        if (c.or_h_nontrivial) j["or_h_nontrivial"] = *c.or_h_nontrivial;
        checks.push_back(j);
    }
    json out{{"schema_version", 1},  {"name", e->name},          {"spec", to_json(e->spec)},
             {"decoration", e->decoration}, {"order", e->expected_order.get_str()}, {"tier", e->tier},
             {"checks", checks}};
    emit(output, out.dump(2) + '\n');
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Unique maximal overgroups of Sylow subgroups in almost simple groups"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    std::string output, format = "json", manifest, profile = "desk";
    auto common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--seed", seed, "Random seed")->capture_default_str();
        sub->add_option("-o,--output", output, "Output file (default stdout)");
        sub->add_option("--manifest", manifest, "Catalog manifest (default data/catalog.toml)");
        if (with_format)
            sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "Decide |M(R)| = 1 from the symbolic spec");
    std::string family, outer = "1", sporadic, instance;
    unsigned n = 0, f = 1;
    std::uint64_t p = 0, r = 0;
    classify_cmd->add_option("--family", family, "Alt, L, U, Sp, O, O+, O-, 2B2, 2G2, 2F4, 3D4, G2, F4, E6, 2E6, E7, E8, Sporadic");
    classify_cmd->add_option("--n", n, "Degree or dimension");
    classify_cmd->add_option("--p", p, "Characteristic");
    classify_cmd->add_option("--f", f, "Field exponent")->capture_default_str();
    classify_cmd->add_option("--outer", outer, "G/T decoration, e.g. 1, d, f2, d.f2, M10, 2_3, S")->capture_default_str();
    classify_cmd->add_option("--name", sporadic, "Sporadic group name");
    classify_cmd->add_option("--instance", instance, "Catalog instance name instead of flags");
    classify_cmd->add_option("--r", r, "Prime")->required();
    common(classify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate M(R) in a concrete catalog group");
    oracle_cmd->add_option("--instance", instance, "Catalog or small-group name")->required();
    oracle_cmd->add_option("--r", r, "Prime")->required();
    oracle_cmd->add_option("--profile", profile, "desk, stretch, or path.toml[:name]")->capture_default_str();
    common(oracle_cmd, false);

    auto* verify_cmd = app.add_subcommand("verify", "Cross-validate classifier against oracle over the manifest");
    unsigned jobs = 1;
    std::vector<std::string> only;
    std::string freeze, provenance;
    verify_cmd->add_option("--profile", profile, "desk, stretch, or path.toml[:name]")->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_option("--only", only, "Filter key=value on family, name or tier");
    verify_cmd->add_option("--freeze", freeze, "Write the manifest with oracle check values to this path");
    verify_cmd->add_option("--provenance", provenance, "Revision recorded in the frozen manifest header");
    common(verify_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "List or describe manifest instances");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "List instances");
    common(list_cmd);
    auto* describe_cmd = catalog_cmd->add_subcommand("describe", "Describe one instance");
    describe_cmd->add_option("name", instance, "Instance name")->required();
    common(describe_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*classify_cmd)
            return run_classify(family, n, p, f, outer, sporadic, instance, manifest, r, format, output);
        if (*oracle_cmd) return run_oracle(instance, manifest, r, profile, seed, output);
        if (*verify_cmd) return run_verify(manifest, profile, jobs, seed, only, format, output, freeze, provenance);
        if (*list_cmd) return run_catalog_list(manifest, format, output);
        if (*describe_cmd) return run_catalog_describe(instance, manifest, output);
    } catch (const Exit& e) {
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
