#include "unimax/groupspec.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace unimax {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
    static const std::vector<std::pair<Family, std::string>> names{
        {Family::Alt, "Alt"},    {Family::L, "L"},         {Family::U, "U"},       {Family::Sp, "Sp"},
        {Family::O_odd, "O"},    {Family::O_plus, "O+"},   {Family::O_minus, "O-"}, {Family::B2_2, "2B2"},
        {Family::G2_2, "2G2"},   {Family::F4_2, "2F4"},    {Family::D4_3, "3D4"},  {Family::G2, "G2"},
        {Family::F4, "F4"},      {Family::E6, "E6"},       {Family::E6_2, "2E6"},  {Family::E7, "E7"},
        {Family::E8, "E8"},      {Family::Sporadic, "Sporadic"}};
    return names;
}

BigInt qpow(const PrimePowerQ& q, unsigned e) { return pow(q.q, e); }

std::uint64_t gcd_big(std::uint64_t a, const BigInt& b) {
    BigInt g;
    mpz_gcd_ui(g.get_mpz_t(), b.get_mpz_t(), a);
    return to_u64(g);
}

std::uint64_t parse_uint(const std::string& s, const std::string& ctx) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw SpecError("decoration: expected a positive integer in '" + ctx + "'");
    return std::stoull(s);
}

}  // namespace

std::string to_string(Family f) {
    for (const auto& [k, v] : family_names())
        if (k == f) return v;
    return "?";
}

Family family_from_string(const std::string& s) {
    for (const auto& [k, v] : family_names())
        if (v == s) return k;
    static const std::map<std::string, Family> aliases{
        {"A", Family::Alt},     {"PSL", Family::L},      {"PSU", Family::U},       {"PSp", Family::Sp},
        {"Omega", Family::O_odd}, {"Sz", Family::B2_2},  {"Ree", Family::G2_2},    {"Spor", Family::Sporadic}};
    auto it = aliases.find(s);
    if (it != aliases.end()) return it->second;
    throw SpecError("family: unknown family '" + s + "'");
}

bool is_lie_type(Family f) { return f != Family::Alt && f != Family::Sporadic; }

bool is_classical(Family f) {
    switch (f) {
        case Family::L:
        case Family::U:
        case Family::Sp:
        case Family::O_odd:
        case Family::O_plus:
        case Family::O_minus:
            return true;
        default:
            return false;
    }
}

std::uint64_t OuterLabel::order() const {
    std::uint64_t g = graph == GraphPart::None ? 1 : 2;
    return (twisted ? field : diag * field) * g;
}

std::string OuterLabel::describe() const {
    if (is_trivial()) return "1";
    std::vector<std::string> parts;
    if (twisted) {
        parts.push_back("t" + std::to_string(field));
    } else {
        if (diag > 1) parts.push_back("d" + std::to_string(diag));
        if (field > 1) parts.push_back("f" + std::to_string(field));
    }
    if (graph == GraphPart::Graph) parts.push_back("g");
    if (graph == GraphPart::GraphField) parts.push_back("gf");
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : ".") + p;
    return s;
}

std::string GroupSpec::describe() const {
    std::ostringstream o;
    switch (family) {
        case Family::Alt:
            o << (outer.diag == 2 ? "S" : "A") << n;
            return o.str();
        case Family::Sporadic:
            o << sporadic;
            break;
        case Family::L:
        case Family::U:
        case Family::Sp:
        case Family::O_odd:
        case Family::O_plus:
        case Family::O_minus:
            o << to_string(family) << n << "(" << q.q.get_str() << ")";
            break;
        default:
            o << to_string(family) << "(" << q.q.get_str() << ")";
    }
    if (!outer.is_trivial()) o << "." << outer.describe();
    return o.str();
}

std::uint64_t full_diag(const GroupSpec& s) {
    switch (s.family) {
        case Family::L:
            return gcd_big(s.n, s.q.q - 1);
        case Family::U:
            return gcd_big(s.n, s.q.q + 1);
        case Family::Sp:
        case Family::O_odd:
        case Family::E7:
            return gcd_big(2, s.q.q - 1);
        case Family::O_plus:
            return gcd_big(4, pow(s.q.q, s.n / 2) - 1);
        case Family::O_minus:
            return gcd_big(4, pow(s.q.q, s.n / 2) + 1);
        case Family::E6:
            return gcd_big(3, s.q.q - 1);
        case Family::E6_2:
            return gcd_big(3, s.q.q + 1);
        default:
            return 1;
    }
}

const std::vector<SporadicInfo>& sporadic_groups() {
    static const std::vector<SporadicInfo> groups{
        {"M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
        {"M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
        {"J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
        {"M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
        {"J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
        {"M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
        {"J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
        {"M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
        {"McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
        {"He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
        {"Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
        {"Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
        {"Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
        {"Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
        {"HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
        {"Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
        {"Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
        {"Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
        {"Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
        {"J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
        {"Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
        {"B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}}},
        {"M",
         {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1},
          {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
    };
    return groups;
}

void validate(const GroupSpec& s) {
    const auto& o = s.outer;
    auto fail = [&](const std::string& why) { throw SpecError(s.describe() + ": " + why); };
    if (o.diag == 0 || o.field == 0) fail("outer orders must be positive");
    if (s.family == Family::Alt) {
        if (s.n < 5) fail("alternating degree must be at least 5");
        if (o.field != 1 || o.graph != GraphPart::None || o.twisted || (o.diag != 1 && o.diag != 2))
            fail("alternating groups admit only A_n or S_n (use L2(9) decorations for other A6 extensions)");
        return;
    }
    if (s.family == Family::Sporadic) {
        bool known = false;
        for (const auto& g : sporadic_groups()) known |= g.name == s.sporadic;
        if (!known) fail("unknown sporadic group '" + s.sporadic + "'");
        if (!o.is_trivial() && !(o.order() == 2 && o.graph == GraphPart::Graph))
            fail("sporadic outer part must be trivial or a single outer involution");
        return;
    }
    PrimePowerQ chk;
    if (!as_prime_power(s.q.q, chk) || chk.p != s.q.p || chk.f != s.q.f) fail("q must equal p^f with p prime");
    const std::uint64_t p = s.q.p;
    const unsigned f = s.q.f;
    const unsigned n = s.n;
    switch (s.family) {
        case Family::L:
            if (n < 2) fail("L_n needs n >= 2");
            if (n == 2 && s.q.q < 4) fail("L_2(q) needs q >= 4");
            if (n >= 3 && n == 3 && s.q.q == 1) fail("invalid q");
            break;
        case Family::U:
            if (n < 3) fail("U_n needs n >= 3");
            if (n == 3 && s.q.q == 2) fail("U_3(2) is soluble");
            break;
        case Family::Sp:
            if (n < 4 || n % 2) fail("PSp_n needs even n >= 4");
            break;
        case Family::O_odd:
            if (n < 7 || n % 2 == 0 || p == 2) fail("Omega_n needs odd n >= 7 and odd q");
            break;
        case Family::O_plus:
        case Family::O_minus:
            if (n < 8 || n % 2) fail("POmega^(+/-)_n needs even n >= 8");
            break;
        case Family::B2_2:
            if (p != 2 || f % 2 == 0 || f < 3) fail("2B2(q) needs q = 2^f with f odd >= 3");
            break;
        case Family::G2_2:
            if (p != 3 || f % 2 == 0) fail("2G2(q) needs q = 3^f with f odd");
            break;
        case Family::F4_2:
            if (p != 2 || f % 2 == 0) fail("2F4(q) needs q = 2^f with f odd");
            break;
        default:
            break;
    }
    if (o.diag != 1 && full_diag(s) % o.diag != 0) fail("diagonal order must divide |Outdiag(T)|");
    std::uint64_t field_max = f;
    if (s.family == Family::U || s.family == Family::E6_2) field_max = 2 * f;
    if (s.family == Family::D4_3) field_max = 3 * f;
    if (field_max % o.field != 0) fail("field order must divide the order of the field automorphism group");
    if (o.twisted) {
        if (!(s.family == Family::L && n == 2 && p != 2 && o.field % 2 == 0 && o.diag == 1))
            fail("twisted extensions exist only for L_2(q), q odd, with even field order");
    }
    if (o.graph != GraphPart::None) {
        bool ok = (s.family == Family::L && n >= 3) || (s.family == Family::Sp && n == 4 && p == 2) ||
                  s.family == Family::O_plus || (s.family == Family::G2 && p == 3) ||
                  (s.family == Family::F4 && p == 2) || s.family == Family::E6;
        if (!ok) fail("graph automorphisms do not exist for this family");
        if (o.graph == GraphPart::GraphField && f % 2 != 0 && s.family == Family::L)
            fail("graph-field involutions need even f");
    }
}

GroupSpec make_spec(Family family, unsigned n, std::uint64_t p, unsigned f, const std::string& decoration,
                    const std::string& sporadic) {
    GroupSpec s;
    s.family = family;
    s.n = n;
    if (p != 0) s.q = PrimePowerQ::make(p, f);
    s.sporadic = sporadic;
    s.outer = parse_decoration(s, decoration);
    validate(s);
    return s;
}

OuterLabel parse_decoration(const GroupSpec& socle, const std::string& deco) {
    OuterLabel o;
    std::string d = deco;
    const bool l2 = socle.family == Family::L && socle.n == 2;
    const bool l3_4 = socle.family == Family::L && socle.n == 3 && socle.q.q == 4;
    // Named labels.
    if (d.empty() || d == "1") return o;
    if (d == "S" && socle.family == Family::Alt) return OuterLabel{2, 1, GraphPart::None, false};
    if (d == "PGL") d = "d";
    if (d == "PSigmaL") d = "f" + std::to_string(socle.q.f);
    if (d == "PGammaL") d = "d.f" + std::to_string(socle.q.f);
    if (d == "M10" && l2 && socle.q.q == 9) d = "t";
    if (l2 && d == "2_1") d = "d";
    if (l2 && d == "2_2") d = "f2";
    if (l2 && d == "2_3") d = "t";
    if (l2 && d == "2^2") d = "d.f2";
    if (l3_4 && d == "2_1") d = "f2";
    if (l3_4 && d == "2_2") d = "gf";
    if (l3_4 && d == "2_3") d = "g";
    std::stringstream ss(d);
    std::string tok;
    while (std::getline(ss, tok, '.')) {
        if (tok == "d") {
            o.diag = full_diag(socle);
        } else if (tok == "g") {
            o.graph = GraphPart::Graph;
        } else if (tok == "gf") {
            o.graph = GraphPart::GraphField;
        } else if (tok == "t") {
            o.twisted = true;
            o.field = 2;
        } else if (tok[0] == 'd') {
            o.diag = parse_uint(tok.substr(1), deco);
        } else if (tok[0] == 'f') {
            o.field = tok.size() == 1 ? socle.q.f : parse_uint(tok.substr(1), deco);
        } else if (tok[0] == 't') {
            o.twisted = true;
            o.field = parse_uint(tok.substr(1), deco);
        } else {
            throw SpecError("decoration: unknown token '" + tok + "' in '" + deco + "'");
        }
    }
    return o;
}

BigInt socle_order(const GroupSpec& s) {
    const PrimePowerQ& q = s.q;
    const unsigned n = s.n;
    BigInt out = 1;
    auto prod = [&](unsigned from, unsigned to, auto term) {
        for (unsigned i = from; i <= to; ++i) out *= term(i);
    };
    switch (s.family) {
        case Family::Alt: {
            for (unsigned i = 3; i <= n; ++i) out *= i;
            return out;
        }
        case Family::Sporadic: {
            for (const auto& g : sporadic_groups())
                if (g.name == s.sporadic) {
                    for (auto [p, e] : g.factors) out *= pow(BigInt(static_cast<unsigned long>(p)), e);
                    return out;
                }
            throw SpecError("unknown sporadic group '" + s.sporadic + "'");
        }
        case Family::L:
            out = qpow(q, n * (n - 1) / 2);
            prod(2, n, [&](unsigned i) { return BigInt(qpow(q, i) - 1); });
            return out / static_cast<unsigned long>(full_diag(s));
        case Family::U:
            out = qpow(q, n * (n - 1) / 2);
            prod(2, n, [&](unsigned i) { return BigInt(qpow(q, i) - (i % 2 ? -1 : 1)); });
            return out / static_cast<unsigned long>(full_diag(s));
        case Family::Sp: {
            unsigned m = n / 2;
            out = qpow(q, m * m);
            prod(1, m, [&](unsigned i) { return BigInt(qpow(q, 2 * i) - 1); });
            if (n == 4 && q.q == 2) return out / 2;  // Sp4(2)'
            return out / static_cast<unsigned long>(full_diag(s));
        }
        case Family::O_odd: {
            unsigned m = (n - 1) / 2;
            out = qpow(q, m * m);
            prod(1, m, [&](unsigned i) { return BigInt(qpow(q, 2 * i) - 1); });
            return out / 2;
        }
        case Family::O_plus:
        case Family::O_minus: {
            unsigned m = n / 2;
            int eps = s.family == Family::O_plus ? 1 : -1;
            out = qpow(q, m * (m - 1)) * (qpow(q, m) - eps);
            prod(1, m - 1, [&](unsigned i) { return BigInt(qpow(q, 2 * i) - 1); });
            return out / static_cast<unsigned long>(full_diag(s));
        }
        case Family::B2_2:
            return qpow(q, 2) * (qpow(q, 2) + 1) * (q.q - 1);
        case Family::G2_2:
            out = qpow(q, 3) * (qpow(q, 3) + 1) * (q.q - 1);
            return q.f == 1 ? BigInt(out / 3) : out;
        case Family::F4_2:
            out = qpow(q, 12) * (qpow(q, 6) + 1) * (qpow(q, 4) - 1) * (qpow(q, 3) + 1) * (q.q - 1);
            return q.f == 1 ? BigInt(out / 2) : out;
        case Family::D4_3:
            return qpow(q, 12) * (qpow(q, 8) + qpow(q, 4) + 1) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
        case Family::G2:
            out = qpow(q, 6) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
            return q.q == 2 ? BigInt(out / 2) : out;
        case Family::F4:
            return qpow(q, 24) * (qpow(q, 12) - 1) * (qpow(q, 8) - 1) * (qpow(q, 6) - 1) * (qpow(q, 2) - 1);
        case Family::E6:
        case Family::E6_2: {
            int e = s.family == Family::E6 ? 1 : -1;
            out = qpow(q, 36) * (qpow(q, 12) - 1) * (qpow(q, 9) - e) * (qpow(q, 8) - 1) * (qpow(q, 6) - 1) *
                  (qpow(q, 5) - e) * (qpow(q, 2) - 1);
            return out / static_cast<unsigned long>(full_diag(s));
        }
        case Family::E7:
            out = qpow(q, 63);
            for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) out *= qpow(q, i) - 1;
            return out / static_cast<unsigned long>(full_diag(s));
        case Family::E8:
            out = qpow(q, 120);
            for (unsigned i : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) out *= qpow(q, i) - 1;
            return out;
    }
    return out;
}

BigInt group_order(const GroupSpec& s) { return socle_order(s) * static_cast<unsigned long>(s.outer.order()); }

std::vector<GroupSpec> isomorphic_views(const GroupSpec& s) {
    std::vector<GroupSpec> out{s};
    auto alt = [](unsigned n, std::uint64_t d) {
        GroupSpec g;
        g.family = Family::Alt;
        g.n = n;
        g.outer.diag = d;
        return g;
    };
    auto lin = [](unsigned n, std::uint64_t p, unsigned f, OuterLabel o) {
        GroupSpec g;
        g.family = Family::L;
        g.n = n;
        g.q = PrimePowerQ::make(p, f);
        g.outer = o;
        return g;
    };
    const auto& o = s.outer;
    const bool plain = !o.twisted && o.graph == GraphPart::None;
    if (s.family == Family::Alt && s.n == 5) {
        out.push_back(lin(2, 2, 2, OuterLabel{1, o.diag, GraphPart::None, false}));
        out.push_back(lin(2, 5, 1, OuterLabel{o.diag, 1, GraphPart::None, false}));
    } else if (s.family == Family::Alt && s.n == 6) {
        out.push_back(lin(2, 3, 2, OuterLabel{1, o.diag, GraphPart::None, false}));
    } else if (s.family == Family::L && s.n == 2 && s.q.q == 4 && plain) {
        out.push_back(alt(5, o.field));
        out.push_back(lin(2, 5, 1, OuterLabel{o.field, 1, GraphPart::None, false}));
    } else if (s.family == Family::L && s.n == 2 && s.q.q == 5 && plain) {
        out.push_back(alt(5, o.diag));
        out.push_back(lin(2, 2, 2, OuterLabel{1, o.diag, GraphPart::None, false}));
    } else if (s.family == Family::L && s.n == 2 && s.q.q == 9 && plain && o.diag == 1) {
        out.push_back(alt(6, o.field));
    } else if (s.family == Family::L && s.n == 3 && s.q.q == 2 && o.field == 1) {
        out.push_back(lin(2, 7, 1, OuterLabel{o.graph == GraphPart::None ? 1u : 2u, 1, GraphPart::None, false}));
    } else if (s.family == Family::L && s.n == 2 && s.q.q == 7 && plain) {
        out.push_back(lin(3, 2, 1, OuterLabel{1, 1, o.diag == 2 ? GraphPart::Graph : GraphPart::None, false}));
    } else if (s.family == Family::Sp && s.n == 4 && s.q.q == 2 && o.is_trivial()) {
        out.push_back(lin(2, 3, 2, OuterLabel{}));
        out.push_back(alt(6, 1));
    } else if (s.family == Family::G2 && s.q.q == 2 && o.is_trivial()) {
        GroupSpec u;
        u.family = Family::U;
        u.n = 3;
        u.q = PrimePowerQ::make(3, 1);
        out.push_back(u);
    } else if (s.family == Family::G2_2 && s.q.q == 3 && o.is_trivial()) {
        out.push_back(lin(2, 2, 3, OuterLabel{}));
    }
    return out;
}

}  // namespace unimax
