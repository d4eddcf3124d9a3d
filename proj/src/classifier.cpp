#include "unimax/classifier.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace unimax {

using nlohmann::json;

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Unique:
            return "unique";
        case Outcome::NotUnique:
            return "not_unique";
        case Outcome::OutOfScope:
            return "out_of_scope";
    }
    return "?";
}

std::string to_string(OrHKind k) {
    switch (k) {
        case OrHKind::No:
            return "no";
        case OrHKind::TableE:
            return "table_e";
        case OrHKind::TableF:
            return "table_f";
    }
    return "?";
}

namespace {

BigInt big(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
}

std::string graph_name(GraphPart g) {
    switch (g) {
        case GraphPart::None:
            return "none";
        case GraphPart::Graph:
            return "graph";
        case GraphPart::GraphField:
            return "graph-field";
    }
    return "?";
}

GraphPart graph_from_name(const std::string& s) {
    if (s == "graph") return GraphPart::Graph;
    if (s == "graph-field") return GraphPart::GraphField;
    return GraphPart::None;
}

GroupSpec spec_from_json(const json& j) {
    GroupSpec s;
    s.family = family_from_string(j.at("family").get<std::string>());
    s.n = j.value("n", 0u);
    if (j.contains("p")) s.q = PrimePowerQ::make(j.at("p").get<std::uint64_t>(), j.at("f").get<unsigned>());
    s.sporadic = j.value("name", std::string());
    const json& o = j.at("outer");
    s.outer.diag = o.at("diag").get<std::uint64_t>();
    s.outer.field = o.at("field").get<std::uint64_t>();
    s.outer.graph = graph_from_name(o.at("graph").get<std::string>());
    s.outer.twisted = o.at("twisted").get<bool>();
    return s;
}

/// Membership flags of G in the named overgroups of T inside Aut(T).
bool outer_flag(const std::string& flag, const GroupSpec& s) {
    const OuterLabel& o = s.outer;
    const bool plain = o.graph == GraphPart::None && !o.twisted;
    if (flag == "G=T") return o.is_trivial();
    if (flag == "G<=PSigmaL") return o.diag == 1 && !o.twisted && o.graph == GraphPart::None;
    if (flag == "G<=PGammaL" || flag == "G<=PGammaSp") return o.graph == GraphPart::None;
    // For orthogonal socles a diagonal part records a similarity outside PO (resp. outside T.<phi>).
    if (flag == "G<=PO" || flag == "G<=T.<phi>") return o.diag == 1;
    if (flag == "G=PGL") return plain && o.field == 1 && o.diag > 1 && o.diag == full_diag(s);
    if (flag == "G=PGL.<phi>") return plain && o.diag == 2 && o.diag == full_diag(s) && o.field == 2;
    if (flag == "G=L2(q).2_3") return o.twisted && o.field == 2 && o.graph == GraphPart::None;
    if (flag == "G=PSigmaL") return plain && o.diag == 1 && o.field > 1;
    if (flag == "G=T.graph") return o.graph == GraphPart::Graph && o.diag == 1 && o.field == 1;
    throw ClassifierError("unknown outer flag '" + flag + "'");
}

PrimeShape shape_from_name(const std::string& s) {
    if (s == "Mersenne") return PrimeShape::Mersenne;
    if (s == "Fermat") return PrimeShape::Fermat;
    if (s == "Neither") return PrimeShape::Neither;
    return PrimeShape::NotPrime;
}

bool is_power_of(BigInt n, const BigInt& base, unsigned min_exp) {
    if (n < 1) return false;
    unsigned e = 0;
    while (n % base == 0) {
        n /= base;
        ++e;
    }
    return n == 1 && e >= min_exp;
}

BigInt mod_nonneg(const BigInt& x, const BigInt& m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r;
}

std::vector<std::uint64_t> u64_list(const json& j) {
    std::vector<std::uint64_t> v;
    for (const auto& x : j) v.push_back(x.get<std::uint64_t>());
    return v;
}

bool evaluate(const std::string& op, const json& o) {
    if (op == "eq") return big(o.at("a")) == big(o.at("b"));
    if (op == "ne") return big(o.at("a")) != big(o.at("b"));
    if (op == "ge") return big(o.at("a")) >= big(o.at("b"));
    if (op == "gt") return big(o.at("a")) > big(o.at("b"));
    if (op == "le") return big(o.at("a")) <= big(o.at("b"));
    if (op == "mod") {
        const BigInt m = big(o.at("m"));
        return mod_nonneg(big(o.at("x")), m) == mod_nonneg(big(o.at("residue")), m);
    }
    if (op == "mod_in") {
        const BigInt m = big(o.at("m")), x = mod_nonneg(big(o.at("x")), m);
        for (const auto& res : o.at("residues"))
            if (x == mod_nonneg(big(res), m)) return true;
        return false;
    }
    if (op == "pow_of") return is_power_of(big(o.at("n")), big(o.at("base")), o.at("min_exp").get<unsigned>());
    if (op == "ppd")
        return is_ppd(PrimePowerQ::make(o.at("p").get<std::uint64_t>(), o.at("f").get<unsigned>()),
                      o.at("d").get<unsigned>(), o.at("r").get<std::uint64_t>());
    if (op == "alpha" || op == "beta" || op == "subfield") {
        const PrimePowerQ q = PrimePowerQ::make(o.at("p").get<std::uint64_t>(), o.at("f").get<unsigned>());
        const unsigned m = o.at("m").get<unsigned>();
        const Sign eps = o.at("eps").get<int>() > 0 ? Sign::Plus : Sign::Minus;
        const std::uint64_t r = o.at("r").get<std::uint64_t>();
        if (op == "alpha") return alpha_cond(m, eps, q, r);
        if (op == "beta") return beta_cond(m, eps, q, r);
        return subfield_residue_cond(m, eps, q, r, u64_list(o.at("excluded")), o.at("odd_only").get<bool>());
    }
    if (op == "shape") return prime_shape(big(o.at("n"))) == shape_from_name(o.at("shape").get<std::string>());
    if (op == "scriptP") return in_scriptP(o.at("r").get<std::uint64_t>());
    if (op == "square") {
        const std::uint64_t p = o.at("p").get<std::uint64_t>();
        const std::int64_t a = o.at("a").get<std::int64_t>();
        // At p = 2 the residue test means that 2 splits in Q(sqrt(a)).
        if (p == 2) return ((a % 8) + 8) % 8 == 1;
        // 0 = 0^2 counts as a square.
        if (a % static_cast<std::int64_t>(p) == 0) return true;
        return is_square_mod(a, p);
    }
    if (op == "order_in") {
        const auto set = u64_list(o.at("set"));
        const unsigned d = mult_order(big(o.at("q")), o.at("r").get<std::uint64_t>());
        return std::find(set.begin(), set.end(), d) != set.end();
    }
    if (op == "outer") return outer_flag(o.at("flag").get<std::string>(), spec_from_json(o.at("spec")));
    throw ClassifierError("unknown trace op '" + op + "'");
}

BigInt bpow(const BigInt& b, unsigned e) { return pow(b, e); }

BigInt order_gl(unsigned n, const BigInt& q) {
    BigInt out = bpow(q, n * (n - 1) / 2);
    for (unsigned i = 1; i <= n; ++i) out *= bpow(q, i) - 1;
    return out;
}

BigInt order_gu(unsigned n, const BigInt& q) {
    BigInt out = bpow(q, n * (n - 1) / 2);
    for (unsigned i = 1; i <= n; ++i) out *= i % 2 ? BigInt(bpow(q, i) + 1) : BigInt(bpow(q, i) - 1);
    return out;
}

BigInt order_sp(unsigned n, const BigInt& q) {
    const unsigned m = n / 2;
    BigInt out = bpow(q, m * m);
    for (unsigned i = 1; i <= m; ++i) out *= bpow(q, 2 * i) - 1;
    return out;
}

BigInt factorial(unsigned n) {
    BigInt out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt bgcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

struct RowHit {
    std::string row;
    std::string type;
    std::optional<BigInt> order;
    std::vector<std::string> caveats;
};

/// Evaluation context for one isomorphic view.
class Ctx {
public:
    Ctx(const GroupSpec& s, std::uint64_t r, std::vector<TraceEntry>* trace)
        : s(s), r(r), trace_(trace), view_(s.describe()) {
        G = group_order(s);
        T = socle_order(s);
        R = r_valuation(G, r).value;
        R0 = r_valuation(T, r).value;
        if (s.family != Family::Alt && s.family != Family::Sporadic) {
            p = s.q.p;
            f = s.q.f;
            q = s.q.q;
        }
        n = s.n;
        outer = G / T;
    }

    const GroupSpec& s;
    std::uint64_t r;
    BigInt G, T, R, R0, q = 0, outer;
    std::uint64_t p = 0;
    unsigned f = 0, n = 0;

    bool test(const std::string& id, const std::string& op, json operands) {
        const bool v = evaluate(op, operands);
        if (trace_) trace_->push_back({view_ + ": " + id, op, v, std::move(operands)});
        return v;
    }
    static std::string str(const BigInt& x) { return x.get_str(); }

    bool eq(const std::string& id, const BigInt& a, const BigInt& b) {
        return test(id, "eq", {{"a", str(a)}, {"b", str(b)}});
    }
    bool ne(const std::string& id, const BigInt& a, const BigInt& b) {
        return test(id, "ne", {{"a", str(a)}, {"b", str(b)}});
    }
    bool ge(const std::string& id, const BigInt& a, const BigInt& b) {
        return test(id, "ge", {{"a", str(a)}, {"b", str(b)}});
    }
    bool gt(const std::string& id, const BigInt& a, const BigInt& b) {
        return test(id, "gt", {{"a", str(a)}, {"b", str(b)}});
    }
    bool le(const std::string& id, const BigInt& a, const BigInt& b) {
        return test(id, "le", {{"a", str(a)}, {"b", str(b)}});
    }
    bool mod(const std::string& id, const BigInt& x, std::int64_t m, std::int64_t res) {
        return test(id, "mod", {{"x", str(x)}, {"m", m}, {"residue", res}});
    }
    bool mod_in(const std::string& id, const BigInt& x, std::int64_t m, std::vector<std::int64_t> res) {
        return test(id, "mod_in", {{"x", str(x)}, {"m", m}, {"residues", res}});
    }
    bool pow_of(const std::string& id, const BigInt& x, std::uint64_t base, unsigned min_exp) {
        return test(id, "pow_of", {{"n", str(x)}, {"base", base}, {"min_exp", min_exp}});
    }
    /// r is a primitive prime divisor of q^d - 1.
    bool rr(unsigned d) { return test("r = r_" + std::to_string(d), "ppd", {{"p", p}, {"f", f}, {"d", d}, {"r", r}}); }
    bool alpha(unsigned m, int eps) {
        return test("alpha(" + std::to_string(m) + "," + (eps > 0 ? "+" : "-") + ")", "alpha",
                    {{"m", m}, {"eps", eps}, {"p", p}, {"f", f}, {"r", r}});
    }
    bool beta(unsigned m, int eps) {
        return test("beta(" + std::to_string(m) + "," + (eps > 0 ? "+" : "-") + ")", "beta",
                    {{"m", m}, {"eps", eps}, {"p", p}, {"f", f}, {"r", r}});
    }
    bool subfield(const std::string& id, unsigned m, int eps, std::vector<std::uint64_t> excluded) {
        return test(id, "subfield",
                    {{"m", m}, {"eps", eps}, {"p", p}, {"f", f}, {"r", r}, {"excluded", excluded}, {"odd_only", false}});
    }
    bool square(const std::string& id, std::int64_t a, std::uint64_t mod_p) {
        return test(id, "square", {{"a", a}, {"p", mod_p}});
    }
    bool nonsquare(const std::string& id, std::int64_t a, std::uint64_t mod_p) {
        return !square(id, a, mod_p);
    }
    bool shape(const std::string& id, const BigInt& x, const std::string& sh) {
        return test(id, "shape", {{"n", str(x)}, {"shape", sh}});
    }
    bool flag(const std::string& name) { return test(name, "outer", {{"flag", name}, {"spec", to_json(s)}}); }
    bool r_is(std::uint64_t v) { return eq("r = " + std::to_string(v), r, v); }
    bool q_is(std::uint64_t v) { return eq("q = " + std::to_string(v), q, v); }
    bool f_is(unsigned v) { return eq("f = " + std::to_string(v), f, v); }
    bool q_prime() { return eq("q = p", q, p); }
    bool R_gt_r() { return gt("|R| > r", R, r); }
    std::int64_t ip() const { return static_cast<std::int64_t>(p); }
    std::int64_t ir() const { return static_cast<std::int64_t>(r); }

    /// |G| / index, i.e. the order of an overgroup of the given index.
    BigInt by_index(const BigInt& index) const { return G / index; }
    /// |G:T| * |H cap T|.
    BigInt by_socle_part(const BigInt& h0) const { return outer * h0; }

private:
    std::vector<TraceEntry>* trace_;
    std::string view_;
};

using Rows = std::vector<RowHit>;

// ---------------------------------------------------------------- alternating

void rows_alt(Ctx& c, Rows& out) {
    const unsigned n = c.n;
    const std::uint64_t r = c.r;
    if (r == 2) {
        if (c.pow_of("n - 1 = 2^k, k >= 2", n - 1, 2, 2))
            out.push_back({"Alt:r=2:Sn-1", "S_{n-1} cap G", c.by_index(n), {}});
        return;
    }
    if (c.pow_of("n - 1 = r^k, k >= 2", n - 1, r, 2))
        out.push_back({"Alt:r-odd:a", "A_{n-1}", c.by_index(n), {}});
    if (c.eq("n = 2r", n, 2 * r)) {
        BigInt fr = factorial(static_cast<unsigned>(r));
        out.push_back({"Alt:r-odd:b", "(S_r wr S_2) cap G", fr * fr, {}});
    }
    if (c.eq("n = r^2", n, r * r)) {
        BigInt fr = factorial(static_cast<unsigned>(r));
        out.push_back({"Alt:r-odd:c", "(S_r wr S_r) cap G", bpow(fr, static_cast<unsigned>(r)) * fr / 2, {}});
    }
    if (c.eq("n = r", n, r) && c.ne("r != 11", r, 11) && c.ne("r != 23", r, 23) &&
        (c.r_is(5) || !c.test("r in P", "scriptP", {{"r", r}})))
        out.push_back({"Alt:r-odd:d", "AGL_1(r) cap G", BigInt(std::to_string(r * (r - 1) / 2)), {}});
}

// ---------------------------------------------------------------- L2(q)

/// Condition shared by the GL_1(q^2) rows for r = r_2 with r odd.
bool l2_r2_condition(Ctx& c) {
    if (!c.rr(2)) return false;
    if (c.le("f <= 2", c.f, 2)) return c.gt("r > 5", c.r, 5) || c.R_gt_r();
    if (c.alpha(1, -1)) return true;
    return c.r_is(3) && c.eq("p = 2", c.p, 2) &&
           c.subfield("q^(1/k) != -1 mod 3 for k in pi(f) minus {3,f}", 1, -1, {3, c.f});
}

BigInt l2_index_q_minus_1(const Ctx& c) { return c.q * (c.q - 1) / 2; }
BigInt l2_index_q_plus_1(const Ctx& c) { return c.q * (c.q + 1) / 2; }

void rows_l2(Ctx& c, Rows& out) {
    if (c.r == 2) {
        if (c.eq("p = 2", c.p, 2)) out.push_back({"TableA:L2:P1", "P_1", c.by_index(c.q + 1), {}});
        if (c.q_is(5)) out.push_back({"TableA:L2:2^(1+2).O2-(2)", "2^{1+2}_-.O_2^-(2)", c.by_index(5), {}});
        auto r0_clause = [&] {
            return c.ge("|R_0| >= 2^4", c.R0, 16) || (c.eq("|R_0| = 2^3", c.R0, 8) && c.flag("G=PGL"));
        };
        if (c.mod("q = 1 mod 4", c.q, 4, 1) && c.ge("q >= 9", c.q, 9)) {
            bool fire = (c.pow_of("f = 2^a > 1", c.f, 2, 1) && !c.flag("G<=PSigmaL")) || (c.f_is(1) && r0_clause());
            if (fire) out.push_back({"TableA:L2:GL1wrS2", "GL_1(q) wr S_2", c.by_index(l2_index_q_plus_1(c)), {}});
        }
        if (c.q_prime() && c.mod("q = 3 mod 4", c.q, 4, 3) && r0_clause())
            out.push_back({"TableA:L2:GL1(q^2)", "GL_1(q^2)", c.by_index(l2_index_q_minus_1(c)), {}});
        return;
    }
    if (c.eq("r = p", c.r, c.p)) out.push_back({"TableB:L2:p:P1", "P_1", c.by_index(c.q + 1), {}});
    if (l2_r2_condition(c))
        out.push_back({"TableB:L2:r2:GL1(q^2)", "GL_1(q^2)", c.by_index(l2_index_q_minus_1(c)), {}});
}

// ---------------------------------------------------------------- L_n(q), n >= 3

BigInt ln_point_hyperplane_pairs(const Ctx& c) {
    const BigInt N = (bpow(c.q, c.n) - 1) / (c.q - 1);
    return N * bpow(c.q, c.n - 1);
}

/// Conditions of the GL_1(q) wr S_n row for r = r_1.
bool ln_r1_wreath(Ctx& c) {
    if (!c.rr(1)) return false;
    if (c.eq("n = 3", c.n, 3) && c.r_is(3))
        return (c.f_is(1) && c.mod("q = 1 mod 9", c.q, 9, 1)) || c.pow_of("f = 3^a > 1", c.f, 3, 1);
    return c.eq("n = r", c.n, c.r) && c.ge("r >= 5", c.r, 5) && c.mod("f odd", c.f, 2, 1) && c.alpha(1, 1);
}

void rows_ln(Ctx& c, Rows& out) {
    const unsigned n = c.n;
    if (c.r == 2) {
        if (n == 3 && c.eq("p = 2", c.p, 2) && !c.flag("G<=PGammaL")) {
            BigInt index = (c.q * c.q + c.q + 1) * (c.q + 1);
            out.push_back({"TableA:L3:P12", "P_{1,2}", c.by_index(index), {}});
        }
        if (c.pow_of("n - 1 = 2^k", n - 1, 2, 1) && c.q_prime() && c.mod("q = 3 mod 4", c.q, 4, 3) &&
            !c.flag("G<=PGammaL"))
            out.push_back({"TableA:Ln:GLn-1xGL1", "GL_{n-1}(q) x GL_1(q)", c.by_index(ln_point_hyperplane_pairs(c)), {}});
        return;
    }
    if (ln_r1_wreath(c)) {
        BigInt h0 = bpow(c.q - 1, n - 1) * factorial(n) / bgcd(BigInt(n), c.q - 1);
        out.push_back({"TableB:Ln:r1:GL1wrSn", "GL_1(q) wr S_n", c.by_socle_part(h0), {}});
    }
    if (n == 3 && c.q_is(4) && c.r_is(3) && c.flag("G=PGL")) {
        // |PGL_3(4) : PGU_3(2)| = 60480 / 216.
        out.push_back({"TableB:L3:r1:GU3(q^1/2)", "GU_n(q^{1/2})", c.by_index(280), {}});
    }
    // r = r_n with n = t^a, t >= 3 prime.
    std::uint64_t t = 0;
    for (auto d : prime_divisors(static_cast<std::uint64_t>(n)))
        if (t == 0) t = d;
    if (t >= 3 && c.pow_of("n = t^a, t >= 3 prime", n, t, 1) && c.rr(n) && c.alpha(n, 1)) {
        bool fire = (c.gt("f > 1", c.f, 1) && c.mod("f odd", c.f, 2, 1)) ||
                    (c.f_is(1) && (c.R_gt_r() || c.ne("r != 2n+1", c.r, 2 * n + 1) ||
                                   c.nonsquare("-r is a square mod p", -c.ir(), c.p)));
        if (fire) {
            const unsigned m = n / static_cast<unsigned>(t);
            BigInt h0 = order_gl(m, bpow(c.q, static_cast<unsigned>(t))) * t / ((c.q - 1) * bgcd(BigInt(n), c.q - 1));
            out.push_back({"TableB:Ln:rn:GLn/t(q^t)", "GL_{n/t}(q^t)", c.by_socle_part(h0), {}});
        }
    }
}

// ---------------------------------------------------------------- U_n(q)

BigInt un_nonisotropic_points(const Ctx& c) {
    const BigInt sgn = c.n % 2 ? BigInt(1) : BigInt(-1);
    return bpow(c.q, c.n - 1) * (bpow(c.q, c.n) + sgn) / (c.q + 1);
}

void rows_un(Ctx& c, Rows& out) {
    const unsigned n = c.n;
    if (c.r == 2) {
        if (n == 3 && c.eq("p = 2", c.p, 2))
            out.push_back({"TableA:U3:P1", "P_1", c.by_index(bpow(c.q, 3) + 1), {}});
        if (c.pow_of("n - 1 = 2^k", n - 1, 2, 1) && c.mod("q = 1 mod 4", c.q, 4, 1) &&
            c.pow_of("f = 2^a", c.f, 2, 0) && (n != 3 || c.ge("q >= 9", c.q, 9)))
            out.push_back(
                {"TableA:Un:GUn-1xGU1", "GU_{n-1}(q) x GU_1(q)", c.by_index(un_nonisotropic_points(c)), {}});
        return;
    }
    if (n == 3) {
        if (c.eq("r = p", c.r, c.p)) out.push_back({"TableB:U3:p:P1", "P_1", c.by_index(bpow(c.q, 3) + 1), {}});
        if (c.rr(2) && c.r_is(3) &&
            ((c.f_is(1) && c.mod("q = -1 mod 9", c.q, 9, -1)) || c.pow_of("f = 3^a > 1", c.f, 3, 1))) {
            BigInt h0 = (c.q + 1) * (c.q + 1) * 6 / bgcd(BigInt(3), c.q + 1);
            out.push_back({"TableB:U3:r2:GU1wrS3", "GU_1(q) wr S_3", c.by_socle_part(h0), {}});
        }
        if (c.q_is(3) && c.r_is(7)) out.push_back({"TableB:U3:r6:L2(7)", "L_2(7)", c.by_socle_part(168), {}});
        if (c.rr(6) && c.beta(3, -1) &&
            (c.gt("f > 1", c.f, 1) || (c.f_is(1) && (c.R_gt_r() || c.gt("r > 7", c.r, 7))))) {
            BigInt h0 = 3 * (c.q * c.q - c.q + 1) / bgcd(BigInt(3), c.q + 1);
            out.push_back({"TableB:U3:r6:GU1(q^3)", "GU_1(q^3)", c.by_socle_part(h0), {}});
        }
        return;
    }
    if (c.eq("n = r", n, c.r) && c.ge("r >= 5", c.r, 5) && c.rr(2) && c.beta(1, -1)) {
        BigInt h0 = bpow(c.q + 1, n - 1) * factorial(n) / bgcd(BigInt(n), c.q + 1);
        out.push_back({"TableB:Un:r2:GU1wrSn", "GU_1(q) wr S_n", c.by_socle_part(h0), {}});
    }
    if (n % 2 == 0 && c.rr(2 * n - 2) && c.beta(n - 1, -1) &&
        (c.gt("f > 1", c.f, 1) ||
         (c.f_is(1) && (c.R_gt_r() || c.ne("r != 2n-1", c.r, 2 * n - 1) || c.square("-r is a square mod p", -c.ir(), c.p)))))
        out.push_back(
            {"TableB:Un:r2n-2:GUn-1xGU1", "GU_{n-1}(q) x GU_1(q)", c.by_index(un_nonisotropic_points(c)), {}});
    if (n == 5 && c.q_is(2) && c.r_is(11)) out.push_back({"TableB:U5:r10:L2(11)", "L_2(11)", c.by_socle_part(660), {}});
    std::uint64_t t = prime_divisors(static_cast<std::uint64_t>(n)).front();
    if (t >= 3 && c.pow_of("n = t^a, t >= 3 prime", n, t, 1) && c.rr(2 * n) && c.beta(n, -1) &&
        (c.gt("f > 1", c.f, 1) ||
         (c.f_is(1) && (c.R_gt_r() || c.ne("r != 2n+1", c.r, 2 * n + 1) || c.square("-r is a square mod p", -c.ir(), c.p))))) {
        const unsigned m = n / static_cast<unsigned>(t);
        BigInt h0 = order_gu(m, bpow(c.q, static_cast<unsigned>(t))) * t / ((c.q + 1) * bgcd(BigInt(n), c.q + 1));
        out.push_back({"TableB:Un:r2n:GUn/t(q^t)", "GU_{n/t}(q^t)", c.by_socle_part(h0), {}});
    }
}

// ---------------------------------------------------------------- PSp_n(q)

void rows_sp(Ctx& c, Rows& out) {
    const unsigned n = c.n;
    if (c.r == 2) {
        if (n == 4 && c.eq("p = 2", c.p, 2) && c.ge("q >= 4", c.q, 4) && !c.flag("G<=PGammaSp")) {
            BigInt index = (c.q + 1) * (c.q + 1) * (c.q * c.q + 1);
            out.push_back({"TableA:PSp4:P12", "P_{1,2}", c.by_index(index), {}});
        }
        return;
    }
    if (n == 6 && c.q_is(2) && c.r_is(3)) out.push_back({"TableB:PSp:r2:O-", "O_n^-(q)", c.by_index(28), {}});
    if (c.pow_of("n = 2^a >= 4", n, 2, 2) && c.mod("q odd", c.q, 2, 1) && c.rr(n) && c.alpha(n, 1)) {
        const std::int64_t r = c.ir();
        bool fire = c.gt("f > 2", c.f, 2) ||
                    (c.f_is(2) && (c.R_gt_r() || c.ne("r != 2n+1", r, 2 * n + 1) || c.square("r is a square mod p", r, c.p))) ||
                    (c.f_is(1) && (c.R_gt_r() || c.gt("r > 2n+1", r, 2 * n + 1) ||
                                   (c.eq("r = 2n+1", r, 2 * n + 1) && c.nonsquare("r is a square mod p", r, c.p))));
        if (fire) {
            BigInt h0 = order_sp(n / 2, c.q * c.q) * 2 / bgcd(BigInt(2), c.q - 1);
            out.push_back({"TableB:PSp:rn:Sp(n/2)(q^2)", "Sp_{n/2}(q^2)", c.by_socle_part(h0), {}});
        }
    }
}

// ---------------------------------------------------------------- orthogonal

void rows_o_odd(Ctx& c, Rows& out) {
    const unsigned n = c.n, m = (n - 1) / 2;
    const BigInt qm = bpow(c.q, m);
    const BigInt minus_index = qm * (qm - 1) / 2, plus_index = qm * (qm + 1) / 2;
    if (c.r == 2) {
        if (c.pow_of("n - 1 = 2^k", n - 1, 2, 1) && c.ge("n >= 9", n, 9) && c.pow_of("f = 2^a", c.f, 2, 0) &&
            (c.f != 1 || c.mod_in("q = +-1 mod 8", c.q, 8, {1, -1})))
            out.push_back({"TableA:O:O+n-1xO1", "O_{n-1}^+(q) x O_1(q)", c.by_index(plus_index), {}});
        return;
    }
    const std::string type = "O_{n-1}^-(q) x O_1(q)";
    if (c.eq("n = 2r+1", n, 2 * c.r + 1) && c.rr(2) && c.alpha(1, -1) &&
        (c.gt("r > 3", c.r, 3) || c.gt("f > 1", c.f, 1) || c.mod("q = -1 mod 9", c.q, 9, -1)))
        out.push_back({"TableB:O:r2:O-n-1xO1", type, c.by_index(minus_index), {}});
    if (c.r % c.p != 0) {
        const unsigned i = mult_order(c.q, c.r);
        if (i % 2 == 0 && i >= 4 && i <= n - 3 && c.rr(i) && c.alpha(i, 1) &&
            c.eq("(n-1)/i is a positive power of r", is_power_of((n - 1) / i, c.r, 1) && (n - 1) % i == 0, 1))
            out.push_back({"TableB:O:ri:O-n-1xO1", type, c.by_index(minus_index), {}});
    }
    if (c.ge("n >= 9", n, 9) && c.rr(n - 1) && c.alpha(n - 1, 1)) {
        const std::int64_t r = c.ir();
        bool fire = c.gt("r > 2n-1", r, 2 * n - 1) || c.R_gt_r() ||
                    (c.eq("r = 2n-1", r, 2 * n - 1) &&
                     ((c.f_is(2) && c.square("r is a square mod p", r, c.p)) ||
                      (c.f_is(1) && c.nonsquare("r is a square mod p", r, c.p))));
        if (fire) out.push_back({"TableB:O:rn-1:O-n-1xO1", type, c.by_index(minus_index), {}});
    }
}

void rows_o_plus(Ctx& c, Rows& out) {
    if (c.r != 2) return;
    if (c.pow_of("n - 2 = 2^k", c.n - 2, 2, 1) && c.ge("n >= 10", c.n, 10) && c.q_prime() &&
        c.mod("q = 3 mod 4", c.q, 4, 3) && !c.flag("G<=PO"))
        out.push_back({"TableA:O+:O+n-2xO+2", "O_{n-2}^+(q) x O_2^+(q)", std::nullopt, {}});
}

void rows_o_minus(Ctx& c, Rows& out) {
    const unsigned n = c.n;
    if (c.r == 2) {
        if (c.pow_of("n - 2 = 2^k", n - 2, 2, 1) && c.ge("n >= 10", n, 10) && c.mod("q = 1 mod 4", c.q, 4, 1) &&
            c.pow_of("f = 2^a", c.f, 2, 0) && !c.flag("G<=T.<phi>"))
            out.push_back({"TableA:O-:O+n-2xO-2", "O_{n-2}^+(q) x O_2^-(q)", std::nullopt, {}});
        return;
    }
    const unsigned a = n / 2;
    auto tail = [&] { return c.R_gt_r() || c.gt("r > n+1", c.r, n + 1); };
    if (a >= 5 && is_prime(std::uint64_t(a)) && c.rr(n) && c.beta(a, -1) && tail())
        out.push_back({"TableB:O-:rn:GUn/2", "GU_{n/2}(q)", std::nullopt, {}});
    if (c.pow_of("n = 2^a >= 8", n, 2, 3) && c.rr(n) && c.beta(a, -1) && tail())
        out.push_back({"TableB:O-:rn:O-n/2(q^2)", "O_{n/2}^-(q^2)", std::nullopt, {}});
}

// ---------------------------------------------------------------- exceptional

/// The factor q + e sqrt(c q) + 1 (e = +-1) divisible by r, for the Suzuki and Ree tori.
BigInt torus_factor(const Ctx& c, unsigned base) {
    BigInt s = 1;
    for (unsigned i = 0; i < (c.f + 1) / 2; ++i) s *= base;  // sqrt(base * q)
    BigInt plus = c.q + s + 1, minus = c.q - s + 1;
    return plus % c.r == 0 ? plus : minus;
}

void rows_2b2(Ctx& c, Rows& out) {
    if (c.r == 2) {
        out.push_back({"Thm1.1:2B2:Borel", "q^{1+1}:(q-1)", c.by_socle_part(c.q * c.q * (c.q - 1)), {}});
        return;
    }
    if (c.rr(4) && c.subfield("(q^(1/k))^2 != -1 mod r for k in pi(f) minus {r,f}", 2, -1, {c.r, c.f})) {
        BigInt factor = torus_factor(c, 2);
        out.push_back({"TableC:2B2:r4", "q +- sqrt(2q) + 1 : 4", c.by_socle_part(4 * factor), {}});
    }
}

void rows_2g2(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (c.r_is(3)) out.push_back({"TableC:2G2:3", "[q^3]:(q-1)", c.by_socle_part(bpow(c.q, 3) * (c.q - 1)), {}});
    if (c.rr(6) && c.alpha(3, -1)) {
        BigInt factor = torus_factor(c, 3);
        out.push_back({"TableC:2G2:r6", "q +- sqrt(3q) + 1 : 6", c.by_socle_part(6 * factor), {}});
    }
}

/// epsilon for which r | q - epsilon (r odd, r not dividing q).
int epsilon_of(const Ctx& c, unsigned d_plus, unsigned d_minus) {
    if (c.r % c.p == 0) return 0;
    const unsigned d = mult_order(c.q, c.r);
    if (d == d_plus) return 1;
    if (d == d_minus) return -1;
    return 0;
}

BigInt order_sl3_eps(const BigInt& q, int eps) {
    if (eps > 0) return order_gl(3, q) / (q - 1);
    return order_gu(3, q) / (q + 1);
}

void rows_g2(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (int eps = epsilon_of(c, 1, 2); eps != 0 && c.rr(eps > 0 ? 1 : 2) && c.r_is(3) &&
                                       c.pow_of("f = 3^a", c.f, 3, 0) &&
                                       (!(c.p >= 5 && c.f == 1) || c.mod("q = eps mod 9", c.q, 9, eps))) {
        out.push_back({"TableC:G2:r(3-e)/2:A2e", eps > 0 ? "SL_3(q).2" : "SU_3(q).2",
                       c.by_socle_part(2 * order_sl3_eps(c.q, eps)), {}});
    }
    if (int eps = epsilon_of(c, 3, 6); eps != 0 && c.rr(eps > 0 ? 3 : 6) && c.alpha(3, eps)) {
        bool fire = false;
        if (c.p == 2) {
            fire = !(eps < 0 && c.q == 4);
            c.eq("(eps,q) != (-1,4)", fire ? 1 : 0, 1);
        } else if (c.p >= 5) {
            fire = c.gt("f > 3", c.f, 3) || c.R_gt_r() || c.gt("r > 13", c.r, 13) ||
                   (c.f_is(3) && (c.r_is(13) || c.mod_in("p = +-1, +-3 mod 9", c.p, 9, {1, -1, 3, -3}))) ||
                   (c.f_is(2) && c.square("p is a square mod 13", c.ip(), 13)) ||
                   (c.f_is(1) && c.r_is(13) && c.nonsquare("p is a square mod 13", c.ip(), 13));
        }
        if (fire)
            out.push_back({"TableC:G2:r3(3-e)/2:A2e", eps > 0 ? "SL_3(q).2" : "SU_3(q).2",
                           c.by_socle_part(2 * order_sl3_eps(c.q, eps)), {}});
    }
}

void rows_3d4(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (int eps = epsilon_of(c, 1, 2); eps != 0 && c.rr(eps > 0 ? 1 : 2) && c.r_is(3) && c.pow_of("f = 3^a", c.f, 3, 0))
        out.push_back({"TableC:3D4:r(3-e)/2", "A_2^e(q) x (q^2 + e q + 1)", std::nullopt, {}});
    if (c.rr(12) && c.subfield("(q^(1/k))^6 != -1 mod r for k in pi(f) minus {3,r}", 6, -1, {3, c.r}))
        out.push_back({"TableC:3D4:r12", "q^4 - q^2 + 1", c.by_socle_part(4 * (bpow(c.q, 4) - c.q * c.q + 1)), {}});
}

void rows_2f4(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (c.rr(12) && c.ge("f >= 3", c.f, 3) && c.alpha(6, -1))
        out.push_back({"TableC:2F4:r12", "q^2 +- sqrt(2q^3) + q +- sqrt(2q) + 1", std::nullopt, {}});
}

void rows_f4(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (c.ge("p >= 3", c.p, 3) && c.rr(8) && c.alpha(4, -1) &&
        (c.gt("f > 2", c.f, 2) || c.gt("r > 17", c.r, 17) || c.R_gt_r() ||
         (c.f_is(2) && (c.eq("p = 3", c.p, 3) || c.square("p is a square mod 17", c.ip(), 17))) ||
         (c.f_is(1) && c.nonsquare("p is a square mod 17", c.ip(), 17)))) {
        BigInt h0 = bpow(c.q, 16);
        for (unsigned i = 1; i <= 4; ++i) h0 *= bpow(c.q, 2 * i) - 1;
        out.push_back({"TableC:F4:r8:O9", "Omega_9(q)", c.by_socle_part(h0), {}});
    }
    if (c.ge("p >= 3", c.p, 3) && c.rr(12) && c.alpha(6, -1) &&
        (c.ne("f != 3", c.f, 3) || c.gt("r > 13", c.r, 13) || c.R_gt_r() || c.mod_in("p = +-1 mod 7", c.p, 7, {1, -1})))
        out.push_back({"TableC:F4:r12:3D4", "3D4(q).3", std::nullopt, {}});
}

void rows_e6(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (c.rr(9) && c.alpha(9, 1) &&
        (c.gt("f > 2", c.f, 2) || c.gt("r > 19", c.r, 19) || c.R_gt_r() ||
         (c.f_is(2) && c.square("p is a square mod 5", c.ip(), 5)) ||
         (c.f_is(1) && (c.nonsquare("p is a square mod 5", c.ip(), 5) || c.nonsquare("p is a square mod 19", c.ip(), 19)))))
        out.push_back({"TableC:E6:r9:A2(q^3)", "A_2(q^3)", std::nullopt, {}});
}

void rows_2e6(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (c.rr(18) && c.beta(9, 1) &&
        (c.gt("f > 1", c.f, 1) || c.gt("r > 19", c.r, 19) || c.R_gt_r() ||
         (c.f_is(1) && (c.nonsquare("p is a square mod 5", c.ip(), 5) || c.square("p is a square mod 19", c.ip(), 19)))))
        out.push_back({"TableC:2E6:r18:A2-(q^3)", "A_2^-(q^3)", std::nullopt, {}});
}

void rows_e7(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    if (c.rr(18) && c.alpha(18, 1) &&
        (c.gt("f > 2", c.f, 2) || c.gt("r > 37", c.r, 37) || c.R_gt_r() ||
         (c.f_is(2) && c.square("p is a square mod 37", c.ip(), 37)) ||
         (c.f_is(1) && ((c.q_is(2) && c.r_is(19)) || (c.r_is(37) && c.nonsquare("p is a square mod 37", c.ip(), 37))))))
        out.push_back({"TableC:E7:r18", "2E6(q) x (q+1)", std::nullopt, {"depends-on-forthcoming"}});
}

bool e8_condition(Ctx& c, unsigned& i) {
    if (c.r % c.p == 0) return false;
    i = mult_order(c.q, c.r);
    if (i != 15 && i != 30) return false;
    if (!c.rr(i) || !c.alpha(30, 1)) return false;
    return c.gt("r > 61", c.r, 61) || c.R_gt_r() ||
           (c.eq("|R| = 61", c.R, 61) && c.r_is(61) &&
            (c.gt("f > 2", c.f, 2) ||
             (c.f_is(2) && c.eq("i = 15", i, 15) &&
              c.test("d_p(r) in {15,30}", "order_in", {{"q", c.p}, {"r", c.r}, {"set", {15, 30}}}))));
}

void rows_e8(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    unsigned i = 0;
    if (e8_condition(c, i))
        out.push_back({"TableC:E8:r15(3-e)/2", "q^8 - e q^7 + e q^5 - q^4 + e q^3 - e q + 1", std::nullopt,
                       {"depends-on-forthcoming"}});
}

// ---------------------------------------------------------------- sporadic

struct SporadicRow {
    const char* group;
    std::uint64_t r;
    const char* type;
    const char* order;  // empty when given by a formula below
};

const std::vector<SporadicRow>& sporadic_unique_rows() {
    static const std::vector<SporadicRow> rows{
        {"M11", 11, "L_2(11)", "660"},        {"M22", 11, "L_2(11)", "660"},
        {"M23", 23, "23:11", "253"},          {"He", 17, "Sp_4(4):2", "1958400"},
        {"Ru", 29, "L_2(29)", "12180"},       {"Co2", 23, "M_23", "10200960"},
        {"Co3", 23, "M_23", "10200960"},      {"J1", 19, "19:6", "114"},
        {"J3", 3, "3^2.3^{1+2}:8", "1944"},   {"Fi24'", 29, "29:14", "406"},
        {"HN", 19, "U_3(8):3_1", "16547328"}, {"J4", 29, "29:28", "812"},
        {"J4", 43, "43:14", "602"},           {"Ly", 37, "37:18", "666"},
        {"Ly", 67, "67:22", "1474"},          {"B", 47, "47:23", "1081"},
        {"M", 47, "2.B", ""},                 {"M", 59, "L_2(59)", "102660"},
        {"M", 71, "L_2(71)", "178920"},
    };
    return rows;
}

void rows_sporadic(Ctx& c, Rows& out) {
    if (c.r == 2) return;
    for (const auto& row : sporadic_unique_rows()) {
        if (c.s.sporadic != row.group || row.r != c.r) continue;
        if (!c.flag("G=T")) continue;
        BigInt order;
        if (*row.order) {
            order = BigInt(row.order);
        } else {
            GroupSpec b;
            b.family = Family::Sporadic;
            b.sporadic = "B";
            order = 2 * socle_order(b);
        }
        std::vector<std::string> caveats;
        if (c.s.sporadic == "M") caveats.push_back("depends-on-DLP");
        out.push_back({"TableD:" + c.s.sporadic + ":" + std::to_string(c.r), row.type, order, caveats});
    }
}

Rows evaluate_rows(Ctx& c) {
    Rows out;
    switch (c.s.family) {
        case Family::Alt:
            rows_alt(c, out);
            break;
        case Family::L:
            if (c.n == 2)
                rows_l2(c, out);
            else
                rows_ln(c, out);
            break;
        case Family::U:
            rows_un(c, out);
            break;
        case Family::Sp:
            rows_sp(c, out);
            break;
        case Family::O_odd:
            rows_o_odd(c, out);
            break;
        case Family::O_plus:
            rows_o_plus(c, out);
            break;
        case Family::O_minus:
            rows_o_minus(c, out);
            break;
        case Family::B2_2:
            rows_2b2(c, out);
            break;
        case Family::G2_2:
            rows_2g2(c, out);
            break;
        case Family::G2:
            rows_g2(c, out);
            break;
        case Family::D4_3:
            rows_3d4(c, out);
            break;
        case Family::F4_2:
            rows_2f4(c, out);
            break;
        case Family::F4:
            rows_f4(c, out);
            break;
        case Family::E6:
            rows_e6(c, out);
            break;
        case Family::E6_2:
            rows_2e6(c, out);
            break;
        case Family::E7:
            rows_e7(c, out);
            break;
        case Family::E8:
            rows_e8(c, out);
            break;
        case Family::Sporadic:
            rows_sporadic(c, out);
            break;
    }
    return out;
}

/// Socles whose rows are stated under an isomorphic name instead.
bool excluded_view(const GroupSpec& v, std::uint64_t r) {
    if (v.family == Family::L && v.n == 2 && v.q.q == 4) return true;
    if (v.family == Family::L && v.n == 3 && v.q.q == 2) return true;
    if (v.family == Family::Sp && v.n == 4 && v.q.q == 2) return true;
    if (v.family == Family::G2 && v.q.q == 2) return true;
    if (v.family == Family::G2_2 && v.q.q == 3) return true;
    if (v.family == Family::Alt && v.n == 6 && r == 2) return true;
    return false;
}

void check_prime(std::uint64_t r) {
    if (!is_prime(r)) throw SpecError("r = " + std::to_string(r) + " is not prime");
}

// ---------------------------------------------------------------- corollary tables

std::optional<RowMatch> table_e_view(Ctx& c) {
    const GroupSpec& s = c.s;
    const std::uint64_t r = c.r;
    auto hit = [](std::string row, std::string type) { return std::optional<RowMatch>(RowMatch{std::move(row), std::move(type)}); };
    switch (s.family) {
        case Family::Alt:
            if (r != 2 && c.eq("n = r", c.n, r) && c.ge("r >= 13", r, 13) && c.ne("r != 23", r, 23) &&
                !c.test("r in P", "scriptP", {{"r", r}}))
                return hit("TableE:Ar", "AGL_1(r) cap G");
            return std::nullopt;
        case Family::L:
            if (c.n == 2) {
                if (c.eq("r = p", r, c.p)) return hit("TableE:L2:p:P1", "P_1");
                if (r == 2) {
                    if ((c.q_is(9) && !c.flag("G<=PSigmaL")) ||
                        (c.q_prime() && c.shape("q is a Fermat prime", c.q, "Fermat") && c.ge("q >= 17", c.q, 17)))
                        return hit("TableE:L2:2:GL1wrS2", "GL_1(q) wr S_2");
                    if ((c.q_is(7) && c.flag("G=PGL")) ||
                        (c.q_prime() && c.shape("q is a Mersenne prime", c.q, "Mersenne") && c.ge("q >= 31", c.q, 31)))
                        return hit("TableE:L2:2:GL1(q^2)", "GL_1(q^2)");
                    return std::nullopt;
                }
                if (l2_r2_condition(c)) return hit("TableE:L2:r2:GL1(q^2)", "GL_1(q^2)");
                return std::nullopt;
            }
            if (c.n == 3 && r == 2 && c.eq("p = 2", c.p, 2) && !c.flag("G<=PGammaL")) return hit("TableE:L3:2:P12", "P_{1,2}");
            if (c.n == 3 && r == 3 && c.q_is(4) && c.flag("G=PGL")) return hit("TableE:L3:3:GU3(q^1/2)", "GU_3(q^{1/2})");
            if (r != 2 && is_prime(std::uint64_t(c.n)) && c.rr(c.n) && c.alpha(c.n, 1) &&
                ((c.gt("f > 1", c.f, 1) && c.mod("f odd", c.f, 2, 1)) ||
                 (c.f_is(1) && (c.R_gt_r() || c.ne("r != 2n+1", r, 2 * c.n + 1) ||
                                c.nonsquare("-r is a square mod p", -c.ir(), c.p)))))
                return hit("TableE:Ln:rn:GL1(q^n)", "GL_1(q^n)");
            return std::nullopt;
        case Family::U:
            if (c.n == 3) {
                if (c.eq("r = p", r, c.p)) return hit("TableE:U3:p:P1", "P_1");
                if (r == 3 && c.q_is(8)) return hit("TableE:U3:3:GU1wrS3", "GU_1(q) wr S_3");
                if (r != 2 && c.rr(6) && c.beta(3, -1) && (c.gt("f > 1", c.f, 1) || c.R_gt_r() || c.gt("r > 7", r, 7)))
                    return hit("TableE:U3:r6:GU1(q^3)", "GU_1(q^3)");
            }
            if (r != 2 && is_prime(std::uint64_t(c.n)) && c.rr(2 * c.n) && c.beta(c.n, -1) &&
                (c.gt("f > 1", c.f, 1) ||
                 (c.f_is(1) && (c.R_gt_r() || c.ne("r != 2n+1", r, 2 * c.n + 1) ||
                                c.square("-r is a square mod p", -c.ir(), c.p)))))
                return hit("TableE:Un:r2n:GU1(q^n)", "GU_1(q^n)");
            return std::nullopt;
        case Family::Sp:
            if (c.n == 4 && r == 2 && c.eq("p = 2", c.p, 2) && c.ge("q >= 4", c.q, 4) && !c.flag("G<=PGammaSp"))
                return hit("TableE:PSp4:2:P12", "P_{1,2}");
            return std::nullopt;
        case Family::B2_2:
            if (r == 2) return hit("TableE:2B2:2", "q^{1+1}:(q-1)");
            if (c.rr(4) && c.subfield("(q^(1/k))^2 != -1 mod r for k in pi(f) minus {r,f}", 2, -1, {r, c.f}))
                return hit("TableE:2B2:r4", "q +- sqrt(2q) + 1");
            return std::nullopt;
        case Family::G2_2:
            if (r == 3) return hit("TableE:2G2:3", "[q^3]:(q-1)");
            if (r != 2 && c.rr(6) && c.alpha(3, -1)) return hit("TableE:2G2:r6", "q +- sqrt(3q) + 1");
            return std::nullopt;
        case Family::D4_3:
            if (r != 2 && c.rr(12) && c.subfield("(q^(1/k))^6 != -1 mod r for k in pi(f) minus {3,r}", 6, -1, {3, r}))
                return hit("TableE:3D4:r12", "q^4 - q^2 + 1");
            return std::nullopt;
        case Family::F4_2:
            if (r != 2 && c.rr(12) && c.ge("f >= 3", c.f, 3) && c.alpha(6, -1))
                return hit("TableE:2F4:r12", "q^2 +- sqrt(2q^3) + q +- sqrt(2q) + 1");
            return std::nullopt;
        case Family::E8: {
            unsigned i = 0;
            if (r != 2 && e8_condition(c, i)) return hit("TableE:E8", "q^8 - e q^7 + e q^5 - q^4 + e q^3 - e q + 1");
            return std::nullopt;
        }
        case Family::Sporadic: {
            static const std::set<std::pair<std::string, std::uint64_t>> rows{
                {"M23", 23}, {"J1", 19}, {"J3", 3},   {"J4", 29},    {"J4", 43},
                {"Ly", 37},  {"Ly", 67}, {"Fi24'", 29}, {"B", 47}};
            if (rows.count({s.sporadic, r}) && c.flag("G=T")) return hit("TableE:" + s.sporadic + ":" + std::to_string(r), "N_G(R_0)");
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

std::optional<RowMatch> table_f_view(Ctx& c) {
    const GroupSpec& s = c.s;
    const std::uint64_t r = c.r;
    auto hit = [](std::string row, std::string type) { return std::optional<RowMatch>(RowMatch{std::move(row), std::move(type)}); };
    if (s.family == Family::Alt) {
        if (c.n == 9 && r == 3) return hit("TableF:A9:3", "S_3 wr S_3");
        return std::nullopt;
    }
    if (s.family == Family::L && c.n == 2 && r == 2) {
        if (c.mod("q = 1 mod 4", c.q, 4, 1) && c.ge("q >= 13", c.q, 13) &&
            ((c.pow_of("f = 2^a > 1", c.f, 2, 1) && !c.flag("G<=PSigmaL")) ||
             (c.q_prime() && !c.shape("q is a Fermat prime", c.q, "Fermat") && c.ge("|R| >= 2^4", c.R, 16))))
            return hit("TableF:L2:2:GL1wrS2", "GL_1(q) wr S_2");
        if (c.q_prime() && c.mod("q = 3 mod 4", c.q, 4, 3) && !c.shape("q is a Mersenne prime", c.q, "Mersenne") &&
            c.ge("|R| >= 2^4", c.R, 16))
            return hit("TableF:L2:2:GL1(q^2)", "GL_1(q^2)");
        return std::nullopt;
    }
    if (s.family == Family::L && c.n >= 3) {
        if (r == 2 && c.pow_of("n - 1 = 2^k", c.n - 1, 2, 1) && c.q_prime() && c.mod("q = 3 mod 4", c.q, 4, 3) &&
            c.eq("|G:T| = 2", c.outer, 2) && !c.flag("G<=PGammaL"))
            return hit("TableF:Ln:2:GLn-1xGL1", "GL_{n-1}(q) x GL_1(q)");
        if (r != 2 && ln_r1_wreath(c)) return hit("TableF:Ln:r1:GL1wrSn", "GL_1(q) wr S_n");
        return std::nullopt;
    }
    if (s.family == Family::U) {
        if (r == 2 && c.pow_of("n - 1 = 2^k", c.n - 1, 2, 1) && c.mod("q = 1 mod 4", c.q, 4, 1) &&
            c.pow_of("f = 2^a", c.f, 2, 0) && (c.n != 3 || c.ge("q >= 9", c.q, 9)))
            return hit("TableF:Un:2:GUn-1xGU1", "GU_{n-1}(q) x GU_1(q)");
        if (r != 2 && c.rr(2)) {
            if (c.n == 3 && r == 3 &&
                ((c.f_is(1) && c.mod("q = -1 mod 9", c.q, 9, -1)) ||
                 (c.pow_of("f = 3^a > 1", c.f, 3, 1) && c.ne("q != 8", c.q, 8))))
                return hit("TableF:Un:r2:GU1wrSn", "GU_1(q) wr S_n");
            if (c.eq("n = r", c.n, r) && c.ge("r >= 5", r, 5) && c.beta(1, -1))
                return hit("TableF:Un:r2:GU1wrSn", "GU_1(q) wr S_n");
        }
        return std::nullopt;
    }
    if (r != 2 && (s.family == Family::G2 || s.family == Family::D4_3)) {
        if (int eps = epsilon_of(c, 1, 2); eps != 0 && c.r_is(3) && c.pow_of("f = 3^a", c.f, 3, 0) &&
                                           (s.family == Family::D4_3 || !(c.p >= 5 && c.f == 1) ||
                                            c.mod("q = eps mod 9", c.q, 9, eps)))
            return hit(s.family == Family::G2 ? "TableF:G2:r(3-e)/2" : "TableF:3D4:r(3-e)/2", "SL_3^e(q)");
        return std::nullopt;
    }
    if (r == 2) {
        Rows rows;
        if (s.family == Family::O_odd) rows_o_odd(c, rows);
        if (s.family == Family::O_plus) rows_o_plus(c, rows);
        if (s.family == Family::O_minus) rows_o_minus(c, rows);
        if (!rows.empty()) return hit("TableF:" + rows.front().row.substr(7), rows.front().type);
    }
    return std::nullopt;
}

/// Views used by the corollaries: all isomorphic names.
std::vector<GroupSpec> corollary_views(const GroupSpec& s) { return isomorphic_views(s); }

bool in_scope_for_corollaries(const GroupSpec& s, std::uint64_t r) { return !precheck(s, r).has_value(); }

}  // namespace

// ---------------------------------------------------------------- public entry points

std::optional<Verdict> precheck(const GroupSpec& spec, std::uint64_t r) {
    validate(spec);
    check_prime(r);
    Verdict v;
    v.spec = spec;
    v.r = r;
    v.view = spec.describe();
    const BigInt G = group_order(spec), T = socle_order(spec);
    auto log = [&](const std::string& cond, const std::string& op, json operands) {
        bool value = evaluate(op, operands);
        v.trace.push_back({cond, op, value, std::move(operands)});
        return value;
    };
    if (!log("r divides |G|", "mod", {{"x", G.get_str()}, {"m", r}, {"residue", 0}})) {
        v.outcome = Outcome::OutOfScope;
        v.reason = "r does not divide |G|";
        return v;
    }
    if (!log("r divides |T|", "mod", {{"x", T.get_str()}, {"m", r}, {"residue", 0}})) {
        v.outcome = Outcome::NotUnique;
        v.reason = "R meets the socle trivially";
        return v;
    }
    if (!log("G/T is an r-group", "pow_of", {{"n", BigInt(G / T).get_str()}, {"base", r}, {"min_exp", 0}})) {
        v.outcome = Outcome::NotUnique;
        v.reason = "G/T is not an r-group";
        return v;
    }
    return std::nullopt;
}

Verdict classify(const GroupSpec& spec, std::uint64_t r) {
    if (auto v = precheck(spec, r)) return *v;
    std::optional<Verdict> result;
    std::vector<TraceEntry> trace;
    for (const GroupSpec& view : isomorphic_views(spec)) {
        if (excluded_view(view, r)) continue;
        Ctx c(view, r, &trace);
        Rows rows = evaluate_rows(c);
        if (rows.size() > 1)
            throw ClassifierError(view.describe() + ", r = " + std::to_string(r) + ": rows " + rows[0].row + " and " +
                                  rows[1].row + " both fire");
        Verdict v;
        v.spec = spec;
        v.r = r;
        v.view = view.describe();
        if (rows.empty()) {
            v.outcome = Outcome::NotUnique;
            v.reason = "no table row applies";
        } else {
            v.outcome = Outcome::Unique;
            v.overgroup = OvergroupDesc{rows[0].row, rows[0].type, rows[0].order};
            v.caveats = rows[0].caveats;
        }
        if (!result) {
            result = v;
            continue;
        }
        const bool same = result->outcome == v.outcome &&
                          (!result->overgroup || !v.overgroup || !result->overgroup->order || !v.overgroup->order ||
                           *result->overgroup->order == *v.overgroup->order);
        if (!same)
            throw ClassifierError("isomorphic views " + result->view + " and " + v.view + " disagree for r = " +
                                  std::to_string(r));
    }
    if (!result) {
        Verdict v;
        v.spec = spec;
        v.r = r;
        v.view = spec.describe();
        v.outcome = Outcome::OutOfScope;
        v.reason = "socle is stated under an isomorphic name that cannot express this extension";
        return v;
    }
    result->trace = std::move(trace);
    return *result;
}

std::optional<RowMatch> ngr0_row(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace) {
    if (!in_scope_for_corollaries(spec, r)) return std::nullopt;
    for (const GroupSpec& view : corollary_views(spec)) {
        Ctx c(view, r, trace);
        if (auto m = table_e_view(c)) return m;
    }
    return std::nullopt;
}

bool ngr0_unique(const GroupSpec& spec, std::uint64_t r) { return ngr0_row(spec, r).has_value(); }

bool weakly_subnormal_sylow(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace) {
    if (!in_scope_for_corollaries(spec, r)) return false;
    if (spec.outer.is_trivial()) return ngr0_row(spec, r, trace).has_value();
    for (const GroupSpec& view : corollary_views(spec)) {
        Ctx c(view, r, trace);
        const Family fam = view.family;
        if (r == 2 && fam == Family::L && c.n == 2) {
            if (c.flag("G=PGL") && c.ge("q >= 7", c.q, 7) && c.q_prime() &&
                (c.shape("q is a Mersenne prime", c.q, "Mersenne") || c.shape("q is a Fermat prime", c.q, "Fermat")))
                return true;
            if (c.q_is(9) && (c.eq("|G:T| = 2", c.outer, 2) || c.eq("|G:T| = 4", c.outer, 4)) && !c.flag("G=PSigmaL"))
                return true;
        }
        if (r == 2 && fam == Family::L && c.n == 3 && (c.q_is(2) || c.q_is(4)) && c.flag("G=T.graph")) return true;
        if (r == 3 && fam == Family::L && c.n == 2 && c.q_is(8) && c.eq("|G:T| = 3", c.outer, 3)) return true;
        if (r == 3 && fam == Family::U && c.n == 3 && c.q_is(8) &&
            (c.eq("|G:T| = 3", c.outer, 3) || c.eq("|G:T| = 9", c.outer, 9)))
            return true;
        if (r == 5 && fam == Family::B2_2 && c.q_is(32) && c.eq("|G:T| = 5", c.outer, 5)) return true;
    }
    return false;
}

OrHResult or_h_nontrivial(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace) {
    if (classify(spec, r).outcome != Outcome::Unique)
        throw ClassifierError("O_r(H) is defined only when M(R) is a singleton");
    if (auto m = ngr0_row(spec, r, trace)) return {OrHKind::TableE, m->row};
    for (const GroupSpec& view : corollary_views(spec)) {
        if (excluded_view(view, r)) continue;
        Ctx c(view, r, trace);
        if (auto m = table_f_view(c)) return {OrHKind::TableF, m->row};
    }
    return {};
}

bool m_or_h_unique(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace) {
    const Verdict v = classify(spec, r);
    if (v.outcome != Outcome::Unique) throw ClassifierError("M(O_r(H)) is defined only when M(R) is a singleton");
    if (weakly_subnormal_sylow(spec, r, trace)) return true;
    if (r != 2) return false;
    const std::string& row = v.overgroup->row;
    for (const GroupSpec& view : corollary_views(spec)) {
        Ctx c(view, r, trace);
        if (view.family == Family::L && c.n == 2) {
            if (row == "TableA:L2:GL1wrS2" && (c.flag("G=PGL.<phi>") || c.flag("G=L2(q).2_3")) &&
                (c.q_is(81) || (c.eq("f = 2", c.f, 2) && c.ge("p >= 5", c.p, 5) &&
                                c.shape("p is a Fermat prime", c.p, "Fermat"))))
                return true;
            if (row == "TableA:L2:GL1(q^2)" && c.q_prime() && c.mod("q = 3 mod 4", c.q, 4, 3) && c.ge("|R| >= 2^4", c.R, 16))
                return true;
        }
        if (view.family == Family::L && c.n == 3 && c.q_is(3) && c.flag("G=T.graph")) return true;
    }
    return false;
}

bool maximal_sylow(const GroupSpec& spec, std::uint64_t r, std::vector<TraceEntry>* trace) {
    validate(spec);
    check_prime(r);
    if (r != 2) return false;
    for (const GroupSpec& view : corollary_views(spec)) {
        if (view.family != Family::L || view.n != 2) continue;
        Ctx c(view, r, trace);
        if (c.q_is(7) && c.flag("G=PGL")) return true;
        if (c.q_is(9) && (c.flag("G=PGL") || c.flag("G=L2(q).2_3") || c.flag("G=PGL.<phi>"))) return true;
        if (c.gt("q > 7", c.q, 7) && c.q_prime() &&
            (c.shape("q is a Mersenne prime", c.q, "Mersenne") || c.shape("q is a Fermat prime", c.q, "Fermat")) &&
            (c.flag("G=T") || c.flag("G=PGL")))
            return true;
    }
    return false;
}

bool replay(const TraceEntry& e) { return evaluate(e.op, e.operands); }

json to_json(const GroupSpec& s) {
    json j;
    j["family"] = to_string(s.family);
    if (s.family == Family::Sporadic) {
        j["name"] = s.sporadic;
    } else if (s.family == Family::Alt) {
        j["n"] = s.n;
    } else {
        if (is_classical(s.family)) j["n"] = s.n;
        j["p"] = s.q.p;
        j["f"] = s.q.f;
        j["q"] = s.q.q.get_str();
    }
    j["outer"] = {{"diag", s.outer.diag},
                  {"field", s.outer.field},
                  {"graph", graph_name(s.outer.graph)},
                  {"twisted", s.outer.twisted},
                  {"label", s.outer.describe()}};
    j["describe"] = s.describe();
    return j;
}

json to_json(const TraceEntry& e) { return {{"cond", e.cond}, {"op", e.op}, {"value", e.value}, {"operands", e.operands}}; }

json to_json(const Verdict& v) {
    json j;
    j["schema_version"] = 1;
    j["spec"] = to_json(v.spec);
    j["r"] = v.r;
    j["outcome"] = to_string(v.outcome);
    if (v.overgroup) {
        j["overgroup"] = {{"row", v.overgroup->row},
                          {"type", v.overgroup->type},
                          {"order", v.overgroup->order ? json(v.overgroup->order->get_str()) : json(nullptr)}};
    } else {
        j["overgroup"] = nullptr;
    }
    j["view"] = v.view;
    j["reason"] = v.reason;
    j["caveats"] = v.caveats;
    json tr = json::array();
    for (const auto& e : v.trace) tr.push_back(to_json(e));
    j["trace"] = tr;
    return j;
}

}  // namespace unimax
