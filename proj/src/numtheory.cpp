#include "unimax/numtheory.hpp"

#include <algorithm>

namespace unimax {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool fits_u64(const BigInt& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

void require_prime(std::uint64_t r, const char* what) {
    if (!is_prime(r)) throw NumberError(std::string(what) + ": r=" + std::to_string(r) + " is not prime");
}

BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto f = [&](const BigInt& v) -> BigInt { return (v * v + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            BigInt diff = abs(x - y);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    BigInt m = n;
    for (unsigned long p = 2; p < 1000; ++p) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m == 1) return;
    if (is_prime(m)) {
        out.push_back(m);
        return;
    }
    BigInt d = pollard_rho(m);
    BigInt e = m / d;
    factor_into(d, out);
    factor_into(e, out);
}

}  // namespace

std::uint64_t to_u64(const BigInt& n) {
    if (!fits_u64(n)) throw NumberError("integer does not fit in 64 bits: " + n.get_str());
    return static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t()));
}

PrimePowerQ PrimePowerQ::make(std::uint64_t p, unsigned f) {
    if (!is_prime(p)) throw NumberError("PrimePowerQ: p=" + std::to_string(p) + " is not prime");
    if (f == 0) throw NumberError("PrimePowerQ: f must be positive");
    PrimePowerQ out;
    out.p = p;
    out.f = f;
    out.q = unimax::pow(BigInt(static_cast<unsigned long>(p)), f);
    return out;
}

BigInt pow(const BigInt& base, unsigned e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are deterministic for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const BigInt& n) {
    if (sgn(n) <= 0) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
    if (sgn(n) <= 0) throw NumberError("prime_divisors: n must be positive");
    std::vector<BigInt> out;
    factor_into(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (const BigInt& p : prime_divisors(BigInt(static_cast<unsigned long>(n)))) out.push_back(to_u64(p));
    return out;
}

bool as_prime_power(const BigInt& n, PrimePowerQ& out) {
    if (n < 2) return false;
    auto ps = prime_divisors(n);
    if (ps.size() != 1) return false;
    out.p = to_u64(ps[0]);
    out.q = n;
    out.f = static_cast<unsigned>(r_valuation(n, out.p).exponent);
    return true;
}

RPart r_valuation(const BigInt& n, std::uint64_t r) {
    if (sgn(n) <= 0) throw NumberError("r_valuation: n must be positive");
    require_prime(r, "r_valuation");
    RPart out;
    out.r = r;
    BigInt m = n;
    while (m % r == 0) {
        m /= r;
        ++out.exponent;
        out.value *= r;
    }
    return out;
}

unsigned mult_order(const BigInt& q, std::uint64_t r) {
    require_prime(r, "mult_order");
    BigInt qm = q % r;
    if (qm == 0) throw NumberError("mult_order: r divides q");
    std::uint64_t a = to_u64(qm);
    std::uint64_t x = a;
    unsigned d = 1;
    while (x != 1) {
        x = mulmod(x, a, r);
        ++d;
    }
    return d;
}

std::vector<BigInt> ppd(const PrimePowerQ& q, unsigned d) {
    if (d < 2) throw NumberError("ppd: d must be at least 2");
    BigInt m = pow(q.q, d) - 1;
    // Strip every prime dividing some q^e - 1 with e a proper divisor of d.
    for (unsigned e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        BigInt qe = pow(q.q, e) - 1;
        for (;;) {
            BigInt g;
            mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), qe.get_mpz_t());
            if (g == 1) break;
            m /= g;
        }
    }
    return prime_divisors(m);
}

bool is_ppd(const PrimePowerQ& q, unsigned d, std::uint64_t r) {
    if (!is_prime(r) || q.p == r) return false;
    return mult_order(q.q, r) == d;
}

RPart rpart_q_pow_formula(const PrimePowerQ& q, unsigned d, PowForm form, Sign eps, std::uint64_t r) {
    require_prime(r, "rpart_q_pow");
    if (d == 0) throw NumberError("rpart_q_pow: d must be positive");
    const int e = to_int(eps);
    const BigInt q_minus_eps = q.q - e;
    if (q_minus_eps % r != 0) throw NumberError("rpart_q_pow: r does not divide q - eps");
    auto make = [&](const BigInt& v) { return r_valuation(v, r); };
    const bool d_even = d % 2 == 0;
    if (r == 2) {
        // For odd q, 2 divides both q - 1 and q + 1, so q^d + eps is q^d - (-eps).
        const int ee = form == PowForm::MinusEps ? e : -e;
        if (!d_even) return make(q.q - ee);
        if (ee == 1) {
            RPart a = make(q.q * q.q - 1);
            RPart b = make(BigInt(d / 2));
            a.exponent += b.exponent;
            a.value *= b.value;
            return a;
        }
        return make(2);
    }
    RPart base = make(q_minus_eps);
    RPart dr = make(BigInt(d));
    RPart prod = base;
    prod.exponent += dr.exponent;
    prod.value *= dr.value;
    RPart one = make(1);
    if (form == PowForm::MinusEps) return (d_even && e == -1) ? one : prod;
    return (d_even && e == -1) ? prod : one;
}

RPart rpart_q_pow(const PrimePowerQ& q, unsigned d, PowForm form, Sign eps, std::uint64_t r) {
    RPart out = rpart_q_pow_formula(q, d, form, eps, r);
    if (mpz_sizeinbase(q.q.get_mpz_t(), 2) * d <= 4096) {
        const int e = to_int(eps);
        BigInt lit = pow(q.q, d) + (form == PowForm::MinusEps ? -e : e);
        RPart direct = r_valuation(abs(lit), r);
        if (direct.exponent != out.exponent)
            throw std::logic_error("rpart_q_pow: closed form disagrees with direct valuation");
    }
    return out;
}

bool subfield_residue_cond(unsigned m, Sign eps, const PrimePowerQ& q, std::uint64_t r,
                           const std::vector<std::uint64_t>& excluded, bool odd_only) {
    require_prime(r, "subfield_residue_cond");
    for (std::uint64_t k : prime_divisors(static_cast<std::uint64_t>(q.f))) {
        if (std::find(excluded.begin(), excluded.end(), k) != excluded.end()) continue;
        if (odd_only && k == 2) continue;
        BigInt sub = pow(BigInt(static_cast<unsigned long>(q.p)), q.f / static_cast<unsigned>(k));
        BigInt v = pow(sub, m) % r;
        BigInt target = BigInt(to_int(eps)) % BigInt(static_cast<unsigned long>(r));
        if (target < 0) target += r;
        if (v == target) return false;
    }
    return true;
}

bool alpha_cond(unsigned m, Sign eps, const PrimePowerQ& q, std::uint64_t r) {
    return subfield_residue_cond(m, eps, q, r, {r}, false);
}

bool beta_cond(unsigned m, Sign eps, const PrimePowerQ& q, std::uint64_t r) {
    return subfield_residue_cond(m, eps, q, r, {r}, true);
}

std::string to_string(PrimeShape s) {
    switch (s) {
        case PrimeShape::Mersenne: return "Mersenne";
        case PrimeShape::Fermat: return "Fermat";
        case PrimeShape::Neither: return "Neither";
        case PrimeShape::NotPrime: return "NotPrime";
    }
    return "?";
}

PrimeShape prime_shape(const BigInt& n) {
    if (n < 2) throw NumberError("prime_shape: n must be at least 2");
    if (!is_prime(n)) return PrimeShape::NotPrime;
    auto is_pow2 = [](const BigInt& v) { return v >= 1 && mpz_popcount(v.get_mpz_t()) == 1; };
    if (is_pow2(n - 1)) return PrimeShape::Fermat;
    if (is_pow2(n + 1)) return PrimeShape::Mersenne;
    return PrimeShape::Neither;
}

bool in_scriptP(std::uint64_t r) {
    require_prime(r, "in_scriptP");
    for (std::uint64_t q = 2; q < r; ++q) {
        PrimePowerQ pq;
        if (!as_prime_power(BigInt(static_cast<unsigned long>(q)), pq)) continue;
        BigInt sum = 1 + BigInt(static_cast<unsigned long>(q));
        BigInt term = q;
        while (sum < r) {
            term *= q;
            sum += term;
        }
        if (sum == r) return true;
    }
    return false;
}

bool is_square_mod(std::int64_t a, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw NumberError("is_square_mod: p must be an odd prime");
    std::int64_t am = a % static_cast<std::int64_t>(p);
    if (am < 0) am += static_cast<std::int64_t>(p);
    if (am == 0) throw NumberError("is_square_mod: p divides a");
    return powmod(static_cast<std::uint64_t>(am), (p - 1) / 2, p) == 1;
}

}  // namespace unimax
