#pragma once
// Exact integer predicates used by the classification tables.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace unimax {

using BigInt = mpz_class;

struct NumberError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Largest power r^exponent dividing some n.
struct RPart {
    std::uint64_t r = 2;
    unsigned exponent = 0;
    BigInt value = 1;
};

struct PrimePowerQ {
    std::uint64_t p = 2;
    unsigned f = 1;
    BigInt q = 2;

    static PrimePowerQ make(std::uint64_t p, unsigned f);
};

enum class Sign : int { Plus = 1, Minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<BigInt> prime_divisors(const BigInt& n);

/// Decompose n = p^f, or return false.
bool as_prime_power(const BigInt& n, PrimePowerQ& out);

BigInt pow(const BigInt& base, unsigned e);

RPart r_valuation(const BigInt& n, std::uint64_t r);

/// d_q(r): multiplicative order of q modulo r.
unsigned mult_order(const BigInt& q, std::uint64_t r);

/// Primitive prime divisors of q^d - 1.
std::vector<BigInt> ppd(const PrimePowerQ& q, unsigned d);

/// True when r is a primitive prime divisor of q^d - 1.
bool is_ppd(const PrimePowerQ& q, unsigned d, std::uint64_t r);

/// Which of q^d - eps (Minus) or q^d + eps (Plus) is measured.
enum class PowForm { MinusEps, PlusEps };

/// (q^d -+ eps)_r by the closed-form case analysis, for r | q - eps.
/// The result is compared with a direct valuation when q^d is small enough.
RPart rpart_q_pow(const PrimePowerQ& q, unsigned d, PowForm form, Sign eps, std::uint64_t r);

/// The same case analysis without the self-check (exposed for tests).
RPart rpart_q_pow_formula(const PrimePowerQ& q, unsigned d, PowForm form, Sign eps,
                          std::uint64_t r);

/// (q^{1/k})^m != eps (mod r) for every prime k | f with k != r.
bool alpha_cond(unsigned m, Sign eps, const PrimePowerQ& q, std::uint64_t r);
/// alpha_cond restricted to odd k.
bool beta_cond(unsigned m, Sign eps, const PrimePowerQ& q, std::uint64_t r);
/// The shared kernel: (q^{1/k})^m != eps (mod r) for prime k | f, k not excluded.
bool subfield_residue_cond(unsigned m, Sign eps, const PrimePowerQ& q, std::uint64_t r,
                           const std::vector<std::uint64_t>& excluded, bool odd_only);

enum class PrimeShape { Mersenne, Fermat, Neither, NotPrime };
std::string to_string(PrimeShape s);
PrimeShape prime_shape(const BigInt& n);

/// r = 1 + q + ... + q^{d-1} for some prime power q and d >= 2.
bool in_scriptP(std::uint64_t r);

/// Euler's criterion for a modulo an odd prime p.
bool is_square_mod(std::int64_t a, std::uint64_t p);

std::uint64_t to_u64(const BigInt& n);

}  // namespace unimax
