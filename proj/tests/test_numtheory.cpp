#include "doctest.h"
#include "unimax/numtheory.hpp"

#include <set>

using namespace unimax;

namespace {

// Independent references: naive loops over machine integers.
bool naive_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

unsigned naive_order(std::uint64_t q, std::uint64_t r) {
    std::uint64_t x = q % r;
    unsigned d = 1;
    while (x != 1) {
        x = x * (q % r) % r;
        ++d;
    }
    return d;
}

std::set<std::uint64_t> naive_ppd(std::uint64_t q, unsigned d) {
    // Primes r with ord_r(q) = d; such r satisfy r = 1 mod d and r <= q^d - 1.
    BigInt n = pow(BigInt(static_cast<unsigned long>(q)), d) - 1;
    std::set<std::uint64_t> out;
    BigInt m = n;
    for (std::uint64_t r = 2; BigInt(static_cast<unsigned long>(r)) * r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        if (naive_order(q, r) == d) out.insert(r);
    }
    if (m > 1 && m.fits_ulong_p()) {
        std::uint64_t r = m.get_ui();
        if (q % r != 0 && naive_order(q, r) == d) out.insert(r);
    }
    return out;
}

}  // namespace

TEST_CASE("primality matches trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n) CHECK(is_prime(n) == naive_prime(n));
    CHECK(is_prime(std::uint64_t{2305843009213693951ull}));  // 2^61 - 1
    CHECK_FALSE(is_prime(std::uint64_t{3215031751ull}));      // strong pseudoprime to 2,3,5,7
}

TEST_CASE("r_valuation") {
    CHECK(r_valuation(63, 3).value == 9);
    CHECK(r_valuation(17, 2).exponent == 0);
    CHECK(r_valuation(4095, 3).value == 9);
    CHECK_THROWS_AS(r_valuation(0, 3), NumberError);
    CHECK_THROWS_AS(r_valuation(12, 4), NumberError);
}

TEST_CASE("mult_order") {
    CHECK(mult_order(2, 7) == 3);
    CHECK(mult_order(4, 3) == 1);
    CHECK(mult_order(2, 11) == 10);
    CHECK_THROWS_AS(mult_order(9, 3), NumberError);
    for (std::uint64_t r = 3; r < 200; ++r) {
        if (!naive_prime(r)) continue;
        for (std::uint64_t q = 2; q < 60; ++q) {
            if (q % r == 0) continue;
            unsigned d = mult_order(q, r);
            CHECK(d == naive_order(q, r));
            CHECK((r - 1) % d == 0);
        }
    }
}

TEST_CASE("ppd matches the naive definition") {
    auto set_of = [](const std::vector<BigInt>& v) {
        std::set<std::uint64_t> s;
        for (auto& x : v) s.insert(to_u64(x));
        return s;
    };
    CHECK(ppd(PrimePowerQ::make(2, 1), 6).empty());
    CHECK(ppd(PrimePowerQ::make(7, 1), 2).empty());
    CHECK(set_of(ppd(PrimePowerQ::make(2, 1), 11)) == std::set<std::uint64_t>{23, 89});
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13}) {
        PrimePowerQ pq;
        REQUIRE(as_prime_power(q, pq));
        for (unsigned d = 2; d <= 8; ++d) CHECK(set_of(ppd(pq, d)) == naive_ppd(q, d));
    }
}

TEST_CASE("rpart_q_pow examples") {
    CHECK(rpart_q_pow(PrimePowerQ::make(2, 2), 6, PowForm::MinusEps, Sign::Plus, 3).value == 9);
    CHECK(rpart_q_pow(PrimePowerQ::make(3, 1), 2, PowForm::MinusEps, Sign::Plus, 2).value == 8);
    CHECK(rpart_q_pow(PrimePowerQ::make(2, 1), 4, PowForm::MinusEps, Sign::Minus, 3).value == 1);
    CHECK_THROWS_AS(rpart_q_pow(PrimePowerQ::make(5, 1), 2, PowForm::MinusEps, Sign::Plus, 3), NumberError);
}

TEST_CASE("rpart_q_pow closed form equals direct valuation") {
    int checked = 0;
    for (std::uint64_t q = 2; q <= 128; ++q) {
        PrimePowerQ pq;
        if (!as_prime_power(q, pq)) continue;
        for (std::uint64_t r = 2; r <= 31; ++r) {
            if (!naive_prime(r)) continue;
            for (int e : {1, -1}) {
                BigInt qe = BigInt(static_cast<unsigned long>(q)) - e;
                if (qe % r != 0) continue;
                for (unsigned d = 1; d <= 12; ++d) {
                    for (PowForm form : {PowForm::MinusEps, PowForm::PlusEps}) {
                        BigInt lit = pow(BigInt(static_cast<unsigned long>(q)), d) +
                                     (form == PowForm::MinusEps ? -e : e);
                        RPart f = rpart_q_pow_formula(pq, d, form, e == 1 ? Sign::Plus : Sign::Minus, r);
                        CHECK(f.exponent == r_valuation(lit, r).exponent);
                        ++checked;
                    }
                }
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("Zsigmondy exceptions in range") {
    std::set<std::pair<std::uint64_t, unsigned>> empty;
    for (std::uint64_t q = 2; q <= 128; ++q) {
        PrimePowerQ pq;
        if (!as_prime_power(q, pq)) continue;
        for (unsigned d = 2; d <= 12; ++d) {
            auto s = ppd(pq, d);
            if (s.empty()) empty.insert({q, d});
            for (auto& r : s) CHECK(r % d == 1);
        }
    }
    std::set<std::pair<std::uint64_t, unsigned>> expected{{2, 6}, {3, 2}, {7, 2}, {31, 2}, {127, 2}};
    CHECK(empty == expected);
}

TEST_CASE("alpha and beta conditions") {
    CHECK_FALSE(alpha_cond(1, Sign::Minus, PrimePowerQ::make(2, 6), 3));
    CHECK(alpha_cond(1, Sign::Plus, PrimePowerQ::make(7, 1), 5));
    CHECK_FALSE(alpha_cond(3, Sign::Minus, PrimePowerQ::make(3, 3), 7));
    for (std::uint64_t p : {2, 3, 5}) {
        for (unsigned f = 1; f <= 8; ++f) {
            auto q = PrimePowerQ::make(p, f);
            for (std::uint64_t r : {3, 5, 7, 13}) {
                if (r == p) continue;
                for (unsigned m = 1; m <= 6; ++m)
                    for (Sign s : {Sign::Plus, Sign::Minus})
                        if (alpha_cond(m, s, q, r)) CHECK(beta_cond(m, s, q, r));
            }
        }
    }
}

TEST_CASE("prime_shape") {
    CHECK(prime_shape(17) == PrimeShape::Fermat);
    CHECK(prime_shape(31) == PrimeShape::Mersenne);
    CHECK(prime_shape(11) == PrimeShape::Neither);
    CHECK(prime_shape(15) == PrimeShape::NotPrime);
    CHECK(prime_shape(2) == PrimeShape::Fermat);
    CHECK(prime_shape(3) == PrimeShape::Fermat);
}

TEST_CASE("in_scriptP") {
    CHECK(in_scriptP(7));
    CHECK(in_scriptP(13));
    CHECK_FALSE(in_scriptP(11));
    CHECK(in_scriptP(31));   // 1+2+4+8+16 and 1+5+25
    CHECK_FALSE(in_scriptP(29));
    CHECK(in_scriptP(73));   // 1+8+64
    // Brute force over q, d for all primes below 500.
    for (std::uint64_t r = 2; r < 500; ++r) {
        if (!naive_prime(r)) continue;
        bool found = false;
        for (std::uint64_t q = 2; q < r && !found; ++q) {
            PrimePowerQ pq;
            if (!as_prime_power(q, pq)) continue;
            std::uint64_t s = 1 + q, t = q;
            while (s < r) {
                t *= q;
                s += t;
            }
            found = s == r;
        }
        CHECK(in_scriptP(r) == found);
    }
}

TEST_CASE("is_square_mod") {
    CHECK(is_square_mod(-7, 11));
    CHECK(is_square_mod(2, 7));
    CHECK_FALSE(is_square_mod(5, 13));
    CHECK_THROWS_AS(is_square_mod(13, 13), NumberError);
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        std::set<std::uint64_t> sq;
        for (std::uint64_t x = 1; x < p; ++x) sq.insert(x * x % p);
        for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) CHECK(is_square_mod(a, p) == (sq.count(a) > 0));
    }
}
