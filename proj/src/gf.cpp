#include "unimax/gf.hpp"

#include "unimax/numtheory.hpp"

#include <stdexcept>

namespace unimax {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

std::vector<std::uint32_t> digits(std::uint32_t x, std::uint32_t p, unsigned f) {
    std::vector<std::uint32_t> d(f);
    for (unsigned i = 0; i < f; ++i) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
    std::uint32_t x = 0;
    for (unsigned i = d.size(); i-- > 0;) x = x * p + d[i];
    return x;
}

/// Product of two residues modulo a monic polynomial of degree f.
std::vector<std::uint32_t> polymulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                      const Poly& m, std::uint32_t p) {
    const unsigned f = m.size() - 1;
    std::vector<std::uint64_t> prod(2 * f, 0);
    for (unsigned i = 0; i < f; ++i)
        for (unsigned j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    for (unsigned k = 2 * f; k-- > f;) {
        std::uint64_t c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < f; ++i) prod[k - f + i] = (prod[k - f + i] + (p - m[i]) * c) % p;
    }
    std::vector<std::uint32_t> out(f);
    for (unsigned i = 0; i < f; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
}

/// Irreducible iff the quotient ring has no zero divisors.
bool irreducible(const Poly& m, std::uint32_t p) {
    const unsigned f = m.size() - 1;
    std::uint32_t q = 1;
    for (unsigned i = 0; i < f; ++i) q *= p;
    for (std::uint32_t a = 1; a < q; ++a)
        for (std::uint32_t b = a; b < q; ++b) {
            auto c = polymulmod(digits(a, p, f), digits(b, p, f), m, p);
            if (undigits(c, p) == 0) return false;
        }
    return true;
}

}  // namespace

GF::GF(std::uint32_t p, unsigned f) : p_(p), f_(f) {
    if (!is_prime(std::uint64_t(p)) || f == 0) throw std::invalid_argument("GF: p must be prime and f >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < f; ++i) q *= p;
    if (q > 4096) throw std::invalid_argument("GF: field too large for table arithmetic");
    q_ = static_cast<std::uint32_t>(q);

    // Least monic irreducible: non-leading coefficients ordered as a base-p integer.
    if (f == 1) {
        modulus_ = {0, 1};
    } else {
        for (std::uint32_t c = 0; c < q_; ++c) {
            Poly m = digits(c, p, f);
            m.push_back(1);
            if (m[0] != 0 && irreducible(m, p)) {
                modulus_ = m;
                break;
            }
        }
    }

    add_.resize(q_ * q_);
    neg_.resize(q_);
    for (Elem a = 0; a < q_; ++a) {
        auto da = digits(a, p, f);
        std::vector<std::uint32_t> dn(f);
        for (unsigned i = 0; i < f; ++i) dn[i] = (p - da[i]) % p;
        neg_[a] = undigits(dn, p);
        for (Elem b = 0; b < q_; ++b) {
            auto db = digits(b, p, f);
            std::vector<std::uint32_t> ds(f);
            for (unsigned i = 0; i < f; ++i) ds[i] = (da[i] + db[i]) % p;
            add_[a * q_ + b] = undigits(ds, p);
        }
    }

    // Primitive element: least element of multiplicative order q-1.
    auto slow_mul = [&](Elem a, Elem b) {
        if (f == 1) return Elem((std::uint64_t(a) * b) % p);
        return undigits(polymulmod(digits(a, p, f), digits(b, p, f), modulus_, p), p);
    };
    for (Elem g = 1; g < q_; ++g) {
        std::uint32_t ord = 1;
        for (Elem x = g; x != 1; x = slow_mul(x, g)) ++ord;
        if (ord == q_ - 1) {
            prim_ = g;
            break;
        }
    }
    exp_.resize(2 * (q_ - 1) + 1);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < 2 * (q_ - 1) + 1; ++i) {
        exp_[i] = x;
        if (i < q_ - 1) log_[x] = i;
        x = slow_mul(x, prim_);
    }
    frob_.resize(q_);
    for (Elem a = 0; a < q_; ++a) frob_[a] = pow(a, p);
}

GF::Elem GF::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
}

GF::Elem GF::inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GF::Elem GF::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

bool GF::is_square(Elem a) const { return a == 0 || p_ == 2 || log_[a] % 2 == 0; }

GF::Elem GF::from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

}  // namespace unimax
