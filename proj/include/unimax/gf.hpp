#pragma once
// Small finite fields GF(p^f) with table arithmetic. Elements are integers 0..q-1 whose
// base-p digits are the polynomial coefficients (constant term first).

#include <cstdint>
#include <vector>

namespace unimax {

class GF {
public:
    using Elem = std::uint32_t;

    /// Field with q = p^f elements, q at most 4096, reduced modulo the least monic irreducible.
    GF(std::uint32_t p, unsigned f);

    std::uint32_t p() const { return p_; }
    unsigned f() const { return f_; }
    std::uint32_t q() const { return q_; }
    /// Coefficients of the defining polynomial, constant term first, leading 1 included.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// Frobenius x -> x^p.
    Elem frob(Elem a) const { return frob_[a]; }
    Elem primitive() const { return prim_; }
    bool is_square(Elem a) const;
    /// Embedding of the prime field.
    Elem from_int(std::int64_t v) const;

private:
    std::uint32_t p_;
    unsigned f_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> add_, neg_, frob_;
    std::vector<std::uint32_t> log_;  // log_[a] for a != 0
    std::vector<Elem> exp_;           // exp_[i] = prim^i, length 2(q-1)
    Elem prim_ = 1;
};

}  // namespace unimax
