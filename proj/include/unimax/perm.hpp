#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace unimax {

using Point = std::uint32_t;
using Rng = std::mt19937_64;

struct GroupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// splitmix64 finalizer; used to derive independent seeds from (seed, tag).
std::uint64_t mix64(std::uint64_t x);
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) { return mix64(seed ^ mix64(tag + 0x9e3779b97f4a7c15ull)); }
inline std::size_t uniform_index(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// A permutation of {0..deg-1}. Products act on the right: x^(ab) = (x^a)^b.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree);
    explicit Perm(std::vector<Point> images);
    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

    std::size_t degree() const { return img_.size(); }
    Point operator[](Point x) const { return img_[x]; }
    const std::vector<Point>& images() const { return img_; }
    std::vector<Point>& mutable_images() { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    Perm pow(long long e) const;
    std::uint64_t order() const;
    std::uint64_t hash() const;
    /// g^-1 * this * g
    Perm conjugate(const Perm& g) const;
    std::string to_cycle_string() const;

    friend Perm operator*(const Perm& a, const Perm& b);
    friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

private:
    std::vector<Point> img_;
};

/// out = a * b without allocation when out already has the right size.
void mul_into(const Perm& a, const Perm& b, Perm& out);

}  // namespace unimax
