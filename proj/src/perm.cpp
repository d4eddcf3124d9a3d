#include "unimax/perm.hpp"

#include <numeric>

namespace unimax {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

Perm::Perm(std::size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), Point{0}); }

Perm::Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (Point x : img_) {
        if (x >= img_.size() || seen[x]) throw GroupError("Perm: images are not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree) throw GroupError("Perm::from_cycles: point out of range");
            img[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    Perm out;
    out.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<Point>(i);
    return out;
}

Perm Perm::pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm acc(img_.size());
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::uint64_t Perm::order() const {
    std::vector<char> seen(img_.size(), 0);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (Point x = static_cast<Point>(i); !seen[x]; x = img_[x]) {
            seen[x] = 1;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

std::uint64_t Perm::hash() const {
    std::uint64_t h = 0x84222325cbf29ce4ull ^ img_.size();
    for (Point x : img_) h = mix64(h ^ x);
    return h;
}

Perm Perm::conjugate(const Perm& g) const {
    Perm out;
    out.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) out.img_[g.img_[x]] = g.img_[img_[x]];
    return out;
}

std::string Perm::to_cycle_string() const {
    std::string s;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        s += "(";
        bool first = true;
        for (Point x = static_cast<Point>(i); !seen[x]; x = img_[x]) {
            seen[x] = 1;
            if (!first) s += ",";
            s += std::to_string(x);
            first = false;
        }
        s += ")";
    }
    return s.empty() ? "()" : s;
}

Perm operator*(const Perm& a, const Perm& b) {
    Perm out;
    mul_into(a, b, out);
    return out;
}

void mul_into(const Perm& a, const Perm& b, Perm& out) {
    if (a.degree() != b.degree()) throw GroupError("Perm product: degree mismatch");
    auto& o = out.mutable_images();
    o.resize(a.degree());
    const auto& ai = a.images();
    const auto& bi = b.images();
    for (std::size_t i = 0; i < ai.size(); ++i) o[i] = bi[ai[i]];
}

}  // namespace unimax
