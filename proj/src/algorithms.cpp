#include "unimax/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <unordered_map>

namespace unimax {

namespace {

constexpr std::uint32_t kEmpty = 0xffffffffu;

void check_aligned(const PermGroup& ambient, const PermGroup& sub) {
    const auto& al = ambient.levels();
    const auto& sl = sub.levels();
    if (sl.size() < al.size()) throw GroupError("subgroup chain does not extend the ambient base");
    for (std::size_t i = 0; i < al.size(); ++i)
        if (al[i].point != sl[i].point) throw GroupError("subgroup chain does not extend the ambient base");
}

}  // namespace

bool is_r_group(const BigInt& order, std::uint64_t r) { return r_valuation(order, r).value == order; }

// ---------------------------------------------------------------- cosets

CosetSpace::CosetSpace(const PermGroup& ambient, const PermGroup& sub, std::size_t bound)
    : a_(ambient), s_(sub), k_(ambient.levels().size()) {
    check_aligned(ambient, sub);
    BigInt idx = ambient.order() / sub.order();
    if (idx > bound)
        throw Infeasible("coset bound exceeded: index " + idx.get_str() + " > " + std::to_string(bound));
    const std::size_t n = to_u64(idx);
    keys_.reserve(n * k_);
    table_.assign(std::max<std::size_t>(16, std::bit_ceil(n * 2 + 1)), kEmpty);
    keybuf_.resize(k_);
    compute_key(ambient.identity(), keybuf_.data());
    insert(keybuf_.data());
    Perm g, h;
    for (std::size_t i = 0; i < count_; ++i) {
        g = rep(i);
        for (const Perm& s : ambient.generators()) {
            mul_into(g, s, h);
            compute_key(h, keybuf_.data());
            if (lookup(keybuf_.data()) == kEmpty) insert(keybuf_.data());
        }
    }
    if (count_ != n) throw GroupError("coset enumeration found " + std::to_string(count_) + " cosets, expected " +
                                      std::to_string(n));
}

void CosetSpace::compute_key(const Perm& g, Point* out) const {
    cur_ = g;
    const auto& lv = s_.levels();
    for (std::size_t i = 0; i < k_; ++i) {
        const auto& L = lv[i];
        if (L.orbit.size() == 1) {
            out[i] = cur_[L.point];
            continue;
        }
        Point best = cur_[L.orbit[0]];
        std::size_t bi = 0;
        for (std::size_t j = 1; j < L.orbit.size(); ++j) {
            Point v = cur_[L.orbit[j]];
            if (v < best) {
                best = v;
                bi = j;
            }
        }
        out[i] = best;
        if (bi != 0) {
            mul_into(L.u[bi], cur_, tmp_);
            std::swap(cur_, tmp_);
        }
    }
}

std::uint64_t CosetSpace::hash_key(const Point* key) const {
    std::uint64_t h = 0x243f6a8885a308d3ull;
    for (std::size_t i = 0; i < k_; ++i) h = mix64(h ^ key[i]);
    return h;
}

std::size_t CosetSpace::lookup(const Point* key) const {
    const std::size_t mask = table_.size() - 1;
    for (std::size_t pos = hash_key(key) & mask;; pos = (pos + 1) & mask) {
        std::uint32_t e = table_[pos];
        if (e == kEmpty) return kEmpty;
        if (std::equal(key, key + k_, keys_.data() + static_cast<std::size_t>(e) * k_)) return e;
    }
}

std::size_t CosetSpace::insert(const Point* key) {
    if ((count_ + 1) * 2 > table_.size()) rehash();
    keys_.insert(keys_.end(), key, key + k_);
    const std::size_t mask = table_.size() - 1;
    std::size_t pos = hash_key(key) & mask;
    while (table_[pos] != kEmpty) pos = (pos + 1) & mask;
    table_[pos] = static_cast<std::uint32_t>(count_);
    return count_++;
}

void CosetSpace::rehash() {
    std::vector<std::uint32_t> t(table_.size() * 2, kEmpty);
    const std::size_t mask = t.size() - 1;
    for (std::size_t i = 0; i < count_; ++i) {
        std::size_t pos = hash_key(keys_.data() + i * k_) & mask;
        while (t[pos] != kEmpty) pos = (pos + 1) & mask;
        t[pos] = static_cast<std::uint32_t>(i);
    }
    table_.swap(t);
}

Perm CosetSpace::rep(std::size_t i) const { return a_.element_from_base_images(keys_.data() + i * k_); }

std::size_t CosetSpace::index_of(const Perm& g) const {
    compute_key(g, keybuf_.data());
    std::size_t j = lookup(keybuf_.data());
    if (j == kEmpty) throw GroupError("CosetSpace::index_of: element outside the ambient group");
    return j;
}

std::size_t CosetSpace::image(std::size_t i, const Perm& x) const { return image_of_product(rep(i), x); }

std::size_t CosetSpace::image_of_product(const Perm& g, const Perm& x) const {
    Perm h;
    mul_into(g, x, h);
    return index_of(h);
}

std::vector<Perm> double_coset_reps(const PermGroup& g, const PermGroup& r, std::size_t bound) {
    CosetSpace cs(g, r, bound);
    std::vector<char> seen(cs.size(), 0);
    std::vector<Perm> reps;
    std::vector<std::size_t> queue;
    for (std::size_t c = 0; c < cs.size(); ++c) {
        if (seen[c]) continue;
        reps.push_back(cs.rep(c));
        seen[c] = 1;
        queue.assign(1, c);
        for (std::size_t q = 0; q < queue.size(); ++q) {
            Perm rep = cs.rep(queue[q]);
            for (const Perm& x : r.generators()) {
                std::size_t d = cs.image_of_product(rep, x);
                if (!seen[d]) {
                    seen[d] = 1;
                    queue.push_back(d);
                }
            }
        }
    }
    return reps;
}

// ---------------------------------------------------------------- kernels and cores

namespace {

/// Stabiliser in cur of coset c, given that some generator moves it.
PermGroup coset_stabilizer(const PermGroup& ambient, const PermGroup& cur, const CosetSpace& cs, std::size_t c,
                           std::uint64_t seed) {
    const Perm rc = cs.rep(c);
    std::vector<std::size_t> orbit{c};
    std::vector<Perm> trans{ambient.identity()};
    std::unordered_map<std::size_t, std::size_t> pos{{c, 0}};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (const Perm& x : cur.generators()) {
            Perm t = trans[i] * x;
            std::size_t d = cs.image_of_product(rc, t);
            if (pos.count(d)) continue;
            pos[d] = orbit.size();
            orbit.push_back(d);
            trans.push_back(std::move(t));
        }
    }
    const BigInt target = cur.order() / static_cast<unsigned long>(orbit.size());
    PermGroup stab = make_subgroup(ambient, {}, seed);
    Rng rng(derive_seed(seed, 0xc05e7));
    std::vector<Perm> gens;
    // Random Schreier generators; each is exact, and the loop stops at the known order.
    while (stab.order() < target) {
        Perm k = cur.random_element(rng);
        std::size_t d = cs.image_of_product(rc, k);
        Perm s = k * trans[pos.at(d)].inverse();
        if (stab.contains(s)) continue;
        gens.push_back(s);
        stab = make_subgroup(ambient, gens, derive_seed(seed, gens.size()));
    }
    return stab;
}

}  // namespace

PermGroup action_kernel(const PermGroup& ambient, const PermGroup& k, const PermGroup& s, std::size_t bound,
                        std::uint64_t seed) {
    CosetSpace cs(ambient, s, bound);
    PermGroup cur = k;
    for (std::size_t c = 0; c < cs.size() && !cur.is_trivial(); ++c) {
        Perm rc = cs.rep(c);
        bool fixed = true;
        for (const Perm& x : cur.generators()) {
            if (cs.image_of_product(rc, x) != c) {
                fixed = false;
                break;
            }
        }
        if (!fixed) cur = coset_stabilizer(ambient, cur, cs, c, derive_seed(seed, c));
    }
    return cur;
}

CosetAction coset_action_kernel(const PermGroup& g, const PermGroup& h, std::size_t bound, std::uint64_t seed,
                                std::size_t image_build_limit) {
    CosetAction out;
    CosetSpace cs(g, h, bound);
    out.index = cs.size();
    for (const Perm& s : g.generators()) {
        std::vector<Point> img(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) img[i] = static_cast<Point>(cs.image(i, s));
        out.image_generators.emplace_back(std::move(img));
    }
    out.kernel = action_kernel(g, h, h, bound, seed);
    if (cs.size() <= image_build_limit) {
        BuildOptions o;
        o.seed = seed;
        o.known_order = g.order() / out.kernel.order();
        out.image = PermGroup::build(cs.size(), out.image_generators, o);
        out.image_built = true;
    }
    return out;
}

PermGroup core(const PermGroup& g, const PermGroup& h, std::size_t bound, std::uint64_t seed) {
    return action_kernel(g, h, h, bound, seed);
}

PermGroup intersection(const PermGroup& ambient, const PermGroup& a, const PermGroup& b, std::uint64_t seed) {
    const PermGroup& small = a.order() <= b.order() ? a : b;
    const PermGroup& other = a.order() <= b.order() ? b : a;
    if (is_subset(small, other)) return small;
    PermGroup cur = make_subgroup(ambient, {}, seed);
    std::vector<Perm> gens;
    for (const Perm& e : small.elements()) {
        if (!other.contains(e) || cur.contains(e)) continue;
        gens.push_back(e);
        cur = make_subgroup(ambient, gens, derive_seed(seed, gens.size()));
    }
    return cur;
}

PermGroup conjugate_subgroup(const PermGroup& ambient, const PermGroup& h, const Perm& g, std::uint64_t seed) {
    std::vector<Perm> gens;
    for (const Perm& x : h.generators()) gens.push_back(x.conjugate(g));
    return make_subgroup(ambient, gens, seed, h.order());
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& h, std::uint64_t seed) {
    PermGroup cur = h;
    std::vector<Perm> gens = h.generators();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size() && !changed; ++i) {
            for (const Perm& s : g.generators()) {
                Perm c = gens[i].conjugate(s);
                if (cur.contains(c)) continue;
                gens.push_back(c);
                cur = make_subgroup(g, gens, derive_seed(seed, gens.size()));
                changed = true;
                break;
            }
        }
    }
    return cur;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
    for (const Perm& x : h.generators())
        for (const Perm& s : g.generators())
            if (!h.contains(x.conjugate(s))) return false;
    return true;
}

// ---------------------------------------------------------------- normalizers

namespace {

struct Fingerprint {
    std::uint64_t a = 0, b = 0;
    bool operator==(const Fingerprint& o) const { return a == o.a && b == o.b; }
};

struct FingerprintHash {
    std::size_t operator()(const Fingerprint& f) const { return static_cast<std::size_t>(f.a ^ (f.b * 31)); }
};

/// Order-independent fingerprint of the element set of H^g.
Fingerprint conjugate_fingerprint(const std::vector<Perm>& elems, const Perm& g, std::vector<Point>& buf) {
    Fingerprint f;
    const std::size_t n = g.degree();
    buf.resize(n);
    for (const Perm& e : elems) {
        for (std::size_t x = 0; x < n; ++x) buf[g[static_cast<Point>(x)]] = g[e[static_cast<Point>(x)]];
        std::uint64_t h = 0x6a09e667f3bcc909ull;
        for (std::size_t x = 0; x < n; ++x) h = mix64(h ^ buf[x]);
        f.a += mix64(h);
        f.b ^= mix64(h ^ 0xbb67ae8584caa73bull);
    }
    return f;
}

}  // namespace

PermGroup normalizer(const PermGroup& g, const PermGroup& h, std::uint64_t seed, std::size_t max_subgroup_order) {
    if (h.is_trivial() || h.order() == g.order()) return g;
    if (h.order() > max_subgroup_order)
        throw Infeasible("normalizer: subgroup order " + h.order().get_str() + " exceeds the fingerprint bound");
    const std::vector<Perm> elems = h.elements();
    std::vector<Point> buf;
    std::vector<Perm> conj{g.identity()};
    std::unordered_map<Fingerprint, std::size_t, FingerprintHash> index;
    index[conjugate_fingerprint(elems, g.identity(), buf)] = 0;
    PermGroup n = h;
    std::vector<Perm> ngens = h.generators();
    auto normalizes = [&](const Perm& x) {
        for (const Perm& y : h.generators())
            if (!h.contains(y.conjugate(x))) return false;
        return true;
    };
    // Orbit of H under conjugation; repeated fingerprints yield Schreier generators of N_G(H).
    std::vector<Perm> pending;
    for (std::size_t i = 0; i < conj.size(); ++i) {
        for (const Perm& s : g.generators()) {
            Perm c = conj[i] * s;
            Fingerprint f = conjugate_fingerprint(elems, c, buf);
            auto it = index.find(f);
            if (it == index.end()) {
                index.emplace(f, conj.size());
                conj.push_back(std::move(c));
                continue;
            }
            Perm sg = c * conj[it->second].inverse();
            if (sg.is_identity()) continue;
            if (!normalizes(sg)) throw GroupError("normalizer: fingerprint collision between distinct conjugates");
            if (pending.size() < 64 && !n.contains(sg)) pending.push_back(std::move(sg));
        }
        if (pending.size() >= 8) {
            for (Perm& p : pending)
                if (!n.contains(p)) {
                    ngens.push_back(p);
                    n = make_subgroup(g, ngens, derive_seed(seed, ngens.size()));
                }
            pending.clear();
        }
    }
    const BigInt target = g.order() / static_cast<unsigned long>(conj.size());
    for (Perm& p : pending)
        if (!n.contains(p)) {
            ngens.push_back(p);
            n = make_subgroup(g, ngens, derive_seed(seed, ngens.size()));
        }
    // Random Schreier generators fill any remaining gap up to the known order.
    Rng rng(derive_seed(seed, 0x4e4f524d));
    while (n.order() < target) {
        Perm x = g.random_element(rng);
        auto it = index.find(conjugate_fingerprint(elems, x, buf));
        if (it == index.end()) throw GroupError("normalizer: conjugate outside the computed orbit");
        Perm sg = x * conj[it->second].inverse();
        if (n.contains(sg)) continue;
        if (!normalizes(sg)) throw GroupError("normalizer: fingerprint collision between distinct conjugates");
        ngens.push_back(sg);
        n = make_subgroup(g, ngens, derive_seed(seed, ngens.size()));
    }
    if (n.order() != target) throw GroupError("normalizer: order exceeds orbit-stabilizer bound");
    return n;
}

// ---------------------------------------------------------------- Sylow subgroups

namespace {

/// The r-part of x: x^(m) where ord(x) = r^a m with r not dividing m.
Perm r_part_element(const Perm& x, std::uint64_t r) {
    std::uint64_t o = x.order();
    std::uint64_t m = o;
    while (m % r == 0) m /= r;
    return x.pow(static_cast<long long>(m));
}

}  // namespace

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t r, std::uint64_t seed) {
    const BigInt target = r_valuation(g.order(), r).value;
    if (target == 1) return make_subgroup(g, {}, seed);
    Rng rng(derive_seed(seed, 0x5f10 + r));
    Perm x;
    for (;;) {
        x = r_part_element(g.random_element(rng), r);
        if (!x.is_identity()) break;
    }
    std::vector<Perm> gens{x};
    PermGroup s = make_subgroup(g, gens, derive_seed(seed, 1));
    while (s.order() < target) {
        PermGroup n = normalizer(g, s, derive_seed(seed, gens.size() + 100));
        bool found = false;
        for (int t = 0; t < 200 && !found; ++t) {
            Perm y = r_part_element(n.random_element(rng), r);
            if (!y.is_identity() && !s.contains(y)) {
                gens.push_back(y);
                found = true;
            }
        }
        if (!found) {
            for (const Perm& e : n.elements()) {
                Perm y = r_part_element(e, r);
                if (!y.is_identity() && !s.contains(y)) {
                    gens.push_back(y);
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw GroupError("sylow_subgroup: normalizer has no r-element outside the subgroup");
        s = make_subgroup(g, gens, derive_seed(seed, gens.size()));
        if (!is_r_group(s.order(), r)) throw GroupError("sylow_subgroup: extension is not an r-group");
    }
    return s;
}

PermGroup r_core_by_kernel(const PermGroup& h, std::uint64_t r, std::size_t bound, std::uint64_t seed) {
    PermGroup s = sylow_subgroup(h, r, seed);
    return action_kernel(h, s, s, bound, derive_seed(seed, 7));
}

PermGroup r_core_by_intersection(const PermGroup& h, std::uint64_t r, std::uint64_t seed) {
    PermGroup k = sylow_subgroup(h, r, seed);
    bool changed = true;
    std::uint64_t step = 0;
    while (changed && !k.is_trivial()) {
        changed = false;
        for (const Perm& x : h.generators()) {
            PermGroup kx = conjugate_subgroup(h, k, x, derive_seed(seed, ++step));
            if (same_group(kx, k)) continue;
            k = intersection(h, k, kx, derive_seed(seed, ++step));
            changed = true;
        }
    }
    return k;
}

// ---------------------------------------------------------------- maximal overgroups

namespace {

/// Subgroups deduplicated by order, orbit partition and exact comparison.
class SubgroupSet {
public:
    /// Index of an equal subgroup, or -1.
    long find(const PermGroup& x) const {
        auto it = buckets_.find(key(x));
        if (it == buckets_.end()) return -1;
        for (std::size_t i : it->second)
            if (same_group(x, items_[i])) return static_cast<long>(i);
        return -1;
    }
    bool add(PermGroup x) {
        if (find(x) >= 0) return false;
        buckets_[key(x)].push_back(items_.size());
        items_.push_back(std::move(x));
        return true;
    }
    std::vector<PermGroup>& items() { return items_; }

private:
    static std::string key(const PermGroup& x) {
        std::uint64_t h = 0;
        for (Point p : x.orbit_labels()) h = mix64(h ^ p);
        return x.order().get_str() + ":" + std::to_string(h);
    }
    std::map<std::string, std::vector<std::size_t>> buckets_;
    std::vector<PermGroup> items_;
};

}  // namespace

OvergroupSearch maximal_overgroups(const PermGroup& g, const PermGroup& r, std::size_t bound, std::uint64_t seed) {
    OvergroupSearch out;
    if (r.order() == g.order()) return out;
    std::vector<Perm> reps = double_coset_reps(g, r, bound);
    out.double_cosets = reps.size();
    SubgroupSet cands;
    std::uint64_t tag = 0;
    for (const Perm& x : reps) {
        ++tag;
        if (r.contains(x)) continue;
        JoinResult j = join(g, r, {x}, derive_seed(seed, tag));
        if (!j.is_ambient) cands.add(std::move(j.group));
    }
    out.proper_candidates = cands.items().size();
    if (cands.items().empty()) {
        out.members.push_back(r);
        return out;
    }
    // Close under joins with single candidates; every maximal overgroup is such an iterated join.
    const std::vector<PermGroup> base = cands.items();
    for (std::size_t i = 0; i < cands.items().size(); ++i) {
        for (std::size_t c = 0; c < base.size(); ++c) {
            const PermGroup x = cands.items()[i];
            if (is_subset(base[c], x)) continue;
            JoinResult j = join(g, x, base[c].generators(), derive_seed(seed, ++tag));
            if (!j.is_ambient) cands.add(std::move(j.group));
        }
    }
    auto& all = cands.items();
    out.closure_size = all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < all.size() && maximal; ++j)
            if (j != i && all[j].order() > all[i].order() && is_subset(all[i], all[j])) maximal = false;
        if (maximal) out.members.push_back(all[i]);
    }
    return out;
}

std::size_t conjugacy_classes_of_overgroups(const PermGroup& g, const PermGroup& r,
                                            const std::vector<PermGroup>& members, std::uint64_t seed) {
    if (members.empty()) return 0;
    PermGroup n = normalizer(g, r, seed);
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (const Perm& s : n.generators()) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                if (members[j].order() != members[i].order()) continue;
                bool same = true;
                for (const Perm& x : members[i].generators())
                    if (!members[j].contains(x.conjugate(s))) {
                        same = false;
                        break;
                    }
                if (same) {
                    parent[find(i)] = find(j);
                    break;
                }
            }
        }
    }
    std::size_t classes = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (find(i) == i) ++classes;
    return classes;
}

std::vector<std::pair<Perm, std::size_t>> conjugacy_classes_small(const PermGroup& g) {
    std::vector<Perm> elems = g.elements(100000);
    std::sort(elems.begin(), elems.end());
    std::vector<char> seen(elems.size(), 0);
    auto idx = [&](const Perm& x) {
        return static_cast<std::size_t>(std::lower_bound(elems.begin(), elems.end(), x) - elems.begin());
    };
    std::vector<std::pair<Perm, std::size_t>> out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cls{i};
        seen[i] = 1;
        for (std::size_t k = 0; k < cls.size(); ++k)
            for (const Perm& s : g.generators()) {
                std::size_t j = idx(elems[cls[k]].conjugate(s));
                if (!seen[j]) {
                    seen[j] = 1;
                    cls.push_back(j);
                }
            }
        out.emplace_back(elems[i], cls.size());
    }
    return out;
}

std::vector<PermGroup> maximal_subgroups_small(const PermGroup& g, const BigInt& size_bound, std::uint64_t seed) {
    if (g.order() > size_bound)
        throw Infeasible("maximal_subgroups_small: order " + g.order().get_str() + " exceeds bound");
    std::vector<PermGroup> out;
    if (g.is_trivial()) return out;
    if (is_prime(g.order())) {
        out.push_back(make_subgroup(g, {}, seed));
        return out;
    }
    SubgroupSet found;
    std::uint64_t tag = 0;
    for (const auto& [x, size] : conjugacy_classes_small(g)) {
        (void)size;
        if (x.is_identity() || !is_prime(x.order())) continue;
        PermGroup cx = make_subgroup(g, {x}, derive_seed(seed, ++tag));
        for (PermGroup& m : maximal_overgroups(g, cx, to_u64(g.order()), derive_seed(seed, ++tag)).members)
            found.add(std::move(m));
    }
    return found.items();
}

PermGroup intersection_of_cores(const PermGroup& g, const std::vector<PermGroup>& subs, std::uint64_t seed) {
    PermGroup cur = g;
    std::uint64_t tag = 0;
    for (const PermGroup& m : subs) {
        PermGroup c = core(g, m, to_u64(g.order()), derive_seed(seed, ++tag));
        cur = intersection(g, cur, c, derive_seed(seed, ++tag));
    }
    return cur;
}

}  // namespace unimax
