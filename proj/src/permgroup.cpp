#include "unimax/permgroup.hpp"

#include <algorithm>

namespace unimax {

namespace {

/// Product-replacement random elements for groups whose chain is still incomplete.
class ProductReplacement {
public:
    ProductReplacement(std::size_t degree, const std::vector<Perm>& gens, Rng& rng) : rng_(rng), acc_(degree) {
        if (gens.empty()) {
            slots_.assign(1, Perm(degree));
            return;
        }
        while (slots_.size() < 10)
            for (const Perm& g : gens) slots_.push_back(g);
        for (int i = 0; i < 40; ++i) next();
    }

    const Perm& next() {
        if (slots_.size() < 2) return acc_;
        std::size_t i = uniform_index(rng_, slots_.size());
        std::size_t j = uniform_index(rng_, slots_.size() - 1);
        if (j >= i) ++j;
        if (rng_() & 1) {
            mul_into(slots_[i], slots_[j], tmp_);
        } else {
            mul_into(slots_[i], slots_[j].inverse(), tmp_);
        }
        std::swap(slots_[i], tmp_);
        mul_into(acc_, slots_[i], tmp_);
        std::swap(acc_, tmp_);
        return acc_;
    }

private:
    Rng& rng_;
    std::vector<Perm> slots_;
    Perm acc_;
    Perm tmp_;
};

}  // namespace

class ChainBuilder {
public:
    ChainBuilder(PermGroup& g, const BuildOptions& opts) : g_(g), opts_(opts), rng_(derive_seed(opts.seed, 0x5eed)) {}

    void run() {
        for (Point p : opts_.base_prefix) {
            if (p >= g_.degree_) throw GroupError("base prefix point out of range");
            new_level(p);
        }
        for (const Perm& s : g_.gens_) absorb(s);
        recompute_order();
        if (g_.gens_.empty()) return;
        if (exact_reached() || check_stop()) return;
        random_phase();
        if (exact_reached() || g_.exceeded_) return;
        deterministic_phase();
        recompute_order();
        if (opts_.known_order && !g_.exceeded_ && g_.order_ != *opts_.known_order)
            throw GroupError("BSGS order " + g_.order_.get_str() + " disagrees with the known order " +
                             opts_.known_order->get_str());
    }

    /// Seed the chain with existing levels (their orbits and transversals are kept).
    void adopt_levels(const std::vector<PermGroup::Level>& levels) { g_.levels_ = levels; }

    void run_from_adopted(const std::vector<Perm>& extra) {
        for (const Perm& s : extra) absorb(s);
        recompute_order();
        if (exact_reached() || check_stop()) return;
        random_phase();
        if (exact_reached() || g_.exceeded_) return;
        deterministic_phase();
        recompute_order();
    }

private:
    bool exact_reached() const { return opts_.known_order && g_.order_ == *opts_.known_order; }

    bool check_stop() {
        if (opts_.stop_above && g_.order_ > *opts_.stop_above) g_.exceeded_ = true;
        return g_.exceeded_;
    }

    void new_level(Point p) {
        PermGroup::Level lv;
        lv.point = p;
        lv.where.assign(g_.degree_, -1);
        lv.where[p] = 0;
        lv.orbit.push_back(p);
        lv.u.emplace_back(g_.degree_);
        lv.u_inv.emplace_back(g_.degree_);
        g_.levels_.push_back(std::move(lv));
    }

    void recompute_order() {
        BigInt o = 1;
        for (const auto& lv : g_.levels_) o *= static_cast<unsigned long>(lv.orbit.size());
        g_.order_ = o;
    }

    /// Extend the basic orbit of level i using its current generators.
    void extend_orbit(std::size_t i) {
        auto& lv = g_.levels_[i];
        for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
            for (std::size_t s = 0; s < g_.levels_[i].gens.size(); ++s) {
                Point y = lv.gens[s][lv.orbit[k]];
                if (lv.where[y] >= 0) continue;
                lv.where[y] = static_cast<std::int32_t>(lv.orbit.size());
                lv.orbit.push_back(y);
                lv.u.push_back(lv.u[k] * lv.gens[s]);
                lv.u_inv.push_back(lv.u.back().inverse());
            }
        }
    }

    /// Add a non-identity residue that fixes the base points before level j.
    void add_strong(const Perm& h, std::size_t j) {
        if (j == g_.levels_.size()) {
            Point moved = 0;
            while (h[moved] == moved) ++moved;
            new_level(moved);
        }
        for (std::size_t l = 0; l <= j; ++l) {
            g_.levels_[l].gens.push_back(h);
            extend_orbit(l);
        }
    }

    /// Returns true when g contributed a new strong generator.
    bool absorb(const Perm& g, std::size_t start = 0) {
        std::size_t j = g_.sift(g, residue_, start);
        if (j == g_.levels_.size() && residue_.is_identity()) return false;
        Perm h = residue_;
        add_strong(h, j);
        last_added_level_ = j;
        return true;
    }

    void random_phase() {
        ProductReplacement pr(g_.degree_, g_.gens_, rng_);
        const int needed = opts_.quiet_rounds ? *opts_.quiet_rounds : (opts_.known_order ? 400 : 24);
        int quiet = 0;
        while (quiet < needed) {
            if (absorb(pr.next())) {
                quiet = 0;
                recompute_order();
                if (exact_reached() || check_stop()) return;
            } else {
                ++quiet;
            }
        }
    }

    /// Classical Schreier-Sims closure: every Schreier generator sifts to the identity.
    void deterministic_phase() {
        std::size_t i = g_.levels_.size();
        Perm tmp, sg;
        while (i-- > 0) {
            bool restarted = false;
            for (std::size_t k = 0; !restarted && k < g_.levels_[i].orbit.size(); ++k) {
                for (std::size_t s = 0; s < g_.levels_[i].gens.size(); ++s) {
                    const Perm& gen = g_.levels_[i].gens[s];
                    const auto& lvi = g_.levels_[i];
                    Point img = gen[lvi.orbit[k]];
                    mul_into(lvi.u[k], gen, tmp);
                    mul_into(tmp, lvi.u_inv[static_cast<std::size_t>(lvi.where[img])], sg);
                    if (sg.is_identity()) continue;
                    if (absorb(sg, i + 1)) {
                        recompute_order();
                        if (check_stop()) return;
                        i = last_added_level_ + 1;
                        restarted = true;
                        break;
                    }
                }
            }
        }
    }

    PermGroup& g_;
    const BuildOptions& opts_;
    Rng rng_;
    Perm residue_;
    std::size_t last_added_level_ = 0;
};

PermGroup PermGroup::trivial(std::size_t degree, const std::vector<Point>& base_prefix) {
    BuildOptions o;
    o.base_prefix = base_prefix;
    return build(degree, {}, o);
}

PermGroup PermGroup::build(std::size_t degree, const std::vector<Perm>& gens, const BuildOptions& opts) {
    PermGroup g;
    g.degree_ = degree;
    for (const Perm& s : gens) {
        if (s.degree() != degree) throw GroupError("build_group: inconsistent generator degrees");
        if (!s.is_identity()) g.gens_.push_back(s);
    }
    ChainBuilder(g, opts).run();
    return g;
}

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (const auto& lv : levels_) b.push_back(lv.point);
    return b;
}

std::size_t PermGroup::sift(const Perm& g, Perm& residue, std::size_t start) const {
    residue = g;
    Perm tmp;
    for (std::size_t i = start; i < levels_.size(); ++i) {
        const auto& lv = levels_[i];
        Point b = residue[lv.point];
        std::int32_t w = lv.where[b];
        if (w < 0) return i;
        if (w == 0) continue;
        mul_into(residue, lv.u_inv[static_cast<std::size_t>(w)], tmp);
        std::swap(residue, tmp);
    }
    return levels_.size();
}

bool PermGroup::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    Perm r;
    return sift(g, r) == levels_.size() && r.is_identity();
}

Perm PermGroup::random_element(Rng& rng) const {
    Perm g(degree_), tmp;
    for (std::size_t i = levels_.size(); i-- > 0;) {
        const auto& lv = levels_[i];
        const Perm& u = lv.u[uniform_index(rng, lv.orbit.size())];
        mul_into(g, u, tmp);
        std::swap(g, tmp);
    }
    return g;
}

std::vector<Perm> PermGroup::elements(std::size_t limit) const {
    if (order_ > limit) throw GroupError("elements: group order " + order_.get_str() + " exceeds limit");
    std::vector<Perm> out{Perm(degree_)};
    // Elements are u_k ... u_1; extend from the deepest level outward.
    for (std::size_t i = levels_.size(); i-- > 0;) {
        const auto& lv = levels_[i];
        if (lv.orbit.size() == 1) continue;
        std::vector<Perm> next;
        next.reserve(out.size() * lv.orbit.size());
        for (const Perm& e : out)
            for (const Perm& u : lv.u) next.push_back(e * u);
        out.swap(next);
    }
    return out;
}

Perm PermGroup::element_from_base_images(const Point* imgs) const {
    Perm right(degree_), right_inv(degree_), tmp;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const auto& lv = levels_[i];
        Point t = right_inv[imgs[i]];
        std::int32_t w = lv.where[t];
        if (w < 0) throw GroupError("element_from_base_images: images not realised by the group");
        if (w == 0) continue;
        mul_into(lv.u[static_cast<std::size_t>(w)], right, tmp);
        std::swap(right, tmp);
        mul_into(right_inv, lv.u_inv[static_cast<std::size_t>(w)], tmp);
        std::swap(right_inv, tmp);
    }
    return right;
}

std::vector<Point> PermGroup::orbit_labels() const {
    std::vector<Point> label(degree_);
    std::vector<char> seen(degree_, 0);
    for (Point p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        std::vector<Point> orb{p};
        seen[p] = 1;
        for (std::size_t k = 0; k < orb.size(); ++k)
            for (const Perm& s : gens_) {
                Point y = s[orb[k]];
                if (!seen[y]) {
                    seen[y] = 1;
                    orb.push_back(y);
                }
            }
        for (Point y : orb) label[y] = p;
    }
    return label;
}

PermGroup make_subgroup(const PermGroup& ambient, const std::vector<Perm>& gens, std::uint64_t seed,
                        std::optional<BigInt> known_order) {
    BuildOptions o;
    o.seed = seed;
    o.base_prefix = ambient.base();
    o.known_order = std::move(known_order);
    return PermGroup::build(ambient.degree(), gens, o);
}

bool is_subset(const PermGroup& a, const PermGroup& b) {
    if (a.order() > b.order()) return false;
    for (const Perm& g : a.generators())
        if (!b.contains(g)) return false;
    return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) { return a.order() == b.order() && is_subset(a, b); }

JoinResult join(const PermGroup& ambient, const PermGroup& x, const std::vector<Perm>& extra, std::uint64_t seed) {
    JoinResult out;
    std::vector<Perm> fresh;
    for (const Perm& e : extra)
        if (!x.contains(e)) fresh.push_back(e);
    if (fresh.empty()) {
        out.group = x;
        out.is_ambient = x.order() == ambient.order();
        return out;
    }
    BuildOptions o;
    o.seed = seed;
    o.known_order = ambient.order();
    o.stop_above = ambient.order() / 2;
    o.quiet_rounds = 16;
    PermGroup g;
    g.degree_ = x.degree();
    g.gens_ = x.generators();
    for (const Perm& e : fresh) g.gens_.push_back(e);
    ChainBuilder cb(g, o);
    cb.adopt_levels(x.levels());
    cb.run_from_adopted(fresh);
    if (g.exceeded() || g.order() == ambient.order()) {
        out.is_ambient = true;
        return out;
    }
    out.group = std::move(g);
    return out;
}

PermGroup join_groups(const PermGroup& ambient, const PermGroup& a, const PermGroup& b, std::uint64_t seed) {
    const PermGroup& big = a.order() >= b.order() ? a : b;
    const PermGroup& small = a.order() >= b.order() ? b : a;
    JoinResult j = join(ambient, big, small.generators(), seed);
    if (j.is_ambient) return ambient;
    return j.group;
}

}  // namespace unimax
