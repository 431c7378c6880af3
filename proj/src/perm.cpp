#include "stab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stab/error.hpp"

namespace stab {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int x : images_) {
        if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x])
            fail(Errc::bad_parameters, "image table is not a bijection");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cyc : cycles) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i];
            int to = cyc[(i + 1) % cyc.size()];
            if (from < 0 || from >= degree || to < 0 || to >= degree)
                fail(Errc::vertex_out_of_range, "cycle entry out of range");
            p.images_[from] = to;
        }
    }
    return Permutation(p.images_); // re-validate bijection
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) img[images_[x]] = static_cast<int>(x);
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x)) return false;
    return true;
}

bool Permutation::is_derangement() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] == static_cast<int>(x)) return false;
    return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) fail(Errc::degree_mismatch, "compose");
    std::vector<int> img(a.images_.size());
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = b.images_[a.images_[x]];
    Permutation p;
    p.images_ = std::move(img);
    return p;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) os << ',';
        os << images_[i];
    }
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------- chain ----

StabilizerChain::StabilizerChain(int degree, bool natural_base)
    : degree_(degree), natural_base_(natural_base) {
    if (natural_base_) {
        levels_.resize(degree);
        for (int i = 0; i < degree; ++i) {
            levels_[i].base_point = i;
            levels_[i].orbit = {i};
            levels_[i].transversal = {Permutation::identity(degree)};
        }
    }
}

int StabilizerChain::pick_base_point(const Permutation& g) const {
    // Largest cycle of g first; ties broken by smallest point.
    std::vector<char> seen(degree_, 0);
    int best = -1, best_len = 0;
    for (int s = 0; s < degree_; ++s) {
        if (seen[s] || g.of(s) == s) continue;
        int len = 0;
        for (int x = s; !seen[x]; x = g.of(x)) {
            seen[x] = 1;
            ++len;
        }
        if (len > best_len) {
            best_len = len;
            best = s;
        }
    }
    return best;
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
    Level& lv = levels_[level];
    lv.orbit.assign(1, lv.base_point);
    lv.transversal.assign(1, Permutation::identity(degree_));
    std::vector<int> at(degree_, -1);
    at[lv.base_point] = 0;
    // Effective generators at this level: everything stored at level or deeper.
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        int p = lv.orbit[i];
        for (std::size_t j = level; j < levels_.size(); ++j) {
            for (const Permutation& s : levels_[j].gens) {
                int q = s.of(p);
                if (at[q] < 0) {
                    at[q] = static_cast<int>(lv.orbit.size());
                    lv.orbit.push_back(q);
                    lv.transversal.push_back(compose(lv.transversal[i], s));
                }
            }
        }
    }
}

Permutation StabilizerChain::sift(const Permutation& p, int& drop_level) const {
    Permutation res = p;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        const Level& lv = levels_[i];
        int img = res.of(lv.base_point);
        if (img == lv.base_point) continue;
        auto it = std::find(lv.orbit.begin(), lv.orbit.end(), img);
        if (it == lv.orbit.end()) {
            drop_level = static_cast<int>(i);
            return res;
        }
        res = compose(res, lv.transversal[it - lv.orbit.begin()].inverse());
    }
    drop_level = static_cast<int>(levels_.size());
    return res;
}

void StabilizerChain::add_generator_at(std::size_t level, const Permutation& g) {
    if (!natural_base_ && level == levels_.size()) {
        Level lv;
        lv.base_point = pick_base_point(g);
        levels_.push_back(std::move(lv));
    }
    levels_[level].gens.push_back(g);
}

void StabilizerChain::extend(const Permutation& g) {
    if (g.is_identity()) return;
    int drop = 0;
    Permutation res = sift(g, drop);
    if (res.is_identity()) return;
    // The residue fixes all base points above `drop`, so it belongs there;
    // a fresh level is created when it fell off the end of a greedy chain.
    add_generator_at(static_cast<std::size_t>(drop), res);

    // Re-close the chain: process Schreier generators until every level at or
    // above the touched one is closed. A new residue always lands strictly
    // deeper than the level that produced it, so `i` walks back down after
    // each excursion.
    int i = static_cast<int>(std::min<std::size_t>(drop, levels_.size() - 1));
    while (i >= 0) {
        rebuild_orbit(i);
        Level& lv = levels_[i];
        bool complete = true;
        for (std::size_t pi = 0; pi < lv.orbit.size() && complete; ++pi) {
            for (std::size_t j = i; j < levels_.size() && complete; ++j) {
                for (const Permutation& s : levels_[j].gens) {
                    int q = s.of(lv.orbit[pi]);
                    auto it = std::find(lv.orbit.begin(), lv.orbit.end(), q);
                    Permutation schreier =
                        compose(compose(lv.transversal[pi], s),
                                lv.transversal[it - lv.orbit.begin()].inverse());
                    if (schreier.is_identity()) continue;
                    int d2 = 0;
                    Permutation res2 = sift(schreier, d2);
                    if (res2.is_identity()) continue;
                    add_generator_at(static_cast<std::size_t>(d2), res2);
                    i = static_cast<int>(std::min<std::size_t>(d2, levels_.size() - 1));
                    complete = false;
                    break;
                }
            }
        }
        if (complete) --i;
    }
}

StabilizerChain StabilizerChain::build(int degree, const std::vector<Permutation>& generators) {
    StabilizerChain c(degree, false);
    for (const Permutation& g : generators) {
        if (g.degree() != degree) fail(Errc::degree_mismatch, "generator degree");
        c.extend(g);
    }
    return c;
}

StabilizerChain StabilizerChain::build_natural_base(int degree,
                                                    const std::vector<Permutation>& generators) {
    StabilizerChain c(degree, true);
    for (const Permutation& g : generators) {
        if (g.degree() != degree) fail(Errc::degree_mismatch, "generator degree");
        c.extend(g);
    }
    return c;
}

BigInt StabilizerChain::order() const {
    BigInt n = 1;
    for (const Level& lv : levels_) n *= static_cast<unsigned>(lv.orbit.size());
    return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    int drop = 0;
    return sift(p, drop).is_identity();
}

BigInt group_order(int degree, const std::vector<Permutation>& generators) {
    return StabilizerChain::build(degree, generators).order();
}

} // namespace stab
