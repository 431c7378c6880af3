#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "stab/bigint.hpp"

namespace stab {

// Permutation of {0..n-1}. images_[x] is the image of x; group actions are
// written on the right, so compose(a, b) applies a first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    // Cycle notation helper for tests and constructions: unlisted points are fixed.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(images_.size()); }
    int of(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;
    bool is_derangement() const;

    friend Permutation compose(const Permutation& a, const Permutation& b);

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    std::string to_string() const;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);

struct PermGroup {
    int degree = 0;
    std::vector<Permutation> generators;
    BigInt order = 1;
};

// Exact order of the generated group via a stabilizer chain (Schreier-Sims).
// Base points are picked greedily, largest orbit first.
BigInt group_order(int degree, const std::vector<Permutation>& generators);

// Stabilizer chain with a caller-chosen base. Used for membership tests and
// for enumerating group elements in lexicographic image order.
class StabilizerChain {
public:
    // Greedy base (largest orbit first).
    static StabilizerChain build(int degree, const std::vector<Permutation>& generators);
    // Base forced to 0,1,...,degree-1 so chain DFS visits elements in lex
    // order of their image vectors.
    static StabilizerChain build_natural_base(int degree, const std::vector<Permutation>& generators);

    BigInt order() const;
    bool contains(const Permutation& p) const;
    int degree() const { return degree_; }

    // DFS over the chain in lex order of image vectors; calls visit(element)
    // on each leaf until visit returns true (found) or node_cap is exhausted.
    // Returns 1 if visit accepted a leaf, 0 if the whole group was exhausted,
    // -1 if node_cap ran out. prune(level, partial) may cut subtrees: it sees
    // the partial product with images of base points 0..level fixed and
    // returns false to skip the subtree. Only valid with natural base.
    template <typename Visit, typename Prune>
    int dfs_lex(Visit&& visit, Prune&& prune, unsigned long long node_cap) const;

    struct Level {
        int base_point = -1;
        std::vector<Permutation> gens;          // strong generators for this level
        std::vector<int> orbit;                 // orbit of base_point, insertion order
        std::vector<Permutation> transversal;   // transversal[i] maps base_point -> orbit[i]
    };
    const std::vector<Level>& levels() const { return levels_; }

private:
    StabilizerChain(int degree, bool natural_base);
    void extend(const Permutation& g);
    // Sift returns the residue of p after stripping transversal factors.
    Permutation sift(const Permutation& p, int& drop_level) const;
    void add_generator_at(std::size_t level, const Permutation& g);
    void rebuild_orbit(std::size_t level);
    int pick_base_point(const Permutation& moved_by) const;

    int degree_;
    bool natural_base_;
    std::vector<Level> levels_;
};

template <typename Visit, typename Prune>
int StabilizerChain::dfs_lex(Visit&& visit, Prune&& prune, unsigned long long node_cap) const {
    unsigned long long nodes = 0;
    // Recursive lambda over levels; partial is the product of chosen
    // transversal elements (applied deepest-last so earlier base points stay
    // fixed by deeper choices).
    Permutation id = Permutation::identity(degree_);
    std::vector<std::pair<int, Permutation>> stack; // (orbit candidate image, partial)
    // Simple recursion via std::function-free helper.
    struct Rec {
        const StabilizerChain& c;
        Visit& visit;
        Prune& prune;
        unsigned long long& nodes;
        unsigned long long cap;
        int run(std::size_t level, const Permutation& partial) {
            if (level == c.levels_.size()) return visit(partial) ? 1 : 0;
            const Level& lv = c.levels_[level];
            // Candidate images of base_point in ascending order.
            std::vector<std::pair<int, const Permutation*>> cands;
            cands.reserve(lv.orbit.size());
            for (std::size_t i = 0; i < lv.orbit.size(); ++i)
                cands.emplace_back(partial.of(lv.orbit[i]), &lv.transversal[i]);
            std::sort(cands.begin(), cands.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            for (auto& [img, t] : cands) {
                if (++nodes > cap) return -1;
                Permutation next = compose(*t, partial);
                if (!prune(static_cast<int>(level), next)) continue;
                int r = run(level + 1, next);
                if (r != 0) return r;
            }
            return 0;
        }
    } rec{*this, visit, prune, nodes, node_cap};
    return rec.run(0, id);
}

} // namespace stab
