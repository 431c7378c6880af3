#pragma once

#include <functional>
#include <string>

#include "stab/graph.hpp"

namespace stab {

enum class ProductKind { Direct, Cartesian, Strong, SemiStrong, Lexicographic };

const char* product_kind_name(ProductKind k);
ProductKind parse_product_kind(const std::string& name);

// Product graph with the stable vertex indexing (a,x) -> a*right_order + x.
struct ProductGraph {
    Graph graph;
    int left_order;
    int right_order;

    int index(int a, int x) const { return a * right_order + x; }
    std::pair<int, int> unindex(int v) const { return {v / right_order, v % right_order}; }
};

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind);

// Bundle table p(a,b) over ordered pairs of left-factor vertices. Validated
// eagerly: p(a,b) = p(b,a)^-1 everywhere and every entry is an automorphism
// of the right factor.
class BundleMap {
public:
    BundleMap(int left_order, std::vector<Permutation> table);
    static BundleMap constant(int left_order, const Permutation& delta);
    static BundleMap from_function(int left_order,
                                   const std::function<Permutation(int, int)>& f);

    int left_order() const { return left_order_; }
    const Permutation& at(int a, int b) const { return table_[a * left_order_ + b]; }

    void validate_involution() const;
    void validate_automorphisms(const Graph& h) const;

private:
    int left_order_;
    std::vector<Permutation> table_;
};

ProductGraph direct_bundle(const Graph& g, const Graph& h, const BundleMap& p);

} // namespace stab
