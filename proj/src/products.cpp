#include "stab/products.hpp"

#include "stab/error.hpp"

namespace stab {

const char* product_kind_name(ProductKind k) {
    switch (k) {
        case ProductKind::Direct: return "direct";
        case ProductKind::Cartesian: return "cartesian";
        case ProductKind::Strong: return "strong";
        case ProductKind::SemiStrong: return "semistrong";
        case ProductKind::Lexicographic: return "lex";
    }
    return "?";
}

ProductKind parse_product_kind(const std::string& name) {
    if (name == "direct") return ProductKind::Direct;
    if (name == "cartesian") return ProductKind::Cartesian;
    if (name == "strong") return ProductKind::Strong;
    if (name == "semistrong") return ProductKind::SemiStrong;
    if (name == "lex" || name == "lexicographic") return ProductKind::Lexicographic;
    fail(Errc::parse_error, "unknown product kind '" + name + "'");
}

ProductGraph product(const Graph& g, const Graph& h, ProductKind kind) {
    const int ng = g.order(), nh = h.order();
    ProductGraph out{Graph(ng * nh), ng, nh};
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x)
            for (int b = a; b < ng; ++b)
                for (int y = 0; y < nh; ++y) {
                    if (b == a && y <= x) continue;
                    bool ga = g.adjacent(a, b), hx = h.adjacent(x, y);
                    bool edge = false;
                    switch (kind) {
                        case ProductKind::Direct: edge = ga && hx; break;
                        case ProductKind::Cartesian:
                            edge = (a == b && hx) || (ga && x == y);
                            break;
                        case ProductKind::Strong:
                            edge = (a == b && hx) || (ga && hx) || (ga && x == y);
                            break;
                        case ProductKind::SemiStrong: edge = (ga || a == b) && hx; break;
                        case ProductKind::Lexicographic: edge = ga || (a == b && hx); break;
                    }
                    if (edge) out.graph.add_edge(out.index(a, x), out.index(b, y));
                }
    return out;
}

BundleMap::BundleMap(int left_order, std::vector<Permutation> table)
    : left_order_(left_order), table_(std::move(table)) {
    if (left_order_ < 1 ||
        table_.size() != static_cast<std::size_t>(left_order_) * left_order_)
        fail(Errc::bad_parameters, "bundle table must cover all ordered pairs");
    validate_involution();
}

BundleMap BundleMap::constant(int left_order, const Permutation& delta) {
    return from_function(left_order, [&](int, int) { return delta; });
}

BundleMap BundleMap::from_function(int left_order,
                                   const std::function<Permutation(int, int)>& f) {
    std::vector<Permutation> tbl;
    tbl.reserve(static_cast<std::size_t>(left_order) * left_order);
    for (int a = 0; a < left_order; ++a)
        for (int b = 0; b < left_order; ++b) tbl.push_back(f(a, b));
    return BundleMap(left_order, std::move(tbl));
}

void BundleMap::validate_involution() const {
    for (int a = 0; a < left_order_; ++a)
        for (int b = 0; b < left_order_; ++b)
            if (!(at(a, b) == at(b, a).inverse()))
                fail(Errc::bundle_involution_violated,
                     "p(a,b) != p(b,a)^-1 at a=" + std::to_string(a) + " b=" + std::to_string(b));
}

void BundleMap::validate_automorphisms(const Graph& h) const {
    for (const Permutation& p : table_) {
        if (p.degree() != h.order())
            fail(Errc::degree_mismatch, "bundle entry degree differs from right factor order");
        for (auto [u, v] : h.edges())
            if (!h.adjacent(p.of(u), p.of(v)))
                fail(Errc::not_an_automorphism, "bundle entry does not preserve the right factor");
    }
}

ProductGraph direct_bundle(const Graph& g, const Graph& h, const BundleMap& p) {
    if (p.left_order() != g.order())
        fail(Errc::bad_parameters, "bundle table size does not match left factor");
    p.validate_automorphisms(h);
    const int ng = g.order(), nh = h.order();
    ProductGraph out{Graph(ng * nh), ng, nh};
    // (a,x) ~ (b,y)  iff  a ~ b and x ~ y^{p(a,b)^-1}; symmetry follows from
    // the involution constraint and is asserted pairwise.
    for (int a = 0; a < ng; ++a)
        for (int b = a + 1; b < ng; ++b) {
            if (!g.adjacent(a, b)) continue;
            Permutation pinv_ab = p.at(a, b).inverse();
            Permutation pinv_ba = p.at(b, a).inverse();
            for (int x = 0; x < nh; ++x)
                for (int y = 0; y < nh; ++y) {
                    bool e_ab = h.adjacent(x, pinv_ab.of(y));
                    bool e_ba = h.adjacent(y, pinv_ba.of(x));
                    if (e_ab != e_ba)
                        fail(Errc::bundle_involution_violated,
                             "bundle adjacency is not symmetric");
                    if (e_ab) out.graph.add_edge(out.index(a, x), out.index(b, y));
                }
        }
    return out;
}

} // namespace stab
