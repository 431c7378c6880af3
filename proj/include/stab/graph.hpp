#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "stab/perm.hpp"

namespace stab {

using VertexSet = boost::dynamic_bitset<>;

// Finite simple undirected graph. Adjacency is kept as one bitset row per
// vertex; rows stay symmetric and loop-free by construction.
class Graph {
public:
    explicit Graph(int order);

    int order() const { return order_; }
    long edge_count() const;

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }
    std::vector<int> degree_sequence() const; // sorted ascending

    void add_edge(int u, int v);
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

    bool operator==(const Graph& o) const { return order_ == o.order_ && adj_ == o.adj_; }

private:
    int order_;
    std::vector<VertexSet> adj_;
};

struct BasicProfile {
    bool connected = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
    std::optional<std::pair<int, int>> twin_witness; // least pair with equal neighborhoods
    bool bipartite() const { return bipartition.has_value(); }
    bool r_thin() const { return !twin_witness.has_value(); }
};

// Connection set of a circulant graph on Z_n: inverse-closed, 0-free, stored
// fully expanded and sorted.
struct CirculantSpec {
    int n = 0;
    std::vector<int> s;

    // Closes the given representatives under r -> n-r and canonicalizes.
    static CirculantSpec make(int n, const std::vector<int>& representatives);
    // Parses "c:<n>:<s1,s2,...>".
    static CirculantSpec parse(const std::string& text);

    std::string to_string() const;
    bool operator==(const CirculantSpec& o) const { return n == o.n && s == o.s; }
    bool operator<(const CirculantSpec& o) const;
};

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edge_list);
Graph complement(const Graph& g);
BasicProfile classify_basic(const Graph& g);
Graph circulant(const CirculantSpec& spec);
Graph induced(const Graph& g, const std::vector<int>& vs);

// Vertex bijection carrying edges of g exactly onto edges of h, if one
// exists. Tries affine maps x -> rx+c first, then partition backtracking.
std::optional<Permutation> isomorphism(const Graph& g, const Graph& h,
                                       unsigned long long node_budget = 0);

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p);

// Small constructors used throughout the tests and constructions.
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);

// Graph text format: first line `n`, then `u v` lines; `#` comments and blank
// lines are skipped, duplicate edges ignored.
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

} // namespace stab
