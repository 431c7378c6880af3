#include "stab/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "stab/autsearch.hpp"
#include "stab/error.hpp"

namespace stab {

Graph::Graph(int order) : order_(order) {
    if (order < 1) fail(Errc::bad_parameters, "graph order must be at least 1");
    adj_.assign(order_, VertexSet(order_));
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& row : adj_) twice += static_cast<long>(row.count());
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
        fail(Errc::vertex_out_of_range, "edge endpoint outside vertex range");
    if (u == v) fail(Errc::loop_rejected, "loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order_; ++u)
        for (int v = static_cast<int>(adj_[u].find_next(u)); v != -1 && v < order_;
             v = static_cast<int>(adj_[u].find_next(v)))
            out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(order_);
    for (int v = 0; v < order_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(order);
    for (auto [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    if (g.order() < 2) fail(Errc::trivial_graph, "complement needs order >= 2");
    Graph c(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

BasicProfile classify_basic(const Graph& g) {
    BasicProfile p;
    const int n = g.order();

    // Connectivity and 2-coloring in one BFS sweep over all components.
    std::vector<int> color(n, -1);
    bool bipartite = true;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (color[start] != -1) continue;
        ++components;
        color[start] = 0;
        std::deque<int> q{start};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            const VertexSet& nb = g.neighbors(v);
            for (int w = static_cast<int>(nb.find_first()); w != -1;
                 w = static_cast<int>(nb.find_next(w))) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    bipartite = false;
                }
            }
        }
    }
    p.connected = (components == 1);
    if (bipartite) {
        std::vector<int> a, b;
        for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
        p.bipartition = std::make_pair(std::move(a), std::move(b));
    }

    for (int u = 0; u < n && !p.twin_witness; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.neighbors(u) == g.neighbors(v)) {
                p.twin_witness = std::make_pair(u, v);
                break;
            }
    return p;
}

CirculantSpec CirculantSpec::make(int n, const std::vector<int>& representatives) {
    if (n < 2) fail(Errc::bad_parameters, "circulant modulus must be at least 2");
    CirculantSpec spec;
    spec.n = n;
    VertexSet in(n);
    for (int r : representatives) {
        int x = ((r % n) + n) % n;
        if (x == 0) fail(Errc::zero_in_connection_set, "0 is not a valid connection element");
        in.set(x);
        in.set((n - x) % n);
    }
    for (int x = 1; x < n; ++x)
        if (in.test(x)) spec.s.push_back(x);
    return spec;
}

bool CirculantSpec::operator<(const CirculantSpec& o) const {
    if (n != o.n) return n < o.n;
    return s < o.s;
}

CirculantSpec CirculantSpec::parse(const std::string& text) {
    if (text.rfind("c:", 0) != 0) fail(Errc::parse_error, "circulant spec must start with 'c:'");
    auto second = text.find(':', 2);
    if (second == std::string::npos) fail(Errc::parse_error, "missing ':' in circulant spec");
    int n = 0;
    try {
        n = std::stoi(text.substr(2, second - 2));
    } catch (const std::exception&) {
        fail(Errc::parse_error, "bad modulus in circulant spec");
    }
    std::vector<int> reps;
    std::stringstream body(text.substr(second + 1));
    std::string tok;
    while (std::getline(body, tok, ',')) {
        if (tok.empty()) continue;
        try {
            reps.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            fail(Errc::parse_error, "bad residue '" + tok + "' in circulant spec");
        }
    }
    if (reps.empty()) fail(Errc::parse_error, "empty connection set");
    return make(n, reps);
}

std::string CirculantSpec::to_string() const {
    std::ostringstream os;
    os << "c:" << n << ':';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    return os.str();
}

Graph circulant(const CirculantSpec& spec) {
    if (spec.n < 2) fail(Errc::bad_parameters, "circulant modulus must be at least 2");
    VertexSet set(spec.n);
    for (int x : spec.s) {
        if (x <= 0 || x >= spec.n) {
            if (((x % spec.n) + spec.n) % spec.n == 0)
                fail(Errc::zero_in_connection_set, "0 in connection set");
            fail(Errc::bad_parameters, "connection element outside 1..n-1");
        }
        set.set(x);
    }
    for (int x = 1; x < spec.n; ++x)
        if (set.test(x) != set.test(spec.n - x))
            fail(Errc::non_inverse_closed, "connection set not closed under negation");
    Graph g(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int x : spec.s) {
            int j = (i + x) % spec.n;
            if (i < j) g.add_edge(i, j);
        }
    return g;
}

Graph induced(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) fail(Errc::empty_subset, "induced subgraph needs a nonempty vertex set");
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (v < 0 || v >= g.order()) fail(Errc::vertex_out_of_range, "induced vertex");
    Graph h(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = i + 1; j < sorted.size(); ++j)
            if (g.adjacent(sorted[i], sorted[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p) {
    if (g.order() != h.order() || p.degree() != g.order()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet& nb = g.neighbors(u);
        for (int v = static_cast<int>(nb.find_next(u)); v != -1;
             v = static_cast<int>(nb.find_next(v)))
            if (!h.adjacent(p.of(u), p.of(v))) return false;
    }
    return true;
}

namespace {

std::optional<Permutation> affine_isomorphism(const Graph& g, const Graph& h) {
    const int n = g.order();
    for (int r = 1; r < n; ++r) {
        if (std::gcd(r, n) != 1) continue;
        for (int c = 0; c < n; ++c) {
            std::vector<int> img(n);
            for (int x = 0; x < n; ++x) img[x] = (r * x + c) % n;
            Permutation p{std::move(img)};
            if (is_isomorphism(g, h, p)) return p;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Permutation> isomorphism(const Graph& g, const Graph& h,
                                       unsigned long long node_budget) {
    if (g.order() != h.order()) return std::nullopt;
    if (g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    if (auto p = affine_isomorphism(g, h)) return p;
    return isomorphism_backtrack(g, h, node_budget);
}

Graph cycle_graph(int n) {
    if (n < 3) fail(Errc::bad_parameters, "cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph read_graph_text(std::istream& in) {
    std::string line;
    int n = -1;
    std::optional<Graph> g;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (ls >> n) {
                if (n < 1) fail(Errc::parse_error, "graph order must be positive");
                g.emplace(n);
            }
            continue;
        }
        int u, v;
        if (ls >> u >> v) {
            if (!g->adjacent(u, v)) g->add_edge(u, v); // duplicates ignored
        }
    }
    if (!g) fail(Errc::parse_error, "missing graph order line");
    return *g;
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace stab
