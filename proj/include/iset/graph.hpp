#ifndef ISET_GRAPH_HPP
#define ISET_GRAPH_HPP

// Simple undirected graph on vertices 0..n-1 with adjacency lists, plus the
// structural utilities the rest of the library leans on: component
// decomposition, Prufer encoding/decoding for labelled trees, line graphs,
// a plain-text edge-list file format, and a few named graph families.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iset {

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
        if (has_edge(u, v)) return;
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::find(a.begin(), a.end(), v) != a.end();
    }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
        return d;
    }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> es;
        es.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n(); ++u)
            for (int v : neighbors(u))
                if (u < v) es.emplace_back(u, v);
        std::sort(es.begin(), es.end());
        return es;
    }

    // Sort each adjacency list; handy for deterministic traversal order.
    void sort_adjacency() {
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::vector<int> component_of(int start) const {
        std::vector<char> seen(static_cast<std::size_t>(n()), 0);
        std::vector<int> stack = {start}, comp;
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        return comp;
    }

    std::vector<std::vector<int>> components() const {
        std::vector<char> seen(static_cast<std::size_t>(n()), 0);
        std::vector<std::vector<int>> comps;
        for (int s = 0; s < n(); ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            auto comp = component_of(s);
            for (int v : comp) seen[static_cast<std::size_t>(v)] = 1;
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_connected() const { return n() == 0 || static_cast<int>(component_of(0).size()) == n(); }
    bool is_tree() const { return is_connected() && m_ == n() - 1; }

    bool is_independent_set(const std::vector<int>& s) const {
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (has_edge(s[i], s[j])) return false;
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n()) throw std::out_of_range("Graph: vertex out of range");
    }

    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

inline Graph graph_from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    for (const auto& [u, v] : pairs) g.add_edge(u, v);  // duplicates/reversals collapse
    g.sort_adjacency();
    return g;
}

// N_sigma: number of vertices outside s with no neighbor in s.  Requires s to
// be an independent set.
inline int unconnected_count(const Graph& g, const std::vector<int>& s) {
    if (!g.is_independent_set(s))
        throw std::invalid_argument("unconnected_count: set is not independent");
    std::vector<char> in_s(static_cast<std::size_t>(g.n()), 0), blocked(static_cast<std::size_t>(g.n()), 0);
    for (int v : s) {
        in_s[static_cast<std::size_t>(v)] = 1;
        for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
    }
    int count = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!in_s[static_cast<std::size_t>(v)] && !blocked[static_cast<std::size_t>(v)]) ++count;
    return count;
}

// True iff no induced K_{1,3}: direct scan of 3-subsets of each neighborhood.
inline bool is_claw_free(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (std::size_t l = j + 1; l < nb.size(); ++l)
                    if (!g.has_edge(nb[i], nb[l]) && !g.has_edge(nb[j], nb[l])) return false;
            }
    }
    return true;
}

// Induced subgraph on `vertices` (need not be sorted); vertex i of the result
// corresponds to vertices[i] of g.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    Graph h(static_cast<int>(vertices.size()));
    std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i)) h.add_edge(static_cast<int>(i), j);
        }
    return h;
}

// Line graph: one vertex per edge of g, adjacent iff the edges share an
// endpoint.  Returned together with the edge order used for the vertices.
inline std::pair<Graph, std::vector<std::pair<int, int>>> line_graph(const Graph& g) {
    auto es = g.edges();
    Graph lg(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                lg.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return {std::move(lg), std::move(es)};
}

// ----------------------------------------------------------------------------
// Prufer codes: bijection between labelled trees on n >= 2 vertices and
// sequences in {0..n-1}^(n-2).

inline std::vector<int> prufer_encode(const Graph& tree) {
    const int n = tree.n();
    if (!tree.is_tree()) throw std::invalid_argument("prufer_encode: input is not a tree");
    if (n < 2) throw std::invalid_argument("prufer_encode: need at least 2 vertices");
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = tree.degree(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<int> code;
    code.reserve(static_cast<std::size_t>(n - 2));
    for (int step = 0; step < n - 2; ++step) {
        int leaf = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
                leaf = v;
                break;
            }
        int parent = -1;
        for (int w : tree.neighbors(leaf))
            if (!removed[static_cast<std::size_t>(w)]) {
                parent = w;
                break;
            }
        code.push_back(parent);
        removed[static_cast<std::size_t>(leaf)] = 1;
        --deg[static_cast<std::size_t>(leaf)];
        --deg[static_cast<std::size_t>(parent)];
    }
    return code;
}

inline Graph prufer_decode(const std::vector<int>& code, int n) {
    if (n < 2) throw std::invalid_argument("prufer_decode: need at least 2 vertices");
    if (static_cast<int>(code.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: code length must be n-2");
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int c : code) {
        if (c < 0 || c >= n) throw std::invalid_argument("prufer_decode: symbol out of range");
        ++deg[static_cast<std::size_t>(c)];
    }
    Graph tree(n);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int c : code) {
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
                tree.add_edge(v, c);
                used[static_cast<std::size_t>(v)] = 1;
                --deg[static_cast<std::size_t>(c)];
                break;
            }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1) {
            if (a < 0) a = v; else b = v;
        }
    tree.add_edge(a, b);
    return tree;
}

// All n^(n-2) labelled trees on n vertices (n <= ~8 is practical).
inline std::vector<Graph> all_labelled_trees(int n) {
    if (n == 1) return {Graph(1)};
    std::vector<Graph> trees;
    std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        trees.push_back(prufer_decode(code, n));
        int i = static_cast<int>(code.size()) - 1;
        while (i >= 0 && code[static_cast<std::size_t>(i)] == n - 1) {
            code[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++code[static_cast<std::size_t>(i)];
    }
    return trees;
}

// ----------------------------------------------------------------------------
// Named families.

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

// ----------------------------------------------------------------------------
// Edge-list file format.
//
//   first non-comment line:  "<n> <m>"
//   then m lines:            "<u> <v>"        (0-indexed endpoints)
//   comments:                lines starting with '#'
//   planted set (optional):  "# sigma: v1 v2 ..." comment line
//
// Reading tolerates comments anywhere; writing puts the sigma comment last.

struct GraphFile {
    Graph graph;
    std::optional<std::vector<int>> sigma;
};

inline GraphFile read_graph(std::istream& in) {
    GraphFile gf;
    std::string line;
    std::optional<std::vector<int>> sigma;
    int n = -1, m = -1, edges_read = 0;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::size_t pos = line.find("sigma:");
            if (pos != std::string::npos) {
                std::istringstream ss(line.substr(pos + 6));
                std::vector<int> s;
                int v;
                while (ss >> v) s.push_back(v);
                sigma = std::move(s);
            }
            continue;
        }
        std::istringstream ss(line);
        if (!header_done) {
            if (!(ss >> n >> m) || n < 0 || m < 0)
                throw std::runtime_error("read_graph: bad header line");
            gf.graph = Graph(n);
            header_done = true;
        } else {
            int u, v;
            if (!(ss >> u >> v)) throw std::runtime_error("read_graph: bad edge line");
            gf.graph.add_edge(u, v);
            ++edges_read;
        }
    }
    if (!header_done) throw std::runtime_error("read_graph: missing header line");
    if (edges_read != m) throw std::runtime_error("read_graph: edge count does not match header");
    gf.graph.sort_adjacency();
    gf.sigma = std::move(sigma);
    return gf;
}

inline GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_graph_file: cannot open " + path);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g,
                        const std::optional<std::vector<int>>& sigma = std::nullopt) {
    out << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    if (sigma) {
        out << "# sigma:";
        for (int v : *sigma) out << ' ' << v;
        out << '\n';
    }
}

inline void write_graph_file(const std::string& path, const Graph& g,
                             const std::optional<std::vector<int>>& sigma = std::nullopt) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_graph_file: cannot open " + path);
    write_graph(out, g, sigma);
}

}  // namespace iset

#endif  // ISET_GRAPH_HPP
