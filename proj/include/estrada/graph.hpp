#ifndef ESTRADA_GRAPH_HPP
#define ESTRADA_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace estrada {

using vertex_t = int;

inline constexpr int max_vertices = 64;

struct Edge {
    vertex_t a;
    vertex_t b;

    auto operator<=>(const Edge&) const = default;
};

/*
 * Immutable simple undirected graph on at most 64 vertices. Each vertex
 * stores its neighbourhood as a 64-bit row, so A(G) is available both as
 * a bit matrix and as adjacency sets.
 */
class Graph {
public:
    Graph() = default;

    // throws std::invalid_argument on a self-loop, duplicate edge,
    // out-of-range endpoint or n outside 0..64
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    // rows[i] bit j set iff {i,j} is an edge; validated for symmetry
    static Graph from_rows(std::vector<std::uint64_t> rows);

    int order() const { return static_cast<int>(rows_.size()); }
    int size() const { return edge_count_; }

    bool adjacent(vertex_t u, vertex_t v) const { return (rows_[u] >> v) & 1u; }
    std::uint64_t row(vertex_t v) const { return rows_[v]; }
    const std::vector<std::uint64_t>& rows() const { return rows_; }

    int degree(vertex_t v) const;
    int max_degree() const;
    std::vector<vertex_t> neighbors(vertex_t v) const;
    std::vector<int> degrees() const;
    // sorted descending
    std::vector<int> degree_sequence() const;
    // sorted, a < b
    std::vector<Edge> edges() const;

    bool connected() const;
    bool contains(vertex_t v) const { return v >= 0 && v < order(); }

    std::string to_string() const;

    bool operator==(const Graph& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::uint64_t> rows_;
    int edge_count_ = 0;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

/*
 * The two bicyclic kernels. For the infinity graph p and q are the cycle
 * lengths (normalised p <= q) and l - 1 is the length of the connecting
 * path; for the theta graph p >= q >= l are the three path lengths.
 */
enum class KernelKind { infinity, theta };

struct KernelDescriptor {
    KernelKind kind;
    int p;
    int q;
    int l;
    // kernel vertices in the labelling of the classified graph, ascending
    std::vector<vertex_t> vertices;

    // two cycle lengths; for theta, the two cycles that share the shortest path
    std::pair<int, int> cycle_lengths() const;
    std::string to_string() const;

    bool same_shape(const KernelDescriptor& other) const {
        return kind == other.kind && p == other.p && q == other.q && l == other.l;
    }
};

// infty(p, q, l): p + q + l - 2 vertices. Cycle C_p is 0..p-1, the
// connecting path starts at vertex 0, C_q contains the far end of the path.
Graph build_infty(int p, int q, int l);

// theta(p, q, l) with path lengths in any order; the two branch vertices
// are 0 and 1, internal vertices follow path by path in argument order.
// At most one length may equal 1.
Graph build_theta(int p, int q, int l);

// G(u) o H(w). G keeps its labels; H's vertices other than w are appended
// in increasing order of their H label.
Graph coalesce(const Graph& g, vertex_t u, const Graph& h, vertex_t w);

// new pendant vertices are labelled order(), order()+1, ...
Graph attach_pendants(const Graph& g, vertex_t v, int m);

Graph add_edges(const Graph& g, std::span<const Edge> edges);
Graph add_isolated(const Graph& g, int count);

// hub is vertex 0 in both
Graph build_g1(int n);
Graph build_g2(int n);

struct Classification {
    bool connected = false;
    bool bicyclic = false;
    std::optional<KernelDescriptor> kernel;
};

Classification classify(const Graph& g);

// vertices left after iterated removal of degree-1 vertices (2-core when
// no isolated vertices remain)
std::vector<vertex_t> strip_leaves(const Graph& g);

struct Deletion {
    Graph graph;
    // old label -> new label, -1 for deleted vertices
    std::vector<vertex_t> label_map;
};

Deletion subgraph_delete(const Graph& g, std::span<const vertex_t> vertices,
                         std::span<const Edge> edges = {});

// induced on the listed vertices, relabelled in the listed order
Graph induced_subgraph(const Graph& g, std::span<const vertex_t> vertices);

// G - tv + tw
Graph edge_rotation(const Graph& g, vertex_t t, vertex_t v, vertex_t w);

// Moves every neighbour of `from` except `to` over to `to`; `from` ends up
// as a pendant vertex of `to`. Requires {from, to} to be an edge.
Graph shift_branches(const Graph& g, vertex_t from, vertex_t to);

// Moves the pendant neighbours of `from` onto `to`.
Graph migrate_pendants(const Graph& g, vertex_t from, vertex_t to);

// Relabel: vertex i of g becomes perm[i].
Graph permute(const Graph& g, std::span<const vertex_t> perm);

// Simple cycles through v, each once: rotated to start at its smallest
// vertex, direction with the lexicographically smaller sequence.
std::vector<std::vector<vertex_t>> cycles_through(const Graph& g, vertex_t v);

}  // namespace estrada

#endif
