#include "estrada/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace estrada {

namespace {

std::uint64_t bit(vertex_t v) { return std::uint64_t{1} << v; }

void check_order(int n) {
    if (n < 0 || n > max_vertices) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                    std::to_string(max_vertices));
    }
}

void check_vertex(const Graph& g, vertex_t v, const char* what) {
    if (!g.contains(v)) {
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " not in graph of order " + std::to_string(g.order()));
    }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
    check_order(n);
    rows_.assign(n, 0);
    for (const auto& e : edges) {
        if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n) {
            throw std::invalid_argument("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                                        "} has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (e.a == e.b) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(e.a));
        }
        if (rows_[e.a] & bit(e.b)) {
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + "}");
        }
        rows_[e.a] |= bit(e.b);
        rows_[e.b] |= bit(e.a);
        ++edge_count_;
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_rows(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : bit(n) - 1;
    int twice = 0;
    for (int i = 0; i < n; ++i) {
        if (rows[i] & ~mask) throw std::invalid_argument("adjacency row references missing vertex");
        if (rows[i] & bit(i)) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        for (std::uint64_t r = rows[i]; r; r &= r - 1) {
            int j = std::countr_zero(r);
            if (!(rows[j] & bit(i))) throw std::invalid_argument("adjacency rows are not symmetric");
        }
        twice += std::popcount(rows[i]);
    }
    Graph g;
    g.rows_ = std::move(rows);
    g.edge_count_ = twice / 2;
    return g;
}

int Graph::degree(vertex_t v) const { return std::popcount(rows_[v]); }

int Graph::max_degree() const {
    int best = 0;
    for (auto r : rows_) best = std::max(best, std::popcount(r));
    return best;
}

std::vector<vertex_t> Graph::neighbors(vertex_t v) const {
    std::vector<vertex_t> out;
    for (std::uint64_t r = rows_[v]; r; r &= r - 1) out.push_back(std::countr_zero(r));
    return out;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(order());
    for (int v = 0; v < order(); ++v) out[v] = degree(v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    auto out = degrees();
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int i = 0; i < order(); ++i) {
        for (std::uint64_t r = rows_[i] & ~((bit(i) << 1) - 1); r; r &= r - 1) {
            out.push_back({i, std::countr_zero(r)});
        }
    }
    return out;
}

bool Graph::connected() const {
    if (order() == 0) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(f)];
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == order();
}

std::string Graph::to_string() const {
    std::ostringstream os;
    os << "n=" << order() << " E={";
    bool first = true;
    for (const auto& e : edges()) {
        os << (first ? "" : ",") << e.a << "-" << e.b;
        first = false;
    }
    os << "}";
    return os.str();
}

Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, es);
}

Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return Graph(n, es);
}

Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return Graph(leaves + 1, es);
}

std::pair<int, int> KernelDescriptor::cycle_lengths() const {
    if (kind == KernelKind::infinity) return {p, q};
    return {p + l, q + l};
}

std::string KernelDescriptor::to_string() const {
    std::ostringstream os;
    os << (kind == KernelKind::infinity ? "infty(" : "theta(") << p << "," << q << "," << l << ")";
    return os.str();
}

Graph build_infty(int p, int q, int l) {
    if (p < 3 || q < 3 || l < 1) {
        throw std::invalid_argument("infty(p,q,l) needs p,q >= 3 and l >= 1");
    }
    const int n = p + q + l - 2;
    check_order(n);
    std::vector<Edge> es;
    for (int i = 0; i < p; ++i) es.push_back({i, (i + 1) % p});
    // path 0 = x_0, x_1, ..., x_{l-1}; x_{l-1} is the first vertex of C_q
    vertex_t prev = 0;
    vertex_t next_label = p;
    for (int i = 1; i < l; ++i) {
        es.push_back({prev, next_label});
        prev = next_label++;
    }
    const vertex_t anchor = prev;
    std::vector<vertex_t> cq{anchor};
    for (int i = 1; i < q; ++i) cq.push_back(next_label++);
    for (int i = 0; i < q; ++i) es.push_back({cq[i], cq[(i + 1) % q]});
    return Graph(n, es);
}

Graph build_theta(int p, int q, int l) {
    if (p < 1 || q < 1 || l < 1) throw std::invalid_argument("theta path lengths must be >= 1");
    if ((p == 1) + (q == 1) + (l == 1) > 1) {
        throw std::invalid_argument("theta graph allows at most one path of length 1");
    }
    const int n = p + q + l - 1;
    check_order(n);
    std::vector<Edge> es;
    vertex_t next_label = 2;
    for (int len : {p, q, l}) {
        vertex_t prev = 0;
        for (int i = 1; i < len; ++i) {
            es.push_back({prev, next_label});
            prev = next_label++;
        }
        es.push_back({prev, 1});
    }
    return Graph(n, es);
}

Graph coalesce(const Graph& g, vertex_t u, const Graph& h, vertex_t w) {
    check_vertex(g, u, "coalesce");
    check_vertex(h, w, "coalesce");
    const int n = g.order() + h.order() - 1;
    check_order(n);
    std::vector<vertex_t> map(h.order());
    vertex_t next_label = g.order();
    for (int x = 0; x < h.order(); ++x) map[x] = x == w ? u : next_label++;
    auto es = g.edges();
    for (const auto& e : h.edges()) es.push_back({map[e.a], map[e.b]});
    return Graph(n, es);
}

Graph attach_pendants(const Graph& g, vertex_t v, int m) {
    check_vertex(g, v, "attach_pendants");
    if (m < 0) throw std::invalid_argument("attach_pendants: negative count");
    check_order(g.order() + m);
    auto es = g.edges();
    for (int i = 0; i < m; ++i) es.push_back({v, g.order() + i});
    return Graph(g.order() + m, es);
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
    auto es = g.edges();
    es.insert(es.end(), extra.begin(), extra.end());
    return Graph(g.order(), es);
}

Graph add_isolated(const Graph& g, int count) {
    auto es = g.edges();
    return Graph(g.order() + count, es);
}

Graph build_g1(int n) {
    if (n < 4) throw std::invalid_argument("G1(n) needs n >= 4");
    return attach_pendants(build_theta(2, 2, 1), 0, n - 4);
}

Graph build_g2(int n) {
    if (n < 5) throw std::invalid_argument("G2(n) needs n >= 5");
    return attach_pendants(build_theta(2, 2, 2), 0, n - 5);
}

std::vector<vertex_t> strip_leaves(const Graph& g) {
    std::vector<std::uint64_t> rows = g.rows();
    std::uint64_t alive = g.order() == 64 ? ~std::uint64_t{0} : bit(g.order()) - 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t a = alive; a; a &= a - 1) {
            const int v = std::countr_zero(a);
            if (std::popcount(rows[v] & alive) <= 1 && std::popcount(alive) > 1) {
                alive &= ~bit(v);
                changed = true;
            }
        }
    }
    std::vector<vertex_t> out;
    for (std::uint64_t a = alive; a; a &= a - 1) out.push_back(std::countr_zero(a));
    return out;
}

namespace {

struct Branch {
    vertex_t end;
    int length;
};

// follows degree-2 core vertices from `start` through `first` until a branch vertex
Branch trace_branch(const Graph& g, std::uint64_t core, std::uint64_t branch_set, vertex_t start,
                    vertex_t first) {
    vertex_t prev = start, cur = first;
    int length = 1;
    while (!(branch_set & bit(cur))) {
        std::uint64_t nb = g.row(cur) & core & ~bit(prev);
        prev = cur;
        cur = std::countr_zero(nb);
        ++length;
    }
    return {cur, length};
}

std::vector<Branch> branches_from(const Graph& g, std::uint64_t core, std::uint64_t branch_set,
                                  vertex_t v) {
    std::vector<Branch> out;
    for (std::uint64_t r = g.row(v) & core; r; r &= r - 1) {
        out.push_back(trace_branch(g, core, branch_set, v, std::countr_zero(r)));
    }
    return out;
}

}  // namespace

Classification classify(const Graph& g) {
    Classification c;
    c.connected = g.connected();
    c.bicyclic = c.connected && g.size() == g.order() + 1;
    if (!c.bicyclic) return c;

    const auto core_vertices = strip_leaves(g);
    std::uint64_t core = 0;
    for (auto v : core_vertices) core |= bit(v);
    std::vector<vertex_t> branch;
    for (auto v : core_vertices) {
        if (std::popcount(g.row(v) & core) >= 3) branch.push_back(v);
    }
    std::uint64_t branch_set = 0;
    for (auto v : branch) branch_set |= bit(v);

    KernelDescriptor k{KernelKind::theta, 0, 0, 0, core_vertices};
    if (branch.size() == 1) {
        // two cycles sharing one vertex; each loop is traced twice
        auto bs = branches_from(g, core, branch_set, branch[0]);
        std::vector<int> lens;
        for (const auto& b : bs) lens.push_back(b.length);
        std::sort(lens.begin(), lens.end());
        k.kind = KernelKind::infinity;
        k.p = lens[0];
        k.q = lens[2];
        k.l = 1;
    } else if (branch.size() == 2) {
        const vertex_t u = branch[0], v = branch[1];
        auto bu = branches_from(g, core, branch_set, u);
        int loops_u = 0, loop_u_len = 0, link_len = 0;
        std::vector<int> to_v;
        for (const auto& b : bu) {
            if (b.end == u) {
                ++loops_u;
                loop_u_len = b.length;
            } else {
                to_v.push_back(b.length);
                link_len = b.length;
            }
        }
        if (loops_u == 0) {
            std::sort(to_v.begin(), to_v.end(), std::greater<>());
            k.kind = KernelKind::theta;
            k.p = to_v[0];
            k.q = to_v[1];
            k.l = to_v[2];
        } else {
            int loop_v_len = 0;
            for (const auto& b : branches_from(g, core, branch_set, v)) {
                if (b.end == v) loop_v_len = b.length;
            }
            k.kind = KernelKind::infinity;
            k.p = std::min(loop_u_len, loop_v_len);
            k.q = std::max(loop_u_len, loop_v_len);
            k.l = link_len + 1;
        }
    } else {
        throw std::logic_error("bicyclic 2-core with unexpected branch structure: " + g.to_string());
    }
    c.kernel = std::move(k);
    return c;
}

Deletion subgraph_delete(const Graph& g, std::span<const vertex_t> vertices,
                         std::span<const Edge> edges) {
    std::vector<std::uint64_t> rows = g.rows();
    for (const auto& e : edges) {
        check_vertex(g, e.a, "subgraph_delete");
        check_vertex(g, e.b, "subgraph_delete");
        if (!g.adjacent(e.a, e.b)) {
            throw std::invalid_argument("subgraph_delete: edge {" + std::to_string(e.a) + "," +
                                        std::to_string(e.b) + "} not in graph");
        }
        rows[e.a] &= ~bit(e.b);
        rows[e.b] &= ~bit(e.a);
    }
    std::vector<bool> gone(g.order(), false);
    for (auto v : vertices) {
        check_vertex(g, v, "subgraph_delete");
        gone[v] = true;
    }
    Deletion out;
    out.label_map.assign(g.order(), -1);
    std::vector<vertex_t> keep;
    for (int v = 0; v < g.order(); ++v) {
        if (!gone[v]) {
            out.label_map[v] = static_cast<vertex_t>(keep.size());
            keep.push_back(v);
        }
    }
    if (keep.empty() && g.order() > 0) {
        throw std::invalid_argument("subgraph_delete: cannot delete every vertex");
    }
    std::vector<std::uint64_t> new_rows(keep.size(), 0);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::uint64_t r = rows[keep[i]]; r; r &= r - 1) {
            const vertex_t j = out.label_map[std::countr_zero(r)];
            if (j >= 0) new_rows[i] |= bit(j);
        }
    }
    out.graph = Graph::from_rows(std::move(new_rows));
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const vertex_t> vertices) {
    std::vector<std::uint64_t> rows(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = 0; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) rows[i] |= bit(static_cast<int>(j));
    return Graph::from_rows(std::move(rows));
}

Graph edge_rotation(const Graph& g, vertex_t t, vertex_t v, vertex_t w) {
    check_vertex(g, t, "edge_rotation");
    check_vertex(g, v, "edge_rotation");
    check_vertex(g, w, "edge_rotation");
    if (t == w || v == w || t == v) throw std::invalid_argument("edge_rotation: t, v, w must differ");
    if (!g.adjacent(t, v)) throw std::invalid_argument("edge_rotation: tv is not an edge");
    if (g.adjacent(t, w)) throw std::invalid_argument("edge_rotation: tw is already an edge");
    std::vector<std::uint64_t> rows = g.rows();
    rows[t] = (rows[t] & ~bit(v)) | bit(w);
    rows[v] &= ~bit(t);
    rows[w] |= bit(t);
    return Graph::from_rows(std::move(rows));
}

Graph shift_branches(const Graph& g, vertex_t from, vertex_t to) {
    check_vertex(g, from, "shift_branches");
    check_vertex(g, to, "shift_branches");
    if (!g.adjacent(from, to)) throw std::invalid_argument("shift_branches: endpoints not adjacent");
    std::vector<std::uint64_t> rows = g.rows();
    const std::uint64_t moving = rows[from] & ~bit(to);
    if (moving & rows[to]) throw std::invalid_argument("shift_branches: would create a multi-edge");
    for (std::uint64_t r = moving; r; r &= r - 1) {
        const int x = std::countr_zero(r);
        rows[x] = (rows[x] & ~bit(from)) | bit(to);
    }
    rows[to] |= moving;
    rows[from] = bit(to);
    return Graph::from_rows(std::move(rows));
}

Graph migrate_pendants(const Graph& g, vertex_t from, vertex_t to) {
    check_vertex(g, from, "migrate_pendants");
    check_vertex(g, to, "migrate_pendants");
    if (from == to) throw std::invalid_argument("migrate_pendants: identical endpoints");
    std::vector<std::uint64_t> rows = g.rows();
    for (std::uint64_t r = g.row(from); r; r &= r - 1) {
        const int x = std::countr_zero(r);
        if (g.degree(x) != 1 || x == to) continue;
        rows[x] = bit(to);
        rows[from] &= ~bit(x);
        rows[to] |= bit(x);
    }
    return Graph::from_rows(std::move(rows));
}

Graph permute(const Graph& g, std::span<const vertex_t> perm) {
    if (static_cast<int>(perm.size()) != g.order()) {
        throw std::invalid_argument("permute: permutation size mismatch");
    }
    std::vector<std::uint64_t> rows(g.order(), 0);
    std::uint64_t seen = 0;
    for (int i = 0; i < g.order(); ++i) {
        if (perm[i] < 0 || perm[i] >= g.order() || (seen & bit(perm[i]))) {
            throw std::invalid_argument("permute: not a permutation");
        }
        seen |= bit(perm[i]);
        for (std::uint64_t r = g.row(i); r; r &= r - 1) rows[perm[i]] |= bit(perm[std::countr_zero(r)]);
    }
    return Graph::from_rows(std::move(rows));
}

std::vector<std::vector<vertex_t>> cycles_through(const Graph& g, vertex_t v) {
    check_vertex(g, v, "cycles_through");
    std::set<std::vector<vertex_t>> found;
    std::vector<vertex_t> path{v};

    auto record = [&] {
        std::vector<vertex_t> c = path;
        auto it = std::min_element(c.begin(), c.end());
        std::rotate(c.begin(), it, c.end());
        if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
        found.insert(std::move(c));
    };

    auto dfs = [&](auto&& self, vertex_t x, std::uint64_t on_path) -> void {
        for (std::uint64_t r = g.row(x); r; r &= r - 1) {
            const vertex_t y = std::countr_zero(r);
            if (y == v) {
                if (path.size() >= 3) record();
            } else if (!(on_path & bit(y))) {
                path.push_back(y);
                self(self, y, on_path | bit(y));
                path.pop_back();
            }
        }
    };
    dfs(dfs, v, bit(v));
    return {found.begin(), found.end()};
}

}  // namespace estrada
