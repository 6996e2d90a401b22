#include "estrada/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace estrada {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

using Coloring = std::vector<int>;

// Renumbers colours 0..c-1 in order of the keys; returns the colour count.
template <class Key>
int assign_colors(const std::vector<Key>& keys, Coloring& colors) {
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
    int c = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || keys[order[i]] != keys[order[i - 1]]) ++c;
        colors[order[i]] = c;
    }
    return c + 1;
}

// Equitable refinement: split colour classes by neighbour counts per class.
int refine(const Graph& g, Coloring& colors) {
    const int n = g.order();
    int count = 1 + *std::max_element(colors.begin(), colors.end());
    while (true) {
        std::vector<std::uint64_t> cells(count, 0);
        for (int v = 0; v < n; ++v) cells[colors[v]] |= bit(v);
        std::vector<std::vector<int>> keys(n);
        for (int v = 0; v < n; ++v) {
            keys[v].reserve(count + 1);
            keys[v].push_back(colors[v]);
            for (int c = 0; c < count; ++c) keys[v].push_back(std::popcount(g.row(v) & cells[c]));
        }
        const int next = assign_colors(keys, colors);
        if (next == count) return count;
        count = next;
    }
}

std::vector<std::uint64_t> relabel_rows(const Graph& g, const Permutation& perm) {
    std::vector<std::uint64_t> rows(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        for (std::uint64_t r = g.row(v); r; r &= r - 1) rows[perm[v]] |= bit(perm[std::countr_zero(r)]);
    return rows;
}

int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) { add_twin_swaps(); }

    void run() {
        Coloring colors(n_, 0);
        std::vector<int> prefix;
        descend(colors, prefix);
    }

    CanonicalLabeling result() const {
        CanonicalLabeling out;
        std::string bytes(1, static_cast<char>(n_));
        int bitpos = 0;
        unsigned char acc = 0;
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                acc = static_cast<unsigned char>(acc << 1 | ((best_rows_[i] >> j) & 1u));
                if (++bitpos == 8) {
                    bytes.push_back(static_cast<char>(acc));
                    bitpos = 0;
                    acc = 0;
                }
            }
        }
        if (bitpos) bytes.push_back(static_cast<char>(acc << (8 - bitpos)));
        out.form = CanonicalForm(std::move(bytes));
        out.labeling = best_perm_;
        out.generators = generators_;
        return out;
    }

private:
    // transpositions of vertices with identical neighbourhoods (apart from each other)
    void add_twin_swaps() {
        std::vector<bool> done(n_, false);
        for (int a = 0; a < n_; ++a) {
            if (done[a]) continue;
            int prev = a;
            for (int b = a + 1; b < n_; ++b) {
                if (done[b]) continue;
                if ((g_.row(a) & ~bit(b)) == (g_.row(b) & ~bit(a))) {
                    Permutation p(n_);
                    std::iota(p.begin(), p.end(), 0);
                    std::swap(p[prev], p[b]);
                    generators_.push_back(std::move(p));
                    done[b] = true;
                    prev = b;
                }
            }
        }
    }

    bool same_orbit(int x, const std::vector<int>& explored, const std::vector<int>& prefix) const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& p : generators_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int v) { return p[v] == v; });
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(parent, v), b = find(parent, p[v]);
                if (a != b) parent[a] = b;
            }
        }
        const int rx = find(parent, x);
        return std::any_of(explored.begin(), explored.end(), [&](int y) { return find(parent, y) == rx; });
    }

    void record_automorphism(const Permutation& to_leaf, const Permutation& other_leaf) {
        // other_leaf^{-1} o to_leaf
        Permutation inv(n_);
        for (int v = 0; v < n_; ++v) inv[other_leaf[v]] = v;
        Permutation a(n_);
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            a[v] = inv[to_leaf[v]];
            identity = identity && a[v] == v;
        }
        if (!identity && std::find(generators_.begin(), generators_.end(), a) == generators_.end()) {
            generators_.push_back(std::move(a));
        }
    }

    void leaf(const Coloring& colors) {
        Permutation perm(colors.begin(), colors.end());
        auto rows = relabel_rows(g_, perm);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_rows_ = best_rows_ = rows;
            first_perm_ = best_perm_ = perm;
            return;
        }
        if (rows == first_rows_) {
            record_automorphism(perm, first_perm_);
        } else if (rows == best_rows_) {
            record_automorphism(perm, best_perm_);
        } else if (rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_perm_ = std::move(perm);
        }
    }

    void descend(Coloring colors, std::vector<int>& prefix) {
        const int count = refine(g_, colors);
        if (count == n_) {
            leaf(colors);
            return;
        }
        std::vector<int> size(count, 0);
        for (int c : colors) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;

        std::vector<int> explored;
        for (int x = 0; x < n_; ++x) {
            if (colors[x] != target) continue;
            if (same_orbit(x, explored, prefix)) continue;
            explored.push_back(x);
            Coloring child(n_);
            for (int v = 0; v < n_; ++v) child[v] = 2 * colors[v] + (colors[v] == target && v != x ? 1 : 0);
            std::vector<int> keys(child.begin(), child.end());
            assign_colors(keys, child);
            prefix.push_back(x);
            descend(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Permutation> generators_;
    bool have_leaf_ = false;
    std::vector<std::uint64_t> first_rows_, best_rows_;
    Permutation first_perm_, best_perm_;
};

}  // namespace

Graph CanonicalForm::graph() const {
    const int n = order();
    std::vector<std::uint64_t> rows(n, 0);
    std::size_t byte = 1;
    int bitpos = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const bool set = (static_cast<unsigned char>(bytes_[byte]) >> (7 - bitpos)) & 1u;
            if (set) {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            if (++bitpos == 8) {
                ++byte;
                bitpos = 0;
            }
        }
    }
    return Graph::from_rows(std::move(rows));
}

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char c : bytes_) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 15]);
    }
    return out;
}

CanonicalLabeling canonical_labeling(const Graph& g, int cap) {
    if (g.order() > cap) {
        throw std::invalid_argument("canonical labelling supports at most " + std::to_string(cap) +
                                    " vertices, got " + std::to_string(g.order()));
    }
    if (g.order() == 0) return {CanonicalForm(std::string(1, '\0')), {}, {}};
    Search s(g);
    s.run();
    return s.result();
}

CanonicalForm canonical_form(const Graph& g, int cap) { return canonical_labeling(g, cap).form; }

std::vector<Permutation> automorphisms(const Graph& g, int cap) {
    return canonical_labeling(g, cap).generators;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (static_cast<int>(p.size()) != g.order()) return false;
    std::vector<bool> hit(p.size(), false);
    for (auto v : p) {
        if (v < 0 || v >= g.order() || hit[v]) return false;
        hit[v] = true;
    }
    for (const auto& e : g.edges())
        if (!g.adjacent(p[e.a], p[e.b])) return false;
    return true;
}

std::vector<Permutation> group_elements(const std::vector<Permutation>& generators, int n,
                                        std::size_t limit) {
    Permutation id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<Permutation> seen{id};
    std::vector<Permutation> queue{id};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& gen : generators) {
            Permutation next(n);
            for (int v = 0; v < n; ++v) next[v] = gen[queue[head][v]];
            if (seen.insert(next).second) {
                if (seen.size() > limit) throw std::length_error("group_elements: group exceeds limit");
                queue.push_back(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace estrada
