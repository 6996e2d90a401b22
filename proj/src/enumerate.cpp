#include "estrada/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace estrada {

namespace {

using FormSet = std::set<CanonicalForm>;

// Runs task(i, local_set) for i in [0, tasks) on a small worker pool, then
// merges the per-worker sets; the merged set does not depend on scheduling.
template <class Task>
FormSet run_partitioned(int tasks, Task task) {
    const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, std::max(tasks, 1));
    std::vector<FormSet> local(workers);
    std::atomic<int> next{0};
    auto work = [&](int w) {
        for (int i = next++; i < tasks; i = next++) task(i, local[w]);
    };
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
    pool.clear();
    FormSet merged;
    for (auto& s : local) merged.merge(s);
    return merged;
}

ClassList to_list(const FormSet& forms) {
    ClassList out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back({f, f.graph()});
    return out;
}

Graph build_kernel(const KernelDescriptor& k) {
    return k.kind == KernelKind::infinity ? build_infty(k.p, k.q, k.l) : build_theta(k.p, k.q, k.l);
}

// weak compositions of total into parts, lexicographic
void compositions(int total, int parts, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        current.push_back(total);
        out.push_back(current);
        current.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        current.push_back(first);
        compositions(total - first, parts - 1, current, out);
        current.pop_back();
    }
}

// Hangs one tree per kernel vertex for every combination of trees with the
// given sizes (non-root vertex counts), inserting canonical forms into out.
void hang_trees(const Graph& kernel, const std::vector<int>& sizes,
                const std::vector<std::vector<std::vector<int>>>& trees, FormSet& out) {
    const int k = kernel.order();
    std::vector<std::size_t> choice(k, 0);
    while (true) {
        std::vector<Edge> es = kernel.edges();
        int next = k;
        for (int v = 0; v < k; ++v) {
            const auto& parent = trees[sizes[v] + 1][choice[v]];
            // tree vertex 0 is v itself; vertex i > 0 gets label base + i - 1
            const int base = next;
            for (std::size_t i = 1; i < parent.size(); ++i) {
                const int a = parent[i] == 0 ? v : base + parent[i] - 1;
                es.push_back({a, base + static_cast<int>(i) - 1});
            }
            next += static_cast<int>(parent.size()) - 1;
        }
        out.insert(canonical_form(Graph(next, es), structured_order_cap));

        int v = 0;
        while (v < k && ++choice[v] == trees[sizes[v] + 1].size()) choice[v++] = 0;
        if (v == k) return;
    }
}

bool connected_rows(const std::vector<std::uint64_t>& rows) {
    const int n = static_cast<int>(rows.size());
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t grow = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) grow |= rows[std::countr_zero(f)];
        frontier = grow & ~seen;
        seen |= grow;
    }
    return seen == (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

struct PairTable {
    std::vector<std::pair<int, int>> pairs;
    explicit PairTable(int n) {
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
    std::vector<std::uint64_t> rows(int n, std::uint64_t mask) const {
        std::vector<std::uint64_t> r(n, 0);
        for (; mask; mask &= mask - 1) {
            auto [a, b] = pairs[std::countr_zero(mask)];
            r[a] |= std::uint64_t{1} << b;
            r[b] |= std::uint64_t{1} << a;
        }
        return r;
    }
};

// next integer with the same popcount (Gosper)
std::uint64_t next_subset(std::uint64_t x) {
    const std::uint64_t c = x & -x;
    const std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

std::vector<std::vector<int>> rooted_trees(int m) {
    if (m < 1) throw std::invalid_argument("rooted tree needs at least one vertex");
    std::vector<std::vector<int>> out;
    // levels: root at 1, start from the path
    std::vector<int> level(m);
    for (int i = 0; i < m; ++i) level[i] = i + 1;
    while (true) {
        std::vector<int> parent(m, -1);
        for (int i = 1; i < m; ++i) {
            int j = i - 1;
            while (level[j] != level[i] - 1) --j;
            parent[i] = j;
        }
        out.push_back(std::move(parent));

        int p = m - 1;
        while (p > 0 && level[p] == 2) --p;
        if (p == 0) return out;
        int q = p - 1;
        while (level[q] != level[p] - 1) --q;
        for (int i = p; i < m; ++i) level[i] = level[i - (p - q)];
    }
}

std::vector<KernelDescriptor> kernels_up_to(int n) {
    std::vector<KernelDescriptor> out;
    for (int p = 3; p <= n; ++p)
        for (int q = p; p + q - 1 <= n; ++q)
            for (int l = 1; p + q + l - 2 <= n; ++l) out.push_back({KernelKind::infinity, p, q, l, {}});
    for (int l = 1; 3 * l - 1 <= n; ++l)
        for (int q = std::max(l, 2); l + 2 * q - 1 <= n; ++q)
            for (int p = q; p + q + l - 1 <= n; ++p) out.push_back({KernelKind::theta, p, q, l, {}});
    return out;
}

ClassList enumerate_bicyclic(int n, int max_order) {
    if (n < 4 || n > max_order || max_order > structured_order_cap)
        throw std::invalid_argument("structured enumeration supports 4 <= n <= " + std::to_string(max_order) +
                                    ", got " + std::to_string(n));
    std::vector<std::vector<std::vector<int>>> trees(n + 1);
    for (int m = 1; m <= n; ++m) trees[m] = rooted_trees(m);

    // one task per (kernel, composition of the remaining vertices)
    std::vector<std::pair<Graph, std::vector<int>>> tasks;
    for (const auto& k : kernels_up_to(n)) {
        Graph kernel = build_kernel(k);
        std::vector<std::vector<int>> comps;
        std::vector<int> current;
        compositions(n - kernel.order(), kernel.order(), current, comps);
        for (auto& c : comps) tasks.emplace_back(kernel, std::move(c));
    }
    return to_list(run_partitioned(static_cast<int>(tasks.size()), [&](int i, FormSet& out) {
        hang_trees(tasks[i].first, tasks[i].second, trees, out);
    }));
}

ClassList enumerate_bicyclic_bruteforce(int n) {
    if (n < 1 || n > bruteforce_order_cap)
        throw std::invalid_argument("brute-force enumeration supports 1 <= n <= 8, got " + std::to_string(n));
    const PairTable table(n);
    const int pairs = static_cast<int>(table.pairs.size());
    const int edges = n + 1;
    if (edges > pairs) return {};
    // partition by the lowest chosen edge index
    return to_list(run_partitioned(pairs - edges + 1, [&](int lead, FormSet& out) {
        const std::uint64_t lead_bit = std::uint64_t{1} << lead;
        // the other edges - 1 edges sit above the lead, enumerated as subsets of the higher pairs
        const std::uint64_t limit = std::uint64_t{1} << (pairs - lead - 1);
        const int fresh = edges - 1;
        for (std::uint64_t rest = (std::uint64_t{1} << fresh) - 1; rest < limit; rest = next_subset(rest)) {
            auto rows = table.rows(n, lead_bit | rest << (lead + 1));
            if (std::none_of(rows.begin(), rows.end(), [](std::uint64_t r) { return r == 0; }) &&
                connected_rows(rows))
                out.insert(canonical_form(Graph::from_rows(std::move(rows)), bruteforce_order_cap));
            if (fresh == 0) break;
        }
    }));
}

ClassList enumerate_connected(int n) {
    if (n < 1 || n > connected_order_cap)
        throw std::invalid_argument("connected enumeration supports 1 <= n <= 7, got " + std::to_string(n));
    const PairTable table(n);
    const std::uint64_t masks = std::uint64_t{1} << table.pairs.size();
    FormSet forms;
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        auto rows = table.rows(n, mask);
        if (connected_rows(rows)) forms.insert(canonical_form(Graph::from_rows(std::move(rows))));
    }
    return to_list(forms);
}

bool BicyclicClass::contains(const KernelDescriptor& k) const {
    if (k.kind != kind) return false;
    auto [a, b] = k.cycle_lengths();
    return std::minmax(a, b) == std::minmax(p, q);
}

std::string BicyclicClass::to_string() const {
    return std::string(kind == KernelKind::infinity ? "infinity" : "theta") + "(" + std::to_string(p) + "," +
           std::to_string(q) + ")";
}

ClassList enumerate_class(int n, BicyclicClass c) {
    const auto kernels = kernels_up_to(n);
    if (std::none_of(kernels.begin(), kernels.end(), [&](const KernelDescriptor& k) { return c.contains(k); }))
        throw std::invalid_argument("no bicyclic graph of order " + std::to_string(n) + " lies in class " +
                                    c.to_string());
    ClassList out;
    for (auto& member : enumerate_bicyclic(n)) {
        auto kernel = classify(member.graph).kernel;
        if (kernel && c.contains(*kernel)) out.push_back(std::move(member));
    }
    return out;
}

std::vector<BicyclicClass> classes_of_order(int n) {
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& k : kernels_up_to(n)) {
        auto [a, b] = k.cycle_lengths();
        auto [lo, hi] = std::minmax(a, b);
        seen.emplace(static_cast<int>(k.kind), lo, hi);
    }
    std::vector<BicyclicClass> out;
    for (auto [kind, p, q] : seen) out.push_back({static_cast<KernelKind>(kind), p, q});
    return out;
}

}  // namespace estrada
