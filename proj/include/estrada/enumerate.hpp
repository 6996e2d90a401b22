#ifndef ESTRADA_ENUMERATE_HPP
#define ESTRADA_ENUMERATE_HPP

#include <string>
#include <vector>

#include "estrada/canon.hpp"
#include "estrada/graph.hpp"

namespace estrada {

inline constexpr int structured_order_cap = 12;
inline constexpr int bruteforce_order_cap = 8;
inline constexpr int connected_order_cap = 7;

// One isomorphism class: its canonical form and the canonical representative.
struct GraphClassMember {
    CanonicalForm form;
    Graph graph;
};

// Lists are sorted by canonical form, so output order is reproducible.
using ClassList = std::vector<GraphClassMember>;

// Rooted trees on m vertices as parent arrays (parent[0] = -1), one per
// isomorphism class, generated through canonical level sequences.
std::vector<std::vector<int>> rooted_trees(int m);

// Every kernel on at most n vertices: infinity graphs (3 <= p <= q) and
// theta graphs (p >= q >= l, q >= 2).
std::vector<KernelDescriptor> kernels_up_to(int n);

// Kernels with trees hung on their vertices, deduplicated by canonical
// form. Throws std::invalid_argument unless 4 <= n <= max_order.
ClassList enumerate_bicyclic(int n, int max_order = structured_order_cap);

// All (n+1)-edge subsets of the labelled complete graph, filtered for
// connectivity. Throws std::invalid_argument unless 1 <= n <= 8.
ClassList enumerate_bicyclic_bruteforce(int n);

// All connected graphs of order n up to isomorphism, by labelled brute
// force. Throws std::invalid_argument unless 1 <= n <= 7.
ClassList enumerate_connected(int n);

/*
 * Bicyclic graphs grouped by their two short cycles. An infinity class
 * (p, q) holds every kernel infty(p, q, l); a theta class (p, q) holds every
 * theta(p', q', l') with p' + l' = p and q' + l' = q.
 */
struct BicyclicClass {
    KernelKind kind;
    int p;
    int q;

    bool contains(const KernelDescriptor& k) const;
    std::string to_string() const;
};

// throws std::invalid_argument for a class no bicyclic graph can belong to
ClassList enumerate_class(int n, BicyclicClass c);

// every class with at least one member of order n, sorted
std::vector<BicyclicClass> classes_of_order(int n);

}  // namespace estrada

#endif
