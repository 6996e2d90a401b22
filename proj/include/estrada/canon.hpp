#ifndef ESTRADA_CANON_HPP
#define ESTRADA_CANON_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

inline constexpr int canonical_form_cap = 16;

// perm[i] is the image of vertex i
using Permutation = std::vector<vertex_t>;

/*
 * Byte string naming an isomorphism class: the order, then the upper
 * triangle of the adjacency matrix under the canonical labelling, packed
 * eight bits per byte in row-major (i < j) order.
 */
class CanonicalForm {
public:
    CanonicalForm() = default;
    explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const { return bytes_; }
    int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
    // representative carrying the canonical labelling
    Graph graph() const;
    std::string hex() const;

    auto operator<=>(const CanonicalForm&) const = default;

private:
    std::string bytes_;
};

struct CanonicalLabeling {
    CanonicalForm form;
    // vertex i of the input sits at position labeling[i] in form.graph()
    Permutation labeling;
    // generators of Aut(G)
    std::vector<Permutation> generators;
};

// throws std::invalid_argument when order() > cap
CanonicalLabeling canonical_labeling(const Graph& g, int cap = canonical_form_cap);
CanonicalForm canonical_form(const Graph& g, int cap = canonical_form_cap);
std::vector<Permutation> automorphisms(const Graph& g, int cap = canonical_form_cap);

bool is_automorphism(const Graph& g, const Permutation& p);

// every element of the group generated by `generators` (closure by BFS);
// throws std::length_error beyond `limit` elements
std::vector<Permutation> group_elements(const std::vector<Permutation>& generators, int n,
                                        std::size_t limit = 1'000'000);

}  // namespace estrada

template <>
struct std::hash<estrada::CanonicalForm> {
    std::size_t operator()(const estrada::CanonicalForm& f) const noexcept {
        return std::hash<std::string>{}(f.bytes());
    }
};

#endif
