#ifndef ESTRADA_VERIFY_HPP
#define ESTRADA_VERIFY_HPP

#include <string>
#include <vector>

#include "estrada/graph.hpp"
#include "estrada/spectra.hpp"
#include "estrada/walks.hpp"

namespace estrada {

/*
 * inapplicable: the instance does not meet the claim's hypotheses (for walk
 * hypotheses, within the cutoff), so nothing is asserted about it.
 * undetermined: the numerical margins are too small to decide.
 */
enum class Outcome { confirmed, refuted, undetermined, inapplicable };

std::string to_string(Outcome o);

struct InstanceResult {
    std::string description;
    Outcome outcome = Outcome::confirmed;
    // slack of the checked inequality in its own units; negative when it fails
    double margin = 0;
    // walk cutoff the verdict rests on, 0 when none is involved
    int cutoff = 0;
    // graph6 records that reproduce the instance
    std::string witness;
};

struct VerificationReport {
    std::string statement;
    std::vector<InstanceResult> instances;
    double runtime_ms = 0;

    // refuted beats undetermined beats confirmed; inapplicable instances are
    // ignored unless nothing else was checked
    Outcome outcome() const;
    std::size_t count(Outcome o) const;
};

struct VerifyOptions {
    int cutoff = default_walk_cutoff;
    EstimateOptions estimate;
};

// Adds the edges u w_i to one copy of G and v w_i to another and checks that
// the v side has the larger Estrada index whenever (G;u,u) < (G;v,v) and
// (G;u,w_i) <= (G;v,w_i). Throws std::invalid_argument if some w_i is u, v
// or adjacent to either.
InstanceResult check_edge_addition(const Graph& g, vertex_t u, vertex_t v, const std::vector<vertex_t>& w,
                                   const VerifyOptions& opts = {});

// named instances plus every applicable (G, u, v, w) on connected graphs of order <= 6
VerificationReport verify_edge_addition(const VerifyOptions& opts = {});

// moving a graph H from a walk-poorer to a walk-richer vertex, and moving a
// pendant edge's attachment from its leaf to its stem
VerificationReport verify_coalescence(const VerifyOptions& opts = {});

// walk equalities forced by an automorphism swapping two vertices, their
// strict versions after breaking the symmetry, the unicyclic and
// theta-with-pendants configurations built on them, and theta branch vertices
VerificationReport verify_automorphism_walks(const VerifyOptions& opts = {});

// After breaking the symmetry on v's side: (u,t) < (v,sigma(t)) for every t
// other than u and v, as literally stated. This does not hold in general; t
// on v's side or inside H1 gives counterexamples, reported as refuted.
VerificationReport verify_automorphism_offdiagonal(const VerifyOptions& opts = {});

// theta(p,q,l) with branch vertices u, v: (u,u) = (v,v) and every other w has
// (w,w) < (u,u), first strictly at k = 2
InstanceResult theta_branch_walks(int p, int q, int l, int K = default_walk_cutoff);

// every bicyclic graph of order n other than G1(n) admits an EE-increasing
// move of the kind its structure calls for; 5 <= n <= 9
VerificationReport verify_transformations(int n, const VerifyOptions& opts = {});

// EE(G1(n)) > EE(G2(n)) for n_lo <= n <= n_hi, plus the spectral bound chain from n = 23
VerificationReport verify_g1_vs_g2(int n_lo, int n_hi, const VerifyOptions& opts = {});

// exhaustive: G1(n) is the unique EE maximiser among bicyclic graphs, stable
// under the numerical settings, and each class G_infinity(n;p,q) is maximised
// on infinity(p,q,1) with pendant edges; 4 <= n <= 9
VerificationReport verify_bicyclic_maximum(int n, const VerifyOptions& opts = {});

// Within each class G_theta(n;p,q) the maximiser is theta(p-1,q-1,1) or
// theta(2,2,2) with pendant edges, as literally stated. The rotation behind it
// leaves the class, and exhaustive search finds counterexamples from n = 6.
VerificationReport verify_theta_class_maximum(int n, const VerifyOptions& opts = {});

// vertex expansion of the characteristic polynomial against the exact route on
// every bicyclic graph of order <= n, and the G1/G2 closed forms up to 30
VerificationReport verify_charpoly_recursion(int n);

// Statement ids in report order.
const std::vector<std::string>& statement_ids();

struct CampaignSettings {
    int n = 6;
    int g12_lo = 5;
    int g12_hi = 200;
    VerifyOptions options;
};

// throws std::invalid_argument for an unknown id or out-of-range settings
VerificationReport run_statement(const std::string& id, const CampaignSettings& settings);

// {"reports": [{statement, instances: [{description, outcome, margin, K, witness?}], runtime_ms}]}
std::string reports_to_json(const std::vector<VerificationReport>& reports);

}  // namespace estrada

#endif
