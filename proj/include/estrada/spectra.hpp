#ifndef ESTRADA_SPECTRA_HPP
#define ESTRADA_SPECTRA_HPP

#include <string>
#include <vector>

#include "estrada/graph.hpp"
#include "estrada/polynomial.hpp"

namespace estrada {

inline constexpr double default_eigen_tolerance = 1e-12;

// Eigenvalues of A(G), descending. `tolerance` bounds the absolute error of
// every eigenvalue: the final off-diagonal Frobenius norm (Weyl) plus a
// rounding allowance.
struct Spectrum {
    std::vector<double> values;
    double tolerance = 0;
    int sweeps = 0;
    // the same eigenvalues before rounding to double, and their error bound;
    // empty when the spectrum was assembled by hand
    std::vector<long double> extended;
    double extended_tolerance = 0;

    double largest() const { return values.front(); }
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// `off_diagonal_tol`. Throws std::runtime_error if the sweep budget runs out.
Spectrum eigenvalues(const Graph& g, double off_diagonal_tol = default_eigen_tolerance);

// Same solver on an arbitrary symmetric matrix (row-major, n x n).
Spectrum symmetric_eigenvalues(const std::vector<double>& a, int n,
                               double off_diagonal_tol = default_eigen_tolerance);

struct EstradaValue {
    double value = 0;
    double error_bound = 0;
};

EstradaValue estrada_index(const Spectrum& s);
EstradaValue estrada_index(const Graph& g, double off_diagonal_tol = default_eigen_tolerance);

struct MomentSeries {
    double value = 0;
    // |EE - value| <= tail_bound
    double tail_bound = 0;
    int cutoff = 0;
};

// sum_{k<=K} M_k / k! with exact M_k, plus the tail bound
// n B^{K+1} / ((K+1)! (1 - B/(K+2))) with B = max degree >= lambda_1.
// Throws std::invalid_argument when K + 2 <= B.
MomentSeries estrada_via_moments(const Graph& g, int K);

// smallest K >= min_cutoff with tail_bound <= target
int moment_cutoff_for(const Graph& g, double target, int min_cutoff = 0);
double moment_tail_bound(int n, int max_degree, int K);

// sum of e^r over the roots of the characteristic polynomial
EstradaValue estrada_via_charpoly(const IntPolynomial& charpoly);

/*
 * Both routes for one graph. Comparisons built from two of these are only
 * trusted when each route separates the values by more than its error.
 */
struct EstradaEstimate {
    EstradaValue eigen;
    MomentSeries series;
};

struct EstimateOptions {
    double off_diagonal_tol = default_eigen_tolerance;
    int min_cutoff = 60;
    double tail_target = 1e-10;
};

EstradaEstimate estimate_estrada(const Graph& g, const EstimateOptions& opts = {});

struct EstradaComparison {
    double eigen_gap = 0;       // EE(a) - EE(b) via eigenvalues
    double eigen_bound = 0;     // summed eigen error bounds
    double series_gap = 0;      // EE(a) - EE(b) via moment series
    double series_bound = 0;    // summed tail bounds
    // eigen_gap > 10 eigen_bound and series_gap > 2 series_bound, same sign
    bool a_greater = false;
    bool b_greater = false;

    bool decided() const { return a_greater || b_greater; }
    // smallest gap-to-bound excess over the two routes, in EE units
    double margin() const;
};

EstradaComparison compare_estrada(const EstradaEstimate& a, const EstradaEstimate& b);

IntPolynomial charpoly_recursive(const Graph& g, vertex_t v);
// expands at a maximum-degree vertex, splitting components first
IntPolynomial charpoly_recursive(const Graph& g);
// Faddeev-LeVerrier over exact integers; independent of the recursion
IntPolynomial charpoly_exact(const Graph& g);

struct InterlacingReport {
    bool holds = true;
    // min over i of lambda_i(G) - lambda_i(G - v)
    double upper_margin = 0;
    // min over i of lambda_i(G - v) - lambda_{i+1}(G)
    double lower_margin = 0;
    std::vector<double> spectrum;
    std::vector<double> deleted_spectrum;
};

// lambda_{i+1}(G) <= lambda_i(G - v) <= lambda_i(G), i = 1..n-1, within 10 tol
InterlacingReport interlacing_check(const Graph& g, vertex_t v,
                                    double off_diagonal_tol = default_eigen_tolerance);

struct Quartics {
    IntPolynomial f;  // x^4 - (n+1)x^2 - 4x + 2(n-4)
    IntPolynomial g;  // x^4 - (n+1)x^2 + 3(n-5)
};

Quartics g12_quartics(int n);

}  // namespace estrada

#endif
