#include "estrada/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "estrada/canon.hpp"
#include "estrada/walks.hpp"

namespace estrada {

namespace {

constexpr int max_sweeps = 100;
constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr long double eps_ext = std::numeric_limits<long double>::epsilon();

}  // namespace

Spectrum symmetric_eigenvalues(const std::vector<double>& matrix, int n, double off_diagonal_tol) {
    if (static_cast<int>(matrix.size()) != n * n) throw std::invalid_argument("matrix size mismatch");
    // rotations run in long double; only the reported values are rounded
    std::vector<long double> a(matrix.begin(), matrix.end());
    auto at = [&](int i, int j) -> long double& { return a[i * n + j]; };
    long double frobenius = 0;
    for (long double x : a) frobenius += x * x;
    frobenius = std::sqrt(frobenius);

    auto off_norm = [&] {
        long double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    Spectrum out;
    long double off = off_norm();
    while (off >= off_diagonal_tol) {
        if (out.sweeps == max_sweeps) {
            throw std::runtime_error("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                                     " sweeps");
        }
        ++out.sweeps;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const long double apq = at(p, q);
                if (apq == 0) continue;
                const long double theta = (at(q, q) - at(p, p)) / (2 * apq);
                const long double t =
                    (theta >= 0 ? 1.0L : -1.0L) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                const long double c = 1 / std::sqrt(t * t + 1);
                const long double s = t * c;
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0;
                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const long double arp = at(r, p), arq = at(r, q);
                    at(r, p) = at(p, r) = c * arp - s * arq;
                    at(r, q) = at(q, r) = s * arp + c * arq;
                }
            }
        }
        off = off_norm();
    }
    out.extended.resize(n);
    for (int i = 0; i < n; ++i) out.extended[i] = at(i, i);
    std::sort(out.extended.begin(), out.extended.end(), std::greater<>());
    out.values.assign(out.extended.begin(), out.extended.end());
    out.tolerance = static_cast<double>(off + 16.0L * (out.sweeps + 1) * n * eps_ext * frobenius) +
                    eps * std::fabs(out.values.empty() ? 0.0 : out.values.front());
    out.extended_tolerance = static_cast<double>(off + 16.0L * (out.sweeps + 1) * n * eps_ext * frobenius);
    return out;
}

Spectrum eigenvalues(const Graph& g, double off_diagonal_tol) {
    const int n = g.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& e : g.edges()) a[e.a * n + e.b] = a[e.b * n + e.a] = 1.0;
    return symmetric_eigenvalues(a, n, off_diagonal_tol);
}

EstradaValue estrada_index(const Spectrum& s) {
    EstradaValue out;
    if (s.extended.size() == s.values.size()) {
        long double sum = 0;
        for (long double l : s.extended) sum += std::exp(l);
        out.value = static_cast<double>(sum);
        out.error_bound = static_cast<double>(sum * std::expm1(static_cast<long double>(s.extended_tolerance)) +
                                              4 * s.extended.size() * eps_ext * sum) +
                          eps * out.value;
        return out;
    }
    for (double l : s.values) out.value += std::exp(l);
    out.error_bound = out.value * std::expm1(s.tolerance) + 4 * s.values.size() * eps * out.value;
    return out;
}

EstradaValue estrada_index(const Graph& g, double off_diagonal_tol) {
    return estrada_index(eigenvalues(g, off_diagonal_tol));
}

double moment_tail_bound(int n, int max_degree, int K) {
    if (max_degree == 0 || n == 0) return 0.0;
    const double b = max_degree;
    if (K + 2 <= b) return std::numeric_limits<double>::infinity();
    const double log_term = std::log(static_cast<double>(n)) + (K + 1) * std::log(b) - std::lgamma(K + 2.0);
    return std::exp(log_term) / (1 - b / (K + 2));
}

MomentSeries estrada_via_moments(const Graph& g, int K) {
    if (K < 0) throw std::invalid_argument("moment cutoff must be >= 0");
    const int b = g.max_degree();
    if (b > 0 && K + 2 <= b) {
        throw std::invalid_argument("moment cutoff K = " + std::to_string(K) +
                                    " too small for the tail bound; need K + 2 > " + std::to_string(b));
    }
    using boost::multiprecision::cpp_bin_float_50;
    const WalkTable moments = spectral_moments(g, K);
    cpp_bin_float_50 sum = 0, factorial = 1;
    for (int k = 0; k <= K; ++k) {
        if (k > 0) factorial *= k;
        sum += cpp_bin_float_50(moments.counts[k]) / factorial;
    }
    MomentSeries out;
    out.value = sum.convert_to<double>();
    out.tail_bound = moment_tail_bound(g.order(), b, K) + 2 * eps * std::fabs(out.value);
    out.cutoff = K;
    return out;
}

int moment_cutoff_for(const Graph& g, double target, int min_cutoff) {
    const int b = g.max_degree();
    int K = std::max(min_cutoff, b - 1);
    while (moment_tail_bound(g.order(), b, K) > target) ++K;
    return K;
}

EstradaValue estrada_via_charpoly(const IntPolynomial& charpoly) {
    EstradaValue out;
    for (long double r : real_roots(charpoly)) {
        const long double term = std::exp(r);
        out.value += static_cast<double>(term);
        out.error_bound += static_cast<double>(term) * 1e-12 * std::max(1.0L, std::fabs(r));
    }
    return out;
}

EstradaEstimate estimate_estrada(const Graph& g, const EstimateOptions& opts) {
    EstradaEstimate e;
    e.eigen = estrada_index(g, opts.off_diagonal_tol);
    e.series = estrada_via_moments(g, moment_cutoff_for(g, opts.tail_target, opts.min_cutoff));
    return e;
}

double EstradaComparison::margin() const {
    const double eig = std::fabs(eigen_gap) - 10 * eigen_bound;
    const double ser = std::fabs(series_gap) - 2 * series_bound;
    return std::min(eig, ser);
}

EstradaComparison compare_estrada(const EstradaEstimate& a, const EstradaEstimate& b) {
    EstradaComparison c;
    c.eigen_gap = a.eigen.value - b.eigen.value;
    c.eigen_bound = a.eigen.error_bound + b.eigen.error_bound;
    c.series_gap = a.series.value - b.series.value;
    c.series_bound = a.series.tail_bound + b.series.tail_bound;
    const bool eig_ok = std::fabs(c.eigen_gap) > 10 * c.eigen_bound;
    const bool ser_ok = std::fabs(c.series_gap) > 2 * c.series_bound;
    if (eig_ok && ser_ok) {
        if (c.eigen_gap > 0 && c.series_gap > 0) c.a_greater = true;
        if (c.eigen_gap < 0 && c.series_gap < 0) c.b_greater = true;
    }
    return c;
}

namespace {

const IntPolynomial& x_poly() {
    static const IntPolynomial x{0, 1};
    return x;
}

class CharpolyCache {
public:
    std::optional<IntPolynomial> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const std::string& key, const IntPolynomial& p) {
        std::unique_lock lock(mutex_);
        map_.emplace(key, p);
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, IntPolynomial> map_;
};

CharpolyCache& cache() {
    static CharpolyCache c;
    return c;
}

std::string cache_key(const Graph& g) {
    if (g.order() <= canonical_form_cap) return "C" + canonical_form(g).bytes();
    std::string key = "R";
    for (auto r : g.rows()) key.append(reinterpret_cast<const char*>(&r), sizeof r);
    return key;
}

std::vector<std::vector<vertex_t>> components(const Graph& g) {
    std::vector<std::vector<vertex_t>> out;
    std::uint64_t unseen = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    while (unseen) {
        std::uint64_t comp = unseen & -unseen, frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
            frontier = next & ~comp;
            comp |= next;
        }
        unseen &= ~comp;
        std::vector<vertex_t> vs;
        for (std::uint64_t c = comp; c; c &= c - 1) vs.push_back(std::countr_zero(c));
        out.push_back(std::move(vs));
    }
    return out;
}

IntPolynomial expand_at(const Graph& g, vertex_t v);

IntPolynomial charpoly_memo(const Graph& g) {
    if (g.order() == 0) return IntPolynomial{1};
    if (g.order() == 1) return x_poly();
    if (!g.connected()) {
        IntPolynomial out{1};
        for (const auto& comp : components(g)) out *= charpoly_memo(induced_subgraph(g, comp));
        return out;
    }
    const std::string key = cache_key(g);
    if (auto hit = cache().find(key)) return *hit;
    vertex_t hub = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(hub)) hub = v;
    IntPolynomial out = expand_at(g, hub);
    cache().insert(key, out);
    return out;
}

IntPolynomial expand_at(const Graph& g, vertex_t v) {
    const vertex_t just_v[] = {v};
    IntPolynomial out = x_poly() * charpoly_memo(subgraph_delete(g, just_v).graph);
    for (vertex_t w : g.neighbors(v)) {
        const vertex_t pair[] = {v, w};
        if (g.order() == 2) {
            out -= IntPolynomial{1};
        } else {
            out -= charpoly_memo(subgraph_delete(g, pair).graph);
        }
    }
    for (const auto& cycle : cycles_through(g, v)) {
        IntPolynomial term = static_cast<int>(cycle.size()) == g.order()
                                 ? IntPolynomial{1}
                                 : charpoly_memo(subgraph_delete(g, cycle).graph);
        out -= term * BigInt(2);
    }
    return out;
}

}  // namespace

IntPolynomial charpoly_recursive(const Graph& g, vertex_t v) {
    if (!g.contains(v)) throw std::invalid_argument("charpoly_recursive: vertex not in graph");
    if (g.order() == 1) return x_poly();
    return expand_at(g, v);
}

IntPolynomial charpoly_recursive(const Graph& g) { return charpoly_memo(g); }

IntPolynomial charpoly_exact(const Graph& g) {
    const int n = g.order();
    std::vector<BigInt> c(n + 1);
    c[n] = 1;
    if (n == 0) return IntPolynomial(std::move(c));
    // M_1 = I; A M_k; c_{n-k} = -tr(A M_k) / k; M_{k+1} = A M_k + c_{n-k} I
    std::vector<BigInt> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    std::vector<BigInt> am(m.size());
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                BigInt s = 0;
                for (std::uint64_t r = g.row(i); r; r &= r - 1) s += m[std::countr_zero(r) * n + j];
                am[i * n + j] = std::move(s);
            }
        }
        BigInt trace = 0;
        for (int i = 0; i < n; ++i) trace += am[i * n + i];
        if (trace % k != 0) throw std::logic_error("charpoly_exact: non-integral coefficient");
        c[n - k] = -trace / k;
        for (int i = 0; i < n; ++i) am[i * n + i] += c[n - k];
        std::swap(m, am);
    }
    return IntPolynomial(std::move(c));
}

InterlacingReport interlacing_check(const Graph& g, vertex_t v, double off_diagonal_tol) {
    if (g.order() < 2) throw std::invalid_argument("interlacing_check needs at least 2 vertices");
    if (!g.contains(v)) throw std::invalid_argument("interlacing_check: vertex not in graph");
    const vertex_t just_v[] = {v};
    const Spectrum full = eigenvalues(g, off_diagonal_tol);
    const Spectrum less = eigenvalues(subgraph_delete(g, just_v).graph, off_diagonal_tol);
    const double slack = 10 * std::max(full.tolerance, less.tolerance);
    InterlacingReport r;
    r.spectrum = full.values;
    r.deleted_spectrum = less.values;
    r.upper_margin = r.lower_margin = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < g.order(); ++i) {
        r.upper_margin = std::min(r.upper_margin, full.values[i] - less.values[i]);
        r.lower_margin = std::min(r.lower_margin, less.values[i] - full.values[i + 1]);
    }
    r.holds = r.upper_margin >= -slack && r.lower_margin >= -slack;
    return r;
}

Quartics g12_quartics(int n) {
    if (n < 5) throw std::invalid_argument("g12_quartics needs n >= 5");
    const long long m = n;
    return {IntPolynomial{2 * (m - 4), -4, -(m + 1), 0, 1}, IntPolynomial{3 * (m - 5), 0, -(m + 1), 0, 1}};
}

}  // namespace estrada
