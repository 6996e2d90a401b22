#include "estrada/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace estrada {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
    for (auto c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::monomial(int degree, BigInt coefficient) {
    std::vector<BigInt> c(degree + 1);
    c[degree] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int power) const {
    if (power < 0 || power > degree()) return 0;
    return coeffs_[power];
}

long double IntPolynomial::evaluate(long double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + it->convert_to<long double>();
    }
    return acc;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << "x";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = gcd(g, c);
    std::vector<BigInt> out = p.coefficients();
    if (p.leading() < 0) g = -g;
    for (auto& c : out) c /= g;
    return IntPolynomial(std::move(out));
}

// lc(b)^(deg a - deg b + 1) * a = q * b + r over Z
std::pair<IntPolynomial, IntPolynomial> pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<BigInt> r = a.coefficients();
    const int db = b.degree();
    const BigInt& lb = b.leading();
    if (a.degree() < db) return {IntPolynomial{}, a};
    std::vector<BigInt> q(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        for (auto& c : q) c *= lb;
        for (auto& c : r) c *= lb;
        const BigInt t = r[k] / lb;
        q[k - db] += t;
        for (int i = 0; i <= db; ++i) r[k - db + i] -= t * b.coefficients()[i];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        auto r = pseudo_divide(a, b).second;
        a = std::move(b);
        b = primitive_part(r);
    }
    return a;
}

// a / b up to a scalar, when b divides a over Q
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = pseudo_divide(a, b);
    if (!r.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
    return primitive_part(q);
}

// simple real roots of a square-free, real-rooted polynomial
std::vector<long double> simple_roots(const IntPolynomial& p) {
    if (p.degree() <= 0) return {};
    if (p.degree() == 1) {
        return {-p.coefficients()[0].convert_to<long double>() / p.coefficients()[1].convert_to<long double>()};
    }
    const auto critical = simple_roots(primitive_part(p.derivative()));
    long double bound = 0;
    const long double lead = abs(p.leading()).convert_to<long double>();
    for (int i = 0; i < p.degree(); ++i) {
        bound = std::max(bound, abs(p.coefficients()[i]).convert_to<long double>() / lead);
    }
    bound += 1;
    std::vector<long double> knots{-bound};
    knots.insert(knots.end(), critical.begin(), critical.end());
    knots.push_back(bound);

    std::vector<long double> roots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        long double a = knots[i], b = knots[i + 1];
        long double fa = p.evaluate(a), fb = p.evaluate(b);
        if (fa == 0) {
            roots.push_back(a);
            continue;
        }
        if ((fa < 0) == (fb < 0) || fb == 0) continue;
        for (int it = 0; it < 200 && b - a > 0; ++it) {
            const long double m = a + (b - a) / 2;
            if (m <= a || m >= b) break;
            const long double fm = p.evaluate(m);
            if (fm == 0) {
                a = b = m;
                break;
            }
            if ((fm < 0) == (fa < 0)) {
                a = m;
                fa = fm;
            } else {
                b = m;
            }
        }
        roots.push_back(a + (b - a) / 2);
    }
    if (p.evaluate(knots.back()) == 0) roots.push_back(knots.back());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<long double> real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("real_roots of the zero polynomial");
    // a root of multiplicity m is a simple root of cur / gcd(cur, cur') for
    // the first m levels of cur <- gcd(cur, cur')
    std::vector<long double> out;
    IntPolynomial cur = primitive_part(p);
    while (cur.degree() > 0) {
        IntPolynomial g = poly_gcd(cur, cur.derivative());
        IntPolynomial square_free = g.degree() > 0 ? divide_exact(cur, g) : cur;
        const auto roots = simple_roots(square_free);
        out.insert(out.end(), roots.begin(), roots.end());
        cur = std::move(g);
    }
    std::sort(out.begin(), out.end());
    if (static_cast<int>(out.size()) != p.degree()) {
        throw std::runtime_error("real_roots: found " + std::to_string(out.size()) + " roots for degree " +
                                 std::to_string(p.degree()) + " polynomial " + p.to_string());
    }
    return out;
}

}  // namespace estrada
