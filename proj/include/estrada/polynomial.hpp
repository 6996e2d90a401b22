#ifndef ESTRADA_POLYNOMIAL_HPP
#define ESTRADA_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace estrada {

using BigInt = boost::multiprecision::cpp_int;

// Exact univariate polynomial, coefficients in ascending degree order.
// The zero polynomial has no coefficients; trailing zeros are trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> coefficients);

    static IntPolynomial monomial(int degree, BigInt coefficient = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    // zero beyond the degree
    BigInt coefficient(int power) const;
    const BigInt& leading() const { return coeffs_.back(); }

    long double evaluate(long double x) const;
    BigInt evaluate(const BigInt& x) const;
    IntPolynomial derivative() const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);
    IntPolynomial& operator*=(const BigInt& scalar);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }

    bool operator==(const IntPolynomial&) const = default;

    // e.g. "x^4 - 7x^2 - 4x + 4"
    std::string to_string() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/*
 * Real roots of a polynomial whose roots are all real (characteristic
 * polynomials of symmetric matrices), ascending, with multiplicity. Roots
 * of p are isolated between consecutive roots of p', found recursively,
 * then polished by bisection in long double.
 */
std::vector<long double> real_roots(const IntPolynomial& p);

}  // namespace estrada

#endif
