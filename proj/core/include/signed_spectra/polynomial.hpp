#ifndef SIGNED_SPECTRA_POLYNOMIAL_HPP
#define SIGNED_SPECTRA_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace signed_spectra {

/// Dense univariate polynomial over the integers, coefficients stored
/// constant term first. Trailing zero coefficients are never stored, so the
/// zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> ascending);
    Polynomial(std::initializer_list<long> ascending);

    /// x - root
    static Polynomial linear(const mpz_class& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
    mpz_class coefficient(std::size_t k) const;
    bool is_monic() const;

    mpz_class operator()(const mpz_class& x) const;

    struct LinearDivision;
    /// Synthetic division by (x - root).
    LinearDivision divide_by_linear(const mpz_class& root) const;

    /// p(-x)
    Polynomial reflected() const;
    Polynomial operator-() const;

    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

    /// Human-readable, highest power first: "x^3 - 3x - 2".
    std::string to_string() const;
    /// JSON integer array, constant term first: "[-2, -3, 0, 1]".
    std::string to_json() const;

private:
    void trim();

    std::vector<mpz_class> coeffs_;
};

struct Polynomial::LinearDivision {
    Polynomial quotient;
    mpz_class remainder;
};

Polynomial pow(const Polynomial& p, unsigned exponent);

/// Characteristic polynomials are monic with degree equal to the graph order.
using CharPoly = Polynomial;

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_POLYNOMIAL_HPP
