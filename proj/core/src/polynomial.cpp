#include "signed_spectra/polynomial.hpp"

#include <sstream>

namespace signed_spectra {

Polynomial::Polynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::linear(const mpz_class& root) { return Polynomial(std::vector<mpz_class>{-root, 1}); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class Polynomial::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : mpz_class(0); }

bool Polynomial::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

mpz_class Polynomial::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial::LinearDivision Polynomial::divide_by_linear(const mpz_class& root) const {
    if (coeffs_.empty()) return {Polynomial(), 0};
    const std::size_t d = coeffs_.size() - 1;
    std::vector<mpz_class> q(d);
    mpz_class carry = coeffs_[d];
    for (std::size_t k = d; k-- > 0;) {
        q[k] = carry;
        carry = coeffs_[k] + carry * root;
    }
    return {Polynomial(std::move(q)), carry};
}

Polynomial Polynomial::reflected() const {
    std::vector<mpz_class> c(coeffs_);
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<mpz_class> c(coeffs_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.coeffs_.empty() || q.coeffs_.empty()) return Polynomial();
    std::vector<mpz_class> r(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(r));
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
    Polynomial result{1};
    for (unsigned i = 0; i < exponent; ++i) result = result * p;
    return result;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || k == 0) out << mag.get_str();
        if (k >= 1) out << 'x';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

std::string Polynomial::to_json() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ", ";
        out += coeffs_[k].get_str();
    }
    return out + "]";
}

}  // namespace signed_spectra
