#include "signed_spectra/spectral.hpp"

#include <cstdlib>
#include <sstream>
#include <vector>

namespace signed_spectra {
namespace {

__extension__ typedef __int128 wide_int;
__extension__ typedef unsigned __int128 wide_uint;

struct Overflow {};

// 128-bit integer that throws Overflow instead of wrapping.
struct Checked {
    wide_int v = 0;

    Checked() = default;
    Checked(long x) : v(x) {}

    friend Checked operator+(Checked a, Checked b) {
        Checked r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Checked operator-(Checked a, Checked b) {
        Checked r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    friend Checked operator*(Checked a, Checked b) {
        Checked r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
        return r;
    }
    Checked operator-() const { return Checked{} - *this; }
    Checked& operator+=(Checked b) { return *this = *this + b; }
    Checked& operator-=(Checked b) { return *this = *this - b; }
};

mpz_class to_mpz(const Checked& c) {
    const bool negative = c.v < 0;
    wide_uint mag = negative ? -static_cast<wide_uint>(c.v) : static_cast<wide_uint>(c.v);
    mpz_class out = 0;
    mpz_class shift = 1;
    while (mag) {
        out += shift * mpz_class(static_cast<unsigned long>(mag & 0xFFFFFFFFu));
        shift <<= 32;
        mag >>= 32;
    }
    return negative ? mpz_class(-out) : out;
}

mpz_class to_mpz(const mpz_class& c) { return c; }

// Berkowitz: the characteristic polynomial of the leading (r+1)x(r+1) block is
// a Toeplitz matrix times that of the leading r x r block. The Toeplitz column
// is 1, -a_rr, -R C, -R M C, -R M^2 C, ... with M the leading block, R the new
// row and C the new column. Adjacency entries are in {-1,0,1}, so the
// matrix-vector steps use only additions. Returns descending coefficients.
template <class T>
std::vector<T> berkowitz(const SignedGraph& g) {
    const std::size_t n = g.order();
    std::vector<T> p{T(1)};
    std::vector<T> t, v, w, q;
    for (std::size_t r = 0; r < n; ++r) {
        t.assign(r + 2, T(0));
        t[0] = T(1);
        t[1] = T(-static_cast<long>(g.sign(r, r)));
        v.assign(r, T(0));
        for (std::size_t i = 0; i < r; ++i) v[i] = T(static_cast<long>(g.sign(i, r)));
        for (std::size_t k = 0; k < r; ++k) {
            T acc(0);
            for (std::size_t i = 0; i < r; ++i) {
                const int a = g.sign(r, i);
                if (a > 0) acc += v[i];
                if (a < 0) acc -= v[i];
            }
            t[k + 2] = -acc;
            if (k + 1 == r) break;
            w.assign(r, T(0));
            for (std::size_t i = 0; i < r; ++i) {
                const auto row = g.row(i);
                T s(0);
                for (std::size_t j = 0; j < r; ++j) {
                    if (row[j] > 0) s += v[j];
                    if (row[j] < 0) s -= v[j];
                }
                w[i] = s;
            }
            v.swap(w);
        }
        q.assign(r + 2, T(0));
        for (std::size_t i = 0; i < r + 2; ++i) {
            for (std::size_t j = 0; j <= std::min(i, r); ++j) {
                if (i - j < t.size()) q[i] += t[i - j] * p[j];
            }
        }
        p.swap(q);
    }
    return p;
}

template <class T>
CharPoly as_polynomial(const std::vector<T>& descending) {
    std::vector<mpz_class> asc(descending.size());
    for (std::size_t k = 0; k < descending.size(); ++k) asc[descending.size() - 1 - k] = to_mpz(descending[k]);
    return CharPoly(std::move(asc));
}

}  // namespace

CharPoly char_poly(const SignedGraph& g) {
    try {
        return as_polynomial(berkowitz<Checked>(g));
    } catch (const Overflow&) {
        return as_polynomial(berkowitz<mpz_class>(g));
    }
}

PlusMinusOneSplit extract_pm1(const Polynomial& p) {
    PlusMinusOneSplit out;
    out.quotient = p;
    if (p.degree() < 0) return out;
    for (const int root : {1, -1}) {
        while (out.quotient.degree() >= 1) {
            auto division = out.quotient.divide_by_linear(root);
            if (division.remainder != 0) break;
            out.quotient = std::move(division.quotient);
            ++(root == 1 ? out.f : out.g);
        }
    }
    return out;
}

bool CharTriple::valid(std::int64_t a, std::int64_t b, std::int64_t n) noexcept {
    if (n < 2 || b <= std::llabs(a) + 1) return false;
    if ((n - a) % 2 != 0) return false;
    return n - 2 + a >= 0 && n - 2 - a >= 0;
}

CharTriple CharTriple::make(std::int64_t a, std::int64_t b, std::int64_t n) {
    if (!valid(a, b, n)) {
        throw std::invalid_argument("invalid characteristic triple (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(n) + ")");
    }
    return CharTriple(a, b, n);
}

Polynomial CharTriple::polynomial() const {
    const Polynomial quadratic(std::vector<mpz_class>{mpz_class(-b_), mpz_class(-a_), 1});
    return quadratic * pow(Polynomial::linear(1), static_cast<unsigned>(f())) *
           pow(Polynomial::linear(-1), static_cast<unsigned>(g()));
}

std::string CharTriple::to_json() const {
    return "[" + std::to_string(a_) + ", " + std::to_string(b_) + ", " + std::to_string(n_) + "]";
}

CharTriple parse_triple(const std::string& text) {
    std::string cleaned;
    for (char c : text) cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
    std::istringstream in(cleaned);
    long long a = 0, b = 0, n = 0;
    std::string rest;
    if (!(in >> a >> b >> n) || (in >> rest)) {
        throw std::invalid_argument("triple must be three integers a,b,n: '" + text + "'");
    }
    return CharTriple::make(a, b, n);
}

GMembership classify_polynomial(const CharPoly& p) {
    const auto split = extract_pm1(p);
    const Polynomial& q = split.quotient;
    GMembership out;
    if (q.degree() > 2) {
        out.tag = Membership::NotInG;
        return out;
    }
    out.tag = Membership::InGOnly;
    bool above = false;  // some root > 1
    bool below = false;  // some root < -1
    if (q.degree() == 1) {
        const mpz_class root = -q.coefficient(0);
        above = root > 1;
        below = root < -1;
    } else if (q.degree() == 2) {
        const mpz_class a = -q.coefficient(1);
        const mpz_class b = -q.coefficient(0);
        const mpz_class at_one = q(1);
        const mpz_class at_minus_one = q(-1);
        // Real roots r >= s; q(1) < 0 puts 1 strictly between them.
        above = at_one < 0 || (at_one > 0 && a > 2);
        below = at_minus_one < 0 || (at_minus_one > 0 && a < -2);
        if (at_one < 0 && at_minus_one < 0) {
            out.tag = Membership::InGPrime;
            out.triple = CharTriple::make(a.get_si(), b.get_si(), p.degree());
            return out;
        }
    }
    if (above && !below) {
        out.boundary = Boundary::AllAtLeastMinusOne;
    } else if (below && !above) {
        out.boundary = Boundary::AllAtMostOne;
    } else {
        out.boundary = Boundary::AllWithinUnit;
    }
    return out;
}

GMembership classify(const SignedGraph& g) { return classify_polynomial(char_poly(g)); }

CharTriple triple_of(const SignedGraph& g) {
    const auto m = classify(g);
    if (m.tag != Membership::InGPrime) {
        throw NotInGPrimeError(std::string("graph is not in G' (classified as ") + to_string(m.tag) + ")");
    }
    return *m.triple;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::NotInG: return "NotInG";
        case Membership::InGOnly: return "InGOnly";
        case Membership::InGPrime: return "InGPrime";
    }
    return "?";
}

const char* to_string(Boundary b) {
    switch (b) {
        case Boundary::None: return "None";
        case Boundary::AllAtLeastMinusOne: return "AllAtLeastMinusOne";
        case Boundary::AllAtMostOne: return "AllAtMostOne";
        case Boundary::AllWithinUnit: return "AllWithinUnit";
    }
    return "?";
}

}  // namespace signed_spectra
