#ifndef SIGNED_SPECTRA_SPECTRAL_HPP
#define SIGNED_SPECTRA_SPECTRAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "signed_spectra/polynomial.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Exact det(xI - A), computed division-free (Berkowitz). A checked 128-bit
/// pass is tried first; on overflow the computation restarts over GMP.
CharPoly char_poly(const SignedGraph& g);

/// p = (x-1)^f (x+1)^g q with f, g maximal.
struct PlusMinusOneSplit {
    unsigned f = 0;
    unsigned g = 0;
    Polynomial quotient;
};
PlusMinusOneSplit extract_pm1(const Polynomial& p);

/// (a, b, n) with characteristic polynomial (x^2 - ax - b)(x-1)^f (x+1)^g,
/// f = (n-2+a)/2, g = (n-2-a)/2. The two irrational eigenvalues are never
/// materialised.
class CharTriple {
public:
    /// Throws std::invalid_argument unless b > |a|+1, n >= 2, n = a (mod 2)
    /// and f, g >= 0.
    static CharTriple make(std::int64_t a, std::int64_t b, std::int64_t n);
    static bool valid(std::int64_t a, std::int64_t b, std::int64_t n) noexcept;

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t n() const noexcept { return n_; }
    /// Multiplicities of the eigenvalues 1 and -1.
    std::int64_t f() const noexcept { return (n_ - 2 - a_) / 2; }
    std::int64_t g() const noexcept { return (n_ - 2 + a_) / 2; }

    /// Triple of the negative: (-a, b, n).
    CharTriple negated() const { return CharTriple(-a_, b_, n_); }
    /// Triple after adding `count` isolated edges: (a, b, n + 2*count).
    CharTriple padded(std::int64_t count) const { return CharTriple(a_, b_, n_ + 2 * count); }

    /// The full characteristic polynomial this triple stands for.
    Polynomial polynomial() const;

    /// "[a, b, n]"
    std::string to_json() const;

    auto operator<=>(const CharTriple&) const = default;
    bool operator==(const CharTriple&) const = default;

private:
    CharTriple(std::int64_t a, std::int64_t b, std::int64_t n) : a_(a), b_(b), n_(n) {}

    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
    std::int64_t n_ = 0;
};

/// Parses "[a, b, n]" or "a,b,n".
CharTriple parse_triple(const std::string& text);

enum class Membership { NotInG, InGOnly, InGPrime };

/// For InGOnly graphs: which side of the spectrum stays within [-1, 1].
/// Such graphs are, up to switching and negation, unions of complete graphs;
/// they are reported but not analysed further.
enum class Boundary { None, AllAtLeastMinusOne, AllAtMostOne, AllWithinUnit };

struct GMembership {
    Membership tag = Membership::NotInG;
    std::optional<CharTriple> triple;  // present iff tag == InGPrime
    Boundary boundary = Boundary::None;
};

GMembership classify(const SignedGraph& g);
GMembership classify_polynomial(const CharPoly& p);

class NotInGPrimeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Throws NotInGPrimeError when classify(g).tag != InGPrime.
CharTriple triple_of(const SignedGraph& g);

const char* to_string(Membership m);
const char* to_string(Boundary b);

}  // namespace signed_spectra

#endif  // SIGNED_SPECTRA_SPECTRAL_HPP
