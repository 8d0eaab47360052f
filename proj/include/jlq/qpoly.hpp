#ifndef JLQ_QPOLY_HPP
#define JLQ_QPOLY_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jlq/bigint.hpp"

namespace jlq {

// Thrown by LaurentPoly::finalize when a negative-exponent coefficient
// survives. On valid recurrence data the negative powers always cancel,
// so this signals an implementation bug or corrupted input.
struct NegativePowerResidue : std::runtime_error {
    explicit NegativePowerResidue(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by RatPoly::to_int when the canonical denominator is not 1.
struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Dense univariate polynomial in q with exact integer coefficients,
// ascending degree. Invariant: the last stored coefficient is nonzero;
// the zero polynomial stores nothing.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly constant(BigInt c);
    // c * q^k
    static IntPoly monomial(BigInt c, std::size_t k);

    bool is_zero() const { return coeffs_.empty(); }
    // degree/order are undefined for the zero polynomial (throws).
    std::size_t degree() const;
    std::size_t order() const;

    // Coefficient of q^k; zero outside the stored range.
    const BigInt& coeff(std::size_t k) const;
    const BigInt& leading() const { return coeffs_.at(degree()); }
    std::span<const BigInt> coeffs() const { return coeffs_; }

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const BigInt& s, const IntPoly& p);
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

    // Multiplication by q^k.
    IntPoly shifted_up(std::size_t k) const;

    BigInt evaluate(const BigInt& x) const;

    // gcd of all coefficients (positive) and the reduced polynomial P/Δ.
    // Rejects the zero polynomial.
    std::pair<BigInt, IntPoly> content_split() const;

    // Exact quotient by a divisor polynomial; throws InexactDivision when
    // the remainder is nonzero. Divisor must have an invertible (unit)
    // leading coefficient over Z, i.e. +-1.
    IntPoly exact_quotient(const IntPoly& divisor) const;

    // Canonical text form: comma-separated decimal coefficients, ascending
    // degree ("6,6,3,1"). The zero polynomial renders as "0".
    std::string to_string() const;
    static IntPoly parse(std::string_view text);

  private:
    void trim();
    std::vector<BigInt> coeffs_;
};

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPoly q_analogue(unsigned long n);

// IntPoly body plus an integer exponent offset for the lowest slot,
// possibly negative. Canonical form: body's constant slot nonzero, or
// body zero with offset 0.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(IntPoly body, long offset);
    static LaurentPoly from(const IntPoly& p) { return LaurentPoly(p, 0); }
    // c * q^k, k of either sign
    static LaurentPoly monomial(BigInt c, long k);

    bool is_zero() const { return body_.is_zero(); }
    const IntPoly& body() const { return body_; }
    long offset() const { return offset_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    bool operator==(const LaurentPoly& o) const {
        return offset_ == o.offset_ && body_ == o.body_;
    }

    LaurentPoly shifted(long k) const;

    // Collapse to a plain polynomial. The offset must be >= 0: this is the
    // checkpoint asserting that all negative powers cancelled.
    IntPoly finalize() const;

  private:
    IntPoly body_;
    long offset_ = 0;
};

// IntPoly numerator over one positive integer denominator. Canonical form:
// denominator >= 1 and gcd(content(numerator), denominator) = 1.
class RatPoly {
  public:
    RatPoly() : den_(1) {}
    RatPoly(IntPoly num, BigInt den);
    static RatPoly from(const IntPoly& p) { return RatPoly(p, 1); }

    bool is_zero() const { return num_.is_zero(); }
    const IntPoly& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const BigRat& s, const RatPoly& p);
    bool operator==(const RatPoly& o) const { return num_ == o.num_ && den_ == o.den_; }

    // Coefficient of q^k as an exact rational.
    BigRat coeff(std::size_t k) const;

    // Numerator when the canonical denominator is 1, else InexactDivision.
    IntPoly to_int() const;

  private:
    void canonicalize();
    IntPoly num_;
    BigInt den_;
};

}  // namespace jlq

#endif
