#ifndef JLQ_BIGINT_HPP
#define JLQ_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace jlq {

// Exact scalar arithmetic everywhere; no floating point in any data path.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient a/b when b is known to divide a; asserts exactness.
BigInt exact_div(const BigInt& a, const BigInt& b);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace jlq

#endif
