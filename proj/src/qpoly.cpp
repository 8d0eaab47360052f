#include "jlq/qpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace jlq {

BigInt exact_div(const BigInt& a, const BigInt& b) {
    assert(b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()));
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, std::size_t k) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(k, BigInt(0));
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

std::size_t IntPoly::degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return coeffs_.size() - 1;
}

std::size_t IntPoly::order() const {
    if (is_zero()) throw std::logic_error("order of zero polynomial");
    std::size_t k = 0;
    while (coeffs_[k] == 0) ++k;
    return k;
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    static const BigInt zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntPoly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    // Schoolbook; exactness matters, asymptotics do not at these degrees.
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
    if (s == 0) return {};
    IntPoly r = p;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    IntPoly r;
    r.coeffs_.assign(k, BigInt(0));
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

BigInt IntPoly::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<BigInt, IntPoly> IntPoly::content_split() const {
    if (is_zero()) throw std::invalid_argument("content of zero polynomial");
    BigInt delta(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(delta.get_mpz_t(), delta.get_mpz_t(), c.get_mpz_t());
        if (delta == 1) break;
    }
    IntPoly reduced = *this;
    if (delta != 1)
        for (auto& c : reduced.coeffs_)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), delta.get_mpz_t());
    return {delta, reduced};
}

IntPoly IntPoly::exact_quotient(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) return {};
    const BigInt& lead = divisor.leading();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("exact_quotient requires a unit leading coefficient");
    if (degree() < divisor.degree())
        throw InexactDivision("degree of dividend below divisor");
    IntPoly rem = *this;
    std::vector<BigInt> q(degree() - divisor.degree() + 1, BigInt(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt c = rem.coeff(k + divisor.degree());
        if (c == 0) continue;
        if (lead == -1) c = -c;
        q[k] = c;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            mpz_submul(rem.coeffs_[k + j].get_mpz_t(), c.get_mpz_t(),
                       divisor.coeffs_[j].get_mpz_t());
    }
    rem.trim();
    if (!rem.is_zero()) throw InexactDivision("nonzero remainder in exact_quotient");
    return IntPoly(std::move(q));
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ',';
        out << coeffs_[i].get_str();
    }
    return out.str();
}

IntPoly IntPoly::parse(std::string_view text) {
    std::vector<BigInt> cs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - pos));
        if (tok.empty()) throw std::invalid_argument("empty coefficient in polynomial text");
        BigInt v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw std::invalid_argument("bad coefficient '" + tok + "'");
        cs.push_back(std::move(v));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntPoly(std::move(cs));
}

IntPoly q_analogue(unsigned long n) {
    return IntPoly(std::vector<BigInt>(n, BigInt(1)));
}

LaurentPoly::LaurentPoly(IntPoly body, long offset) : body_(std::move(body)), offset_(offset) {
    if (body_.is_zero()) {
        offset_ = 0;
    } else {
        const long ord = static_cast<long>(body_.order());
        if (ord > 0) {
            std::vector<BigInt> cs(body_.coeffs().begin() + ord, body_.coeffs().end());
            body_ = IntPoly(std::move(cs));
            offset_ += ord;
        }
    }
}

LaurentPoly LaurentPoly::monomial(BigInt c, long k) {
    return LaurentPoly(IntPoly::constant(std::move(c)), k);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long base = std::min(offset_, o.offset_);
    IntPoly sum = body_.shifted_up(static_cast<std::size_t>(offset_ - base)) +
                  o.body_.shifted_up(static_cast<std::size_t>(o.offset_ - base));
    return *this = LaurentPoly(std::move(sum), base);
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = LaurentPoly(-o.body_, o.offset_);
    const long base = std::min(offset_, o.offset_);
    IntPoly diff = body_.shifted_up(static_cast<std::size_t>(offset_ - base)) -
                   o.body_.shifted_up(static_cast<std::size_t>(o.offset_ - base));
    return *this = LaurentPoly(std::move(diff), base);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.body_ * b.body_, a.offset_ + b.offset_);
}

LaurentPoly LaurentPoly::shifted(long k) const {
    if (is_zero()) return {};
    return LaurentPoly(body_, offset_ + k);
}

IntPoly LaurentPoly::finalize() const {
    if (is_zero()) return {};
    if (offset_ < 0)
        throw NegativePowerResidue("nonzero coefficient at exponent " +
                                   std::to_string(offset_));
    return body_.shifted_up(static_cast<std::size_t>(offset_));
}

RatPoly::RatPoly(IntPoly num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    canonicalize();
}

void RatPoly::canonicalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (den_ == 1) return;
    BigInt g = gcd(num_.content_split().first, den_);
    if (g != 1) {
        std::vector<BigInt> cs(num_.coeffs().begin(), num_.coeffs().end());
        for (auto& c : cs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        num_ = IntPoly(std::move(cs));
        den_ = exact_div(den_, g);
    }
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    const BigInt m = lcm(den_, o.den_);
    IntPoly sum = exact_div(m, den_) * num_ + exact_div(m, o.den_) * o.num_;
    return *this = RatPoly(std::move(sum), m);
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    const BigInt m = lcm(den_, o.den_);
    IntPoly diff = exact_div(m, den_) * num_ - exact_div(m, o.den_) * o.num_;
    return *this = RatPoly(std::move(diff), m);
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    return RatPoly(a.num_ * b.num_, a.den_ * b.den_);
}

RatPoly operator*(const BigRat& s, const RatPoly& p) {
    return RatPoly(BigInt(s.get_num()) * p.num_, p.den_ * s.get_den());
}

BigRat RatPoly::coeff(std::size_t k) const {
    BigRat r(num_.coeff(k), den_);
    r.canonicalize();
    return r;
}

IntPoly RatPoly::to_int() const {
    if (den_ != 1)
        throw InexactDivision("denominator " + den_.get_str() + " after canonicalization");
    return num_;
}

}  // namespace jlq
