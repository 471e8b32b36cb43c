#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <string>

#include "error.hpp"

namespace tcb {

using Int = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 abs128(i128 v) {
    return v < 0 ? -static_cast<u128>(v) : static_cast<u128>(v);
}

inline u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int int_from_i128(i128 v) {
    bool neg = v < 0;
    u128 a = abs128(v);
    Int hi = static_cast<std::uint64_t>(a >> 64);
    Int r = (hi << 64) + static_cast<std::uint64_t>(a);
    return neg ? -r : r;
}

}  // namespace detail

/// Exact rational scalar. Values whose numerator and denominator fit in 62
/// bits are kept inline; anything larger transparently promotes to an
/// arbitrary-precision representation. All arithmetic is exact.
class Rat {
public:
    Rat() = default;
    Rat(int v) : n_(v) {}
    Rat(long v) : n_(v) {}
    Rat(long long v) : n_(v) {}
    Rat(const Int& v) { *this = from_big(BigRat(v)); }
    Rat(const Int& num, const Int& den) { *this = from_big(BigRat(num, den)); }

    static Rat from_big(const BigRat& v) {
        Rat r;
        if (fits(boost::multiprecision::numerator(v)) &&
            fits(boost::multiprecision::denominator(v))) {
            r.n_ = static_cast<long long>(boost::multiprecision::numerator(v));
            r.d_ = static_cast<long long>(boost::multiprecision::denominator(v));
        } else {
            r.big_ = std::make_shared<const BigRat>(v);
        }
        return r;
    }

    bool is_big() const { return static_cast<bool>(big_); }

    int sign() const {
        if (big_) return big_->sign();
        return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
    }
    bool is_zero() const { return sign() == 0; }

    Int numerator() const {
        if (big_) return Int(boost::multiprecision::numerator(*big_));
        return Int(n_);
    }
    Int denominator() const {
        if (big_) return Int(boost::multiprecision::denominator(*big_));
        return Int(d_);
    }
    bool is_integer() const { return denominator() == 1; }

    BigRat big() const {
        if (big_) return *big_;
        return BigRat(n_, d_);
    }

    /// Lowest-terms "p/q", or plain "p" for integers.
    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

    friend Rat operator-(const Rat& a) {
        if (a.big_) return from_big(-*a.big_);
        Rat r;
        r.n_ = -a.n_;
        r.d_ = a.d_;
        return r;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            detail::i128 num = static_cast<detail::i128>(a.n_) * b.d_ +
                               static_cast<detail::i128>(b.n_) * a.d_;
            detail::i128 den = static_cast<detail::i128>(a.d_) * b.d_;
            return make(num, den);
        }
        return from_big(a.big() + b.big());
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

    friend Rat operator*(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            return make(static_cast<detail::i128>(a.n_) * b.n_,
                        static_cast<detail::i128>(a.d_) * b.d_);
        }
        return from_big(a.big() * b.big());
    }

    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) fail("DivisionByZero", "rational division by zero");
        if (!a.big_ && !b.big_) {
            return make(static_cast<detail::i128>(a.n_) * b.d_,
                        static_cast<detail::i128>(a.d_) * b.n_);
        }
        return from_big(a.big() / b.big());
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
        return a.big() == b.big();
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        if (!a.big_ && !b.big_) {
            return static_cast<detail::i128>(a.n_) * b.d_ <
                   static_cast<detail::i128>(b.n_) * a.d_;
        }
        return a.big() < b.big();
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    // 2^62 bound keeps every cross product below 2^125, safely inside i128.
    static constexpr long long kMax = 1LL << 62;

    static bool fits(const Int& v) { return v > -kMax && v < kMax; }

    static Rat make(detail::i128 num, detail::i128 den) {
        if (den == 0) fail("DivisionByZero", "rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        detail::u128 g = detail::gcd128(detail::abs128(num), static_cast<detail::u128>(den));
        if (g > 1) {
            num /= static_cast<detail::i128>(g);
            den /= static_cast<detail::i128>(g);
        }
        Rat r;
        if (num > -static_cast<detail::i128>(kMax) && num < static_cast<detail::i128>(kMax) &&
            den < static_cast<detail::i128>(kMax)) {
            r.n_ = static_cast<long long>(num);
            r.d_ = static_cast<long long>(den);
        } else {
            r.big_ = std::make_shared<const BigRat>(
                BigRat(detail::int_from_i128(num), detail::int_from_i128(den)));
        }
        return r;
    }

    long long n_ = 0;
    long long d_ = 1;
    std::shared_ptr<const BigRat> big_;
};

inline std::string rat_str(const Rat& r) { return r.str(); }

}  // namespace tcb
