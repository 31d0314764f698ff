#pragma once

#include <string>

#include "genred/intmat.hpp"

namespace genred {

// Element of Q(sqrt(p)): value (a + b*sqrt(p)) / d in lowest terms.
// d > 0, gcd(a, b, d) = 1, and b = 0 forces p = 0 (rational numbers are
// stored with radicand 0, so equality is structural).
class QuadNum {
  public:
    QuadNum() : a_(0), b_(0), d_(1), p_(0) {}
    QuadNum(long v) : a_(v), b_(0), d_(1), p_(0) {}
    QuadNum(const Int& v) : a_(v), b_(0), d_(1), p_(0) {}
    QuadNum(Int a, Int b, long p, Int d);

    static QuadNum sqrt_of(long p) { return QuadNum(Int(0), Int(1), p, Int(1)); }
    static QuadNum rational(const Int& num, const Int& den) { return QuadNum(num, Int(0), 0, den); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& den() const { return d_; }
    long radicand() const { return p_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_integer() const { return b_ == 0 && d_ == 1; }
    Int as_integer() const;  // throws unless is_integer()
    Rat as_rational() const;  // throws unless is_rational()

    int sign() const;  // sign of the real value

    QuadNum operator+(const QuadNum& o) const;
    QuadNum operator-(const QuadNum& o) const;
    QuadNum operator-() const;
    QuadNum operator*(const QuadNum& o) const;
    QuadNum operator/(const QuadNum& o) const;
    QuadNum& operator+=(const QuadNum& o) { return *this = *this + o; }
    QuadNum& operator-=(const QuadNum& o) { return *this = *this - o; }
    QuadNum& operator*=(const QuadNum& o) { return *this = *this * o; }
    QuadNum& operator/=(const QuadNum& o) { return *this = *this / o; }

    bool operator==(const QuadNum& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_ && p_ == o.p_; }
    bool operator!=(const QuadNum& o) const { return !(*this == o); }

    // (value)^2 as a rational; always exact when the value is rational or a
    // pure sqrt multiple, otherwise computed in the field and may be irrational
    // (then nullopt).
    std::optional<Rat> square_rational() const;

    std::string str() const;

  private:
    Int a_, b_, d_;
    long p_;

    void normalize();
    static long combine_radicand(long p, long q);  // throws MixedRadicand
};

// q^k for integer k >= 0
QuadNum qn_pow(const QuadNum& base, unsigned long k);

}  // namespace genred
