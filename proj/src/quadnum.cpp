#include "genred/quadnum.hpp"

namespace genred {

QuadNum::QuadNum(Int a, Int b, long p, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), p_(p) {
    if (d_ == 0) throw Error("zero denominator");
    if (p_ < 0) throw Error("negative radicand");
    normalize();
}

void QuadNum::normalize() {
    if (d_ < 0) {
        d_ = -d_;
        a_ = -a_;
        b_ = -b_;
    }
    if (p_ == 0) b_ = 0;
    if (b_ == 0) p_ = 0;
    Int g = gcd(gcd(a_, b_), d_);
    if (g > 1) {
        mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
    }
}

long QuadNum::combine_radicand(long p, long q) {
    if (p == 0) return q;
    if (q == 0) return p;
    if (p != q) throw MixedRadicand();
    return p;
}

Int QuadNum::as_integer() const {
    if (!is_integer()) throw Error("not an integer: " + str());
    return a_;
}

Rat QuadNum::as_rational() const {
    if (!is_rational()) throw Error("not rational: " + str());
    Rat q(a_, d_);
    q.canonicalize();
    return q;
}

int QuadNum::sign() const {
    if (is_zero()) return 0;
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 p
    Int lhs = a_ * a_, rhs = b_ * b_ * p_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // cannot happen for squarefree p > 1, kept for safety
    return c > 0 ? sa : sb;
}

QuadNum QuadNum::operator+(const QuadNum& o) const {
    long p = combine_radicand(p_, o.p_);
    return QuadNum(a_ * o.d_ + o.a_ * d_, b_ * o.d_ + o.b_ * d_, p, d_ * o.d_);
}

QuadNum QuadNum::operator-(const QuadNum& o) const {
    long p = combine_radicand(p_, o.p_);
    return QuadNum(a_ * o.d_ - o.a_ * d_, b_ * o.d_ - o.b_ * d_, p, d_ * o.d_);
}

QuadNum QuadNum::operator-() const {
    QuadNum r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

QuadNum QuadNum::operator*(const QuadNum& o) const {
    long p = combine_radicand(p_, o.p_);
    return QuadNum(a_ * o.a_ + b_ * o.b_ * p, a_ * o.b_ + b_ * o.a_, p, d_ * o.d_);
}

QuadNum QuadNum::operator/(const QuadNum& o) const {
    if (o.is_zero()) throw Error("division by zero");
    long p = combine_radicand(p_, o.p_);
    // 1/((e + f sqrt p)/g) = g (e - f sqrt p) / (e^2 - f^2 p)
    Int norm = o.a_ * o.a_ - o.b_ * o.b_ * p;
    if (norm == 0) throw Error("division by zero norm");
    QuadNum inv(o.d_ * o.a_, -o.d_ * o.b_, p, norm);
    QuadNum lhs(a_, b_, p, d_);
    return lhs * inv;
}

std::optional<Rat> QuadNum::square_rational() const {
    if (a_ != 0 && b_ != 0) return std::nullopt;
    Rat r;
    if (b_ == 0)
        r = Rat(a_ * a_, d_ * d_);
    else
        r = Rat(b_ * b_ * p_, d_ * d_);
    r.canonicalize();
    return r;
}

std::string QuadNum::str() const {
    if (is_rational()) {
        std::string s = a_.get_str();
        if (d_ != 1) s += "/" + d_.get_str();
        return s;
    }
    std::string s = "(";
    if (a_ != 0) s += a_.get_str() + (b_ > 0 ? "+" : "");
    if (b_ == 1)
        ;
    else if (b_ == -1)
        s += "-";
    else
        s += b_.get_str() + "*";
    s += "sqrt(" + std::to_string(p_) + "))";
    if (d_ != 1) s += "/" + d_.get_str();
    return s;
}

QuadNum qn_pow(const QuadNum& base, unsigned long k) {
    QuadNum r(1);
    QuadNum b = base;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

}  // namespace genred
