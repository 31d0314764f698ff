#include "genred/qpoly.hpp"

#include <sstream>

namespace genred {

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly QPoly::y() { return y_power(1); }

QPoly QPoly::y_power(std::size_t k) {
    std::vector<QuadNum> c(k + 1, QuadNum(0));
    c[k] = QuadNum(1);
    return QPoly(std::move(c));
}

QPoly QPoly::y_pow_minus(std::size_t k, long c) {
    std::vector<QuadNum> v(k + 1, QuadNum(0));
    v[0] = QuadNum(-c);
    v[k] = QuadNum(1);
    return QPoly(std::move(v));
}

QPoly QPoly::y_pow_plus(std::size_t k, long c) { return y_pow_minus(k, -c); }

QPoly QPoly::from_int_coeffs(const std::vector<Int>& coeffs) {
    std::vector<QuadNum> c;
    c.reserve(coeffs.size());
    for (const Int& x : coeffs) c.emplace_back(x);
    return QPoly(std::move(c));
}

const QuadNum& QPoly::coeff(std::size_t k) const {
    static const QuadNum zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

const QuadNum& QPoly::leading() const {
    if (coeffs_.empty()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool QPoly::has_integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_integer()) return false;
    return true;
}

std::vector<Int> QPoly::integer_coeffs() const {
    std::vector<Int> r;
    r.reserve(coeffs_.size());
    for (const auto& c : coeffs_) r.push_back(c.as_integer());
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<QuadNum> c(std::max(coeffs_.size(), o.coeffs_.size()), QuadNum(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<QuadNum> c(std::max(coeffs_.size(), o.coeffs_.size()), QuadNum(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<QuadNum> c(coeffs_.size() + o.coeffs_.size() - 1, QuadNum(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            if (!o.coeffs_[j].is_zero()) c[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QuadNum& k) const {
    std::vector<QuadNum> c = coeffs_;
    for (auto& x : c) x *= k;
    return QPoly(std::move(c));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    QPoly rem = *this;
    long dd = divisor.degree();
    if (rem.degree() < dd) return {QPoly(), rem};
    std::vector<QuadNum> q(rem.degree() - dd + 1, QuadNum(0));
    const QuadNum& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        std::size_t shift = rem.degree() - dd;
        QuadNum f = rem.leading() / lead;
        q[shift] = f;
        // rem -= f * y^shift * divisor
        std::vector<QuadNum> rc = rem.coeffs_;
        for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
            rc[i + shift] -= f * divisor.coeffs_[i];
        rem = QPoly(std::move(rc));
    }
    return {QPoly(std::move(q)), rem};
}

QPoly QPoly::div_exact(const QPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

QuadNum QPoly::eval(const QuadNum& x) const {
    QuadNum r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

QPoly QPoly::substitute_neg_y() const {
    std::vector<QuadNum> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return QPoly(std::move(c));
}

QPoly QPoly::substitute_y_power(std::size_t r) const {
    if (is_zero()) return QPoly();
    std::vector<QuadNum> c(coeffs_.size() * r - r + 1, QuadNum(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * r] = coeffs_[i];
    return QPoly(std::move(c));
}

std::string QPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const QuadNum& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        if (!first) os << (cs[0] == '-' ? " - " : " + ");
        if (!first && cs[0] == '-') cs = cs.substr(1);
        first = false;
        if (i == 0) {
            os << cs;
        } else {
            if (cs == "1")
                ;
            else if (cs == "-1")
                os << "-";
            else
                os << cs << "*";
            os << "y";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// Faddeev-LeVerrier: exact over the coefficient field.
QPoly char_poly(const std::vector<QuadNum>& entries, std::size_t n) {
    if (entries.size() != n * n) throw Error("char_poly shape mismatch");
    std::vector<QuadNum> c(n + 1, QuadNum(0));
    c[n] = QuadNum(1);
    std::vector<QuadNum> B(n * n, QuadNum(0));  // B_0 = I
    for (std::size_t i = 0; i < n; ++i) B[i * n + i] = QuadNum(1);
    std::vector<QuadNum> Mk(n * n, QuadNum(0));
    for (std::size_t k = 1; k <= n; ++k) {
        // Mk = M * B
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QuadNum s(0);
                for (std::size_t t = 0; t < n; ++t) {
                    if (entries[i * n + t].is_zero() || B[t * n + j].is_zero()) continue;
                    s += entries[i * n + t] * B[t * n + j];
                }
                Mk[i * n + j] = s;
            }
        QuadNum tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += Mk[i * n + i];
        QuadNum ck = -(tr / QuadNum(Int(k)));
        c[n - k] = ck;
        if (k < n) {
            B = Mk;
            for (std::size_t i = 0; i < n; ++i) B[i * n + i] += ck;
        }
    }
    return QPoly(std::move(c));
}

std::vector<Int> char_poly_int(const IntMat& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) throw Error("char_poly of non-square matrix");
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    std::vector<Int> B(n * n, Int(0));
    for (std::size_t i = 0; i < n; ++i) B[i * n + i] = 1;
    std::vector<Int> Mk(n * n, Int(0));
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Int s(0);
                for (std::size_t t = 0; t < n; ++t) {
                    const Int& a = m.at(i, t);
                    if (a != 0 && B[t * n + j] != 0) s += a * B[t * n + j];
                }
                Mk[i * n + j] = s;
            }
        Int tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += Mk[i * n + i];
        Int ck;
        // trace of M_k is divisible by k (Newton identities over Z)
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        c[n - k] = ck;
        if (k < n) {
            B = Mk;
            for (std::size_t i = 0; i < n; ++i) B[i * n + i] += ck;
        }
    }
    return c;
}

QPoly char_poly(const IntMat& m) { return QPoly::from_int_coeffs(char_poly_int(m)); }

namespace {

// (y^n - 1) coefficients
std::vector<Int> y_pow_minus_one(unsigned n) {
    std::vector<Int> c(n + 1, Int(0));
    c[0] = -1;
    c[n] = 1;
    return c;
}

// exact division of integer polynomials, divisor monic
std::vector<Int> int_poly_div(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> rem = num;
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Int f = rem[shift + den.size() - 1];
        q[shift] = f;
        if (f != 0)
            for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= f * den[i];
    }
    return q;
}

}  // namespace

const std::vector<Int>& cyclotomic(unsigned n) {
    static std::map<unsigned, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Int> result;
    if (n == 1) {
        result = {Int(-1), Int(1)};
    } else {
        result = y_pow_minus_one(n);
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) result = int_poly_div(result, cyclotomic(d));
    }
    return cache.emplace(n, std::move(result)).first->second;
}

QPoly CycloFactorization::expand() const {
    QPoly f = QPoly::y_power(y_power) * QuadNum(scalar);
    for (const auto& [d, mult] : phi) {
        QPoly phi_d = QPoly::from_int_coeffs(cyclotomic(d));
        for (unsigned i = 0; i < mult; ++i) f = f * phi_d;
    }
    return f * remainder;
}

std::string CycloFactorization::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " * ";
        first = false;
    };
    if (scalar != 1) {
        sep();
        os << scalar.get_str();
    }
    if (y_power > 0) {
        sep();
        os << "y";
        if (y_power > 1) os << "^" << y_power;
    }
    for (const auto& [d, mult] : phi) {
        sep();
        os << "Phi" << d;
        if (mult > 1) os << "^" << mult;
    }
    if (!complete()) {
        sep();
        os << "(" << remainder.str() << ")";
    }
    if (first) os << "1";
    return os.str();
}

CycloFactorization cyclotomic_factor(const QPoly& f) {
    if (f.is_zero()) throw Error("cyclotomic_factor of zero polynomial");
    if (!f.has_integer_coeffs()) throw Error("cyclotomic_factor needs integer coefficients");
    CycloFactorization out;
    std::vector<QuadNum> cs = f.coeffs();
    std::size_t pow = 0;
    while (pow < cs.size() && cs[pow].is_zero()) ++pow;
    out.y_power = pow;
    QPoly g(std::vector<QuadNum>(cs.begin() + pow, cs.end()));
    unsigned bound = static_cast<unsigned>(2 * std::max<long>(f.degree(), 1));
    for (unsigned d = 1; d <= bound && g.degree() > 0; ++d) {
        QPoly phi_d = QPoly::from_int_coeffs(cyclotomic(d));
        if (phi_d.degree() > g.degree()) continue;
        for (;;) {
            auto [q, r] = g.divmod(phi_d);
            if (!r.is_zero() || q.is_zero()) break;
            if (!q.has_integer_coeffs()) break;
            g = q;
            ++out.phi[d];
            if (g.degree() < phi_d.degree()) break;
        }
    }
    if (g.degree() == 0) {
        out.scalar = g.coeff(0).as_integer();
    } else {
        // leftover non-cyclotomic factor, reported rather than an error
        Int lead = g.leading().as_integer();
        out.scalar = lead;
        out.remainder = g * QuadNum(Int(1), Int(0), 0, lead);
        if (!out.remainder.has_integer_coeffs()) {
            // keep the raw remainder with scalar 1 if normalization leaves the ring
            out.scalar = 1;
            out.remainder = g;
        }
    }
    return out;
}

}  // namespace genred
