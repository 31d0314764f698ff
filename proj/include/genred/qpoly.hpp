#pragma once

#include <map>
#include <string>
#include <vector>

#include "genred/quadnum.hpp"

namespace genred {

// Univariate polynomial over Q(sqrt p), coefficients by ascending degree.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(QuadNum c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit QPoly(std::vector<QuadNum> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly(QuadNum(1)); }
    static QPoly y();                                  // the variable
    static QPoly y_power(std::size_t k);               // y^k
    static QPoly y_pow_minus(std::size_t k, long c);   // y^k - c
    static QPoly y_pow_plus(std::size_t k, long c);    // y^k + c
    static QPoly from_int_coeffs(const std::vector<Int>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const QuadNum& coeff(std::size_t k) const;
    const std::vector<QuadNum>& coeffs() const { return coeffs_; }
    const QuadNum& leading() const;

    bool has_integer_coeffs() const;
    std::vector<Int> integer_coeffs() const;  // throws unless has_integer_coeffs

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const QuadNum& c) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Quotient and remainder by a nonzero divisor (field coefficients).
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
    // Exact division; throws if the remainder is nonzero.
    QPoly div_exact(const QPoly& divisor) const;

    QuadNum eval(const QuadNum& x) const;  // Horner
    QPoly substitute_neg_y() const;        // f(-y)
    QPoly substitute_y_power(std::size_t r) const;  // f(y^r)

    std::string str() const;  // human-readable, highest degree first

  private:
    std::vector<QuadNum> coeffs_;
    void trim();
};

// det(y*I - M) for a square matrix given row-major; exact, monic.
QPoly char_poly(const std::vector<QuadNum>& entries, std::size_t n);
QPoly char_poly(const IntMat& m);
std::vector<Int> char_poly_int(const IntMat& m);  // ascending coefficients

// n-th cyclotomic polynomial over Z (cached).
const std::vector<Int>& cyclotomic(unsigned n);

// f = scalar * y^y_power * prod Phi_d^mult * remainder, via trial division by
// Phi_d for d up to 2*deg(f).  remainder is monic; 1 when the factorization
// is complete.
struct CycloFactorization {
    std::size_t y_power = 0;
    std::map<unsigned, unsigned> phi;  // index -> multiplicity
    Int scalar = 1;
    QPoly remainder = QPoly::one();

    bool complete() const { return remainder == QPoly::one(); }
    QPoly expand() const;  // re-multiply
    std::string str() const;
};

CycloFactorization cyclotomic_factor(const QPoly& f);

}  // namespace genred
