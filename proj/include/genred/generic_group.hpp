#pragma once

#include <memory>

#include "genred/isogeny.hpp"
#include "genred/qpoly.hpp"
#include "genred/rootdatum.hpp"

namespace genred {

// Small dense matrix over Q(sqrt p).
class QuadMat {
  public:
    QuadMat() = default;
    QuadMat(std::size_t n) : n_(n), e_(n * n, QuadNum(0)) {}
    explicit QuadMat(const IntMat& m);

    static QuadMat identity(std::size_t n);

    std::size_t size() const { return n_; }
    QuadNum& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const QuadNum& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    const std::vector<QuadNum>& entries() const { return e_; }

    QuadMat operator*(const QuadMat& o) const;
    QuadMat operator*(const QuadNum& c) const;
    QuadMat operator-() const;
    bool operator==(const QuadMat& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool is_identity() const;

    std::vector<QuadNum> apply(const std::vector<QuadNum>& v) const;

    // numerator pair and common denominator: this = (N0 + N1*sqrt(p)) / den
    struct Scaled {
        IntMat num0, num1;
        Int den;
        long p;
    };
    Scaled scaled() const;

    std::optional<IntMat> to_int() const;

  private:
    std::size_t n_ = 0;
    std::vector<QuadNum> e_;
};

QPoly char_poly(const QuadMat& m);

// A complete root datum: a root datum plus the coset phi0 * W with the stored
// base-preserving representative.
struct CompleteRootDatum {
    RootDatum datum;
    QuadMat phi0;                    // base-preserving, finite order
    QuadMat phi0_inv;                // phi0^(order-1)
    unsigned order = 1;              // order of phi0
    long p_case = 0;                 // 0: case I (any prime); otherwise the forced prime
    std::vector<std::size_t> base_perm;  // sigma(s) = sdag, so phi0(alpha_sdag) is a multiple of alpha_s
    QuadMat qcirc;                   // r x r monomial: phi0 * A^tr = A^tr * qcirc

    // lazily built on first use; build your own WeylGroup instead when
    // sharing one instance across threads
    mutable std::shared_ptr<const WeylGroup> weyl_cache;

    const WeylGroup& weyl(std::size_t cap = kDefaultWeylCap) const;
};

CompleteRootDatum make_complete(const RootDatum& D, const QuadMat& Q);

// Build from a Steinberg-type endo-isogeny: q = |det P|^(1/n), phi0 = P/q.
std::pair<CompleteRootDatum, QuadNum> from_isogeny(const PIsogeny& f);

struct OrderPolynomial {
    QPoly poly;                       // monic, integer coefficients
    CycloFactorization factored;      // y-power |R|/2, cyclotomic part
    bool table_sourced = false;
};

OrderPolynomial order_polynomial_bn(const CompleteRootDatum& crd, std::size_t cap = kDefaultWeylCap);
OrderPolynomial order_polynomial_molien(const CompleteRootDatum& crd, std::size_t cap = kDefaultWeylCap);

// |G_w| = det(y*id - w*phi0^{-1}); w given by its index in the enumerated W.
QPoly toric_order(const CompleteRootDatum& crd, const IntMat& w);

CompleteRootDatum ennola(const CompleteRootDatum& crd);
CompleteRootDatum dual_complete(const CompleteRootDatum& crd);

bool p_set_contains(const CompleteRootDatum& crd, const QuadNum& q);

Int group_order(const CompleteRootDatum& crd, const QuadNum& q);

// ---- built-in order table for the simple types ----

struct TableRow {
    std::string label;       // e.g. "2B2"
    std::size_t y_power;
    QPoly product;           // the cyclotomic-product part
    QPoly full;              // y^y_power * product
};

// twist: 1, 2 or 3; very_twisted selects the Suzuki/Ree rows.
std::optional<TableRow> order_table_row(char family, std::size_t rank, unsigned twist, bool very_twisted);
std::optional<TableRow> order_table_row(const std::string& label);

struct TableCheckReport {
    bool match = false;
    std::string row_label;
    QPoly computed;
    QPoly table;
};

TableCheckReport table_check(const CompleteRootDatum& crd, std::size_t cap = kDefaultWeylCap);

// Named complete data: twist in {1,2,3}, family/rank as in the catalog,
// sc or adjoint base datum; very-twisted types use the exceptional pairs.
CompleteRootDatum standard_complete(unsigned twist, char family, std::size_t rank, bool simply_connected);
CompleteRootDatum standard_complete(const std::string& label, bool simply_connected);

}  // namespace genred
