#pragma once

#include <optional>
#include <variant>

#include "genred/cartan.hpp"
#include "genred/smith.hpp"

namespace genred {

inline constexpr std::size_t kDefaultWeylCap = 2'000'000;

// A root datum as a factorization C = Acheck * A^tr plus the generated
// roots, coroots and Weyl generators.  Rows of A are the simple roots in
// X-coordinates, rows of Acheck the simple coroots in Y-coordinates; the
// pairing of dual bases is the dot product, so c_st = <alpha_t, alpha_s^vee>
// = acheck_s . a_t.
struct RootDatum {
    std::size_t base_size = 0;  // r
    std::size_t rank = 0;       // n
    IntMat A;                   // r x n
    IntMat Acheck;              // r x n
    CartanMatrix cartan;

    std::vector<std::vector<Int>> roots;             // X-coordinates, positive first
    std::vector<std::vector<Int>> coroots;           // matched order, Y-coordinates
    std::vector<std::vector<Int>> root_base_coords;  // coefficients w.r.t. the simple roots
    std::vector<std::vector<int>> root_words;        // root = word(alpha_s), letters applied right-to-left
    std::vector<int> root_base_index;                // the s above
    std::vector<std::size_t> base_indices;           // positions of the simple roots
    std::vector<IntMat> weyl_gens;                   // action on X (n x n)
    std::vector<IntMat> weyl_gens_dual;              // action on Y

    bool semisimple() const { return base_size == rank; }
    std::optional<std::size_t> root_index(const std::vector<Int>& v) const;
    Int pairing(const std::vector<Int>& x, const std::vector<Int>& y) const;  // dot product

    bool operator==(const RootDatum& o) const { return A == o.A && Acheck == o.Acheck; }
};

RootDatum build_datum(const IntMat& A, const IntMat& Acheck);
RootDatum adjoint_datum(const CartanMatrix& C);
RootDatum sc_datum(const CartanMatrix& C);
RootDatum toric_datum(std::size_t rank);
RootDatum dual_datum(const RootDatum& D);
RootDatum direct_product(const RootDatum& D1, const RootDatum& D2);

// A lattice ZC <= L <= Omega, columns of `basis` expressing a basis of L in
// the omega-basis of Omega.
struct LatticeSpec {
    CartanMatrix cartan;
    IntMat basis;  // r x r
};

RootDatum datum_from_lattice(const LatticeSpec& L);

struct IsogenyClass {
    LatticeSpec lattice;
    std::vector<Int> quotient;  // invariant factors of L/ZC (> 1)
    Int index;                  // [L : ZC]
};

// One entry per subgroup of the fundamental group, ZC first, Omega last.
std::vector<IsogenyClass> enumerate_isogeny_classes(const CartanMatrix& C);

// Enumerated Weyl group acting on X.  Identity first; elements ordered by
// BFS level (= length), sorted within each level.
struct WeylGroup {
    std::vector<IntMat> elements;
    std::vector<unsigned> lengths;
    std::vector<std::vector<int>> words;  // one reduced word per element
    std::size_t cap = kDefaultWeylCap;

    std::size_t size() const { return elements.size(); }
    std::optional<std::size_t> index_of(const IntMat& m) const;
};

WeylGroup weyl_group(const RootDatum& D, std::size_t cap = kDefaultWeylCap);

// |W| from the classification (product over components).
Int weyl_order(const CartanMatrix& C);

// Invariants of X / ZR.
struct XModZR {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
};

XModZR x_mod_zr_invariants(const RootDatum& D);

// True iff every torsion invariant of X/ZR is a power of p (p prime or 1).
bool center_is_connected(const RootDatum& D, const Int& p);

struct IsomorphismWitness {
    IntMat P;      // unimodular, maps X(D2) -> X(D1)
    IntMat Pcirc;  // permutation matrix
};

struct Indeterminate {};

using IsomorphicResult = std::variant<IsomorphismWitness, std::monostate, Indeterminate>;

// Some(P, Pcirc) if the data are isomorphic, None if provably not,
// Indeterminate when the bounded non-semisimple search is inconclusive.
IsomorphicResult isomorphic(const RootDatum& D1, const RootDatum& D2);

bool is_isomorphic(const IsomorphicResult& r);

enum class Rank1Class { SL2Like, PGL2Like, GL2Like };

Rank1Class rank1_classify(const RootDatum& D);

// Named data from the catalog: GL, SL, PGL, Sp, Spin, SO, HSpin.
RootDatum catalog_datum(const std::string& name, std::size_t param);

}  // namespace genred
