#pragma once

#include "genred/qpoly.hpp"
#include "genred/rootdatum.hpp"

namespace genred {

// A p-isogeny of root data as a validated matrix pair (P, Pcirc).
// P is the matrix of phi: X' -> X (source lattice to target lattice),
// Pcirc the monomial matrix on the bases with pcirc[s][sdag] = q_s.
struct PIsogeny {
    RootDatum source;  // primed datum (X')
    RootDatum target;  // X
    Int p;             // 1 or a prime
    IntMat P;          // n x n
    IntMat Pcirc;      // r x r monomial

    std::vector<std::size_t> dagger;  // s -> sdag (column of the nonzero entry in row s)
    std::vector<Int> q_base;          // q_s, indexed like the target base
    std::vector<Int> q_roots;         // q_alpha for every target root
    std::vector<std::size_t> sigma;   // induced map on Weyl generators: sigma(s) = sdag

    bool is_endo() const { return source == target; }
};

PIsogeny validate_isogeny(const RootDatum& source, const RootDatum& target, const Int& p, const IntMat& P,
                          const IntMat& Pcirc);

enum class TwistKind { Untwisted, Twisted, VeryTwisted };

struct IsogenyClassification {
    bool central = false;
    bool isomorphism = false;
    // the remaining fields are only set for endo-isogenies
    std::optional<unsigned long> frobenius_m;                  // phi = p^m * phi0
    std::optional<std::pair<unsigned long, unsigned long>> steinberg;  // (d, m): P^d = p^m I
    std::pair<Int, unsigned long> q_exponent{Int(0), 1};       // q = p^(num/den)
    std::optional<QuadNum> q;                                  // set when den in {1, 2}
    std::optional<TwistKind> twist;
    std::optional<bool> ordinary;
};

IsogenyClassification classify_isogeny(const PIsogeny& f);

// sigma on generators plus the exact check phi . sigma(w) = w . phi.
std::vector<std::size_t> induced_sigma(const PIsogeny& f);

struct MorphismCheckReport {
    bool is_hom_of_root_data = false;
    bool is_surjective = false;
    std::vector<Int> cokernel_invariants;
    bool no_p_prime_torsion = false;  // of X(source)/ZR(source), w.r.t. the supplied p
};

// P maps X' -> X; shapes n x n' allowed.
MorphismCheckReport morphism_check(const RootDatum& source, const RootDatum& target, const IntMat& P, const Int& p);

struct RegularEmbeddingReport {
    bool is_regular_embedding = false;
    bool hom_of_root_data = false;
    bool surjective = false;
    bool p_prime_torsion_free = false;
};

RegularEmbeddingReport regular_embedding_check(const RootDatum& source, const RootDatum& target, const IntMat& P,
                                               const Int& p);

struct RegularEmbedding {
    RootDatum ambient;   // D' with connected center
    IntMat inclusion;    // matrix of X(ambient) -> X(D), n x 2n
};

// Lemma-style construction with S = the full maximal torus.
RegularEmbedding regular_embedding_build(const RootDatum& D, const Int& p);

// Transpose pair acting between the dual data.
PIsogeny dual_morphism(const PIsogeny& f);

enum class ExceptionalType { C2, G2, F4, BnCn };

// The exceptional isogenies: very-twisted pairs on ad(C2)/ad(G2)/ad(F4),
// and the Bn -> Cn special 2-isogeny on the simply connected data.
PIsogeny exceptional_catalog(ExceptionalType type, unsigned long m_or_n);

}  // namespace genred
