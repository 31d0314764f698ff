#pragma once

#include "genred/intmat.hpp"

namespace genred {

// U * M * V = S with U, V unimodular and S diagonal, d1 | d2 | ... | dk >= 0.
struct SmithForm {
    IntMat S;
    IntMat U;
    IntMat V;
    std::size_t rows = 0, cols = 0;

    std::vector<Int> diagonal() const;
    // nonzero diagonal entries (the invariant factors of coker as torsion part + free rank)
    std::vector<Int> invariant_factors() const;  // entries > 0, divisibility chain
    std::size_t rank() const;                    // number of nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& M);

// Invariants of the cokernel of M (viewed as a map on column vectors):
// free rank and the torsion invariant factors > 1.
struct CokernelInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // divisibility chain, each > 1
};

CokernelInvariants cokernel_invariants(const IntMat& M);

// One integer solution of K x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& K, const std::vector<Int>& b);

}  // namespace genred
