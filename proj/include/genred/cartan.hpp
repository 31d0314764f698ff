#pragma once

#include <string>
#include <vector>

#include "genred/intmat.hpp"

namespace genred {

// One connected component of a Dynkin diagram, identified against the
// standard catalog.  node_of_canon[k] is the index (into the parent Cartan
// matrix) of the node carrying canonical label k+1.
struct TypeLabel {
    char family = 0;  // 'A'..'G'
    std::size_t rank = 0;
    std::vector<std::size_t> node_of_canon;

    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const TypeLabel& o) const {
        return family == o.family && rank == o.rank && node_of_canon == o.node_of_canon;
    }
};

struct DynkinEdge {
    std::size_t s, t;
    int bond;                 // 1, 2 or 3
    long arrow_toward;        // node index, or -1 when bond == 1
    int m;                    // order of the product of the two reflections
};

struct DynkinDiagram {
    std::size_t nodes = 0;
    std::vector<DynkinEdge> edges;
};

// Validated finite-type Cartan matrix.
class CartanMatrix {
  public:
    const IntMat& entries() const { return entries_; }
    std::size_t size() const { return entries_.rows(); }
    const Int& c(std::size_t s, std::size_t t) const { return entries_.at(s, t); }

    DynkinDiagram diagram() const;
    bool operator==(const CartanMatrix& o) const { return entries_ == o.entries_; }
    bool operator!=(const CartanMatrix& o) const { return !(*this == o); }

  private:
    friend CartanMatrix validate_cartan(const IntMat& M);
    friend CartanMatrix standard_cartan(char family, std::size_t rank);
    explicit CartanMatrix(IntMat m) : entries_(std::move(m)) {}
    IntMat entries_;
};

// Checks (C1) and finite type (all leading principal minors positive, plus a
// classification cross-check); throws NotCartan.
CartanMatrix validate_cartan(const IntMat& M);

// One TypeLabel per connected component, ordered by (family, rank, smallest
// node).  B2 and D3 are normalized to C2 and A3.
std::vector<TypeLabel> classify(const CartanMatrix& C);

// The catalog matrix for a family/rank, with the standard node labelling.
CartanMatrix standard_cartan(char family, std::size_t rank);

// Torsion invariant factors (> 1) of Omega / ZC.
std::vector<Int> fundamental_group(const CartanMatrix& C);

// All node permutations pi with c[pi(s)][pi(t)] == c[s][t].
std::vector<std::vector<std::size_t>> diagram_automorphisms(const CartanMatrix& C);

// All bijections pi with C1[pi(u)][pi(v)] == C2[u][v]; empty when the types differ.
std::vector<std::vector<std::size_t>> cartan_isomorphisms(const CartanMatrix& C1, const CartanMatrix& C2);

// Connected components of the off-diagonal support (sorted node lists).
std::vector<std::vector<std::size_t>> cartan_components(const CartanMatrix& C);

}  // namespace genred
