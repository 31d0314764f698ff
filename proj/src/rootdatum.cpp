#include "genred/rootdatum.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace genred {

namespace {

struct RootRec {
    std::vector<Int> x;       // X-coordinates
    std::vector<Int> y;       // matching coroot
    std::vector<Int> base;    // coefficients w.r.t. simple roots
    std::vector<int> word;
    int base_index;
};

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

}  // namespace

std::optional<std::size_t> RootDatum::root_index(const std::vector<Int>& v) const {
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == v) return i;
    return std::nullopt;
}

Int RootDatum::pairing(const std::vector<Int>& x, const std::vector<Int>& y) const { return dot(x, y); }

RootDatum build_datum(const IntMat& A, const IntMat& Acheck) {
    if (A.rows() != Acheck.rows() || A.cols() != Acheck.cols()) throw Error("A and Acheck must have equal shape");
    std::size_t r = A.rows(), n = A.cols();
    if (r > n) throw NotCartan("base size exceeds rank");

    IntMat C = Acheck * A.transpose();
    CartanMatrix cartan = validate_cartan(C);

    RootDatum D{r, n, A, Acheck, cartan};

    // Weyl generators on X and on Y: w_s = I - a_s^tr * acheck_s (outer product)
    for (std::size_t s = 0; s < r; ++s) {
        IntMat mx = IntMat::identity(n), my = IntMat::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                mx.at(i, j) -= A.at(s, i) * Acheck.at(s, j);
                my.at(i, j) -= Acheck.at(s, i) * A.at(s, j);
            }
        D.weyl_gens.push_back(std::move(mx));
        D.weyl_gens_dual.push_back(std::move(my));
    }

    // reflection closure on (root, coroot) pairs
    const std::size_t budget = 10 * r * r + 16;
    std::map<std::vector<Int>, std::size_t> seen;
    std::vector<RootRec> recs;
    for (std::size_t s = 0; s < r; ++s) {
        RootRec rec;
        rec.x = A.row(s);
        rec.y = Acheck.row(s);
        rec.base.assign(r, Int(0));
        rec.base[s] = 1;
        rec.base_index = static_cast<int>(s);
        if (seen.count(rec.x)) throw NotCartan("repeated simple root");
        seen[rec.x] = recs.size();
        recs.push_back(std::move(rec));
    }
    for (std::size_t head = 0; head < recs.size(); ++head) {
        for (std::size_t t = 0; t < r; ++t) {
            RootRec cur = recs[head];  // copy: recs may reallocate
            Int cx = dot(cur.x, Acheck.row(t));  // <alpha, alpha_t^vee>
            Int cy = dot(A.row(t), cur.y);       // <alpha_t, alpha^vee>
            RootRec nxt;
            nxt.x = cur.x;
            nxt.y = cur.y;
            nxt.base = cur.base;
            for (std::size_t i = 0; i < n; ++i) {
                nxt.x[i] -= cx * A.at(t, i);
                nxt.y[i] -= cy * Acheck.at(t, i);
            }
            nxt.base[t] -= cx;
            if (seen.count(nxt.x)) continue;
            nxt.word = {static_cast<int>(t)};
            nxt.word.insert(nxt.word.end(), cur.word.begin(), cur.word.end());
            nxt.base_index = cur.base_index;
            seen[nxt.x] = recs.size();
            recs.push_back(std::move(nxt));
            if (recs.size() > budget) throw ClosureBudgetExceeded();
        }
    }

    // sort: positive roots first, lexicographic by base coordinates inside
    std::stable_sort(recs.begin(), recs.end(), [](const RootRec& a, const RootRec& b) {
        auto positive = [](const RootRec& rr) {
            for (const Int& c : rr.base)
                if (c < 0) return false;
            return true;
        };
        bool pa = positive(a), pb = positive(b);
        if (pa != pb) return pa;
        return lex_less(a.base, b.base);
    });

    for (const auto& rec : recs) {
        D.roots.push_back(rec.x);
        D.coroots.push_back(rec.y);
        D.root_base_coords.push_back(rec.base);
        D.root_words.push_back(rec.word);
        D.root_base_index.push_back(rec.base_index);
    }
    D.base_indices.assign(r, 0);
    for (std::size_t s = 0; s < r; ++s) {
        std::vector<Int> e(r, Int(0));
        e[s] = 1;
        bool found = false;
        for (std::size_t i = 0; i < D.roots.size(); ++i)
            if (D.root_base_coords[i] == e) {
                D.base_indices[s] = i;
                found = true;
                break;
            }
        if (!found) throw ConsistencyFailure("simple root lost during closure");
    }

    // sanity: matched pairing, reducedness, closure under the generators
    std::set<std::vector<Int>> root_set(D.roots.begin(), D.roots.end());
    for (std::size_t i = 0; i < D.roots.size(); ++i) {
        if (dot(D.roots[i], D.coroots[i]) != 2) throw ConsistencyFailure("<alpha, alpha^vee> != 2");
        std::vector<Int> twice = D.roots[i];
        for (auto& c : twice) c *= 2;
        if (root_set.count(twice)) throw NotCartan("2*alpha is a root (non-reduced)");
        for (std::size_t t = 0; t < r; ++t) {
            if (!root_set.count(D.weyl_gens[t].apply(D.roots[i])))
                throw ConsistencyFailure("generator does not permute the roots");
        }
    }
    return D;
}

RootDatum adjoint_datum(const CartanMatrix& C) {
    return build_datum(IntMat::identity(C.size()), C.entries());
}

RootDatum sc_datum(const CartanMatrix& C) {
    return build_datum(C.entries().transpose(), IntMat::identity(C.size()));
}

RootDatum toric_datum(std::size_t rank) {
    RootDatum D{0, rank, IntMat(0, rank), IntMat(0, rank), validate_cartan(IntMat(0, 0))};
    return D;
}

RootDatum dual_datum(const RootDatum& D) {
    if (D.base_size == 0) return toric_datum(D.rank);
    return build_datum(D.Acheck, D.A);
}

RootDatum direct_product(const RootDatum& D1, const RootDatum& D2) {
    if (D1.base_size + D2.base_size == 0) return toric_datum(D1.rank + D2.rank);
    IntMat A = IntMat::block_diag(D1.A, D2.A);
    IntMat Ac = IntMat::block_diag(D1.Acheck, D2.Acheck);
    return build_datum(A, Ac);
}

RootDatum datum_from_lattice(const LatticeSpec& L) {
    // Acheck = basis; A^tr = basis^{-1} C must be integral
    auto At = solve_left_integral(L.basis, L.cartan.entries());
    if (!At) throw LatticeNotAboveZC();
    return build_datum(At->transpose(), L.basis);
}

std::vector<IsogenyClass> enumerate_isogeny_classes(const CartanMatrix& C) {
    std::size_t r = C.size();
    if (C.entries().det() == 0) throw NotSemisimple();
    SmithForm sf = smith_normal_form(C.entries());
    std::vector<Int> d = sf.diagonal();  // all > 0 here

    // Lambda(C) = prod Z/d_i with coordinates U*v mod d
    using Elt = std::vector<long>;
    std::vector<Elt> all;
    Elt cur(r, 0);
    std::function<void(std::size_t)> gen = [&](std::size_t i) {
        if (i == r) {
            all.push_back(cur);
            return;
        }
        for (long v = 0; v < d[i].get_si(); ++v) {
            cur[i] = v;
            gen(i + 1);
        }
    };
    gen(0);

    auto add = [&](const Elt& a, const Elt& b) {
        Elt s(r);
        for (std::size_t i = 0; i < r; ++i) s[i] = (a[i] + b[i]) % d[i].get_si();
        return s;
    };
    auto closure = [&](std::set<Elt> gens) {
        std::set<Elt> sub{Elt(r, 0)};
        std::vector<Elt> queue(sub.begin(), sub.end());
        for (const auto& g : gens) {
            if (sub.insert(g).second) queue.push_back(g);
        }
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const auto& g : gens) {
                Elt s = add(queue[head], g);
                if (sub.insert(s).second) queue.push_back(s);
            }
        return std::vector<Elt>(sub.begin(), sub.end());
    };

    std::set<std::vector<Elt>> subgroups;
    subgroups.insert(closure({}));
    std::vector<std::vector<Elt>> queue(subgroups.begin(), subgroups.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : all) {
            std::set<Elt> gens(queue[head].begin(), queue[head].end());
            gens.insert(g);
            auto sub = closure(gens);
            if (subgroups.insert(sub).second) queue.push_back(sub);
        }
    }

    // U^{-1} columns scaled: lift h via solving U * x = h~ ... U unimodular
    auto uinv = solve_left_integral(sf.U, IntMat::identity(r));
    if (!uinv) throw ConsistencyFailure("U not invertible");

    std::vector<IsogenyClass> classes;
    for (const auto& sub : subgroups) {
        IntMat gens(r, sub.size());
        for (std::size_t c = 0; c < sub.size(); ++c) {
            std::vector<Int> h(r);
            for (std::size_t i = 0; i < r; ++i) h[i] = sub[c][i];
            std::vector<Int> lift = uinv->apply(h);
            for (std::size_t i = 0; i < r; ++i) gens.at(i, c) = lift[i];
        }
        IntMat stacked = IntMat::hstack(C.entries(), gens);
        IntMat basis = column_lattice_basis(stacked);
        if (basis.cols() != r) throw ConsistencyFailure("lattice basis not full rank");
        IsogenyClass cls{LatticeSpec{C, basis}, {}, Int(static_cast<long>(sub.size()))};
        auto At = solve_left_integral(basis, C.entries());
        if (!At) throw ConsistencyFailure("lattice does not contain ZC");
        for (const Int& f : smith_normal_form(*At).invariant_factors())
            if (f > 1) cls.quotient.push_back(f);
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const IsogenyClass& a, const IsogenyClass& b) {
        if (a.index != b.index) return a.index < b.index;
        return a.lattice.basis.compare(b.lattice.basis) < 0;
    });
    return classes;
}

std::optional<std::size_t> WeylGroup::index_of(const IntMat& m) const {
    for (std::size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == m) return i;
    return std::nullopt;
}

XModZR x_mod_zr_invariants(const RootDatum& D) {
    if (D.base_size == 0) return XModZR{D.rank, {}};
    CokernelInvariants ci = cokernel_invariants(D.A.transpose());
    return XModZR{ci.free_rank, ci.torsion};
}

bool center_is_connected(const RootDatum& D, const Int& p) {
    for (const Int& t : x_mod_zr_invariants(D).torsion) {
        Int m = t;
        if (p > 1)
            while (m % p == 0) m /= p;
        if (m != 1) return false;
    }
    return true;
}

namespace {

// Non-semisimple route: solve the affine system for P and search the kernel
// lattice for a unimodular point (bounded; Indeterminate beyond the bounds).
IsomorphicResult isomorphic_general(const RootDatum& D1, const RootDatum& D2,
                                    const std::vector<std::vector<std::size_t>>& pis) {
    std::size_t n = D1.rank, r = D1.base_size;
    bool inconclusive = false;
    for (const auto& pi : pis) {
        IntMat Pcirc(r, r);
        for (std::size_t s = 0; s < r; ++s) Pcirc.at(s, pi[s]) = 1;
        // unknowns: P (n x n), flattened; equations: P*B^tr = A^tr*Pcirc, Pcirc*Bcheck = Acheck*P
        const IntMat Bt = D2.A.transpose();
        const IntMat rhs1 = D1.A.transpose() * Pcirc;
        const IntMat lhs2 = Pcirc * D2.Acheck;
        std::size_t unknowns = n * n;
        std::vector<std::vector<Int>> eq;
        std::vector<Int> rhs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < r; ++s) {
                std::vector<Int> row(unknowns, Int(0));
                for (std::size_t k = 0; k < n; ++k) row[i * n + k] = Bt.at(k, s);
                eq.push_back(std::move(row));
                rhs.push_back(rhs1.at(i, s));
            }
        for (std::size_t s = 0; s < r; ++s)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Int> row(unknowns, Int(0));
                for (std::size_t k = 0; k < n; ++k) row[k * n + j] = D1.Acheck.at(s, k);
                eq.push_back(std::move(row));
                rhs.push_back(lhs2.at(s, j));
            }
        IntMat K = IntMat::from_rows(eq);
        auto base_opt = solve_integer(K, rhs);
        if (!base_opt) continue;  // no integer solution for this Pcirc
        std::vector<Int> base = *base_opt;
        IntMat ker = kernel_basis(K);
        std::size_t kdim = ker.cols();
        if (kdim > 3) {
            inconclusive = true;
            continue;
        }
        const long bound = 4;
        std::vector<long> coef(kdim, -bound);
        for (;;) {
            std::vector<Int> x = base;
            for (std::size_t k = 0; k < kdim; ++k)
                if (coef[k] != 0)
                    for (std::size_t i = 0; i < unknowns; ++i) x[i] += coef[k] * ker.at(i, k);
            IntMat P(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) P.at(i, j) = x[i * n + j];
            Int dp = P.det();
            if (dp == 1 || dp == -1) {
                if (P * D2.A.transpose() == D1.A.transpose() * Pcirc && Pcirc * D2.Acheck == D1.Acheck * P)
                    return IsomorphismWitness{P, Pcirc};
            }
            // advance odometer
            std::size_t k = 0;
            while (k < kdim && coef[k] == bound) coef[k++] = -bound;
            if (k == kdim) break;
            ++coef[k];
        }
        inconclusive = true;  // solutions existed but no unimodular point found in range
    }
    if (inconclusive) return Indeterminate{};
    return std::monostate{};
}

}  // namespace

IsomorphicResult isomorphic(const RootDatum& D1, const RootDatum& D2) {
    if (D1.rank != D2.rank || D1.base_size != D2.base_size) return std::monostate{};
    std::size_t r = D1.base_size;
    if (r == 0) return IsomorphismWitness{IntMat::identity(D1.rank), IntMat(0, 0)};
    // candidate base bijections: all isomorphisms of the Cartan matrices
    auto pis = cartan_isomorphisms(D1.cartan, D2.cartan);  // pi: S(D2) -> S(D1)
    if (pis.empty()) return std::monostate{};

    if (D1.semisimple() && D2.semisimple()) {
        for (const auto& pi : pis) {
            // p0[s][sdag] = 1 with sdag in S(D2), s = pi(sdag) in S(D1)
            IntMat Pcirc(r, r);
            for (std::size_t u = 0; u < r; ++u) Pcirc.at(pi[u], u) = 1;
            IntMat N = D1.A.transpose() * Pcirc;
            auto P = solve_right_integral(N, D2.A.transpose());
            if (!P) continue;
            Int dp = P->det();
            if (dp != 1 && dp != -1) continue;
            if (Pcirc * D2.Acheck == D1.Acheck * (*P)) return IsomorphismWitness{*P, Pcirc};
        }
        return std::monostate{};
    }

    // non-semisimple inputs: bounded lattice search (see decisions ledger)
    std::vector<std::vector<std::size_t>> oriented;
    for (const auto& pi : pis) {
        std::vector<std::size_t> o(r);
        for (std::size_t u = 0; u < r; ++u) o[pi[u]] = u;  // row s -> column sdag
        oriented.push_back(o);
    }
    return isomorphic_general(D1, D2, oriented);
}

bool is_isomorphic(const IsomorphicResult& r) { return std::holds_alternative<IsomorphismWitness>(r); }

Rank1Class rank1_classify(const RootDatum& D) {
    auto labels = classify(D.cartan);
    if (labels.size() != 1 || labels[0].family != 'A' || labels[0].rank != 1)
        throw WrongType("rank1_classify needs Cartan type A1");
    Int g(0), gc(0);
    for (std::size_t j = 0; j < D.rank; ++j) {
        g = gcd(g, D.A.at(0, j));
        gc = gcd(gc, D.Acheck.at(0, j));
    }
    if (g == 2) return Rank1Class::SL2Like;
    if (gc == 2) return Rank1Class::PGL2Like;
    return Rank1Class::GL2Like;
}

RootDatum catalog_datum(const std::string& name, std::size_t param) {
    auto difference_matrix = [](std::size_t n) {
        IntMat m(n - 1, n);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            m.at(i, i) = 1;
            m.at(i, i + 1) = -1;
        }
        return m;
    };
    if (name == "GL") {
        if (param < 1) throw BadParams("GL(n) needs n >= 1");
        if (param == 1) return toric_datum(1);
        IntMat A = difference_matrix(param);
        return build_datum(A, A);
    }
    if (name == "SL") {
        if (param < 2) throw BadParams("SL(n) needs n >= 2");
        return sc_datum(standard_cartan('A', param - 1));
    }
    if (name == "PGL") {
        if (param < 2) throw BadParams("PGL(n) needs n >= 2");
        return adjoint_datum(standard_cartan('A', param - 1));
    }
    if (name == "Sp") {
        if (param < 4 || param % 2 != 0) throw BadParams("Sp(2n) needs even argument >= 4");
        return sc_datum(standard_cartan('C', param / 2));
    }
    if (name == "SO") {
        if (param % 2 == 1) {
            if (param < 5) throw BadParams("SO(2n+1) needs argument >= 5");
            return adjoint_datum(standard_cartan('B', (param - 1) / 2));
        }
        std::size_t n = param / 2;
        if (n < 3) throw BadParams("SO(2n) needs n >= 3");
        IntMat A(n, n);
        A.at(0, 0) = 1;
        A.at(0, 1) = 1;
        for (std::size_t i = 1; i < n; ++i) {
            A.at(i, i - 1) = -1;
            A.at(i, i) = 1;
        }
        return build_datum(A, A);
    }
    if (name == "Spin") {
        if (param % 2 == 1) {
            if (param < 5) throw BadParams("Spin(2n+1) needs argument >= 5");
            return sc_datum(standard_cartan('B', (param - 1) / 2));
        }
        std::size_t n = param / 2;
        if (n < 3) throw BadParams("Spin(2n) needs n >= 3");
        return sc_datum(standard_cartan('D', n));
    }
    if (name == "HSpin") {
        if (param % 2 != 0) throw BadParams("HSpin(2n) needs an even argument");
        std::size_t n = param / 2;
        if (n < 4 || n % 2 != 0) throw BadParams("HSpin(2n) needs even n >= 4");
        CartanMatrix C = standard_cartan('D', n);
        // index-2 lattice ZC + Z*omega_1
        IntMat gens(n, n + 1);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gens.at(i, j) = C.entries().at(i, j);
        gens.at(0, n) = 1;
        IntMat basis = column_lattice_basis(gens);
        return datum_from_lattice(LatticeSpec{C, basis});
    }
    throw BadParams("unknown catalog name: " + name);
}

}  // namespace genred
