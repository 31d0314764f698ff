#include "genred/smith.hpp"

#include <algorithm>

namespace genred {

std::vector<Int> SmithForm::diagonal() const {
    std::size_t k = std::min(S.rows(), S.cols());
    std::vector<Int> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = S.at(i, i);
    return d;
}

std::vector<Int> SmithForm::invariant_factors() const {
    std::vector<Int> r;
    for (const Int& d : diagonal())
        if (d != 0) r.push_back(d);
    return r;
}

std::size_t SmithForm::rank() const { return invariant_factors().size(); }

namespace {

struct Work {
    IntMat S, U, V;

    void row_swap(std::size_t i, std::size_t j) {
        S.swap_rows(i, j);
        U.swap_rows(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        S.swap_cols(i, j);
        V.swap_cols(i, j);
    }
    // row i -= q * row j
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) -= q * S.at(j, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) -= q * U.at(j, c);
    }
    // col i -= q * col j
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < S.rows(); ++r) S.at(r, i) -= q * S.at(r, j);
        for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, i) -= q * V.at(r, j);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < S.cols(); ++c) S.at(i, c) = -S.at(i, c);
        for (std::size_t c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    }
    // col i += col j
    void col_add(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < S.rows(); ++r) S.at(r, i) += S.at(r, j);
        for (std::size_t r = 0; r < V.rows(); ++r) V.at(r, i) += V.at(r, j);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& M) {
    std::size_t m = M.rows(), n = M.cols();
    Work w{M, IntMat::identity(m), IntMat::identity(n)};
    std::size_t k = std::min(m, n);

    for (std::size_t t = 0; t < k; ++t) {
        // find smallest nonzero |entry| in the trailing block
        for (;;) {
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    const Int& x = w.S.at(i, j);
                    if (x == 0) continue;
                    if (!found || cmp(abs(x), abs(w.S.at(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) goto done;  // trailing block is zero
            if (pi != t) w.row_swap(t, pi);
            if (pj != t) w.col_swap(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (w.S.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.S.at(i, t).get_mpz_t(), w.S.at(t, t).get_mpz_t());
                w.row_sub(i, t, q);
                if (w.S.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.S.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.S.at(t, j).get_mpz_t(), w.S.at(t, t).get_mpz_t());
                w.col_sub(j, t, q);
                if (w.S.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller remainders appeared, re-pick pivot

            // pivot divides its row and column; make sure it divides the rest too
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (w.S.at(i, j) % w.S.at(t, t) != 0) {
                        w.col_add(t, j);  // pulls a non-multiple into column t
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (w.S.at(t, t) < 0) w.row_negate(t);
    }
done:
    SmithForm sf{w.S, w.U, w.V, m, n};
    return sf;
}

CokernelInvariants cokernel_invariants(const IntMat& M) {
    SmithForm sf = smith_normal_form(M);
    CokernelInvariants ci;
    std::size_t nonzero = sf.rank();
    ci.free_rank = M.rows() - nonzero;
    for (const Int& d : sf.invariant_factors())
        if (d > 1) ci.torsion.push_back(d);
    return ci;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& K, const std::vector<Int>& b) {
    if (b.size() != K.rows()) throw Error("solve_integer shape mismatch");
    SmithForm sf = smith_normal_form(K);
    std::vector<Int> ub = sf.U.apply(b);
    std::size_t k = std::min(K.rows(), K.cols());
    std::vector<Int> y(K.cols(), Int(0));
    for (std::size_t i = 0; i < ub.size(); ++i) {
        Int d = i < k ? sf.S.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    return sf.V.apply(y);
}

IntMat kernel_basis(const IntMat& M) {
    SmithForm sf = smith_normal_form(M);
    std::size_t k = std::min(M.rows(), M.cols());
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < M.cols(); ++j) {
        if (j >= k || sf.S.at(j, j) == 0) zero_cols.push_back(j);
    }
    IntMat basis(M.cols(), zero_cols.size());
    for (std::size_t c = 0; c < zero_cols.size(); ++c)
        for (std::size_t i = 0; i < M.cols(); ++i) basis.at(i, c) = sf.V.at(i, zero_cols[c]);
    return basis;
}

IntMat column_lattice_basis(const IntMat& M) {
    // column Hermite reduction: gcd-sweep columns left to right
    IntMat A = M;
    std::size_t m = A.rows(), n = A.cols();
    std::size_t c = 0;
    for (std::size_t r = 0; r < m && c < n; ++r) {
        // reduce all columns >= c so at most one has a nonzero in row r
        for (;;) {
            std::size_t piv = n;
            for (std::size_t j = c; j < n; ++j)
                if (A.at(r, j) != 0 && (piv == n || cmp(abs(A.at(r, j)), abs(A.at(r, piv))) < 0)) piv = j;
            if (piv == n) break;  // row r is zero on the tail
            if (piv != c) A.swap_cols(c, piv);
            bool clean = true;
            for (std::size_t j = c + 1; j < n; ++j) {
                if (A.at(r, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(r, j).get_mpz_t(), A.at(r, c).get_mpz_t());
                for (std::size_t i = 0; i < m; ++i) A.at(i, j) -= q * A.at(i, c);
                if (A.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (A.at(r, c) != 0) {
            if (A.at(r, c) < 0)
                for (std::size_t i = 0; i < m; ++i) A.at(i, c) = -A.at(i, c);
            // reduce earlier columns above the pivot for a unique echelon form
            for (std::size_t j = 0; j < c; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), A.at(r, j).get_mpz_t(), A.at(r, c).get_mpz_t());
                if (q != 0)
                    for (std::size_t i = 0; i < m; ++i) A.at(i, j) -= q * A.at(i, c);
            }
            ++c;
        }
    }
    std::vector<std::size_t> all_rows(m), keep(c);
    for (std::size_t i = 0; i < m; ++i) all_rows[i] = i;
    for (std::size_t j = 0; j < c; ++j) keep[j] = j;
    return A.select(all_rows, keep);
}

}  // namespace genred
