#include "genred/intmat.hpp"

#include <algorithm>

namespace genred {

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty()) return IntMat();
    IntMat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::from_rows_int(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Int>> rs;
    for (const auto& r : rows) {
        std::vector<Int> row;
        for (long v : r) row.emplace_back(v);
        rs.push_back(std::move(row));
    }
    return from_rows(rs);
}

std::vector<Int> IntMat::row(std::size_t i) const {
    return std::vector<Int>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
}

std::vector<Int> IntMat::col(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

IntMat IntMat::transpose() const {
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    IntMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) != 0) r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw Error("matrix apply shape mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

bool IntMat::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntMat::is_scalar(Int& c_out) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const Int& c = at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? c : Int(0))) return false;
    c_out = c;
    return true;
}

IntMat IntMat::power(unsigned long k) const {
    if (rows_ != cols_) throw Error("power of non-square matrix");
    IntMat r = identity(rows_);
    IntMat base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

Int IntMat::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    return leading_minor(rows_);
}

// Bareiss elimination on a working copy.
Int IntMat::leading_minor(std::size_t k) const {
    if (k > rows_ || k > cols_) throw Error("leading minor out of range");
    if (k == 0) return 1;
    std::vector<Int> a(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i * k + j] = at(i, j);
    Int prev(1);
    int sign = 1;
    for (std::size_t t = 0; t + 1 < k; ++t) {
        if (a[t * k + t] == 0) {
            std::size_t piv = t + 1;
            while (piv < k && a[piv * k + t] == 0) ++piv;
            if (piv == k) return 0;
            for (std::size_t j = 0; j < k; ++j) std::swap(a[t * k + j], a[piv * k + j]);
            sign = -sign;
        }
        for (std::size_t i = t + 1; i < k; ++i) {
            for (std::size_t j = t + 1; j < k; ++j) {
                Int num = a[i * k + j] * a[t * k + t] - a[i * k + t] * a[t * k + j];
                mpz_divexact(a[i * k + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * k + t] = 0;
        }
        prev = a[t * k + t];
    }
    Int d = a[(k - 1) * k + (k - 1)];
    return sign > 0 ? d : Int(-d);
}

int IntMat::compare(const IntMat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        int c = cmp(e_[i], o.e_[i]);
        if (c != 0) return c;
    }
    return 0;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

IntMat IntMat::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    IntMat r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = at(rows[i], cols[j]);
    return r;
}

IntMat IntMat::block_diag(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

IntMat IntMat::hstack(const IntMat& a, const IntMat& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.rows() != b.rows()) throw Error("hstack shape mismatch");
    IntMat r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

IntMat IntMat::vstack(const IntMat& a, const IntMat& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.cols() != b.cols()) throw Error("vstack shape mismatch");
    IntMat r(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

RatMat::RatMat(const IntMat& m) : rows_(m.rows()), cols_(m.cols()), e_(m.rows() * m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) e_[i * cols_ + j] = Rat(m.at(i, j));
}

RatMat RatMat::operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    RatMat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

std::vector<Rat> RatMat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw Error("matrix apply shape mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::optional<RatMat> RatMat::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    std::size_t n = rows_;
    RatMat a = *this;
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = 1;
    for (std::size_t t = 0; t < n; ++t) {
        std::size_t piv = t;
        while (piv < n && a.at(piv, t) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != t)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(t, j), a.at(piv, j));
                std::swap(inv.at(t, j), inv.at(piv, j));
            }
        Rat d = a.at(t, t);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(t, j) /= d;
            inv.at(t, j) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == t || a.at(i, t) == 0) continue;
            Rat f = a.at(i, t);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(t, j);
                inv.at(i, j) -= f * inv.at(t, j);
            }
        }
    }
    return inv;
}

std::optional<IntMat> RatMat::to_int() const {
    IntMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& q = at(i, j);
            if (q.get_den() != 1) return std::nullopt;
            m.at(i, j) = q.get_num();
        }
    return m;
}

std::optional<IntMat> solve_right_integral(const IntMat& N, const IntMat& B) {
    auto binv = RatMat(B).inverse();
    if (!binv) return std::nullopt;
    return (RatMat(N) * *binv).to_int();
}

std::optional<IntMat> solve_left_integral(const IntMat& B, const IntMat& N) {
    auto binv = RatMat(B).inverse();
    if (!binv) return std::nullopt;
    return (*binv * RatMat(N)).to_int();
}

std::optional<std::vector<Rat>> solve_rational(const IntMat& K, const std::vector<Rat>& rhs) {
    std::size_t m = K.rows(), n = K.cols();
    if (rhs.size() != m) throw Error("solve shape mismatch");
    // augmented rational elimination
    RatMat a(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = Rat(K.at(i, j));
        a.at(i, n) = rhs[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t piv = r;
        while (piv < m && a.at(piv, c) == 0) ++piv;
        if (piv == m) continue;
        if (piv != r)
            for (std::size_t j = 0; j <= n; ++j) std::swap(a.at(r, j), a.at(piv, j));
        Rat d = a.at(r, c);
        for (std::size_t j = 0; j <= n; ++j) a.at(r, j) /= d;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            Rat f = a.at(i, c);
            for (std::size_t j = 0; j <= n; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (a.at(i, n) != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = a.at(i, n);
    return x;
}

}  // namespace genred
