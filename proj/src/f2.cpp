#include "rzeta/f2.hpp"

#include <stdexcept>

namespace rzeta {

VecF2 VecF2::from_bits(const std::vector<int>& bits) {
    VecF2 v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1);
    return v;
}

VecF2 VecF2::from_word(std::uint64_t word, std::size_t len) {
    if (len > 64) throw std::invalid_argument("VecF2::from_word: len > 64");
    VecF2 v(len);
    if (len > 0) v.words_[0] = (len == 64) ? word : (word & ((std::uint64_t(1) << len) - 1));
    return v;
}

VecF2 VecF2::operator+(const VecF2& o) const {
    if (len_ != o.len_) throw std::invalid_argument("VecF2: length mismatch");
    VecF2 r(len_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] ^ o.words_[i];
    return r;
}

bool VecF2::is_zero() const {
    for (auto w : words_) if (w) return false;
    return true;
}

std::uint64_t VecF2::as_word() const {
    if (len_ > 64) throw std::invalid_argument("VecF2::as_word: len > 64");
    return words_.empty() ? 0 : words_[0];
}

VecF2 VecF2::slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > len_) throw std::invalid_argument("VecF2::slice: bad range");
    VecF2 r(end - begin);
    for (std::size_t i = begin; i < end; ++i) r.set(i - begin, get(i));
    return r;
}

VecF2 VecF2::concat(const VecF2& a, const VecF2& b) {
    VecF2 r(a.len() + b.len());
    for (std::size_t i = 0; i < a.len(); ++i) r.set(i, a.get(i));
    for (std::size_t i = 0; i < b.len(); ++i) r.set(a.len() + i, b.get(i));
    return r;
}

MatF2 MatF2::identity(std::size_t n) {
    MatF2 m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

MatF2 MatF2::from_rows(const std::vector<std::vector<int>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    MatF2 m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("MatF2::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] & 1);
    }
    return m;
}

MatF2 MatF2::block_diag(const MatF2& a, const MatF2& b) {
    MatF2 m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, a.get(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.set(a.rows() + i, a.cols() + j, b.get(i, j));
    return m;
}

MatF2 MatF2::operator+(const MatF2& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatF2: shape mismatch");
    MatF2 r(rows_, cols_);
    for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] ^ o.bits_[i];
    return r;
}

MatF2 MatF2::operator*(const MatF2& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatF2: shape mismatch");
    MatF2 r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t* dst = &r.bits_[i * r.wpr_];
        for (std::size_t j = 0; j < cols_; ++j) {
            if (get(i, j)) {
                const std::uint64_t* src = &o.bits_[j * o.wpr_];
                for (std::size_t w = 0; w < o.wpr_; ++w) dst[w] ^= src[w];
            }
        }
    }
    return r;
}

VecF2 MatF2::operator*(const VecF2& v) const {
    if (cols_ != v.len()) throw std::invalid_argument("MatF2: vector length mismatch");
    VecF2 r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < wpr_; ++w) acc ^= bits_[i * wpr_ + w] & v.words_[w];
        r.set(i, __builtin_popcountll(acc) & 1);
    }
    return r;
}

MatF2 MatF2::pow(std::uint64_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("MatF2::pow: non-square");
    MatF2 result = identity(rows_);
    MatF2 base = *this;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

MatF2 MatF2::geometric_sum(std::uint64_t k) const {
    if (rows_ != cols_) throw std::invalid_argument("MatF2::geometric_sum: non-square");
    if (k < 1) throw std::invalid_argument("MatF2::geometric_sum: k < 1");
    MatF2 acc = identity(rows_);
    MatF2 p = identity(rows_);
    for (std::uint64_t i = 1; i < k; ++i) {
        p = p * *this;
        acc = acc + p;
    }
    return acc;
}

MatF2 MatF2::submatrix(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const {
    if (r0 > r1 || c0 > c1 || r1 > rows_ || c1 > cols_)
        throw std::invalid_argument("MatF2::submatrix: bad range");
    MatF2 m(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) m.set(i - r0, j - c0, get(i, j));
    return m;
}

VecF2 MatF2::row(std::size_t r) const {
    VecF2 v(cols_);
    for (std::size_t w = 0; w < wpr_; ++w) v.words_[w] = bits_[r * wpr_ + w];
    return v;
}

void MatF2::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < wpr_; ++w) bits_[dst * wpr_ + w] ^= bits_[src * wpr_ + w];
}

std::optional<MatF2> MatF2::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("MatF2::inverse: non-square");
    std::size_t n = rows_;
    MatF2 a = *this;
    MatF2 inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !a.get(piv, col)) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col) {
            for (std::size_t w = 0; w < a.wpr_; ++w)
                std::swap(a.bits_[piv * a.wpr_ + w], a.bits_[col * a.wpr_ + w]);
            for (std::size_t w = 0; w < inv.wpr_; ++w)
                std::swap(inv.bits_[piv * inv.wpr_ + w], inv.bits_[col * inv.wpr_ + w]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r != col && a.get(r, col)) {
                a.xor_row_into(col, r);
                inv.xor_row_into(col, r);
            }
        }
    }
    return inv;
}

std::size_t rank(const MatF2& a) {
    MatF2 work = a;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < work.cols() && rk < work.rows(); ++col) {
        std::size_t piv = rk;
        while (piv < work.rows() && !work.get(piv, col)) ++piv;
        if (piv == work.rows()) continue;
        if (piv != rk)
            for (std::size_t j = 0; j < work.cols(); ++j) {
                bool t = work.get(piv, j);
                work.set(piv, j, work.get(rk, j));
                work.set(rk, j, t);
            }
        for (std::size_t r = 0; r < work.rows(); ++r)
            if (r != rk && work.get(r, col)) work.xor_row_into(rk, r);
        ++rk;
    }
    return rk;
}

SolveOutcome rank_and_solve(const MatF2& a, const VecF2& b) {
    if (a.rows() != b.len()) throw std::invalid_argument("rank_and_solve: dimension mismatch");
    std::size_t rows = a.rows(), cols = a.cols();

    // augmented matrix [a | b], reduced to RREF
    MatF2 aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.set(i, j, a.get(i, j));
        aug.set(i, cols, b.get(i));
    }

    std::vector<std::size_t> pivot_col;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t piv = rk;
        while (piv < rows && !aug.get(piv, col)) ++piv;
        if (piv == rows) continue;
        if (piv != rk)
            for (std::size_t j = 0; j <= cols; ++j) {
                bool t = aug.get(piv, j);
                aug.set(piv, j, aug.get(rk, j));
                aug.set(rk, j, t);
            }
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rk && aug.get(r, col)) aug.xor_row_into(rk, r);
        pivot_col.push_back(col);
        ++rk;
    }

    SolveOutcome out;
    out.nullity = cols - rk;
    for (std::size_t r = rk; r < rows; ++r)
        if (aug.get(r, cols)) { out.consistent = false; return out; }
    out.consistent = true;
    out.particular = VecF2(cols);
    for (std::size_t r = 0; r < rk; ++r) out.particular.set(pivot_col[r], aug.get(r, cols));
    return out;
}

std::uint64_t count_solutions(const MatF2& a, const VecF2& b) {
    SolveOutcome s = rank_and_solve(a, b);
    if (!s.consistent) return 0;
    if (s.nullity >= 64) throw std::overflow_error("count_solutions: nullity >= 64");
    return std::uint64_t(1) << s.nullity;
}

namespace {

// row vector times matrix: xor of the rows of m selected by set bits of v
VecF2 vec_mat_mul(const VecF2& v, const MatF2& m) {
    VecF2 r(m.cols());
    for (std::size_t j = 0; j < v.len(); ++j)
        if (v.get(j)) r = r + m.row(j);
    return r;
}

}  // namespace

MatF2 sylvester_solve(const MatF2& n, const MatF2& d, const MatF2& b) {
    std::size_t k = n.rows(), l = d.rows();
    if (n.cols() != k || d.cols() != l) throw std::invalid_argument("sylvester_solve: non-square block");
    if (b.rows() != k || b.cols() != l) throw std::invalid_argument("sylvester_solve: shape mismatch");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (n.get(i, j)) throw std::invalid_argument("sylvester_solve: n not strictly upper-triangular");
    auto dinv = d.inverse();
    if (!dinv) throw std::invalid_argument("sylvester_solve: d singular");

    // bottom row first: row_i(x) = (row_i(b) + sum_{j>i} n_ij row_j(x)) d^-1
    MatF2 x(k, l);
    for (std::size_t ii = k; ii-- > 0;) {
        VecF2 rhs = b.row(ii);
        for (std::size_t j = ii + 1; j < k; ++j)
            if (n.get(ii, j)) rhs = rhs + x.row(j);
        VecF2 xi = vec_mat_mul(rhs, *dinv);
        for (std::size_t c = 0; c < l; ++c) x.set(ii, c, xi.get(c));
    }

    if (!(n * x + x * d == b)) throw std::logic_error("sylvester_solve: residual nonzero");
    return x;
}

namespace {

// extends {v} to a basis with v first; returns the column matrix
MatF2 basis_with_first(const VecF2& v, std::size_t m) {
    MatF2 cols(m, m);
    std::vector<VecF2> chosen;
    chosen.push_back(v);
    for (std::size_t j = 0; j < m && chosen.size() < m; ++j) {
        VecF2 e(m);
        e.set(j, true);
        // independence test via rank of the candidate set
        MatF2 test(chosen.size() + 1, m);
        for (std::size_t r = 0; r < chosen.size(); ++r)
            for (std::size_t c = 0; c < m; ++c) test.set(r, c, chosen[r].get(c));
        for (std::size_t c = 0; c < m; ++c) test.set(chosen.size(), c, e.get(c));
        if (rank(test) == chosen.size() + 1) chosen.push_back(e);
    }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < m; ++i) cols.set(i, j, chosen[j].get(i));
    return cols;
}

// deterministic nonzero kernel vector of a, if any
std::optional<VecF2> kernel_vector(const MatF2& a) {
    std::size_t rows = a.rows(), cols = a.cols();
    MatF2 work = a;
    std::vector<std::size_t> pivot_of_col(cols, SIZE_MAX);
    std::size_t rk = 0;
    for (std::size_t col = 0; col < cols && rk < rows; ++col) {
        std::size_t piv = rk;
        while (piv < rows && !work.get(piv, col)) ++piv;
        if (piv == rows) continue;
        if (piv != rk)
            for (std::size_t j = 0; j < cols; ++j) {
                bool t = work.get(piv, j);
                work.set(piv, j, work.get(rk, j));
                work.set(rk, j, t);
            }
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rk && work.get(r, col)) work.xor_row_into(rk, r);
        pivot_of_col[col] = rk;
        ++rk;
    }
    // first free column gives the kernel vector
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] != SIZE_MAX) continue;
        VecF2 x(cols);
        x.set(col, true);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] != SIZE_MAX && work.get(pivot_of_col[c], col)) x.set(c, true);
        return x;
    }
    return std::nullopt;
}

}  // namespace

SplitResult split_unipotent(const MatF2& d) {
    std::size_t n = d.rows();
    if (d.cols() != n) throw std::invalid_argument("split_unipotent: non-square");
    if (!d.is_invertible()) throw std::invalid_argument("split_unipotent: singular input");

    MatF2 p = MatF2::identity(n);
    MatF2 cur = d;
    std::size_t u = 0;  // rows/cols already in unipotent triangular form

    while (u < n) {
        MatF2 trailing = cur.submatrix(u, u, n, n);
        // eigenvector for eigenvalue 1: kernel of trailing + I
        auto v = kernel_vector(trailing + MatF2::identity(n - u));
        if (!v) break;
        MatF2 c = basis_with_first(*v, n - u);
        MatF2 cinv = *c.inverse();
        MatF2 step = MatF2::block_diag(MatF2::identity(u), cinv);
        MatF2 step_inv = MatF2::block_diag(MatF2::identity(u), c);
        cur = step * cur * step_inv;
        p = step * p;
        ++u;
    }

    SplitResult res;
    res.size_unipotent = u;
    MatF2 d1 = cur.submatrix(0, 0, u, u);
    MatF2 d2 = cur.submatrix(u, u, n, n);
    MatF2 btop = cur.submatrix(0, u, u, n);

    if (u > 0 && u < n && !(btop == MatF2(u, n - u))) {
        // kill the off-diagonal block: (d1 + I) x + x (I + d2) = b over F2
        MatF2 x = sylvester_solve(d1 + MatF2::identity(u), d2 + MatF2::identity(n - u), btop);
        MatF2 r = MatF2::identity(n);
        for (std::size_t i = 0; i < u; ++i)
            for (std::size_t j = 0; j < n - u; ++j) r.set(i, u + j, x.get(i, j));
        cur = r * cur * *r.inverse();
        p = r * p;
        d1 = cur.submatrix(0, 0, u, u);
        d2 = cur.submatrix(u, u, n, n);
    }

    res.p = p;
    res.d1 = d1;
    res.d2 = d2;
    return res;
}

}  // namespace rzeta
