#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rzeta {

/// Dense vector over the two-element field, bit-packed into 64-bit words.
class VecF2 {
public:
    VecF2() = default;
    explicit VecF2(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

    static VecF2 from_bits(const std::vector<int>& bits);
    /// Low `len` bits of `word`, bit i -> coordinate i. Requires len <= 64.
    static VecF2 from_word(std::uint64_t word, std::size_t len);

    std::size_t len() const { return len_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }

    VecF2 operator+(const VecF2& o) const;
    bool operator==(const VecF2& o) const = default;
    bool is_zero() const;

    /// Packed coordinates as a single word. Requires len <= 64.
    std::uint64_t as_word() const;

    VecF2 slice(std::size_t begin, std::size_t end) const;
    static VecF2 concat(const VecF2& a, const VecF2& b);

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
    friend class MatF2;
};

/// Dense matrix over the two-element field; rows are bit-packed words.
class MatF2 {
public:
    MatF2() = default;
    MatF2(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), bits_(rows * wpr_, 0) {}

    static MatF2 identity(std::size_t n);
    static MatF2 from_rows(const std::vector<std::vector<int>>& rows);
    static MatF2 block_diag(const MatF2& a, const MatF2& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t mask = std::uint64_t(1) << (c & 63);
        std::uint64_t& w = bits_[r * wpr_ + (c >> 6)];
        if (v) w |= mask; else w &= ~mask;
    }

    MatF2 operator+(const MatF2& o) const;
    MatF2 operator*(const MatF2& o) const;
    VecF2 operator*(const VecF2& v) const;
    bool operator==(const MatF2& o) const = default;

    MatF2 pow(std::uint64_t k) const;
    /// I + M + ... + M^(k-1); k >= 1.
    MatF2 geometric_sum(std::uint64_t k) const;
    MatF2 submatrix(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const;
    VecF2 row(std::size_t r) const;
    void xor_row_into(std::size_t src, std::size_t dst);

    std::optional<MatF2> inverse() const;
    bool is_invertible() const { return inverse().has_value(); }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> bits_;
};

std::size_t rank(const MatF2& a);

struct SolveOutcome {
    bool consistent = false;
    VecF2 particular;      // meaningful only when consistent
    std::size_t nullity = 0;
};

/// Gaussian elimination on [a | b]; deterministic first-nonzero pivoting.
SolveOutcome rank_and_solve(const MatF2& a, const VecF2& b);

/// |{x : a x = b}| = 0 if inconsistent, else 2^nullity. Requires nullity < 64.
std::uint64_t count_solutions(const MatF2& a, const VecF2& b);

/// Unique solution x of n x + x d = b, with n nilpotent upper-triangular
/// and d invertible, solved row by row from the bottom as in the inductive
/// proof. The result is residual-checked before it is returned.
MatF2 sylvester_solve(const MatF2& n, const MatF2& d, const MatF2& b);

struct SplitResult {
    MatF2 p;                      // p * d * p^-1 = diag(d1, d2)
    std::size_t size_unipotent = 0;
    MatF2 d1;                     // unipotent upper-triangular
    MatF2 d2;                     // I - d2 invertible
};

/// Splits an invertible matrix into a unipotent upper-triangular block and a
/// block without eigenvalue 1: peels eigenvectors of eigenvalue 1 one at a
/// time, then kills the off-diagonal block with sylvester_solve.
SplitResult split_unipotent(const MatF2& d);

}  // namespace rzeta
