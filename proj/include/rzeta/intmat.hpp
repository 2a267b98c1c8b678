#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rzeta/f2.hpp"

namespace rzeta {

/// Dense matrix with arbitrary-precision integer entries.
class MatZ {
public:
    MatZ() = default;
    MatZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static MatZ identity(std::size_t n);
    static MatZ from_rows(const std::vector<std::vector<long long>>& rows);
    static MatZ block_diag(const MatZ& a, const MatZ& b);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const mpz_class& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    mpz_class& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    MatZ operator+(const MatZ& o) const;
    MatZ operator-(const MatZ& o) const;
    MatZ operator*(const MatZ& o) const;
    MatZ operator*(const mpz_class& s) const;
    bool operator==(const MatZ& o) const = default;

    mpz_class trace() const;
    MatZ submatrix(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpz_class> e_;
};

/// Integer-coefficient polynomial, coefficients ascending. Zero polynomial is
/// the empty coefficient list (degree -1).
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<mpz_class> coeffs);
    static PolyZ constant(const mpz_class& c);
    static PolyZ monomial(const mpz_class& c, std::size_t deg);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(std::size_t i) const;  // 0 beyond the stored range
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& lead() const { return c_.back(); }

    PolyZ operator+(const PolyZ& o) const;
    PolyZ operator-(const PolyZ& o) const;
    PolyZ operator*(const PolyZ& o) const;
    bool operator==(const PolyZ& o) const = default;

    PolyZ derivative() const;
    mpz_class eval(const mpz_class& x) const;

    /// Quotient and remainder; requires the divisor's leading coefficient to
    /// be a unit so the division stays in integer coefficients.
    std::pair<PolyZ, PolyZ> divrem(const PolyZ& divisor) const;
    bool divisible_by(const PolyZ& divisor) const;

    std::string to_string(const std::string& var = "x") const;

private:
    std::vector<mpz_class> c_;
    void normalize();
};

mpz_class det(const MatZ& a);
MatZ mat_pow(const MatZ& a, std::uint64_t k);
/// I + a + ... + a^(k-1); k >= 1.
MatZ geometric_sum(const MatZ& a, std::uint64_t k);
/// det(xI - a): monic, exact (Faddeev-LeVerrier with exact divisions).
PolyZ charpoly(const MatZ& a);
/// Diagonal of the Smith normal form: d1 | d2 | ..., nonnegative.
std::vector<mpz_class> smith_normal_form(const MatZ& a);

PolyZ cyclotomic(unsigned m);

/// Smallest m with cyclotomic(m) dividing charpoly(a), scanning
/// m = 1 .. 2n^2+2 (covers every m with phi(m) <= n). Requires det(a) != 0.
std::optional<unsigned> root_of_unity_order(const MatZ& a);
bool has_root_of_unity_eigenvalue(const MatZ& a);

MatF2 mod2(const MatZ& a);
VecF2 mod2(const std::vector<mpz_class>& v);

}  // namespace rzeta
