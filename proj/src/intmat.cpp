#include "rzeta/intmat.hpp"

#include <map>
#include <stdexcept>

namespace rzeta {

MatZ MatZ::identity(std::size_t n) {
    MatZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatZ MatZ::from_rows(const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    MatZ m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("MatZ::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = mpz_class(static_cast<long>(rows[i][j]));
    }
    return m;
}

MatZ MatZ::block_diag(const MatZ& a, const MatZ& b) {
    MatZ m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

MatZ MatZ::operator+(const MatZ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatZ: shape mismatch");
    MatZ r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

MatZ MatZ::operator-(const MatZ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("MatZ: shape mismatch");
    MatZ r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

MatZ MatZ::operator*(const MatZ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatZ: shape mismatch");
    MatZ r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

MatZ MatZ::operator*(const mpz_class& s) const {
    MatZ r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

mpz_class MatZ::trace() const {
    mpz_class t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

MatZ MatZ::submatrix(std::size_t r0, std::size_t c0, std::size_t r1, std::size_t c1) const {
    if (r0 > r1 || c0 > c1 || r1 > rows_ || c1 > cols_)
        throw std::invalid_argument("MatZ::submatrix: bad range");
    MatZ m(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

PolyZ::PolyZ(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { normalize(); }

PolyZ PolyZ::constant(const mpz_class& c) { return PolyZ(std::vector<mpz_class>{c}); }

PolyZ PolyZ::monomial(const mpz_class& c, std::size_t deg) {
    std::vector<mpz_class> v(deg + 1, 0);
    v[deg] = c;
    return PolyZ(std::move(v));
}

void PolyZ::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& PolyZ::coeff(std::size_t i) const {
    static const mpz_class zero = 0;
    return i < c_.size() ? c_[i] : zero;
}

PolyZ PolyZ::operator+(const PolyZ& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator-(const PolyZ& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return PolyZ(std::move(r));
}

PolyZ PolyZ::operator*(const PolyZ& o) const {
    if (is_zero() || o.is_zero()) return PolyZ();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return PolyZ(std::move(r));
}

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<mpz_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return PolyZ(std::move(r));
}

mpz_class PolyZ::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<PolyZ, PolyZ> PolyZ::divrem(const PolyZ& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("PolyZ::divrem: division by zero");
    if (divisor.lead() != 1 && divisor.lead() != -1)
        throw std::invalid_argument("PolyZ::divrem: divisor leading coefficient must be a unit");
    std::vector<mpz_class> rem(c_);
    std::vector<mpz_class> quot;
    long dd = divisor.degree();
    if (static_cast<long>(rem.size()) - 1 >= dd) quot.assign(rem.size() - dd, 0);
    for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
        if (rem[i] == 0) continue;
        mpz_class q = rem[i] / divisor.lead();
        quot[i - dd] = q;
        for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeff(j);
    }
    return {PolyZ(std::move(quot)), PolyZ(std::move(rem))};
}

bool PolyZ::divisible_by(const PolyZ& divisor) const {
    return divrem(divisor).second.is_zero();
}

std::string PolyZ::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        bool neg = a < 0;
        mpz_class mag = neg ? mpz_class(-a) : a;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.get_str();
        if (i >= 1) {
            if (mag != 1) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

mpz_class det(const MatZ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square");
    std::size_t n = a.rows();
    if (n == 0) return 1;

    // Bareiss fraction-free elimination; every division below is exact.
    MatZ w = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && w.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                w.at(i, j) = q;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : mpz_class(-w.at(n - 1, n - 1));
}

MatZ mat_pow(const MatZ& a, std::uint64_t k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("mat_pow: non-square");
    MatZ result = MatZ::identity(a.rows());
    MatZ base = a;
    while (k) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

MatZ geometric_sum(const MatZ& a, std::uint64_t k) {
    if (a.rows() != a.cols()) throw std::invalid_argument("geometric_sum: non-square");
    if (k < 1) throw std::invalid_argument("geometric_sum: k < 1");
    MatZ acc = MatZ::identity(a.rows());
    MatZ p = MatZ::identity(a.rows());
    for (std::uint64_t i = 1; i < k; ++i) {
        p = p * a;
        acc = acc + p;
    }
    return acc;
}

PolyZ charpoly(const MatZ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: non-square");
    std::size_t n = a.rows();
    std::vector<mpz_class> c(n + 1, 0);
    c[n] = 1;
    MatZ m = MatZ::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        MatZ am = a * m;
        mpz_class t = am.trace();
        // c_{n-k} = -tr(a m)/k, exact by Newton's identities
        mpz_class ck;
        mpz_class negt = -t;
        mpz_class kk = static_cast<long>(k);
        if (!mpz_divisible_p(negt.get_mpz_t(), kk.get_mpz_t()))
            throw std::logic_error("charpoly: inexact division");
        mpz_divexact(ck.get_mpz_t(), negt.get_mpz_t(), kk.get_mpz_t());
        c[n - k] = ck;
        if (k < n) m = am + MatZ::identity(n) * ck;
    }
    return PolyZ(std::move(c));
}

std::vector<mpz_class> smith_normal_form(const MatZ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("smith_normal_form: non-square");
    std::size_t n = a.rows();
    MatZ w = a;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < n; ++j) std::swap(w.at(r1, j), w.at(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < n; ++i) std::swap(w.at(i, c1), w.at(i, c2));
    };

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block to (t, t)
            std::size_t bi = n, bj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (w.at(i, j) == 0) continue;
                    if (bi == n || cmp(abs(w.at(i, j)), abs(w.at(bi, bj))) < 0) { bi = i; bj = j; }
                }
            if (bi == n) { t = n; break; }  // trailing block all zero
            if (bi != t) swap_rows(bi, t);
            if (bj != t) swap_cols(bj, t);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w.at(i, t) == 0) continue;
                mpz_class q = w.at(i, t) / w.at(t, t);
                for (std::size_t j = t; j < n; ++j) w.at(i, j) -= q * w.at(t, j);
                if (w.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w.at(t, j) == 0) continue;
                mpz_class q = w.at(t, j) / w.at(t, t);
                for (std::size_t i = t; i < n; ++i) w.at(i, j) -= q * w.at(i, t);
                if (w.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // pivot must divide the whole trailing block
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (!mpz_divisible_p(w.at(i, j).get_mpz_t(), w.at(t, t).get_mpz_t())) {
                        for (std::size_t jj = t; jj < n; ++jj) w.at(t, jj) += w.at(i, jj);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (t == n) break;
    }

    std::vector<mpz_class> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = abs(w.at(i, i));
    return diag;
}

namespace {

std::vector<unsigned> divisors_of(unsigned m) {
    std::vector<unsigned> d;
    for (unsigned i = 1; i <= m; ++i)
        if (m % i == 0) d.push_back(i);
    return d;
}

PolyZ cyclotomic_memo(unsigned m, std::map<unsigned, PolyZ>& memo) {
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    // x^m - 1 divided by the product of all proper cyclotomic divisors
    std::vector<mpz_class> xm(m + 1, 0);
    xm[0] = -1;
    xm[m] = 1;
    PolyZ result(std::move(xm));
    for (unsigned d : divisors_of(m)) {
        if (d == m) continue;
        auto [q, r] = result.divrem(cyclotomic_memo(d, memo));
        if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
        result = q;
    }
    memo.emplace(m, result);
    return result;
}

}  // namespace

PolyZ cyclotomic(unsigned m) {
    if (m == 0) throw std::invalid_argument("cyclotomic: m must be positive");
    std::map<unsigned, PolyZ> memo;
    return cyclotomic_memo(m, memo);
}

std::optional<unsigned> root_of_unity_order(const MatZ& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("root_of_unity_order: non-square");
    if (det(a) == 0) throw std::invalid_argument("root_of_unity_order: singular matrix");
    unsigned n = static_cast<unsigned>(a.rows());
    PolyZ p = charpoly(a);
    std::map<unsigned, PolyZ> memo;
    for (unsigned m = 1; m <= 2 * n * n + 2; ++m) {
        PolyZ phi = cyclotomic_memo(m, memo);
        if (phi.degree() > static_cast<long>(n)) continue;
        if (p.divisible_by(phi)) return m;
    }
    return std::nullopt;
}

bool has_root_of_unity_eigenvalue(const MatZ& a) { return root_of_unity_order(a).has_value(); }

MatF2 mod2(const MatZ& a) {
    MatF2 m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m.set(i, j, mpz_odd_p(a.at(i, j).get_mpz_t()));
    return m;
}

VecF2 mod2(const std::vector<mpz_class>& v) {
    VecF2 r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r.set(i, mpz_odd_p(v[i].get_mpz_t()));
    return r;
}

}  // namespace rzeta
