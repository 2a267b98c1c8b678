#include "rzeta/seqdecomp.hpp"

#include <numeric>
#include <stdexcept>

namespace rzeta {

namespace {

constexpr std::size_t kEnumerationCap = 24;  // 2^24 states

void require_invertible(const MatF2& dbar) {
    if (dbar.rows() != dbar.cols()) throw std::invalid_argument("seqdecomp: non-square matrix");
    if (!dbar.is_invertible()) throw std::invalid_argument("seqdecomp: singular matrix");
}

}  // namespace

BasisCombo::BasisCombo(std::map<std::uint64_t, std::uint64_t> coeffs, std::size_t ambient_dim)
    : c_(std::move(coeffs)), ambient_(ambient_dim) {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->first == 0) throw std::invalid_argument("BasisCombo: index 0");
        it = it->second == 0 ? c_.erase(it) : std::next(it);
    }
}

std::uint64_t BasisCombo::eval(std::uint64_t k) const {
    if (k == 0) throw std::invalid_argument("BasisCombo::eval: k must be positive");
    std::uint64_t acc = 0;
    for (const auto& [i, c] : c_)
        if (k % i == 0) acc += i * c;
    return acc;
}

std::uint64_t BasisCombo::total() const {
    std::uint64_t acc = 0;
    for (const auto& [i, c] : c_) acc += i * c;
    return acc;
}

SeqTables solution_sequence(const MatF2& dbar, const VecF2& dvec, std::size_t horizon) {
    require_invertible(dbar);
    if (dbar.rows() != dvec.len()) throw std::invalid_argument("solution_sequence: dimension mismatch");
    if (horizon < 1) throw std::invalid_argument("solution_sequence: horizon < 1");
    std::size_t n = dbar.rows();

    SeqTables t;
    t.v.resize(horizon);
    t.w.resize(horizon);
    MatF2 id = MatF2::identity(n);
    MatF2 power = id;
    MatF2 gsum(n, n);  // sum_{i<k} dbar^i
    for (std::size_t k = 1; k <= horizon; ++k) {
        gsum = gsum + power;
        power = power * dbar;
        t.v[k - 1] = count_solutions(id + power, gsum * dvec);
    }
    // V_k is the disjoint union of W_d over d | k
    std::uint64_t wsum = 0;
    for (std::size_t k = 1; k <= horizon; ++k) {
        std::uint64_t acc = 0;
        for (std::size_t d = 1; d < k; ++d)
            if (k % d == 0) acc += t.w[d - 1];
        if (acc > t.v[k - 1]) throw std::logic_error("solution_sequence: negative w_k");
        t.w[k - 1] = t.v[k - 1] - acc;
        if (t.w[k - 1] > 0 && t.w[k - 1] % k != 0)
            throw std::logic_error("solution_sequence: k does not divide w_k");
        wsum += t.w[k - 1];
    }
    if (n < 64 && wsum > (std::uint64_t(1) << n))
        throw std::logic_error("solution_sequence: w total exceeds 2^n");
    return t;
}

BasisCombo decompose(const MatF2& dbar, const VecF2& dvec) {
    require_invertible(dbar);
    if (dbar.rows() != dvec.len()) throw std::invalid_argument("decompose: dimension mismatch");
    std::size_t n = dbar.rows();
    if (n > kEnumerationCap) throw std::invalid_argument("decompose: dimension above enumeration cap");

    // rows as bit masks so one step of x -> dbar x + dvec is n parity tests
    std::vector<std::uint64_t> row_mask(n);
    for (std::size_t i = 0; i < n; ++i) row_mask[i] = dbar.row(i).as_word();
    std::uint64_t shift = dvec.as_word();
    auto step = [&](std::uint64_t x) {
        std::uint64_t y = 0;
        for (std::size_t i = 0; i < n; ++i)
            y |= std::uint64_t(__builtin_popcountll(row_mask[i] & x) & 1) << i;
        return y ^ shift;
    };

    std::uint64_t total = std::uint64_t(1) << n;
    std::vector<bool> visited(total, false);
    std::map<std::uint64_t, std::uint64_t> cycle_count;
    for (std::uint64_t start = 0; start < total; ++start) {
        if (visited[start]) continue;
        std::uint64_t len = 0, x = start;
        do {
            visited[x] = true;
            x = step(x);
            ++len;
        } while (x != start);
        ++cycle_count[len];
    }
    return BasisCombo(std::move(cycle_count), n);
}

namespace {

// counts for one block, affine right-hand side included
std::uint64_t block_count(const MatF2& d, const VecF2& dv, std::uint64_t k) {
    MatF2 id = MatF2::identity(d.rows());
    return count_solutions(id + d.pow(k), d.geometric_sum(k) * dv);
}

BasisCombo unipotent_block_combo(const MatF2& d1, const VecF2& dv) {
    std::size_t u = d1.rows();
    std::map<std::uint64_t, std::uint64_t> c;
    if (u == 0) {
        c[1] = 1;
        return BasisCombo(std::move(c), 0);
    }
    // new solutions appear only at powers of two; everything solves once
    // 2^r - 1 >= u, since then both sides of the system vanish
    std::uint64_t full = std::uint64_t(1) << u;
    std::uint64_t prev = 0;
    for (std::uint64_t e = 1;; e *= 2) {
        std::uint64_t v = block_count(d1, dv, e);
        std::uint64_t w = v - prev;  // V_{e/2} included in V_e
        if (w > 0) {
            if (w % e != 0) throw std::logic_error("unipotent block: e does not divide w");
            c[e] = w / e;
        }
        prev = v;
        if (v == full) break;
        if (e > 2 * full) throw std::logic_error("unipotent block: no saturation");
    }
    return BasisCombo(std::move(c), u);
}

BasisCombo no_eigenvalue_one_block_combo(const MatF2& d2, const VecF2& dv) {
    std::size_t l = d2.rows();
    std::map<std::uint64_t, std::uint64_t> c;
    if (l == 0) {
        c[1] = 1;
        return BasisCombo(std::move(c), 0);
    }
    // multiplicative order of d2; support of w lies in its divisors
    MatF2 id = MatF2::identity(l);
    std::uint64_t ord = 1;
    for (MatF2 p = d2; !(p == id); p = p * d2) ++ord;

    std::map<std::uint64_t, std::uint64_t> w;
    for (std::uint64_t dd = 1; dd <= ord; ++dd) {
        if (ord % dd != 0) continue;
        std::uint64_t v = block_count(d2, dv, dd);
        std::uint64_t acc = 0;
        for (const auto& [e, we] : w)
            if (dd % e == 0) acc += we;
        if (acc > v) throw std::logic_error("no-eigenvalue-1 block: negative w");
        std::uint64_t wd = v - acc;
        if (wd > 0) {
            if (wd % dd != 0) throw std::logic_error("no-eigenvalue-1 block: dd does not divide w");
            w[dd] = wd;
            c[dd] = wd / dd;
        }
    }
    BasisCombo combo(std::move(c), l);
    if (combo.total() != (std::uint64_t(1) << l))
        throw std::logic_error("no-eigenvalue-1 block: totality violated");
    return combo;
}

}  // namespace

BasisCombo decompose_via_split(const MatF2& dbar, const VecF2& dvec) {
    require_invertible(dbar);
    if (dbar.rows() != dvec.len()) throw std::invalid_argument("decompose_via_split: dimension mismatch");
    SplitResult s = split_unipotent(dbar);
    VecF2 moved = s.p * dvec;
    std::size_t u = s.size_unipotent, n = dbar.rows();
    BasisCombo c1 = unipotent_block_combo(s.d1, moved.slice(0, u));
    BasisCombo c2 = no_eigenvalue_one_block_combo(s.d2, moved.slice(u, n));
    BasisCombo out = combine(c1, c2);
    if (out.ambient_dim() != n || out.total() != (std::uint64_t(1) << n))
        throw std::logic_error("decompose_via_split: totality violated");
    return out;
}

BasisCombo combine(const BasisCombo& a, const BasisCombo& b) {
    std::map<std::uint64_t, std::uint64_t> c;
    for (const auto& [i, ci] : a.coeffs())
        for (const auto& [j, cj] : b.coeffs()) {
            std::uint64_t g = std::gcd(i, j);
            c[i / g * j] += ci * cj * g;
        }
    return BasisCombo(std::move(c), a.ambient_dim() + b.ambient_dim());
}

}  // namespace rzeta
