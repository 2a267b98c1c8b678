#include "rzeta/zeta.hpp"

#include <algorithm>
#include <cassert>

namespace rzeta {

namespace {

// ---- rational-coefficient polynomial helpers (local to this file) ----

using QPoly = std::vector<mpq_class>;  // ascending, trailing zeros stripped

void qp_normalize(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

long qp_degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

QPoly qp_from_polyz(const PolyZ& p) {
    QPoly q(p.coeffs().begin(), p.coeffs().end());
    return q;
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qp_normalize(r);
    return r;
}

// remainder of a by b over the rationals
QPoly qp_rem(QPoly a, const QPoly& b) {
    qp_normalize(a);
    long db = qp_degree(b);
    while (qp_degree(a) >= db) {
        mpq_class f = a.back() / b.back();
        long shift = qp_degree(a) - db;
        for (long j = 0; j <= db; ++j) a[shift + j] -= f * b[j];
        qp_normalize(a);
    }
    return a;
}

QPoly qp_divexact(const QPoly& a, const QPoly& b) {
    QPoly rem = a;
    qp_normalize(rem);
    long db = qp_degree(b);
    QPoly quot(rem.size() >= b.size() ? rem.size() - b.size() + 1 : 0, 0);
    while (qp_degree(rem) >= db) {
        mpq_class f = rem.back() / b.back();
        long shift = qp_degree(rem) - db;
        quot[shift] = f;
        for (long j = 0; j <= db; ++j) rem[shift + j] -= f * b[j];
        qp_normalize(rem);
    }
    if (!rem.empty()) throw std::logic_error("qp_divexact: nonzero remainder");
    qp_normalize(quot);
    return quot;
}

QPoly qp_gcd(QPoly a, QPoly b) {
    qp_normalize(a);
    qp_normalize(b);
    while (!b.empty()) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {  // monic to keep coefficients tame
            mpq_class lead = b.back();
            for (auto& c : b) c /= lead;
        }
    }
    if (!a.empty()) {
        mpq_class lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

QPoly qp_derivative(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly r(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * mpq_class(static_cast<long>(i));
    return r;
}

mpq_class qp_eval(const QPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

PolyZ qp_to_polyz(const QPoly& p, const char* who) {
    std::vector<mpz_class> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].get_den() != 1)
            throw reconstruction_error(std::string(who) + ": non-integer coefficient (Fatou)");
        c[i] = p[i].get_num();
    }
    return PolyZ(std::move(c));
}

}  // namespace

PowerSeriesQ zeta_series(const std::vector<RNumber>& rnumbers) {
    for (const auto& r : rnumbers)
        if (!r.is_finite()) throw zeta_undefined("infinite Reidemeister number in the sequence");
    PowerSeriesQ e(rnumbers.size() + 1);
    e[0] = 1;
    for (std::size_t m = 1; m < e.size(); ++m) {
        mpq_class acc = 0;
        for (std::size_t j = 1; j <= m; ++j) acc += mpq_class(rnumbers[j - 1].value()) * e[m - j];
        e[m] = acc / mpq_class(static_cast<long>(m));
    }
    return e;
}

unsigned degree_bound(const DiagZ2Group& g) {
    if (g.n >= 30) throw std::invalid_argument("degree_bound: dimension too large");
    return 1u << (g.n + 1);
}

RationalFn reconstruct(const PowerSeriesQ& series, unsigned bound) {
    std::size_t b = bound;
    if (series.size() < 2 * b + 1)
        throw std::invalid_argument("reconstruct: need at least 2*bound+1 coefficients");

    // Hankel system: rows m = b+1..2b of (Q * S) vanish; unknowns q_1..q_b
    std::size_t nr = b, nc = b;
    std::vector<std::vector<mpq_class>> m(nr, std::vector<mpq_class>(nc + 1, 0));
    for (std::size_t r = 0; r < nr; ++r) {
        std::size_t row_idx = b + 1 + r;
        for (std::size_t c = 0; c < nc; ++c) m[r][c] = series[row_idx - (c + 1)];
        m[r][nc] = -series[row_idx];
    }

    // deterministic elimination, free variables pinned to zero
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[rank]);
        mpq_class lead = m[rank][col];
        for (auto& x : m[rank]) x /= lead;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            mpq_class f = m[r][col];
            for (std::size_t c = col; c <= nc; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < nr; ++r)
        if (m[r][nc] != 0) throw reconstruction_error("reconstruct: no solution at this bound");

    QPoly q(b + 1, 0);
    q[0] = 1;
    for (std::size_t r = 0; r < rank; ++r) q[pivot_col[r] + 1] = m[r][nc];
    qp_normalize(q);

    // P = (Q*S) truncated at degree b; everything past it must vanish
    QPoly p(b + 1, 0);
    bool certified = true;
    for (std::size_t mdeg = 0; mdeg < series.size(); ++mdeg) {
        mpq_class conv = 0;
        for (std::size_t j = 0; j < q.size() && j <= mdeg; ++j) conv += q[j] * series[mdeg - j];
        if (mdeg <= b) {
            p[mdeg] = conv;
        } else if (conv != 0) {
            if (mdeg <= 2 * b) throw reconstruction_error("reconstruct: determining window mismatch");
            certified = false;  // extra certification terms disagree
        }
    }
    qp_normalize(p);

    // reduce, pin Q(0) = 1, and demand integer coefficients
    if (!p.empty()) {
        QPoly g = qp_gcd(p, q);
        if (qp_degree(g) > 0) {
            p = qp_divexact(p, g);
            q = qp_divexact(q, g);
        }
    }
    if (q.empty() || q[0] == 0) throw reconstruction_error("reconstruct: denominator lost its unit");
    mpq_class q0 = q[0];
    for (auto& c : q) c /= q0;
    for (auto& c : p) c /= q0;

    RationalFn fn;
    fn.numerator = qp_to_polyz(p, "reconstruct numerator");
    fn.denominator = qp_to_polyz(q, "reconstruct denominator");
    fn.certified = certified;
    fn.degree_bound_used = bound;
    return fn;
}

RationalFn second_factor(const BasisCombo& combo) {
    PolyZ den = PolyZ::constant(1);
    for (const auto& [i, c] : combo.coeffs()) {
        // (1 - z^i)^c by binary powering
        PolyZ base({1});
        {
            std::vector<mpz_class> v(i + 1, 0);
            v[0] = 1;
            v[i] = -1;
            base = PolyZ(std::move(v));
        }
        std::uint64_t e = c;
        PolyZ acc = PolyZ::constant(1);
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        den = den * acc;
    }
    RationalFn fn;
    fn.numerator = PolyZ::constant(1);
    fn.denominator = den;
    fn.certified = true;
    return fn;
}

PowerSeriesQ expand(const RationalFn& f, std::size_t terms) {
    PowerSeriesQ e(terms, 0);
    const PolyZ& p = f.numerator;
    const PolyZ& q = f.denominator;
    if (q.is_zero() || q.coeff(0) == 0) throw std::invalid_argument("expand: denominator(0) = 0");
    for (std::size_t mdeg = 0; mdeg < terms; ++mdeg) {
        mpq_class acc = mpq_class(p.coeff(mdeg));
        for (std::size_t j = 1; j <= mdeg && j <= static_cast<std::size_t>(std::max<long>(q.degree(), 0)); ++j)
            acc -= mpq_class(q.coeff(j)) * e[mdeg - j];
        e[mdeg] = acc / mpq_class(q.coeff(0));
    }
    return e;
}

namespace {

int qsign(const mpq_class& x) { return mpq_sgn(x.get_mpq_t()); }

int sign_variations(const std::vector<QPoly>& chain, const mpq_class& t) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        int s = qsign(qp_eval(p, t));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

}  // namespace

Radius radius(const RationalFn& f) {
    const PolyZ& q = f.denominator;
    Radius out;
    if (q.degree() <= 0) {
        out.finite = false;
        return out;
    }

    // square-free part, then a Sturm chain of exact rational polynomials
    QPoly qq = qp_from_polyz(q);
    QPoly g = qp_gcd(qq, qp_derivative(qq));
    QPoly sf = qp_degree(g) > 0 ? qp_divexact(qq, g) : qq;

    std::vector<QPoly> chain{sf, qp_derivative(sf)};
    while (!chain.back().empty() && qp_degree(chain.back()) > 0) {
        QPoly r = qp_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }

    auto roots_in = [&](const mpq_class& a, const mpq_class& b) {
        return sign_variations(chain, a) - sign_variations(chain, b);
    };

    // Cauchy bound on every root
    mpq_class hi = 1;
    for (long i = 0; i < q.degree(); ++i) {
        mpq_class c = abs(mpq_class(q.coeff(i)) / mpq_class(q.lead()));
        if (c > hi - 1) hi = c + 1;
    }
    mpq_class lo = 0;
    if (roots_in(lo, hi) < 1)
        throw std::domain_error("radius: denominator has no positive real root");

    mpq_class width_target(1, 2000000000);  // half of 1e-9
    while (hi - lo > width_target) {
        mpq_class mid = (lo + hi) / 2;
        if (roots_in(lo, mid) >= 1) hi = mid; else lo = mid;
    }
    out.value = mpq_class((lo + hi) / 2).get_d();
    out.error_bound = 1e-9;
    out.finite = true;
    return out;
}

PipelineResult full_pipeline(const ValidatedAut& aut, unsigned threads) {
    ZetaExistence ze = zeta_exists(aut);
    if (!ze.exists) throw zeta_undefined(ze.reason);

    const DiagZ2Group& g = aut.group();
    unsigned b = degree_bound(g);
    std::vector<RNumber> rs = reidemeister_sequence(aut, 2ull * b + 11, threads);

    PipelineResult res;
    res.series = zeta_series(rs);
    res.rnumbers.reserve(rs.size());
    for (const auto& r : rs) res.rnumbers.push_back(r.value());

    res.fn = reconstruct(res.series, b);
    if (!res.fn.certified)
        throw certification_error("full_pipeline: certification terms beyond 2B+1 disagree");
    res.r = radius(res.fn);

    std::size_t k = g.holonomy_rank;
    if (k >= 2) {
        res.second_combo = decompose(aut.D1_mod2(), aut.d1_mod2());
        if (k == g.n) {
            res.second_factor_checked = true;
            PolyZ sf = second_factor(res.second_combo).denominator;
            if (!res.fn.denominator.divisible_by(sf))
                throw certification_error(
                    "full_pipeline: denominator not divisible by the second factor");
        }
    }
    return res;
}

}  // namespace rzeta
