#include "rzeta/oracles.hpp"

#include <chrono>
#include <numeric>
#include <stdexcept>

namespace rzeta {

std::uint64_t oracle_count_solutions(const MatF2& a, const VecF2& b) {
    if (a.rows() != b.len()) throw std::invalid_argument("oracle_count_solutions: dimension mismatch");
    if (a.cols() > 22) throw std::invalid_argument("oracle_count_solutions: dimension too large");
    std::uint64_t count = 0;
    for (std::uint64_t w = 0; w < (std::uint64_t(1) << a.cols()); ++w)
        if (a * VecF2::from_word(w, a.cols()) == b) ++count;
    return count;
}

mpz_class oracle_torus_rnumber(const MatZ& d2, std::uint64_t m) {
    MatZ delta = MatZ::identity(d2.rows()) - mat_pow(d2, m);
    mpz_class dd = abs(det(delta));
    if (dd == 0) throw std::invalid_argument("oracle_torus_rnumber: singular I - d2^m");
    mpz_class prod = 1;
    for (const auto& e : smith_normal_form(delta)) prod *= e;
    if (prod != dd) throw std::logic_error("oracle_torus_rnumber: SNF product differs from |det|");
    return prod;
}

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::uint64_t windowed_class_count(const ValidatedAut& aut, long window, std::uint64_t power) {
    const std::size_t n = aut.group().n;
    const std::size_t k = aut.group().holonomy_rank;
    const long side = 2 * window + 1;
    // conjugator walks use the full window; classes are counted in a core
    // half-window so boundary nodes whose every move exits do not show up
    // as spurious classes
    const long core = (window + 1) / 2;
    const int eps_count = k >= 1 ? 2 : 1;

    MatZ dm = mat_pow(aut.D(), power);
    // translation part of phi^power is (sum_{i<power} D^i) d, halved in Aff
    MatZ gs = geometric_sum(aut.D(), power);
    std::vector<mpz_class> dmvec(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dmvec[i] += gs.at(i, j) * aut.d()[j];

    // pi_k dmvec: the (I - J)/2 image, i.e. the first k coordinates
    std::vector<mpz_class> proj(n, 0);
    for (std::size_t i = 0; i < k; ++i) proj[i] = dmvec[i];

    std::size_t coords = 1;
    for (std::size_t i = 0; i < n; ++i) coords *= static_cast<std::size_t>(side);
    UnionFind uf(coords * eps_count);

    auto index_of = [&](const std::vector<long>& a, int eps) -> std::size_t {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx = idx * side + static_cast<std::size_t>(a[i] + window);
        return idx * eps_count + eps;
    };
    auto in_window = [&](const std::vector<mpz_class>& a) {
        for (const auto& c : a)
            if (abs(c) > window) return false;
        return true;
    };
    auto to_long = [&](const std::vector<mpz_class>& a) {
        std::vector<long> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<long>(a[i].get_si());
        return r;
    };

    std::vector<long> a(n, -window);
    for (;;) {
        for (int eps = 0; eps < eps_count; ++eps) {
            std::size_t self = index_of(a, eps);
            // twisted move by h = (+-e_i, I): a +- (e_i - A Dm e_i)
            for (std::size_t i = 0; i < n; ++i) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    std::vector<mpz_class> target(n);
                    for (std::size_t r = 0; r < n; ++r) {
                        mpz_class col = dm.at(r, i);
                        if (eps == 1 && r < k) col = -col;  // A = J
                        target[r] = a[r] + sgn * ((r == i ? 1 : 0) - col);
                    }
                    if (in_window(target)) uf.unite(self, index_of(to_long(target), eps));
                }
            }
            // twisted move by h = (0, J): J a - A pi_k dmvec
            if (k >= 1) {
                std::vector<mpz_class> target(n);
                for (std::size_t r = 0; r < n; ++r) {
                    mpz_class base = r < k ? mpz_class(-a[r]) : mpz_class(a[r]);
                    mpz_class shift = proj[r];
                    if (eps == 1 && r < k) shift = -shift;
                    target[r] = base - shift;
                }
                if (in_window(target)) uf.unite(self, index_of(to_long(target), eps));
            }
        }
        // next lattice point
        std::size_t i = 0;
        while (i < n && a[i] == window) a[i++] = -window;
        if (i == n) break;
        ++a[i];
    }

    std::vector<bool> seen(uf.parent.size(), false);
    std::uint64_t classes = 0;
    std::vector<long> c(n, -core);
    for (;;) {
        for (int eps = 0; eps < eps_count; ++eps) {
            std::size_t root = uf.find(index_of(c, eps));
            if (!seen[root]) {
                seen[root] = true;
                ++classes;
            }
        }
        std::size_t i = 0;
        while (i < n && c[i] == core) c[i++] = -core;
        if (i == n) break;
        ++c[i];
    }
    return classes;
}

}  // namespace

WindowedClasses oracle_windowed_classes(const ValidatedAut& aut, unsigned window,
                                        std::uint64_t power) {
    if (aut.group().n > 4 || window > 8)
        throw std::invalid_argument("oracle_windowed_classes: resource cap exceeded");
    if (window < 2) throw std::invalid_argument("oracle_windowed_classes: window too small");
    WindowedClasses out;
    out.classes = windowed_class_count(aut, window, power);
    out.stable = out.classes == windowed_class_count(aut, window - 1, power);
    return out;
}

std::vector<std::uint64_t> oracle_sequence(const MatF2& dbar, const VecF2& dvec,
                                           std::size_t horizon) {
    if (dbar.rows() != dbar.cols() || dbar.rows() != dvec.len())
        throw std::invalid_argument("oracle_sequence: dimension mismatch");
    std::size_t n = dbar.rows();
    if (n > 16) throw std::invalid_argument("oracle_sequence: dimension cap exceeded");

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
    std::vector<std::uint64_t> cur(total);
    std::iota(cur.begin(), cur.end(), 0);
    std::vector<std::uint64_t> v(horizon, 0);
    for (std::size_t kk = 1; kk <= horizon; ++kk) {
        std::uint64_t fixed = 0;
        for (std::uint64_t x = 0; x < total; ++x) {
            cur[x] = step(cur[x]);  // now holds T^kk(x)
            if (cur[x] == x) ++fixed;
        }
        v[kk - 1] = fixed;
    }
    return v;
}

bool oracle_series_match(const RationalFn& f, const std::vector<mpz_class>& rnumbers) {
    PowerSeriesQ e = expand(f, rnumbers.size() + 1);
    if (e.empty() || e[0] != 1) return false;
    // invert m e_m = sum_j R_j e_{m-j}
    std::vector<mpq_class> r(rnumbers.size() + 1, 0);
    for (std::size_t m = 1; m < e.size(); ++m) {
        mpq_class acc = mpq_class(static_cast<long>(m)) * e[m];
        for (std::size_t j = 1; j < m; ++j) acc -= r[j] * e[m - j];
        r[m] = acc;
        if (r[m] != mpq_class(rnumbers[m - 1])) return false;
    }
    return true;
}

MatF2 random_invertible_f2(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        MatF2 m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1);
        if (m.is_invertible()) return m;
    }
}

VecF2 random_vec_f2(std::mt19937_64& rng, std::size_t n) {
    VecF2 v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

MatZ random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    MatZ u = MatZ::identity(n);
    if (n < 2) return u;
    for (int s = 0; s < steps; ++s) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long c = static_cast<long>(rng() % 5) - 2;
        for (std::size_t col = 0; col < n; ++col) u.at(i, col) += mpz_class(c) * u.at(j, col);
    }
    return u;
}

ValidatedAut random_zeta_instance(std::mt19937_64& rng, std::size_t max_dim) {
    if (max_dim < 2) throw std::invalid_argument("random_zeta_instance: max_dim < 2");
    for (int attempt = 0; attempt < 4000; ++attempt) {
        std::size_t n = 2 + rng() % (max_dim - 1);
        // k = n, or a proper split with both blocks of dimension >= 2
        std::vector<std::size_t> ks{n};
        for (std::size_t k = 2; k + 2 <= n; ++k) ks.push_back(k);
        std::size_t k = ks[rng() % ks.size()];

        MatZ D = k == n ? random_unimodular(rng, n)
                        : MatZ::block_diag(random_unimodular(rng, k), random_unimodular(rng, n - k));
        AffineAut a;
        a.D = D;
        for (std::size_t i = 0; i < n; ++i) a.d.push_back(static_cast<long>(rng() % 7) - 3);
        ValidatedAut v = validate({n, k}, a);
        if (zeta_exists(v).exists) return v;
    }
    throw std::runtime_error("random_zeta_instance: no instance found (seed exhausted)");
}

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<VerifyReport> run_random_verification(std::uint64_t seed, std::size_t count,
                                                  std::size_t dim_cap) {
    std::vector<VerifyReport> reports;
    std::mt19937_64 rng(seed);

    {
        VerifyReport rep{"count_solutions vs exhaustive enumeration"};
        Stopwatch sw;
        std::size_t cap = std::min<std::size_t>(dim_cap, 10);
        for (std::size_t t = 0; t < count; ++t) {
            std::size_t rows = 1 + rng() % cap, cols = 1 + rng() % cap;
            MatF2 a(rows, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) a.set(i, j, rng() & 1);
            VecF2 b = random_vec_f2(rng, rows);
            if (count_solutions(a, b) != oracle_count_solutions(a, b)) ++rep.failures;
            ++rep.instances;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    {
        VerifyReport rep{"decompose vs enumerated sequence (both split paths)"};
        Stopwatch sw;
        std::size_t cap = std::min<std::size_t>(dim_cap, 8);
        for (std::size_t t = 0; t < count; ++t) {
            std::size_t n = 1 + rng() % cap;
            MatF2 d = random_invertible_f2(rng, n);
            VecF2 dv = random_vec_f2(rng, n);
            BasisCombo combo = decompose(d, dv);
            bool ok = combo == decompose_via_split(d, dv);
            ok = ok && combo.total() == (std::uint64_t(1) << n);
            std::size_t horizon = (std::size_t(1) << n) + 8;
            auto v = oracle_sequence(d, dv, horizon);
            for (std::size_t kk = 1; ok && kk <= horizon; ++kk) ok = combo.eval(kk) == v[kk - 1];
            if (!ok) ++rep.failures;
            ++rep.instances;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    {
        VerifyReport rep{"split_unipotent reassembly and block shapes"};
        Stopwatch sw;
        std::size_t cap = std::min<std::size_t>(dim_cap, 10);
        for (std::size_t t = 0; t < count; ++t) {
            std::size_t n = 1 + rng() % cap;
            MatF2 d = random_invertible_f2(rng, n);
            SplitResult s = split_unipotent(d);
            bool ok = s.p.is_invertible();
            ok = ok && *s.p.inverse() * MatF2::block_diag(s.d1, s.d2) * s.p == d;
            std::size_t u = s.size_unipotent;
            if (u > 0) ok = ok && (s.d1 + MatF2::identity(u)).pow(u) == MatF2(u, u);
            if (s.d2.rows() > 0)
                ok = ok && (s.d2 + MatF2::identity(s.d2.rows())).is_invertible();
            if (!ok) ++rep.failures;
            ++rep.instances;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    {
        VerifyReport rep{"torus count vs Smith normal form cokernel order"};
        Stopwatch sw;
        std::size_t cap = std::max<std::size_t>(2, std::min<std::size_t>(dim_cap, 5));
        std::size_t made = 0;
        while (made < count) {
            std::size_t n = 2 + rng() % (cap - 1);
            MatZ d2 = random_unimodular(rng, n);
            std::uint64_t m = 1 + rng() % 10;
            MatZ delta = MatZ::identity(n) - mat_pow(d2, m);
            mpz_class dd = abs(det(delta));
            if (dd == 0) continue;  // not hyperbolic at this power
            if (oracle_torus_rnumber(d2, m) != dd) ++rep.failures;
            ++rep.instances;
            ++made;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    {
        VerifyReport rep{"zeta pipeline vs log-derivative of the closed form"};
        Stopwatch sw;
        std::size_t zcount = std::max<std::size_t>(1, count / 10);
        std::size_t zdim = std::max<std::size_t>(2, std::min<std::size_t>(dim_cap, 4));
        for (std::size_t t = 0; t < zcount; ++t) {
            ValidatedAut aut = random_zeta_instance(rng, zdim);
            PipelineResult res = full_pipeline(aut);
            bool ok = res.fn.certified && oracle_series_match(res.fn, res.rnumbers);
            ok = ok && res.fn.numerator.degree() + res.fn.denominator.degree()
                           <= static_cast<long>(res.fn.degree_bound_used);
            if (!ok) ++rep.failures;
            ++rep.instances;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    return reports;
}

std::vector<VerifyReport> run_instance_verification(const ValidatedAut& aut) {
    std::vector<VerifyReport> reports;
    const std::size_t n = aut.group().n;
    const std::size_t k = aut.group().holonomy_rank;

    if (k >= 1 && k <= 16) {
        VerifyReport rep{"holonomy block solution counts vs enumeration"};
        Stopwatch sw;
        const MatF2& d1 = aut.D1_mod2();
        std::size_t horizon = std::min<std::size_t>((std::size_t(1) << k) + 8, 40);
        auto v = oracle_sequence(d1, aut.d1_mod2(), horizon);
        MatF2 id = MatF2::identity(k);
        for (std::size_t m = 1; m <= horizon; ++m) {
            VecF2 rhs = d1.geometric_sum(m) * aut.d1_mod2();
            if (count_solutions(id + d1.pow(m), rhs) != v[m - 1]) ++rep.failures;
            ++rep.instances;
        }
        BasisCombo combo = decompose(d1, aut.d1_mod2());
        bool ok = combo == decompose_via_split(d1, aut.d1_mod2());
        for (std::size_t m = 1; ok && m <= horizon; ++m) ok = combo.eval(m) == v[m - 1];
        if (!ok) ++rep.failures;
        ++rep.instances;
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    if (k < n) {
        VerifyReport rep{"torus factor vs Smith normal form"};
        Stopwatch sw;
        for (std::uint64_t m = 1; m <= 10; ++m) {
            MatZ delta = MatZ::identity(n - k) - mat_pow(aut.D2(), m);
            if (abs(det(delta)) == 0) continue;
            if (oracle_torus_rnumber(aut.D2(), m) != abs(det(delta))) ++rep.failures;
            ++rep.instances;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    if (n <= 4) {
        VerifyReport rep{"windowed twisted-conjugacy classes vs formula"};
        Stopwatch sw;
        for (std::uint64_t m = 1; m <= 3; ++m) {
            RNumber r = reidemeister_number(aut, m);
            if (!r.is_finite()) continue;
            WindowedClasses wc = oracle_windowed_classes(aut, n >= 4 ? 4 : 6, m);
            ++rep.instances;
            if (wc.stable && mpz_class(static_cast<unsigned long>(wc.classes)) != r.value())
                ++rep.failures;
        }
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    if (zeta_exists(aut).exists && n <= 4) {
        VerifyReport rep{"zeta closed form vs Reidemeister numbers"};
        Stopwatch sw;
        PipelineResult res = full_pipeline(aut);
        rep.instances = 1;
        if (!res.fn.certified || !oracle_series_match(res.fn, res.rnumbers)) ++rep.failures;
        rep.wall_ms = sw.ms();
        reports.push_back(rep);
    }

    return reports;
}

}  // namespace rzeta
