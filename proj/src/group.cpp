#include "rzeta/group.hpp"

#include <thread>

namespace rzeta {

ValidatedAut validate(const DiagZ2Group& g, const AffineAut& aut) {
    std::size_t n = g.n, k = g.holonomy_rank;
    if (k > n) throw validation_error(ValidationFault::BAD_SHAPE, "holonomy_rank exceeds n");
    if (aut.D.rows() != n || aut.D.cols() != n)
        throw validation_error(ValidationFault::BAD_SHAPE, "D is not n x n");
    if (aut.d.size() != n) throw validation_error(ValidationFault::BAD_SHAPE, "d is not length n");

    mpz_class dd = det(aut.D);
    if (dd != 1 && dd != -1)
        throw validation_error(ValidationFault::NON_UNIMODULAR, "det D must be +-1, got " + dd.get_str());

    if (k > 0 && k < n) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                bool upper = i < k && j >= k, lower = i >= k && j < k;
                if ((upper || lower) && aut.D.at(i, j) != 0)
                    throw validation_error(ValidationFault::BLOCK_MIXING,
                                           "D mixes the holonomy and torus blocks");
            }
    }

    ValidatedAut v;
    v.g_ = g;
    v.aut_ = aut;
    v.d1_ = aut.D.submatrix(0, 0, k, k);
    v.d2_ = aut.D.submatrix(k, k, n, n);
    v.dvec1_.assign(aut.d.begin(), aut.d.begin() + k);
    v.d1bar_ = mod2(v.d1_);
    v.dvec1bar_ = mod2(v.dvec1_);
    return v;
}

bool is_finite(const ValidatedAut& aut, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("is_finite: m < 1");
    std::size_t k = aut.group().holonomy_rank;
    MatZ d1m = mat_pow(aut.D1(), m);
    MatZ d2m = mat_pow(aut.D2(), m);
    mpz_class f1 = det(MatZ::identity(k) - d1m);
    mpz_class f2 = det(MatZ::identity(aut.D2().rows()) - d2m);
    if (f1 == 0 || f2 == 0) return false;                       // A = I
    if (k > 0 && det(MatZ::identity(k) + d1m) == 0) return false;  // A = J
    return true;
}

RNumber reidemeister_number(const ValidatedAut& aut, std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("reidemeister_number: m < 1");
    if (!is_finite(aut, m)) return RNumber::infinite();

    std::size_t k = aut.group().holonomy_rank;
    MatZ d2m = mat_pow(aut.D2(), m);
    mpz_class torus = abs(det(MatZ::identity(aut.D2().rows()) - d2m));
    if (k == 0) return RNumber(torus);

    MatZ d1m = mat_pow(aut.D1(), m);
    mpz_class sum = abs(det(MatZ::identity(k) - d1m)) + abs(det(MatZ::identity(k) + d1m));
    if (mpz_odd_p(sum.get_mpz_t())) throw std::logic_error("reidemeister_number: odd determinant sum");
    mpz_class half = sum / 2;

    // O(I - D1^m, [sum D1^i] d1): only the mod-2 data matters
    MatF2 lhs = MatF2::identity(k) + aut.D1_mod2().pow(m);
    VecF2 rhs = aut.D1_mod2().geometric_sum(m) * aut.d1_mod2();
    mpz_class holonomy = half + mpz_class(static_cast<unsigned long>(count_solutions(lhs, rhs)));

    return RNumber(holonomy * torus);
}

std::vector<RNumber> reidemeister_sequence(const ValidatedAut& aut, std::uint64_t kmax,
                                           unsigned threads) {
    std::vector<RNumber> out(kmax, RNumber::infinite());
    if (kmax == 0) return out;
    if (threads <= 1) {
        for (std::uint64_t m = 1; m <= kmax; ++m) out[m - 1] = reidemeister_number(aut, m);
        return out;
    }
    unsigned nthreads = std::min<std::uint64_t>(threads, kmax);
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned t = 0; t < nthreads; ++t)
        pool.emplace_back([&, t] {
            for (std::uint64_t m = t + 1; m <= kmax; m += nthreads)
                out[m - 1] = reidemeister_number(aut, m);
        });
    for (auto& th : pool) th.join();
    return out;
}

ZetaExistence zeta_exists(const ValidatedAut& aut) {
    ZetaExistence res;
    if (aut.group().holonomy_rank == 1) {
        res.exists = false;
        res.reason = "R-infinity";
        return res;
    }
    if (auto m = root_of_unity_order(aut.D())) {
        res.exists = false;
        res.cyclotomic_index = *m;
        res.reason = "Phi_" + std::to_string(*m) + " divides charpoly(D)";
        return res;
    }
    res.exists = true;
    return res;
}

}  // namespace rzeta
