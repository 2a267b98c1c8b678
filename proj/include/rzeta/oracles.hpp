#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rzeta/group.hpp"
#include "rzeta/seqdecomp.hpp"
#include "rzeta/zeta.hpp"

namespace rzeta {

/// Exhaustive enumeration of all 2^cols candidate vectors. cols <= 22.
std::uint64_t oracle_count_solutions(const MatF2& a, const VecF2& b);

/// Cokernel order of I - d2^m by Smith normal form; must equal
/// |det(I - d2^m)|, which it also cross-checks.
mpz_class oracle_torus_rnumber(const MatZ& d2, std::uint64_t m);

struct WindowedClasses {
    std::uint64_t classes = 0;
    bool stable = false;  // counts agree between windows M-1 and M
};

/// Union-find over twisted conjugacy moves by the group generators, with
/// conjugators and representatives confined to the coordinate window
/// [-window, window]^n. A consistency check, not a proof: classes may merge
/// only outside the window.
WindowedClasses oracle_windowed_classes(const ValidatedAut& aut, unsigned window,
                                        std::uint64_t power);

/// v_k by sweeping the full state space with the affine map, no linear
/// algebra involved. n <= 16.
std::vector<std::uint64_t> oracle_sequence(const MatF2& dbar, const VecF2& dvec,
                                           std::size_t horizon);

/// Expands f by long division and inverts the exp recurrence; true iff the
/// log-derivative coefficients equal the given Reidemeister numbers exactly.
bool oracle_series_match(const RationalFn& f, const std::vector<mpz_class>& rnumbers);

struct VerifyReport {
    std::string check;
    std::size_t instances = 0;
    std::size_t failures = 0;
    double wall_ms = 0.0;
};

// --- randomized instance generation (fixed seeds for reproducible runs) ---

MatF2 random_invertible_f2(std::mt19937_64& rng, std::size_t n);
VecF2 random_vec_f2(std::mt19937_64& rng, std::size_t n);
/// Product of elementary row operations with small coefficients: det = +-1
/// by construction.
MatZ random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 14);
/// Random validated automorphism with an existing zeta function (k = n or a
/// 0 < k < n split with hyperbolic blocks), dimension 2..max_dim.
ValidatedAut random_zeta_instance(std::mt19937_64& rng, std::size_t max_dim);

/// Randomized cross-validation suite; one report per check.
std::vector<VerifyReport> run_random_verification(std::uint64_t seed, std::size_t count,
                                                  std::size_t dim_cap);

/// Every oracle applicable to one concrete instance.
std::vector<VerifyReport> run_instance_verification(const ValidatedAut& aut);

}  // namespace rzeta
