#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "rzeta/group.hpp"
#include "rzeta/seqdecomp.hpp"

namespace rzeta {

/// Exact rational power series, coefficients ascending; e_0 = 1 for zeta use.
using PowerSeriesQ = std::vector<mpq_class>;

class zeta_undefined : public std::runtime_error {
public:
    explicit zeta_undefined(const std::string& reason)
        : std::runtime_error("zeta undefined: " + reason), reason_(reason) {}
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

class reconstruction_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class certification_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// exp(sum_k R_k z^k / k) through the derivative recurrence
/// m e_m = sum_{j=1..m} R_j e_{m-j}; returns e_0..e_K for K input values.
PowerSeriesQ zeta_series(const std::vector<RNumber>& rnumbers);

/// Proven bound on deg P + deg Q of the closed form: 2^(n+1).
unsigned degree_bound(const DiagZ2Group& g);

/// Certified integer-coefficient rational function P/Q with Q(0) = 1 and
/// gcd(P, Q) = 1. `certified` means the Taylor expansion was checked against
/// every series coefficient that was supplied to reconstruct().
struct RationalFn {
    PolyZ numerator;
    PolyZ denominator;
    bool certified = false;
    unsigned degree_bound_used = 0;
};

/// Padé step: the unique rational function with deg P, deg Q <= bound whose
/// expansion matches the series; solved as an exact rational linear system
/// with deterministic elimination, then reduced to lowest integer terms.
/// Needs at least 2*bound + 1 coefficients.
RationalFn reconstruct(const PowerSeriesQ& series, unsigned bound);

/// 1 / prod_i (1 - z^i)^(c_i), expanded exactly.
RationalFn second_factor(const BasisCombo& combo);

/// Taylor coefficients e_0 .. e_(terms-1) of f.
PowerSeriesQ expand(const RationalFn& f, std::size_t terms);

struct Radius {
    double value = 0.0;
    double error_bound = 1e-9;
    bool finite = true;  // false for a constant denominator (entire function)
};

/// Radius of convergence: smallest-modulus root of the reduced denominator.
/// For a series with nonnegative coefficients that root is real positive
/// (Pringsheim), so it is isolated with an exact Sturm chain and bisected to
/// half-width under 1e-9. Throws std::domain_error if the denominator has no
/// positive real root (the input was not such a series).
Radius radius(const RationalFn& f);

struct PipelineResult {
    RationalFn fn;
    Radius r;
    std::vector<mpz_class> rnumbers;  // R(phi^k), k = 1 .. 2B+11
    PowerSeriesQ series;              // e_0 .. e_(2B+11)
    BasisCombo second_combo;          // c_i of the holonomy factor; empty for k = 0
    bool second_factor_checked = false;  // divisibility diag, run when k = n
};

/// End to end: existence check, R(phi^k) for k <= 2B+11, series, certified
/// reconstruction at bound B, radius, and the second-factor cross-check.
PipelineResult full_pipeline(const ValidatedAut& aut, unsigned threads = 1);

}  // namespace rzeta
