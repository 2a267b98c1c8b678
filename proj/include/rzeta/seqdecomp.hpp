#pragma once

#include <cstdint>
#include <map>

#include "rzeta/f2.hpp"

namespace rzeta {

/// Per-power solution counts v_k of (I - D^k)x = [sum D^i] d over the
/// two-element field, together with the new-solution counts w_k.
/// Index 0 holds k = 1.
struct SeqTables {
    std::vector<std::uint64_t> v;
    std::vector<std::uint64_t> w;
};

/// Finite nonnegative combination sum_i c_i a^i of the basis sequences
/// a^i_k = i if i | k else 0. Totality: sum_i i*c_i = 2^ambient_dim.
class BasisCombo {
public:
    BasisCombo() = default;
    BasisCombo(std::map<std::uint64_t, std::uint64_t> coeffs, std::size_t ambient_dim);

    const std::map<std::uint64_t, std::uint64_t>& coeffs() const { return c_; }
    std::size_t ambient_dim() const { return ambient_; }

    /// sum over i | k of i*c_i.
    std::uint64_t eval(std::uint64_t k) const;
    /// sum of i*c_i over the whole support.
    std::uint64_t total() const;

    bool operator==(const BasisCombo& o) const = default;

private:
    std::map<std::uint64_t, std::uint64_t> c_;  // i -> c_i, zeros not stored
    std::size_t ambient_ = 0;
};

/// v_k = count_solutions(I - dbar^k, [sum_{i<k} dbar^i] dvec) for k = 1..horizon;
/// w recovered through V_k = disjoint union of W_d over d | k.
SeqTables solution_sequence(const MatF2& dbar, const VecF2& dvec, std::size_t horizon);

/// Primary path: the solution sets V_k are the fixed points of the k-th
/// iterate of the affine permutation x -> dbar x + dvec, so the c_i are its
/// cycle counts; computed by direct orbit traversal of all 2^n states.
BasisCombo decompose(const MatF2& dbar, const VecF2& dvec);

/// Independent path following the block-split construction: split off the
/// unipotent block, analyse the two blocks separately (powers of two for the
/// unipotent one, divisors of the multiplicative order for the other), then
/// combine. Must agree with decompose(); tests and `verify` enforce that.
BasisCombo decompose_via_split(const MatF2& dbar, const VecF2& dvec);

/// Componentwise product: eval(result, k) = eval(a, k) * eval(b, k), via
/// a^i * a^j = gcd(i,j) a^lcm(i,j). Ambient dimensions add.
BasisCombo combine(const BasisCombo& a, const BasisCombo& b);

}  // namespace rzeta
