#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rzeta/intmat.hpp"

namespace rzeta {

/// The crystallographic group Z^n extended by (0, J), where
/// J = -I_k (+) I_{n-k} and k = holonomy_rank. k = 0 is the plain torus
/// lattice; k = n has no torus factor.
struct DiagZ2Group {
    std::size_t n = 0;
    std::size_t holonomy_rank = 0;
};

/// Automorphism data: conjugation by the affine map (d/2, D) with d integral.
struct AffineAut {
    std::vector<mpz_class> d;
    MatZ D;
};

/// A positive integer or infinity.
class RNumber {
public:
    static RNumber infinite() { return RNumber(); }
    explicit RNumber(mpz_class v) : finite_(true), value_(std::move(v)) {
        if (value_ < 1) throw std::invalid_argument("RNumber: finite values are >= 1");
    }

    bool is_finite() const { return finite_; }
    const mpz_class& value() const {
        if (!finite_) throw std::logic_error("RNumber: infinite");
        return value_;
    }
    bool operator==(const RNumber& o) const = default;

    std::string str() const { return finite_ ? value_.get_str() : "inf"; }

private:
    RNumber() = default;
    bool finite_ = false;
    mpz_class value_ = 0;
};

enum class ValidationFault { BAD_SHAPE, NON_UNIMODULAR, BLOCK_MIXING };

class validation_error : public std::runtime_error {
public:
    validation_error(ValidationFault fault, const std::string& what)
        : std::runtime_error(what), fault_(fault) {}
    ValidationFault fault() const { return fault_; }

private:
    ValidationFault fault_;
};

/// Validated automorphism with the characteristic block data split out.
/// When 0 < k < n, D must be block diagonal diag(D1, D2); phi1 = (d1, D1)
/// acts on the holonomy factor, phi2 = D2 on the central torus factor.
class ValidatedAut {
public:
    const DiagZ2Group& group() const { return g_; }
    const MatZ& D() const { return aut_.D; }
    const std::vector<mpz_class>& d() const { return aut_.d; }

    const MatZ& D1() const { return d1_; }              // k x k
    const MatZ& D2() const { return d2_; }              // (n-k) x (n-k)
    const std::vector<mpz_class>& d1() const { return dvec1_; }

    const MatF2& D1_mod2() const { return d1bar_; }
    const VecF2& d1_mod2() const { return dvec1bar_; }

private:
    friend ValidatedAut validate(const DiagZ2Group&, const AffineAut&);
    DiagZ2Group g_;
    AffineAut aut_;
    MatZ d1_, d2_;
    std::vector<mpz_class> dvec1_;
    MatF2 d1bar_;
    VecF2 dvec1bar_;
};

/// Accepts iff det D = +-1 and, for 0 < k < n, the off-diagonal blocks of D
/// vanish (both factors are characteristic, so automorphisms split).
ValidatedAut validate(const DiagZ2Group& g, const AffineAut& aut);

/// Finiteness of R(phi^m): no A in {I, J} with det(I - A D^m) = 0.
bool is_finite(const ValidatedAut& aut, std::uint64_t m);

/// R(phi^m). The holonomy factor contributes
///   (|det(I - D1^m)| + |det(I + D1^m)|)/2 + count_solutions over Z_2,
/// the torus factor |det(I - D2^m)|; k = 1 groups are R-infinity, so every
/// power reports infinite (this already falls out of the determinant test).
RNumber reidemeister_number(const ValidatedAut& aut, std::uint64_t m);

/// All of R(phi^1..kmax); powers are independent, so optionally spread over
/// a small worker pool.
std::vector<RNumber> reidemeister_sequence(const ValidatedAut& aut, std::uint64_t kmax,
                                           unsigned threads = 1);

struct ZetaExistence {
    bool exists = false;
    /// "" when exists; "R-infinity" for k = 1; otherwise "Phi_m" with the
    /// smallest cyclotomic divisor of charpoly(D).
    std::string reason;
    unsigned cyclotomic_index = 0;  // m of Phi_m when that is the obstruction
};

/// R(phi^m) finite for every m iff k != 1 and no eigenvalue of D is a root
/// of unity.
ZetaExistence zeta_exists(const ValidatedAut& aut);

}  // namespace rzeta
