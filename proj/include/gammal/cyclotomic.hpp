#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gammal/polynomial.hpp"
#include "gammal/rational.hpp"

namespace gammal {

/// The m-th cyclotomic polynomial over Q, computed by dividing x^m - 1 by
/// Phi_d for every proper divisor d | m. Memoized internally.
Poly<Rational> cyclotomic_polynomial(unsigned m);

unsigned euler_phi(unsigned m);

/// Shared immutable data for arithmetic in Q(zeta_m): the minimal polynomial
/// and a reduction table for x^k, phi(m) <= k <= 2*phi(m)-2.
class CycloContext {
public:
    static std::shared_ptr<const CycloContext> get(unsigned m);

    unsigned conductor() const { return m_; }
    unsigned degree() const { return phi_; }
    const Poly<Rational>& minimal_polynomial() const { return minpoly_; }
    // x^(degree + k) reduced mod Phi_m, 0 <= k <= degree - 2
    const std::vector<Rational>& power_reduction(unsigned k) const { return powers_[k]; }

private:
    explicit CycloContext(unsigned m);

    unsigned m_;
    unsigned phi_;
    Poly<Rational> minpoly_;
    std::vector<std::vector<Rational>> powers_;
};

using CycloCtxPtr = std::shared_ptr<const CycloContext>;

/// Element of Q(zeta_m), stored as the unique residue mod Phi_m in the power
/// basis 1, zeta, ..., zeta^(phi(m)-1). Equality is coefficient-wise.
class CycloNumber {
public:
    CycloNumber(CycloCtxPtr ctx, std::vector<Rational> coeffs);

    static CycloNumber zero(const CycloCtxPtr& ctx);
    static CycloNumber one(const CycloCtxPtr& ctx);
    static CycloNumber from_rational(const CycloCtxPtr& ctx, const Rational& r);
    /// zeta_m^k (k may be negative; taken mod m)
    static CycloNumber zeta_power(const CycloCtxPtr& ctx, long k);

    const CycloCtxPtr& context() const { return ctx_; }
    unsigned conductor() const { return ctx_->conductor(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const; // all coefficients above the constant term vanish
    const Rational& rational_part() const { return c_[0]; }

    CycloNumber operator-() const;
    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);
    friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

    /// Exact inverse via extended Euclid against Phi_m. Throws on zero.
    CycloNumber inverse() const;

    /// Canonical serialized form, stable across runs: "[m:a0,a1,...]".
    std::string key() const;

    /// Human-readable polynomial in z, valid scalar-expression syntax.
    std::string display() const;

private:
    CycloCtxPtr ctx_;
    std::vector<Rational> c_; // length phi(m) exactly
};

/// Explicit embedding Q(zeta_m) -> Q(zeta_m2) for m | m2 (zeta_m = zeta_m2^(m2/m)).
CycloNumber lift_conductor(const CycloNumber& x, unsigned m2);

void require_same_conductor(const CycloNumber& a, const CycloNumber& b);

} // namespace gammal
