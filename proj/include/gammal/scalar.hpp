#pragma once

#include <string>
#include <variant>

#include "gammal/ratfunc.hpp"

namespace gammal {

/// Ground-field element: either a cyclotomic constant in Q(zeta_m) or a
/// rational function in Q(zeta_m)(t). A constant-valued rational function is
/// collapsed back to the cyclotomic form after every operation, so each value
/// has exactly one representation and equality stays structural.
class Scalar {
public:
    /* implicit */ Scalar(CycloNumber c) : v_(std::move(c)) {}
    /* implicit */ Scalar(RationalFunction f) : v_(std::move(f)) { collapse(); }

    static Scalar zero(const CycloCtxPtr& ctx) { return Scalar(CycloNumber::zero(ctx)); }
    static Scalar one(const CycloCtxPtr& ctx) { return Scalar(CycloNumber::one(ctx)); }
    static Scalar from_rational(const CycloCtxPtr& ctx, const Rational& r) {
        return Scalar(CycloNumber::from_rational(ctx, r));
    }
    static Scalar zeta_power(const CycloCtxPtr& ctx, long k) {
        return Scalar(CycloNumber::zeta_power(ctx, k));
    }
    static Scalar variable(const CycloCtxPtr& ctx) {
        return Scalar(RationalFunction::variable(ctx));
    }

    bool is_constant() const { return std::holds_alternative<CycloNumber>(v_); }
    const CycloNumber& constant() const { return std::get<CycloNumber>(v_); }
    const RationalFunction& function() const { return std::get<RationalFunction>(v_); }
    RationalFunction as_function() const {
        return is_constant() ? RationalFunction::from_cyclo(constant()) : function();
    }

    CycloCtxPtr context() const {
        return is_constant() ? constant().context() : function().context();
    }
    unsigned conductor() const {
        return is_constant() ? constant().conductor() : function().conductor();
    }

    bool is_zero() const { return is_constant() ? constant().is_zero() : function().is_zero(); }
    bool is_one() const { return is_constant() && constant().is_one(); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;

    std::string key() const;
    std::string display() const;

private:
    void collapse();

    std::variant<CycloNumber, RationalFunction> v_;
};

Scalar lift_conductor(const Scalar& x, unsigned m2);

} // namespace gammal
