#pragma once

#include <string>

#include "gammal/cyclotomic.hpp"
#include "gammal/polynomial.hpp"

namespace gammal {

/// Element of Q(zeta_m)(t) in normal form: denominator monic and nonzero,
/// gcd(numerator, denominator) = 1 over Q(zeta_m)[t]. Uniqueness of the normal
/// form makes equality coefficient-wise.
class RationalFunction {
public:
    RationalFunction(CycloCtxPtr ctx, Poly<CycloNumber> num, Poly<CycloNumber> den);

    static RationalFunction from_cyclo(const CycloNumber& c);
    static RationalFunction variable(const CycloCtxPtr& ctx); // the transcendental t

    const CycloCtxPtr& context() const { return ctx_; }
    unsigned conductor() const { return ctx_->conductor(); }
    const Poly<CycloNumber>& num() const { return num_; }
    const Poly<CycloNumber>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction inverse() const;

    std::string key() const;
    std::string display() const;

private:
    void normalize();

    CycloCtxPtr ctx_;
    Poly<CycloNumber> num_;
    Poly<CycloNumber> den_;
};

std::string poly_in_t_display(const Poly<CycloNumber>& p);

} // namespace gammal
