#pragma once

#include <array>
#include <string>

#include "gammal/scalar.hpp"

namespace gammal {

/// Automorphism of Q(zeta_m)(t) fixing every constant (hence all roots of
/// unity): t |-> (a*t + b)/(c*t + d) with ad - bc != 0, entries in Q(zeta_m).
/// Stored in projective canonical form (first nonzero of a,b,c,d scaled to 1),
/// which makes equality of automorphisms decidable by coefficient comparison.
class FieldAutomorphism {
public:
    FieldAutomorphism(CycloCtxPtr ctx, CycloNumber a, CycloNumber b, CycloNumber c, CycloNumber d);

    static FieldAutomorphism identity(const CycloCtxPtr& ctx);

    const CycloCtxPtr& context() const { return ctx_; }
    unsigned conductor() const { return ctx_->conductor(); }
    const CycloNumber& coeff(int i) const { return mob_[static_cast<std::size_t>(i)]; }

    bool is_identity() const;

    /// Substitute t |-> (at+b)/(ct+d); constants are fixed pointwise.
    Scalar operator()(const Scalar& x) const;

    unsigned order(unsigned cap) const;

    std::string key() const;
    std::string display() const; // "[a, b; c, d]" entries in z-notation

    friend bool operator==(const FieldAutomorphism& s, const FieldAutomorphism& t);
    friend bool operator!=(const FieldAutomorphism& s, const FieldAutomorphism& t) {
        return !(s == t);
    }

private:
    CycloCtxPtr ctx_;
    std::array<CycloNumber, 4> mob_; // a, b, c, d
};

/// Composition with apply(compose(s,t), x) == apply(s, apply(t, x)).
FieldAutomorphism compose(const FieldAutomorphism& s, const FieldAutomorphism& t);

} // namespace gammal
