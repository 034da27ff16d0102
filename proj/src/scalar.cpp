#include "gammal/scalar.hpp"

namespace gammal {

void Scalar::collapse() {
    if (is_constant()) return;
    const RationalFunction& f = function();
    if (!f.is_constant()) return;
    CycloNumber c = f.is_zero() ? CycloNumber::zero(f.context()) : f.num().c[0];
    v_ = std::move(c);
}

Scalar Scalar::operator-() const {
    if (is_constant()) return Scalar(-constant());
    return Scalar(-function());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_constant() && b.is_constant()) return Scalar(a.constant() + b.constant());
    return Scalar(a.as_function() + b.as_function());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_constant() && b.is_constant()) return Scalar(a.constant() - b.constant());
    return Scalar(a.as_function() - b.as_function());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_constant() && b.is_constant()) return Scalar(a.constant() * b.constant());
    return Scalar(a.as_function() * b.as_function());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_constant() != b.is_constant()) return false;
    if (a.is_constant()) return a.constant() == b.constant();
    return a.function() == b.function();
}

Scalar Scalar::inverse() const {
    if (is_constant()) return Scalar(constant().inverse());
    return Scalar(function().inverse());
}

std::string Scalar::key() const {
    return is_constant() ? constant().key() : function().key();
}

std::string Scalar::display() const {
    return is_constant() ? constant().display() : function().display();
}

Scalar lift_conductor(const Scalar& x, unsigned m2) {
    if (x.is_constant()) return Scalar(lift_conductor(x.constant(), m2));
    const RationalFunction& f = x.function();
    auto lift_poly = [&](const Poly<CycloNumber>& p) {
        std::vector<CycloNumber> out;
        out.reserve(p.c.size());
        for (const auto& c : p.c) out.push_back(lift_conductor(c, m2));
        return Poly<CycloNumber>(std::move(out));
    };
    return Scalar(RationalFunction(CycloContext::get(m2), lift_poly(f.num()), lift_poly(f.den())));
}

} // namespace gammal
