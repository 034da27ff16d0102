#include "gammal/automorphism.hpp"

#include <sstream>

namespace gammal {

FieldAutomorphism::FieldAutomorphism(CycloCtxPtr ctx, CycloNumber a, CycloNumber b, CycloNumber c,
                                     CycloNumber d)
    : ctx_(std::move(ctx)), mob_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    for (const auto& e : mob_)
        if (e.conductor() != ctx_->conductor())
            fail(errc::conductor_mismatch, "Moebius entry conductor differs from context");
    CycloNumber det = mob_[0] * mob_[3] - mob_[1] * mob_[2];
    if (det.is_zero()) fail(errc::validation_error, "Moebius matrix is singular (ad - bc = 0)");
    // projective canonical form: scale so the first nonzero entry is 1
    for (auto& e : mob_) {
        if (e.is_zero()) continue;
        if (!e.is_one()) {
            CycloNumber inv = e.inverse();
            for (auto& f : mob_) f = f * inv;
        }
        break;
    }
}

FieldAutomorphism FieldAutomorphism::identity(const CycloCtxPtr& ctx) {
    return FieldAutomorphism(ctx, CycloNumber::one(ctx), CycloNumber::zero(ctx),
                             CycloNumber::zero(ctx), CycloNumber::one(ctx));
}

bool FieldAutomorphism::is_identity() const {
    return mob_[0].is_one() && mob_[1].is_zero() && mob_[2].is_zero() && mob_[3].is_one();
}

bool operator==(const FieldAutomorphism& s, const FieldAutomorphism& t) {
    return s.conductor() == t.conductor() && s.mob_ == t.mob_;
}

Scalar FieldAutomorphism::operator()(const Scalar& x) const {
    if (x.conductor() != conductor())
        fail(errc::conductor_mismatch, "automorphism applied across conductors");
    if (x.is_constant() || is_identity()) return x;

    const RationalFunction& f = x.function();
    const long dp = f.num().deg();
    const long dq = f.den().deg();
    const long d = dp > dq ? dp : dq;

    // homogenize: P(t)/Q(t) at t = (at+b)/(ct+d) equals
    //   sum_i p_i (at+b)^i (ct+d)^(D-i)  /  sum_j q_j (at+b)^j (ct+d)^(D-j)
    Poly<CycloNumber> lin_num({mob_[1], mob_[0]}); // a*t + b as poly (b + a t)
    Poly<CycloNumber> lin_den({mob_[3], mob_[2]}); // c*t + d

    std::vector<Poly<CycloNumber>> pow_num, pow_den;
    Poly<CycloNumber> one({CycloNumber::one(ctx_)});
    pow_num.push_back(one);
    pow_den.push_back(one);
    for (long i = 1; i <= d; ++i) {
        pow_num.push_back(poly_mul(pow_num.back(), lin_num));
        pow_den.push_back(poly_mul(pow_den.back(), lin_den));
    }

    auto substitute = [&](const Poly<CycloNumber>& p) {
        Poly<CycloNumber> acc;
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            if (p.c[i].is_zero()) continue;
            Poly<CycloNumber> term =
                poly_mul(pow_num[i], pow_den[static_cast<std::size_t>(d) - i]);
            acc = poly_add(acc, poly_scale(term, p.c[i]));
        }
        return acc;
    };

    return Scalar(RationalFunction(ctx_, substitute(f.num()), substitute(f.den())));
}

FieldAutomorphism compose(const FieldAutomorphism& s, const FieldAutomorphism& t) {
    if (s.conductor() != t.conductor())
        fail(errc::conductor_mismatch, "composing automorphisms across conductors");
    // apply(compose(s,t), x) = apply(s, apply(t, x)) forces the matrix product M_t * M_s
    const CycloNumber &a1 = t.coeff(0), &b1 = t.coeff(1), &c1 = t.coeff(2), &d1 = t.coeff(3);
    const CycloNumber &a2 = s.coeff(0), &b2 = s.coeff(1), &c2 = s.coeff(2), &d2 = s.coeff(3);
    return FieldAutomorphism(s.context(), a1 * a2 + b1 * c2, a1 * b2 + b1 * d2,
                             c1 * a2 + d1 * c2, c1 * b2 + d1 * d2);
}

unsigned FieldAutomorphism::order(unsigned cap) const {
    if (cap < 1) fail(errc::validation_error, "order cap must be >= 1");
    FieldAutomorphism acc = *this;
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc.is_identity()) return k;
        acc = compose(acc, *this);
    }
    fail(errc::order_exceeds_cap,
         "automorphism order exceeds cap " + std::to_string(cap));
}

std::string FieldAutomorphism::key() const {
    return "G" + mob_[0].key() + mob_[1].key() + mob_[2].key() + mob_[3].key();
}

std::string FieldAutomorphism::display() const {
    std::ostringstream os;
    os << '[' << mob_[0].display() << ", " << mob_[1].display() << "; " << mob_[2].display()
       << ", " << mob_[3].display() << ']';
    return os.str();
}

} // namespace gammal
