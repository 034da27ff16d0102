#include "gammal/ratfunc.hpp"

#include <sstream>

namespace gammal {

RationalFunction::RationalFunction(CycloCtxPtr ctx, Poly<CycloNumber> num, Poly<CycloNumber> den)
    : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(errc::division_by_zero, "rational function with zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly<CycloNumber>({CycloNumber::one(ctx_)});
        return;
    }
    Poly<CycloNumber> g = poly_gcd_monic(num_, den_);
    if (g.deg() > 0) {
        num_ = poly_divmod(num_, g).first;
        den_ = poly_divmod(den_, g).first;
    }
    if (!den_.lead().is_one()) {
        CycloNumber inv = den_.lead().inverse();
        num_ = poly_scale(num_, inv);
        den_ = poly_scale(den_, inv);
    }
}

RationalFunction RationalFunction::from_cyclo(const CycloNumber& c) {
    auto ctx = c.context();
    Poly<CycloNumber> num = c.is_zero() ? Poly<CycloNumber>() : Poly<CycloNumber>({c});
    return RationalFunction(ctx, std::move(num), Poly<CycloNumber>({CycloNumber::one(ctx)}));
}

RationalFunction RationalFunction::variable(const CycloCtxPtr& ctx) {
    Poly<CycloNumber> num({CycloNumber::zero(ctx), CycloNumber::one(ctx)});
    return RationalFunction(ctx, std::move(num), Poly<CycloNumber>({CycloNumber::one(ctx)}));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = poly_neg(out.num_);
    return out;
}

namespace {
void require_same_ctx(const RationalFunction& a, const RationalFunction& b) {
    if (a.conductor() != b.conductor())
        fail(errc::conductor_mismatch, "rational functions over different conductors");
}
} // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    require_same_ctx(a, b);
    Poly<CycloNumber> num =
        poly_add(poly_mul(a.num_, b.den_), poly_mul(b.num_, a.den_));
    return RationalFunction(a.ctx_, std::move(num), poly_mul(a.den_, b.den_));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    require_same_ctx(a, b);
    return RationalFunction(a.ctx_, poly_mul(a.num_, b.num_), poly_mul(a.den_, b.den_));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.conductor() == b.conductor() && a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of the zero rational function");
    return RationalFunction(ctx_, den_, num_);
}

std::string RationalFunction::key() const {
    std::ostringstream os;
    os << "R{";
    for (const auto& c : num_.c) os << c.key();
    os << "}{";
    for (const auto& c : den_.c) os << c.key();
    os << '}';
    return os.str();
}

std::string poly_in_t_display(const Poly<CycloNumber>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        const CycloNumber& c = p.c[i];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        bool is_unit = c.is_one();
        if (i == 0) {
            bool bare = c.is_rational() && c.rational_part().sign() >= 0;
            os << (bare ? c.display() : "(" + c.display() + ")");
        } else {
            if (!is_unit) {
                // bare only for nonnegative integers; anything else gets parens
                if (c.is_rational() && c.rational_part().den() == 1 &&
                    c.rational_part().sign() >= 0)
                    os << c.display() << '*';
                else
                    os << '(' << c.display() << ")*";
            }
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

std::string RationalFunction::display() const {
    std::string n = poly_in_t_display(num_);
    if (den_.deg() == 0 && den_.lead().is_one()) return n;
    return "(" + n + ")/(" + poly_in_t_display(den_) + ")";
}

} // namespace gammal
