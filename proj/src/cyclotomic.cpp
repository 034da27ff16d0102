#include "gammal/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace gammal {

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, Poly<Rational>> g_phi_cache;

Poly<Rational> x_pow_minus_one(unsigned m) {
    std::vector<Rational> c(m + 1, Rational(0));
    c[0] = Rational(-1);
    c[m] = Rational(1);
    return Poly<Rational>(std::move(c));
}

Poly<Rational> cyclotomic_locked(unsigned m) {
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
    Poly<Rational> result = x_pow_minus_one(m);
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = poly_divmod(result, cyclotomic_locked(d));
        // x^m - 1 is divisible by every Phi_d with d | m
        if (!r.is_zero()) fail(errc::certification_failure, "cyclotomic division left a remainder");
        result = std::move(q);
    }
    g_phi_cache.emplace(m, result);
    return result;
}

std::mutex g_ctx_mutex;
std::map<unsigned, std::shared_ptr<const CycloContext>> g_ctx_cache;

} // namespace

Poly<Rational> cyclotomic_polynomial(unsigned m) {
    if (m < 1) fail(errc::validation_error, "conductor must be >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_locked(m);
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    unsigned n = m;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CycloContext::CycloContext(unsigned m) : m_(m) {
    minpoly_ = cyclotomic_polynomial(m);
    phi_ = static_cast<unsigned>(minpoly_.deg());
    // x^(phi + k) mod Phi, built incrementally: multiply the previous row by x.
    // Base: x^phi = -(lower terms of Phi) since Phi is monic.
    if (phi_ >= 1) {
        std::vector<Rational> row(phi_, Rational(0));
        for (unsigned i = 0; i < phi_; ++i) row[i] = -minpoly_.c[i];
        for (unsigned k = 0; k + 1 < phi_; ++k) {
            powers_.push_back(row);
            // row <- x*row mod Phi
            Rational top = row[phi_ - 1];
            for (unsigned i = phi_ - 1; i > 0; --i) row[i] = row[i - 1];
            row[0] = Rational(0);
            if (!top.is_zero())
                for (unsigned i = 0; i < phi_; ++i) row[i] += top * (-minpoly_.c[i]);
        }
        powers_.push_back(row);
    }
}

std::shared_ptr<const CycloContext> CycloContext::get(unsigned m) {
    if (m < 1) fail(errc::validation_error, "conductor must be >= 1");
    std::lock_guard<std::mutex> lock(g_ctx_mutex);
    auto it = g_ctx_cache.find(m);
    if (it != g_ctx_cache.end()) return it->second;
    auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(m));
    g_ctx_cache.emplace(m, ctx);
    return ctx;
}

CycloNumber::CycloNumber(CycloCtxPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (c_.size() != ctx_->degree())
        fail(errc::validation_error, "cyclotomic coefficient vector has wrong length");
}

CycloNumber CycloNumber::zero(const CycloCtxPtr& ctx) {
    return CycloNumber(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

CycloNumber CycloNumber::one(const CycloCtxPtr& ctx) {
    return from_rational(ctx, Rational(1));
}

CycloNumber CycloNumber::from_rational(const CycloCtxPtr& ctx, const Rational& r) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[0] = r;
    return CycloNumber(ctx, std::move(c));
}

CycloNumber CycloNumber::zeta_power(const CycloCtxPtr& ctx, long k) {
    const long m = static_cast<long>(ctx->conductor());
    k %= m;
    if (k < 0) k += m;
    const unsigned phi = ctx->degree();
    if (static_cast<unsigned>(k) < phi) {
        std::vector<Rational> c(phi, Rational(0));
        c[static_cast<std::size_t>(k)] = Rational(1);
        return CycloNumber(ctx, std::move(c));
    }
    // reduce x^k step by step from the highest tabulated power
    CycloNumber acc(ctx, ctx->power_reduction(0)); // x^phi
    for (long i = phi; i < k; ++i) {
        // multiply by x
        std::vector<Rational> next(phi, Rational(0));
        Rational top = acc.c_[phi - 1];
        for (unsigned j = phi - 1; j > 0; --j) next[j] = acc.c_[j - 1];
        if (!top.is_zero()) {
            const auto& red = ctx->power_reduction(0);
            for (unsigned j = 0; j < phi; ++j) next[j] += top * red[j];
        }
        acc = CycloNumber(ctx, std::move(next));
    }
    return acc;
}

bool CycloNumber::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool CycloNumber::is_one() const {
    if (!c_[0].is_one()) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool CycloNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

CycloNumber CycloNumber::operator-() const {
    std::vector<Rational> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(-x);
    return CycloNumber(ctx_, std::move(out));
}

void require_same_conductor(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() != b.conductor())
        fail(errc::conductor_mismatch,
             "conductors " + std::to_string(a.conductor()) + " and " +
                 std::to_string(b.conductor()) + " cannot mix; lift explicitly");
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    require_same_conductor(a, b);
    std::vector<Rational> out = a.c_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.c_[i];
    return CycloNumber(a.ctx_, std::move(out));
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    require_same_conductor(a, b);
    std::vector<Rational> out = a.c_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.c_[i];
    return CycloNumber(a.ctx_, std::move(out));
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    require_same_conductor(a, b);
    const unsigned phi = a.ctx_->degree();
    // schoolbook product, then fold powers >= phi through the reduction table
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + phi);
    for (unsigned k = phi; k < 2 * phi - 1; ++k) {
        if (prod[k].is_zero()) continue;
        const auto& red = a.ctx_->power_reduction(k - phi);
        for (unsigned j = 0; j < phi; ++j) out[j] += prod[k] * red[j];
    }
    return CycloNumber(a.ctx_, std::move(out));
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.conductor() == b.conductor() && a.c_ == b.c_;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero in Q(zeta_m)");
    Poly<Rational> f(c_);
    auto [g, s, t] = poly_ext_gcd(f, ctx_->minimal_polynomial());
    (void)t;
    // Phi_m is irreducible over Q, so gcd(f, Phi_m) = 1 for nonzero f
    if (g.deg() != 0) fail(errc::certification_failure, "cyclotomic inverse: gcd not constant");
    Poly<Rational> inv = poly_scale(s, g.c[0].inverse());
    inv = poly_mod(inv, ctx_->minimal_polynomial());
    std::vector<Rational> out(ctx_->degree(), Rational(0));
    for (std::size_t i = 0; i < inv.c.size(); ++i) out[i] = inv.c[i];
    return CycloNumber(ctx_, std::move(out));
}

std::string CycloNumber::key() const {
    std::ostringstream os;
    os << '[' << ctx_->conductor() << ':';
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i].str();
    }
    os << ']';
    return os.str();
}

std::string CycloNumber::display() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& r = c_[i];
        if (r.is_zero()) continue;
        Rational mag = r.sign() < 0 ? -r : r;
        if (first) {
            if (r.sign() < 0) os << '-';
            first = false;
        } else {
            os << (r.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) return "0";
    return os.str();
}

CycloNumber lift_conductor(const CycloNumber& x, unsigned m2) {
    unsigned m = x.conductor();
    if (m2 % m != 0)
        fail(errc::conductor_mismatch, "lift target conductor must be a multiple of the source");
    auto ctx2 = CycloContext::get(m2);
    const unsigned step = m2 / m;
    CycloNumber acc = CycloNumber::zero(ctx2);
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (x.coeffs()[i].is_zero()) continue;
        CycloNumber term = CycloNumber::zeta_power(ctx2, static_cast<long>(i * step));
        acc = acc + CycloNumber::from_rational(ctx2, x.coeffs()[i]) * term;
    }
    return acc;
}

} // namespace gammal
