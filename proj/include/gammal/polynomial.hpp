#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gammal/errors.hpp"

namespace gammal {

// Dense univariate polynomial over a field-like coefficient type K.
// K needs +, -, *, unary -, inverse(), is_zero(), ==. The zero polynomial is
// the empty coefficient vector, so no K default constructor is required.
template <class K>
struct Poly {
    std::vector<K> c; // c[i] multiplies x^i; c.back() nonzero after trim()

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial is -1 by convention
    long deg() const { return static_cast<long>(c.size()) - 1; }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }

    const K& lead() const { return c.back(); }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a.c == b.c); }
};

template <class K>
Poly<K> poly_add(const Poly<K>& a, const Poly<K>& b) {
    const auto& longer = a.c.size() >= b.c.size() ? a : b;
    const auto& shorter = a.c.size() >= b.c.size() ? b : a;
    std::vector<K> out = longer.c;
    for (std::size_t i = 0; i < shorter.c.size(); ++i) out[i] = out[i] + shorter.c[i];
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> poly_neg(const Poly<K>& a) {
    std::vector<K> out;
    out.reserve(a.c.size());
    for (const auto& x : a.c) out.push_back(-x);
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> poly_sub(const Poly<K>& a, const Poly<K>& b) {
    return poly_add(a, poly_neg(b));
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    std::vector<K> out;
    out.reserve(a.c.size() + b.c.size() - 1);
    for (std::size_t k = 0; k + 1 < a.c.size() + b.c.size(); ++k) {
        bool seeded = false;
        K acc = a.c[0]; // placeholder, overwritten before use
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (k < i || k - i >= b.c.size()) continue;
            K term = a.c[i] * b.c[k - i];
            acc = seeded ? acc + term : term;
            seeded = true;
        }
        out.push_back(acc);
    }
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> poly_scale(const Poly<K>& a, const K& s) {
    std::vector<K> out;
    out.reserve(a.c.size());
    for (const auto& x : a.c) out.push_back(x * s);
    return Poly<K>(std::move(out));
}

/// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
    if (b.is_zero()) fail(errc::division_by_zero, "polynomial division by zero");
    Poly<K> r = a;
    if (r.deg() < b.deg()) return {Poly<K>(), r};
    K lead_inv = b.lead().inverse();
    std::vector<K> q(static_cast<std::size_t>(r.deg() - b.deg()) + 1, b.lead()); // overwritten below
    for (long k = r.deg() - b.deg(); k >= 0; --k) {
        if (r.deg() == static_cast<long>(k) + b.deg()) {
            K f = r.lead() * lead_inv;
            q[static_cast<std::size_t>(k)] = f;
            // r -= f * x^k * b
            for (std::size_t i = 0; i < b.c.size(); ++i) {
                std::size_t pos = static_cast<std::size_t>(k) + i;
                r.c[pos] = r.c[pos] - f * b.c[i];
            }
            r.trim();
        } else {
            q[static_cast<std::size_t>(k)] = b.lead() - b.lead(); // zero of K
        }
    }
    return {Poly<K>(std::move(q)), std::move(r)};
}

template <class K>
Poly<K> poly_mod(const Poly<K>& a, const Poly<K>& b) {
    return poly_divmod(a, b).second;
}

template <class K>
Poly<K> poly_make_monic(const Poly<K>& a) {
    if (a.is_zero() || a.lead().is_one()) return a;
    return poly_scale(a, a.lead().inverse());
}

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
template <class K>
Poly<K> poly_gcd_monic(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(a);
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic (or zero).
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_ext_gcd(Poly<K> a, Poly<K> b) {
    Poly<K> s0, s1, t0, t1;
    if (!a.is_zero()) {
        K one = a.lead() * a.lead().inverse();
        s0 = Poly<K>({one});
        t1 = Poly<K>({one});
    } else if (!b.is_zero()) {
        K one = b.lead() * b.lead().inverse();
        s0 = Poly<K>({one});
        t1 = Poly<K>({one});
    } else {
        return {Poly<K>(), Poly<K>(), Poly<K>()};
    }
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
        Poly<K> s2 = poly_sub(s0, poly_mul(q, s1));
        Poly<K> t2 = poly_sub(t0, poly_mul(q, t1));
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.is_zero()) return {a, s0, t0};
    K inv = a.lead().inverse();
    return {poly_scale(a, inv), poly_scale(s0, inv), poly_scale(t0, inv)};
}

} // namespace gammal
