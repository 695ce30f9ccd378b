#ifndef FOLEX_POLY_GCD_HPP
#define FOLEX_POLY_GCD_HPP

#include <vector>

#include "folex/polynomial.hpp"

namespace folex {

/// Multivariate gcd over a field via primitive pseudo-remainder sequences,
/// recursing on the variable of highest index in use. Results are
/// normalized to leading (graded-lex) coefficient 1. Fine at the scale of
/// foliation coefficients; not meant for large inputs.
namespace gcd_detail {

template <Field K>
int degree_wrt(const Polynomial<K>& p, int v) {
    int d = -1;
    for (const auto& [e, c] : p.terms()) d = std::max(d, e[v]);
    return d;
}

template <Field K>
Polynomial<K> coeff_wrt(const Polynomial<K>& p, int v, int k) {
    Polynomial<K> out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        Expo e2 = e;
        e2[v] = 0;
        out.add_term(e2, c);
    }
    return out;
}

template <Field K>
Polynomial<K> shift_wrt(const Polynomial<K>& p, int v, int k) {
    Polynomial<K> out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Expo e2 = e;
        e2[v] += k;
        out.add_term(e2, c);
    }
    return out;
}

/// Exact division; throws if the division is not exact.
template <Field K>
Polynomial<K> exact_divide(const Polynomial<K>& num, const Polynomial<K>& den) {
    if (den.is_zero()) throw domain_error("polynomial division by zero");
    Polynomial<K> rem = num;
    Polynomial<K> quot(num.nvars());
    const auto& [lde, ldc] = den.leading_term();
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading_term();
        Expo q(rem.nvars());
        for (int i = 0; i < rem.nvars(); ++i) {
            q[i] = re[i] - lde[i];
            if (q[i] < 0) throw domain_error("inexact polynomial division");
        }
        Polynomial<K> t = Polynomial<K>::monomial(rem.nvars(), q, rc / ldc);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

}  // namespace gcd_detail

template <Field K>
Polynomial<K> normalized_monic(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    const K lc = p.leading_term().second;
    return p * (K(1) / lc);
}

template <Field K>
Polynomial<K> poly_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    using namespace gcd_detail;
    if (a.is_zero()) return normalized_monic(b);
    if (b.is_zero()) return normalized_monic(a);
    if (a.degree() == 0 || b.degree() == 0) return Polynomial<K>::constant(a.nvars(), K(1));

    int v = -1;
    for (int i = a.nvars() - 1; i >= 0 && v < 0; --i) {
        if (degree_wrt(a, i) > 0 || degree_wrt(b, i) > 0) v = i;
    }
    if (v < 0) return Polynomial<K>::constant(a.nvars(), K(1));

    auto content = [&](const Polynomial<K>& p) {
        Polynomial<K> c(p.nvars());
        for (int k = 0; k <= degree_wrt(p, v); ++k) {
            Polynomial<K> ck = coeff_wrt(p, v, k);
            if (!ck.is_zero()) c = poly_gcd(c, ck);
            if (c.degree() == 0) break;
        }
        return c;
    };

    const Polynomial<K> ca = content(a), cb = content(b);
    Polynomial<K> f = exact_divide(a, ca);
    Polynomial<K> g = exact_divide(b, cb);

    // primitive Euclid in the main variable
    while (!g.is_zero()) {
        int df = degree_wrt(f, v), dg = degree_wrt(g, v);
        if (df < dg) { std::swap(f, g); std::swap(df, dg); }
        if (dg < 0) break;
        // one pseudo-reduction pass: lc(g)*f - lc(f)*x^(df-dg)*g
        Polynomial<K> r = f;
        while (!r.is_zero() && degree_wrt(r, v) >= dg) {
            const int dr = degree_wrt(r, v);
            const Polynomial<K> lg = coeff_wrt(g, v, dg);
            const Polynomial<K> lr = coeff_wrt(r, v, dr);
            r = r * lg - shift_wrt(g * lr, v, dr - dg);
        }
        f = g;
        if (r.is_zero()) {
            g = Polynomial<K>(a.nvars());
        } else {
            g = exact_divide(r, content(r));
        }
    }
    return normalized_monic(f * poly_gcd(ca, cb));
}

template <Field K>
Polynomial<K> poly_gcd(const std::vector<Polynomial<K>>& ps) {
    if (ps.empty()) throw domain_error("gcd of an empty list");
    Polynomial<K> g(ps.front().nvars());
    for (const auto& p : ps) {
        g = poly_gcd(g, p);
        if (g.degree() == 0) break;
    }
    return g;
}

/// True when gcd(p, all partial derivatives) is a nonzero constant.
template <Field K>
bool is_squarefree(const Polynomial<K>& p) {
    if (p.is_zero()) return false;
    if (p.degree() == 0) return true;
    Polynomial<K> g = p;
    for (int i = 0; i < p.nvars() && g.degree() != 0; ++i) {
        g = poly_gcd(g, p.derivative(i));
    }
    return g.degree() == 0;
}

}  // namespace folex

#endif
