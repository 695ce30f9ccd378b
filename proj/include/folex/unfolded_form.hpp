#ifndef FOLEX_UNFOLDED_FORM_HPP
#define FOLEX_UNFOLDED_FORM_HPP

#include <vector>

#include "folex/pform.hpp"

namespace folex {

/// Element of K[x_1..x_m][t]/(t^(order+1)) with polynomial coefficients.
template <Field K>
struct TruncatedPoly {
    int nvars = 0;
    int order = 0;
    std::vector<Polynomial<K>> c;  // c[k] multiplies t^k, size order+1

    TruncatedPoly() = default;
    TruncatedPoly(int nvars, int order)
        : nvars(nvars), order(order), c(order + 1, Polynomial<K>(nvars)) {}

    static TruncatedPoly one(int nvars, int order) {
        TruncatedPoly u(nvars, order);
        u.c[0] = Polynomial<K>::constant(nvars, K(1));
        return u;
    }

    static TruncatedPoly embed(const Polynomial<K>& p, int order) {
        TruncatedPoly u(p.nvars(), order);
        u.c[0] = p;
        return u;
    }

    bool is_zero() const {
        for (const auto& p : c) {
            if (!p.is_zero()) return false;
        }
        return true;
    }

    TruncatedPoly operator+(const TruncatedPoly& o) const {
        require_match(o);
        TruncatedPoly out = *this;
        for (int k = 0; k <= order; ++k) out.c[k] += o.c[k];
        return out;
    }

    TruncatedPoly operator*(const TruncatedPoly& o) const {
        require_match(o);
        TruncatedPoly out(nvars, order);
        for (int i = 0; i <= order; ++i) {
            if (c[i].is_zero()) continue;
            for (int j = 0; i + j <= order; ++j) {
                if (o.c[j].is_zero()) continue;
                out.c[i + j] += c[i] * o.c[j];
            }
        }
        return out;
    }

    TruncatedPoly operator*(const Polynomial<K>& p) const {
        TruncatedPoly out(nvars, order);
        for (int k = 0; k <= order; ++k) out.c[k] = c[k] * p;
        return out;
    }

    /// Multiplication by t^k (truncating overflow).
    TruncatedPoly shifted(int k) const {
        TruncatedPoly out(nvars, order);
        for (int i = 0; i + k <= order; ++i) out.c[i + k] = c[i];
        return out;
    }

    /// Inverse of a unit; the t^0 coefficient must be a nonzero constant.
    TruncatedPoly inverse() const {
        if (c[0].degree() != 0) throw domain_error("truncated inverse needs a unit constant term");
        const K a0 = c[0].leading_term().second;
        TruncatedPoly inv(nvars, order);
        inv.c[0] = Polynomial<K>::constant(nvars, K(1) / a0);
        for (int k = 1; k <= order; ++k) {
            Polynomial<K> acc(nvars);
            for (int i = 1; i <= k; ++i) acc += c[i] * inv.c[k - i];
            inv.c[k] = acc * (-(K(1) / a0));
        }
        return inv;
    }

private:
    void require_match(const TruncatedPoly& o) const {
        if (nvars != o.nvars || order != o.order) throw shape_error("truncated ring mismatch");
    }
};

/// Evaluation of a polynomial at truncated-ring arguments.
template <Field K>
TruncatedPoly<K> substitute_truncated(const Polynomial<K>& p, const std::vector<TruncatedPoly<K>>& images) {
    if (static_cast<int>(images.size()) != p.nvars()) throw shape_error("substitution arity mismatch");
    const int nv = images.empty() ? 0 : images[0].nvars;
    const int order = images.empty() ? 0 : images[0].order;
    std::vector<std::vector<TruncatedPoly<K>>> powers(p.nvars());
    auto power_of = [&](int var, int e) -> const TruncatedPoly<K>& {
        auto& tab = powers[var];
        if (tab.empty()) tab.push_back(TruncatedPoly<K>::one(nv, order));
        while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[var]);
        return tab[e];
    };
    TruncatedPoly<K> out(nv, order);
    for (const auto& [e, coeff] : p.terms()) {
        TruncatedPoly<K> t = TruncatedPoly<K>::one(nv, order) * Polynomial<K>::constant(nv, coeff);
        for (int i = 0; i < p.nvars(); ++i) {
            if (e[i] > 0) t = t * power_of(i, e[i]);
        }
        out = out + t;
    }
    return out;
}

/// A 1-form over the truncated ring K[x][t]/(t^(n+1)):
///
///   sum_{k=0..n} t^k eta_k  +  (sum_{k=1..n} h_k t^(k-1)) dt,
///
/// with eta_0 the base form. The dt coefficient stores h_k against
/// t^(k-1) dt directly; data presented as h against d(t^k) = k t^(k-1) dt
/// must absorb the factor k on the way in. Relations: t^(n+1) = 0 and
/// t^n dt = 0.
template <Field K>
class UnfoldedForm {
public:
    UnfoldedForm() : nvars_(0), order_(0) {}

    UnfoldedForm(const PForm<K>& base, int order)
        : nvars_(base.nvars()),
          order_(order),
          eta_(order + 1, PForm<K>::zero(base.nvars(), 1)),
          dt_(order, Polynomial<K>(base.nvars())) {
        if (base.form_degree() != 1) throw shape_error("unfolded base must be a 1-form");
        if (order < 0) throw domain_error("negative truncation order");
        eta_[0] = base;
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }

    const PForm<K>& base() const { return eta_[0]; }
    const PForm<K>& layer_form(int k) const { return eta_.at(k); }
    const Polynomial<K>& layer_dt(int k) const {
        if (k < 1 || k > order_) throw domain_error("dt layer index out of range");
        return dt_[k - 1];
    }

    void set_layer(int k, const PForm<K>& eta, const Polynomial<K>& h) {
        if (k < 1 || k > order_) throw domain_error("layer index out of range");
        if (eta.nvars() != nvars_ || eta.form_degree() != 1) throw shape_error("layer form shape mismatch");
        if (h.nvars() != nvars_) throw shape_error("layer dt coefficient in wrong ring");
        eta_[k] = eta;
        dt_[k - 1] = h;
    }

    void add_to_layer(int k, const PForm<K>& eta, const Polynomial<K>& h) {
        if (k < 1 || k > order_) throw domain_error("layer index out of range");
        eta_[k] += eta;
        dt_[k - 1] += h;
    }

    bool layer_is_zero(int k) const {
        return eta_.at(k).is_zero() && (k == 0 || dt_[k - 1].is_zero());
    }

    UnfoldedForm truncated(int k) const {
        if (k < 0 || k > order_) throw domain_error("truncation order out of range");
        UnfoldedForm out(eta_[0], k);
        for (int i = 1; i <= k; ++i) out.set_layer(i, eta_[i], dt_[i - 1]);
        return out;
    }

    UnfoldedForm extended_order(int k) const {
        if (k < order_) throw domain_error("extended order below current");
        UnfoldedForm out(eta_[0], k);
        for (int i = 1; i <= order_; ++i) out.set_layer(i, eta_[i], dt_[i - 1]);
        return out;
    }

    bool operator==(const UnfoldedForm& o) const {
        return nvars_ == o.nvars_ && order_ == o.order_ && eta_ == o.eta_ && dt_ == o.dt_;
    }

    struct WedgeLayers {
        std::vector<PForm<K>> three;   // coefficient of t^s, s = 0..n
        std::vector<PForm<K>> two_dt;  // coefficient of t^s dt, s = 0..n-1

        bool all_zero() const {
            for (const auto& f : three) {
                if (!f.is_zero()) return false;
            }
            for (const auto& f : two_dt) {
                if (!f.is_zero()) return false;
            }
            return true;
        }
    };

    /// Layers of w ^ dw over the truncated ring. Writing the form as
    /// B(t) + H(t) dt, the expansion is
    ///   B ^ dB  +  [ B ^ (dH - B') + H dB ] ^ dt
    /// with all t-powers beyond the relations discarded.
    WedgeLayers wedge_d_layers() const {
        WedgeLayers out;
        std::vector<PForm<K>> d_eta;
        d_eta.reserve(order_ + 1);
        for (int k = 0; k <= order_; ++k) d_eta.push_back(exterior_derivative(eta_[k]));

        // in ambient dimension < 3 every 3-form vanishes identically
        const int three_deg = std::min(3, nvars_);
        out.three.assign(order_ + 1, PForm<K>::zero(nvars_, three_deg));
        if (nvars_ >= 3) {
            for (int s = 0; s <= order_; ++s) {
                PForm<K> acc = PForm<K>::zero(nvars_, 3);
                for (int i = 0; i <= s; ++i) {
                    const int j = s - i;
                    if (eta_[i].is_zero() || d_eta[j].is_zero()) continue;
                    acc += wedge(eta_[i], d_eta[j]);
                }
                out.three[s] = acc;
            }
        }

        out.two_dt.assign(order_, PForm<K>::zero(nvars_, 2));
        for (int s = 0; s < order_; ++s) {
            PForm<K> acc = PForm<K>::zero(nvars_, 2);
            for (int i = 0; i <= s; ++i) {
                const int j = s - i;
                // eta_i ^ (d h_{j+1} - (j+1) eta_{j+1})
                PForm<K> dh = exterior_derivative(PForm<K>::from_polynomial(dt_[j]));
                PForm<K> factor = dh - eta_[j + 1] * K(j + 1);
                if (!eta_[i].is_zero() && !factor.is_zero()) acc += wedge(eta_[i], factor);
                // h_{i+1} d eta_j
                if (!dt_[i].is_zero() && !d_eta[j].is_zero()) acc += d_eta[j] * dt_[i];
            }
            out.two_dt[s] = acc;
        }
        return out;
    }

    bool integrable() const { return wedge_d_layers().all_zero(); }

    /// The two defect slots a new layer at order n must cancel: the t^n
    /// three-form layer and the t^(n-1) dt layer of the extension of this
    /// form by a zero layer at order n. Requires order() == n-1.
    std::pair<PForm<K>, PForm<K>> next_layer_defect() const {
        const UnfoldedForm ext = extended_order(order_ + 1);
        const WedgeLayers layers = ext.wedge_d_layers();
        return {layers.three[order_ + 1], layers.two_dt[order_]};
    }

    /// Multiplication by a scalar in the truncated ring.
    UnfoldedForm multiplied(const TruncatedPoly<K>& u) const {
        if (u.nvars != nvars_ || u.order != order_) throw shape_error("truncated scalar mismatch");
        UnfoldedForm out(*this);
        for (int k = 0; k <= order_; ++k) {
            PForm<K> acc(nvars_, 1);
            for (int i = 0; i <= k; ++i) {
                if (u.c[i].is_zero()) continue;
                acc += eta_[k - i] * u.c[i];
            }
            out.eta_[k] = acc;
        }
        for (int k = 1; k <= order_; ++k) {
            Polynomial<K> acc(nvars_);
            for (int i = 0; i <= k - 1; ++i) {
                if (u.c[i].is_zero()) continue;
                acc += u.c[i] * dt_[k - 1 - i];
            }
            out.dt_[k - 1] = acc;
        }
        return out;
    }

    /// Exact pullback along the automorphism x -> x + t^k v(x), t -> t.
    /// Restricts to the identity modulo t^k, so layers below k are
    /// untouched; integrability is preserved exactly.
    UnfoldedForm pullback_shift(const VectorField<K>& v, int k) const {
        if (v.nvars != nvars_) throw shape_error("shift field in wrong ring");
        if (k < 1 || k > order_) throw domain_error("shift order out of range");
        std::vector<TruncatedPoly<K>> images;
        images.reserve(nvars_);
        for (int i = 0; i < nvars_; ++i) {
            TruncatedPoly<K> im = TruncatedPoly<K>::embed(Polynomial<K>::variable(nvars_, i), order_);
            im = im + TruncatedPoly<K>::embed(v.comps[i], order_).shifted(k);
            images.push_back(im);
        }
        // coefficient of dx_j across layers, composed with the shift
        std::vector<TruncatedPoly<K>> bj(nvars_, TruncatedPoly<K>(nvars_, order_));
        for (int j = 0; j < nvars_; ++j) {
            for (int l = 0; l <= order_; ++l) {
                const Polynomial<K> comp = eta_[l].component({j});
                if (comp.is_zero()) continue;
                bj[j] = bj[j] + substitute_truncated(comp, images).shifted(l);
            }
        }
        TruncatedPoly<K> dt_coeff(nvars_, order_);
        for (int l = 1; l <= order_; ++l) {
            if (dt_[l - 1].is_zero()) continue;
            dt_coeff = dt_coeff + substitute_truncated(dt_[l - 1], images).shifted(l - 1);
        }
        // d(x_j + t^k v_j) = dx_j + t^k dv_j + k t^(k-1) v_j dt
        UnfoldedForm out(eta_[0], order_);
        std::vector<PForm<K>> new_eta(order_ + 1, PForm<K>::zero(nvars_, 1));
        for (int j = 0; j < nvars_; ++j) {
            const PForm<K> dvj = exterior_derivative(PForm<K>::from_polynomial(v.comps[j]));
            for (int s = 0; s <= order_; ++s) {
                if (!bj[j].c[s].is_zero()) new_eta[s].add_component({j}, bj[j].c[s]);
                if (s >= k && !bj[j].c[s - k].is_zero() && !dvj.is_zero()) {
                    new_eta[s] += dvj * bj[j].c[s - k];
                }
            }
            for (int s = k - 1; s < order_; ++s) {
                if (bj[j].c[s - (k - 1)].is_zero() || v.comps[j].is_zero()) continue;
                dt_coeff.c[s] += bj[j].c[s - (k - 1)] * v.comps[j] * K(k);
            }
        }
        out.eta_ = std::move(new_eta);
        for (int s = 1; s <= order_; ++s) out.dt_[s - 1] = dt_coeff.c[s - 1];
        return out;
    }

private:
    PForm<K> lift3(const PForm<K>& f) const {
        // three-form layers live in degree min(3, nvars); in ambient
        // dimension < 3 every 3-form is already the zero form
        if (nvars_ >= 3) return f;
        return PForm<K>::zero(nvars_, std::min(3, nvars_));
    }

    int nvars_;
    int order_;
    std::vector<PForm<K>> eta_;
    std::vector<Polynomial<K>> dt_;
};

}  // namespace folex

#endif
