#ifndef FOLEX_PFORM_HPP
#define FOLEX_PFORM_HPP

#include <map>
#include <string>
#include <vector>

#include "folex/polynomial.hpp"

namespace folex {

/// Strictly increasing index tuple labelling dx_{i1} ^ ... ^ dx_{ip}.
using IdxTuple = std::vector<int>;

namespace form_detail {

/// Sign of merging two disjoint increasing tuples into one increasing
/// tuple; 0 when they share an index.
inline int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            inversions += static_cast<long>(a.size() - i);
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Sign of inserting index v into increasing tuple t (v not in t).
inline int insert_sign(const IdxTuple& t, int v, IdxTuple& out) {
    out.clear();
    out.reserve(t.size() + 1);
    int pos = 0;
    for (int x : t) {
        if (x < v) ++pos;
    }
    out.assign(t.begin(), t.end());
    out.insert(out.begin() + pos, v);
    return (pos % 2 == 0) ? 1 : -1;
}

inline std::vector<IdxTuple> increasing_tuples(int nvars, int p) {
    std::vector<IdxTuple> out;
    if (p < 0 || p > nvars) return out;
    IdxTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == p) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < nvars; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace form_detail

/// Polynomial vector field, one component per variable.
template <Field K>
struct VectorField {
    int nvars = 0;
    std::vector<Polynomial<K>> comps;

    VectorField() = default;
    explicit VectorField(int n) : nvars(n), comps(n, Polynomial<K>(n)) {}

    static VectorField basis(int nvars, int i) {
        VectorField v(nvars);
        v.comps[i] = Polynomial<K>::constant(nvars, K(1));
        return v;
    }

    /// Euler field sum_i x_i d/dx_i.
    static VectorField euler(int nvars) {
        VectorField v(nvars);
        for (int i = 0; i < nvars; ++i) v.comps[i] = Polynomial<K>::variable(nvars, i);
        return v;
    }

    bool is_zero() const {
        for (const auto& c : comps) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    VectorField operator-() const {
        VectorField v(nvars);
        for (int i = 0; i < nvars; ++i) v.comps[i] = -comps[i];
        return v;
    }
};

/// Alternating differential p-form with polynomial coefficients, stored on
/// the basis of strictly increasing index tuples. A 0-form has the empty
/// tuple as its only component.
template <Field K>
class PForm {
public:
    using CompMap = std::map<IdxTuple, Polynomial<K>>;

    PForm() : nvars_(0), deg_(0) {}
    PForm(int nvars, int deg) : nvars_(nvars), deg_(deg) {
        if (deg < 0 || deg > nvars) throw shape_error("form degree outside [0, nvars]");
    }

    static PForm zero(int nvars, int deg) { return PForm(nvars, deg); }

    static PForm from_polynomial(const Polynomial<K>& p) {
        PForm f(p.nvars(), 0);
        f.set_component({}, p);
        return f;
    }

    /// dx_i with coefficient 1.
    static PForm dx(int nvars, int i) {
        PForm f(nvars, 1);
        f.set_component({i}, Polynomial<K>::constant(nvars, K(1)));
        return f;
    }

    int nvars() const { return nvars_; }
    int form_degree() const { return deg_; }
    bool is_zero() const { return comps_.empty(); }
    const CompMap& components() const { return comps_; }

    Polynomial<K> component(const IdxTuple& t) const {
        auto it = comps_.find(t);
        return it == comps_.end() ? Polynomial<K>(nvars_) : it->second;
    }

    void set_component(const IdxTuple& t, const Polynomial<K>& p) {
        check_tuple(t);
        if (p.is_zero()) {
            comps_.erase(t);
        } else {
            if (p.nvars() != nvars_) throw shape_error("component in wrong ring");
            comps_[t] = p;
        }
    }

    void add_component(const IdxTuple& t, const Polynomial<K>& p) {
        check_tuple(t);
        if (p.is_zero()) return;
        auto it = comps_.find(t);
        if (it == comps_.end()) {
            comps_.emplace(t, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) comps_.erase(it);
        }
    }

    PForm operator-() const {
        PForm out(nvars_, deg_);
        for (const auto& [t, p] : comps_) out.comps_.emplace(t, -p);
        return out;
    }

    PForm operator+(const PForm& o) const {
        require_same_shape(o);
        PForm out = *this;
        for (const auto& [t, p] : o.comps_) out.add_component(t, p);
        return out;
    }

    PForm operator-(const PForm& o) const {
        require_same_shape(o);
        PForm out = *this;
        for (const auto& [t, p] : o.comps_) out.add_component(t, -p);
        return out;
    }

    PForm& operator+=(const PForm& o) {
        require_same_shape(o);
        for (const auto& [t, p] : o.comps_) add_component(t, p);
        return *this;
    }

    PForm& operator-=(const PForm& o) {
        require_same_shape(o);
        for (const auto& [t, p] : o.comps_) add_component(t, -p);
        return *this;
    }

    PForm operator*(const Polynomial<K>& s) const {
        PForm out(nvars_, deg_);
        for (const auto& [t, p] : comps_) out.add_component(t, p * s);
        return out;
    }

    PForm operator*(const K& c) const {
        PForm out(nvars_, deg_);
        for (const auto& [t, p] : comps_) out.add_component(t, p * c);
        return out;
    }

    bool operator==(const PForm& o) const {
        return nvars_ == o.nvars_ && deg_ == o.deg_ && comps_ == o.comps_;
    }
    bool operator!=(const PForm& o) const { return !(*this == o); }

    /// All coefficients homogeneous of one shared total degree.
    bool is_homogeneous(int* degree_out = nullptr) const {
        int d = -2;
        for (const auto& [t, p] : comps_) {
            if (!p.is_homogeneous()) return false;
            if (d == -2) {
                d = p.degree();
            } else if (p.degree() != d) {
                return false;
            }
        }
        if (degree_out) *degree_out = (d == -2 ? -1 : d);
        return true;
    }

    int max_coeff_degree() const {
        int d = -1;
        for (const auto& [t, p] : comps_) d = std::max(d, p.degree());
        return d;
    }

    PForm homogeneous_part(int d) const {
        PForm out(nvars_, deg_);
        for (const auto& [t, p] : comps_) out.add_component(t, p.homogeneous_part(d));
        return out;
    }

    std::map<IdxTuple, K> evaluate(const std::vector<K>& point) const {
        std::map<IdxTuple, K> out;
        for (const auto& [t, p] : comps_) {
            K v = p.evaluate(point);
            if (!v.is_zero()) out.emplace(t, v);
        }
        return out;
    }

    bool vanishes_at(const std::vector<K>& point) const { return evaluate(point).empty(); }

    PForm extended(int extra) const {
        PForm out(nvars_ + extra, deg_);
        for (const auto& [t, p] : comps_) out.set_component(t, p.extended(extra));
        return out;
    }

    std::string str(const std::vector<std::string>& names) const {
        if (comps_.empty()) return "0";
        std::string s;
        for (const auto& [t, p] : comps_) {
            if (!s.empty()) s += " + ";
            s += "(" + p.str(names) + ")";
            for (int i : t) s += " d" + names[i];
        }
        return s;
    }

    std::string str() const { return str(default_names(nvars_)); }

private:
    void check_tuple(const IdxTuple& t) const {
        if (static_cast<int>(t.size()) != deg_) throw shape_error("index tuple length != form degree");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < 0 || t[i] >= nvars_) throw shape_error("form index out of range");
            if (i > 0 && t[i] <= t[i - 1]) throw shape_error("form index tuple not increasing");
        }
    }
    void require_same_shape(const PForm& o) const {
        if (nvars_ != o.nvars_ || deg_ != o.deg_) throw shape_error("form shape mismatch");
    }

    int nvars_;
    int deg_;
    CompMap comps_;
};

template <Field K>
PForm<K> operator*(const Polynomial<K>& s, const PForm<K>& f) {
    return f * s;
}

template <Field K>
PForm<K> wedge(const PForm<K>& a, const PForm<K>& b) {
    if (a.nvars() != b.nvars()) throw shape_error("wedge of forms in different rings");
    const int p = a.form_degree() + b.form_degree();
    if (p > a.nvars()) throw shape_error("wedge degree exceeds variable count");
    PForm<K> out(a.nvars(), p);
    IdxTuple merged;
    for (const auto& [ta, pa] : a.components()) {
        for (const auto& [tb, pb] : b.components()) {
            const int sign = form_detail::merge_sign(ta, tb, merged);
            if (sign == 0) continue;
            Polynomial<K> prod = pa * pb;
            if (sign < 0) prod = -prod;
            out.add_component(merged, prod);
        }
    }
    return out;
}

template <Field K>
PForm<K> exterior_derivative(const PForm<K>& a) {
    const int p = a.form_degree();
    if (p == a.nvars()) return PForm<K>::zero(a.nvars(), p);  // top degree: no room left
    PForm<K> out(a.nvars(), p + 1);
    IdxTuple t2;
    for (const auto& [t, f] : a.components()) {
        for (int i = 0; i < a.nvars(); ++i) {
            Polynomial<K> g = f.derivative(i);
            if (g.is_zero()) continue;
            if (std::find(t.begin(), t.end(), i) != t.end()) continue;
            const int sign = form_detail::insert_sign(t, i, t2);
            out.add_component(t2, sign < 0 ? -g : g);
        }
    }
    return out;
}

/// Interior product; requires form degree >= 1.
template <Field K>
PForm<K> contract(const VectorField<K>& v, const PForm<K>& a) {
    if (v.nvars != a.nvars()) throw shape_error("contraction in different rings");
    if (a.form_degree() == 0) throw shape_error("contraction of a 0-form");
    PForm<K> out(a.nvars(), a.form_degree() - 1);
    for (const auto& [t, f] : a.components()) {
        for (std::size_t k = 0; k < t.size(); ++k) {
            const Polynomial<K>& vc = v.comps[t[k]];
            if (vc.is_zero()) continue;
            IdxTuple rest;
            rest.reserve(t.size() - 1);
            for (std::size_t j = 0; j < t.size(); ++j) {
                if (j != k) rest.push_back(t[j]);
            }
            Polynomial<K> term = f * vc;
            if (k % 2 == 1) term = -term;
            out.add_component(rest, term);
        }
    }
    return out;
}

/// Contraction of a 1-form: the function omega(v).
template <Field K>
Polynomial<K> pairing(const PForm<K>& omega, const VectorField<K>& v) {
    if (omega.form_degree() != 1) throw shape_error("pairing needs a 1-form");
    return contract(v, omega).component({});
}

/// Cartan formula L_v = d i_v + i_v d (for 0-forms the first term is absent).
template <Field K>
PForm<K> lie_derivative(const VectorField<K>& v, const PForm<K>& a) {
    if (v.nvars != a.nvars()) throw shape_error("lie derivative in different rings");
    PForm<K> second = a.form_degree() + 1 <= a.nvars()
                          ? contract(v, exterior_derivative(a))
                          : PForm<K>::zero(a.nvars(), a.form_degree());
    if (a.form_degree() == 0) return second;
    return exterior_derivative(contract(v, a)) + second;
}

/// Pullback along the polynomial map x_i -> images[i]; coefficients are
/// composed and dx_i becomes d(images[i]).
template <Field K>
PForm<K> pullback(const PForm<K>& a, const std::vector<Polynomial<K>>& images) {
    if (static_cast<int>(images.size()) != a.nvars()) throw shape_error("pullback arity mismatch");
    const int out_vars = images.empty() ? 0 : images[0].nvars();
    // d(images[i]) once
    std::vector<PForm<K>> dimg;
    dimg.reserve(images.size());
    for (const auto& im : images) dimg.push_back(exterior_derivative(PForm<K>::from_polynomial(im)));
    PForm<K> out(out_vars, a.form_degree());
    for (const auto& [t, f] : a.components()) {
        PForm<K> term = PForm<K>::from_polynomial(f.substitute(images));
        for (int i : t) term = wedge(term, dimg[i]);
        out += term;
    }
    return out;
}

}  // namespace folex

#endif
