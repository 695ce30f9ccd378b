#ifndef FOLEX_GRADED_HPP
#define FOLEX_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "folex/linalg.hpp"
#include "folex/pform.hpp"

namespace folex {

/// Deterministic coordinate system on the space of p-forms whose
/// coefficients run over the monomials of the listed total degrees
/// (p = 0 covers plain polynomials). Coordinates are ordered component
/// tuple first (lexicographic), then monomial (graded-lex descending),
/// so results are reproducible bit for bit.
template <Field K>
class FormBasis {
public:
    FormBasis() = default;
    FormBasis(int nvars, int form_deg, std::vector<int> degrees)
        : nvars_(nvars), form_deg_(form_deg), degrees_(std::move(degrees)) {
        tuples_ = form_detail::increasing_tuples(nvars, form_deg);
        monos_ = monomials_of_degrees(nvars, degrees_);
        for (std::size_t i = 0; i < monos_.size(); ++i) mono_index_.emplace(monos_[i], static_cast<int>(i));
    }

    static FormBasis homogeneous(int nvars, int form_deg, int coeff_degree) {
        if (coeff_degree < 0) return FormBasis(nvars, form_deg, {});
        return FormBasis(nvars, form_deg, {coeff_degree});
    }

    static FormBasis up_to_degree(int nvars, int form_deg, int bound) {
        std::vector<int> ds;
        for (int d = 0; d <= bound; ++d) ds.push_back(d);
        return FormBasis(nvars, form_deg, ds);
    }

    int nvars() const { return nvars_; }
    int form_degree() const { return form_deg_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<IdxTuple>& tuples() const { return tuples_; }
    const std::vector<Expo>& monomials() const { return monos_; }

    int dim() const { return static_cast<int>(tuples_.size() * monos_.size()); }

    int coordinate(const IdxTuple& t, const Expo& e) const {
        int ti = -1;
        for (std::size_t i = 0; i < tuples_.size(); ++i) {
            if (tuples_[i] == t) { ti = static_cast<int>(i); break; }
        }
        auto it = mono_index_.find(e);
        if (ti < 0 || it == mono_index_.end()) return -1;
        return ti * static_cast<int>(monos_.size()) + it->second;
    }

    PForm<K> from_vector(const std::vector<K>& v) const {
        if (static_cast<int>(v.size()) != dim()) throw shape_error("coordinate vector length mismatch");
        PForm<K> f(nvars_, form_deg_);
        int idx = 0;
        for (const auto& t : tuples_) {
            Polynomial<K> p(nvars_);
            for (const auto& e : monos_) {
                if (!v[idx].is_zero()) p.add_term(e, v[idx]);
                ++idx;
            }
            f.add_component(t, p);
        }
        return f;
    }

    Polynomial<K> polynomial_from_vector(const std::vector<K>& v) const {
        if (form_deg_ != 0) throw shape_error("not a polynomial basis");
        return from_vector(v).component({});
    }

    /// Throws when the form has support outside the basis.
    std::vector<K> to_vector(const PForm<K>& f) const {
        if (f.nvars() != nvars_ || f.form_degree() != form_deg_) throw shape_error("form shape mismatch");
        std::vector<K> v(dim());
        for (const auto& [t, p] : f.components()) {
            for (const auto& [e, c] : p.terms()) {
                const int idx = coordinate(t, e);
                if (idx < 0) throw shape_error("form outside the graded basis");
                v[idx] = c;
            }
        }
        return v;
    }

    std::vector<K> to_vector(const Polynomial<K>& p) const {
        return to_vector(PForm<K>::from_polynomial(p));
    }

    std::string label(int coordinate, const std::vector<std::string>& names) const {
        const int per = static_cast<int>(monos_.size());
        const IdxTuple& t = tuples_[coordinate / per];
        std::string s = monomial_str(monos_[coordinate % per], names);
        for (int i : t) s += " d" + names[i];
        return s;
    }

private:
    int nvars_ = 0;
    int form_deg_ = 0;
    std::vector<int> degrees_;
    std::vector<IdxTuple> tuples_;
    std::vector<Expo> monos_;
    std::map<Expo, int, GrlexGreater> mono_index_;
};

/// A subspace of one graded piece, held as a canonical reduced basis of
/// coefficient vectors.
template <Field K>
class GradedSubspace {
public:
    GradedSubspace() : space_(), rows_(0) {}
    explicit GradedSubspace(FormBasis<K> space) : space_(std::move(space)), rows_(space_.dim()) {}

    const FormBasis<K>& space() const { return space_; }
    int dim() const { return rows_.dim(); }

    bool insert(const PForm<K>& f) { return rows_.insert(space_.to_vector(f)); }
    bool insert(const Polynomial<K>& p) { return rows_.insert(space_.to_vector(p)); }
    bool insert_vector(std::vector<K> v) { return rows_.insert(std::move(v)); }

    bool contains(const PForm<K>& f) const { return rows_.contains(space_.to_vector(f)); }
    bool contains(const Polynomial<K>& p) const { return rows_.contains(space_.to_vector(p)); }
    bool contains_vector(const std::vector<K>& v) const { return rows_.contains(v); }

    bool same_space(const GradedSubspace& o) const { return rows_.same_space(o.rows_); }
    bool contains_subspace(const GradedSubspace& o) const { return rows_.contains_space(o.rows_); }

    const std::vector<std::vector<K>>& basis_rows() const { return rows_.basis_rows(); }

    std::vector<Polynomial<K>> basis_polynomials() const {
        std::vector<Polynomial<K>> out;
        for (const auto& r : rows_.basis_rows()) out.push_back(space_.polynomial_from_vector(r));
        return out;
    }

    std::vector<PForm<K>> basis_forms() const {
        std::vector<PForm<K>> out;
        for (const auto& r : rows_.basis_rows()) out.push_back(space_.from_vector(r));
        return out;
    }

    const RowSpace<K>& row_space() const { return rows_; }

private:
    FormBasis<K> space_;
    RowSpace<K> rows_;
};

enum class GradedShape { Polynomials, OneForms, TwoForms };

inline int form_degree_of(GradedShape s) {
    switch (s) {
        case GradedShape::Polynomials: return 0;
        case GradedShape::OneForms: return 1;
        case GradedShape::TwoForms: return 2;
    }
    return 0;
}

/// Basis of one homogeneous component, optionally cut down to the kernel
/// of contraction with the Euler field (the graded model of twisted forms
/// on projective space).
template <Field K>
GradedSubspace<K> graded_piece_basis(int nvars, int coeff_degree, GradedShape shape,
                                     bool euler_condition = false) {
    const int p = form_degree_of(shape);
    FormBasis<K> space = FormBasis<K>::homogeneous(nvars, p, coeff_degree);
    GradedSubspace<K> out(space);
    if (!euler_condition || p == 0) {
        for (int i = 0; i < space.dim(); ++i) {
            std::vector<K> v(space.dim());
            v[i] = K(1);
            out.insert_vector(std::move(v));
        }
        return out;
    }
    // kernel of i_R on the piece
    const VectorField<K> R = VectorField<K>::euler(nvars);
    FormBasis<K> target = FormBasis<K>::homogeneous(nvars, p - 1, coeff_degree + 1);
    Matrix<K> A(target.dim(), space.dim());
    for (int j = 0; j < space.dim(); ++j) {
        std::vector<K> v(space.dim());
        v[j] = K(1);
        const auto img = target.to_vector(contract(R, space.from_vector(v)));
        for (int i = 0; i < target.dim(); ++i) A.at(i, j) = img[i];
    }
    const Matrix<K> ker = nullspace(A);
    for (int i = 0; i < ker.rows(); ++i) out.insert_vector(ker.row(i));
    return out;
}

}  // namespace folex

#endif
