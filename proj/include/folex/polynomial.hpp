#ifndef FOLEX_POLYNOMIAL_HPP
#define FOLEX_POLYNOMIAL_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folex/errors.hpp"
#include "folex/monomial.hpp"

namespace folex {

template <typename K>
concept Field = std::regular<K> && requires(const K a, const K b) {
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    K(std::int64_t{});
};

/// Sparse multivariate polynomial over an exact field. Canonical form:
/// no stored zero coefficients, all exponent vectors of length nvars.
template <Field K>
class Polynomial {
public:
    using TermMap = std::map<Expo, K, GrlexGreater>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 0) throw domain_error("negative variable count");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, const K& c) {
        Polynomial p(nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }

    static Polynomial variable(int nvars, int i) {
        if (i < 0 || i >= nvars) throw domain_error("variable index out of range");
        Polynomial p(nvars);
        Expo e(nvars, 0);
        e[i] = 1;
        p.add_term(e, K(1));
        return p;
    }

    static Polynomial monomial(int nvars, const Expo& e, const K& c) {
        Polynomial p(nvars);
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Expo& e, const K& c) {
        if (static_cast<int>(e.size()) != nvars_) throw shape_error("exponent length != variable count");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K() : it->second;
    }

    /// -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const int d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) != d) return false;
        }
        return true;
    }

    /// Sum of the terms of one total degree.
    Polynomial homogeneous_part(int d) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) == d) out.add_term(e, c);
        }
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ambient(o);
        Polynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    Polynomial operator-(const Polynomial& o) const {
        require_same_ambient(o);
        Polynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        require_same_ambient(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ambient(o);
        Polynomial out(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial operator*(const K& c) const {
        Polynomial out(nvars_);
        if (c.is_zero()) return out;
        for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
        return out;
    }

    Polynomial pow(int n) const {
        if (n < 0) throw domain_error("negative polynomial power");
        Polynomial out = constant(nvars_, K(1));
        Polynomial base = *this;
        while (n) {
            if (n & 1) out = out * base;
            base = base * base;
            n >>= 1;
        }
        return out;
    }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= nvars_) throw domain_error("derivative variable out of range");
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Expo d = e;
            d[var] -= 1;
            out.add_term(d, c * K(e[var]));
        }
        return out;
    }

    K evaluate(const std::vector<K>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw shape_error("point length != variable count");
        K acc;
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int i = 0; i < nvars_; ++i) {
                for (int j = 0; j < e[i]; ++j) t *= point[i];
            }
            acc += t;
        }
        return acc;
    }

    /// Composition x_i -> images[i]; the images fix the output ring.
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars_) throw shape_error("substitution arity mismatch");
        const int out_vars = images.empty() ? 0 : images[0].nvars();
        for (const auto& im : images) {
            if (im.nvars() != out_vars) throw shape_error("substitution images in different rings");
        }
        // memoized powers per variable
        std::vector<std::vector<Polynomial>> powers(nvars_);
        auto power_of = [&](int var, int e) -> const Polynomial& {
            auto& tab = powers[var];
            if (tab.empty()) tab.push_back(constant(out_vars, K(1)));
            while (static_cast<int>(tab.size()) <= e) tab.push_back(tab.back() * images[var]);
            return tab[e];
        };
        Polynomial out(out_vars);
        for (const auto& [e, c] : terms_) {
            Polynomial t = constant(out_vars, c);
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] > 0) t = t * power_of(i, e[i]);
            }
            out += t;
        }
        return out;
    }

    /// Extends the ring by appending `extra` fresh trailing variables.
    Polynomial extended(int extra) const {
        Polynomial out(nvars_ + extra);
        for (const auto& [e, c] : terms_) {
            Expo e2 = e;
            e2.resize(nvars_ + extra, 0);
            out.terms_.emplace(std::move(e2), c);
        }
        return out;
    }

    /// Drops `extra` trailing variables; every term must be free of them.
    Polynomial restricted(int extra) const {
        Polynomial out(nvars_ - extra);
        for (const auto& [e, c] : terms_) {
            for (int i = nvars_ - extra; i < nvars_; ++i) {
                if (e[i] != 0) throw shape_error("restricting a polynomial that uses a dropped variable");
            }
            Expo e2(e.begin(), e.begin() + (nvars_ - extra));
            out.terms_.emplace(std::move(e2), c);
        }
        return out;
    }

    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    const std::pair<const Expo, K>& leading_term() const {
        if (terms_.empty()) throw domain_error("leading term of zero");
        return *terms_.begin();
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                if (neg) { s += "-"; cs = cs.substr(1); }
            } else {
                s += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            first = false;
            const std::string ms = monomial_str(e, names);
            if (ms == "1") {
                s += cs;
            } else if (cs == "1") {
                s += ms;
            } else {
                s += cs + " " + ms;
            }
        }
        return s;
    }

    std::string str() const { return str(default_names(nvars_)); }

private:
    void require_same_ambient(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw shape_error("polynomials in different rings");
    }

    int nvars_;
    TermMap terms_;
};

template <Field K>
Polynomial<K> operator*(const K& c, const Polynomial<K>& p) {
    return p * c;
}

}  // namespace folex

#endif
