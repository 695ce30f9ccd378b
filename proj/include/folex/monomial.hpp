#ifndef FOLEX_MONOMIAL_HPP
#define FOLEX_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "folex/errors.hpp"

namespace folex {

/// Exponent vector of a monomial; length equals the ambient variable count.
using Expo = std::vector<int>;

inline int total_degree(const Expo& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded-lexicographic order with the declared variable order: compare
/// total degree, ties by lexicographic comparison of exponent vectors.
inline int grlex_cmp(const Expo& a, const Expo& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

/// Leading-term-first ordering for term maps.
struct GrlexGreater {
    bool operator()(const Expo& a, const Expo& b) const { return grlex_cmp(a, b) > 0; }
};

/// All monomials of the given total degree, graded-lex descending
/// (x0^e first). The ordering is the deterministic basis contract for
/// every graded computation.
inline std::vector<Expo> monomials_of_degree(int nvars, int degree) {
    std::vector<Expo> out;
    if (degree < 0 || nvars <= 0) return out;
    Expo cur(nvars, 0);
    // recursive descent, assigning exponents left to right, largest first
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            cur[var] = remaining;
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[var] = e;
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

/// Monomials of every total degree in `degrees`, in the given degree order.
inline std::vector<Expo> monomials_of_degrees(int nvars, const std::vector<int>& degrees) {
    std::vector<Expo> out;
    for (int d : degrees) {
        auto block = monomials_of_degree(nvars, d);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

inline std::string monomial_str(const Expo& e, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::vector<std::string> default_names(int nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace folex

#endif
