#ifndef FOLEX_PRIME_FIELD_HPP
#define FOLEX_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "folex/errors.hpp"

namespace folex {

/// Z/p element with a process-global modulus. The prime-field mode is a
/// performance knob for dimension computations: results are probabilistic
/// (a dimension computed mod p can differ from the rational one for
/// unlucky p) and reports must say so. The modulus is set once before any
/// computation starts; concurrent reads are fine afterwards.
class Zp {
public:
    Zp() : v_(0) {}
    Zp(std::int64_t n) {
        const std::uint64_t p = modulus();
        std::int64_t r = n % static_cast<std::int64_t>(p);
        if (r < 0) r += static_cast<std::int64_t>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    static void set_modulus(std::uint64_t p) {
        if (p <= (1ull << 20)) throw domain_error("prime-field modulus must exceed 2^20");
        if (!is_prime(p)) throw domain_error("prime-field modulus must be prime");
        modulus_ref() = p;
    }
    static std::uint64_t modulus() {
        const std::uint64_t p = modulus_ref();
        if (p == 0) throw mode_error("prime-field modulus not set");
        return p;
    }
    static bool modulus_set() { return modulus_ref() != 0; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    std::uint64_t value() const { return v_; }

    Zp operator-() const { return from_raw(v_ == 0 ? 0 : modulus() - v_); }
    Zp operator+(const Zp& o) const {
        std::uint64_t s = v_ + o.v_;
        const std::uint64_t p = modulus();
        if (s >= p) s -= p;
        return from_raw(s);
    }
    Zp operator-(const Zp& o) const {
        const std::uint64_t p = modulus();
        return from_raw(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_);
    }
    Zp operator*(const Zp& o) const {
        const std::uint64_t p = modulus();
        return from_raw(static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(v_) * o.v_) % p));
    }
    Zp operator/(const Zp& o) const { return *this * o.inverse(); }
    Zp& operator+=(const Zp& o) { *this = *this + o; return *this; }
    Zp& operator-=(const Zp& o) { *this = *this - o; return *this; }
    Zp& operator*=(const Zp& o) { *this = *this * o; return *this; }
    Zp& operator/=(const Zp& o) { *this = *this / o; return *this; }

    bool operator==(const Zp& o) const { return v_ == o.v_; }
    bool operator!=(const Zp& o) const { return v_ != o.v_; }

    Zp inverse() const {
        if (v_ == 0) throw domain_error("inverse of zero");
        // extended Euclid on (v, p)
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus()), nr = static_cast<std::int64_t>(v_);
        while (nr != 0) {
            const std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus());
        return from_raw(static_cast<std::uint64_t>(t));
    }

    std::string str() const { return std::to_string(v_); }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
            if (n % d == 0) return n == d;
        }
        // deterministic Miller-Rabin for 64-bit inputs
        std::uint64_t d = n - 1;
        int s = 0;
        while ((d & 1) == 0) { d >>= 1; ++s; }
        for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
            if (a % n == 0) continue;
            std::uint64_t x = pow_mod(a, d, n);
            if (x == 1 || x == n - 1) continue;
            bool witness = true;
            for (int i = 0; i < s - 1; ++i) {
                x = mul_mod(x, x, n);
                if (x == n - 1) { witness = false; break; }
            }
            if (witness) return false;
        }
        return true;
    }

private:
    static Zp from_raw(std::uint64_t v) {
        Zp z;
        z.v_ = v;
        return z;
    }
    static std::uint64_t& modulus_ref() {
        static std::uint64_t p = 0;
        return p;
    }
    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
    }
    static std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mul_mod(r, a, m);
            a = mul_mod(a, a, m);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t v_;
};

}  // namespace folex

#endif
