#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "edom/error.hpp"

namespace edom {

/// Field elements are integer codes: the element with coordinate vector
/// (c_0, ..., c_{h-1}) over GF(p) (polynomial basis in a root of the modulus)
/// has code sum c_i p^i. Code order is the canonical element order everywhere.
using GFElem = std::uint32_t;

namespace detail {

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomials over GF(p), coefficient of x^i at index i, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mod(Poly f, const Poly& m, std::uint32_t p) {
    // m monic
    while (f.size() >= m.size()) {
        std::uint64_t lead = f.back();
        std::size_t shift = f.size() - m.size();
        if (lead) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                std::uint64_t cur = f[shift + i];
                std::uint64_t sub = lead * m[i] % p;
                f[shift + i] = static_cast<std::uint32_t>((cur + p - sub) % p);
            }
        }
        f.pop_back();
    }
    poly_trim(f);
    return f;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    return poly_mod(std::move(r), m, p);
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    auto inv_mod_p = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2, base = x % p;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    };
    while (!b.empty()) {
        // make b monic so poly_mod applies
        if (b.back() != 1) {
            std::uint64_t s = inv_mod_p(b.back());
            for (auto& c : b) c = static_cast<std::uint32_t>(c * s % p);
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Monic f of degree h >= 2 irreducible over GF(p):
/// x^{p^h} == x (mod f) and gcd(x^{p^{h/l}} - x, f) = 1 for each prime l | h.
inline bool poly_irreducible(const Poly& f, std::uint32_t p) {
    std::size_t h = f.size() - 1;
    auto pow_p = [&](std::size_t e) {
        // x^{p^e} mod f by iterated Frobenius
        Poly x{0, 1};
        Poly r = poly_mod(x, f, p);
        for (std::size_t i = 0; i < e; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    Poly xq = pow_p(h);
    Poly x = poly_mod(Poly{0, 1}, f, p);
    if (xq != x) return false;
    for (auto l : prime_factors(h)) {
        Poly g = pow_p(h / l);
        // g - x
        Poly d = g;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = static_cast<std::uint32_t>((d[1] + p - 1) % p);
        poly_trim(d);
        Poly gc = poly_gcd(f, d, p);
        if (gc.size() > 1) return false;
    }
    return true;
}

} // namespace detail

/// GF(p^h) with a deterministic modulus (lexicographically first monic irreducible,
/// coefficient codes ascending) and a deterministic primitive element (smallest
/// code of multiplicative order q-1). Immutable after construction.
class GF {
public:
    /// Empty field; assign from create() before use.
    GF() = default;

    static GF create(std::uint32_t p, std::uint32_t h) {
        require(detail::is_prime_u32(p), ErrorKind::NonPrimeCharacteristic,
                "characteristic " + std::to_string(p) + " is not prime");
        require(h >= 1, ErrorKind::OrderOverflow, "extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < h; ++i) {
            q *= p;
            require(q <= (1ull << 32), ErrorKind::OrderOverflow, "field order exceeds 2^32");
        }
        return GF(p, h, q);
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t h() const { return h_; }
    std::uint64_t q() const { return q_; }
    /// Modulus coefficients, constant term first, degree h monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    GFElem omega() const { return omega_; }

    GFElem zero() const { return 0; }
    GFElem one() const { return 1; }

    std::vector<std::uint32_t> coeffs(GFElem x) const {
        std::vector<std::uint32_t> c(h_);
        for (std::uint32_t i = 0; i < h_; ++i) {
            c[i] = x % p_;
            x /= p_;
        }
        return c;
    }

    GFElem from_coeffs(const std::vector<std::uint32_t>& c) const {
        GFElem x = 0;
        for (std::size_t i = c.size(); i-- > 0;) x = static_cast<GFElem>(x * p_ + c[i] % p_);
        return x;
    }

    GFElem add(GFElem a, GFElem b) const {
        if (p_ == 2) return a ^ b;
        if (h_ == 1) return static_cast<GFElem>((static_cast<std::uint64_t>(a) + b) % p_);
        GFElem r = 0, mul = 1;
        for (std::uint32_t i = 0; i < h_; ++i) {
            r += (a % p_ + b % p_) % p_ * mul;
            a /= p_;
            b /= p_;
            mul *= p_;
        }
        return r;
    }

    GFElem neg(GFElem a) const {
        if (p_ == 2) return a;
        if (h_ == 1) return a ? p_ - a : 0;
        GFElem r = 0, mul = 1;
        for (std::uint32_t i = 0; i < h_; ++i) {
            std::uint32_t c = a % p_;
            r += (c ? p_ - c : 0) * mul;
            a /= p_;
            mul *= p_;
        }
        return r;
    }

    GFElem sub(GFElem a, GFElem b) const { return add(a, neg(b)); }

    GFElem mul(GFElem a, GFElem b) const {
        if (h_ == 1) return static_cast<GFElem>(static_cast<std::uint64_t>(a) * b % p_);
        if (!log_.empty()) {
            if (a == 0 || b == 0) return 0;
            std::uint64_t e = log_[a] + log_[b];
            if (e >= q_ - 1) e -= q_ - 1;
            return exp_[e];
        }
        return mul_poly(a, b);
    }

    GFElem pow(GFElem a, std::uint64_t e) const {
        GFElem r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    GFElem inv(GFElem a) const {
        require(a != 0, ErrorKind::Internal, "inverse of zero");
        return pow(a, q_ - 2);
    }

    std::uint64_t mult_order(GFElem a) const {
        if (a == 0) return 0;
        std::uint64_t ord = q_ - 1;
        for (auto f : detail::prime_factors(q_ - 1)) {
            while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
        }
        return ord;
    }

    /// Value in {-1, 0, +1}: x^{(q-1)/2} mapped down. Odd q only.
    int quadratic_character(GFElem x) const {
        require(q_ % 2 == 1, ErrorKind::EvenCharacteristic, "quadratic character needs odd field order");
        if (x == 0) return 0;
        GFElem s = pow(x, (q_ - 1) / 2);
        return s == 1 ? +1 : -1;
    }

    /// zeta = omega^{(q-1)/m}, of multiplicative order exactly m; requires m | q-1.
    GFElem root_of_unity(std::uint64_t m) const {
        require(m >= 1 && (q_ - 1) % m == 0, ErrorKind::NonDivisor,
                std::to_string(m) + " does not divide q-1 = " + std::to_string(q_ - 1));
        return pow(omega_, (q_ - 1) / m);
    }

    /// Coordinates of x in the basis 1, omega, ..., omega^{h-1}.
    std::vector<std::uint32_t> omega_coords(GFElem x) const {
        std::vector<std::uint32_t> c = coeffs(x);
        std::vector<std::uint32_t> r(h_, 0);
        for (std::uint32_t i = 0; i < h_; ++i)
            for (std::uint32_t j = 0; j < h_; ++j)
                r[i] = static_cast<std::uint32_t>(
                    (r[i] + static_cast<std::uint64_t>(omega_basis_inv_[i * h_ + j]) * c[j]) % p_);
        return r;
    }

    /// Elements of the subfield GF(p^d), d | h: the fixed points of x -> x^{p^d}.
    /// Sorted by code. O(q) scan; meant for small fields.
    std::vector<GFElem> subfield(std::uint32_t d) const {
        require(d >= 1 && h_ % d == 0, ErrorKind::NonDivisor, "subfield degree must divide h");
        std::uint64_t pd = 1;
        for (std::uint32_t i = 0; i < d; ++i) pd *= p_;
        std::vector<GFElem> out;
        for (std::uint64_t x = 0; x < q_; ++x)
            if (pow(static_cast<GFElem>(x), pd) == static_cast<GFElem>(x)) out.push_back(static_cast<GFElem>(x));
        return out;
    }

    std::vector<GFElem> all_elements() const {
        std::vector<GFElem> out(q_);
        for (std::uint64_t x = 0; x < q_; ++x) out[x] = static_cast<GFElem>(x);
        return out;
    }

private:
    GF(std::uint32_t p, std::uint32_t h, std::uint64_t q) : p_(p), h_(h), q_(q) {
        pick_modulus();
        if (h_ > 1 && q_ <= (1u << 16)) build_log_tables();
        pick_omega();
        build_omega_basis();
    }

    void pick_modulus() {
        if (h_ == 1) {
            modulus_ = {0, 1}; // x; unused for prime fields
            return;
        }
        // scan monic degree-h polynomials by code of the non-leading coefficients
        std::uint64_t count = q_; // p^h choices of lower coefficients
        for (std::uint64_t code = 0; code < count; ++code) {
            detail::Poly f(h_ + 1);
            std::uint64_t c = code;
            for (std::uint32_t i = 0; i < h_; ++i) {
                f[i] = static_cast<std::uint32_t>(c % p_);
                c /= p_;
            }
            f[h_] = 1;
            if (detail::poly_irreducible(f, p_)) {
                modulus_.assign(f.begin(), f.end());
                return;
            }
        }
        fail(ErrorKind::Internal, "no irreducible modulus found"); // unreachable
    }

    GFElem mul_poly(GFElem a, GFElem b) const {
        auto ca = coeffs(a), cb = coeffs(b);
        std::vector<std::uint32_t> r(2 * h_ - 1, 0);
        for (std::uint32_t i = 0; i < h_; ++i) {
            if (!ca[i]) continue;
            for (std::uint32_t j = 0; j < h_; ++j)
                r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
        }
        // reduce modulo the monic modulus
        for (std::size_t k = r.size(); k-- > h_;) {
            std::uint64_t lead = r[k];
            if (!lead) continue;
            r[k] = 0;
            for (std::uint32_t i = 0; i < h_; ++i) {
                std::uint64_t sub = lead * modulus_[i] % p_;
                r[k - h_ + i] = static_cast<std::uint32_t>((r[k - h_ + i] + p_ - sub) % p_);
            }
        }
        r.resize(h_);
        return from_coeffs(r);
    }

    void build_log_tables() {
        // any generator works for table layout; find one by scanning
        for (std::uint64_t g = 1; g < q_; ++g) {
            if (mult_order_poly(static_cast<GFElem>(g)) == q_ - 1) {
                exp_.assign(q_ - 1, 0);
                log_.assign(q_, 0);
                GFElem x = 1;
                for (std::uint64_t e = 0; e < q_ - 1; ++e) {
                    exp_[e] = x;
                    log_[x] = e;
                    x = mul_poly(x, static_cast<GFElem>(g));
                }
                return;
            }
        }
    }

    std::uint64_t mult_order_poly(GFElem a) const {
        if (a == 0) return 0;
        std::uint64_t ord = 1;
        GFElem x = a;
        while (x != 1) {
            x = mul_poly(x, a);
            ++ord;
            if (ord > q_) return 0;
        }
        return ord;
    }

    void pick_omega() {
        if (q_ == 2) {
            omega_ = 1;
            return;
        }
        for (std::uint64_t g = 1; g < q_; ++g) {
            if (mult_order(static_cast<GFElem>(g)) == q_ - 1) {
                omega_ = static_cast<GFElem>(g);
                return;
            }
        }
        fail(ErrorKind::Internal, "no primitive element found"); // unreachable
    }

    void build_omega_basis() {
        // Invert the h x h matrix whose columns are coeff vectors of omega^i.
        std::vector<std::uint32_t> m(h_ * h_), inv(h_ * h_, 0);
        GFElem w = 1;
        for (std::uint32_t col = 0; col < h_; ++col) {
            auto c = coeffs(w);
            for (std::uint32_t row = 0; row < h_; ++row) m[row * h_ + col] = c[row];
            w = mul(w, omega_);
        }
        for (std::uint32_t i = 0; i < h_; ++i) inv[i * h_ + i] = 1;
        auto inv_mod_p = [this](std::uint64_t x) {
            std::uint64_t r = 1, e = p_ - 2, base = x % p_;
            while (e) {
                if (e & 1) r = r * base % p_;
                base = base * base % p_;
                e >>= 1;
            }
            return static_cast<std::uint32_t>(r);
        };
        for (std::uint32_t col = 0; col < h_; ++col) {
            std::uint32_t piv = col;
            while (piv < h_ && m[piv * h_ + col] == 0) ++piv;
            if (piv != col) {
                for (std::uint32_t j = 0; j < h_; ++j) {
                    std::swap(m[col * h_ + j], m[piv * h_ + j]);
                    std::swap(inv[col * h_ + j], inv[piv * h_ + j]);
                }
            }
            std::uint32_t s = inv_mod_p(m[col * h_ + col]);
            for (std::uint32_t j = 0; j < h_; ++j) {
                m[col * h_ + j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m[col * h_ + j]) * s % p_);
                inv[col * h_ + j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(inv[col * h_ + j]) * s % p_);
            }
            for (std::uint32_t row = 0; row < h_; ++row) {
                if (row == col || m[row * h_ + col] == 0) continue;
                std::uint64_t f = m[row * h_ + col];
                for (std::uint32_t j = 0; j < h_; ++j) {
                    m[row * h_ + j] = static_cast<std::uint32_t>(
                        (m[row * h_ + j] + p_ * f - f * m[col * h_ + j] % p_) % p_);
                    inv[row * h_ + j] = static_cast<std::uint32_t>(
                        (inv[row * h_ + j] + p_ * f - f * inv[col * h_ + j] % p_) % p_);
                }
            }
        }
        omega_basis_inv_ = std::move(inv);
    }

    std::uint32_t p_ = 0, h_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    GFElem omega_ = 0;
    std::vector<std::uint32_t> omega_basis_inv_; // row-major h x h over GF(p)
    std::vector<GFElem> exp_;                    // log tables for small extension fields
    std::vector<std::uint64_t> log_;
};

} // namespace edom
