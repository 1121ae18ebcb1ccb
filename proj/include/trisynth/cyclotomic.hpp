#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "trisynth/bigint.hpp"
#include "trisynth/error.hpp"

namespace trisynth {

/**
 * ZOmega: Eisenstein integers a + b·ω with ω = e^{2πi/3}.
 *
 * Canonical basis is {1, ω}; every product is reduced with ω² = −1 − ω.
 * The element χ = 1 − ω is prime with |χ|² = 3 and χ² = −3ω; division by χ
 * is exact precisely when residue() vanishes.
 */
class ZOmega {
public:
    ZOmega() : _a(0), _b(0) {}
    ZOmega(BigInt a, BigInt b) : _a(std::move(a)), _b(std::move(b)) {}
    explicit ZOmega(long v) : _a(v), _b(0) {}

    const BigInt& a() const { return _a; }
    const BigInt& b() const { return _b; }

    static ZOmega zero() { return ZOmega(); }
    static ZOmega one() { return ZOmega(1); }
    static ZOmega omega() { return ZOmega(BigInt(0), BigInt(1)); }
    // χ = 1 − ω, the ramified prime above 3.
    static ZOmega chi() { return ZOmega(BigInt(1), BigInt(-1)); }

    // ω^p, p taken mod 3.
    static ZOmega omega_pow(int p) {
        switch (((p % 3) + 3) % 3) {
            case 1: return omega();
            case 2: return ZOmega(BigInt(-1), BigInt(-1));
            default: return one();
        }
    }

    bool operator==(const ZOmega& o) const { return _a == o._a && _b == o._b; }
    bool operator!=(const ZOmega& o) const { return !(*this == o); }
    bool is_zero() const { return _a == 0 && _b == 0; }

    ZOmega operator+(const ZOmega& o) const { return ZOmega(_a + o._a, _b + o._b); }
    ZOmega operator-(const ZOmega& o) const { return ZOmega(_a - o._a, _b - o._b); }
    ZOmega operator-() const { return ZOmega(-_a, -_b); }

    ZOmega operator*(const ZOmega& o) const {
        // (a1 + b1ω)(a2 + b2ω), with ω² = −1 − ω.
        BigInt bb = _b * o._b;
        return ZOmega(_a * o._a - bb, _a * o._b + _b * o._a - bb);
    }

    // Complex conjugate: ω̄ = ω² = −1 − ω.
    ZOmega conj() const { return ZOmega(_a - _b, -_b); }

    ZOmega pow(unsigned e) const {
        ZOmega r = one(), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    // Evaluation at ω = 1, mod 3.  Vanishes exactly on χ·Z[ω].
    int residue() const { return mod3(_a + _b); }

    // Residue of the formal derivative, mod 3.  Together with residue()
    // this detects membership in χ²·Z[ω].
    int deriv_residue() const { return mod3(_b); }

    // Exact quotient by χ.  Requires residue() == 0.
    ZOmega div_chi() const {
        if (residue() != 0) throw NotDivisible("div_chi: residue is nonzero");
        return ZOmega(div3(2 * _a - _b), div3(_a + _b));
    }

    // If this is ±ω^p, report (negative?, p); otherwise nullopt.
    std::optional<std::pair<bool, int>> as_unit() const {
        for (int p = 0; p < 3; ++p) {
            ZOmega u = omega_pow(p);
            if (*this == u) return std::make_pair(false, p);
            if (*this == -u) return std::make_pair(true, p);
        }
        return std::nullopt;
    }

    std::complex<double> to_complex() const {
        static const std::complex<double> w(-0.5, 0.8660254037844386467637231707529);
        return std::complex<double>(_a.get_d(), 0.0) + std::complex<double>(_b.get_d(), 0.0) * w;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZOmega& z) {
        os << z._a.get_str();
        if (z._b >= 0) os << "+";
        return os << z._b.get_str() << "ω";
    }

private:
    BigInt _a, _b;
};

/**
 * LocalOmega: elements of Z[1/3, ω] stored as num / χ^k.
 *
 * Reduced form is maintained eagerly: either k = 0 or num is not divisible
 * by χ, so equality is structural and sde() is just k.  Denominators are
 * powers of χ rather than 3 because the column-reduction argument counts
 * χ-steps; the conversions use 3 = −ω²χ².
 */
class LocalOmega {
public:
    LocalOmega() : _num(), _k(0) {}
    LocalOmega(ZOmega num, unsigned k) : _num(std::move(num)), _k(k) { reduce(); }
    explicit LocalOmega(long v) : _num(v), _k(0) {}

    static LocalOmega zero() { return LocalOmega(); }
    static LocalOmega one() { return LocalOmega(1); }
    static LocalOmega from(ZOmega z) { return LocalOmega(std::move(z), 0); }
    // 1/3 = −ω / χ².
    static LocalOmega one_third() { return LocalOmega(-ZOmega::omega(), 2); }

    const ZOmega& num() const { return _num; }
    unsigned k() const { return _k; }
    unsigned sde() const { return _k; }

    bool is_zero() const { return _num.is_zero(); }
    bool operator==(const LocalOmega& o) const { return _k == o._k && _num == o._num; }
    bool operator!=(const LocalOmega& o) const { return !(*this == o); }

    LocalOmega operator+(const LocalOmega& o) const {
        unsigned k = std::max(_k, o._k);
        return LocalOmega(scaled_num(k) + o.scaled_num(k), k);
    }
    LocalOmega operator-(const LocalOmega& o) const { return *this + (-o); }
    LocalOmega operator-() const {
        LocalOmega r;
        r._num = -_num;
        r._k = _k;
        return r;
    }
    LocalOmega operator*(const LocalOmega& o) const {
        return LocalOmega(_num * o._num, _k + o._k);
    }

    // conj(χ) = −ω²χ, so conjugation keeps the χ-exponent and multiplies the
    // numerator by the unit (−ω)^k.
    LocalOmega conj() const {
        LocalOmega r;
        r._num = _num.conj() * ZOmega::omega_pow(static_cast<int>(_k % 3));
        if (_k % 2 == 1) r._num = -r._num;
        r._k = _k;
        return r;
    }

    // Numerator after raising the denominator exponent to k_target >= k.
    ZOmega scaled_num(unsigned k_target) const {
        ZOmega n = _num;
        for (unsigned i = _k; i < k_target; ++i) n = n * ZOmega::chi();
        return n;
    }

    std::complex<double> to_complex() const {
        static const std::complex<double> chi_c(1.5, -0.8660254037844386467637231707529);
        std::complex<double> v = _num.to_complex();
        for (unsigned i = 0; i < _k; ++i) v /= chi_c;
        return v;
    }

    friend std::ostream& operator<<(std::ostream& os, const LocalOmega& x) {
        os << "(" << x._num << ")";
        if (x._k > 0) os << "/χ^" << x._k;
        return os;
    }

private:
    void reduce() {
        if (_num.is_zero()) {
            _k = 0;
            return;
        }
        while (_k > 0 && _num.residue() == 0) {
            _num = _num.div_chi();
            --_k;
        }
    }

    ZOmega _num;
    unsigned _k;
};

// Smallest f with χ^f · x integral; equals the stored exponent in reduced form.
inline unsigned sde(const LocalOmega& x) { return x.sde(); }

/**
 * ZZeta: integers of Q(ζ) with ζ = e^{2πi/9}, as polynomials of degree < 6
 * reduced by the minimal polynomial x⁶ + x³ + 1 (so ζ⁶ = −1 − ζ³).
 * The subring Z[ω] embeds via ω = ζ³.
 */
class ZZeta {
public:
    ZZeta() : _c{} {}
    explicit ZZeta(std::array<BigInt, 6> c) : _c(std::move(c)) {}
    explicit ZZeta(long v) : _c{} { _c[0] = v; }

    static ZZeta zero() { return ZZeta(); }
    static ZZeta one() { return ZZeta(1); }

    // ζ^p for any integer p (mod 9), reduced to the canonical basis.
    static ZZeta zeta_pow(int p) {
        p = ((p % 9) + 9) % 9;
        ZZeta r;
        if (p < 6) {
            r._c[p] = 1;
        } else {
            // ζ^p = −ζ^{p−6} − ζ^{p−3}
            r._c[p - 6] = -1;
            r._c[p - 3] = -1;
        }
        return r;
    }

    static ZZeta from_omega(const ZOmega& z) {
        ZZeta r;
        r._c[0] = z.a();
        r._c[3] = z.b();
        return r;
    }

    const BigInt& c(int i) const { return _c[static_cast<std::size_t>(i)]; }
    const std::array<BigInt, 6>& coeffs() const { return _c; }

    bool operator==(const ZZeta& o) const { return _c == o._c; }
    bool operator!=(const ZZeta& o) const { return !(*this == o); }
    bool is_zero() const {
        for (const auto& x : _c)
            if (x != 0) return false;
        return true;
    }

    ZZeta operator+(const ZZeta& o) const {
        ZZeta r;
        for (int i = 0; i < 6; ++i) r._c[i] = _c[i] + o._c[i];
        return r;
    }
    ZZeta operator-(const ZZeta& o) const {
        ZZeta r;
        for (int i = 0; i < 6; ++i) r._c[i] = _c[i] - o._c[i];
        return r;
    }
    ZZeta operator-() const {
        ZZeta r;
        for (int i = 0; i < 6; ++i) r._c[i] = -_c[i];
        return r;
    }

    ZZeta operator*(const ZZeta& o) const {
        std::array<BigInt, 11> p{};
        for (int i = 0; i < 6; ++i) {
            if (_c[i] == 0) continue;
            for (int j = 0; j < 6; ++j) p[i + j] += _c[i] * o._c[j];
        }
        // Fold degrees 10..6 with ζ^i = −ζ^{i−6} − ζ^{i−3}.
        for (int i = 10; i >= 6; --i) {
            if (p[i] == 0) continue;
            p[i - 6] -= p[i];
            p[i - 3] -= p[i];
            p[i] = 0;
        }
        ZZeta r;
        for (int i = 0; i < 6; ++i) r._c[i] = p[i];
        return r;
    }

    // Complex conjugate: ζ̄ = ζ⁸ = −ζ² − ζ⁵, applied basis-wise.
    ZZeta conj() const {
        ZZeta r;
        r._c[0] = _c[0] - _c[3];
        r._c[1] = -_c[2];
        r._c[2] = -_c[1];
        r._c[3] = -_c[3];
        r._c[4] = _c[5] - _c[2];
        r._c[5] = _c[4] - _c[1];
        return r;
    }

    ZZeta pow(unsigned e) const {
        ZZeta r = one(), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    bool divisible_by_3() const {
        for (const auto& x : _c)
            if (!trisynth::divisible_by_3(x)) return false;
        return true;
    }

    ZZeta div3_exact() const {
        ZZeta r;
        for (int i = 0; i < 6; ++i) r._c[i] = div3(_c[i]);
        return r;
    }

    std::complex<double> to_complex() const {
        static const std::complex<double> z(0.766044443118978035, 0.642787609686539327);
        std::complex<double> v(0.0, 0.0), zp(1.0, 0.0);
        for (int i = 0; i < 6; ++i) {
            v += std::complex<double>(_c[i].get_d(), 0.0) * zp;
            zp *= z;
        }
        return v;
    }

    friend std::ostream& operator<<(std::ostream& os, const ZZeta& x) {
        os << "[";
        for (int i = 0; i < 6; ++i) {
            if (i) os << ",";
            os << x._c[i].get_str();
        }
        return os << "]";
    }

private:
    std::array<BigInt, 6> _c;  // Σ c_i ζ^i
};

/**
 * LocalZeta: elements of Z[1/3, ζ] stored as num / 3^k, with k = 0 or
 * num ∉ 3·Z[ζ].  The ζ-ring only needs ring membership (no fine valuation),
 * so plain 3-power denominators suffice here.
 */
class LocalZeta {
public:
    LocalZeta() : _num(), _k(0) {}
    LocalZeta(ZZeta num, unsigned k) : _num(std::move(num)), _k(k) { reduce(); }
    explicit LocalZeta(long v) : _num(v), _k(0) {}

    static LocalZeta zero() { return LocalZeta(); }
    static LocalZeta one() { return LocalZeta(1); }
    static LocalZeta from(ZZeta z) { return LocalZeta(std::move(z), 0); }
    static LocalZeta zeta_pow(int p) { return from(ZZeta::zeta_pow(p)); }

    // Embedding of Z[1/3, ω]: 1/χ = (2 + ω)/3.
    static LocalZeta from_local_omega(const LocalOmega& x) {
        ZZeta inv_chi_num = ZZeta::from_omega(ZOmega(BigInt(2), BigInt(1)));
        return LocalZeta(ZZeta::from_omega(x.num()) * inv_chi_num.pow(x.k()), x.k());
    }

    const ZZeta& num() const { return _num; }
    unsigned k() const { return _k; }

    bool is_zero() const { return _num.is_zero(); }
    bool operator==(const LocalZeta& o) const { return _k == o._k && _num == o._num; }
    bool operator!=(const LocalZeta& o) const { return !(*this == o); }

    LocalZeta operator+(const LocalZeta& o) const {
        unsigned k = std::max(_k, o._k);
        return LocalZeta(scaled_num(k) + o.scaled_num(k), k);
    }
    LocalZeta operator-(const LocalZeta& o) const { return *this + (-o); }
    LocalZeta operator-() const {
        LocalZeta r;
        r._num = -_num;
        r._k = _k;
        return r;
    }
    LocalZeta operator*(const LocalZeta& o) const {
        return LocalZeta(_num * o._num, _k + o._k);
    }

    LocalZeta conj() const {
        // Conjugation is a ring automorphism fixing 3, so reduction survives.
        LocalZeta r;
        r._num = _num.conj();
        r._k = _k;
        return r;
    }

    ZZeta scaled_num(unsigned k_target) const {
        ZZeta n = _num;
        for (unsigned i = _k; i < k_target; ++i) n = n + n + n;
        return n;
    }

    std::complex<double> to_complex() const {
        std::complex<double> v = _num.to_complex();
        for (unsigned i = 0; i < _k; ++i) v /= 3.0;
        return v;
    }

    friend std::ostream& operator<<(std::ostream& os, const LocalZeta& x) {
        os << x._num;
        if (x._k > 0) os << "/3^" << x._k;
        return os;
    }

private:
    void reduce() {
        if (_num.is_zero()) {
            _k = 0;
            return;
        }
        while (_k > 0 && _num.divisible_by_3()) {
            _num = _num.div3_exact();
            --_k;
        }
    }

    ZZeta _num;
    unsigned _k;
};

// Unique splitting x = a0 + a1·ζ + a2·ζ² with a_j ∈ Z[1/3, ω] (via ω = ζ³).
// Uses 1/3 = −ω/χ² to convert the 3-power denominator into a χ-power.
std::array<LocalOmega, 3> zeta_components(const LocalZeta& x);

// Inverse of zeta_components; the round trip is exact.
LocalZeta compose_zeta(const std::array<LocalOmega, 3>& a);

}  // namespace trisynth
