#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace qhopf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
/// Malformed input: bad dimensions, unknown fields, unparsable coefficients.
struct InputError : Error {
    using Error::Error;
};
/// Arithmetic on scalars from different fields.
struct FieldMismatchError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
/// A computation contradicts a theorem that must hold on verified input;
/// either the fixture or the axiom checker is broken.
struct TheoremContradiction : Error {
    using Error::Error;
};

enum class FieldKind { Rational, Prime };

/// Which field a fixture works over: the rationals, or Z/p for prime p.
struct FieldDesc {
    FieldKind kind = FieldKind::Rational;
    std::uint64_t p = 0;

    static FieldDesc rational() { return {FieldKind::Rational, 0}; }
    static FieldDesc prime(std::uint64_t p) { return {FieldKind::Prime, p}; }

    bool operator==(const FieldDesc&) const = default;

    // p must be an actual prime; residue products are computed in uint64,
    // so p is capped below 2^31.
    void validate() const {
        if (kind == FieldKind::Rational) return;
        if (p < 2) throw InputError("prime field modulus must be >= 2");
        if (p >= (1ull << 31)) throw InputError("prime field modulus too large (p < 2^31 required)");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw InputError("prime field modulus " + std::to_string(p) + " is not prime");
    }
};

/// Exact field scalar: an arbitrary-precision rational in lowest terms, or a
/// residue mod p.  The additive identity is field-agnostic so containers can
/// be zero-initialized without knowing the field; every nonzero scalar
/// carries its field and mixing fields throws.
class Scalar {
public:
    Scalar() : kind_(FieldKind::Rational), q_(0) {}

    static Scalar rational(long num, long den = 1) {
        if (den == 0) throw DivisionByZeroError("rational with zero denominator");
        Scalar s;
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }
    static Scalar rational(const mpq_class& q) {
        Scalar s;
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    static Scalar prime(std::uint64_t r, std::uint64_t p) {
        Scalar s;
        s.kind_ = FieldKind::Prime;
        s.p_ = p;
        s.r_ = r % p;
        return s;
    }
    static Scalar zero() { return Scalar(); }
    static Scalar one(const FieldDesc& f) { return from_int(1, f); }
    static Scalar from_int(long v, const FieldDesc& f) {
        if (f.kind == FieldKind::Rational) return rational(v);
        long long m = static_cast<long long>(v) % static_cast<long long>(f.p);
        if (m < 0) m += static_cast<long long>(f.p);
        return prime(static_cast<std::uint64_t>(m), f.p);
    }

    bool is_zero() const {
        return kind_ == FieldKind::Rational ? sgn(q_) == 0 : r_ == 0;
    }
    bool is_one() const {
        return kind_ == FieldKind::Rational ? q_ == 1 : r_ == 1;
    }
    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    const mpq_class& rational_value() const { return q_; }
    std::uint64_t residue() const { return r_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        check_same(a, b);
        if (a.kind_ == FieldKind::Rational) return rational(mpq_class(a.q_ + b.q_));
        return prime(a.r_ + b.r_, a.p_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return -b;
        check_same(a, b);
        if (a.kind_ == FieldKind::Rational) return rational(mpq_class(a.q_ - b.q_));
        return prime(a.r_ + a.p_ - b.r_, a.p_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return Scalar();
        check_same(a, b);
        if (a.kind_ == FieldKind::Rational) return rational(mpq_class(a.q_ * b.q_));
        return prime(a.r_ * b.r_, a.p_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar operator-() const {
        if (is_zero()) return Scalar();
        if (kind_ == FieldKind::Rational) return rational(mpq_class(-q_));
        return prime(p_ - r_, p_);
    }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero");
        if (kind_ == FieldKind::Rational) return rational(mpq_class(1 / q_));
        // extended Euclid on (r, p)
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p_), nr = static_cast<long long>(r_);
        while (nr != 0) {
            long long q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        if (t < 0) t += static_cast<long long>(p_);
        return prime(static_cast<std::uint64_t>(t), p_);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.is_zero() != b.is_zero()) return false;
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ == FieldKind::Rational) return a.q_ == b.q_;
        return a.p_ == b.p_ && a.r_ == b.r_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" or "n" for rationals, "r mod p" for prime-field residues.
    std::string str() const {
        if (kind_ == FieldKind::Rational) return q_.get_str();
        return std::to_string(r_) + " mod " + std::to_string(p_);
    }

    /// Parse a coefficient in the context of a declared field.  Accepts
    /// integers and fractions (reduced into the field); "r mod p" only when
    /// it matches the declared prime field.  Floating-point literals are a
    /// hard error: exactness is not negotiable.
    static Scalar parse(const std::string& text, const FieldDesc& f) {
        std::string s = trim(text);
        if (s.empty()) throw InputError("empty coefficient");
        auto mod_pos = s.find(" mod ");
        if (mod_pos != std::string::npos) {
            if (f.kind != FieldKind::Prime)
                throw InputError("'" + text + "': 'mod' notation in a rational-field fixture");
            std::string r_part = trim(s.substr(0, mod_pos));
            std::string p_part = trim(s.substr(mod_pos + 5));
            std::uint64_t pv = parse_u64(p_part, text);
            if (pv != f.p)
                throw InputError("'" + text + "': modulus differs from the declared field");
            return prime(parse_u64(r_part, text) % pv, pv);
        }
        auto slash = s.find('/');
        mpq_class q;
        if (slash == std::string::npos) {
            q = mpq_class(parse_int(s, text));
        } else {
            mpz_class num = parse_int(trim(s.substr(0, slash)), text);
            mpz_class den = parse_int(trim(s.substr(slash + 1)), text);
            if (den == 0) throw InputError("'" + text + "': zero denominator");
            q = mpq_class(num) / mpq_class(den);
        }
        q.canonicalize();
        if (f.kind == FieldKind::Rational) return rational(q);
        // reduce a/b into Z/p
        Scalar num = from_int_mpz(q.get_num(), f);
        Scalar den = from_int_mpz(q.get_den(), f);
        return num / den;
    }

private:
    FieldKind kind_;
    mpq_class q_;
    std::uint64_t r_ = 0, p_ = 0;

    static void check_same(const Scalar& a, const Scalar& b) {
        if (a.kind_ != b.kind_ || (a.kind_ == FieldKind::Prime && a.p_ != b.p_))
            throw FieldMismatchError("mixed fields: " + a.str() + " vs " + b.str());
    }
    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        if (b == std::string::npos) return "";
        return s.substr(b, e - b + 1);
    }
    static mpz_class parse_int(const std::string& s, const std::string& orig) {
        if (s.empty()) throw InputError("'" + orig + "': malformed coefficient");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw InputError("'" + orig + "': malformed coefficient");
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c == '.' || c == 'e' || c == 'E')
                throw InputError("'" + orig + "': floating-point literals are rejected; coefficients must be exact");
            if (c < '0' || c > '9') throw InputError("'" + orig + "': malformed coefficient");
        }
        return mpz_class(s);
    }
    static std::uint64_t parse_u64(const std::string& s, const std::string& orig) {
        mpz_class z = parse_int(s, orig);
        if (z < 0 || !z.fits_ulong_p()) throw InputError("'" + orig + "': value out of range");
        return z.get_ui();
    }
    static Scalar from_int_mpz(const mpz_class& z, const FieldDesc& f) {
        mpz_class m = z % static_cast<unsigned long>(f.p);
        if (m < 0) m += static_cast<unsigned long>(f.p);
        return prime(m.get_ui(), f.p);
    }
};

}  // namespace qhopf
