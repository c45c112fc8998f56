#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "cullis/errors.hpp"

namespace cullis {

enum class FieldKind : uint8_t { PrimeField, Rationals };

// A field descriptor: the rationals, or F_p for a prime p < 2^16.
class FieldSpec {
  public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

    static FieldSpec prime(uint32_t p) {
        if (p < 2 || p >= (1u << 16))
            throw Error("prime modulus must satisfy 2 <= p < 2^16, got " + std::to_string(p));
        if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
        return FieldSpec(FieldKind::PrimeField, p);
    }

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }

    uint32_t modulus() const {
        if (kind_ != FieldKind::PrimeField) throw Error("rationals have no modulus");
        return p_;
    }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // "Q" or "F<p>", the spelling used by all file formats.
    std::string to_string() const {
        return kind_ == FieldKind::Rationals ? "Q" : "F" + std::to_string(p_);
    }

    static FieldSpec parse(const std::string& s) {
        if (s == "Q") return rationals();
        if (s.size() >= 2 && s[0] == 'F') {
            uint64_t p = 0;
            for (size_t i = 1; i < s.size(); ++i) {
                if (s[i] < '0' || s[i] > '9') throw ParseError("bad field spec '" + s + "'");
                p = p * 10 + uint64_t(s[i] - '0');
                if (p >= (1u << 16)) throw ParseError("field modulus too large in '" + s + "'");
            }
            return prime(static_cast<uint32_t>(p));
        }
        throw ParseError("bad field spec '" + s + "' (expected Q or F<p>)");
    }

  private:
    FieldSpec(FieldKind k, uint32_t p) : kind_(k), p_(p) {}

    // Moduli are small; trial division is enough.
    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    FieldKind kind_;
    uint32_t p_;
};

// One exact field element in canonical form: value in [0, p) for F_p, a
// reduced fraction with positive denominator for Q. Equality is equality of
// canonical forms; arithmetic never mixes fields.
class Scalar {
  public:
    static Scalar from_int(const FieldSpec& f, long long v) {
        if (f.is_prime_field()) {
            int64_t p = f.modulus();
            int64_t r = static_cast<int64_t>(v % p);
            if (r < 0) r += p;
            return Scalar(f, r);
        }
        return Scalar(f, mpq_class(static_cast<long>(v)));
    }

    static Scalar from_mpz(const FieldSpec& f, const mpz_class& v) {
        if (f.is_prime_field()) {
            mpz_class r = v % f.modulus();
            if (r < 0) r += f.modulus();
            return Scalar(f, r.get_si());
        }
        return Scalar(f, mpq_class(v));
    }

    static Scalar from_mpq(const FieldSpec& f, mpq_class v) {
        if (!f.is_rationals()) throw Error("fraction scalar requires the rational field");
        v.canonicalize();
        return Scalar(f, std::move(v));
    }

    // Accepts an integer (any size, reduced mod p for F_p) or "a/b" over Q.
    static Scalar parse(const FieldSpec& f, const std::string& tok) {
        auto bad = [&] { return ParseError("bad scalar '" + tok + "'"); };
        if (tok.empty()) throw bad();
        auto slash = tok.find('/');
        if (slash != std::string::npos) {
            if (!f.is_rationals()) throw ParseError("fraction '" + tok + "' in a prime-field matrix");
            mpq_class q;
            if (q.set_str(tok, 10) != 0) throw bad();
            if (q.get_den() == 0) throw ParseError("zero denominator in '" + tok + "'");
            q.canonicalize();
            return Scalar(f, std::move(q));
        }
        mpz_class z;
        if (z.set_str(tok, 10) != 0) throw bad();
        return from_mpz(f, z);
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        return field_.is_prime_field() ? fp() == 0 : sgn(rat()) == 0;
    }
    bool is_one() const {
        return field_.is_prime_field() ? fp() == 1 : rat() == 1;
    }

    int64_t fp_value() const {
        if (!field_.is_prime_field()) throw Error("fp_value on a rational scalar");
        return fp();
    }
    const mpq_class& rat_value() const {
        if (!field_.is_rationals()) throw Error("rat_value on a prime-field scalar");
        return rat();
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        if (field_.is_prime_field()) return Scalar(field_, (fp() + o.fp()) % p());
        return Scalar(field_, mpq_class(rat() + o.rat()));
    }
    Scalar operator-(const Scalar& o) const {
        check_same(o);
        if (field_.is_prime_field()) {
            int64_t r = fp() - o.fp();
            if (r < 0) r += p();
            return Scalar(field_, r);
        }
        return Scalar(field_, mpq_class(rat() - o.rat()));
    }
    Scalar operator*(const Scalar& o) const {
        check_same(o);
        if (field_.is_prime_field()) return Scalar(field_, (fp() * o.fp()) % p());
        return Scalar(field_, mpq_class(rat() * o.rat()));
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
    Scalar operator-() const {
        if (field_.is_prime_field()) return Scalar(field_, fp() == 0 ? 0 : p() - fp());
        return Scalar(field_, mpq_class(-rat()));
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero");
        if (field_.is_prime_field()) return Scalar(field_, mod_inverse(fp(), p()));
        return Scalar(field_, mpq_class(1 / rat()));
    }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return field_.is_prime_field() ? fp() == o.fp() : rat() == o.rat();
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(fp());
        return rat().get_str();
    }

  private:
    Scalar(const FieldSpec& f, int64_t v) : field_(f), v_(v) {}
    Scalar(const FieldSpec& f, mpq_class v) : field_(f), v_(std::move(v)) {}

    int64_t fp() const { return std::get<int64_t>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }
    int64_t p() const { return field_.modulus(); }

    void check_same(const Scalar& o) const {
        if (field_ != o.field_)
            throw FieldMismatchError("mixing scalars of " + field_.to_string() + " and " +
                                     o.field_.to_string());
    }

    static int64_t mod_inverse(int64_t a, int64_t p) {
        // extended Euclid; p prime, 0 < a < p
        int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            int64_t q = r / new_r;
            int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (t < 0) t += p;
        return t;
    }

    FieldSpec field_;
    std::variant<int64_t, mpq_class> v_;
};

inline Scalar zero(const FieldSpec& f) { return Scalar::from_int(f, 0); }
inline Scalar one(const FieldSpec& f) { return Scalar::from_int(f, 1); }

// The field image of an integer sign, e.g. sign_scalar(f, -1) = -1 in f.
inline Scalar sign_scalar(const FieldSpec& f, int sign) { return Scalar::from_int(f, sign); }

} // namespace cullis
