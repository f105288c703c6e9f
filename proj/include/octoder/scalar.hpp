#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "octoder/errors.hpp"
#include "octoder/field.hpp"

namespace octoder {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// An exact field element: an arbitrary-precision rational over Q, or a
/// residue in [0, p) over GF(p).
///
/// Canonical form is maintained at all times: rationals are in lowest terms
/// with positive denominator, residues are reduced mod p. Operations on
/// scalars from different fields throw FieldMismatchError.
class Scalar {
  public:
    [[nodiscard]] static Scalar zero(const FieldSpec& field) { return Scalar(field); }

    [[nodiscard]] static Scalar one(const FieldSpec& field) {
        Scalar s(field);
        if (field.is_rationals())
            s.rat_ = 1;
        else
            s.res_ = 1 % field.modulus();
        return s;
    }

    [[nodiscard]] static Scalar from_integer(const FieldSpec& field, const BigInt& value) {
        Scalar s(field);
        if (field.is_rationals()) {
            s.rat_ = value;
        } else {
            BigInt r = value % field.modulus();
            if (r < 0) r += field.modulus();
            s.res_ = r.convert_to<std::uint64_t>();
        }
        return s;
    }

    [[nodiscard]] static Scalar from_integer(const FieldSpec& field, long long value) {
        return from_integer(field, BigInt(value));
    }

    /// num/den in the given field. Throws DivisionByZeroError if den is zero
    /// (over GF(p): if den reduces to zero).
    [[nodiscard]] static Scalar ratio(const FieldSpec& field, BigInt num, BigInt den) {
        if (den == 0) throw DivisionByZeroError("zero denominator");
        if (field.is_rationals()) {
            if (den < 0) {
                num = -num;
                den = -den;
            }
            Scalar s(field);
            s.rat_ = BigRational(num, den);
            return s;
        }
        return from_integer(field, num) * from_integer(field, den).inverse();
    }

    /// Parses "n" or "a/b" (the latter over Q only). Returns nullopt on
    /// malformed text; the caller owns error reporting.
    [[nodiscard]] static std::optional<Scalar> parse(const FieldSpec& field, std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            auto value = parse_integer(text);
            if (!value) return std::nullopt;
            return from_integer(field, *value);
        }
        if (!field.is_rationals()) return std::nullopt;
        auto num = parse_integer(text.substr(0, slash));
        auto den = parse_integer(text.substr(slash + 1));
        if (!num || !den || *den <= 0) return std::nullopt;
        return ratio(field, *num, *den);
    }

    [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }

    [[nodiscard]] bool is_zero() const noexcept {
        return field_.is_rationals() ? rat_.is_zero() : res_ == 0;
    }

    [[nodiscard]] bool is_one() const noexcept {
        return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.modulus();
    }

    [[nodiscard]] Scalar operator-() const {
        Scalar s(*this);
        if (field_.is_rationals())
            s.rat_ = -s.rat_;
        else
            s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
        return s;
    }

    Scalar& operator+=(const Scalar& rhs) {
        require_same_field(rhs);
        if (field_.is_rationals()) {
            rat_ += rhs.rat_;
        } else {
            const std::uint64_t p = field_.modulus();
            std::uint64_t sum = res_ + rhs.res_;
            if (sum < res_ || sum >= p) sum -= p;
            res_ = sum;
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& rhs) { return *this += -rhs; }

    Scalar& operator*=(const Scalar& rhs) {
        require_same_field(rhs);
        if (field_.is_rationals())
            rat_ *= rhs.rat_;
        else
            res_ = detail::mulmod_u64(res_, rhs.res_, field_.modulus());
        return *this;
    }

    [[nodiscard]] friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    [[nodiscard]] friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    [[nodiscard]] friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }

    /// Multiplicative inverse. Throws DivisionByZeroError on zero.
    [[nodiscard]] Scalar inverse() const {
        if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_.to_string());
        Scalar s(*this);
        if (field_.is_rationals()) {
            s.rat_ = 1 / rat_;
        } else {
            const std::uint64_t p = field_.modulus();
            s.res_ = detail::powmod_u64(res_, p - 2, p);
        }
        return s;
    }

    [[nodiscard]] friend Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
        return lhs * rhs.inverse();
    }

    [[nodiscard]] friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        if (lhs.field_ != rhs.field_) return false;
        return lhs.field_.is_rationals() ? lhs.rat_ == rhs.rat_ : lhs.res_ == rhs.res_;
    }

    /// Numerator in lowest terms (rationals only).
    [[nodiscard]] BigInt numerator() const {
        require_rationals();
        return boost::multiprecision::numerator(rat_);
    }

    /// Denominator in lowest terms, always positive (rationals only).
    [[nodiscard]] BigInt denominator() const {
        require_rationals();
        return boost::multiprecision::denominator(rat_);
    }

    /// Canonical residue in [0, p) (prime fields only).
    [[nodiscard]] std::uint64_t residue() const {
        if (!field_.is_prime_field())
            throw FieldMismatchError("residue() requires a prime field, have " + field_.to_string());
        return res_;
    }

    [[nodiscard]] std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(res_);
        std::string out = numerator().str();
        if (denominator() != 1) out += "/" + denominator().str();
        return out;
    }

  private:
    explicit Scalar(const FieldSpec& field) : field_(field) {}

    void require_same_field(const Scalar& rhs) const {
        if (field_ != rhs.field_)
            throw FieldMismatchError("scalar fields differ: " + field_.to_string() + " vs " +
                                     rhs.field_.to_string());
    }

    void require_rationals() const {
        if (!field_.is_rationals())
            throw FieldMismatchError("rational accessor used on " + field_.to_string());
    }

    [[nodiscard]] static std::optional<BigInt> parse_integer(std::string_view text) {
        bool negative = false;
        if (!text.empty() && text.front() == '-') {
            negative = true;
            text.remove_prefix(1);
        }
        if (text.empty()) return std::nullopt;
        BigInt value = 0;
        for (char ch : text) {
            if (ch < '0' || ch > '9') return std::nullopt;
            value = value * 10 + (ch - '0');
        }
        return negative ? -value : value;
    }

    FieldSpec field_;
    BigRational rat_;
    std::uint64_t res_ = 0;
};

} // namespace octoder
