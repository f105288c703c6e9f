#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "octoder/errors.hpp"

namespace octoder {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < r - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

enum class FieldKind : std::uint8_t { rationals, prime_field };

/// Identifies the coefficient field: the rationals, or GF(p) for an odd prime p.
///
/// Characteristic 2 is rejected at construction; the derivation arguments this
/// library checks divide by 2, so every downstream result assumes char != 2.
class FieldSpec {
  public:
    [[nodiscard]] static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rationals, 0); }

    /// GF(p). Throws InvalidFieldError unless p is an odd prime >= 3.
    [[nodiscard]] static FieldSpec prime_field(std::uint64_t p) {
        if (p == 2)
            throw InvalidFieldError("GF(2) is not supported: the field characteristic must not be 2");
        if (!detail::is_prime_u64(p))
            throw InvalidFieldError("GF(" + std::to_string(p) + "): modulus is not prime");
        return FieldSpec(FieldKind::prime_field, p);
    }

    /// Accepts exactly "Q" or "GF(<p>)".
    [[nodiscard]] static FieldSpec parse(std::string_view text) {
        if (text == "Q") return rationals();
        if (text.size() >= 5 && text.substr(0, 3) == "GF(" && text.back() == ')') {
            std::string_view digits = text.substr(3, text.size() - 4);
            if (digits.empty()) throw InvalidFieldError("empty modulus in field spec");
            std::uint64_t p = 0;
            for (char ch : digits) {
                if (ch < '0' || ch > '9')
                    throw InvalidFieldError("malformed field spec: " + std::string(text));
                std::uint64_t digit = static_cast<std::uint64_t>(ch - '0');
                if (p > (UINT64_MAX - digit) / 10)
                    throw InvalidFieldError("field modulus out of range: " + std::string(text));
                p = p * 10 + digit;
            }
            return prime_field(p);
        }
        throw InvalidFieldError("unknown field spec: \"" + std::string(text) + "\" (expected Q or GF(p))");
    }

    [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_rationals() const noexcept { return kind_ == FieldKind::rationals; }
    [[nodiscard]] bool is_prime_field() const noexcept { return kind_ == FieldKind::prime_field; }

    /// The modulus p for GF(p); 0 for the rationals.
    [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }

    /// Field characteristic: p for GF(p), 0 for the rationals.
    [[nodiscard]] std::uint64_t characteristic() const noexcept { return modulus_; }

    [[nodiscard]] std::string to_string() const {
        return is_rationals() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    FieldSpec(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;
};

} // namespace octoder
