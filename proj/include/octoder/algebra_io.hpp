#pragma once

#include <octoder/algebra.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace octoder {

namespace detail {

[[nodiscard]] inline std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

[[nodiscard]] inline std::optional<std::size_t> parse_index(const std::string& tok) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) return std::nullopt;
    return value;
}

} // namespace detail

/// Parses the line-oriented algebra description format:
///
///   algebra <name>
///   dim <n>
///   field Q | GF(<p>)
///   p <i> <j> <k> <c>
///
/// A product line states that the coefficient of e_k in e_i e_j is c, an
/// integer or (over Q only) a rational a/b; products never mentioned are
/// zero. Blank lines and text after `#` are ignored. Each header line must
/// appear exactly once, before the first product line. Errors carry the
/// 1-based line number: malformed tokens, indices outside [0, dim),
/// duplicate (i, j, k) lines, and rejected field specs such as GF(2).
[[nodiscard]] inline StructureConstants parse_algebra_file(std::string_view text) {
    std::optional<std::string> name;
    std::optional<std::size_t> dim;
    std::optional<FieldSpec> field;
    std::optional<StructureConstants> sc;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        const std::vector<std::string> tok = detail::split_tokens(line);
        if (tok.empty()) continue;

        if (tok[0] == "algebra") {
            if (name) throw ParseError("duplicate algebra line", line_no);
            if (tok.size() != 2) throw ParseError("expected: algebra <name>", line_no);
            name = tok[1];
        } else if (tok[0] == "dim") {
            if (dim) throw ParseError("duplicate dim line", line_no);
            if (tok.size() != 2) throw ParseError("expected: dim <n>", line_no);
            const auto n = detail::parse_index(tok[1]);
            if (!n || *n == 0) throw ParseError("dim must be a positive integer", line_no);
            dim = *n;
        } else if (tok[0] == "field") {
            if (field) throw ParseError("duplicate field line", line_no);
            if (tok.size() != 2) throw ParseError("expected: field Q|GF(<p>)", line_no);
            try {
                field = FieldSpec::parse(tok[1]);
            } catch (const InvalidFieldError& e) {
                throw ParseError(e.what(), line_no);
            }
        } else if (tok[0] == "p") {
            if (!name || !dim || !field)
                throw ParseError("product line before algebra/dim/field header", line_no);
            if (!sc) sc.emplace(*name, *field, *dim);
            if (tok.size() != 5) throw ParseError("expected: p <i> <j> <k> <c>", line_no);
            std::size_t idx[3];
            for (int t = 0; t < 3; ++t) {
                const auto v = detail::parse_index(tok[static_cast<std::size_t>(t) + 1]);
                if (!v) throw ParseError("malformed index: " + tok[static_cast<std::size_t>(t) + 1], line_no);
                if (*v >= *dim)
                    throw ParseError("index " + tok[static_cast<std::size_t>(t) + 1] +
                                         " is outside [0, " + std::to_string(*dim) + ")",
                                     line_no);
                idx[t] = *v;
            }
            if (field->is_prime_field() && tok[4].find('/') != std::string::npos)
                throw ParseError("rational coefficient requires field Q", line_no);
            const std::optional<Scalar> c = Scalar::parse(*field, tok[4]);
            if (!c) throw ParseError("malformed coefficient: " + tok[4], line_no);
            if (!seen.insert({idx[0], idx[1], idx[2]}).second)
                throw ParseError("duplicate product line for (" + std::to_string(idx[0]) + ", " +
                                     std::to_string(idx[1]) + ", " + std::to_string(idx[2]) + ")",
                                 line_no);
            sc->set_c(idx[0], idx[1], idx[2], *c);
        } else {
            throw ParseError("unknown keyword: " + tok[0], line_no);
        }
    }

    if (!name) throw ParseError("missing algebra line");
    if (!dim) throw ParseError("missing dim line");
    if (!field) throw ParseError("missing field line");
    if (!sc) sc.emplace(*name, *field, *dim);
    return std::move(*sc);
}

/// Canonical emission of the same format: header lines, then one product
/// line per nonzero coefficient in ascending (i, j, k) order, trailing
/// newline. Parsing the output reproduces the algebra, and the text is the
/// input to algebra_digest.
[[nodiscard]] inline std::string emit_algebra_file(const StructureConstants& sc) {
    std::string out;
    out += "algebra " + sc.name() + "\n";
    out += "dim " + std::to_string(sc.dim()) + "\n";
    out += "field " + sc.field().to_string() + "\n";
    for (std::size_t i = 0; i < sc.dim(); ++i)
        for (std::size_t j = 0; j < sc.dim(); ++j)
            for (std::size_t k = 0; k < sc.dim(); ++k) {
                const Scalar& c = sc.c(i, j, k);
                if (c.is_zero()) continue;
                out += "p " + std::to_string(i) + " " + std::to_string(j) + " " +
                       std::to_string(k) + " " + c.to_string() + "\n";
            }
    return out;
}

/// FNV-1a 64-bit hash, used to fingerprint report inputs.
[[nodiscard]] constexpr std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char ch : text) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// 16-hex-digit fingerprint of an algebra's canonical file form.
[[nodiscard]] inline std::string algebra_digest(const StructureConstants& sc) {
    std::uint64_t h = fnv1a64(emit_algebra_file(sc));
    std::string hex(16, '0');
    for (std::size_t t = 16; t-- > 0; h >>= 4) hex[t] = "0123456789abcdef"[h & 0xf];
    return hex;
}

} // namespace octoder
