#include <catch2/catch_amalgamated.hpp>

#include <octoder/cli.hpp>

#include "test_support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace octoder;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

[[nodiscard]] RunResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

[[nodiscard]] std::filesystem::path write_temp(const std::string& stem, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / (stem + ".alg");
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("algebra files parse to the stated sparse products") {
    const std::string text = "# tiny example\n"
                             "algebra tiny\n"
                             "dim 4\n"
                             "field Q\n"
                             "\n"
                             "p 1 2 3 1  # e1 e2 = e3\n";
    const StructureConstants sc = parse_algebra_file(text);
    REQUIRE(sc.name() == "tiny");
    REQUIRE(sc.dim() == 4);
    REQUIRE(sc.field() == FieldSpec::rationals());
    REQUIRE(sc.c(1, 2, 3) == Scalar::one(sc.field()));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                if (!(i == 1 && j == 2 && k == 3)) REQUIRE(sc.c(i, j, k).is_zero());
}

TEST_CASE("algebra file parse errors carry line numbers") {
    const auto line_of = [](const std::string& text) {
        try {
            (void)parse_algebra_file(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        FAIL("expected a parse error");
        return std::size_t{0};
    };

    SECTION("header problems") {
        REQUIRE(line_of("algebra a\nalgebra b\n") == 2);
        REQUIRE(line_of("algebra a\ndim 3\ndim 3\n") == 3);
        REQUIRE(line_of("algebra a\ndim 0\n") == 2);
        REQUIRE(line_of("algebra a\ndim 3\nfield Q\nfield Q\n") == 4);
        REQUIRE(line_of("p 0 0 0 1\n") == 1);
        REQUIRE(line_of("algebra a\ndim 2\nbogus line\n") == 3);
        REQUIRE_THROWS_AS(parse_algebra_file("algebra a\ndim 2\n"), ParseError);
        REQUIRE_THROWS_AS(parse_algebra_file(""), ParseError);
    }

    SECTION("product line problems") {
        const std::string head = "algebra a\ndim 3\nfield Q\n";
        REQUIRE(line_of(head + "p 0 0 3 1\n") == 4);
        REQUIRE(line_of(head + "p 0 0 1\n") == 4);
        REQUIRE(line_of(head + "p 0 0 0 x\n") == 4);
        REQUIRE(line_of(head + "p 0 0 0 1\np 0 0 0 2\n") == 5);
        REQUIRE(line_of(head + "p -1 0 0 1\n") == 4);
    }

    SECTION("field problems") {
        REQUIRE_THROWS_MATCHES(parse_algebra_file("algebra a\ndim 2\nfield GF(2)\n"), ParseError,
                               Catch::Matchers::MessageMatches(
                                   Catch::Matchers::ContainsSubstring("characteristic")));
        REQUIRE(line_of("algebra a\ndim 2\nfield GF(4)\n") == 3);
        REQUIRE(line_of("algebra a\ndim 2\nfield R\n") == 3);
    }

    SECTION("rational coefficients only over the rationals") {
        REQUIRE(line_of("algebra a\ndim 2\nfield GF(5)\np 0 0 0 1/2\n") == 4);
        const StructureConstants sc =
            parse_algebra_file("algebra a\ndim 2\nfield Q\np 0 0 0 -3/4\n");
        REQUIRE(sc.c(0, 0, 0) == testsupport::S(sc.field(), -3, 4));
    }
}

TEST_CASE("emitted octonion files round-trip exactly") {
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(3),
                               FieldSpec::prime_field(5), FieldSpec::prime_field(7)}) {
        const StructureConstants oct = build_octonion(f);
        const std::string text = emit_algebra_file(oct);
        const StructureConstants back = parse_algebra_file(text);
        REQUIRE(table_consistency_check(back));
        REQUIRE(back.name() == oct.name());
        REQUIRE(back.dim() == oct.dim());
        REQUIRE(back.field() == f);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j)
                for (std::size_t k = 0; k < 8; ++k) REQUIRE(back.c(i, j, k) == oct.c(i, j, k));
        REQUIRE(emit_algebra_file(back) == text);
        REQUIRE(algebra_digest(back) == algebra_digest(oct));
    }
}

TEST_CASE("content hash matches published reference values") {
    REQUIRE(fnv1a64("") == 0xcbf29ce484222325ULL);
    REQUIRE(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    REQUIRE(fnv1a64("foobar") == 0x85944171f73967e8ULL);
    REQUIRE(algebra_digest(build_octonion(FieldSpec::rationals())).size() == 16);
}

TEST_CASE("exit code 0: passing checks and informational commands") {
    REQUIRE(run({"check-table", "--field", "Q"}).code == 0);
    REQUIRE(run({"check-table", "--field", "GF(3)"}).code == 0);
    REQUIRE(run({"check-alternative", "--field", "GF(7)"}).code == 0);
    REQUIRE(run({"verify-pattern", "--field", "GF(5)"}).code == 0);
    REQUIRE(run({"verify-2local", "--trials", "3", "--seed", "1"}).code == 0);
    REQUIRE(run({"killing-rank", "--field", "Q"}).code == 0);
    REQUIRE(run({"--help"}).code == 0);
    REQUIRE(run({"emit-octonion"}).code == 0);

    const RunResult orbit = run({"orbit", "--element", "0,1,1,0,0,0,0,0", "--format", "json"});
    REQUIRE(orbit.code == 0);
    REQUIRE(Json::parse(orbit.out)["checks"][0]["dim"] == 6);

    // Informational commands stay at exit 0 even for surprising values.
    const auto broken = write_temp("cli_broken_dim",
                                   "algebra broken\ndim 2\nfield Q\np 0 0 0 1\np 0 1 1 1\n");
    REQUIRE(run({"derivations", "--algebra", broken.string()}).code == 0);
}

TEST_CASE("exit code 1: a mathematical check fails") {
    std::string text = emit_algebra_file(build_octonion(FieldSpec::rationals()));
    const std::string target = "p 1 2 3 1\n";
    text.replace(text.find(target), target.size(), "p 1 2 3 2\n");
    const auto perturbed = write_temp("cli_perturbed", text);

    REQUIRE(run({"check-table", "--algebra", perturbed.string()}).code == 1);
    REQUIRE(run({"check-alternative", "--algebra", perturbed.string()}).code == 1);
    REQUIRE(run({"verify-pattern", "--algebra", perturbed.string()}).code == 1);

    // The probe constraints stop at the norm-skew maps, strictly above the
    // derivations, so this check honestly fails on the octonions themselves.
    const RunResult local = run({"verify-local", "--format", "json"});
    REQUIRE(local.code == 1);
    const Json doc = Json::parse(local.out);
    REQUIRE(doc["pass"] == false);
    REQUIRE(doc["checks"][0]["local_dim_basis_only"] == 42);
    REQUIRE(doc["checks"][0]["local_dim_full"] == 21);
    REQUIRE(doc["checks"][0]["derivation_dim"] == 14);
}

TEST_CASE("exit code 2: usage and input errors") {
    REQUIRE(run({}).code == 2);
    REQUIRE(run({"bogus"}).code == 2);
    REQUIRE(run({"check-table", "--field", "GF(2)"}).code == 2);
    REQUIRE(run({"check-table", "--field", "GF(9)"}).code == 2);
    REQUIRE(run({"check-table", "--format", "yaml"}).code == 2);
    REQUIRE(run({"orbit"}).code == 2);
    REQUIRE(run({"orbit", "--element", "0,1"}).code == 2);
    REQUIRE(run({"orbit", "--element", "0,1,x,0,0,0,0,0"}).code == 2);
    REQUIRE(run({"derivations", "--algebra", "/nonexistent/path.alg"}).code == 2);
    REQUIRE(run({"verify-pattern", "--algebra",
                 write_temp("cli_dim2", "algebra a\ndim 2\nfield Q\n").string()})
                .code == 2);

    const RunResult bad = run({"check-table", "--algebra",
                               write_temp("cli_bad_line",
                                          "algebra a\ndim 2\nfield Q\np 9 0 0 1\n")
                                   .string()});
    REQUIRE(bad.code == 2);
    REQUIRE(bad.err.find("line 4") != std::string::npos);
}

TEST_CASE("reports are deterministic and carry stable fields") {
    const std::vector<std::string> args{"verify-2local", "--trials", "4", "--seed", "9",
                                        "--field",       "GF(5)",    "--format", "json"};
    const RunResult first = run(args);
    const RunResult second = run(args);
    REQUIRE(first.code == 0);
    REQUIRE(first.out == second.out);

    const Json doc = Json::parse(first.out);
    REQUIRE(doc["command"] == "verify-2local");
    REQUIRE(doc["algebra"] == "octonion");
    REQUIRE(doc["field"] == "GF(5)");
    REQUIRE(doc["digest"].get<std::string>().size() == 16);
    REQUIRE(doc["checks"][0]["name"] == "random-tables-reconstruct");
    REQUIRE(doc["checks"][0]["trials"] == 4);
    REQUIRE(doc["checks"][0]["failures"] == 0);
    REQUIRE(doc["pass"] == true);

    // Stable key order, not just equal content.
    REQUIRE(first.out.rfind("{\n  \"command\"", 0) == 0);

    // Different seeds still verify, and the digest pins the input algebra.
    const RunResult other = run({"verify-2local", "--trials", "4", "--seed", "10", "--field",
                                 "GF(5)", "--format", "json"});
    REQUIRE(other.code == 0);
    REQUIRE(Json::parse(other.out)["digest"] == doc["digest"]);
}

TEST_CASE("derivation basis matrices are reported on request") {
    const RunResult rr = run({"derivations", "--matrices", "--format", "json"});
    REQUIRE(rr.code == 0);
    const Json doc = Json::parse(rr.out);
    const Json& mats = doc["checks"][0]["matrices"];
    REQUIRE(mats.size() == 14);
    REQUIRE(mats[0].size() == 8);
    REQUIRE(mats[0][0].size() == 8);
    // First basis map in canonical order: the rotation pairing (e1, e2).
    REQUIRE(mats[0][1][2] == "1");
    REQUIRE(mats[0][2][1] == "-1");

    const RunResult text = run({"derivations", "--matrices"});
    REQUIRE(text.code == 0);
    REQUIRE(text.out.find("matrices[0]") != std::string::npos);
}

TEST_CASE("killing rank reports depend on the field") {
    const RunResult q = run({"killing-rank", "--format", "json"});
    REQUIRE(Json::parse(q.out)["checks"][0]["rank"] == 14);
    const RunResult gf3 = run({"killing-rank", "--field", "GF(3)", "--format", "json"});
    REQUIRE(gf3.code == 0);
    REQUIRE(Json::parse(gf3.out)["checks"][0]["rank"] == 7);
}

TEST_CASE("emitted text is the digest preimage") {
    const RunResult emitted = run({"emit-octonion", "--field", "GF(7)"});
    REQUIRE(emitted.code == 0);
    const StructureConstants oct = build_octonion(FieldSpec::prime_field(7));
    REQUIRE(emitted.out == emit_algebra_file(oct));

    std::string hex(16, '0');
    std::uint64_t h = fnv1a64(emitted.out);
    for (std::size_t t = 16; t-- > 0; h >>= 4) hex[t] = "0123456789abcdef"[h & 0xf];
    REQUIRE(hex == algebra_digest(oct));

    const RunResult table = run({"check-table", "--field", "GF(7)", "--format", "json"});
    REQUIRE(Json::parse(table.out)["digest"] == hex);
}
