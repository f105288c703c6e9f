// Acceptance suite: one self-contained check per line of the project's
// contract, each printing pass/FAIL with the computed evidence. The process
// exits nonzero if any check fails. No test framework: this is the final
// gate and is meant to be readable top to bottom.

#include <octoder/cli.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace octoder;

namespace {

using Clock = std::chrono::steady_clock;

[[nodiscard]] double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

[[nodiscard]] std::vector<FieldSpec> table_fields() {
    return {FieldSpec::rationals(), FieldSpec::prime_field(3), FieldSpec::prime_field(5),
            FieldSpec::prime_field(7)};
}

[[nodiscard]] std::vector<FieldSpec> dimension_fields() {
    return {FieldSpec::rationals(), FieldSpec::prime_field(5), FieldSpec::prime_field(7)};
}

[[nodiscard]] StructureConstants perturbed_octonion(const FieldSpec& f) {
    StructureConstants sc = build_octonion(f);
    sc.set_c(1, 2, 3, Scalar::from_integer(f, 2));
    return sc;
}

[[nodiscard]] Vec random_element(const FieldSpec& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> coeff(-9, 9);
    Vec v;
    for (std::size_t i = 0; i < 8; ++i) v.push_back(Scalar::from_integer(f, coeff(rng)));
    return v;
}

bool check_table_fidelity(std::string& detail) {
    for (const FieldSpec& f : table_fields())
        if (!table_consistency_check(build_octonion(f))) {
            detail = "formula and transcribed table disagree over " + f.to_string();
            return false;
        }
    if (table_consistency_check(perturbed_octonion(FieldSpec::rationals()))) {
        detail = "perturbed fixture slipped past the table comparison";
        return false;
    }
    detail = "formula route equals the transcribed table on all 64 products over Q, GF(3), "
             "GF(5), GF(7); perturbed fixture rejected";
    return true;
}

bool check_alternativity(std::string& detail) {
    for (const FieldSpec& f : table_fields()) {
        const StructureConstants oct = build_octonion(f);
        if (!check_alternative(oct)) {
            detail = "alternative laws fail over " + f.to_string();
            return false;
        }
        if (!check_anticommutative_imaginaries(oct)) {
            detail = "imaginary units fail to anticommute over " + f.to_string();
            return false;
        }
    }
    std::mt19937_64 rng(42);
    int spot_checks = 0;
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        const StructureConstants oct = build_octonion(f);
        for (int trial = 0; trial < 100; ++trial) {
            const Vec a = random_element(f, rng);
            const Vec b = random_element(f, rng);
            if (oct.multiply(oct.multiply(a, a), b) != oct.multiply(a, oct.multiply(a, b)) ||
                oct.multiply(oct.multiply(a, b), b) != oct.multiply(a, oct.multiply(b, b))) {
                detail = "random spot check violated an alternative law over " + f.to_string();
                return false;
            }
            ++spot_checks;
        }
    }
    if (check_alternative(perturbed_octonion(FieldSpec::rationals()))) {
        detail = "perturbed fixture passed the alternative laws";
        return false;
    }
    detail = "alternative laws and anticommutativity hold over 4 fields; " +
             std::to_string(spot_checks) + "/200 random spot checks exact; perturbed fixture fails";
    return true;
}

bool check_derivation_dimension(std::string& detail) {
    const auto t0 = Clock::now();
    for (const FieldSpec& f : dimension_fields()) {
        const DerivationBasis db = derivation_space(build_octonion(f));
        if (db.maps.size() != 14) {
            detail = "Leibniz kernel has dimension " + std::to_string(db.maps.size()) +
                     " != 14 over " + f.to_string();
            return false;
        }
    }
    detail = "512x64 Leibniz kernel has dimension 14 over Q, GF(5), GF(7) (computed in " +
             std::to_string(seconds_since(t0)) + " s)";
    return true;
}

bool check_pattern_equivalence(std::string& detail) {
    for (const FieldSpec& f : dimension_fields())
        if (!verify_derivation_pattern(build_octonion(f))) {
            detail = "pattern span differs from the computed derivation space over " +
                     f.to_string();
            return false;
        }
    detail = "hard-coded 14-parameter pattern is canonically subspace-equal to the computed "
             "derivation space over Q, GF(5), GF(7)";
    return true;
}

bool check_probe_collapse(std::string& detail) {
    // Required outcome: basis probes give dimension 42 and the full probe
    // set collapses the local space to exactly the derivations (dimension
    // 14, subspace-equal). The computed truth is reported either way.
    for (const FieldSpec& f : dimension_fields()) {
        const StructureConstants oct = build_octonion(f);
        const LocalDerivationReport rep = verify_local_derivations(oct);
        if (rep.local_dim_basis_only != 42) {
            detail = "basis-probe local space has dimension " +
                     std::to_string(rep.local_dim_basis_only) + " != 42 over " + f.to_string();
            return false;
        }
        if (rep.local_dim_full != 14 || !rep.equal_to_der) {
            detail = "full-probe local space has dimension " +
                     std::to_string(rep.local_dim_full) + " != 14 over " + f.to_string() +
                     " (basis-only 42 as required); the computed space is the norm-skew block, "
                     "which strictly contains the 14-dimensional derivation space: each probe "
                     "orbit is the orthogonal imaginary hyperplane, so probe constraints "
                     "enforce skewness only and cannot force the Leibniz rule";
            return false;
        }
    }
    detail = "full probe set collapses the local space to the derivations over Q, GF(5), GF(7)";
    return true;
}

bool check_two_local_reconstruction(std::string& detail) {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(2026);
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        const StructureConstants oct = build_octonion(f);
        const DerivationBasis db = derivation_space(oct);
        const ProbeSet probes = local_probe_set(oct);
        const PairWitnessSolver solver(db, probes);

        for (int trial = 0; trial < 500; ++trial) {
            const LinearMap hidden = random_derivation(db, rng);
            const TwoLocalReport rep =
                verify_two_local(oct, db, TwoLocalTable::from_map(probes, hidden), &solver);
            if (!rep.all_pairs_witnessed || !rep.reconstructed || *rep.reconstructed != hidden ||
                !rep.agrees_on_probes) {
                detail = "honest table " + std::to_string(trial) + " over " + f.to_string() +
                         " failed to verify and reconstruct";
                return false;
            }
        }

        std::uniform_int_distribution<std::size_t> pick(0, probes.size() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            TwoLocalTable table = TwoLocalTable::from_map(probes, random_derivation(db, rng));
            const std::size_t at = pick(rng);
            table.set_value(at, vec_add(table.value(at), oct.basis_element(0)));
            const TwoLocalReport rep = verify_two_local(oct, db, table, &solver);
            if (rep.all_pairs_witnessed) {
                detail = "corrupted table " + std::to_string(trial) + " over " + f.to_string() +
                         " still had witnesses for every pair";
                return false;
            }
        }
    }
    detail = "1000/1000 hidden-derivation tables witnessed on all 406 pairs and reconstructed "
             "exactly; 100/100 corrupted tables lack a pair witness (elapsed " +
             std::to_string(seconds_since(t0)) + " s)";
    return true;
}

bool check_lie_structure(std::string& detail) {
    const DerivationBasis db = derivation_space(build_octonion(FieldSpec::rationals()));
    if (!lie_closure_check(db)) {
        detail = "a commutator of basis derivations escapes the derivation space";
        return false;
    }
    const std::size_t rank = killing_form_rank(db);
    if (rank != 14) {
        detail = "Killing form rank is " + std::to_string(rank) + " != 14 over Q";
        return false;
    }
    detail = "all 14x14 commutators stay in the derivation space; Killing form has full rank 14 "
             "over Q";
    return true;
}

bool check_witness_soundness(std::string& detail) {
    std::mt19937_64 rng(77);
    int witnesses = 0;
    for (const FieldSpec& f : {FieldSpec::rationals(), FieldSpec::prime_field(5)}) {
        const StructureConstants oct = build_octonion(f);
        const DerivationBasis db = derivation_space(oct);
        const ProbeSet probes = local_probe_set(oct);
        std::uniform_int_distribution<std::size_t> pick(0, probes.size() - 1);

        for (int trial = 0; trial < 25; ++trial) {
            const LinearMap hidden = random_derivation(db, rng);
            const TwoLocalTable table = TwoLocalTable::from_map(probes, hidden);

            const Vec& x = probes[pick(rng)];
            const auto pw = pointwise_witness(db, hidden, x);
            if (!pw || pw->apply(x) != hidden.apply(x) || !is_derivation(oct, *pw)) {
                detail = "a pointwise witness violated its defining equality or the Leibniz rule";
                return false;
            }
            ++witnesses;

            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) j = (j + 1) % probes.size();
            const auto tw = two_local_witness(db, table, probes[i], probes[j]);
            if (!tw || tw->apply(probes[i]) != table.value(i) ||
                tw->apply(probes[j]) != table.value(j) || !is_derivation(oct, *tw)) {
                detail = "a two-point witness violated its defining equalities or the Leibniz rule";
                return false;
            }
            ++witnesses;
        }
    }
    detail = "all " + std::to_string(witnesses) +
             " sampled witnesses are exact derivations matching their defining equalities";
    return true;
}

bool check_cli_contract(std::string& detail) {
    const auto run = [](std::vector<std::string> args) {
        std::ostringstream out, err;
        const int code = run_command(std::move(args), out, err);
        return std::pair<int, std::string>(code, out.str());
    };

    const auto tmp = std::filesystem::temp_directory_path() / "acceptance_perturbed.alg";
    std::ofstream(tmp) << emit_algebra_file(perturbed_octonion(FieldSpec::rationals()));

    const std::vector<std::pair<std::vector<std::string>, int>> matrix = {
        {{"check-table", "--field", "Q"}, 0},
        {{"check-alternative", "--field", "GF(7)"}, 0},
        {{"verify-pattern", "--field", "GF(5)"}, 0},
        {{"killing-rank"}, 0},
        {{"verify-2local", "--trials", "5"}, 0},
        {{"derivations", "--algebra", tmp.string()}, 0},
        {{"check-table", "--algebra", tmp.string()}, 1},
        {{"verify-pattern", "--algebra", tmp.string()}, 1},
        {{"check-table", "--field", "GF(2)"}, 2},
        {{"no-such-command"}, 2},
        {{"orbit", "--element", "1,2"}, 2},
    };
    for (const auto& [args, expected] : matrix) {
        const auto [code, out] = run(args);
        if (code != expected) {
            std::string joined;
            for (const std::string& a : args) joined += a + " ";
            detail = "exit code for `" + joined + "` was " + std::to_string(code) + ", expected " +
                     std::to_string(expected);
            return false;
        }
    }

    const std::vector<std::string> json_args{"derivations", "--matrices", "--format", "json"};
    const std::string first = run(json_args).second;
    const std::string second = run(json_args).second;
    if (first.empty() || first != second) {
        detail = "identical invocations produced different machine-readable reports";
        return false;
    }

    for (const FieldSpec& f : table_fields()) {
        const auto [code, text] = run({"emit-octonion", "--field", f.to_string()});
        if (code != 0 || !table_consistency_check(parse_algebra_file(text))) {
            detail = "emitted octonion file failed to round-trip over " + f.to_string();
            return false;
        }
    }
    detail = "exit-code matrix honored; reports byte-identical across invocations; emit/parse "
             "round trip passes over Q, GF(3), GF(5), GF(7)";
    return true;
}

} // namespace

int main() {
    struct Check {
        const char* name;
        bool (*fn)(std::string&);
    };
    const Check checks[] = {
        {"table fidelity", check_table_fidelity},
        {"alternativity", check_alternativity},
        {"derivation dimension", check_derivation_dimension},
        {"pattern equivalence", check_pattern_equivalence},
        {"probe collapse to derivations", check_probe_collapse},
        {"two-local reconstruction", check_two_local_reconstruction},
        {"Lie structure", check_lie_structure},
        {"witness soundness", check_witness_soundness},
        {"CLI contract", check_cli_contract},
    };

    int failures = 0;
    int index = 0;
    for (const Check& check : checks) {
        ++index;
        std::string detail;
        const bool ok = check.fn(detail);
        failures += ok ? 0 : 1;
        std::printf("check %d [%s] %s: %s\n", index, ok ? "pass" : "FAIL", check.name,
                    detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0)
        std::printf("acceptance: all %d checks passed\n", index);
    else
        std::printf("acceptance: %d of %d checks FAILED\n", failures, index);
    return failures == 0 ? 0 : 1;
}
