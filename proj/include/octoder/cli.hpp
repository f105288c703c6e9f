#pragma once

#include <octoder/algebra_io.hpp>
#include <octoder/local.hpp>
#include <octoder/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace octoder {

namespace detail {

struct CommonOptions {
    std::string field = "Q";
    std::string algebra_path;
    std::string format = "text";
};

inline void add_common_options(CLI::App* sub, CommonOptions& opt, bool with_algebra = true) {
    sub->add_option("--field", opt.field, "coefficient field, Q or GF(p) for an odd prime p")
        ->capture_default_str();
    if (with_algebra)
        sub->add_option("--algebra", opt.algebra_path,
                        "algebra definition file (default: builtin octonion)");
    sub->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

[[nodiscard]] inline StructureConstants load_algebra(const CommonOptions& opt) {
    if (opt.algebra_path.empty()) return build_octonion(FieldSpec::parse(opt.field));
    std::ifstream in(opt.algebra_path);
    if (!in) throw ParseError("cannot open algebra file: " + opt.algebra_path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_algebra_file(text.str());
}

[[nodiscard]] inline Report make_report(std::string command, const StructureConstants& sc) {
    Report rep;
    rep.command = std::move(command);
    rep.algebra = sc.name();
    rep.field = sc.field().to_string();
    rep.digest = algebra_digest(sc);
    return rep;
}

[[nodiscard]] inline Json matrix_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

[[nodiscard]] inline Vec parse_element(const StructureConstants& sc, const std::string& text) {
    Vec out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::optional<Scalar> c = Scalar::parse(sc.field(), text.substr(pos, comma - pos));
        if (!c) throw ParseError("malformed coordinate in element: " + text);
        out.push_back(*c);
        pos = comma + 1;
    }
    sc.require_element(out);
    return out;
}

} // namespace detail

/// Runs one toolkit command. Returns 0 when every reported check passed (or
/// the command is informational), 1 when a mathematical check failed, and 2
/// on usage or input errors. Reports go to `out`, diagnostics to `err`.
inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for octonion derivation algebras"};
    app.require_subcommand(1);

    detail::CommonOptions opt;

    CLI::App* emit = app.add_subcommand(
        "emit-octonion", "print the builtin octonion algebra in the definition file format");
    emit->add_option("--field", opt.field, "coefficient field, Q or GF(p) for an odd prime p")
        ->capture_default_str();

    CLI::App* check_table = app.add_subcommand(
        "check-table", "compare all basis products against the reference octonion table");
    detail::add_common_options(check_table, opt);

    CLI::App* check_alt = app.add_subcommand(
        "check-alternative", "verify the alternative laws and anticommutativity on the basis");
    detail::add_common_options(check_alt, opt);

    bool with_matrices = false;
    CLI::App* derivs = app.add_subcommand(
        "derivations", "compute the derivation algebra dimension (informational)");
    detail::add_common_options(derivs, opt);
    derivs->add_flag("--matrices", with_matrices, "include the basis maps in the report");

    CLI::App* pattern = app.add_subcommand(
        "verify-pattern",
        "check that the fourteen-parameter skew pattern spans the derivation algebra");
    detail::add_common_options(pattern, opt);

    std::string element_text;
    CLI::App* orbit = app.add_subcommand(
        "orbit", "dimension of an element's image span under all derivations (informational)");
    detail::add_common_options(orbit, opt);
    orbit->add_option("--element", element_text, "comma-separated coordinates, e.g. 0,1,1,0,0,0,0,0")
        ->required();

    CLI::App* local = app.add_subcommand(
        "verify-local", "test whether probe-constrained maps collapse to the derivation algebra");
    detail::add_common_options(local, opt);

    std::uint64_t trials = 500;
    std::uint64_t seed = 0;
    CLI::App* two_local = app.add_subcommand(
        "verify-2local", "randomized pairwise-witness verification of claimed value tables");
    detail::add_common_options(two_local, opt);
    two_local->add_option("--trials", trials, "number of random tables")->capture_default_str();
    two_local->add_option("--seed", seed, "randomness seed")->capture_default_str();

    CLI::App* killing = app.add_subcommand(
        "killing-rank", "rank of the Killing form on the derivation algebra");
    detail::add_common_options(killing, opt);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (app.got_subcommand(emit)) {
            out << emit_algebra_file(build_octonion(FieldSpec::parse(opt.field)));
            return 0;
        }

        const StructureConstants sc = detail::load_algebra(opt);
        Report rep = detail::make_report(app.get_subcommands().front()->get_name(), sc);

        if (app.got_subcommand(check_table)) {
            rep.checks.push_back({"table-matches-reference", table_consistency_check(sc),
                                  Json{{"dim", sc.dim()}}});
        } else if (app.got_subcommand(check_alt)) {
            rep.checks.push_back({"alternative-laws", check_alternative(sc), Json::object()});
            rep.checks.push_back({"anticommutative-imaginaries",
                                  check_anticommutative_imaginaries(sc), Json::object()});
        } else if (app.got_subcommand(derivs)) {
            rep.informational = true;
            const DerivationBasis db = derivation_space(sc);
            Json details{{"dim", db.maps.size()}};
            if (with_matrices) {
                Json mats = Json::array();
                for (const LinearMap& m : db.maps) mats.push_back(detail::matrix_json(m));
                details["matrices"] = std::move(mats);
            }
            rep.checks.push_back({"derivation-dimension", true, std::move(details)});
        } else if (app.got_subcommand(pattern)) {
            const DerivationBasis db = derivation_space(sc);
            rep.checks.push_back({"pattern-span-equals-derivation-space",
                                  verify_derivation_pattern(sc),
                                  Json{{"derivation_dim", db.maps.size()},
                                       {"pattern_dim", derivation_pattern_size}}});
        } else if (app.got_subcommand(orbit)) {
            rep.informational = true;
            const Vec x = detail::parse_element(sc, element_text);
            const DerivationBasis db = derivation_space(sc);
            std::string canonical;
            for (const Scalar& c : x) {
                if (!canonical.empty()) canonical += ",";
                canonical += c.to_string();
            }
            rep.checks.push_back({"evaluation-orbit", true,
                                  Json{{"element", canonical},
                                       {"dim", evaluation_orbit(db, x).dim()}}});
        } else if (app.got_subcommand(local)) {
            const DerivationBasis db = derivation_space(sc);
            const LocalDerivationReport lrep = verify_local_derivations(sc);
            rep.checks.push_back({"local-space-equals-derivations", lrep.equal_to_der,
                                  Json{{"local_dim_basis_only", lrep.local_dim_basis_only},
                                       {"local_dim_full", lrep.local_dim_full},
                                       {"derivation_dim", db.maps.size()}}});
        } else if (app.got_subcommand(two_local)) {
            const DerivationBasis db = derivation_space(sc);
            const ProbeSet probes = local_probe_set(sc);
            const PairWitnessSolver solver(db, probes);
            std::mt19937_64 rng(seed);
            std::uint64_t failures = 0;
            for (std::uint64_t t = 0; t < trials; ++t) {
                const LinearMap hidden = random_derivation(db, rng);
                const TwoLocalReport trep =
                    verify_two_local(sc, db, TwoLocalTable::from_map(probes, hidden), &solver);
                if (!trep.pass() || *trep.reconstructed != hidden) ++failures;
            }
            rep.checks.push_back({"random-tables-reconstruct", failures == 0,
                                  Json{{"trials", trials}, {"seed", seed},
                                       {"failures", failures}}});
        } else if (app.got_subcommand(killing)) {
            const DerivationBasis db = derivation_space(sc);
            try {
                const std::size_t rank = killing_form_rank(db);
                rep.checks.push_back({"killing-form-rank", true,
                                      Json{{"rank", rank}, {"dim", db.maps.size()}}});
            } catch (const ClosureError& e) {
                rep.checks.push_back(
                    {"killing-form-rank", false, Json{{"error", std::string(e.what())}}});
            }
        }

        rep.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (opt.format == "json")
            out << rep.to_json().dump(2) << '\n';
        else
            out << rep.to_text();
        return rep.exit_code();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidFieldError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ProbeError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ClosureError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace octoder
