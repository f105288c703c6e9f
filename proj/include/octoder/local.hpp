#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "octoder/derivations.hpp"

namespace octoder {

/// Ordered evaluation points; all elements share the algebra's dim and field.
using ProbeSet = std::vector<Vec>;

/// The reachable set {D(x) : D in span(db.maps)} as a subspace of F^n: the
/// column space of the n x d matrix whose k-th column is maps[k] applied to x.
[[nodiscard]] inline Subspace evaluation_orbit(const DerivationBasis& db, const Vec& x) {
    std::vector<Vec> images;
    images.reserve(db.maps.size());
    for (const LinearMap& m : db.maps) images.push_back(m.apply(x));
    return Subspace::from_span(db.field, db.algebra_dim, images);
}

/// Maps T whose value at every probe stays inside that probe's orbit:
/// {T : T x in evaluation_orbit(x) for each probe x}, as a subspace of
/// vectorized maps. Built by stacking, per probe x and per functional f
/// annihilating orbit(x), the row of f(T x) = 0 over the n^2 unknowns, then
/// taking the nullspace. The row for (f, x) has coefficient f[k] * x[m] at
/// vectorized position k*n + m.
[[nodiscard]] inline Subspace local_space(const StructureConstants& sc, const DerivationBasis& db,
                                          const ProbeSet& probes) {
    const std::size_t n = sc.dim();
    std::vector<Vec> rows;
    for (const Vec& x : probes) {
        sc.require_element(x);
        const Subspace ann = annihilator(evaluation_orbit(db, x));
        for (std::size_t t = 0; t < ann.dim(); ++t) {
            Vec row = zero_vec(sc.field(), n * n);
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& fk = ann.basis().at(t, k);
                if (fk.is_zero()) continue;
                for (std::size_t m = 0; m < n; ++m)
                    if (!x[m].is_zero()) row[k * n + m] = fk * x[m];
            }
            rows.push_back(std::move(row));
        }
    }
    return nullspace(Matrix::from_rows(sc.field(), n * n, rows));
}

/// All basis vectors plus all pairwise sums of distinct non-unit basis
/// vectors: {e_0..e_{n-1}} union {e_i + e_j : 1 <= i < j <= n-1}.
/// For n = 8 this is a 29-probe set. For the octonion algebra the probes
/// cut the local space down to the norm-skew maps (dimension 21), which
/// still strictly contain the derivations (dimension 14); see
/// verify_local_derivations.
[[nodiscard]] inline ProbeSet local_probe_set(const StructureConstants& sc) {
    const std::size_t n = sc.dim();
    ProbeSet probes;
    for (std::size_t i = 0; i < n; ++i) probes.push_back(sc.basis_element(i));
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            probes.push_back(vec_add(sc.basis_element(i), sc.basis_element(j)));
    return probes;
}

struct LocalDerivationReport {
    std::size_t local_dim_basis_only;
    std::size_t local_dim_full;
    bool equal_to_der;
};

/// Measures how far pointwise derivation-likeness is from the Leibniz rule:
/// reports the local-space dimensions over basis probes alone and over the
/// full probe set, plus whether the latter equals the derivation space. For
/// the octonion algebra the honest outcome is {42, 21, false}: the full
/// probe set stops at the norm-skew maps (every map T with T(e_0) = 0,
/// zero first row, and skew imaginary block satisfies T(x) in orbit(x) at
/// every probe, because orbit(x) is exactly the imaginary part orthogonal
/// to x), so pointwise constraints alone cannot force the Leibniz rule.
[[nodiscard]] inline LocalDerivationReport verify_local_derivations(const StructureConstants& sc) {
    const DerivationBasis db = derivation_space(sc);
    ProbeSet basis_only;
    for (std::size_t i = 0; i < sc.dim(); ++i) basis_only.push_back(sc.basis_element(i));
    const Subspace basis_space = local_space(sc, db, basis_only);
    const Subspace full_space = local_space(sc, db, local_probe_set(sc));
    return LocalDerivationReport{basis_space.dim(), full_space.dim(), full_space == db.span};
}

/// Claimed values of a (possibly nonlinear) map on a finite probe set.
class TwoLocalTable {
  public:
    TwoLocalTable(ProbeSet probes, std::vector<Vec> values)
        : probes_(std::move(probes)), values_(std::move(values)) {
        if (probes_.size() != values_.size())
            throw DimensionError("probe and value counts differ");
    }

    [[nodiscard]] static TwoLocalTable from_map(const ProbeSet& probes, const LinearMap& map) {
        std::vector<Vec> values;
        values.reserve(probes.size());
        for (const Vec& x : probes) values.push_back(map.apply(x));
        return TwoLocalTable(probes, std::move(values));
    }

    [[nodiscard]] const ProbeSet& probes() const noexcept { return probes_; }
    [[nodiscard]] std::size_t size() const noexcept { return probes_.size(); }
    [[nodiscard]] const Vec& value(std::size_t index) const { return values_.at(index); }

    void set_value(std::size_t index, Vec v) { values_.at(index) = std::move(v); }

    /// Value at a probe element; ProbeError if x is not a probe.
    [[nodiscard]] const Vec& value_at(const Vec& x) const {
        for (std::size_t i = 0; i < probes_.size(); ++i)
            if (probes_[i] == x) return values_[i];
        throw ProbeError("element is not a probe of this table");
    }

  private:
    ProbeSet probes_;
    std::vector<Vec> values_;
};

namespace detail {

/// n x d matrix whose k-th column is maps[k] applied to x.
[[nodiscard]] inline Matrix evaluation_matrix(const DerivationBasis& db, const Vec& x) {
    Matrix m(db.field, db.algebra_dim, db.maps.size());
    for (std::size_t k = 0; k < db.maps.size(); ++k) {
        const Vec image = db.maps[k].apply(x);
        for (std::size_t r = 0; r < db.algebra_dim; ++r) m.at(r, k) = image[r];
    }
    return m;
}

[[nodiscard]] inline LinearMap combine_maps(const DerivationBasis& db, const Vec& coeffs) {
    LinearMap out(db.field, db.algebra_dim, db.algebra_dim);
    for (std::size_t k = 0; k < db.maps.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        for (std::size_t r = 0; r < db.algebra_dim; ++r)
            for (std::size_t c = 0; c < db.algebra_dim; ++c)
                if (!db.maps[k].at(r, c).is_zero())
                    out.at(r, c) += coeffs[k] * db.maps[k].at(r, c);
    }
    return out;
}

} // namespace detail

/// A derivation D = sum c_k maps[k] with D x = t x, if one exists; the
/// coefficients come from the RREF particular solution (free variables zero),
/// so the returned witness is one valid choice among possibly many.
[[nodiscard]] inline std::optional<LinearMap> pointwise_witness(const DerivationBasis& db,
                                                                const LinearMap& t, const Vec& x) {
    const auto coeffs = solve(detail::evaluation_matrix(db, x), t.apply(x));
    if (!coeffs) return std::nullopt;
    return detail::combine_maps(db, *coeffs);
}

/// A derivation D with D x = table(x) and D y = table(y), if one exists:
/// 2n equations in the d coefficients. Throws ProbeError unless x and y are
/// probes of the table.
[[nodiscard]] inline std::optional<LinearMap> two_local_witness(const DerivationBasis& db,
                                                                const TwoLocalTable& table,
                                                                const Vec& x, const Vec& y) {
    const Vec& dx = table.value_at(x);
    const Vec& dy = table.value_at(y);
    const Matrix system = detail::evaluation_matrix(db, x).stack(detail::evaluation_matrix(db, y));
    Vec rhs = dx;
    rhs.insert(rhs.end(), dy.begin(), dy.end());
    const auto coeffs = solve(system, rhs);
    if (!coeffs) return std::nullopt;
    return detail::combine_maps(db, *coeffs);
}

/// The unique derivation agreeing with the table on every basis element, or
/// nullopt when the basis images do not assemble into a derivation. The
/// candidate matrix has column i = table(e_i); it is THE only linear map with
/// those basis images, so it remains to test membership in the derivation
/// span. Throws ProbeError unless all basis elements are probes.
[[nodiscard]] inline std::optional<LinearMap> reconstruct_derivation(const DerivationBasis& db,
                                                                     const TwoLocalTable& table) {
    const std::size_t n = db.algebra_dim;
    LinearMap candidate(db.field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& value = table.value_at(basis_vec(db.field, n, i));
        for (std::size_t r = 0; r < n; ++r) candidate.at(r, i) = value[r];
    }
    if (!db.span.contains(vectorize_row_major(candidate))) return std::nullopt;
    return candidate;
}

/// Precomputed pairwise witness systems for a fixed probe set. The stacked
/// constraint matrix of a probe pair does not depend on the table, so its
/// row reduction is shared across many tables: per pair we store, from the
/// RREF of [M | I], the consistency functionals (rows proving M c = b
/// unsolvable when any has nonzero pairing with b) and the solution rows
/// (pivot column plus functional yielding that coefficient). Results agree
/// exactly with two_local_witness, which re-reduces per call.
class PairWitnessSolver {
  public:
    PairWitnessSolver(const DerivationBasis& db, const ProbeSet& probes)
        : db_(&db), probe_count_(probes.size()), pairs_(probes.size() * probes.size()) {
        std::vector<Matrix> eval;
        eval.reserve(probes.size());
        for (const Vec& x : probes) eval.push_back(detail::evaluation_matrix(db, x));
        const std::size_t d = db.maps.size();
        for (std::size_t i = 0; i < probes.size(); ++i)
            for (std::size_t j = i + 1; j < probes.size(); ++j) {
                const Matrix m = eval[i].stack(eval[j]);
                const std::size_t eqs = m.rows();
                const RrefResult r = rref(m.augment(Matrix::identity(db.field, eqs)));
                PairData data;
                for (std::size_t t = 0; t < r.rank; ++t) {
                    Vec functional;
                    functional.reserve(eqs);
                    for (std::size_t c = 0; c < eqs; ++c)
                        functional.push_back(r.reduced.at(t, d + c));
                    if (r.pivot_cols[t] < d)
                        data.solution_rows.emplace_back(r.pivot_cols[t], std::move(functional));
                    else
                        data.consistency_rows.push_back(std::move(functional));
                }
                pairs_[i * probe_count_ + j] = std::move(data);
            }
    }

    [[nodiscard]] std::size_t probe_count() const noexcept { return probe_count_; }

    /// Whether a witness exists for probe pair (i, j) with claimed values
    /// (dx, dy): b = dx ++ dy must annihilate every consistency functional.
    [[nodiscard]] bool witness_exists(std::size_t i, std::size_t j, const Vec& dx,
                                      const Vec& dy) const {
        Vec b = dx;
        b.insert(b.end(), dy.begin(), dy.end());
        for (const Vec& functional : pair_at(i, j).consistency_rows)
            if (!dot(functional, b).is_zero()) return false;
        return true;
    }

    /// Witness coefficients (RREF particular solution) for pair (i, j), or
    /// nullopt when no witness exists.
    [[nodiscard]] std::optional<Vec> witness_coefficients(std::size_t i, std::size_t j,
                                                          const Vec& dx, const Vec& dy) const {
        if (!witness_exists(i, j, dx, dy)) return std::nullopt;
        Vec b = dx;
        b.insert(b.end(), dy.begin(), dy.end());
        Vec coeffs = zero_vec(db_->field, db_->maps.size());
        for (const auto& [pivot, functional] : pair_at(i, j).solution_rows)
            coeffs[pivot] = dot(functional, b);
        return coeffs;
    }

    [[nodiscard]] LinearMap combine(const Vec& coeffs) const {
        return detail::combine_maps(*db_, coeffs);
    }

  private:
    struct PairData {
        std::vector<std::pair<std::size_t, Vec>> solution_rows;
        std::vector<Vec> consistency_rows;
    };

    [[nodiscard]] const PairData& pair_at(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        if (i == j || j >= probe_count_) throw DimensionError("invalid probe pair");
        return pairs_[i * probe_count_ + j];
    }

    const DerivationBasis* db_;
    std::size_t probe_count_;
    std::vector<PairData> pairs_;
};

struct TwoLocalReport {
    bool all_pairs_witnessed;
    std::optional<LinearMap> reconstructed;
    bool agrees_on_probes;

    [[nodiscard]] bool pass() const {
        return all_pairs_witnessed && reconstructed.has_value() && agrees_on_probes;
    }
};

/// Certifies one claimed-value table: every unordered probe pair must admit a
/// two-point witness; the basis images must assemble into a derivation; and
/// that derivation must reproduce the table on every probe. A non-null
/// `solver` (precomputed for the same db and probe set) accelerates repeated
/// verification across many tables.
[[nodiscard]] inline TwoLocalReport verify_two_local(const StructureConstants& sc,
                                                     const DerivationBasis& db,
                                                     const TwoLocalTable& table,
                                                     const PairWitnessSolver* solver = nullptr) {
    const ProbeSet& probes = table.probes();
    if (db.algebra_dim != sc.dim() || db.field != sc.field())
        throw DimensionError("derivation basis does not match the algebra");
    for (const Vec& x : probes) sc.require_element(x);
    std::optional<PairWitnessSolver> local_solver;
    if (!solver) {
        local_solver.emplace(db, probes);
        solver = &*local_solver;
    }
    bool all_pairs = true;
    for (std::size_t i = 0; i < probes.size() && all_pairs; ++i)
        for (std::size_t j = i + 1; j < probes.size(); ++j)
            if (!solver->witness_exists(i, j, table.value(i), table.value(j))) {
                all_pairs = false;
                break;
            }
    std::optional<LinearMap> reconstructed = reconstruct_derivation(db, table);
    bool agrees = reconstructed.has_value();
    if (agrees)
        for (std::size_t i = 0; i < probes.size() && agrees; ++i)
            agrees = reconstructed->apply(probes[i]) == table.value(i);
    return TwoLocalReport{all_pairs, std::move(reconstructed), agrees};
}

[[nodiscard]] inline TwoLocalReport verify_two_local(const StructureConstants& sc,
                                                     const TwoLocalTable& table) {
    const DerivationBasis db = derivation_space(sc);
    return verify_two_local(sc, db, table);
}

/// A random element of span(db.maps) with integer coefficients drawn
/// uniformly from [lo, hi]; the default range keeps rational growth small
/// while exercising nontrivial parameters.
template <class Rng>
[[nodiscard]] LinearMap random_derivation(const DerivationBasis& db, Rng& rng, long long lo = -9,
                                          long long hi = 9) {
    Vec coeffs;
    coeffs.reserve(db.maps.size());
    const auto width = static_cast<std::uint64_t>(hi - lo + 1);
    for (std::size_t k = 0; k < db.maps.size(); ++k)
        coeffs.push_back(Scalar::from_integer(db.field, lo + static_cast<long long>(rng() % width)));
    return detail::combine_maps(db, coeffs);
}

} // namespace octoder
