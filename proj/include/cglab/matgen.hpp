#pragma once

// Builders for every matrix family used by the checks. Math indices are
// 1-based (or 0-based for the full quadratic-form range); row r of the
// returned matrix corresponds to the r-th index of the chosen range.

#include <optional>
#include <string>
#include <vector>

#include "cglab/matrix.hpp"

namespace cglab {

enum class EntryKind {
    quad_form_pow,      // (i^2 + c i j + d j^2)^e
    inv_diff,           // 1/(j - k)
    ratio_sum_diff,     // (j + k)/(j - k)
    inv_diff_squares,   // 1/(j^2 - k^2)
    ratio_sum_squares,  // (j^2 + k^2)/(j^2 - k^2)
    prime_indicator,    // [j + k is prime]
};

enum class DiagonalPolicy { zero, one, formula };

/// 0..N-1 or 1..N-1.
enum class IndexRange { from_zero, from_one };

/// 1..p-1, 1..p or 1..(p-1)/2.
enum class IndexSet { to_p_minus_1, to_p, half };

const char* to_string(EntryKind kind);
const char* to_string(DiagonalPolicy diag);
const char* to_string(IndexRange range);
const char* to_string(IndexSet set);
EntryKind parse_entry_kind(const std::string& s);
DiagonalPolicy parse_diagonal(const std::string& s);
IndexRange parse_index_range(const std::string& s);
IndexSet parse_index_set(const std::string& s);

/// [(i^2 + c i j + d j^2)^exponent] over the chosen range. With no ctx the
/// entries are exact integers.
Matrix quad_form_matrix(i64 N, i64 c, i64 d, IndexRange range, u64 exponent, const std::optional<ModCtx>& ctx);

/// Cauchy-type matrices on 1..n with true modular inverses. Throws
/// NonUnitDenominator on the first off-diagonal denominator that is not a unit.
Matrix cauchy_type_matrix(EntryKind kind, std::size_t n, DiagonalPolicy diag, const ModCtx& ctx);

/// Same, with the index set expressed relative to the prime p.
Matrix cauchy_type_matrix(EntryKind kind, u64 p, IndexSet set, DiagonalPolicy diag, const ModCtx& ctx);

std::size_t index_set_size(u64 p, IndexSet set);

/// [1/(i^2 + c i j + d j^2)] for 1 <= i,j <= count, diagonal included.
Matrix inverse_form_matrix(i64 c, i64 d, std::size_t count, const ModCtx& ctx);

/// 0/1 matrix with entry (i,j) = 1 iff i + j is prime, 1 <= i,j <= n.
Matrix prime_indicator_matrix(std::size_t n);

enum class Symmetry { none, symmetric };

/// Random entries in [-9, 9] on the checkerboard support: cells with i + j
/// even and greater than 2 are zero.
Matrix random_checkerboard_matrix(std::size_t n, u64 seed, Symmetry symmetry = Symmetry::none);

/// Skew-symmetric variant of order 2m.
Matrix random_skew_checkerboard_matrix(std::size_t m, u64 seed);

/// Random exact matrix with entries in [lo, hi].
Matrix random_integer_matrix(std::size_t n, u64 seed, i64 lo = -9, i64 hi = 9);
/// Random residue matrix, uniform in [0, m).
Matrix random_residue_matrix(std::size_t n, const ModCtx& ctx, u64 seed);

/// P(x, y) = sum coeff[k][l] x^k y^l.
struct BivariatePoly {
    std::vector<std::vector<i64>> coeff;

    unsigned x_degree() const;
    i64 eval(i64 x, i64 y) const;
    std::string serialize() const;
    static BivariatePoly parse(const std::string& s);
};

BivariatePoly random_poly(unsigned x_degree, unsigned y_degree, u64 seed);

/// [P(i, j)] for 1 <= i,j <= n; requires deg_x P < n - 1.
Matrix poly_eval_matrix(const BivariatePoly& P, std::size_t n);

/// Rebuilds a matrix from its provenance record.
Matrix rebuild(const Provenance& prov);

/// 1-based cells (i,j) with i + j even, i + j > 2 and a nonzero entry.
std::vector<std::pair<std::size_t, std::size_t>> checkerboard_violations(const Matrix& m);

}  // namespace cglab
