#pragma once

// Brute-force permutation sums, independent of the matrix engines. Used to
// anchor the zero-diagonal (derangement) and unit-diagonal (fixed points
// skipped) reductions.

#include <cstdint>

#include "cglab/detper.hpp"
#include "cglab/matgen.hpp"

namespace cglab {

enum class PermDomain { all, derangements };
enum class ProductRule { all_positions, skip_fixed_points };

struct OracleSpec {
    std::size_t n = 1;  // permutations of 1..n, n <= 9
    bool signed_sum = false;
    PermDomain domain = PermDomain::all;
    ProductRule rule = ProductRule::skip_fixed_points;
    EntryKind term = EntryKind::inv_diff;
    ModCtx ctx;
};

struct OracleSum {
    Residue value;
    std::uint64_t visited = 0;     // permutations enumerated
    std::uint64_t in_domain = 0;   // permutations that contributed a term
};

/// Sum over the domain of (optional sign) * prod of term(j, tau(j)).
/// An identity permutation under skip_fixed_points contributes the empty
/// product 1.
OracleSum permutation_sum(const OracleSpec& spec);

struct ReductionOutcome {
    Residue oracle;
    Residue engine;
    Quantity quantity;
    bool agree;
};

/// Compares the oracle with det (signed) or per (unsigned) of the matching
/// Cauchy-type matrix: derangements <-> zero diagonal, skipped fixed points
/// over S_n <-> unit diagonal.
ReductionOutcome reduction_compare(const OracleSpec& spec);
bool reduction_check(const OracleSpec& spec);

}  // namespace cglab
