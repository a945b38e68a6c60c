#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trib/exact_int.hpp"
#include "trib/oracle.hpp"

// Structural checks shared by the gtest suites and the acceptance binary.
// Each returns one message per violation; an empty result is a pass.

namespace trib::checks {

using Failures = std::vector<std::string>;

/// Oracle sized for everything below except the gap and letter scans.
const Oracle& shared_oracle();
/// Restricted scan of shared_oracle() over its full cap.
const RepetitionSummary& shared_summary();

/// A, B, C, D cumulative and a, b, c, d pointwise against the oracle for n <= max_n.
Failures oracle_sweep(std::size_t max_n);

/// Letter-count identities of the position functions for p <= p_max.
Failures letter_count_identities(ExactInt p_max);

/// position_kernel(m, p) against a direct substring scan, m <= m_max, p <= p_max.
Failures kernel_positions(int m_max, int p_max, std::size_t scan_len);

/// Gaps between occurrences of K_m (m <= m_max) in the prefix of length
/// scan_len take at most three values and are coded like the word itself.
Failures gap_patterns(int m_max, std::size_t scan_len);

/// Square segments for m in [m_lo, m_hi]: sizes, chaining, closed-form
/// bounds and split points.
Failures square_tiling(int m_lo, int m_hi);

/// Cube segments for m in [m_lo, m_hi].
Failures cube_tiling(int m_lo, int m_hi);

/// Squares ending inside the +1 block of <j,K_m,p> with kernel order in
/// [4, m] are exactly the squares ending at the matching position for p = 1.
Failures graph_embedding(int m_max, int p_max);

/// Materialized b-vectors (m <= m_max) against b_at and the oracle.
Failures materialized_b(int m_max);
/// Materialized d-vectors (m <= m_max) against d_at and the oracle.
Failures materialized_d(int m_max);

/// Closed-form segment sums and cumulative values against direct summation.
Failures segment_sums(int square_m_max, int cube_m_max);

/// Values at t_m: closed forms against the counters, m in [m_lo, m_hi].
Failures cross_formula(int m_lo, int m_hi);

/// Joins failures for display, truncated after `limit` entries.
std::string summarize(const Failures& failures, std::size_t limit = 5);

}  // namespace trib::checks
