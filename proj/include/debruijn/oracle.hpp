#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "debruijn/core.hpp"
#include "debruijn/homo.hpp"

namespace debruijn::oracle {

/// Outcome of the exhaustive window check. ok holds exactly when the
/// sequence has length q^n and every n-window occurs once.
struct VerificationReport {
    bool ok = false;
    unsigned order = 0;
    unsigned alphabet = 0;
    std::uint64_t missing_windows = 0;
    std::uint64_t duplicate_windows = 0;
    std::optional<std::pair<std::size_t, Word>> first_violation;  // 1-based position, window
};

/// Brute-force De Bruijn check: counts every cyclic n-window.
VerificationReport is_de_bruijn(const Cycle& c, const Alphabet& a, unsigned n);

/// True iff all cyclic n-windows of C are distinct.
bool is_vertex_disjoint(const Cycle& c, const Alphabet& a, unsigned n);

/// All De Bruijn cycles of order n by Hamiltonian backtracking on
/// B_n(q), each rooted at the all-zero vertex. Guard: q^n <= 64.
std::vector<Cycle> enumerate_de_bruijn(const Alphabet& a, unsigned n);

/// All vertex-disjoint cycles in B_n(q) with length <= max_len, one
/// representative per rotation class (rooted at the smallest vertex on
/// the cycle). Guard: q^n <= 4096.
std::vector<Cycle> enumerate_vertex_disjoint_cycles(const Alphabet& a, unsigned n,
                                                    std::size_t max_len);

/// Recomputes the preimage relation of the base cycle by scanning all
/// q^(n+k) vertices and confirms the decomposition's cycles, lengths,
/// disjointness and coverage. Never calls the lifting machinery; the
/// kernel is only evaluated as a table.
bool check_lift_structure(const Kernel& d, const Cycle& base, const LiftDecomposition& expected);

}  // namespace debruijn::oracle
