#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "debruijn/core.hpp"
#include "debruijn/homo.hpp"

namespace debruijn::binary2 {

/// Fixed point of the seed permutation induced by x1+x2+x3 on a binary
/// De Bruijn cycle, from the residue-class sums of the stored rotation.
struct FixedSeedReport {
    unsigned order = 0;                      // n
    unsigned n_mod2 = 0;
    std::array<unsigned, 3> a{};             // a_0, a_1, a_2
    std::array<Symbol, 2> seed{};            // z_1 z_2
    std::array<std::size_t, 2> cycle_lengths{};  // {2^n, 3*2^n}
};

/// Closed-form fixed seed (rotation-sensitive: computed for the stored
/// rotation of b). Throws DomainError (NotDeBruijn) if b is not a
/// binary De Bruijn cycle.
FixedSeedReport fixed_seed(const Cycle& b);

/// Preimage of b under x1+x2+x3: the length-2^n cycle lifted from the
/// fixed seed and the length-3*2^n cycle through the other three seeds
/// (started at its smallest seed).
std::pair<Cycle, Cycle> decompose_d2(const Cycle& b);

/// First word on the short cycle (scan order from its stored start)
/// whose conjugate lies on the long cycle. Throws NotFoundError
/// (NoPairFound) only when the inputs violate the coverage
/// precondition.
std::pair<Word, Word> find_cross_join(const Cycle& short_cycle, const Cycle& long_cycle,
                                      unsigned n_out);

/// Swap the successors of the conjugate pair, merging the two cycles
/// into one cycle of length |short| + |long|.
Cycle join(const Cycle& short_cycle, const Cycle& long_cycle, const std::pair<Word, Word>& pair);

}  // namespace debruijn::binary2
