#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "debruijn/core.hpp"

namespace debruijn {

/// A kernel d_k of k+1 variables over Z_q, stored as a dense truth
/// table. Induces the sliding-window map B_{n+k}(q) -> B_n(q). The
/// closed-form provenance (when any) is metadata only; every operation
/// reads the table.
class Kernel {
public:
    Kernel(Alphabet a, unsigned k, std::vector<Symbol> table, std::string provenance = {});

    /// d(x1,x2) = alpha*x1 + beta*x2 with alpha = q - beta. Requires
    /// gcd(beta, q) = 1; throws DomainError (InvalidBeta) otherwise.
    static Kernel linear(const Alphabet& a, Symbol beta);

    /// The binary adjacent-sum kernel d(x1,x2) = x1 + x2 mod 2.
    static Kernel lempel();

    /// Binary span-3 kernels x1 + x3 and x1 + x2 + x3.
    static Kernel binary_d1();
    static Kernel binary_d2();

    const Alphabet& alphabet() const { return alphabet_; }
    unsigned q() const { return alphabet_.q(); }
    unsigned k() const { return k_; }
    const std::string& provenance() const { return provenance_; }
    const std::vector<Symbol>& table() const { return table_; }

    /// Evaluate on k+1 symbols.
    Symbol operator()(std::span<const Symbol> args) const;

    /// Flat table index: x1*q^k + x2*q^{k-1} + ... + x_{k+1}.
    Symbol value_at(std::size_t flat) const { return table_[flat]; }

    /// Sliding-window application; |w| must exceed k (WordTooShort).
    Word apply(const Word& w) const;

    /// Latin-square test: bijective in x1 and in x_{k+1} for every
    /// fixed middle assignment.
    bool is_property_D() const { return property_d_; }

    /// Solve d(prefix, z) = target for the last variable. Requires
    /// property (D); throws DomainError (NotPropertyD) otherwise.
    Symbol solve_last(std::span<const Symbol> prefix, Symbol target) const;

    /// The inverse image z_1..z_{L+k} of a base symbol stream, started
    /// at the given length-k seed.
    Word lift_sequence(std::span<const Symbol> base, const Word& seed) const;

    friend bool operator==(const Kernel& a, const Kernel& b) {
        return a.alphabet_ == b.alphabet_ && a.k_ == b.k_ && a.table_ == b.table_;
    }

private:
    Alphabet alphabet_;
    unsigned k_;
    std::vector<Symbol> table_;          // size q^{k+1}
    std::string provenance_;
    bool property_d_ = false;
    std::vector<Symbol> solve_table_;    // prefix*q + target -> last symbol, when property (D)
};

/// The vertex-disjoint preimage cycles of a base cycle under a
/// property-(D) kernel, plus the induced permutation of Z_q^k.
struct LiftDecomposition {
    unsigned base_order = 0;             // n: window size of the base cycle
    Cycle base;
    std::vector<Cycle> cycles;           // each starts at its smallest member seed
    std::vector<std::uint32_t> seed_map; // seed index -> image seed index
};

/// Permutation of Z_q^k induced by one traversal of base from its
/// stored start; seeds are encoded base-q, z_1 most significant.
/// Throws DomainError on a non-(D) kernel or a base repeating an
/// n-window (NotVertexDisjoint).
std::vector<std::uint32_t> seed_map(const Kernel& d, const Cycle& base, unsigned base_order);

/// Groups the q^k lifted paths into closed cycles by seed recurrence.
LiftDecomposition lift_cycle_decomposition(const Kernel& d, const Cycle& base, unsigned base_order);

/// Number of q x q Latin squares, by backtracking enumeration.
/// Guarded to q <= 5.
unsigned long long count_latin_squares(const Alphabet& a);

/// Number of property-(D) kernels of span k+1: one Latin square per
/// middle assignment, i.e. A_q^(q^(k-1)). Guards: q^{k+1} <= 10^7 and
/// no 64-bit overflow (TooLarge).
unsigned long long count_property_D(const Alphabet& a, unsigned k);

/// Kernel exchange format: header "q=<int> k=<int>", then either one
/// line "linear beta=<int>" or q^{k+1} lines "x_1 ... x_{k+1} -> d".
Kernel read_kernel(std::istream& in);
void write_kernel(std::ostream& out, const Kernel& d);

/// Inline spec: "q=<int> beta=<int>" or "q=<int> d=<expr>" where expr
/// is a sum of monomials in x1..x_{k+1} with decimal coefficients,
/// e.g. "x1+x3", "2x1+x2x3+x4".
Kernel parse_kernel_spec(const std::string& spec);

namespace detail {
/// Encode/decode length-len words as base-q integers, first symbol
/// most significant.
std::size_t encode(std::span<const Symbol> w, unsigned q);
Word decode(std::size_t v, unsigned q, std::size_t len);
}  // namespace detail

}  // namespace debruijn
