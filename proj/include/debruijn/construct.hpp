#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "debruijn/core.hpp"
#include "debruijn/homo.hpp"

namespace debruijn {

/// A cross-join variant: start cycle index i and alternating step
/// lambda, gcd(lambda, q) = 1.
struct JoinType {
    Symbol i = 0;
    Symbol lambda = 1;
};

/// Input of the recursive generator: per level j = 2..n a homomorphism
/// parameter beta_j, a join type (i_j; lambda_j), and optionally an
/// order-2 base cycle (required for even q; the level-2 entries are
/// then unused).
struct ConstructionPlan {
    Alphabet alphabet{2};
    unsigned order = 1;           // target order n
    std::vector<Symbol> betas;    // (beta_2, ..., beta_n)
    std::vector<Symbol> lambdas;  // (lambda_2, ..., lambda_n)
    std::vector<Symbol> starts;   // (i_2, ..., i_n)
    std::optional<Cycle> base;    // external order-2 base

    void validate() const;  // throws DomainError on any violated invariant
};

/// The order-1 cycle [1, 2, ..., q-1, 0]; weight 0 for odd q. Throws
/// DomainError (EvenAlphabetNeedsBase) for even q.
Cycle base_cycle(const Alphabet& a);

/// Cross-join construction by explicit cycle surgery: lifts Gamma
/// (order n-1 De Bruijn) through the linear kernel d, translates, and
/// rejoins through the alternating strings of step lambda. `a` is the
/// starting symbol of the first lifted row; the constant run
/// (beta*lambda)^{n-1} of Gamma anchors the join (any input rotation is
/// accepted). Output is oriented at 0^n.
Cycle algorithm_A(const Cycle& gamma, const Kernel& d, Symbol a, Symbol lambda);

/// Same outcome as algorithm_A, computed as one linear pass: the
/// reduced cycle is concatenated q times and inverted behind the
/// alternating run.
Cycle algorithm_B(const Cycle& gamma, const Kernel& d, Symbol a, Symbol lambda);

/// Position (1-based) of the ending symbol of the constant string
/// gamma^{n+1} within the type-(i;lambda) De Bruijn sequence of order
/// n+1 built on a base oriented at 0^n. gamma != 0, gcd(lambda,q)=1.
std::size_t cross_join_position(const Alphabet& a, unsigned n, Symbol i, Symbol lambda,
                                Symbol gamma);

/// The recursive generator: per level j lifts the previous cycle by
/// the kernel with alpha = q - beta_j, locates the cross-join via
/// cross_join_position (level 2: position beta*lambda; external base:
/// located by scanning), and splices the q translate cycles through
/// the alternating string. Deterministic in the plan; output oriented
/// at 0^n.
Cycle algorithm_AA(const ConstructionPlan& plan);

/// Visits all (B, L, I) plans for odd q in lexicographic order (B most
/// significant; beta/lambda over the units of Z_q ascending, i over
/// Z_q), constructing each cycle. Stops after `limit` plans when set,
/// or when the callback returns false.
void enumerate_family(const Alphabet& a, unsigned n, std::optional<std::uint64_t> limit,
                      const std::function<bool(const ConstructionPlan&, const Cycle&)>& visit);

namespace detail {
/// One lift-and-join level in construction order (before the final
/// re-orientation): returns the raw sequence that starts with the q
/// alternating strings. `run_pos` is the 1-based end position of the
/// run gamma^{j-1} in the 0-oriented input.
Word splice_level(const Cycle& oriented_base, unsigned target_order, const Alphabet& a,
                  Symbol beta, Symbol lambda, Symbol start, std::size_t run_pos);
}  // namespace detail

}  // namespace debruijn
