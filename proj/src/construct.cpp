#include "debruijn/construct.hpp"

#include <algorithm>
#include <cassert>

namespace debruijn {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

long long mod1(long long v, long long n) {
    long long r = (v - 1) % n;
    if (r < 0) r += n;
    return r + 1;
}

/// Order m such that |c| = q^m, plus a distinct-window check; this is
/// the cheap local validation, not the oracle.
unsigned require_de_bruijn_input(const Cycle& c, const Alphabet& a) {
    std::size_t len = c.length();
    unsigned m = 0;
    std::size_t p = 1;
    while (p < len) {
        p *= a.q();
        ++m;
    }
    if (p != len || m == 0)
        throw DomainError("NotDeBruijnInput: length " + std::to_string(len) + " is not a power of q");
    std::vector<std::size_t> codes;
    codes.reserve(len);
    for (std::size_t t = 1; t <= len; ++t)
        codes.push_back(detail::encode(c.window_ending_at(static_cast<long long>(t), m), a.q()));
    std::sort(codes.begin(), codes.end());
    if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
        throw DomainError("NotDeBruijnInput: an order-" + std::to_string(m) + " window repeats");
    return m;
}

/// Recover beta from a Prop.-1 linear kernel table; throws BadParameters
/// if d is not of the form (q-beta)*x1 + beta*x2 with beta a unit.
Symbol require_linear_kernel(const Kernel& d) {
    const Alphabet& a = d.alphabet();
    if (d.k() != 1) throw DomainError("BadParameters: the recursive construction uses span-2 kernels");
    Symbol beta = d.value_at(1);  // d(0, 1)
    if (!a.is_unit(beta)) throw DomainError("BadParameters: gcd(beta, q) != 1");
    Symbol alpha = a.neg(beta);
    for (unsigned x = 0; x < a.q(); ++x)
        for (unsigned y = 0; y < a.q(); ++y)
            if (d.value_at(static_cast<std::size_t>(x) * a.q() + y) !=
                a.reduce(static_cast<long long>(alpha) * x + static_cast<long long>(beta) * y))
                throw DomainError("BadParameters: kernel is not alpha*x1 + beta*x2 with alpha + beta = 0");
    return beta;
}

/// The shared linear pass: Gp is the base rotated so the length-(j-1)
/// run of run_symbol leads; emits the raw order-j sequence starting
/// with the alternating run from `a` (increment = binv * run_symbol).
Word lift_join_raw(const Cycle& gp, unsigned j, const Alphabet& alph, Symbol binv,
                   Symbol run_symbol, Symbol a) {
    const std::size_t n_base = gp.length();
    const std::size_t total = alph.q() * n_base;
    const Symbol step = alph.mul(binv, run_symbol);
    Word out;
    out.reserve(total);
    Symbol x = a;
    out.push_back(x);
    for (std::size_t t = 2; t <= j + alph.q() - 1; ++t) {
        x = alph.add(x, step);
        out.push_back(x);
    }
    // reduced cycle: drop one run symbol, i.e. e_r = Gp[j-1+r] for
    // r <= N-j+1, then run symbols
    const std::size_t reduced = n_base - 1;
    for (std::size_t t = out.size() + 1; t <= total; ++t) {
        std::size_t r = (t - (j + alph.q())) % reduced + 1;
        Symbol e = (r <= n_base - j + 1) ? gp.at(static_cast<long long>(j - 1 + r)) : run_symbol;
        x = alph.add(x, alph.mul(binv, e));
        out.push_back(x);
    }
    return out;
}

}  // namespace

void ConstructionPlan::validate() const {
    const unsigned q = alphabet.q();
    if (order < 1) throw DomainError("target order must be >= 1");
    const std::size_t levels = order >= 1 ? order - 1 : 0;
    if (betas.size() != levels || lambdas.size() != levels || starts.size() != levels)
        throw DomainError("plan strings B, L, I must each have n-1 = " + std::to_string(levels) +
                          " entries");
    for (std::size_t t = 0; t < levels; ++t) {
        if (!alphabet.is_unit(betas[t]))
            throw DomainError("BadParameters: gcd(beta_" + std::to_string(t + 2) + "=" +
                              std::to_string(betas[t]) + ", q=" + std::to_string(q) + ") != 1");
        if (!alphabet.is_unit(lambdas[t]))
            throw DomainError("BadParameters: gcd(lambda_" + std::to_string(t + 2) + "=" +
                              std::to_string(lambdas[t]) + ", q=" + std::to_string(q) + ") != 1");
        if (starts[t] >= q)
            throw DomainError("BadParameters: i_" + std::to_string(t + 2) + " out of range");
    }
    if (base && order < 2) throw DomainError("an external base cycle needs target order >= 2");
}

Cycle base_cycle(const Alphabet& a) {
    if (a.q() % 2 == 0)
        throw DomainError(
            "EvenAlphabetNeedsBase: the order-1 base requires odd q; supply an order-2 cycle");
    Word w(a.q());
    for (unsigned s = 1; s < a.q(); ++s) w[s - 1] = static_cast<Symbol>(s);
    w[a.q() - 1] = 0;
    return Cycle(std::move(w));
}

Cycle algorithm_A(const Cycle& gamma, const Kernel& d, Symbol a, Symbol lambda) {
    const Alphabet& alph = d.alphabet();
    const unsigned q = alph.q();
    Symbol beta = require_linear_kernel(d);
    if (!alph.is_unit(lambda)) throw DomainError("BadParameters: gcd(lambda, q) != 1");
    const unsigned m = require_de_bruijn_input(gamma, alph);  // base order n-1
    const unsigned n = m + 1;
    const std::size_t nbase = gamma.length();
    const Symbol binv = alph.inverse(beta);
    const Symbol run = alph.mul(beta, lambda);  // constant run consumed by the join
    const Symbol mu = lambda;                   // alternating step = binv * run

    // rotate so the run leads (it is unique in a De Bruijn cycle)
    std::size_t run_end = index_of(Word(m, run), gamma);
    Cycle gp = gamma.rotated_to(static_cast<long long>(run_end) - m + 1);

    // row 1: the inverse image started at `a`, with n extra wrap symbols
    Word row(nbase + n);
    row[0] = a;
    for (std::size_t t = 1; t < row.size(); ++t)
        row[t] = alph.add(row[t - 1], alph.mul(binv, gp.at(static_cast<long long>(t))));

    // vertex path: first vertices of rows 1..q, then each row's body in
    // descending row order (steps (5) and (6) of the surgery)
    Word out;
    out.reserve(q * nbase + n);
    for (unsigned t = 0; t < n; ++t) out.push_back(row[t]);
    for (unsigned r = 2; r <= q; ++r)
        out.push_back(alph.add(row[n - 1], alph.mul(static_cast<Symbol>(r - 1), mu)));
    for (unsigned r = q; r >= 1; --r) {
        Symbol shift = alph.mul(static_cast<Symbol>(r - 1), mu);
        for (std::size_t t = n; t < nbase + n - 1; ++t) out.push_back(alph.add(row[t], shift));
    }
    // the emitted tail wraps around to the front
    assert(out.size() == q * nbase + n - 1);
    for (unsigned t = 0; t + 1 < n; ++t) assert(out[q * nbase + t] == out[t]);
    out.resize(q * nbase);
    return Cycle(std::move(out)).oriented_at_zero(n);
}

Cycle algorithm_B(const Cycle& gamma, const Kernel& d, Symbol a, Symbol lambda) {
    const Alphabet& alph = d.alphabet();
    Symbol beta = require_linear_kernel(d);
    if (!alph.is_unit(lambda)) throw DomainError("BadParameters: gcd(lambda, q) != 1");
    const unsigned m = require_de_bruijn_input(gamma, alph);
    const unsigned n = m + 1;
    const Symbol run = alph.mul(beta, lambda);
    std::size_t run_end = index_of(Word(m, run), gamma);
    Cycle gp = gamma.rotated_to(static_cast<long long>(run_end) - m + 1);
    Word raw = lift_join_raw(gp, n, alph, alph.inverse(beta), run, a);
    return Cycle(std::move(raw)).oriented_at_zero(n);
}

std::size_t cross_join_position(const Alphabet& a, unsigned n, Symbol i, Symbol lambda,
                                Symbol gamma) {
    if (gamma == 0) throw DomainError("GammaZero: the constant string symbol must be nonzero");
    if (!a.is_unit(lambda)) throw DomainError("BadLambda: gcd(lambda, q) != 1");
    if (n < 1) throw DomainError("cross_join_position needs n >= 1");
    const Symbol linv = a.inverse(lambda);
    const long long m = a.mul(a.sub(gamma, i), linv);
    const long long mp = a.mul(a.neg(i), linv);
    // m = m' would force gamma = 0
    assert(m != mp);
    const long long qn = static_cast<long long>(ipow(a.q(), n));
    if (i == 0) return static_cast<std::size_t>((a.q() - m) * qn + m);
    if (m < mp) return static_cast<std::size_t>((mp - m) * (qn - 1));
    return static_cast<std::size_t>((mp - m) * (qn - 1) + qn * a.q());
}

namespace detail {

Word splice_level(const Cycle& oriented_base, unsigned target_order, const Alphabet& a,
                  Symbol beta, Symbol lambda, Symbol start, std::size_t run_pos) {
    const unsigned j = target_order;
    const std::size_t nbase = oriented_base.length();
    const Symbol gamma = a.mul(beta, lambda);
    const Symbol binv = a.inverse(beta);

    // rotate so the run gamma^{j-1} leads
    Cycle gp = oriented_base.rotated_to(mod1(static_cast<long long>(run_pos) - (j - 1) + 1,
                                             static_cast<long long>(nbase)));
    for (unsigned t = 1; t < j; ++t)
        if (gp.at(t) != gamma)
            throw DomainError("internal: cross-join position does not point at the constant run");

    // the lifted row whose value at the 0-oriented start equals `start`
    // is cycle C_start; solve for the row's leading symbol
    long long z1 = mod1(static_cast<long long>(j) - static_cast<long long>(run_pos),
                        static_cast<long long>(nbase));
    long long partial = 0;
    for (long long t = 1; t < z1; ++t) partial += gp.at(t);
    Symbol a0 = a.sub(start, a.mul(binv, a.reduce(partial)));

    return lift_join_raw(gp, j, a, binv, gamma, a0);
}

}  // namespace detail

Cycle algorithm_AA(const ConstructionPlan& plan) {
    plan.validate();
    const Alphabet& a = plan.alphabet;
    const unsigned n = plan.order;

    Cycle g;
    unsigned ord;
    if (plan.base) {
        unsigned m = require_de_bruijn_input(*plan.base, a);
        if (m != 2) throw DomainError("NotDeBruijnInput: the external base must have order 2");
        g = plan.base->oriented_at_zero(2);
        ord = 2;
    } else {
        g = base_cycle(a);  // throws EvenAlphabetNeedsBase for even q
        ord = 1;
    }
    if (n < ord) throw DomainError("target order below the base order");

    std::optional<JoinType> prev;
    for (unsigned j = ord + 1; j <= n; ++j) {
        const Symbol beta = plan.betas[j - 2];
        const Symbol lambda = plan.lambdas[j - 2];
        const Symbol start = plan.starts[j - 2];
        const Symbol gamma = a.mul(beta, lambda);
        std::size_t pos;
        if (j == 2)
            pos = gamma;  // Gamma_1 = [1 2 ... (q-1) 0] puts gamma at index gamma
        else if (!prev)
            pos = index_of(Word(j - 1, gamma), g);  // external base: locate by scan
        else
            pos = cross_join_position(a, j - 2, prev->i, prev->lambda, gamma);
        Word raw = detail::splice_level(g, j, a, beta, lambda, start, pos);
        g = Cycle(std::move(raw)).oriented_at_zero(j);
        prev = JoinType{start, lambda};
    }
    return g;
}

void enumerate_family(const Alphabet& a, unsigned n, std::optional<std::uint64_t> limit,
                      const std::function<bool(const ConstructionPlan&, const Cycle&)>& visit) {
    if (a.q() % 2 == 0)
        throw DomainError("EvenAlphabetNeedsBase: family enumeration is defined for odd q");
    if (n < 2) throw DomainError("family enumeration needs n >= 2");
    const std::vector<Symbol> units = a.units();
    const unsigned levels = n - 1;

    // one odometer digit per plan entry, (B, L, I) concatenated with B
    // most significant
    std::vector<std::size_t> digit(3 * levels, 0);
    auto radix = [&](std::size_t pos) -> std::size_t {
        return pos < 2 * levels ? units.size() : a.q();
    };
    std::uint64_t produced = 0;
    for (;;) {
        if (limit && produced >= *limit) return;
        ConstructionPlan plan{a, n, {}, {}, {}, std::nullopt};
        for (unsigned t = 0; t < levels; ++t) {
            plan.betas.push_back(units[digit[t]]);
            plan.lambdas.push_back(units[digit[levels + t]]);
            plan.starts.push_back(static_cast<Symbol>(digit[2 * levels + t]));
        }
        if (!visit(plan, algorithm_AA(plan))) return;
        ++produced;
        std::size_t pos = digit.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < radix(pos)) break;
            digit[pos] = 0;
            if (pos == 0) return;
        }
    }
}

}  // namespace debruijn
