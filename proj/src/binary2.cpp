#include "debruijn/binary2.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "debruijn/oracle.hpp"

namespace debruijn::binary2 {

namespace {

const Alphabet kBinary{2};

unsigned require_binary_de_bruijn(const Cycle& b) {
    std::size_t len = b.length();
    unsigned n = 0;
    std::size_t p = 1;
    while (p < len) {
        p <<= 1;
        ++n;
    }
    if (p != len || n == 0) throw DomainError("NotDeBruijn: length is not a power of two");
    if (!oracle::is_de_bruijn(b, kBinary, n).ok)
        throw DomainError("NotDeBruijn: the base is not a binary De Bruijn cycle of order " +
                          std::to_string(n));
    return n;
}

std::vector<std::size_t> window_codes(const Cycle& c, unsigned n) {
    std::vector<std::size_t> codes;
    codes.reserve(c.length());
    for (std::size_t p = 1; p <= c.length(); ++p)
        codes.push_back(detail::encode(c.window_ending_at(static_cast<long long>(p), n), 2));
    return codes;
}

}  // namespace

FixedSeedReport fixed_seed(const Cycle& b) {
    FixedSeedReport rep;
    rep.order = require_binary_de_bruijn(b);
    rep.n_mod2 = rep.order % 2;
    const Word& s = b.symbols();
    for (unsigned j = 0; j < 3; ++j) {
        unsigned sum = 0;
        for (std::size_t idx = (j == 0 ? 3 : j); idx <= s.size(); idx += 3) sum ^= s[idx - 1];
        rep.a[j] = sum;
    }
    // index arithmetic of a_j is mod 3
    if (rep.n_mod2 == 0) {
        rep.seed[0] = static_cast<Symbol>(rep.a[0] ^ rep.a[1]);
        rep.seed[1] = static_cast<Symbol>(rep.a[1] ^ rep.a[2]);
    } else {
        rep.seed[0] = static_cast<Symbol>(rep.a[0] ^ rep.a[2]);
        rep.seed[1] = static_cast<Symbol>(rep.a[1] ^ rep.a[0]);
    }
    rep.cycle_lengths = {b.length(), 3 * b.length()};
    return rep;
}

std::pair<Cycle, Cycle> decompose_d2(const Cycle& b) {
    const unsigned n = require_binary_de_bruijn(b);
    LiftDecomposition dec = lift_cycle_decomposition(Kernel::binary_d2(), b, n);
    const Cycle* short_c = nullptr;
    const Cycle* long_c = nullptr;
    for (const Cycle& c : dec.cycles) {
        if (c.length() == b.length())
            short_c = &c;
        else if (c.length() == 3 * b.length())
            long_c = &c;
    }
    if (!short_c || !long_c || dec.cycles.size() != 2)
        throw DomainError("unexpected lift structure under x1+x2+x3");
    return {*short_c, *long_c};
}

std::pair<Word, Word> find_cross_join(const Cycle& short_cycle, const Cycle& long_cycle,
                                      unsigned n_out) {
    std::unordered_set<std::size_t> on_long;
    for (std::size_t code : window_codes(long_cycle, n_out)) on_long.insert(code);
    const std::size_t half = std::size_t{1} << (n_out - 1);
    for (std::size_t p = 1; p <= short_cycle.length(); ++p) {
        Word v = short_cycle.window_ending_at(static_cast<long long>(p + n_out - 1), n_out);
        std::size_t code = detail::encode(v, 2);
        std::size_t flipped = code ^ half;  // conjugate: first bit toggled
        if (on_long.count(flipped)) {
            Word vp(v);
            vp[0] ^= 1;
            return {v, vp};
        }
    }
    throw NotFoundError("NoPairFound: no word on the short cycle has its conjugate on the long one");
}

Cycle join(const Cycle& short_cycle, const Cycle& long_cycle, const std::pair<Word, Word>& pair) {
    const Word& v = pair.first;
    const Word& vp = pair.second;
    if (v.size() != vp.size() || v.empty())
        throw DomainError("PairNotConjugate: the words must have equal positive length");
    for (std::size_t t = 1; t < v.size(); ++t)
        if (v[t] != vp[t]) throw DomainError("PairNotConjugate: the words differ beyond the first symbol");
    if (v[0] == vp[0]) throw DomainError("PairNotConjugate: the first symbols must differ");
    const unsigned n = static_cast<unsigned>(v.size());

    auto successors = [&](const Cycle& c) {
        std::unordered_map<std::size_t, std::size_t> succ;
        auto codes = window_codes(c, n);
        for (std::size_t t = 0; t < codes.size(); ++t)
            succ[codes[t]] = codes[(t + 1) % codes.size()];
        return succ;
    };
    auto succ = successors(short_cycle);
    auto succ_long = successors(long_cycle);
    const std::size_t vcode = detail::encode(v, 2);
    const std::size_t vpcode = detail::encode(vp, 2);
    if (!succ.count(vcode) || !succ_long.count(vpcode) || succ.count(vpcode) ||
        succ_long.count(vcode))
        throw DomainError("PairNotSplit: v must lie on the short cycle and v' on the long one");
    succ.merge(succ_long);
    std::swap(succ[vcode], succ[vpcode]);

    const std::size_t total = short_cycle.length() + long_cycle.length();
    Word out(v);
    out.reserve(total);
    std::size_t cur = vcode;
    for (std::size_t t = 1; t < total; ++t) {
        cur = succ.at(cur);
        out.push_back(static_cast<Symbol>(cur & 1));
    }
    // the emission holds n + total - 1 symbols whose tail wraps around
    // to the front; the cycle is the first `total` of them
    out.resize(total);
    return Cycle(std::move(out));
}

}  // namespace debruijn::binary2
