#include "debruijn/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace debruijn::oracle {

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::size_t> window_codes(const Cycle& c, unsigned n, unsigned q) {
    std::vector<std::size_t> codes;
    codes.reserve(c.length());
    for (std::size_t p = 1; p <= c.length(); ++p)
        codes.push_back(detail::encode(c.window_ending_at(static_cast<long long>(p), n), q));
    return codes;
}

}  // namespace

VerificationReport is_de_bruijn(const Cycle& c, const Alphabet& a, unsigned n) {
    if (n < 1) throw DomainError("order must be >= 1");
    const std::size_t space = ipow(a.q(), n);
    if (space > (std::size_t{1} << 28))
        throw DomainError("TooLarge: q^n exceeds the verification guard");
    VerificationReport rep;
    rep.order = n;
    rep.alphabet = a.q();
    std::vector<std::uint32_t> counts(space, 0);
    for (std::size_t p = 1; p <= c.length(); ++p) {
        Word w = c.window_ending_at(static_cast<long long>(p), n);
        std::size_t code = detail::encode(w, a.q());
        if (counts[code]++ == 1 && !rep.first_violation) rep.first_violation = {p, w};
    }
    for (std::size_t code = 0; code < space; ++code) {
        if (counts[code] == 0)
            ++rep.missing_windows;
        else if (counts[code] > 1)
            rep.duplicate_windows += counts[code] - 1;
    }
    rep.ok = rep.missing_windows == 0 && rep.duplicate_windows == 0 && c.length() == space;
    return rep;
}

bool is_vertex_disjoint(const Cycle& c, const Alphabet& a, unsigned n) {
    auto codes = window_codes(c, n, a.q());
    std::sort(codes.begin(), codes.end());
    return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

std::vector<Cycle> enumerate_de_bruijn(const Alphabet& a, unsigned n) {
    const std::size_t space = ipow(a.q(), n);
    if (space > 64) throw DomainError("TooLarge: enumeration is guarded to q^n <= 64");
    const unsigned q = a.q();
    std::vector<Cycle> out;
    std::vector<char> visited(space, 0);
    Word seq;
    seq.reserve(space);
    // walk vertex by vertex, rooted at 0^n; each emitted symbol is the
    // last symbol of the next vertex
    auto rec = [&](auto&& self, std::size_t vertex) -> void {
        if (seq.size() == space) {
            if (vertex == 0) out.emplace_back(seq);
            return;
        }
        const bool closing = (seq.size() + 1 == space);
        for (unsigned s = 0; s < q; ++s) {
            std::size_t next = (vertex * q + s) % space;
            if (closing ? next != 0 : visited[next] != 0) continue;
            // the root stays marked; only interior vertices are undone
            if (!closing) visited[next] = 1;
            seq.push_back(static_cast<Symbol>(s));
            self(self, next);
            seq.pop_back();
            if (!closing) visited[next] = 0;
        }
    };
    visited[0] = 1;
    rec(rec, 0);
    return out;
}

std::vector<Cycle> enumerate_vertex_disjoint_cycles(const Alphabet& a, unsigned n,
                                                    std::size_t max_len) {
    const std::size_t space = ipow(a.q(), n);
    if (space > 4096) throw DomainError("TooLarge: cycle enumeration is guarded to q^n <= 4096");
    const unsigned q = a.q();
    std::vector<Cycle> out;
    std::vector<char> visited(space, 0);
    Word seq;
    std::size_t root = 0;
    // only vertices >= root may appear, so each rotation class is
    // produced exactly once, rooted at its smallest vertex
    auto rec = [&](auto&& self, std::size_t vertex) -> void {
        for (unsigned s = 0; s < q; ++s) {
            std::size_t next = (vertex * q + s) % space;
            if (next == root) {
                if (seq.size() + 1 <= max_len) {
                    seq.push_back(static_cast<Symbol>(s));
                    out.emplace_back(seq);
                    seq.pop_back();
                }
                continue;
            }
            if (seq.size() + 1 >= max_len) continue;
            if (next < root || visited[next]) continue;
            visited[next] = 1;
            seq.push_back(static_cast<Symbol>(s));
            self(self, next);
            seq.pop_back();
            visited[next] = 0;
        }
    };
    if (max_len == 0) return out;
    for (root = 0; root < space; ++root) {
        seq.clear();
        rec(rec, root);
    }
    return out;
}

bool check_lift_structure(const Kernel& d, const Cycle& base, const LiftDecomposition& expected) {
    const unsigned q = d.q();
    const unsigned n = expected.base_order;
    const unsigned k = d.k();
    const std::size_t high = ipow(q, n + k);
    if (high > (std::size_t{1} << 24))
        throw DomainError("TooLarge: q^(n+k) exceeds the brute-scan guard");

    auto base_codes = window_codes(base, n, q);
    std::vector<std::size_t> sorted_base(base_codes);
    std::sort(sorted_base.begin(), sorted_base.end());
    if (std::adjacent_find(sorted_base.begin(), sorted_base.end()) != sorted_base.end())
        return false;  // base not vertex disjoint
    std::unordered_set<std::size_t> base_set(sorted_base.begin(), sorted_base.end());

    // the preimage vertex set, by full scan
    std::unordered_set<std::size_t> preimage;
    for (std::size_t x = 0; x < high; ++x) {
        Word w = detail::decode(x, q, n + k);
        std::size_t img = detail::encode(d.apply(w), q);
        if (base_set.count(img)) preimage.insert(x);
    }

    std::unordered_set<std::size_t> covered;
    std::size_t total = 0;
    for (const Cycle& c : expected.cycles) {
        if (c.length() % base.length() != 0) return false;
        const std::size_t reps = c.length() / base.length();
        // every (n+k)-window must be a fresh preimage vertex
        for (std::size_t p = 1; p <= c.length(); ++p) {
            std::size_t code =
                detail::encode(c.window_ending_at(static_cast<long long>(p), n + k), q);
            if (!preimage.count(code)) return false;
            if (!covered.insert(code).second) return false;
        }
        total += c.length();
        // the kernel image of the cycle must be base repeated
        Word img(c.length());
        for (std::size_t p = 0; p < c.length(); ++p) {
            Word args(k + 1);
            for (unsigned j = 0; j <= k; ++j)
                args[j] = c.at(static_cast<long long>(p + j) + 1);
            img[p] = d(std::span<const Symbol>(args));
        }
        Word want;
        want.reserve(c.length());
        for (std::size_t r = 0; r < reps; ++r)
            want.insert(want.end(), base.symbols().begin(), base.symbols().end());
        if (!(Cycle(img) == Cycle(want))) return false;
    }
    return total == preimage.size() && covered.size() == preimage.size() &&
           total == ipow(q, k) * base.length();
}

}  // namespace debruijn::oracle
