#include "debruijn/homo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace debruijn {

namespace detail {

std::size_t encode(std::span<const Symbol> w, unsigned q) {
    std::size_t v = 0;
    for (Symbol s : w) v = v * q + s;
    return v;
}

Word decode(std::size_t v, unsigned q, std::size_t len) {
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = static_cast<Symbol>(v % q);
        v /= q;
    }
    return w;
}

}  // namespace detail

namespace {

std::size_t ipow(std::size_t b, unsigned e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

Kernel::Kernel(Alphabet a, unsigned k, std::vector<Symbol> table, std::string provenance)
    : alphabet_(a), k_(k), table_(std::move(table)), provenance_(std::move(provenance)) {
    if (k_ < 1) throw DomainError("kernel span k must be >= 1");
    const unsigned q = alphabet_.q();
    const std::size_t want = ipow(q, k_ + 1);
    if (table_.size() != want)
        throw DomainError("kernel table must have q^(k+1) = " + std::to_string(want) + " entries, got " +
                          std::to_string(table_.size()));
    for (Symbol s : table_)
        if (s >= q) throw DomainError("kernel table entry out of range for q=" + std::to_string(q));

    // Latin test per middle assignment; the last-variable solve table
    // falls out of the row check. Flat index of (x1, mid, xl) is
    // (x1*middles + mid)*q + xl, and x1*middles + mid is exactly the
    // encoded length-k prefix (x1, mid).
    const std::size_t middles = ipow(q, k_ - 1);
    const std::size_t qk = ipow(q, k_);
    property_d_ = true;
    solve_table_.assign(qk * q, 0);
    std::vector<char> seen(q);
    for (std::size_t mid = 0; mid < middles && property_d_; ++mid) {
        for (unsigned x1 = 0; x1 < q && property_d_; ++x1) {
            std::fill(seen.begin(), seen.end(), 0);
            const std::size_t prefix = x1 * middles + mid;
            for (unsigned xl = 0; xl < q; ++xl) {
                Symbol v = table_[prefix * q + xl];
                if (seen[v]) {
                    property_d_ = false;
                    break;
                }
                seen[v] = 1;
                solve_table_[prefix * q + v] = static_cast<Symbol>(xl);
            }
        }
        for (unsigned xl = 0; xl < q && property_d_; ++xl) {
            std::fill(seen.begin(), seen.end(), 0);
            for (unsigned x1 = 0; x1 < q; ++x1) {
                Symbol v = table_[(x1 * middles + mid) * q + xl];
                if (seen[v]) {
                    property_d_ = false;
                    break;
                }
                seen[v] = 1;
            }
        }
    }
    if (!property_d_) solve_table_.clear();
}

Kernel Kernel::linear(const Alphabet& a, Symbol beta) {
    if (!a.is_unit(beta))
        throw DomainError("InvalidBeta: gcd(beta=" + std::to_string(beta) + ", q=" + std::to_string(a.q()) +
                          ") != 1");
    const unsigned q = a.q();
    Symbol alpha = a.neg(beta);
    std::vector<Symbol> table(static_cast<std::size_t>(q) * q);
    for (unsigned x = 0; x < q; ++x)
        for (unsigned y = 0; y < q; ++y)
            table[x * q + y] = a.reduce(static_cast<long long>(alpha) * x + static_cast<long long>(beta) * y);
    return Kernel(a, 1, std::move(table), "linear beta=" + std::to_string(beta));
}

Kernel Kernel::lempel() { return linear(Alphabet(2), 1); }

Kernel Kernel::binary_d1() {
    return Kernel(Alphabet(2), 2, {0, 1, 0, 1, 1, 0, 1, 0}, "d1");
}

Kernel Kernel::binary_d2() {
    return Kernel(Alphabet(2), 2, {0, 1, 1, 0, 1, 0, 0, 1}, "d2");
}

Symbol Kernel::operator()(std::span<const Symbol> args) const {
    if (args.size() != k_ + 1) throw DomainError("kernel expects k+1 arguments");
    return table_[detail::encode(args, q())];
}

Word Kernel::apply(const Word& w) const {
    if (w.size() <= k_)
        throw DomainError("WordTooShort: need length > k=" + std::to_string(k_));
    const std::size_t n = w.size() - k_;
    Word out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = table_[detail::encode(std::span(w).subspan(i, k_ + 1), q())];
    return out;
}

Symbol Kernel::solve_last(std::span<const Symbol> prefix, Symbol target) const {
    if (!property_d_)
        throw DomainError("NotPropertyD: the kernel is not bijective in its last variable");
    if (prefix.size() != k_) throw DomainError("solve_last expects a length-k prefix");
    return solve_table_[detail::encode(prefix, q()) * q() + target];
}

Word Kernel::lift_sequence(std::span<const Symbol> base, const Word& seed) const {
    if (seed.size() != k_) throw DomainError("seed must have length k=" + std::to_string(k_));
    if (!property_d_)
        throw DomainError("NotPropertyD: lifting requires a property-(D) kernel");
    Word z(seed);
    z.reserve(seed.size() + base.size());
    for (Symbol c : base) {
        std::span<const Symbol> tail(z.data() + z.size() - k_, k_);
        z.push_back(solve_last(tail, c));
    }
    return z;
}

namespace {

void require_vertex_disjoint(const Cycle& base, unsigned n, unsigned q) {
    std::vector<std::size_t> windows;
    windows.reserve(base.length());
    for (std::size_t p = 1; p <= base.length(); ++p) {
        Word w = base.window_ending_at(static_cast<long long>(p), n);
        windows.push_back(detail::encode(w, q));
    }
    std::sort(windows.begin(), windows.end());
    if (std::adjacent_find(windows.begin(), windows.end()) != windows.end())
        throw DomainError("NotVertexDisjoint: the base cycle repeats an n-window");
}

}  // namespace

std::vector<std::uint32_t> seed_map(const Kernel& d, const Cycle& base, unsigned base_order) {
    require_vertex_disjoint(base, base_order, d.q());
    const unsigned q = d.q();
    const std::size_t seeds = ipow(q, d.k());
    std::vector<std::uint32_t> perm(seeds);
    for (std::size_t s = 0; s < seeds; ++s) {
        Word z = d.lift_sequence(base.symbols(), detail::decode(s, q, d.k()));
        std::span<const Symbol> tail(z.data() + z.size() - d.k(), d.k());
        perm[s] = static_cast<std::uint32_t>(detail::encode(tail, q));
    }
    return perm;
}

LiftDecomposition lift_cycle_decomposition(const Kernel& d, const Cycle& base, unsigned base_order) {
    const unsigned q = d.q();
    const std::size_t seeds = ipow(q, d.k());
    LiftDecomposition out;
    out.base_order = base_order;
    out.base = base;
    out.seed_map = seed_map(d, base, base_order);

    std::vector<char> done(seeds, 0);
    for (std::size_t s = 0; s < seeds; ++s) {
        if (done[s]) continue;
        // orbit of the seed permutation, rooted at its smallest member
        std::size_t r = 0, cur = s;
        do {
            done[cur] = 1;
            cur = out.seed_map[cur];
            ++r;
            if (r > seeds)
                throw DomainError("NotPropertyD: lift failed to close within q^k traversals");
        } while (cur != s);

        Word stream;
        stream.reserve(r * base.length());
        for (std::size_t t = 0; t < r; ++t)
            stream.insert(stream.end(), base.symbols().begin(), base.symbols().end());
        Word z = d.lift_sequence(stream, detail::decode(s, q, d.k()));
        z.resize(r * base.length());  // drop the wrapped-around seed copy
        out.cycles.emplace_back(std::move(z));
    }
    return out;
}

unsigned long long count_latin_squares(const Alphabet& a) {
    const unsigned q = a.q();
    if (q > 5) throw DomainError("TooLarge: Latin square enumeration is guarded to q <= 5");
    // row-by-row backtracking with column masks
    std::vector<unsigned> colmask(q, 0);
    std::vector<std::vector<Symbol>> square(q, std::vector<Symbol>(q));
    unsigned long long count = 0;
    // fill cell (r, c) in row-major order
    auto rec = [&](auto&& self, unsigned r, unsigned c, unsigned rowmask) -> void {
        if (c == q) {
            if (r + 1 == q)
                ++count;
            else
                self(self, r + 1, 0, 0u);
            return;
        }
        for (unsigned v = 0; v < q; ++v) {
            unsigned bit = 1u << v;
            if ((rowmask & bit) || (colmask[c] & bit)) continue;
            colmask[c] |= bit;
            self(self, r, c + 1, rowmask | bit);
            colmask[c] &= ~bit;
        }
    };
    rec(rec, 0, 0, 0u);
    return count;
}

unsigned long long count_property_D(const Alphabet& a, unsigned k) {
    if (k < 1) throw DomainError("kernel span k must be >= 1");
    const unsigned q = a.q();
    long double size = std::pow(static_cast<long double>(q), static_cast<long double>(k + 1));
    if (size > 1e7) throw DomainError("TooLarge: q^(k+1) exceeds the enumeration guard");
    const unsigned long long latin = count_latin_squares(a);
    unsigned long long exp = 1;
    for (unsigned i = 1; i < k; ++i) {
        if (exp > 1000) throw DomainError("TooLarge: exponent q^(k-1) overflows");
        exp *= q;
    }
    unsigned long long result = 1;
    for (unsigned long long i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<unsigned long long>::max() / latin)
            throw DomainError("TooLarge: property-(D) count overflows 64 bits");
        result *= latin;
    }
    return result;
}

Kernel read_kernel(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            std::size_t i = line.find_first_not_of(" \t\r\n");
            if (i != std::string::npos && line[i] != '#') return line;
        }
        return {};
    };
    std::string header = next_line();
    unsigned q = 0, k = 0;
    {
        std::istringstream hs(header);
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("q=", 0) == 0)
                q = static_cast<unsigned>(std::stoul(tok.substr(2)));
            else if (tok.rfind("k=", 0) == 0)
                k = static_cast<unsigned>(std::stoul(tok.substr(2)));
            else
                throw DomainError("malformed kernel header token '" + tok + "'");
        }
    }
    if (q < 2 || k < 1) throw DomainError("kernel header must give q >= 2 and k >= 1");
    Alphabet a(q);
    std::string body = next_line();
    if (body.find("linear") != std::string::npos) {
        std::istringstream bs(body);
        std::string tok;
        Symbol beta = 0;
        bool got = false;
        while (bs >> tok) {
            if (tok.rfind("beta=", 0) == 0) {
                beta = static_cast<Symbol>(std::stoul(tok.substr(5)));
                got = true;
            }
        }
        if (!got) throw DomainError("linear kernel line must carry beta=<int>");
        if (k != 1) throw DomainError("linear kernels have span k=1");
        return Kernel::linear(a, beta);
    }
    const std::size_t entries = ipow(q, k + 1);
    std::vector<Symbol> table(entries);
    std::vector<char> seen(entries, 0);
    for (std::size_t row = 0; row < entries; ++row) {
        if (row > 0) body = next_line();
        if (body.empty()) throw DomainError("kernel table ended early");
        std::string cleaned = body;
        std::size_t arrow = cleaned.find("->");
        if (arrow == std::string::npos) throw DomainError("kernel table line missing '->': " + body);
        cleaned.replace(arrow, 2, " ");
        std::istringstream ls(cleaned);
        Word args(k + 1);
        unsigned long v;
        for (auto& x : args) {
            if (!(ls >> v) || v >= q) throw DomainError("bad kernel table line: " + body);
            x = static_cast<Symbol>(v);
        }
        if (!(ls >> v) || v >= q) throw DomainError("bad kernel table line: " + body);
        std::size_t flat = detail::encode(args, q);
        if (seen[flat]) throw DomainError("duplicate kernel table entry: " + body);
        seen[flat] = 1;
        table[flat] = static_cast<Symbol>(v);
    }
    return Kernel(a, k, std::move(table));
}

void write_kernel(std::ostream& out, const Kernel& d) {
    out << "q=" << d.q() << " k=" << d.k() << "\n";
    const std::size_t entries = ipow(d.q(), d.k() + 1);
    for (std::size_t flat = 0; flat < entries; ++flat) {
        Word args = detail::decode(flat, d.q(), d.k() + 1);
        for (Symbol s : args) out << s << ' ';
        out << "-> " << d.value_at(flat) << "\n";
    }
}

Kernel parse_kernel_spec(const std::string& spec) {
    unsigned q = 0;
    std::optional<Symbol> beta;
    std::string expr;
    std::istringstream ss(spec);
    std::string tok;
    while (ss >> tok) {
        if (tok.rfind("q=", 0) == 0)
            q = static_cast<unsigned>(std::stoul(tok.substr(2)));
        else if (tok.rfind("beta=", 0) == 0)
            beta = static_cast<Symbol>(std::stoul(tok.substr(5)));
        else if (tok.rfind("d=", 0) == 0)
            expr = tok.substr(2);
        else
            throw DomainError("malformed kernel spec token '" + tok + "'");
    }
    if (q < 2) throw DomainError("kernel spec must give q >= 2");
    Alphabet a(q);
    if (beta) return Kernel::linear(a, *beta);
    if (expr.empty()) throw DomainError("kernel spec needs beta=<int> or d=<expr>");

    // sum of monomials: [coeff][x<i>[x<j>...]]
    struct Term {
        long long coeff;
        std::vector<unsigned> vars;
    };
    std::vector<Term> terms;
    unsigned maxvar = 0;
    std::size_t i = 0;
    while (i < expr.size()) {
        Term t{1, {}};
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(expr[i]))) {
            std::size_t j = i;
            while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
            t.coeff = std::stoll(expr.substr(i, j - i));
            i = j;
            any = true;
        }
        while (i < expr.size() && expr[i] == 'x') {
            ++i;
            std::size_t j = i;
            while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) ++j;
            if (j == i) throw DomainError("variable without index in kernel expression");
            unsigned idx = static_cast<unsigned>(std::stoul(expr.substr(i, j - i)));
            if (idx == 0) throw DomainError("kernel variables are numbered from x1");
            t.vars.push_back(idx);
            maxvar = std::max(maxvar, idx);
            i = j;
            any = true;
        }
        if (!any) throw DomainError("malformed kernel expression near '" + expr.substr(i) + "'");
        terms.push_back(std::move(t));
        if (i < expr.size()) {
            if (expr[i] != '+') throw DomainError("kernel expressions are sums of monomials joined by '+'");
            ++i;
        }
    }
    if (maxvar < 2) throw DomainError("a kernel needs at least variables x1 and x2");
    const unsigned k = maxvar - 1;
    const std::size_t entries = ipow(q, k + 1);
    std::vector<Symbol> table(entries);
    for (std::size_t flat = 0; flat < entries; ++flat) {
        Word args = detail::decode(flat, q, k + 1);
        long long acc = 0;
        for (const Term& t : terms) {
            long long prod = t.coeff;
            for (unsigned v : t.vars) prod *= args[v - 1];
            acc += prod;
        }
        table[flat] = a.reduce(acc);
    }
    return Kernel(a, k, std::move(table), "d=" + expr);
}

}  // namespace debruijn
