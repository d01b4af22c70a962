#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace debruijn {

/// A symbol of Z_q. Alphabets up to q = 2^16 are supported.
using Symbol = std::uint16_t;

/// A finite string of symbols.
using Word = std::vector<Symbol>;

/// Invalid parameters or domain violations (bad gcd, even alphabet
/// without a base cycle, guard exceeded, malformed input, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A queried pattern does not occur.
struct NotFoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact arithmetic modulo q. All operations reduce to {0,...,q-1}.
class Alphabet {
public:
    explicit Alphabet(unsigned q);

    unsigned q() const { return q_; }

    Symbol reduce(long long v) const {
        long long r = v % static_cast<long long>(q_);
        if (r < 0) r += q_;
        return static_cast<Symbol>(r);
    }
    Symbol add(Symbol a, Symbol b) const { return reduce(static_cast<long long>(a) + b); }
    Symbol sub(Symbol a, Symbol b) const { return reduce(static_cast<long long>(a) - b); }
    Symbol neg(Symbol a) const { return reduce(-static_cast<long long>(a)); }
    Symbol mul(Symbol a, Symbol b) const { return reduce(static_cast<long long>(a) * b); }

    /// True iff gcd(b, q) = 1.
    bool is_unit(Symbol b) const;

    /// Modular inverse; throws DomainError if b is not a unit.
    Symbol inverse(Symbol b) const;

    /// Units of Z_q in ascending order.
    std::vector<Symbol> units() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    unsigned q_;
};

/// A rotation-equivalence class of a cyclic word, carried with a fixed
/// linear representation (the orientation). Equality compares rotation
/// classes; everything positional (index_of, rendering) reads the stored
/// orientation.
class Cycle {
public:
    Cycle() = default;
    explicit Cycle(Word symbols);

    std::size_t length() const { return symbols_.size(); }
    const Word& symbols() const { return symbols_; }

    /// Cyclic 1-based access; pos may be any integer.
    Symbol at(long long pos) const;

    /// The length-len window whose ending symbol sits at 1-based
    /// position end_pos (wrapping around the front).
    Word window_ending_at(long long end_pos, std::size_t len) const;

    /// Same cycle re-rooted so that 1-based position start becomes
    /// position 1.
    Cycle rotated_to(long long start) const;

    /// Lexicographically least rotation (canonical form for set
    /// membership and equality).
    Word least_rotation() const;

    /// Re-roots so the all-zero n-pattern is terminal in the linear
    /// representation. Throws NotFoundError if 0^n does not occur.
    Cycle oriented_at_zero(std::size_t n) const;

    friend bool operator==(const Cycle& a, const Cycle& b);

private:
    Word symbols_;
};

/// Sum of all symbols in Z_q.
Symbol weight(const Word& w, const Alphabet& a);
Symbol weight(const Cycle& c, const Alphabet& a);

/// Componentwise addition of lambda.
Word translate(const Word& w, Symbol lambda, const Alphabet& a);
Cycle translate(const Cycle& c, Symbol lambda, const Alphabet& a);

/// The q words differing from v only in the first symbol (v included).
std::vector<Word> conjugates(const Word& v, const Alphabet& a);

/// 1-based index within C of the ending symbol of x, scanning from
/// position 1 with cyclic wraparound; first match wins. Throws
/// NotFoundError if x does not occur.
std::size_t index_of(const Word& x, const Cycle& c);

/// True iff no cyclic n-window of C is a nonzero translate of another
/// n-window of C.
bool is_primitive(const Cycle& c, const Alphabet& a, std::size_t n);

/// The arithmetic-progression word (0, lambda, 2*lambda, ...,
/// (n-1)*lambda) mod q.
Word alternating_word(const Alphabet& a, Symbol lambda, std::size_t n);

/// Digit string for q <= 10, comma-separated decimal otherwise.
std::string render(const Word& w, const Alphabet& a);
std::string render(const Cycle& c, const Alphabet& a);

/// Inverse of render; throws DomainError on malformed text or symbols
/// outside Z_q.
Word parse_word(const std::string& text, const Alphabet& a);

}  // namespace debruijn
