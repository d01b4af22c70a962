#include "debruijn/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace debruijn {

Alphabet::Alphabet(unsigned q) : q_(q) {
    if (q < 2 || q > 65536)
        throw DomainError("alphabet size must satisfy 2 <= q <= 65536, got " + std::to_string(q));
}

bool Alphabet::is_unit(Symbol b) const {
    return std::gcd(static_cast<unsigned>(b), q_) == 1;
}

Symbol Alphabet::inverse(Symbol b) const {
    // extended Euclid
    long long r0 = q_, r1 = b % q_;
    long long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long d = r0 / r1;
        r0 -= d * r1;
        std::swap(r0, r1);
        t0 -= d * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw DomainError("no inverse: gcd(" + std::to_string(b) + ", " + std::to_string(q_) + ") != 1");
    return reduce(t0);
}

std::vector<Symbol> Alphabet::units() const {
    std::vector<Symbol> out;
    for (unsigned b = 1; b < q_; ++b)
        if (is_unit(static_cast<Symbol>(b))) out.push_back(static_cast<Symbol>(b));
    return out;
}

Cycle::Cycle(Word symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw DomainError("a cycle must contain at least one symbol");
}

Symbol Cycle::at(long long pos) const {
    long long n = static_cast<long long>(symbols_.size());
    long long i = (pos - 1) % n;
    if (i < 0) i += n;
    return symbols_[static_cast<std::size_t>(i)];
}

Word Cycle::window_ending_at(long long end_pos, std::size_t len) const {
    Word w(len);
    for (std::size_t j = 0; j < len; ++j)
        w[j] = at(end_pos - static_cast<long long>(len) + 1 + static_cast<long long>(j));
    return w;
}

Cycle Cycle::rotated_to(long long start) const {
    std::size_t n = symbols_.size();
    Word w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = at(start + static_cast<long long>(j));
    return Cycle(std::move(w));
}

Word Cycle::least_rotation() const {
    const std::size_t n = symbols_.size();
    const Word& s = symbols_;
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        Symbol a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    std::size_t start = std::min(i, j);
    Word out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = s[(start + t) % n];
    return out;
}

Cycle Cycle::oriented_at_zero(std::size_t n) const {
    Word zeros(n, 0);
    std::size_t end = index_of(zeros, *this);  // throws NotFoundError
    return rotated_to(static_cast<long long>(end) + 1);
}

bool operator==(const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return false;
    return a.least_rotation() == b.least_rotation();
}

Symbol weight(const Word& w, const Alphabet& a) {
    long long s = 0;
    for (Symbol x : w) s += x;
    return a.reduce(s);
}

Symbol weight(const Cycle& c, const Alphabet& a) { return weight(c.symbols(), a); }

Word translate(const Word& w, Symbol lambda, const Alphabet& a) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = a.add(w[i], lambda);
    return out;
}

Cycle translate(const Cycle& c, Symbol lambda, const Alphabet& a) {
    return Cycle(translate(c.symbols(), lambda, a));
}

std::vector<Word> conjugates(const Word& v, const Alphabet& a) {
    if (v.empty()) throw DomainError("conjugates of the empty word are undefined");
    std::vector<Word> out;
    out.reserve(a.q());
    for (unsigned s = 0; s < a.q(); ++s) {
        Word w(v);
        w[0] = static_cast<Symbol>(s);
        out.push_back(std::move(w));
    }
    return out;
}

std::size_t index_of(const Word& x, const Cycle& c) {
    if (x.empty() || x.size() > c.length())
        throw DomainError("index_of: pattern length must be in [1, cycle length]");
    for (std::size_t p = 1; p <= c.length(); ++p)
        if (c.window_ending_at(static_cast<long long>(p), x.size()) == x) return p;
    throw NotFoundError("pattern does not occur in the cycle");
}

bool is_primitive(const Cycle& c, const Alphabet& a, std::size_t n) {
    if (c.length() < n) throw DomainError("is_primitive: cycle shorter than window size");
    std::vector<Word> windows;
    windows.reserve(c.length());
    for (std::size_t p = 1; p <= c.length(); ++p)
        windows.push_back(c.window_ending_at(static_cast<long long>(p), n));
    for (std::size_t i = 0; i < windows.size(); ++i)
        for (std::size_t j = 0; j < windows.size(); ++j) {
            if (i == j) continue;
            for (unsigned lam = 1; lam < a.q(); ++lam)
                if (translate(windows[i], static_cast<Symbol>(lam), a) == windows[j]) return false;
        }
    return true;
}

Word alternating_word(const Alphabet& a, Symbol lambda, std::size_t n) {
    Word w(n);
    Symbol x = 0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = x;
        x = a.add(x, lambda);
    }
    return w;
}

std::string render(const Word& w, const Alphabet& a) {
    std::string out;
    if (a.q() <= 10) {
        out.reserve(w.size());
        for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(w[i]);
        }
    }
    return out;
}

std::string render(const Cycle& c, const Alphabet& a) { return render(c.symbols(), a); }

Word parse_word(const std::string& text, const Alphabet& a) {
    Word out;
    if (a.q() <= 10 && text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch == '\n' || ch == '\r' || ch == ' ') continue;
            if (ch < '0' || ch > '9')
                throw DomainError(std::string("invalid symbol character '") + ch + "'");
            unsigned v = static_cast<unsigned>(ch - '0');
            if (v >= a.q())
                throw DomainError("symbol " + std::to_string(v) + " out of range for q=" + std::to_string(a.q()));
            out.push_back(static_cast<Symbol>(v));
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t pos = 0;
            unsigned long v;
            try {
                v = std::stoul(tok, &pos);
            } catch (const std::exception&) {
                throw DomainError("invalid symbol token '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw DomainError("invalid symbol token '" + tok + "'");
            if (v >= a.q())
                throw DomainError("symbol " + std::to_string(v) + " out of range for q=" + std::to_string(a.q()));
            out.push_back(static_cast<Symbol>(v));
        }
    }
    if (out.empty()) throw DomainError("empty symbol string");
    return out;
}

}  // namespace debruijn
