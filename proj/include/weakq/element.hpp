#pragma once

/// Words over the generator alphabet {E_i, F_i, K_i, Kb_i, J} and finite
/// linear combinations of words with Q(q) coefficients (the free algebra).
///
/// Letters are packed into single bytes whose numeric order realizes the
/// alphabet ranking F_1 < ... < F_n < Kb_1 < ... < Kb_n < K_1 < ... < K_n
/// < J < E_1 < ... < E_n, so that word comparison (total length first, then
/// left-lexicographic) is a byte-wise comparison.  This is the monomial
/// order used by the rewriting engine; it is multiplication compatible and
/// well-founded on each length class.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weakq/rational.hpp"

namespace weakq {

enum class LetterKind : std::uint8_t { F = 0, Kbar = 1, K = 2, J = 3, E = 4 };

struct Letter {
    LetterKind kind;
    int index;  // 1..n for E/F/K/Kbar, 0 for J

    friend bool operator==(const Letter&, const Letter&) = default;
};

namespace detail {
inline std::uint8_t encode_letter(LetterKind k, int index) {
    return static_cast<std::uint8_t>((static_cast<std::uint8_t>(k) << 3) | static_cast<std::uint8_t>(index));
}
}  // namespace detail

inline std::uint8_t letter_byte(const Letter& l) {
    return detail::encode_letter(l.kind, l.kind == LetterKind::J ? 0 : l.index);
}
inline LetterKind byte_kind(std::uint8_t b) { return static_cast<LetterKind>(b >> 3); }
inline int byte_index(std::uint8_t b) { return b & 7; }
inline Letter byte_letter(std::uint8_t b) { return Letter{byte_kind(b), byte_index(b)}; }

inline Letter letter_E(int i) { return {LetterKind::E, i}; }
inline Letter letter_F(int i) { return {LetterKind::F, i}; }
inline Letter letter_K(int i) { return {LetterKind::K, i}; }
inline Letter letter_Kbar(int i) { return {LetterKind::Kbar, i}; }
inline Letter letter_J() { return {LetterKind::J, 0}; }

/// A word in the free monoid; the empty word is the unit 1.
class Word {
public:
    using Bytes = std::basic_string<std::uint8_t>;

    Word() = default;
    explicit Word(Bytes b) : b_(std::move(b)) {}
    explicit Word(const Letter& l) { b_.push_back(letter_byte(l)); }

    static Word power(const Letter& l, int k) {
        Word w;
        w.b_.assign(static_cast<size_t>(k), letter_byte(l));
        return w;
    }

    size_t size() const { return b_.size(); }
    bool empty() const { return b_.empty(); }
    std::uint8_t byte_at(size_t i) const { return b_[i]; }
    Letter letter_at(size_t i) const { return byte_letter(b_[i]); }
    const Bytes& bytes() const { return b_; }

    void push_back(const Letter& l) { b_.push_back(letter_byte(l)); }
    void pop_back() { b_.pop_back(); }

    friend Word operator*(const Word& a, const Word& b) { return Word(a.b_ + b.b_); }

    Word reversed() const { return Word(Bytes(b_.rbegin(), b_.rend())); }
    Word subword(size_t pos, size_t len) const { return Word(b_.substr(pos, len)); }

    /// Degree-lexicographic comparison: total length first, then byte order.
    friend bool operator<(const Word& a, const Word& b) {
        if (a.b_.size() != b.b_.size()) return a.b_.size() < b.b_.size();
        return a.b_ < b.b_;
    }
    friend bool operator==(const Word& a, const Word& b) { return a.b_ == b.b_; }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
    friend bool operator>(const Word& a, const Word& b) { return b < a; }
    friend bool operator<=(const Word& a, const Word& b) { return !(b < a); }
    friend bool operator>=(const Word& a, const Word& b) { return !(a < b); }

private:
    Bytes b_;
};

struct WordHash {
    size_t operator()(const Word& w) const noexcept {
        size_t h = 1469598103934665603ull;
        for (std::uint8_t c : w.bytes()) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Z^n multidegree: deg E_i = alpha_i, deg F_i = -alpha_i, K/Kbar/J = 0.
inline std::vector<int> multidegree(const Word& w, int n) {
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < w.size(); ++i) {
        Letter l = w.letter_at(i);
        if (l.kind == LetterKind::E) deg[static_cast<size_t>(l.index - 1)] += 1;
        if (l.kind == LetterKind::F) deg[static_cast<size_t>(l.index - 1)] -= 1;
    }
    return deg;
}

/// Finite Q(q)-linear combination of words; no zero coefficients stored.
/// The map ordering is the monomial order, so rbegin() is the leading term.
class Element {
public:
    using Terms = std::map<Word, RatFunc>;

    Element() = default;

    static Element unit() { return of_word(Word()); }
    static Element of_word(const Word& w, RatFunc c = RatFunc(1)) {
        Element e;
        if (!c.is_zero()) e.terms_.emplace(w, std::move(c));
        return e;
    }
    static Element of_letter(const Letter& l, RatFunc c = RatFunc(1)) {
        return of_word(Word(l), std::move(c));
    }
    static Element scalar(const RatFunc& c) { return of_word(Word(), c); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    const Word& leading_word() const {
        if (is_zero()) throw std::domain_error("Element: leading word of zero");
        return terms_.rbegin()->first;
    }
    const RatFunc& leading_coeff() const {
        if (is_zero()) throw std::domain_error("Element: leading coefficient of zero");
        return terms_.rbegin()->second;
    }

    RatFunc coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? RatFunc() : it->second;
    }

    void add_term(const Word& w, const RatFunc& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Removes and returns the leading (order-maximal) term.
    std::pair<Word, RatFunc> pop_leading() {
        auto node = terms_.extract(std::prev(terms_.end()));
        return {std::move(node.key()), std::move(node.mapped())};
    }

    size_t max_word_length() const {
        return terms_.empty() ? 0 : terms_.rbegin()->first.size();
    }

    friend Element operator+(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend Element operator-(const Element& a) {
        Element r;
        for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) {
        Element r = a;
        for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
        return r;
    }
    friend Element operator*(const Element& a, const Element& b) {
        Element r;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    friend Element operator*(const RatFunc& c, const Element& a) {
        Element r;
        if (c.is_zero()) return r;
        for (const auto& [w, x] : a.terms_) r.terms_.emplace(w, c * x);
        return r;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    Element& operator*=(const Element& o) { return *this = *this * o; }

    Element pow(int k) const {
        if (k < 0) throw std::domain_error("Element: negative power");
        Element r = unit();
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// True when every word of this element is homogeneous of one multidegree.
    bool is_homogeneous(int n) const {
        if (terms_.empty()) return true;
        std::vector<int> deg = multidegree(terms_.begin()->first, n);
        for (const auto& [w, c] : terms_)
            if (multidegree(w, n) != deg) return false;
        return true;
    }

private:
    Terms terms_;
};

/// P_i^k: the word K_i^k for k > 0, J for k = 0, Kbar_i^{-k} for k < 0.
inline Word p_power_word(int i, int k) {
    if (k > 0) return Word::power(letter_K(i), k);
    if (k == 0) return Word(letter_J());
    return Word::power(letter_Kbar(i), -k);
}

inline Element p_power(int i, int k) { return Element::of_word(p_power_word(i, k)); }

/// P^s = P_1^{s_1} ... P_n^{s_n}.
inline Element p_monomial(const std::vector<int>& s) {
    Word w;
    for (size_t i = 0; i < s.size(); ++i) {
        Word p = p_power_word(static_cast<int>(i) + 1, s[i]);
        w = w * p;
    }
    return Element::of_word(w);
}

}  // namespace weakq
