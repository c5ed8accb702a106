#pragma once

/// Degree-truncated completion of the defining presentation into an oriented
/// rewriting system with unique normal forms (diamond-lemma style).
///
/// Rules are oriented by the fixed monomial order (length first, then the
/// alphabet ranking baked into the letter bytes).  Completion resolves every
/// overlap of two left-hand sides whose total length stays within the bound
/// L; the resulting system is confluent on all words of length <= L.  Since
/// the order is degree compatible, rewriting never increases word length, so
/// normal forms of words within the bound are canonical.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "weakq/element.hpp"
#include "weakq/presentation.hpp"

namespace weakq {

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& msg) : std::runtime_error(msg) {}
};

struct RewriteRule {
    Word lhs;
    Element rhs;  // strictly smaller words, lhs coefficient normalized to 1

    friend bool operator==(const RewriteRule& a, const RewriteRule& b) {
        return a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

namespace detail {

using ByteView = std::basic_string_view<std::uint8_t>;

struct ByteViewHash {
    using is_transparent = void;
    size_t operator()(ByteView v) const noexcept {
        size_t h = 1469598103934665603ull;
        for (std::uint8_t c : v) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return h;
    }
    size_t operator()(const Word& w) const noexcept {
        return (*this)(ByteView(w.bytes().data(), w.bytes().size()));
    }
};

struct ByteViewEq {
    using is_transparent = void;
    static ByteView view(const Word& w) { return ByteView(w.bytes().data(), w.bytes().size()); }
    bool operator()(ByteView a, ByteView b) const noexcept { return a == b; }
    bool operator()(const Word& a, ByteView b) const noexcept { return view(a) == b; }
    bool operator()(ByteView a, const Word& b) const noexcept { return a == view(b); }
    bool operator()(const Word& a, const Word& b) const noexcept { return view(a) == view(b); }
};

}  // namespace detail

class RewriteSystem {
public:
    RewriteSystem() = default;

    /// Orients each relation into a rule lhs -> rhs with lhs the
    /// order-maximal word and unit leading coefficient.  Relations are
    /// inter-reduced against the rules added before them, so left-hand
    /// sides stay mutually irreducible; redundant relations (those already
    /// implied, e.g. the i = j case of a commutation family) are dropped.
    /// Not yet completed.
    static RewriteSystem orient(const Presentation& p) {
        RewriteSystem sys;
        sys.pres_ = p;
        for (size_t r = 0; r < p.relations.size(); ++r) {
            if (p.relations[r].is_zero())
                throw std::invalid_argument("orient: degenerate zero relation " + p.labels[r]);
            Element rel = sys.reduce(p.relations[r]);
            if (!rel.is_zero()) sys.add_rule(make_rule(std::move(rel)));
        }
        return sys;
    }

    /// Resolves all critical pairs of total degree <= L, adding rules for
    /// S-elements that do not reduce to zero, then inter-reduces.  The
    /// result is deterministic: pairs are processed by overlap word order
    /// (total degree first, then lexicographic).
    void complete(int L) {
        for (const auto& rule : rules_)
            if (active_[index_of(rule.lhs)] && static_cast<int>(rule.lhs.size()) > L)
                throw std::invalid_argument("complete: bound below maximal relation degree");
        bound_ = L;

        std::multimap<Word, Element> pending;
        // Seed with the mutual overlaps of the initial rules (orient keeps
        // their left-hand sides mutually irreducible).
        for (size_t i = 0; i < rules_.size(); ++i)
            for (size_t j = 0; j < rules_.size(); ++j)
                enqueue_overlaps(pending, i, j);

        while (!pending.empty()) {
            Element eq = std::move(pending.begin()->second);
            pending.erase(pending.begin());
            Element nf = reduce(std::move(eq));
            if (nf.is_zero()) continue;
            size_t id = add_rule(make_rule(std::move(nf)));
            // Retire rules whose lhs now contains the new lhs.
            for (size_t r = 0; r < rules_.size(); ++r) {
                if (r == id || !active_[r]) continue;
                if (contains(rules_[r].lhs, rules_[id].lhs)) {
                    active_[r] = false;
                    index_.erase(rules_[r].lhs);
                    pending.emplace(rules_[r].lhs, equation_of(rules_[r]));
                }
            }
            for (size_t r = 0; r < rules_.size(); ++r) {
                if (!active_[r]) continue;
                enqueue_overlaps(pending, id, r);
                if (r != id) enqueue_overlaps(pending, r, id);
            }
        }

        // Inter-reduce right-hand sides and compact.
        std::vector<RewriteRule> finals;
        for (size_t r = 0; r < rules_.size(); ++r)
            if (active_[r]) finals.push_back(rules_[r]);
        std::sort(finals.begin(), finals.end(),
                  [](const RewriteRule& a, const RewriteRule& b) { return a.lhs < b.lhs; });
        for (auto& rule : finals) rule.rhs = reduce(rule.rhs);
        install(std::move(finals));
        confluent_up_to_ = L;
    }

    /// Unique normal form for inputs within the confluent bound.
    /// Reduction itself is total; the bound check guards canonicity.
    Element normalize(const Element& x) const {
        ensure_within_bound(x);
        return reduce(x);
    }

    /// Reduction without the bound check: always terminates, canonical only
    /// for words within the confluent bound.
    Element reduce(Element x) const {
        Element out;
        while (!x.is_zero()) {
            auto [w, c] = x.pop_leading();
            if (!apply_step(w, c, x)) out.add_term(w, c);
        }
        return out;
    }

    /// One leftmost rewrite step on a single word; nullopt when irreducible.
    std::optional<Element> rewrite_step(const Word& w) const {
        Element acc;
        if (!apply_step(w, RatFunc(1), acc)) return std::nullopt;
        return acc;
    }

    /// Expands c*w one step into acc; false when w is irreducible.
    bool apply_step(const Word& w, const RatFunc& c, Element& acc) const {
        auto redex = find_redex(w);
        if (!redex) return false;
        const RewriteRule& rule = rules_[redex->rule];
        Word prefix = w.subword(0, redex->pos);
        Word suffix =
            w.subword(redex->pos + rule.lhs.size(), w.size() - redex->pos - rule.lhs.size());
        for (const auto& [rw, rc] : rule.rhs.terms()) acc.add_term(prefix * rw * suffix, c * rc);
        return true;
    }

    bool is_irreducible(const Word& w) const { return !find_redex(w).has_value(); }

    /// True also for suffix checks during enumeration: does any rule lhs end
    /// exactly at the last letter of w?
    bool suffix_reducible(const Word& w) const {
        size_t len_max = std::min(max_lhs_, w.size());
        for (size_t len = 1; len <= len_max; ++len) {
            detail::ByteView v(w.bytes().data() + (w.size() - len), len);
            if (index_.find(v) != index_.end()) return true;
        }
        return false;
    }

    void ensure_within_bound(const Element& x) const {
        if (static_cast<int>(x.max_word_length()) > confluent_up_to_)
            throw DegreeOverflow("word length " + std::to_string(x.max_word_length()) +
                                 " exceeds the confluent bound " +
                                 std::to_string(confluent_up_to_));
    }

    const Presentation& presentation() const { return pres_; }
    int bound() const { return bound_; }
    int confluent_up_to() const { return confluent_up_to_; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    size_t max_lhs_length() const { return max_lhs_; }

    /// Used by the cache loader: installs an externally built rule list.
    static RewriteSystem from_rules(Presentation p, int bound, int confluent_up_to,
                                    std::vector<RewriteRule> rules) {
        RewriteSystem sys;
        sys.pres_ = std::move(p);
        sys.bound_ = bound;
        sys.confluent_up_to_ = confluent_up_to;
        sys.install(std::move(rules));
        return sys;
    }

private:
    struct Redex {
        size_t pos;
        size_t rule;
    };

    static RewriteRule make_rule(Element rel) {
        auto [lhs, lc] = rel.pop_leading();
        RewriteRule rule;
        rule.lhs = lhs;
        rule.rhs = (-lc.inverse()) * rel;
        return rule;
    }

    static Element equation_of(const RewriteRule& r) {
        Element eq = Element::of_word(r.lhs);
        eq -= r.rhs;
        return eq;
    }

    static bool contains(const Word& big, const Word& small) {
        if (small.size() > big.size()) return false;
        const auto& b = big.bytes();
        const auto& s = small.bytes();
        return b.find(s) != Word::Bytes::npos;
    }

    std::optional<Redex> find_redex(const Word& w) const {
        if (w.size() == 0 || rules_.empty()) return std::nullopt;
        const std::uint8_t* data = w.bytes().data();
        for (size_t pos = 0; pos < w.size(); ++pos) {
            size_t len_max = std::min(max_lhs_, w.size() - pos);
            for (size_t len = 1; len <= len_max; ++len) {
                auto it = index_.find(detail::ByteView(data + pos, len));
                if (it != index_.end()) return Redex{pos, it->second};
            }
        }
        return std::nullopt;
    }

    size_t index_of(const Word& lhs) const { return index_.at(lhs); }

    size_t add_rule(RewriteRule rule) {
        size_t id = rules_.size();
        max_lhs_ = std::max(max_lhs_, rule.lhs.size());
        index_.emplace(rule.lhs, id);
        rules_.push_back(std::move(rule));
        active_.push_back(true);
        return id;
    }

    void install(std::vector<RewriteRule> rules) {
        rules_ = std::move(rules);
        active_.assign(rules_.size(), true);
        index_.clear();
        max_lhs_ = 0;
        for (size_t i = 0; i < rules_.size(); ++i) {
            index_.emplace(rules_[i].lhs, i);
            max_lhs_ = std::max(max_lhs_, rules_[i].lhs.size());
        }
    }

    /// Proper overlaps w = l1 * t = s * l2 with a nonempty shared middle:
    /// a suffix of l1 of length k equals a prefix of l2, 0 < k < min lengths.
    void enqueue_overlaps(std::multimap<Word, Element>& pending, size_t i, size_t j) const {
        if (!active_[i] || !active_[j]) return;
        const Word& l1 = rules_[i].lhs;
        const Word& l2 = rules_[j].lhs;
        size_t kmax = std::min(l1.size(), l2.size()) - 1;
        for (size_t k = 1; k <= kmax; ++k) {
            if (static_cast<int>(l1.size() + l2.size() - k) > bound_) continue;
            bool match = true;
            for (size_t t = 0; t < k && match; ++t)
                match = l1.byte_at(l1.size() - k + t) == l2.byte_at(t);
            if (!match) continue;
            Word tail = l2.subword(k, l2.size() - k);
            Word head = l1.subword(0, l1.size() - k);
            // S = rhs1 * tail - head * rhs2
            Element s = rules_[i].rhs * Element::of_word(tail);
            s -= Element::of_word(head) * rules_[j].rhs;
            if (s.is_zero()) continue;
            pending.emplace(l1 * tail, std::move(s));
        }
    }

    Presentation pres_;
    int bound_ = 0;
    int confluent_up_to_ = 0;
    std::vector<RewriteRule> rules_;
    std::vector<char> active_;
    std::unordered_map<Word, size_t, detail::ByteViewHash, detail::ByteViewEq> index_;
    size_t max_lhs_ = 0;
};

/// Builds and completes the system for a presentation at bound L.
inline RewriteSystem make_system(const Presentation& p, int L) {
    RewriteSystem sys = RewriteSystem::orient(p);
    sys.complete(L);
    return sys;
}

/// The J -> 1 quotient: adds the relation J - 1 and re-completes to the
/// same bound.  By design the result presents the classical U_q.
inline RewriteSystem quotient_J1(const RewriteSystem& sys) {
    Presentation p = sys.presentation();
    p.relations.push_back(Element::of_letter(letter_J()) - Element::unit());
    p.labels.push_back("J1");
    return make_system(p, sys.bound());
}

/// Memoizing normal-form evaluator bound to one completed system.  Not
/// thread safe; create one per thread.  Unlike RewriteSystem::normalize it
/// does not enforce the input bound (callers own that decision).
class Normalizer {
public:
    explicit Normalizer(const RewriteSystem& sys) : sys_(&sys) {}

    const RewriteSystem& system() const { return *sys_; }

    const Element& word_nf(const Word& w) {
        auto hit = memo_.find(w);
        if (hit != memo_.end()) return hit->second;
        Element out;
        Element x = Element::of_word(w);
        while (!x.is_zero()) {
            auto [lead, c] = x.pop_leading();
            auto sub = memo_.find(lead);
            if (sub != memo_.end()) {
                for (const auto& [sw, sc] : sub->second.terms()) out.add_term(sw, c * sc);
                continue;
            }
            if (!sys_->apply_step(lead, c, x)) out.add_term(lead, c);
        }
        return memo_.emplace(w, std::move(out)).first->second;
    }

    Element operator()(const Element& x) {
        Element out;
        for (const auto& [w, c] : x.terms())
            for (const auto& [nw, nc] : word_nf(w).terms()) out.add_term(nw, c * nc);
        return out;
    }

    Element operator()(const Word& w) { return word_nf(w); }

private:
    const RewriteSystem* sys_;
    std::unordered_map<Word, Element, WordHash> memo_;
};

/// Counts irreducible words by (multidegree, length) up to maxlen.
/// Enumeration prunes as soon as a suffix matches some rule lhs.
inline std::map<std::vector<int>, std::map<int, long>> graded_counts(const RewriteSystem& sys,
                                                                     int maxlen) {
    if (maxlen > sys.confluent_up_to())
        throw std::invalid_argument("graded_counts: maxlen above confluent bound");
    const int n = sys.presentation().rank();
    std::vector<std::uint8_t> alphabet;
    for (int i = 1; i <= n; ++i) alphabet.push_back(letter_byte(letter_F(i)));
    for (int i = 1; i <= n; ++i) alphabet.push_back(letter_byte(letter_Kbar(i)));
    for (int i = 1; i <= n; ++i) alphabet.push_back(letter_byte(letter_K(i)));
    alphabet.push_back(letter_byte(letter_J()));
    for (int i = 1; i <= n; ++i) alphabet.push_back(letter_byte(letter_E(i)));

    std::map<std::vector<int>, std::map<int, long>> counts;
    Word w;
    counts[std::vector<int>(static_cast<size_t>(n), 0)][0] += 1;  // the empty word
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) >= maxlen) return;
        for (std::uint8_t b : alphabet) {
            w.push_back(byte_letter(b));
            if (!sys.suffix_reducible(w)) {
                counts[multidegree(w, n)][static_cast<int>(w.size())] += 1;
                self(self);
            }
            w.pop_back();
        }
    };
    dfs(dfs);
    return counts;
}

/// Irreducible words over the E letters only (or F letters), by multidegree.
/// For the J -> 1 quotient these counts realize the graded dimension of the
/// positive (negative) part.
inline std::map<std::vector<int>, long> one_sided_counts(const RewriteSystem& sys, int maxlen,
                                                         LetterKind kind) {
    if (kind != LetterKind::E && kind != LetterKind::F)
        throw std::invalid_argument("one_sided_counts: kind must be E or F");
    const int n = sys.presentation().rank();
    std::map<std::vector<int>, long> counts;
    Word w;
    auto dfs = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) >= maxlen) return;
        for (int i = 1; i <= n; ++i) {
            w.push_back(Letter{kind, i});
            if (!sys.suffix_reducible(w)) {
                counts[multidegree(w, n)] += 1;
                self(self);
            }
            w.pop_back();
        }
    };
    dfs(dfs);
    return counts;
}

/// Soundness sweep: every defining relation must normalize to zero.
/// Returns the labels of failing relations (empty on success).
inline std::vector<std::string> failing_relations(const RewriteSystem& sys) {
    std::vector<std::string> bad;
    const Presentation& p = sys.presentation();
    for (size_t r = 0; r < p.relations.size(); ++r)
        if (!sys.reduce(p.relations[r]).is_zero()) bad.push_back(p.labels[r]);
    return bad;
}

}  // namespace weakq
