#pragma once

/// Independent dimension oracle for the basis theorems.
///
/// Computes, per Z^n multidegree, the dimension of
///   span{ words of length <= maxlen }  /  span{ u * r * v }
/// where r runs over the defining relations and u, v over words such that
/// every word of u*r*v stays within maxlen.  Coefficients are evaluated
/// exactly at q := qval, and the quotient dimension is found by exact
/// rational elimination.  The oracle never touches the rewriting engine,
/// so agreement with the irreducible-word counts is a genuine cross-check.
///
/// Binomial rows (two words, one coefficient) dominate these presentations;
/// they are eliminated by a union-find with ratios before the leftover rows
/// go through sparse Gaussian elimination.

#include <map>
#include <unordered_map>
#include <vector>

#include "weakq/element.hpp"
#include "weakq/presentation.hpp"

namespace weakq {

namespace detail {

/// Union-find with multiplicative weights: value(i) = ratio_[i] * value(parent).
/// A dead root marks a class whose members are all forced to zero.
class RatioUnionFind {
public:
    explicit RatioUnionFind(size_t n) : parent_(n), ratio_(n, Rat(1)), dead_(n, false) {
        for (size_t i = 0; i < n; ++i) parent_[i] = i;
    }

    // Returns (root, w) with value(i) = w * value(root).
    std::pair<size_t, Rat> find(size_t i) {
        if (parent_[i] == i) return {i, Rat(1)};
        auto [root, w] = find(parent_[i]);
        parent_[i] = root;
        ratio_[i] *= w;
        return {root, ratio_[i]};
    }

    bool is_dead_root(size_t root) const { return dead_[root]; }
    void kill(size_t root) { dead_[root] = true; }

    /// Assert value(a) = c * value(b); returns true when the state changed.
    bool merge(size_t a, size_t b, const Rat& c) {
        auto [ra, wa] = find(a);
        auto [rb, wb] = find(b);
        if (ra == rb) {
            if (wa == c * wb || dead_[ra]) return false;
            // value(ra) * (wa - c wb) = 0 with nonzero factor: all zero.
            dead_[ra] = true;
            return true;
        }
        parent_[ra] = rb;
        ratio_[ra] = c * wb / wa;
        if (dead_[ra]) dead_[rb] = true;
        return true;
    }

    size_t size() const { return parent_.size(); }

private:
    std::vector<size_t> parent_;
    std::vector<Rat> ratio_;
    std::vector<bool> dead_;
};

}  // namespace detail

struct OracleOptions {
    /// Restrict the spanning words (and the relations used) to these kinds.
    /// Empty means the full alphabet.
    std::vector<LetterKind> alphabet;
};

inline std::map<std::vector<int>, long> dimension_oracle(const Presentation& p, int maxlen,
                                                         const Rat& qval,
                                                         const OracleOptions& opt = {}) {
    const int n = p.rank();
    std::vector<std::uint8_t> alphabet;
    auto allow = [&](LetterKind k) {
        return opt.alphabet.empty() ||
               std::find(opt.alphabet.begin(), opt.alphabet.end(), k) != opt.alphabet.end();
    };
    for (int i = 1; i <= n; ++i)
        if (allow(LetterKind::F)) alphabet.push_back(letter_byte(letter_F(i)));
    for (int i = 1; i <= n; ++i)
        if (allow(LetterKind::Kbar)) alphabet.push_back(letter_byte(letter_Kbar(i)));
    for (int i = 1; i <= n; ++i)
        if (allow(LetterKind::K)) alphabet.push_back(letter_byte(letter_K(i)));
    if (allow(LetterKind::J)) alphabet.push_back(letter_byte(letter_J()));
    for (int i = 1; i <= n; ++i)
        if (allow(LetterKind::E)) alphabet.push_back(letter_byte(letter_E(i)));

    // Evaluate the usable relations at qval.
    struct EvRel {
        std::vector<std::pair<Word, Rat>> terms;
        size_t max_len = 0;
    };
    std::vector<EvRel> rels;
    for (const Element& r : p.relations) {
        bool usable = true;
        EvRel er;
        for (const auto& [w, c] : r.terms()) {
            for (size_t t = 0; t < w.size() && usable; ++t)
                usable = allow(w.letter_at(t).kind);
            if (!usable) break;
            er.terms.emplace_back(w, c.eval_at(qval));
            er.max_len = std::max(er.max_len, w.size());
        }
        if (usable && !er.terms.empty()) rels.push_back(std::move(er));
    }

    // Enumerate all words of length <= maxlen over the alphabet, giving each
    // a column id within its multidegree class.
    struct Class {
        std::vector<Word> words;
        std::vector<std::vector<std::pair<size_t, Rat>>> rows;  // stashed non-binomial rows
    };
    std::map<std::vector<int>, Class> classes;
    std::unordered_map<Word, std::pair<Class*, size_t>, WordHash> columns;
    {
        std::vector<Word> frontier{Word()};
        auto place = [&](const Word& w) {
            Class& cls = classes[multidegree(w, n)];
            columns.emplace(w, std::make_pair(&cls, cls.words.size()));
            cls.words.push_back(w);
        };
        place(Word());
        for (int len = 1; len <= maxlen; ++len) {
            std::vector<Word> next;
            for (const Word& w : frontier)
                for (std::uint8_t b : alphabet) {
                    Word e = w;
                    e.push_back(byte_letter(b));
                    place(e);
                    next.push_back(std::move(e));
                }
            frontier = std::move(next);
        }
    }

    // Per-class union-find state, built lazily.
    std::map<std::vector<int>, detail::RatioUnionFind> uf;
    for (auto& [deg, cls] : classes) uf.emplace(deg, detail::RatioUnionFind(cls.words.size()));

    // A row asserts sum coef * value(col) = 0 within one class.
    auto process_row = [&](const std::vector<int>& deg,
                           std::vector<std::pair<size_t, Rat>> row) -> bool {
        detail::RatioUnionFind& u = uf.at(deg);
        // Compress through the union-find.
        std::map<size_t, Rat> acc;
        for (const auto& [col, coef] : row) {
            auto [root, w] = u.find(col);
            if (u.is_dead_root(root)) continue;
            Rat& slot = acc[root];
            slot += coef * w;
            if (slot == 0) acc.erase(root);
        }
        if (acc.empty()) return false;
        if (acc.size() == 1) {
            u.kill(acc.begin()->first);
            return true;
        }
        if (acc.size() == 2) {
            auto it = acc.begin();
            auto [c1, a1] = *it++;
            auto [c2, a2] = *it;
            // a1 v(c1) + a2 v(c2) = 0  =>  v(c1) = (-a2/a1) v(c2)
            return u.merge(c1, c2, -a2 / a1);
        }
        std::vector<std::pair<size_t, Rat>> stash(acc.begin(), acc.end());
        classes.at(deg).rows.push_back(std::move(stash));
        return false;
    };

    // Generate rows u * r * v for every relation and every frame that fits.
    {
        std::vector<Word> frames{Word()};
        std::vector<std::vector<Word>> by_len(static_cast<size_t>(maxlen) + 1);
        by_len[0].push_back(Word());
        for (int len = 1; len <= maxlen; ++len)
            for (const Word& w : by_len[static_cast<size_t>(len - 1)])
                for (std::uint8_t b : alphabet) {
                    Word e = w;
                    e.push_back(byte_letter(b));
                    by_len[static_cast<size_t>(len)].push_back(std::move(e));
                }
        for (const EvRel& r : rels) {
            int room = maxlen - static_cast<int>(r.max_len);
            if (room < 0) continue;
            for (int a = 0; a <= room; ++a)
                for (int b = 0; a + b <= room; ++b)
                    for (const Word& u : by_len[static_cast<size_t>(a)])
                        for (const Word& v : by_len[static_cast<size_t>(b)]) {
                            std::vector<std::pair<size_t, Rat>> row;
                            std::vector<int> deg;
                            for (const auto& [w, coef] : r.terms) {
                                Word full = u * w * v;
                                if (deg.empty()) deg = multidegree(full, n);
                                row.emplace_back(columns.at(full).second, coef);
                            }
                            process_row(deg, std::move(row));
                        }
        }
    }

    // Re-run stashed rows until the union-find stabilizes, then eliminate.
    std::map<std::vector<int>, long> dims;
    for (auto& [deg, cls] : classes) {
        detail::RatioUnionFind& u = uf.at(deg);
        bool changed = true;
        std::vector<std::vector<std::pair<size_t, Rat>>> stashed;
        while (changed) {
            changed = false;
            stashed.clear();
            std::swap(stashed, cls.rows);
            for (auto& row : stashed)
                if (process_row(deg, std::move(row))) changed = true;
        }
        // Sparse Gaussian elimination over live roots, pivot on max column.
        std::map<size_t, std::vector<std::pair<size_t, Rat>>> pivots;
        long rank = 0;
        for (auto& row : cls.rows) {
            std::map<size_t, Rat> cur(row.begin(), row.end());
            while (!cur.empty()) {
                size_t lead = cur.rbegin()->first;
                Rat lc = cur.rbegin()->second;
                auto piv = pivots.find(lead);
                if (piv == pivots.end()) {
                    std::vector<std::pair<size_t, Rat>> stored(cur.begin(), cur.end());
                    pivots.emplace(lead, std::move(stored));
                    ++rank;
                    break;
                }
                Rat factor = lc / piv->second.back().second;
                for (const auto& [col, coef] : piv->second) {
                    Rat& slot = cur[col];
                    slot -= factor * coef;
                    if (slot == 0) cur.erase(col);
                }
            }
        }
        long live = 0;
        for (size_t i = 0; i < u.size(); ++i) {
            auto [root, w] = u.find(i);
            if (root == i && !u.is_dead_root(root)) ++live;
        }
        dims[deg] = live - rank;
    }
    return dims;
}

}  // namespace weakq
