#pragma once

/// The defining presentation of the d-type weak quantum algebra built from a
/// Cartan matrix and a binary type sequence.
///
/// Relation families, for all generator indices i, j:
///   (w0)  K_i Kb_i - J
///   (w1)  commutations among the K and Kb letters
///   (w2)  J K_i - K_i,  J Kb_i - Kb_i,  J J - J
///   (w3)  type relations: type-1 E_i obeys K_j E_i = q_i^{a_ij} E_i K_j and
///         E_i Kb_j = q_i^{a_ij} Kb_j E_i; type-2 E_i obeys
///         K_j E_i Kb_j = q_i^{a_ij} E_i together with the absorption
///         J E_i - E_i.  F_i mirrors E_i with a_ij -> -a_ij (absorption
///         F_i J - F_i).
///   (w5)  E_i F_j - F_j E_i - delta_ij (K_i - Kb_i)/(q_i - q_i^{-1})
///   (w6)  q-Serre relations among the E_i
///   (w7)  q-Serre relations among the F_i
///
/// Every relation is homogeneous for the Z^n grading deg E_i = alpha_i,
/// deg F_i = -alpha_i, deg K/Kb/J = 0.

#include <stdexcept>
#include <string>
#include <vector>

#include "weakq/cartan.hpp"
#include "weakq/element.hpp"

namespace weakq {

/// The binary sequence d = (kappa_1..kappa_n | kappabar_1..kappabar_n):
/// bit 1 marks a type-1 generator, bit 0 a type-2 generator.
struct TypeSequence {
    std::vector<int> kappa;     // types of the E_i
    std::vector<int> kappabar;  // types of the F_i

    static TypeSequence parse(const std::string& text, int rank) {
        auto bar = text.find('|');
        if (bar == std::string::npos)
            throw std::invalid_argument("type sequence must have the form bits|bits");
        TypeSequence t;
        auto read = [&](const std::string& part, std::vector<int>& out) {
            for (char ch : part) {
                if (ch != '0' && ch != '1')
                    throw std::invalid_argument("type sequence bits must be 0 or 1");
                out.push_back(ch - '0');
            }
        };
        read(text.substr(0, bar), t.kappa);
        read(text.substr(bar + 1), t.kappabar);
        if (static_cast<int>(t.kappa.size()) != rank || static_cast<int>(t.kappabar.size()) != rank)
            throw std::invalid_argument("type sequence length does not match the rank");
        return t;
    }

    static TypeSequence all_ones(int rank) {
        TypeSequence t;
        t.kappa.assign(static_cast<size_t>(rank), 1);
        t.kappabar.assign(static_cast<size_t>(rank), 1);
        return t;
    }
    static TypeSequence all_zeros(int rank) {
        TypeSequence t;
        t.kappa.assign(static_cast<size_t>(rank), 0);
        t.kappabar.assign(static_cast<size_t>(rank), 0);
        return t;
    }

    std::string to_string() const {
        std::string s;
        for (int b : kappa) s += static_cast<char>('0' + b);
        s += '|';
        for (int b : kappabar) s += static_cast<char>('0' + b);
        return s;
    }

    bool e_is_type1(int i) const { return kappa[static_cast<size_t>(i - 1)] != 0; }
    bool f_is_type1(int i) const { return kappabar[static_cast<size_t>(i - 1)] != 0; }

    /// Support sets {i : kappa_i != 0} and {i : kappabar_i != 0}.
    std::vector<int> support_d() const {
        std::vector<int> s;
        for (size_t i = 0; i < kappa.size(); ++i)
            if (kappa[i]) s.push_back(static_cast<int>(i) + 1);
        return s;
    }
    std::vector<int> support_dbar() const {
        std::vector<int> s;
        for (size_t i = 0; i < kappabar.size(); ++i)
            if (kappabar[i]) s.push_back(static_cast<int>(i) + 1);
        return s;
    }

    friend bool operator==(const TypeSequence&, const TypeSequence&) = default;
};

struct Presentation {
    CartanData cartan;
    TypeSequence dseq;
    std::vector<Element> relations;
    std::vector<std::string> labels;  // parallel to relations, for reports

    int rank() const { return cartan.n; }
};

namespace detail {
/// q_i^{e} = q^{d_i * e} as a field element.
inline RatFunc qi_power(const CartanData& c, int i, int e) {
    return RatFunc::q_power(c.q_power_d(i) * e);
}
}  // namespace detail

/// Builds the full defining relation list for (cartan, dseq).
inline Presentation build_relations(const CartanData& cartan, const TypeSequence& dseq) {
    if (static_cast<int>(dseq.kappa.size()) != cartan.n)
        throw std::invalid_argument("build_relations: type sequence length mismatch");
    Presentation p;
    p.cartan = cartan;
    p.dseq = dseq;
    const int n = cartan.n;

    auto emit = [&](Element e, std::string label) {
        if (e.is_zero()) throw std::logic_error("build_relations: zero relation " + label);
        p.relations.push_back(std::move(e));
        p.labels.push_back(std::move(label));
    };
    auto W = [](std::initializer_list<Letter> ls) {
        Word w;
        for (const Letter& l : ls) w.push_back(l);
        return Element::of_word(w);
    };

    // (w0) K_i Kb_i = J
    for (int i = 1; i <= n; ++i)
        emit(W({letter_K(i), letter_Kbar(i)}) - W({letter_J()}),
             "w0[i=" + std::to_string(i) + "]");

    // (w1) commutations among K, Kb
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            emit(W({letter_K(i), letter_Kbar(j)}) - W({letter_Kbar(j), letter_K(i)}),
                 "w1-KKb[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            emit(W({letter_K(i), letter_K(j)}) - W({letter_K(j), letter_K(i)}),
                 "w1-KK[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
            emit(W({letter_Kbar(i), letter_Kbar(j)}) - W({letter_Kbar(j), letter_Kbar(i)}),
                 "w1-KbKb[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
        }

    // (w2) J absorbs into K and Kb; J is idempotent
    for (int i = 1; i <= n; ++i) {
        emit(W({letter_J(), letter_K(i)}) - W({letter_K(i)}), "w2-JK[i=" + std::to_string(i) + "]");
        emit(W({letter_J(), letter_Kbar(i)}) - W({letter_Kbar(i)}),
             "w2-JKb[i=" + std::to_string(i) + "]");
    }
    emit(W({letter_J(), letter_J()}) - W({letter_J()}), "w2-JJ");

    // (w3) type relations for the E_i
    for (int i = 1; i <= n; ++i) {
        if (dseq.e_is_type1(i)) {
            for (int j = 1; j <= n; ++j) {
                RatFunc q = detail::qi_power(cartan, i, cartan.entry(i, j));
                emit(W({letter_K(j), letter_E(i)}) - q * W({letter_E(i), letter_K(j)}),
                     "type1-KE[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
                emit(W({letter_E(i), letter_Kbar(j)}) - q * W({letter_Kbar(j), letter_E(i)}),
                     "type1-EKb[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
            }
        } else {
            for (int j = 1; j <= n; ++j) {
                RatFunc q = detail::qi_power(cartan, i, cartan.entry(i, j));
                emit(W({letter_K(j), letter_E(i), letter_Kbar(j)}) - q * W({letter_E(i)}),
                     "type2-KEKb[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
            }
            emit(W({letter_J(), letter_E(i)}) - W({letter_E(i)}),
                 "type2-JE[i=" + std::to_string(i) + "]");
        }
    }
    // (w3) type relations for the F_i, with a_ij -> -a_ij
    for (int i = 1; i <= n; ++i) {
        if (dseq.f_is_type1(i)) {
            for (int j = 1; j <= n; ++j) {
                RatFunc q = detail::qi_power(cartan, i, -cartan.entry(i, j));
                emit(W({letter_K(j), letter_F(i)}) - q * W({letter_F(i), letter_K(j)}),
                     "type1-KF[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
                emit(W({letter_F(i), letter_Kbar(j)}) - q * W({letter_Kbar(j), letter_F(i)}),
                     "type1-FKb[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
            }
        } else {
            for (int j = 1; j <= n; ++j) {
                RatFunc q = detail::qi_power(cartan, i, -cartan.entry(i, j));
                emit(W({letter_K(j), letter_F(i), letter_Kbar(j)}) - q * W({letter_F(i)}),
                     "type2-KFKb[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
            }
            emit(W({letter_F(i), letter_J()}) - W({letter_F(i)}),
                 "type2-FJ[i=" + std::to_string(i) + "]");
        }
    }

    // (w5) E_i F_j - F_j E_i = delta_ij (K_i - Kb_i)/(q_i - q_i^{-1})
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Element rel = W({letter_E(i), letter_F(j)}) - W({letter_F(j), letter_E(i)});
            if (i == j) {
                int di = cartan.q_power_d(i);
                RatFunc c = RatFunc(LaurentPoly(1),
                                    LaurentPoly::q_power(di) - LaurentPoly::q_power(-di));
                rel -= c * (W({letter_K(i)}) - W({letter_Kbar(i)}));
            }
            emit(std::move(rel), "w5[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
        }

    // (w6)/(w7) quantum Serre relations
    auto serre = [&](int i, int j, LetterKind kind) {
        int r = 1 - cartan.entry(i, j);
        int di = cartan.q_power_d(i);
        Element sum;
        for (int s = 0; s <= r; ++s) {
            RatFunc c = q_binomial(r, s, di);
            if (s % 2) c = -c;
            Letter li = kind == LetterKind::E ? letter_E(i) : letter_F(i);
            Letter lj = kind == LetterKind::E ? letter_E(j) : letter_F(j);
            Word w = Word::power(li, r - s) * Word(lj) * Word::power(li, s);
            sum += Element::of_word(w, c);
        }
        return sum;
    };
    // For a_ij = 0 the sum degenerates to the commutation E_i E_j - E_j E_i.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            emit(serre(i, j, LetterKind::E),
                 "w6[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
            emit(serre(i, j, LetterKind::F),
                 "w7[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]");
        }

    return p;
}

/// Partition of `support` into Dynkin-graph connected components
/// (the equivalence classes used for the XY part of the basis).
inline std::vector<std::vector<int>> equivalence_classes(const CartanData& cartan,
                                                         const std::vector<int>& support) {
    return dynkin_components(cartan, support);
}

}  // namespace weakq
