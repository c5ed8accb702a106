#pragma once

/// Cartan matrix validation with minimal symmetrizers, positive root systems
/// by reflection closure, reduced words for the longest Weyl element, and the
/// brute-force Kostant partition count used as a dimension oracle.

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "weakq/rational.hpp"

namespace weakq {

struct CartanError : std::runtime_error {
    enum class Kind { Shape, NotSymmetrizable, NotFiniteType };
    CartanError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

/// Symmetrizable Cartan matrix of finite type with its minimal positive
/// symmetrizer d (so that d_i a_ij = d_j a_ji).
struct CartanData {
    int n = 0;
    std::vector<std::vector<int>> a;
    std::vector<int> d;
    std::string name;  // "A2", "B3", ... or "custom"

    int q_power_d(int i) const { return d[static_cast<size_t>(i - 1)]; }
    int entry(int i, int j) const { return a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

    /// Symmetrized inner product (alpha_i, alpha_j) = d_i a_ij on lattice vectors.
    long inner(const std::vector<int>& u, const std::vector<int>& v) const {
        long s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s += static_cast<long>(u[static_cast<size_t>(i)]) * d[static_cast<size_t>(i)] *
                     a[static_cast<size_t>(i)][static_cast<size_t>(j)] * v[static_cast<size_t>(j)];
        return s;
    }
};

struct RootSystem {
    std::vector<std::vector<int>> positive_roots;
    int ell0 = 0;
};

struct WeylWord {
    std::vector<int> indices;  // 1-based simple reflection indices
    bool reduced = false;
};

/// Validates an integer matrix as a finite-type symmetrizable Cartan matrix
/// and computes the minimal positive symmetrizer.
inline CartanData validate(const std::vector<std::vector<int>>& m) {
    size_t n = m.size();
    if (n == 0) throw CartanError(CartanError::Kind::Shape, "empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw CartanError(CartanError::Kind::Shape, "matrix is not square");
    for (size_t i = 0; i < n; ++i) {
        if (m[i][i] != 2)
            throw CartanError(CartanError::Kind::Shape, "diagonal entry a_ii != 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (m[i][j] > 0)
                throw CartanError(CartanError::Kind::Shape, "positive off-diagonal entry");
            if ((m[i][j] == 0) != (m[j][i] == 0))
                throw CartanError(CartanError::Kind::Shape,
                                  "zero pattern is not symmetric (a_ij = 0 but a_ji != 0)");
        }
    }

    // Solve d_i a_ij = d_j a_ji over positive rationals along the Dynkin
    // graph, then clear denominators per component and gcd-reduce globally.
    std::vector<Rat> dr(n, Rat(0));
    for (size_t start = 0; start < n; ++start) {
        if (dr[start] != 0) continue;
        dr[start] = 1;
        std::vector<size_t> stack{start};
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (i == j || m[i][j] == 0) continue;
                Rat need = dr[i] * Rat(m[i][j]) / Rat(m[j][i]);
                if (dr[j] == 0) {
                    dr[j] = need;
                    stack.push_back(j);
                } else if (dr[j] != need) {
                    throw CartanError(CartanError::Kind::NotSymmetrizable,
                                      "no positive symmetrizer exists");
                }
            }
        }
    }
    mpz_class l(1);
    for (const auto& r : dr) l = lcm(l, r.get_den());
    std::vector<mpz_class> dz(n);
    mpz_class g(0);
    for (size_t i = 0; i < n; ++i) {
        dz[i] = dr[i].get_num() * (l / dr[i].get_den());
        g = gcd(g, dz[i]);
    }
    CartanData c;
    c.n = static_cast<int>(n);
    c.a = m;
    c.name = "custom";
    c.d.resize(n);
    for (size_t i = 0; i < n; ++i) {
        mpz_class v = dz[i] / g;
        if (!v.fits_sint_p() || v <= 0)
            throw CartanError(CartanError::Kind::NotSymmetrizable, "symmetrizer out of range");
        c.d[i] = static_cast<int>(v.get_si());
    }

    // Finite type: the symmetrized matrix (d_i a_ij) must be positive
    // definite.  Leading principal minors, exact integer arithmetic.
    std::vector<std::vector<Rat>> s(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) s[i][j] = Rat(c.d[i]) * Rat(m[i][j]);
    for (size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = s[i][j];
        // Gaussian determinant
        Rat det(1);
        for (size_t col = 0; col < k; ++col) {
            size_t piv = col;
            while (piv < k && sub[piv][col] == 0) ++piv;
            if (piv == k) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(sub[piv], sub[col]);
                det = -det;
            }
            det *= sub[col][col];
            for (size_t r = col + 1; r < k; ++r) {
                if (sub[r][col] == 0) continue;
                Rat f = sub[r][col] / sub[col][col];
                for (size_t cc = col; cc < k; ++cc) sub[r][cc] -= f * sub[col][cc];
            }
        }
        if (det <= 0)
            throw CartanError(CartanError::Kind::NotFiniteType,
                              "symmetrized matrix is not positive definite");
    }
    return c;
}

inline CartanData cartan_by_name(const std::string& name) {
    auto make = [&](std::vector<std::vector<int>> m) {
        CartanData c = validate(m);
        c.name = name;
        return c;
    };
    auto type_a = [&](int n) {
        std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i) {
            m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
            if (i + 1 < n) {
                m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
                m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
            }
        }
        return make(m);
    };
    if (name == "A1") return type_a(1);
    if (name == "A2") return type_a(2);
    if (name == "A3") return type_a(3);
    if (name == "A4") return type_a(4);
    if (name == "B2") return make({{2, -2}, {-1, 2}});
    if (name == "B3") return make({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    if (name == "C3") return make({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
    if (name == "D4") return make({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
    if (name == "G2") return make({{2, -3}, {-1, 2}});
    throw CartanError(CartanError::Kind::Shape, "unknown Cartan type name: " + name);
}

/// Simple reflection s_i(alpha_j) = alpha_j - a_ij alpha_i, extended linearly.
inline std::vector<int> reflect(const CartanData& c, int i, const std::vector<int>& v) {
    if (i < 1 || i > c.n) throw std::out_of_range("reflect: index out of range");
    std::vector<int> r = v;
    long coef = 0;
    for (int j = 1; j <= c.n; ++j) coef += static_cast<long>(c.entry(i, j)) * v[static_cast<size_t>(j - 1)];
    r[static_cast<size_t>(i - 1)] -= static_cast<int>(coef);
    return r;
}

namespace detail {
inline bool graded_lex_less(const std::vector<int>& u, const std::vector<int>& v) {
    int hu = std::accumulate(u.begin(), u.end(), 0);
    int hv = std::accumulate(v.begin(), v.end(), 0);
    if (hu != hv) return hu < hv;
    return u < v;
}
}  // namespace detail

/// All positive roots by reflection closure from the simple roots,
/// deterministically ordered (height, then lex).
inline RootSystem positive_roots(const CartanData& c) {
    std::vector<std::vector<int>> roots;
    for (int i = 1; i <= c.n; ++i) {
        std::vector<int> e(static_cast<size_t>(c.n), 0);
        e[static_cast<size_t>(i - 1)] = 1;
        roots.push_back(e);
    }
    size_t next = 0;
    while (next < roots.size()) {
        std::vector<int> v = roots[next++];
        for (int i = 1; i <= c.n; ++i) {
            std::vector<int> w = reflect(c, i, v);
            bool positive = std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
            if (positive && std::find(roots.begin(), roots.end(), w) == roots.end())
                roots.push_back(w);
        }
        if (roots.size() > 4096)
            throw CartanError(CartanError::Kind::NotFiniteType, "root closure does not terminate");
    }
    std::sort(roots.begin(), roots.end(), detail::graded_lex_less);
    RootSystem rs;
    rs.positive_roots = std::move(roots);
    rs.ell0 = static_cast<int>(rs.positive_roots.size());
    return rs;
}

/// Reduced expression for the longest Weyl element: at each step apply the
/// smallest simple reflection that sends a remaining positive root negative.
inline WeylWord longest_word(const CartanData& c) {
    RootSystem rs = positive_roots(c);
    std::vector<std::vector<int>> remaining = rs.positive_roots;
    WeylWord w;
    while (!remaining.empty()) {
        int pick = 0;
        for (int i = 1; i <= c.n && pick == 0; ++i) {
            std::vector<int> alpha(static_cast<size_t>(c.n), 0);
            alpha[static_cast<size_t>(i - 1)] = 1;
            if (std::find(remaining.begin(), remaining.end(), alpha) != remaining.end()) pick = i;
        }
        if (pick == 0) throw std::logic_error("longest_word: no descent found");
        std::vector<std::vector<int>> nxt;
        std::vector<int> alpha(static_cast<size_t>(c.n), 0);
        alpha[static_cast<size_t>(pick - 1)] = 1;
        for (const auto& beta : remaining)
            if (beta != alpha) nxt.push_back(reflect(c, pick, beta));
        remaining = std::move(nxt);
        w.indices.push_back(pick);
    }
    w.reduced = true;
    return w;
}

namespace detail {
inline long kostant_rec(const std::vector<std::vector<int>>& roots, size_t idx,
                        std::vector<int> nu) {
    if (std::all_of(nu.begin(), nu.end(), [](int x) { return x == 0; })) return 1;
    if (idx == roots.size()) return 0;
    long total = 0;
    // take 0, 1, 2, ... copies of roots[idx]
    while (true) {
        total += kostant_rec(roots, idx + 1, nu);
        bool ok = true;
        for (size_t k = 0; k < nu.size(); ++k) {
            nu[k] -= roots[idx][k];
            if (nu[k] < 0) ok = false;
        }
        if (!ok) break;
    }
    return total;
}
}  // namespace detail

/// Number of multisets of positive roots summing to nu (exhaustive).
inline long kostant_count(const CartanData& c, const std::vector<int>& nu) {
    for (int x : nu)
        if (x < 0) throw std::domain_error("kostant_count: nu must be nonnegative");
    RootSystem rs = positive_roots(c);
    return detail::kostant_rec(rs.positive_roots, 0, nu);
}

/// Order of s_i s_j in the Weyl group: 2, 3, 4, 6 as a_ij a_ji = 0, 1, 2, 3.
inline int order_m(const CartanData& c, int i, int j) {
    if (i == j) throw std::domain_error("order_m: indices must differ");
    switch (c.entry(i, j) * c.entry(j, i)) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default:
            throw CartanError(CartanError::Kind::NotFiniteType, "a_ij a_ji > 3");
    }
}

/// Connected components of the Dynkin graph restricted to `support`
/// (1-based indices); components sorted, smallest member first.
inline std::vector<std::vector<int>> dynkin_components(const CartanData& c,
                                                       const std::vector<int>& support) {
    std::vector<int> sup = support;
    std::sort(sup.begin(), sup.end());
    sup.erase(std::unique(sup.begin(), sup.end()), sup.end());
    for (int i : sup)
        if (i < 1 || i > c.n) throw std::out_of_range("dynkin_components: index out of range");
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(sup.size(), false);
    for (size_t s = 0; s < sup.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            comp.push_back(sup[u]);
            for (size_t v = 0; v < sup.size(); ++v)
                if (!seen[v] && c.entry(sup[u], sup[v]) != 0) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

/// Cartan data of the sub-diagram spanned by `indices` (1-based, sorted).
inline CartanData subcartan(const CartanData& c, const std::vector<int>& indices) {
    std::vector<std::vector<int>> m(indices.size(), std::vector<int>(indices.size()));
    for (size_t i = 0; i < indices.size(); ++i)
        for (size_t j = 0; j < indices.size(); ++j)
            m[i][j] = c.entry(indices[i], indices[j]);
    return validate(m);
}

}  // namespace weakq
