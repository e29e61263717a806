#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freefusion/exact_matrix.hpp"
#include "freefusion/fusion.hpp"
#include "freefusion/gaussian_rational.hpp"
#include "freefusion/pairing.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

// Coordinate conventions used throughout this module.
//
// The composite representation attached to a word w is built from
// u^a = u and u^b = F ubar F^{-1}, both acting on C^n: the conjugate space is
// identified with C^n through the canonical basis. Under this identification
// the invariant pair vectors become, in coordinates,
//
//   a-before-b pair:  coord(s1, s2) = F[s2, s1]
//   b-before-a pair:  coord(s1, s2) = (conj F)^{-1}[s2, s1]
//
// i.e. the weight of a pair always reads the *later* position first, and
// pairs opened by 'b' carry (conj F)^{-1} instead of F. Multi-indices
// (s1, ..., sm) in {1..n}^m are packed big-endian: s1 is the most
// significant base-n digit of the linear coordinate index.

/// Largest tensor dimension n^{|w|} accepted without forcing.
/// Covers |w| <= 12 at n = 2 and |w| <= 8 at n = 3.
inline constexpr std::size_t desk_scale_states = 6561;

/// Hard ceiling even when forced.
inline constexpr std::size_t absolute_max_states = std::size_t(1) << 24;

namespace detail {

inline std::size_t tensor_states(std::size_t n, std::size_t len, bool force) {
    std::size_t states = 1;
    for (std::size_t i = 0; i < len; ++i) {
        states *= n;
        if (states > absolute_max_states)
            throw domain_error("tensor space of dimension " + std::to_string(n) + "^" +
                               std::to_string(len) + " exceeds the hard limit");
    }
    if (!force && states > desk_scale_states)
        throw guardrail_error("tensor space of dimension " + std::to_string(n) + "^" +
                              std::to_string(len) +
                              " exceeds the desk-scale limit; pass --force to override");
    return states;
}

inline void require_deformation_matrix(const ExactMatrix& F) {
    if (F.rows() != F.cols()) throw domain_error("deformation matrix must be square");
    if (F.rows() < 2) throw domain_error("deformation matrix must have size n >= 2");
}

} // namespace detail

/// An exact vector in (C^n)^{tensor |word|}; invariant under the composite
/// representation attached to its word.
struct FixedVector {
    int n = 0;
    Word word;
    std::vector<GaussianRational> coords;

    friend bool operator==(const FixedVector&, const FixedVector&) = default;
};

/// Hermitian inner product, conjugating the first argument.
inline GaussianRational inner(const FixedVector& v, const FixedVector& w) {
    if (v.n != w.n || v.word != w.word) throw domain_error("inner: vectors from different spaces");
    GaussianRational acc;
    for (std::size_t t = 0; t < v.coords.size(); ++t) {
        if (v.coords[t].is_zero()) continue;
        acc += v.coords[t].conj() * w.coords[t];
    }
    return acc;
}

/// Gram matrix; conjugate-symmetric with real non-negative diagonal.
inline ExactMatrix gram(const std::vector<FixedVector>& vs) {
    ExactMatrix g(vs.size(), vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j < i) {
                g.at(i, j) = g.at(j, i).conj();
                continue;
            }
            g.at(i, j) = inner(vs[i], vs[j]);
        }
    return g;
}

/// Checks F * conj(F) = c * Id with c real and nonzero and returns c.
/// Throws not_o_admissible otherwise. Such an F is automatically invertible.
inline Rational validate_o_matrix(const ExactMatrix& F) {
    detail::require_deformation_matrix(F);
    auto c = (F * F.conj()).as_scalar_matrix();
    if (!c || !c->is_real() || c->is_zero())
        throw not_o_admissible("F * conj(F) is not a real nonzero multiple of the identity");
    return c->re;
}

/// Invariant vector of the 2k-fold tensor power attached to a plain
/// non-crossing pairing P: the coordinate at (s_1,...,s_{2k}) is the product
/// over pairs (i,j) of F[s_j, s_i].
inline FixedVector w_vector(const ExactMatrix& F, const Pairing& P, bool force = false) {
    validate_o_matrix(F);
    const std::size_t n = F.rows();
    const std::size_t len = static_cast<std::size_t>(P.points());
    const std::size_t states = detail::tensor_states(n, len, force);
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(Letter::Alpha);
    FixedVector v{static_cast<int>(n), w, std::vector<GaussianRational>(states)};
    std::vector<std::size_t> digits(len, 0);
    for (std::size_t idx = 0; idx < states; ++idx) {
        std::size_t rest = idx;
        for (std::size_t t = len; t-- > 0;) {
            digits[t] = rest % n;
            rest /= n;
        }
        GaussianRational prod = 1;
        for (auto [i, j] : P.pairs) {
            prod *= F.at(digits[static_cast<std::size_t>(j - 1)], digits[static_cast<std::size_t>(i - 1)]);
            if (prod.is_zero()) break;
        }
        v.coords[idx] = prod;
    }
    return v;
}

namespace detail {

// Recursive spanning-set construction over the index interval [lo, hi):
// the leading letter pairs with each admissible partner p in ascending
// order; the enclosed block varies slower than the trailing block. This is
// the same order as enumerate_colored.
inline void z_span(const Word& w, std::size_t lo, std::size_t hi, std::size_t n,
                   const ExactMatrix& F, const ExactMatrix& Fbar_inv,
                   std::vector<std::vector<GaussianRational>>& out) {
    out.clear();
    if (lo >= hi) {
        out.push_back({GaussianRational(1)});
        return;
    }
    const std::size_t len = hi - lo;
    if (len % 2 != 0) return;
    const ExactMatrix& W = (w[lo] == Letter::Alpha) ? F : Fbar_inv;
    auto pow_n = [n](std::size_t e) {
        std::size_t r = 1;
        while (e--) r *= n;
        return r;
    };
    for (std::size_t p = lo + 1; p < hi; p += 2) {
        if (w[p] != flipped(w[lo])) continue;
        std::vector<std::vector<GaussianRational>> inner_vs, outer_vs;
        z_span(w, lo + 1, p, n, F, Fbar_inv, inner_vs);
        if (inner_vs.empty()) continue;
        z_span(w, p + 1, hi, n, F, Fbar_inv, outer_vs);
        if (outer_vs.empty()) continue;
        const std::size_t inner_len = p - lo - 1;
        const std::size_t outer_len = hi - p - 1;
        const std::size_t inner_states = pow_n(inner_len);
        const std::size_t outer_states = pow_n(outer_len);
        for (const auto& M : inner_vs)
            for (const auto& N : outer_vs) {
                std::vector<GaussianRational> v(pow_n(len));
                for (std::size_t s0 = 0; s0 < n; ++s0)
                    for (std::size_t sp = 0; sp < n; ++sp) {
                        const GaussianRational& weight = W.at(sp, s0);
                        if (weight.is_zero()) continue;
                        for (std::size_t I = 0; I < inner_states; ++I) {
                            if (M[I].is_zero()) continue;
                            GaussianRational wm = weight * M[I];
                            std::size_t base = (((s0 * inner_states) + I) * n + sp) * outer_states;
                            for (std::size_t J = 0; J < outer_states; ++J) {
                                if (N[J].is_zero()) continue;
                                v[base + J] += wm * N[J];
                            }
                        }
                    }
                out.push_back(std::move(v));
            }
    }
}

} // namespace detail

/// Spanning set of the invariant vectors of the composite representation of
/// w, built by the recursive pair-insertion construction. The list follows
/// the canonical colored-pairing enumeration order and has exactly
/// generalized_catalan(w) members.
inline std::vector<FixedVector> z_basis(const ExactMatrix& F, const Word& w, bool force = false) {
    detail::require_deformation_matrix(F);
    if (!F.invertible()) throw domain_error("deformation matrix must be invertible");
    const std::size_t n = F.rows();
    detail::tensor_states(n, w.size(), force);
    ExactMatrix Fbar_inv = F.conj().inverse();
    std::vector<std::vector<GaussianRational>> raw;
    detail::z_span(w, 0, w.size(), n, F, Fbar_inv, raw);
    std::vector<FixedVector> out;
    out.reserve(raw.size());
    for (auto& coords : raw)
        out.push_back(FixedVector{static_cast<int>(n), w, std::move(coords)});
    return out;
}

/// The same vector computed from a colored pairing by the closed per-pair
/// product: pairs opened by 'a' weigh F[s_j, s_i], pairs opened by 'b' weigh
/// (conj F)^{-1}[s_j, s_i]. Cross-checks the recursive construction.
inline FixedVector z_vector_closed(const ExactMatrix& F, const ColoredPairing& cp, bool force = false) {
    detail::require_deformation_matrix(F);
    if (!F.invertible()) throw domain_error("deformation matrix must be invertible");
    const std::size_t n = F.rows();
    const std::size_t len = cp.word.size();
    const std::size_t states = detail::tensor_states(n, len, force);
    ExactMatrix Fbar_inv = F.conj().inverse();
    FixedVector v{static_cast<int>(n), cp.word, std::vector<GaussianRational>(states)};
    std::vector<std::size_t> digits(len, 0);
    for (std::size_t idx = 0; idx < states; ++idx) {
        std::size_t rest = idx;
        for (std::size_t t = len; t-- > 0;) {
            digits[t] = rest % n;
            rest /= n;
        }
        GaussianRational prod = 1;
        for (auto [i, j] : cp.base.pairs) {
            const ExactMatrix& W =
                cp.word[static_cast<std::size_t>(i - 1)] == Letter::Alpha ? F : Fbar_inv;
            prod *= W.at(digits[static_cast<std::size_t>(j - 1)], digits[static_cast<std::size_t>(i - 1)]);
            if (prod.is_zero()) break;
        }
        v.coords[idx] = prod;
    }
    return v;
}

/// dim Mor(1, u^w): rank of the Gram matrix of the spanning set.
inline std::size_t fixed_dim(const ExactMatrix& F, const Word& w, bool force = false) {
    return gram(z_basis(F, w, force)).rank();
}

/// Rank of the Gram matrix of the plain pair vectors of 2k points.
inline std::size_t w_span_dim(const ExactMatrix& F, int k, bool force = false) {
    validate_o_matrix(F);
    std::vector<FixedVector> vs;
    for (const Pairing& P : enumerate_plain(k)) vs.push_back(w_vector(F, P, force));
    return gram(vs).rank();
}

namespace detail {

/// Greedy maximal linearly independent subfamily, in canonical order:
/// a vector is kept iff it grows the rank of the Gram matrix.
inline std::vector<FixedVector> independent_subfamily(std::vector<FixedVector> vs) {
    std::vector<FixedVector> sel;
    std::size_t cur = 0;
    for (auto& v : vs) {
        sel.push_back(std::move(v));
        std::size_t r = gram(sel).rank();
        if (r > cur)
            cur = r;
        else
            sel.pop_back();
    }
    return sel;
}

inline ExactMatrix columns_matrix(const std::vector<FixedVector>& sel, std::size_t states) {
    ExactMatrix V(states, sel.size());
    for (std::size_t c = 0; c < sel.size(); ++c)
        for (std::size_t r = 0; r < states; ++r) V.at(r, c) = sel[c].coords[r];
    return V;
}

} // namespace detail

/// Projector onto the invariant vectors of the composite representation of
/// w: P = V (V*V)^{-1} V* over a maximal independent subfamily of the
/// spanning set. Entry (I, J) is the Haar-state value of the (I, J)
/// coefficient of that representation; in particular P is the zero matrix
/// when w has no invariant vectors.
inline ExactMatrix haar_projector(const ExactMatrix& F, const Word& w, bool force = false) {
    std::vector<FixedVector> basis = z_basis(F, w, force);
    const std::size_t states = detail::tensor_states(F.rows(), w.size(), force);
    std::vector<FixedVector> sel = detail::independent_subfamily(std::move(basis));
    if (sel.empty()) return ExactMatrix(states, states);
    ExactMatrix V = detail::columns_matrix(sel, states);
    ExactMatrix Vadj = V.adjoint();
    return V * (Vadj * V).inverse() * Vadj;
}

/// Single projector entry (0-based linear indices), avoiding the full P.
inline GaussianRational haar_entry(const ExactMatrix& F, const Word& w, std::size_t I,
                                   std::size_t J, bool force = false) {
    std::vector<FixedVector> sel = detail::independent_subfamily(z_basis(F, w, force));
    const std::size_t states = detail::tensor_states(F.rows(), w.size(), force);
    if (I >= states || J >= states) throw domain_error("haar_entry: index out of range");
    if (sel.empty()) return {};
    ExactMatrix V = detail::columns_matrix(sel, states);
    ExactMatrix Ginv = (V.adjoint() * V).inverse();
    GaussianRational acc;
    for (std::size_t a = 0; a < sel.size(); ++a)
        for (std::size_t b = 0; b < sel.size(); ++b)
            acc += V.at(I, a) * Ginv.at(a, b) * V.at(J, b).conj();
    return acc;
}

/// The invariant pair vector of the orthogonal theory as an n^2 x 1 column:
/// coord(s1, s2) = F[s2, s1]. Contracting it against itself as in the
/// categorical identity (E* ⊗ Id)(Id ⊗ E) must give an exact scalar matrix.
inline ExactMatrix o_pair_matrix(const ExactMatrix& F) {
    const std::size_t n = F.rows();
    ExactMatrix E(n * n, 1);
    for (std::size_t s1 = 0; s1 < n; ++s1)
        for (std::size_t s2 = 0; s2 < n; ++s2) E.at(s1 * n + s2, 0) = F.at(s2, s1);
    return E;
}

/// The two unitary-theory pair vectors as n^2 x 1 columns: first == Alpha
/// gives coord(s1, s2) = F[s2, s1], first == Beta gives
/// coord(s1, s2) = (conj F)^{-1}[s2, s1].
inline ExactMatrix u_pair_matrix(const ExactMatrix& F, Letter first) {
    detail::require_deformation_matrix(F);
    const std::size_t n = F.rows();
    ExactMatrix W = (first == Letter::Alpha) ? F : F.conj().inverse();
    ExactMatrix E(n * n, 1);
    for (std::size_t s1 = 0; s1 < n; ++s1)
        for (std::size_t s2 = 0; s2 < n; ++s2) E.at(s1 * n + s2, 0) = W.at(s2, s1);
    return E;
}

} // namespace freefusion
