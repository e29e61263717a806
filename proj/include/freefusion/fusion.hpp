#pragma once

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "freefusion/errors.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

using Int = boost::multiprecision::cpp_int;

/// A finitely supported integer combination of words; an element of the
/// fusion ring (A, +, ⊙). Zero coefficients are never stored. Terms iterate
/// in shortlex order of the support.
class FusionElement {
  public:
    FusionElement() = default;

    static FusionElement unit() { return monomial(Word()); }

    static FusionElement monomial(const Word& w, Int c = 1) {
        FusionElement f;
        f.add(w, c);
        return f;
    }

    const std::map<Word, Int>& terms() const { return coeffs_; }

    Int coeff(const Word& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add(const Word& w, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    FusionElement& operator+=(const FusionElement& g) {
        for (const auto& [w, c] : g.coeffs_) add(w, c);
        return *this;
    }

    FusionElement& operator-=(const FusionElement& g) {
        for (const auto& [w, c] : g.coeffs_) add(w, -c);
        return *this;
    }

    friend FusionElement operator+(FusionElement f, const FusionElement& g) {
        f += g;
        return f;
    }

    friend FusionElement operator-(FusionElement f, const FusionElement& g) {
        f -= g;
        return f;
    }

    bool is_zero() const { return coeffs_.empty(); }

    /// Length of the longest word in the support (0 for the zero element).
    std::size_t max_length() const {
        std::size_t m = 0;
        for (const auto& [w, c] : coeffs_) m = std::max(m, w.size());
        return m;
    }

    friend bool operator==(const FusionElement&, const FusionElement&) = default;

  private:
    std::map<Word, Int> coeffs_;
};

/// Fusion product of two basis words:
///   x ⊙ y = Σ ab over all g with x = a·g and y = involute(g)·b.
/// Distinct cut points give terms of distinct lengths, so every coefficient
/// is 1.
inline FusionElement fuse(const Word& x, const Word& y) {
    FusionElement out;
    for (const auto& [a, g] : splits(x)) {
        Word gbar = involute(g);
        if (!y.starts_with(gbar)) continue;
        Word b = y.subword(gbar.size(), y.size() - gbar.size());
        out.add(concat(a, b), 1);
    }
    return out;
}

/// Bilinear extension of ⊙.
inline FusionElement fuse_elements(const FusionElement& f, const FusionElement& g) {
    FusionElement out;
    for (const auto& [x, cx] : f.terms())
        for (const auto& [y, cy] : g.terms()) {
            FusionElement prod = fuse(x, y);
            for (const auto& [w, c] : prod.terms()) out.add(w, cx * cy * c);
        }
    return out;
}

/// The involution of the ring, word by word. Integer coefficients are fixed.
inline FusionElement involute_element(const FusionElement& f) {
    FusionElement out;
    for (const auto& [w, c] : f.terms()) out.add(involute(w), c);
    return out;
}

/// J maps the free-monomial basis to the fusion basis:
/// J(l1 l2 ... lm) = l1 ⊙ (l2 ⊙ (... ⊙ e)). The coefficients of J(x) are the
/// multiplicities of the irreducibles inside the tensor word u^x, hence
/// non-negative, and (J - Id) strictly lowers word length.
inline FusionElement j_expand(const Word& x) {
    FusionElement acc = FusionElement::unit();
    for (std::size_t i = x.size(); i-- > 0;)
        acc = fuse_elements(FusionElement::monomial(x.subword(i, 1)), acc);
    return acc;
}

/// Linear extension of j_expand.
inline FusionElement j_apply(const FusionElement& f) {
    FusionElement out;
    for (const auto& [w, c] : f.terms()) {
        FusionElement jw = j_expand(w);
        for (const auto& [v, d] : jw.terms()) out.add(v, c * d);
    }
    return out;
}

/// Inverse of J by the finite Neumann series f = Σ_{i>=0} (Id - J)^i g.
/// (Id - J) lowers the maximal support length, so the series stops after at
/// most max_length(g) + 1 terms.
inline FusionElement j_inverse(const FusionElement& g) {
    FusionElement acc = g;
    FusionElement term = g;
    while (!term.is_zero()) {
        term = term - j_apply(term);
        acc += term;
    }
    return acc;
}

/// τ(f) = coefficient of the empty word. On the fusion basis, τ(x ⊙ ȳ) is
/// the Kronecker delta of x and y.
inline Int tau(const FusionElement& f) { return f.coeff(Word()); }

/// dim Mor(1, u^w) = the w-patterned *-moment of the fundamental character.
/// Equals 2^{|w|} times the matching *-moment of a circular variable.
inline Int star_moment(const Word& w) { return tau(j_expand(w)); }

/// Generalized Catalan number C_w: C_e = 1, C_a = C_b = 0 and
///   C_w = Σ_{w = a x b y} C_x C_y + Σ_{w = b x a y} C_x C_y.
/// Memoized on the contiguous subwords of w; the cache is local to the call,
/// keeping the function pure.
inline Int generalized_catalan(const Word& w) {
    const std::size_t m = w.size();
    // value for subword [i, j), or -1 while unknown
    std::vector<Int> memo((m + 1) * (m + 1), Int(-1));
    auto idx = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> Int {
        Int& slot = memo[idx(i, j)];
        if (slot >= 0) return slot;
        if (((j - i) % 2) != 0) return slot = 0;
        if (i == j) return slot = 1;
        Int total = 0;
        Letter partner = flipped(w[i]);
        for (std::size_t p = i + 1; p < j; p += 2)
            if (w[p] == partner)
                total += self(self, i + 1, p) * self(self, p + 1, j);
        return slot = total;
    };
    return rec(rec, 0, m);
}

/// Catalan number (2k)! / (k! (k+1)!).
inline Int catalan_closed(unsigned k) {
    Int num = 1;
    for (unsigned i = 1; i <= 2 * k; ++i) num *= i;
    Int den = 1;
    for (unsigned i = 1; i <= k; ++i) den *= i;
    Int den2 = den * (k + 1);
    return num / (den * den2);
}

/// Dimension of the irreducible indexed by w when the fundamental matrix has
/// size n: d(e) = 1 and d(l·x) = n d(x) - d(x') if x = involute(l)·x', else
/// n d(x). Rejects n <= 1, where the word indexing degenerates.
inline Int dim_u(const Word& w, int n) {
    if (n <= 1) throw domain_error("dim_u requires n >= 2");
    const std::size_t m = w.size();
    // d over suffixes, built right to left
    std::vector<Int> d(m + 1);
    d[m] = 1;
    for (std::size_t t = m; t-- > 0;) {
        d[t] = Int(n) * d[t + 1];
        if (t + 1 < m && w[t + 1] == flipped(w[t])) d[t] -= d[t + 2];
    }
    return d[0];
}

/// Label of an irreducible in the orthogonal (SU(2)-patterned) series.
struct OWeight {
    unsigned index = 0;
    friend bool operator==(const OWeight&, const OWeight&) = default;
    friend auto operator<=>(const OWeight&, const OWeight&) = default;
};

/// r_k ⊗ r_s = r_{|k-s|} + r_{|k-s|+2} + ... + r_{k+s}, each once.
inline std::vector<OWeight> fuse_o(OWeight k, OWeight s) {
    unsigned lo = k.index > s.index ? k.index - s.index : s.index - k.index;
    unsigned hi = k.index + s.index;
    std::vector<OWeight> out;
    for (unsigned t = lo; t <= hi; t += 2) out.push_back(OWeight{t});
    return out;
}

/// Dimensions along the orthogonal series: d_0 = 1, d_1 = n,
/// d_{k+1} = n d_k - d_{k-1}. Rejects n <= 1.
inline Int dim_o(OWeight k, int n) {
    if (n <= 1) throw domain_error("dim_o requires n >= 2");
    Int prev = 1, cur = n;
    if (k.index == 0) return prev;
    for (unsigned t = 1; t < k.index; ++t) {
        Int next = Int(n) * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace freefusion
