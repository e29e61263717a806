#pragma once

#include <map>
#include <utility>
#include <vector>

#include "freefusion/fusion.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

/// Number of basis words of length <= depth: 2^{depth+1} - 1.
inline int fock_dimension(int depth) { return (1 << (depth + 1)) - 1; }

/// Basis position of a word: words ordered by length, then lexicographically
/// (a < b). A word of length m with binary value v (a = 0, b = 1, big-endian)
/// sits at index 2^m - 1 + v.
inline int fock_index(const Word& w) {
    int v = 0;
    for (Letter l : w) v = 2 * v + (l == Letter::Beta ? 1 : 0);
    return (1 << w.size()) - 1 + v;
}

/// The basis itself, in index order (equals words_up_to(depth)).
inline std::vector<Word> fock_basis(int depth) {
    return words_up_to(static_cast<std::size_t>(depth));
}

/// A linear operator on the span of the words of length <= depth, stored as a
/// sparse integer matrix. The creation operators S, T have entries in {0,1}
/// and their adjoints are plain transposes.
struct TruncatedOperator {
    int depth = 0;
    std::map<std::pair<int, int>, Int> entries; // (row, col) -> value

    Int at(int row, int col) const {
        auto it = entries.find({row, col});
        return it == entries.end() ? Int(0) : it->second;
    }

    void add(int row, int col, const Int& v) {
        if (v == 0) return;
        auto [it, inserted] = entries.emplace(std::make_pair(row, col), v);
        if (!inserted) {
            it->second += v;
            if (it->second == 0) entries.erase(it);
        }
    }

    TruncatedOperator transposed() const {
        TruncatedOperator out;
        out.depth = depth;
        for (const auto& [rc, v] : entries) out.add(rc.second, rc.first, v);
        return out;
    }

    std::vector<Int> apply(const std::vector<Int>& x) const {
        std::vector<Int> y(x.size(), Int(0));
        for (const auto& [rc, v] : entries) {
            const Int& xc = x[static_cast<std::size_t>(rc.second)];
            if (xc != 0) y[static_cast<std::size_t>(rc.first)] += v * xc;
        }
        return y;
    }

    friend TruncatedOperator operator+(const TruncatedOperator& a, const TruncatedOperator& b) {
        TruncatedOperator out = a;
        for (const auto& [rc, v] : b.entries) out.add(rc.first, rc.second, v);
        return out;
    }

    friend TruncatedOperator operator*(const TruncatedOperator& a, const TruncatedOperator& b) {
        // index columns of a for the sparse product
        std::map<int, std::vector<std::pair<int, Int>>> by_col;
        for (const auto& [rc, v] : a.entries) by_col[rc.second].emplace_back(rc.first, v);
        TruncatedOperator out;
        out.depth = a.depth;
        for (const auto& [rc, v] : b.entries) {
            auto it = by_col.find(rc.first);
            if (it == by_col.end()) continue;
            for (const auto& [row, av] : it->second) out.add(row, rc.second, av * v);
        }
        return out;
    }

    static TruncatedOperator identity(int depth) {
        TruncatedOperator out;
        out.depth = depth;
        for (int i = 0; i < fock_dimension(depth); ++i) out.add(i, i, 1);
        return out;
    }
};

namespace detail {

inline TruncatedOperator creation(int depth, Letter l) {
    TruncatedOperator op;
    op.depth = depth;
    for (const Word& w : fock_basis(depth)) {
        if (static_cast<int>(w.size()) >= depth) continue; // cutoff
        Word lw;
        lw.push_back(l);
        op.add(fock_index(concat(lw, w)), fock_index(w), 1);
    }
    return op;
}

} // namespace detail

/// S: x -> ax for |x| < depth, 0 at the cutoff.
inline TruncatedOperator creation_alpha(int depth) { return detail::creation(depth, Letter::Alpha); }

/// T: x -> bx for |x| < depth, 0 at the cutoff.
inline TruncatedOperator creation_beta(int depth) { return detail::creation(depth, Letter::Beta); }

namespace detail {

// One factor of the chain, using the closed-form basis indexing: a word of
// length m and value v sits at 2^m - 1 + v, the a-child at 2^{m+1} - 1 + v
// and the b-child at 2^{m+1} - 1 + 2^m + v. Writing the four shift pieces
// directly keeps the chain free of sparse-map overhead.
inline std::vector<Int> apply_letter(Letter l, const std::vector<Int>& x, int depth) {
    std::vector<Int> y(x.size(), Int(0));
    for (int m = 0; m < depth; ++m) {
        const std::size_t parent = static_cast<std::size_t>((1 << m) - 1);
        const std::size_t child = static_cast<std::size_t>((1 << (m + 1)) - 1);
        const std::size_t half = static_cast<std::size_t>(1) << m;
        for (std::size_t v = 0; v < half; ++v) {
            if (l == Letter::Alpha) {
                y[child + v] += x[parent + v];        // S
                y[parent + v] += x[child + half + v]; // T*
            } else {
                y[child + half + v] += x[parent + v]; // T
                y[parent + v] += x[child + v];        // S*
            }
        }
    }
    return y;
}

} // namespace detail

/// <op(l1)...op(lm) δ_e, δ_e> with a -> S+T*, b -> S*+T, evaluated as a
/// matrix-vector chain on δ_e. Each factor changes word length by at most
/// one, so any depth >= |w| gives the untruncated value.
inline Int fock_moment_at_depth(const Word& w, int depth) {
    std::vector<Int> vec(static_cast<std::size_t>(fock_dimension(depth)), Int(0));
    vec[static_cast<std::size_t>(fock_index(Word()))] = 1;
    for (std::size_t i = w.size(); i-- > 0;) vec = detail::apply_letter(w[i], vec, depth);
    return vec[static_cast<std::size_t>(fock_index(Word()))];
}

/// The w-patterned *-moment of the standard circular element S + T*, which
/// independently recomputes star_moment(w).
inline Int fock_moment(const Word& w) {
    return fock_moment_at_depth(w, static_cast<int>(w.size()));
}

/// m-th moment of S + S* on the one-generator space: 0 for odd m and the
/// Catalan number C_{m/2} for even m.
inline Int semicircular_moment(int m) {
    std::vector<Int> vec(static_cast<std::size_t>(m) + 1, Int(0));
    vec[0] = 1;
    for (int step = 0; step < m; ++step) {
        std::vector<Int> next(vec.size(), Int(0));
        for (std::size_t i = 0; i < vec.size(); ++i) {
            if (vec[i] == 0) continue;
            if (i + 1 < vec.size()) next[i + 1] += vec[i];
            if (i > 0) next[i - 1] += vec[i];
        }
        vec = std::move(next);
    }
    return vec[0];
}

} // namespace freefusion
