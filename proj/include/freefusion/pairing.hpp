#pragma once

#include <utility>
#include <vector>

#include "freefusion/fusion.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

/// A non-crossing perfect matching of {1,...,2k}, stored as pairs (i,j) with
/// i < j, listed in increasing order of i.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;

    int points() const { return 2 * static_cast<int>(pairs.size()); }

    /// Re-validates the type invariants: a perfect matching of
    /// {1,...,n_points} with no two pairs crossing.
    bool well_formed(int n_points) const {
        if (n_points != points()) return false;
        std::vector<int> seen(static_cast<std::size_t>(n_points) + 1, 0);
        for (auto [i, j] : pairs) {
            if (i < 1 || j < 1 || i > n_points || j > n_points || i >= j) return false;
            ++seen[static_cast<std::size_t>(i)];
            ++seen[static_cast<std::size_t>(j)];
        }
        for (int p = 1; p <= n_points; ++p)
            if (seen[static_cast<std::size_t>(p)] != 1) return false;
        for (auto [im, jm] : pairs)
            for (auto [in, jn] : pairs)
                if (im < in && in < jm && !(jn < jm)) return false;
        return true;
    }

    friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// A non-crossing matching of the positions of a word in which every pair
/// joins one 'a' with one 'b'.
struct ColoredPairing {
    Pairing base;
    Word word;

    bool well_formed() const {
        if (!base.well_formed(static_cast<int>(word.size()))) return false;
        for (auto [i, j] : base.pairs) {
            Letter li = word[static_cast<std::size_t>(i - 1)];
            Letter lj = word[static_cast<std::size_t>(j - 1)];
            if (li == lj) return false;
        }
        return true;
    }

    friend bool operator==(const ColoredPairing&, const ColoredPairing&) = default;
};

namespace detail {

// Gap-splitting recursion on the index interval [lo, hi): the first open
// position pairs with each admissible partner in ascending order; for each
// partner, the matchings of the enclosed gap vary slower than those of the
// remaining gap. This fixes the canonical enumeration order that the
// fixed-vector bases rely on.
template <typename Admissible>
void enumerate_gaps(int lo, int hi, const Admissible& admissible,
                    std::vector<std::pair<int, int>>& acc,
                    std::vector<std::vector<std::pair<int, int>>>& out) {
    if (lo >= hi) {
        out.push_back(acc);
        return;
    }
    for (int p = lo + 1; p < hi; p += 2) {
        if (!admissible(lo, p)) continue;
        std::vector<std::vector<std::pair<int, int>>> inner;
        {
            std::vector<std::pair<int, int>> tmp;
            enumerate_gaps(lo + 1, p, admissible, tmp, inner);
        }
        std::vector<std::vector<std::pair<int, int>>> outer;
        {
            std::vector<std::pair<int, int>> tmp;
            enumerate_gaps(p + 1, hi, admissible, tmp, outer);
        }
        for (const auto& in : inner)
            for (const auto& ot : outer) {
                auto whole = acc;
                whole.emplace_back(lo, p);
                whole.insert(whole.end(), in.begin(), in.end());
                whole.insert(whole.end(), ot.begin(), ot.end());
                out.push_back(std::move(whole));
            }
    }
}

inline std::vector<Pairing> collect(std::vector<std::vector<std::pair<int, int>>> raw) {
    std::vector<Pairing> out;
    out.reserve(raw.size());
    for (auto& pairs : raw) {
        std::sort(pairs.begin(), pairs.end());
        out.push_back(Pairing{std::move(pairs)});
    }
    return out;
}

} // namespace detail

/// All non-crossing perfect matchings of {1,...,2k} in canonical order.
inline std::vector<Pairing> enumerate_plain(int k) {
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> acc;
    detail::enumerate_gaps(1, 2 * k + 1, [](int, int) { return true; }, acc, raw);
    return detail::collect(std::move(raw));
}

/// All color-matched non-crossing matchings of the positions of w, canonical
/// order. Empty when |w| is odd or the letter counts differ (no admissible
/// partner survives the recursion).
inline std::vector<ColoredPairing> enumerate_colored(const Word& w) {
    const int m = static_cast<int>(w.size());
    if (m % 2 != 0) return {};
    std::vector<std::vector<std::pair<int, int>>> raw;
    std::vector<std::pair<int, int>> acc;
    auto admissible = [&w](int i, int j) {
        return w[static_cast<std::size_t>(i - 1)] != w[static_cast<std::size_t>(j - 1)];
    };
    detail::enumerate_gaps(1, m + 1, admissible, acc, raw);
    std::vector<ColoredPairing> out;
    out.reserve(raw.size());
    for (auto& pairs : detail::collect(std::move(raw))) out.push_back(ColoredPairing{std::move(pairs), w});
    return out;
}

/// Number of non-crossing pair partitions of 2k points, by the convolution
/// recursion D_{k+1} = Σ_{x+y=k} D_x D_y. Kept separate from the enumerator
/// so count-versus-enumerate is a genuine two-algorithm cross-check.
inline Int count_plain(int k) {
    std::vector<Int> d(static_cast<std::size_t>(k) + 1);
    d[0] = 1;
    for (int t = 1; t <= k; ++t) {
        Int sum = 0;
        for (int x = 0; x < t; ++x) sum += d[static_cast<std::size_t>(x)] * d[static_cast<std::size_t>(t - 1 - x)];
        d[static_cast<std::size_t>(t)] = sum;
    }
    return d[static_cast<std::size_t>(k)];
}

} // namespace freefusion
