#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "freefusion/fusion.hpp"
#include "freefusion/gaussian_rational.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

/// A subset of the dual, either listed explicitly or described by a
/// prefix/suffix pattern. Membership is decidable and the set can be
/// truncated to its members of bounded length.
class WordSet {
  public:
    static WordSet explicit_set(std::set<Word> words) {
        WordSet s;
        s.kind_ = Kind::Explicit;
        s.words_ = std::move(words);
        return s;
    }

    static WordSet singleton(Word w) { return explicit_set({std::move(w)}); }

    static WordSet starts_with(Word prefix) {
        WordSet s;
        s.kind_ = Kind::StartsWith;
        s.prefix_ = std::move(prefix);
        return s;
    }

    static WordSet ends_with(Word suffix) {
        WordSet s;
        s.kind_ = Kind::EndsWith;
        s.suffix_ = std::move(suffix);
        return s;
    }

    static WordSet starts_and_ends(Word prefix, Word suffix) {
        WordSet s;
        s.kind_ = Kind::StartsAndEnds;
        s.prefix_ = std::move(prefix);
        s.suffix_ = std::move(suffix);
        return s;
    }

    static WordSet unite(std::vector<WordSet> parts) {
        WordSet s;
        s.kind_ = Kind::Union;
        s.parts_ = std::move(parts);
        return s;
    }

    bool contains(const Word& w) const {
        switch (kind_) {
        case Kind::Explicit: return words_.count(w) != 0;
        case Kind::StartsWith: return w.starts_with(prefix_);
        case Kind::EndsWith: return w.ends_with(suffix_);
        case Kind::StartsAndEnds: return w.starts_with(prefix_) && w.ends_with(suffix_);
        case Kind::Union:
            for (const WordSet& p : parts_)
                if (p.contains(w)) return true;
            return false;
        }
        return false;
    }

    /// Members of length <= max_len, shortlex order.
    std::vector<Word> members_up_to(std::size_t max_len) const {
        std::vector<Word> out;
        if (kind_ == Kind::Explicit) {
            for (const Word& w : words_)
                if (w.size() <= max_len) out.push_back(w);
            return out;
        }
        for (const Word& w : words_up_to(max_len))
            if (contains(w)) out.push_back(w);
        return out;
    }

  private:
    enum class Kind { Explicit, StartsWith, EndsWith, StartsAndEnds, Union };
    Kind kind_ = Kind::Explicit;
    std::set<Word> words_;
    Word prefix_, suffix_;
    std::vector<WordSet> parts_;
};

/// Set-level fusion, truncated: every word in the support of fuse(x, y) for
/// x in A, y in B of length <= max_len, keeping results of length <= max_len.
/// Monotone in both arguments.
inline std::set<Word> set_fuse(const std::vector<Word>& A, const std::vector<Word>& B,
                               std::size_t max_len) {
    std::set<Word> out;
    for (const Word& x : A) {
        if (x.size() > max_len) continue;
        for (const Word& y : B) {
            if (y.size() > max_len) continue;
            FusionElement prod = fuse(x, y);
            for (const auto& [w, c] : prod.terms())
                if (w.size() <= max_len) out.insert(w);
        }
    }
    return out;
}

inline std::set<Word> set_fuse(const WordSet& A, const WordSet& B, std::size_t max_len) {
    return set_fuse(A.members_up_to(max_len), B.members_up_to(max_len), max_len);
}

/// Bounded-length check of the partition/disjointness combinatorics behind
/// the simplicity argument, with D = {a...}, E = {b...} ∪ {e}, F = {b...a}
/// and the three probe words r1 = bab, r2 = baab, r3 = baaab.
struct Lemma12Report {
    std::size_t max_len = 0;
    bool partition_ok = false;
    bool fd_disjoint = false;
    bool orbits_disjoint = false;
    std::optional<Word> witness; // a word violating one of the claims
    std::string detail;

    bool pass() const { return partition_ok && fd_disjoint && orbits_disjoint; }
};

/// The same check with caller-supplied probe words (exercises the failure
/// path: probes with equal fused orbits must produce a witness).
inline Lemma12Report check_lemma12_with(const Word& r1, const Word& r2, const Word& r3,
                                        std::size_t max_len) {
    if (max_len < 6) throw domain_error("lemma 12 check needs max_len >= 6");
    Lemma12Report rep;
    rep.max_len = max_len;

    Word a = parse_word("a"), b = parse_word("b");
    WordSet D = WordSet::starts_with(a);
    WordSet E = WordSet::unite({WordSet::starts_with(b), WordSet::singleton(Word())});
    WordSet Fset = WordSet::starts_and_ends(b, a);

    rep.partition_ok = true;
    for (const Word& w : words_up_to(max_len)) {
        bool in_d = D.contains(w), in_e = E.contains(w);
        if (in_d == in_e) {
            rep.partition_ok = false;
            rep.witness = w;
            rep.detail = "partition failure at " + format_word(w);
            return rep;
        }
    }

    rep.fd_disjoint = true;
    for (const Word& w : set_fuse(Fset, D, max_len))
        if (D.contains(w)) {
            rep.fd_disjoint = false;
            rep.witness = w;
            rep.detail = "F∘D meets D at " + format_word(w);
            return rep;
        }

    rep.orbits_disjoint = true;
    const Word rs[3] = {r1, r2, r3};
    std::set<Word> orbits[3];
    for (int i = 0; i < 3; ++i) orbits[i] = set_fuse(WordSet::singleton(rs[i]), E, max_len);
    for (int i = 0; i < 3 && rep.orbits_disjoint; ++i)
        for (int j = i + 1; j < 3 && rep.orbits_disjoint; ++j)
            for (const Word& w : orbits[i])
                if (orbits[j].count(w)) {
                    rep.orbits_disjoint = false;
                    rep.witness = w;
                    rep.detail = "orbits of " + format_word(rs[i]) + " and " + format_word(rs[j]) +
                                 " meet at " + format_word(w);
                    break;
                }
    if (rep.pass())
        rep.detail = "all words of length <= " + std::to_string(max_len) + " checked";
    return rep;
}

inline Lemma12Report check_lemma12(std::size_t max_len) {
    return check_lemma12_with(parse_word("bab"), parse_word("baab"), parse_word("baaab"), max_len);
}

/// Is (ba)^N ∘ F ∘ (ba)^N contained in {b...a} ∪ {e}, with all fusions
/// truncated at length 2N + max member length of F?
inline bool lemma13_admissible(const std::set<Word>& fset, std::size_t N) {
    std::size_t max_f = 0;
    for (const Word& w : fset) max_f = std::max(max_f, w.size());
    const std::size_t bound = 2 * N + max_f;
    Word ba_n;
    for (std::size_t i = 0; i < N; ++i) {
        ba_n.push_back(Letter::Beta);
        ba_n.push_back(Letter::Alpha);
    }
    std::vector<Word> conjugator = {ba_n};
    std::vector<Word> middle(fset.begin(), fset.end());
    std::set<Word> once = set_fuse(conjugator, middle, bound);
    std::set<Word> twice =
        set_fuse(std::vector<Word>(once.begin(), once.end()), conjugator, bound);
    Word b = parse_word("b"), a = parse_word("a");
    for (const Word& w : twice) {
        if (w.empty()) continue;
        if (!(w.starts_with(b) && w.ends_with(a))) return false;
    }
    return true;
}

/// Least N <= max_n that is admissible, or nullopt.
inline std::optional<std::size_t> check_lemma13(const std::set<Word>& fset, std::size_t max_n) {
    for (std::size_t N = 0; N <= max_n; ++N)
        if (lemma13_admissible(fset, N)) return N;
    return std::nullopt;
}

/// Monte-Carlo check of the compression bound |<xξ,ξ>| <= 2√(δ-δ²) ||x||
/// for Hermitian x with pxp = 0 and unit ξ with <qξ,ξ> <= δ. This is the
/// single floating-point computation in the library; everything else is
/// exact. The tolerance 1e-9 absorbs rounding.
struct Lemma10Report {
    int dim = 0;
    double delta = 0.0;
    int trials = 0;
    std::uint64_t seed = 0;
    double max_ratio = 0.0;
    bool pass = false;
};

namespace detail {

inline Eigen::VectorXcd random_unit_in_range(const Eigen::MatrixXcd& proj, std::mt19937_64& rng,
                                             std::normal_distribution<double>& gauss) {
    const auto d = proj.rows();
    while (true) {
        Eigen::VectorXcd g(d);
        for (Eigen::Index i = 0; i < d; ++i) g(i) = std::complex<double>(gauss(rng), gauss(rng));
        Eigen::VectorXcd v = proj * g;
        double nrm = v.norm();
        if (nrm > 1e-8) return v / nrm;
    }
}

} // namespace detail

/// Runs `trials` random configurations in dimension d with the given bound
/// parameter delta in (0, 1/2); reproducible for a fixed seed (mt19937_64).
inline Lemma10Report lemma10_trial(int d, const Rational& delta, int trials, std::uint64_t seed) {
    if (d < 2) throw domain_error("lemma 10 trial needs dimension >= 2");
    const double del = boost::multiprecision::numerator(delta).convert_to<double>() /
                       boost::multiprecision::denominator(delta).convert_to<double>();
    if (!(del > 0.0 && del < 0.5)) throw domain_error("lemma 10 trial needs 0 < delta < 1/2");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> rank_dist(1, d - 1);

    const double bound = 2.0 * std::sqrt(del - del * del);
    double max_ratio = 0.0;

    for (int t = 0; t < trials; ++t) {
        const int k = rank_dist(rng); // rank of q
        Eigen::MatrixXcd q = Eigen::MatrixXcd::Zero(d, d);
        for (int i = 0; i < k; ++i) q(i, i) = 1.0;
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(d, d) - q;

        Eigen::MatrixXcd g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
        Eigen::MatrixXcd x = (g + g.adjoint()) / 2.0;
        x -= p * x * p; // now pxp = 0 and x stays Hermitian

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x, Eigen::EigenvaluesOnly);
        const double norm_x = es.eigenvalues().cwiseAbs().maxCoeff();
        if (norm_x < 1e-12) continue;

        Eigen::VectorXcd xi_p = detail::random_unit_in_range(p, rng, gauss);
        Eigen::VectorXcd xi_q = detail::random_unit_in_range(q, rng, gauss);
        const double w = del * unif(rng); // <qξ,ξ> = w <= delta
        Eigen::VectorXcd xi = std::sqrt(1.0 - w) * xi_p + std::sqrt(w) * xi_q;

        const double val = std::abs((xi.adjoint() * (x * xi)).value());
        max_ratio = std::max(max_ratio, val / (bound * norm_x));
    }

    Lemma10Report rep;
    rep.dim = d;
    rep.delta = del;
    rep.trials = trials;
    rep.seed = seed;
    rep.max_ratio = max_ratio;
    rep.pass = max_ratio <= 1.0 + 1e-9;
    return rep;
}

/// The 2x2 configuration that saturates the bound: p = diag(0,1),
/// x = [[0,1],[1,0]], ξ = (√δ, √(1-δ)). Returns its ratio, which is 1 up to
/// rounding.
inline double lemma10_extremal_ratio(const Rational& delta) {
    const double del = boost::multiprecision::numerator(delta).convert_to<double>() /
                       boost::multiprecision::denominator(delta).convert_to<double>();
    if (!(del > 0.0 && del < 0.5)) throw domain_error("lemma 10 needs 0 < delta < 1/2");
    Eigen::Matrix2cd x;
    x << 0.0, 1.0, 1.0, 0.0;
    Eigen::Vector2cd xi(std::sqrt(del), std::sqrt(1.0 - del));
    const double val = std::abs((xi.adjoint() * (x * xi)).value());
    return val / (2.0 * std::sqrt(del - del * del)); // ||x|| = 1
}

} // namespace freefusion
