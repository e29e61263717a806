#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "freefusion/exact_matrix.hpp"
#include "freefusion/fixed_vectors.hpp"
#include "freefusion/fock.hpp"
#include "freefusion/fusion.hpp"
#include "freefusion/pairing.hpp"
#include "freefusion/powers.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline Word random_word(std::mt19937_64& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    Word w;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        w.push_back(bit(rng) ? Letter::Beta : Letter::Alpha);
    return w;
}

/// Independent route for the orthogonal fusion ladder, by the three-term
/// recursion r_1 ⊗ r_k = r_{k-1} + r_{k+1} and multiset bookkeeping.
inline std::vector<unsigned> fuse_o_by_recursion(unsigned k, unsigned s) {
    if (k == 0) return {s};
    if (k == 1) {
        if (s == 0) return {1};
        return {s - 1, s + 1};
    }
    std::vector<unsigned> prev = fuse_o_by_recursion(k - 2, s);
    std::vector<unsigned> mid = fuse_o_by_recursion(k - 1, s);
    std::vector<unsigned> acc;
    for (unsigned t : mid) {
        if (t == 0) {
            acc.push_back(1);
            continue;
        }
        acc.push_back(t - 1);
        acc.push_back(t + 1);
    }
    std::sort(acc.begin(), acc.end());
    // remove one copy of each member of prev
    for (unsigned t : prev) {
        auto it = std::find(acc.begin(), acc.end(), t);
        if (it == acc.end()) return {}; // inconsistent; caller fails the suite
        acc.erase(it);
    }
    return acc;
}

} // namespace detail

/// Cross-oracle invariant suites, ordered by suite name. Every check is
/// exact; a suite failure reports the first offending instance.
inline std::vector<SuiteResult> run_verify(std::size_t max_len) {
    std::vector<SuiteResult> results;
    auto add = [&results](std::string name, bool pass, std::string detail) {
        results.push_back(SuiteResult{std::move(name), pass, std::move(detail)});
    };

    { // catalan-chain
        bool ok = true;
        std::string detail;
        unsigned kmax = static_cast<unsigned>(std::min<std::size_t>(max_len, 12) / 2) + 1;
        for (unsigned k = 0; k <= kmax && ok; ++k) {
            Int closed = catalan_closed(k);
            if (closed != count_plain(static_cast<int>(k)) ||
                closed != Int(enumerate_plain(static_cast<int>(k)).size()) ||
                closed != semicircular_moment(static_cast<int>(2 * k))) {
                ok = false;
                detail = "mismatch at k = " + std::to_string(k);
            }
        }
        if (ok) detail = "closed form = count = enumeration = moments up to k = " + std::to_string(kmax);
        add("catalan-chain", ok, detail);
    }

    { // dimension-consistency
        bool ok = true;
        std::string detail;
        for (int n : {2, 3}) {
            for (const Word& x : words_up_to(4)) {
                for (const Word& y : words_up_to(4)) {
                    Int lhs = 0;
                    FusionElement prod = fuse(x, y);
                    for (const auto& [w, c] : prod.terms()) lhs += c * dim_u(w, n);
                    if (lhs != dim_u(x, n) * dim_u(y, n)) {
                        ok = false;
                        detail = "dim_u not multiplicative at " + format_word(x) + ", " +
                                 format_word(y) + ", n = " + std::to_string(n);
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        if (ok && dim_u(parse_word("ab"), 2) != 3) {
            ok = false;
            detail = "dim of the ab-irreducible at n = 2 is not 3";
        }
        for (unsigned k = 0; ok && k <= 10; ++k)
            if (dim_o(OWeight{k}, 2) != Int(k + 1)) {
                ok = false;
                detail = "dim_o(k, 2) != k + 1 at k = " + std::to_string(k);
            }
        if (ok) detail = "tensor-dimension identities hold for n in {2,3}";
        add("dimension-consistency", ok, detail);
    }

    { // fixed-vectors (small scale: n = 2, |w| <= 4)
        bool ok = true;
        std::string detail;
        ExactMatrix id2 = ExactMatrix::identity(2);
        ExactMatrix sympl(2, 2);
        sympl.at(0, 1) = 1;
        sympl.at(1, 0) = -1;
        for (const ExactMatrix& F : {id2, sympl}) {
            for (const Word& w : words_up_to(4)) {
                if (Int(fixed_dim(F, w)) != generalized_catalan(w)) {
                    ok = false;
                    detail = "rank != generalized Catalan at " + format_word(w);
                    break;
                }
            }
            if (!ok) break;
            for (const char* lit : {"e", "a", "ab", "abab", "aabb"}) {
                Word w = parse_word(lit);
                ExactMatrix P = haar_projector(F, w);
                if (P * P != P || P.adjoint() != P ||
                    P.trace() != GaussianRational(Rational(fixed_dim(F, w)))) {
                    ok = false;
                    detail = "projector laws fail at " + format_word(w);
                    break;
                }
            }
            if (!ok) break;
            ExactMatrix E1 = u_pair_matrix(F, Letter::Alpha);
            ExactMatrix E2 = u_pair_matrix(F, Letter::Beta);
            ExactMatrix idn = ExactMatrix::identity(2);
            auto contraction = [&idn](const ExactMatrix& A, const ExactMatrix& B) {
                return kron(A.adjoint(), idn) * kron(idn, B);
            };
            if (!contraction(E2, E1).as_scalar_matrix() ||
                !contraction(E1, E2).as_scalar_matrix()) {
                ok = false;
                detail = "pair-vector contraction is not scalar";
            }
            if (!ok) break;
        }
        if (ok && w_span_dim(id2, 3) != 5) {
            ok = false;
            detail = "orthogonal span rank at k = 3 is not 5";
        }
        if (ok) detail = "ranks, projector laws and contractions hold at n = 2";
        add("fixed-vectors", ok, detail);
    }

    { // fock-isometries
        bool ok = true;
        std::string detail;
        const int L = 4;
        TruncatedOperator S = creation_alpha(L), T = creation_beta(L);
        TruncatedOperator SS = S.transposed() * S;
        TruncatedOperator TT = T.transposed() * T;
        TruncatedOperator ST = S.transposed() * T;
        const int inner = fock_dimension(L - 1); // words of length < L
        for (int i = 0; i < inner && ok; ++i)
            for (int j = 0; j < inner && ok; ++j) {
                Int want = (i == j) ? 1 : 0;
                if (SS.at(i, j) != want || TT.at(i, j) != want || ST.at(i, j) != 0) {
                    ok = false;
                    detail = "isometry relations fail at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }
            }
        for (const char* lit : {"ab", "abba", "babaab"}) {
            Word w = parse_word(lit);
            if (fock_moment(w) != fock_moment_at_depth(w, static_cast<int>(w.size()) + 2)) {
                ok = false;
                detail = "truncation depth is not sufficient at " + format_word(w);
            }
        }
        if (ok) detail = "S*S = T*T = Id, S*T = 0 and depth sufficiency hold";
        add("fock-isometries", ok, detail);
    }

    { // fusion-ring-laws
        bool ok = true;
        std::string detail;
        std::vector<Word> small = words_up_to(3);
        for (const Word& x : small) {
            for (const Word& y : small) {
                for (const Word& z : small) {
                    FusionElement left = fuse_elements(fuse(x, y), FusionElement::monomial(z));
                    FusionElement right = fuse_elements(FusionElement::monomial(x), fuse(y, z));
                    if (left != right) {
                        ok = false;
                        detail = "associativity fails at " + format_word(x) + "," + format_word(y) +
                                 "," + format_word(z);
                    }
                }
                if (!ok) break;
            }
            if (!ok) break;
        }
        std::mt19937_64 rng(20240229);
        for (int t = 0; t < 200 && ok; ++t) {
            Word x = detail::random_word(rng, 6), y = detail::random_word(rng, 6),
                 z = detail::random_word(rng, 6);
            FusionElement left = fuse_elements(fuse(x, y), FusionElement::monomial(z));
            FusionElement right = fuse_elements(FusionElement::monomial(x), fuse(y, z));
            if (left != right) {
                ok = false;
                detail = "randomized associativity fails";
            }
            if (fuse(Word(), x) != FusionElement::monomial(x) ||
                fuse(x, Word()) != FusionElement::monomial(x)) {
                ok = false;
                detail = "unit law fails";
            }
            FusionElement prod = fuse(x, y);
            if (involute_element(prod) != fuse(involute(y), involute(x))) {
                ok = false;
                detail = "involution is not an antihomomorphism";
            }
        }
        for (const Word& x : words_up_to(4)) {
            for (const Word& y : words_up_to(4)) {
                Int want = (x == y) ? 1 : 0;
                if (tau(fuse(x, involute(y))) != want) {
                    ok = false;
                    detail = "orthonormality fails at " + format_word(x) + ", " + format_word(y);
                }
            }
            if (!ok) break;
        }
        if (ok) detail = "associativity, unit, involution and orthonormality hold";
        add("fusion-ring-laws", ok, detail);
    }

    { // j-isomorphism
        bool ok = true;
        std::string detail;
        for (const Word& w : words_up_to(std::min<std::size_t>(max_len, 6))) {
            FusionElement jw = j_expand(w);
            if (j_inverse(jw) != FusionElement::monomial(w)) {
                ok = false;
                detail = "round trip fails at " + format_word(w);
                break;
            }
            FusionElement diff = jw - FusionElement::monomial(w);
            if (!w.empty() && diff.max_length() >= w.size() && !diff.is_zero()) {
                ok = false;
                detail = "triangularity fails at " + format_word(w);
                break;
            }
            for (const auto& [v, c] : jw.terms())
                if (c < 0) {
                    ok = false;
                    detail = "negative multiplicity at " + format_word(w);
                    break;
                }
        }
        if (ok) detail = "round trip, triangularity and positivity hold";
        add("j-isomorphism", ok, detail);
    }

    { // moment-oracles
        bool ok = true;
        std::string detail;
        std::size_t checked = 0;
        for (const Word& w : words_up_to(max_len)) {
            Int ring = star_moment(w);
            Int rec = generalized_catalan(w);
            Int enumerated = Int(enumerate_colored(w).size());
            Int fock = fock_moment(w);
            ++checked;
            if (ring != rec || ring != enumerated || ring != fock) {
                ok = false;
                detail = "oracle mismatch at " + format_word(w);
                break;
            }
        }
        if (ok)
            detail = "ring = recursion = enumeration = creation-operator value on " +
                     std::to_string(checked) + " words";
        add("moment-oracles", ok, detail);
    }

    { // o-fusion
        bool ok = true;
        std::string detail;
        for (unsigned k = 0; k <= 8 && ok; ++k)
            for (unsigned s = 0; s <= 8 && ok; ++s) {
                std::vector<unsigned> ladder;
                for (OWeight t : fuse_o(OWeight{k}, OWeight{s})) ladder.push_back(t.index);
                if (ladder != detail::fuse_o_by_recursion(k, s)) {
                    ok = false;
                    detail = "ladder mismatch at k = " + std::to_string(k) +
                             ", s = " + std::to_string(s);
                }
                for (int n : {2, 3}) {
                    Int sum = 0;
                    for (OWeight t : fuse_o(OWeight{k}, OWeight{s})) sum += dim_o(t, n);
                    if (sum != dim_o(OWeight{k}, n) * dim_o(OWeight{s}, n)) {
                        ok = false;
                        detail = "dimension identity fails at k = " + std::to_string(k) +
                                 ", s = " + std::to_string(s) + ", n = " + std::to_string(n);
                    }
                }
            }
        if (ok) detail = "ladder and dimension identity hold for k, s <= 8";
        add("o-fusion", ok, detail);
    }

    { // pairing-validity
        bool ok = true;
        std::string detail;
        for (int k = 0; k <= 7 && ok; ++k)
            for (const Pairing& P : enumerate_plain(k))
                if (!P.well_formed(2 * k)) {
                    ok = false;
                    detail = "invalid plain pairing at k = " + std::to_string(k);
                    break;
                }
        for (const Word& w : words_up_to(std::min<std::size_t>(max_len, 8))) {
            auto colored = enumerate_colored(w);
            for (const ColoredPairing& cp : colored)
                if (!cp.well_formed()) {
                    ok = false;
                    detail = "invalid colored pairing at " + format_word(w);
                    break;
                }
            if (w.size() % 2 == 0 &&
                Int(colored.size()) > count_plain(static_cast<int>(w.size() / 2))) {
                ok = false;
                detail = "colored count exceeds plain count at " + format_word(w);
            }
            if (!ok) break;
        }
        if (ok) detail = "all enumerated pairings re-validate; colored <= plain";
        add("pairing-validity", ok, detail);
    }

    { // powers-lemma12
        bool ok = true;
        std::string detail;
        for (std::size_t L : {6, 7, 8}) {
            Lemma12Report rep = check_lemma12(L);
            if (!rep.pass()) {
                ok = false;
                detail = "fails at L = " + std::to_string(L) + ": " + rep.detail;
                break;
            }
        }
        if (ok) detail = "partition and disjointness hold for L in {6,7,8}";
        add("powers-lemma12", ok, detail);
    }

    std::sort(results.begin(), results.end(),
              [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
    return results;
}

} // namespace freefusion
