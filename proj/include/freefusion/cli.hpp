#pragma once

#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freefusion/exact_matrix.hpp"
#include "freefusion/fixed_vectors.hpp"
#include "freefusion/fock.hpp"
#include "freefusion/fusion.hpp"
#include "freefusion/pairing.hpp"
#include "freefusion/powers.hpp"
#include "freefusion/verify.hpp"
#include "freefusion/word.hpp"

namespace freefusion {

namespace cli_detail {

using Json = nlohmann::ordered_json;

inline Json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return v.convert_to<long long>();
    return v.str(); // too large for a JSON number; emit as string
}

inline Json element_json(const FusionElement& f) {
    Json obj = Json::object();
    for (const auto& [w, c] : f.terms()) obj[format_word(w)] = int_json(c);
    return obj;
}

inline Json gaussian_json(const GaussianRational& z) {
    return Json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}};
}

inline Json matrix_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(gaussian_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json pairing_json(const Pairing& p) {
    Json arr = Json::array();
    for (auto [i, j] : p.pairs) arr.push_back(Json::array({i, j}));
    return arr;
}

inline bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline unsigned long parse_unsigned(const std::string& s) {
    if (!all_digits(s)) throw parse_error("expected a non-negative integer, got \"" + s + "\"");
    try {
        return std::stoul(s);
    } catch (const std::out_of_range&) {
        throw parse_error("integer out of range: " + s);
    }
}

inline bool force_env() {
    const char* v = std::getenv("FREEFUSION_FORCE");
    return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

inline std::vector<Word> parse_word_list(const std::string& csv) {
    std::vector<Word> out;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (!token.empty()) out.push_back(parse_word(token));
    }
    return out;
}

} // namespace cli_detail

/// Runs one CLI invocation. Emits a single JSON document with the fields
/// {verb, inputs, result, provenance}. Returns 0 on success, 1 on a domain
/// error, 2 on a parse error; `verify` returns 0 iff every suite passes.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::Json;

    CLI::App app{"exact fusion-rule, moment and invariant-vector calculator"};
    app.require_subcommand(1);

    Json doc;
    int rc = 0;

    // fuse X Y
    {
        auto* cmd = app.add_subcommand("fuse", "fusion product of two basis words");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        cmd->add_option("x", *x, "left word")->required();
        cmd->add_option("y", *y, "right word")->required();
        cmd->callback([&doc, x, y] {
            FusionElement f = fuse(parse_word(*x), parse_word(*y));
            doc = Json{{"verb", "fuse"},
                       {"inputs", Json{{"x", *x}, {"y", *y}}},
                       {"result", cli_detail::element_json(f)},
                       {"provenance", "prefix-suffix split enumeration"}};
        });
    }

    // decompose W
    {
        auto* cmd = app.add_subcommand("decompose", "irreducible multiplicities in a tensor word");
        auto w = std::make_shared<std::string>();
        cmd->add_option("word", *w, "tensor word")->required();
        cmd->callback([&doc, w] {
            doc = Json{{"verb", "decompose"},
                       {"inputs", Json{{"word", *w}}},
                       {"result", cli_detail::element_json(j_expand(parse_word(*w)))},
                       {"provenance", "iterated letter fusion"}};
        });
    }

    // moment W
    {
        auto* cmd = app.add_subcommand("moment", "patterned *-moment of the fundamental character");
        auto w = std::make_shared<std::string>();
        cmd->add_option("word", *w, "moment pattern")->required();
        cmd->callback([&doc, w] {
            doc = Json{{"verb", "moment"},
                       {"inputs", Json{{"word", *w}}},
                       {"result", cli_detail::int_json(star_moment(parse_word(*w)))},
                       {"provenance", "fusion-ring unit coefficient"}};
        });
    }

    // catalan W|K
    {
        auto* cmd = app.add_subcommand("catalan", "generalized Catalan count (word) or Catalan number (integer)");
        auto arg = std::make_shared<std::string>();
        cmd->add_option("arg", *arg, "word or non-negative integer")->required();
        cmd->callback([&doc, arg] {
            if (cli_detail::all_digits(*arg)) {
                unsigned k = static_cast<unsigned>(cli_detail::parse_unsigned(*arg));
                doc = Json{{"verb", "catalan"},
                           {"inputs", Json{{"k", k}}},
                           {"result", cli_detail::int_json(catalan_closed(k))},
                           {"provenance", "closed-form factorial quotient"}};
            } else {
                doc = Json{{"verb", "catalan"},
                           {"inputs", Json{{"word", *arg}}},
                           {"result", cli_detail::int_json(generalized_catalan(parse_word(*arg)))},
                           {"provenance", "two-sided factorization recursion"}};
            }
        });
    }

    // dims --group u|o --n N W|K
    {
        auto* cmd = app.add_subcommand("dims", "dimension of an irreducible representation");
        auto group = std::make_shared<std::string>();
        auto n = std::make_shared<int>(2);
        auto arg = std::make_shared<std::string>();
        cmd->add_option("--group", *group, "u (word labels) or o (integer labels)")
            ->required()
            ->check(CLI::IsMember({"u", "o"}));
        cmd->add_option("--n", *n, "size of the fundamental matrix")->required();
        cmd->add_option("label", *arg, "word (group u) or integer (group o)")->required();
        cmd->callback([&doc, group, n, arg] {
            Int d;
            Json inputs{{"group", *group}, {"n", *n}, {"label", *arg}};
            if (*group == "u") {
                d = dim_u(parse_word(*arg), *n);
            } else {
                if (!cli_detail::all_digits(*arg))
                    throw parse_error("group o labels are non-negative integers");
                d = dim_o(OWeight{static_cast<unsigned>(cli_detail::parse_unsigned(*arg))}, *n);
            }
            doc = Json{{"verb", "dims"},
                       {"inputs", inputs},
                       {"result", cli_detail::int_json(d)},
                       {"provenance", *group == "u" ? "split-off letter recursion"
                                                    : "three-term recursion"}};
        });
    }

    // pairings W|K [--list]
    {
        auto* cmd = app.add_subcommand("pairings", "non-crossing pair partitions, colored or plain");
        auto arg = std::make_shared<std::string>();
        auto list = std::make_shared<bool>(false);
        cmd->add_option("arg", *arg, "word (colored) or integer k (plain, 2k points)")->required();
        cmd->add_flag("--list", *list, "also list the pairings");
        cmd->callback([&doc, arg, list] {
            Json result;
            // counting and enumeration are independent algorithms; the verb
            // uses the counting recursions unless a listing is requested
            const char* provenance = *list ? "recursive gap-splitting enumeration"
                                           : "counting recursion";
            if (cli_detail::all_digits(*arg)) {
                int k = static_cast<int>(cli_detail::parse_unsigned(*arg));
                if (*list) {
                    auto ps = enumerate_plain(k);
                    result["count"] = static_cast<long long>(ps.size());
                    Json arr = Json::array();
                    for (const auto& p : ps) arr.push_back(cli_detail::pairing_json(p));
                    result["pairings"] = std::move(arr);
                } else {
                    result["count"] = cli_detail::int_json(count_plain(k));
                }
            } else {
                Word w = parse_word(*arg);
                if (*list) {
                    auto cps = enumerate_colored(w);
                    result["count"] = static_cast<long long>(cps.size());
                    Json arr = Json::array();
                    for (const auto& cp : cps) arr.push_back(cli_detail::pairing_json(cp.base));
                    result["pairings"] = std::move(arr);
                } else {
                    result["count"] = cli_detail::int_json(generalized_catalan(w));
                }
            }
            doc = Json{{"verb", "pairings"},
                       {"inputs", Json{{"arg", *arg}}},
                       {"result", std::move(result)},
                       {"provenance", provenance}};
        });
    }

    // fock W
    {
        auto* cmd = app.add_subcommand("fock", "moment recomputed on the truncated full Fock space");
        auto w = std::make_shared<std::string>();
        cmd->add_option("word", *w, "moment pattern")->required();
        cmd->callback([&doc, w] {
            doc = Json{{"verb", "fock"},
                       {"inputs", Json{{"word", *w}}},
                       {"result", cli_detail::int_json(fock_moment(parse_word(*w)))},
                       {"provenance", "creation-operator matrix-vector chain"}};
        });
    }

    // fixed-dim --matrix FILE W
    {
        auto* cmd = app.add_subcommand("fixed-dim", "dimension of the invariant-vector space of a tensor word");
        auto file = std::make_shared<std::string>();
        auto w = std::make_shared<std::string>();
        auto force = std::make_shared<bool>(false);
        cmd->add_option("--matrix", *file, "deformation matrix file")->required();
        cmd->add_option("word", *w, "tensor word")->required();
        cmd->add_flag("--force", *force, "override the desk-scale guardrail");
        cmd->callback([&doc, file, w, force] {
            ExactMatrix F = load_matrix_file(*file);
            std::size_t d = fixed_dim(F, parse_word(*w), *force || cli_detail::force_env());
            doc = Json{{"verb", "fixed-dim"},
                       {"inputs", Json{{"matrix", *file}, {"word", *w}}},
                       {"result", static_cast<long long>(d)},
                       {"provenance", "Gram rank by fraction-free elimination"}};
        });
    }

    // haar --matrix FILE W [--entry I,J]
    {
        auto* cmd = app.add_subcommand("haar", "Haar-state values of a tensor word's coefficients");
        auto file = std::make_shared<std::string>();
        auto w = std::make_shared<std::string>();
        auto entry = std::make_shared<std::string>();
        auto force = std::make_shared<bool>(false);
        cmd->add_option("--matrix", *file, "deformation matrix file")->required();
        cmd->add_option("word", *w, "tensor word")->required();
        cmd->add_option("--entry", *entry, "single entry I,J (1-based linear indices)");
        cmd->add_flag("--force", *force, "override the desk-scale guardrail");
        cmd->callback([&doc, file, w, entry, force] {
            ExactMatrix F = load_matrix_file(*file);
            Word word = parse_word(*w);
            bool f = *force || cli_detail::force_env();
            Json inputs{{"matrix", *file}, {"word", *w}};
            Json result;
            if (!entry->empty()) {
                auto comma = entry->find(',');
                if (comma == std::string::npos) throw parse_error("--entry expects I,J");
                std::string si = entry->substr(0, comma), sj = entry->substr(comma + 1);
                if (!cli_detail::all_digits(si) || !cli_detail::all_digits(sj))
                    throw parse_error("--entry expects 1-based integer indices I,J");
                std::size_t I = cli_detail::parse_unsigned(si), J = cli_detail::parse_unsigned(sj);
                if (I == 0 || J == 0) throw parse_error("--entry indices are 1-based");
                inputs["entry"] = *entry;
                result = cli_detail::gaussian_json(haar_entry(F, word, I - 1, J - 1, f));
            } else {
                result = cli_detail::matrix_json(haar_projector(F, word, f));
            }
            doc = Json{{"verb", "haar"},
                       {"inputs", inputs},
                       {"result", std::move(result)},
                       {"provenance", "projector onto invariant vectors"}};
        });
    }

    // o-span --matrix FILE K
    {
        auto* cmd = app.add_subcommand("o-span", "rank of the plain pair-vector family of 2k points");
        auto file = std::make_shared<std::string>();
        auto k = std::make_shared<int>(0);
        auto force = std::make_shared<bool>(false);
        cmd->add_option("--matrix", *file, "deformation matrix file (must satisfy F conj(F) = c Id)")
            ->required();
        cmd->add_option("k", *k, "half the number of points")->required()->check(CLI::NonNegativeNumber);
        cmd->add_flag("--force", *force, "override the desk-scale guardrail");
        cmd->callback([&doc, file, k, force] {
            ExactMatrix F = load_matrix_file(*file);
            std::size_t d = w_span_dim(F, *k, *force || cli_detail::force_env());
            doc = Json{{"verb", "o-span"},
                       {"inputs", Json{{"matrix", *file}, {"k", *k}}},
                       {"result", static_cast<long long>(d)},
                       {"provenance", "Gram rank by fraction-free elimination"}};
        });
    }

    // powers lemma12|lemma13|lemma10
    {
        auto* powers = app.add_subcommand("powers", "set-fusion combinatorics and the compression bound");
        powers->require_subcommand(1);

        auto* l12 = powers->add_subcommand("lemma12", "partition/disjointness check");
        auto max_len12 = std::make_shared<std::size_t>(8);
        l12->add_option("--max-len", *max_len12, "word length bound (>= 6)");
        l12->callback([&doc, &rc, max_len12] {
            Lemma12Report rep = check_lemma12(*max_len12);
            Json result{{"pass", rep.pass()},
                        {"partition_ok", rep.partition_ok},
                        {"fd_disjoint", rep.fd_disjoint},
                        {"orbits_disjoint", rep.orbits_disjoint},
                        {"detail", rep.detail}};
            if (rep.witness) result["witness"] = format_word(*rep.witness);
            doc = Json{{"verb", "powers lemma12"},
                       {"inputs", Json{{"max_len", *max_len12}}},
                       {"result", std::move(result)},
                       {"provenance", "bounded-length set fusion"}};
            if (!rep.pass()) rc = 1;
        });

        auto* l13 = powers->add_subcommand("lemma13", "smallest admissible conjugation exponent");
        auto set_csv = std::make_shared<std::string>();
        auto max_n = std::make_shared<std::size_t>(8);
        l13->add_option("--set", *set_csv, "comma-separated word set, e.g. ab,ba")->required();
        l13->add_option("--max-n", *max_n, "largest exponent to try");
        l13->callback([&doc, set_csv, max_n] {
            std::set<Word> fset;
            for (const Word& w : cli_detail::parse_word_list(*set_csv)) fset.insert(w);
            auto found = check_lemma13(fset, *max_n);
            Json result;
            if (found)
                result = Json{{"admissible_n", static_cast<long long>(*found)}};
            else
                result = Json{{"admissible_n", nullptr}};
            doc = Json{{"verb", "powers lemma13"},
                       {"inputs", Json{{"set", *set_csv}, {"max_n", *max_n}}},
                       {"result", std::move(result)},
                       {"provenance", "bounded-length set fusion"}};
        });

        auto* l10 = powers->add_subcommand("lemma10", "Monte-Carlo check of the compression bound");
        auto dim = std::make_shared<int>(2);
        auto delta = std::make_shared<std::string>("1/3");
        auto trials = std::make_shared<int>(10000);
        auto seed = std::make_shared<std::uint64_t>(1);
        l10->add_option("--dim", *dim, "matrix dimension (>= 2)");
        l10->add_option("--delta", *delta, "bound parameter in (0, 1/2), as p/q");
        l10->add_option("--trials", *trials, "number of random configurations");
        l10->add_option("--seed", *seed, "random seed");
        l10->callback([&doc, &rc, dim, delta, trials, seed] {
            Rational d = parse_rational(*delta);
            Lemma10Report rep = lemma10_trial(*dim, d, *trials, *seed);
            doc = Json{{"verb", "powers lemma10"},
                       {"inputs", Json{{"dim", *dim},
                                       {"delta", *delta},
                                       {"trials", *trials},
                                       {"seed", *seed}}},
                       {"result", Json{{"max_ratio", rep.max_ratio},
                                       {"extremal_ratio", lemma10_extremal_ratio(d)},
                                       {"pass", rep.pass}}},
                       {"provenance", "seeded Monte-Carlo sampling"}};
            if (!rep.pass) rc = 1;
        });
    }

    // verify [--max-len L]
    {
        auto* cmd = app.add_subcommand("verify", "run the full cross-oracle invariant suite");
        auto max_len = std::make_shared<std::size_t>(8);
        cmd->add_option("--max-len", *max_len, "word length bound for the moment oracles");
        cmd->callback([&doc, &rc, max_len] {
            auto suites = run_verify(*max_len);
            Json arr = Json::array();
            bool all = true;
            for (const SuiteResult& s : suites) {
                arr.push_back(Json{{"suite", s.name}, {"pass", s.pass}, {"detail", s.detail}});
                all = all && s.pass;
            }
            doc = Json{{"verb", "verify"},
                       {"inputs", Json{{"max_len", *max_len}}},
                       {"result", std::move(arr)},
                       {"provenance", "composite invariant suites"}};
            if (!all) rc = 1;
        });
    }

    std::vector<const char*> argv;
    argv.push_back("freefusion");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    out << doc.dump(2) << "\n";
    return rc;
}

} // namespace freefusion
