/*
   Copyright 2026 The cyclicpairs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cyclicpairs/constructions.hpp"
#include "cyclicpairs/cyclotomic.hpp"
#include "cyclicpairs/factorization.hpp"
#include "cyclicpairs/pairs.hpp"
#include "cyclicpairs/poly_text.hpp"
#include "cyclicpairs/report.hpp"
#include "cyclicpairs/search.hpp"
#include "cyclicpairs/tables.hpp"

#ifndef CYCLICPAIRS_DEFAULT_CORPUS
#define CYCLICPAIRS_DEFAULT_CORPUS "data/tables.txt"
#endif

namespace {

using namespace cyclicpairs;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kCapExceeded = 3, kInternal = 4 };

struct Globals {
    std::uint64_t q = 2;
    bool json = false;
    std::uint64_t cap = kDefaultCodewordCap;
    unsigned threads = 1;

    DistanceOptions distance() const { return {cap, threads}; }
};

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

int run_factor(const Globals& g, std::uint64_t n) {
    const auto fact = factor_xn1(n, field_of_order(g.q));
    if (g.json) {
        emit(factorization_json(fact));
        return kOk;
    }
    std::cout << fact.n << ' ' << g.q << ' ' << fact.nu << ' ' << fact.n_prime << '\n';
    for (const auto& f : fact.factors)
        std::cout << format_poly(f.poly) << " ^ " << f.multiplicity << "  coset_rep=" << f.coset_rep << " d=" << f.order
                  << '\n';
    return kOk;
}

int run_cosets(const Globals& g, std::uint64_t n) {
    const auto split = split_length(n, field_of_order(g.q));
    const auto part = coset_partition(split.n_prime, g.q);
    if (g.json) {
        emit(cosets_json(part));
        return kOk;
    }
    for (const auto& c : part.cosets) {
        std::cout << c.representative() << ' ' << c.order << ' ' << c.size() << " {";
        for (std::size_t i = 0; i < c.members.size(); ++i) std::cout << (i ? "," : "") << c.members[i];
        std::cout << "}\n";
    }
    return kOk;
}

int run_code(const Globals& g, std::uint64_t n, const std::string& gtext, bool with_distance, bool dual) {
    const auto f = field_of_order(g.q);
    auto code = make_code(n, f, parse_poly(gtext, f));
    if (dual) code = dual_code(code);
    std::optional<std::size_t> d;
    if (with_distance) d = min_distance(code, g.distance()).d;
    if (g.json) {
        emit(Json{{"n", n}, {"q", g.q}, {"k", code.dimension()}, {"d", d ? Json(*d) : Json(nullptr)},
                  {"g", format_poly(code.generator())}});
    } else {
        std::cout << format_params(n, code.dimension(), d, g.q) << " g=" << format_poly(code.generator()) << '\n';
    }
    return kOk;
}

int run_pair(const Globals& g, std::uint64_t n, const std::string& g1, const std::string& g2, bool distances,
             bool csv) {
    const auto f = field_of_order(g.q);
    PairOptions opts{distances, g.distance()};
    const auto report = pair_analyze(make_code(n, f, parse_poly(g1, f)), make_code(n, f, parse_poly(g2, f)), opts);
    if (g.json)
        emit(pair_json(report));
    else if (csv)
        std::cout << kCsvHeader << '\n' << csv_row(report) << '\n';
    else
        std::cout << pair_line(report) << '\n';
    return kOk;
}

int run_exists(const Globals& g, std::uint64_t n, std::size_t ell) {
    const auto w = exists_ell(n, field_of_order(g.q), ell);
    if (g.json)
        emit(existence_json(w));
    else if (w.feasible)
        std::cout << "feasible witness=" << format_poly(*w.witness) << '\n';
    else
        std::cout << "infeasible\n";
    return kOk;
}

struct ConstructArgs {
    std::string mode = "L";
    std::uint64_t n = 0;
    std::string L = "1", g1 = "1", g2 = "1";
    std::uint64_t s = 1;
    std::size_t k1 = 0, k2 = 0, ell = 0;
    bool distances = false;
};

int run_construct(const Globals& g, const ConstructArgs& a) {
    const auto f = field_of_order(g.q);
    std::optional<ConstructionResult> r;
    if (a.mode == "L") {
        r = construct_L(a.n, f, parse_poly(a.L, f), parse_poly(a.g1, f), parse_poly(a.g2, f));
    } else if (a.mode == "repeated") {
        const auto split = split_length(a.n, f);
        r = construct_repeated(split.n_prime, split.nu, f, parse_poly(a.L, f), parse_poly(a.g1, f),
                               parse_poly(a.g2, f), a.s);
    } else {
        r = construct_mds(f, a.n, a.k1, a.k2, a.ell);
    }
    if (a.distances) {
        const auto opts = g.distance();
        r->d1 = min_distance(r->c1, opts).d;
        r->d2 = min_distance(r->c2, opts).d;
    }
    if (g.json) {
        emit(construction_json(*r));
        return kOk;
    }
    const auto n = r->c1.length();
    std::cout << format_params(n, r->c1.dimension(), r->d1, g.q) << ' ' << format_params(n, r->c2.dimension(), r->d2, g.q)
              << " ell=" << r->measured_ell << '\n';
    std::cout << "g1=" << format_poly(r->c1.generator()) << '\n';
    std::cout << "g2=" << format_poly(r->c2.generator()) << '\n';
    std::cout << "target=" << r->target_ell << " range=[" << r->lo << "," << r->hi << "] exact="
              << (r->exact ? "yes" : "no") << '\n';
    if (r->alpha) std::cout << "alpha=" << *r->alpha << '\n';
    return kOk;
}

int run_search(const Globals& g, std::uint64_t n, const SearchOptions& base, bool csv) {
    SearchOptions opts = base;
    opts.distance = g.distance();
    const auto result = search_pairs(n, field_of_order(g.q), opts);
    if (g.json) {
        emit(search_json(result, n, g.q));
        return kOk;
    }
    if (!result.feasible) {
        std::cout << result.reason << '\n';
        return kOk;
    }
    if (csv) std::cout << kCsvHeader << '\n';
    for (const auto& p : result.pairs) {
        if (csv)
            std::cout << csv_row(p) << '\n';
        else
            std::cout << pair_line(p) << "  g1=" << format_poly(p.c1.generator())
                      << "  g2=" << format_poly(p.c2.generator()) << '\n';
    }
    if (!csv) {
        std::cout << "matched=" << result.matched << " shown=" << result.pairs.size();
        if (result.skipped_over_cap) std::cout << " skipped_over_cap=" << result.skipped_over_cap;
        std::cout << '\n';
    }
    return kOk;
}

int run_verify(const Globals& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open corpus " << path << '\n';
        return kUsage;
    }
    const auto run = verify_table(parse_corpus(in), {g.cap, 1}, g.threads);
    if (g.json) {
        emit(verification_json(run));
    } else {
        for (const auto& o : run.outcomes) {
            std::cout << (o.pass() ? "PASS" : "FAIL") << " line " << o.line;
            if (o.row)
                std::cout << "  " << format_params(o.row->c.n, o.row->c.k, o.row->c.d, o.row->c.q) << ' '
                          << format_params(o.row->d.n, o.row->d.k, o.row->d.d, o.row->d.q)
                          << " ell=" << o.row->expected_ell;
            if (!o.error.empty()) std::cout << "  error: " << o.error;
            for (const auto& c : o.checks)
                if (!c.pass)
                    std::cout << "  " << to_string(c.check) << ": expected " << c.expected << ", computed "
                              << c.computed;
            std::cout << '\n';
        }
        std::cout << "rows=" << run.summary.rows << " passed=" << run.summary.passed
                  << " failed=" << run.summary.failed << '\n';
    }
    if (run.summary.failed == 0) return kOk;
    return run.summary.cap_exceeded == run.summary.failed ? kCapExceeded : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear intersection pairs of cyclic codes over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--q", g.q, "Field order (prime power)")->capture_default_str();
    app.add_flag("--json", g.json, "Emit JSON");
    app.add_option("--cap", g.cap, "Maximum codewords enumerated per distance computation")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

    std::uint64_t n = 0;
    auto* factor = app.add_subcommand("factor", "Factor x^n - 1 into irreducibles");
    factor->add_option("--n", n, "Length")->required();

    auto* cosets = app.add_subcommand("cosets", "q-cyclotomic cosets of Z_n' (n = p^nu n')");
    cosets->add_option("--n", n, "Length")->required();

    std::string gtext;
    bool with_distance = false, dual = false;
    auto* code = app.add_subcommand("code", "Parameters of a cyclic code");
    code->add_option("--n", n, "Length")->required();
    code->add_option("--g", gtext, "Generator polynomial")->required();
    code->add_flag("--min-distance", with_distance, "Compute the exact minimum distance");
    code->add_flag("--dual", dual, "Report the dual code instead");

    std::string g1, g2;
    bool distances = false, csv = false;
    auto* pair = app.add_subcommand("pair", "Intersection of two cyclic codes");
    pair->add_option("--n", n, "Length")->required();
    pair->add_option("--g1", g1, "First generator")->required();
    pair->add_option("--g2", g2, "Second generator")->required();
    pair->add_flag("--distances", distances, "Compute exact minimum distances");
    pair->add_flag("--csv", csv, "Emit CSV");

    std::size_t ell = 0;
    auto* exists = app.add_subcommand("exists", "Does an ell-intersection pair of length n exist?");
    exists->add_option("--n", n, "Length")->required();
    exists->add_option("--ell", ell, "Intersection dimension")->required();

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Build a pair by one of the constructions");
    construct->add_option("--mode", ca.mode, "L, repeated or mds")
        ->check(CLI::IsMember({"L", "repeated", "mds"}))
        ->capture_default_str();
    construct->add_option("--n", ca.n, "Length")->required();
    construct->add_option("--L", ca.L, "L(x)");
    construct->add_option("--g1", ca.g1, "g1(x)");
    construct->add_option("--g2", ca.g2, "g2(x)");
    construct->add_option("--s", ca.s, "Power of L (repeated mode)");
    construct->add_option("--k1", ca.k1, "Dimension of C1 (mds mode)");
    construct->add_option("--k2", ca.k2, "Dimension of C2 (mds mode)");
    construct->add_option("--ell", ca.ell, "Intersection dimension (mds mode)");
    construct->add_flag("--distances", ca.distances, "Compute exact minimum distances");

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Rank divisor pairs with a given intersection");
    search->add_option("--n", n, "Length")->required();
    search->add_option("--ell", so.ell, "Intersection dimension")->required();
    search->add_option("--min-d1", so.min_d1, "Minimum distance of C1")->capture_default_str();
    search->add_option("--min-d2", so.min_d2, "Minimum distance of C2")->capture_default_str();
    search->add_option("--limit", so.limit, "Maximum pairs reported")->capture_default_str();
    search->add_flag("--csv", csv, "Emit CSV");

    std::string corpus = CYCLICPAIRS_DEFAULT_CORPUS;
    auto* verify = app.add_subcommand("verify-tables", "Check every row of a pair corpus");
    verify->add_option("--corpus", corpus, "Corpus file")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*factor) return run_factor(g, n);
        if (*cosets) return run_cosets(g, n);
        if (*code) return run_code(g, n, gtext, with_distance, dual);
        if (*pair) return run_pair(g, n, g1, g2, distances, csv);
        if (*exists) return run_exists(g, n, ell);
        if (*construct) return run_construct(g, ca);
        if (*search) return run_search(g, n, so, csv);
        if (*verify) return run_verify(g, corpus);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
