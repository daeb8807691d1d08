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

#include "cyclicpairs/report.hpp"

#include "cyclicpairs/poly_text.hpp"

namespace cyclicpairs {

namespace {

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json code_json(const CyclicCode& c, const std::optional<std::size_t>& d) {
    return Json{{"k", c.dimension()}, {"d", optional_json(d)}, {"g", format_poly(c.generator())}};
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string distance_text(const std::optional<std::size_t>& d) { return d ? std::to_string(*d) : ""; }

}  // namespace

Json pair_json(const PairReport& r) {
    return Json{{"n", r.c1.length()},
                {"q", r.c1.field().order()},
                {"codes", Json::array({code_json(r.c1, r.d1), code_json(r.c2, r.d2)})},
                {"ell", r.ell},
                {"sum_dim", r.sum_dim},
                {"exact", nullptr}};
}

Json construction_json(const ConstructionResult& r) {
    Json j{{"n", r.c1.length()},
           {"q", r.c1.field().order()},
           {"codes", Json::array({code_json(r.c1, r.d1), code_json(r.c2, r.d2)})},
           {"ell", r.measured_ell},
           {"sum_dim", r.c1.length() - gcd(r.c1.generator(), r.c2.generator()).deg()},
           {"exact", r.exact}};
    Json c{{"target_ell", r.target_ell}, {"guaranteed_range", Json::array({r.lo, r.hi})}};
    if (r.alpha) c["alpha"] = *r.alpha;
    j["construction"] = std::move(c);
    return j;
}

Json factorization_json(const Factorization& f) {
    Json factors = Json::array();
    for (const auto& x : f.factors)
        factors.push_back(Json{{"poly", format_poly(x.poly)},
                               {"multiplicity", x.multiplicity},
                               {"coset_rep", x.coset_rep},
                               {"d", x.order}});
    return Json{{"n", f.n}, {"q", f.field.order()}, {"nu", f.nu}, {"n_prime", f.n_prime}, {"factors", factors}};
}

Json cosets_json(const CosetPartition& part) {
    Json cosets = Json::array();
    for (const auto& c : part.cosets)
        cosets.push_back(Json{{"rep", c.representative()}, {"d", c.order}, {"size", c.size()}, {"members", c.members}});
    Json by_order = Json::object();
    for (const auto& [d, idx] : part.by_order) by_order[std::to_string(d)] = idx;
    return Json{{"n_prime", part.n_prime}, {"q", part.q}, {"cosets", cosets}, {"by_order", by_order}};
}

Json existence_json(const ExistenceWitness& w) {
    return Json{{"n", w.n},
                {"q", w.q},
                {"ell", w.ell},
                {"feasible", w.feasible},
                {"multiplicities", w.multiplicities},
                {"witness", w.witness ? Json(format_poly(*w.witness)) : Json(nullptr)}};
}

Json verification_json(const VerificationRun& run) {
    Json rows = Json::array();
    for (const auto& o : run.outcomes) {
        Json row{{"line", o.line}, {"pass", o.pass()}};
        if (o.row) row["row"] = format_table_row(*o.row);
        if (!o.error.empty()) row["error"] = o.error;
        Json checks = Json::object();
        for (const auto& c : o.checks)
            checks[to_string(c.check)] = Json{{"pass", c.pass}, {"expected", c.expected}, {"computed", c.computed}};
        row["checks"] = std::move(checks);
        rows.push_back(std::move(row));
    }
    return Json{{"rows", rows},
                {"summary",
                 {{"rows", run.summary.rows},
                  {"passed", run.summary.passed},
                  {"failed", run.summary.failed},
                  {"cap_exceeded", run.summary.cap_exceeded}}}};
}

Json search_json(const SearchResult& result, std::uint64_t n, std::uint64_t q) {
    Json pairs = Json::array();
    for (const auto& p : result.pairs) pairs.push_back(pair_json(p));
    return Json{{"n", n},
                {"q", q},
                {"feasible", result.feasible},
                {"reason", result.reason},
                {"matched", result.matched},
                {"skipped_over_cap", result.skipped_over_cap},
                {"pairs", pairs}};
}

std::string pair_line(const PairReport& r) {
    const auto q = r.c1.field().order();
    const auto n = r.c1.length();
    return format_params(n, r.c1.dimension(), r.d1, q) + " " + format_params(n, r.c2.dimension(), r.d2, q) +
           " ell=" + std::to_string(r.ell) + " sum_dim=" + std::to_string(r.sum_dim);
}

std::string csv_row(const PairReport& r) {
    return std::to_string(r.c1.length()) + "," + std::to_string(r.c1.field().order()) + "," +
           std::to_string(r.c1.dimension()) + "," + distance_text(r.d1) + "," + csv_field(format_poly(r.c1.generator())) +
           "," + std::to_string(r.c2.dimension()) + "," + distance_text(r.d2) + "," +
           csv_field(format_poly(r.c2.generator())) + "," + std::to_string(r.ell);
}

}  // namespace cyclicpairs
