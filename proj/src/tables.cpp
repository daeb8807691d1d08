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

#include "cyclicpairs/tables.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "cyclicpairs/pairs.hpp"
#include "cyclicpairs/poly_text.hpp"

namespace cyclicpairs {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

TableRow parse_table_row(std::string_view line) {
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) throw ParseError("expected 'params | g1 | g2'", line.size());
    if (line.find('|', bar2 + 1) != std::string_view::npos) throw ParseError("too many '|' separators", bar2 + 1);

    std::istringstream head{std::string(line.substr(0, bar1))};
    std::uint64_t v[7];
    for (int i = 0; i < 7; ++i)
        if (!(head >> v[i])) throw ParseError("expected seven integers 'n q k1 d1 k2 d2 ell'", 0);
    std::string extra;
    if (head >> extra) throw ParseError("unexpected token '" + extra + "' before '|'", 0);

    TableRow row;
    row.c = {v[0], v[2], v[3], v[1]};
    row.d = {v[0], v[4], v[5], v[1]};
    row.expected_ell = v[6];
    row.g_c_text = std::string(trim(line.substr(bar1 + 1, bar2 - bar1 - 1)));
    row.g_d_text = std::string(trim(line.substr(bar2 + 1)));
    if (row.g_c_text.empty() || row.g_d_text.empty()) throw ParseError("empty generator polynomial", bar1);
    return row;
}

std::string format_table_row(const TableRow& r) {
    std::ostringstream os;
    os << r.c.n << ' ' << r.c.q << ' ' << r.c.k << ' ' << r.c.d << ' ' << r.d.k << ' ' << r.d.d << ' '
       << r.expected_ell << " | " << r.g_c_text << " | " << r.g_d_text;
    return os.str();
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    for (std::size_t no = 1; std::getline(in, line); ++no) {
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        CorpusEntry e;
        e.line = no;
        try {
            e.row = parse_table_row(t);
        } catch (const std::exception& ex) {
            e.error = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::string to_string(Check check) {
    switch (check) {
        case Check::DivisibilityC: return "divisibility_c";
        case Check::DivisibilityD: return "divisibility_d";
        case Check::DimC: return "dim_c";
        case Check::DimD: return "dim_d";
        case Check::DistC: return "dist_c";
        case Check::DistD: return "dist_d";
        case Check::Ell: return "ell";
    }
    return "unknown";
}

bool VerificationOutcome::pass() const {
    return error.empty() && checks.size() == 7 &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationOutcome::find(Check check) const {
    for (const auto& c : checks)
        if (c.check == check) return &c;
    return nullptr;
}

VerificationOutcome verify_row(const TableRow& row, const DistanceOptions& options) {
    VerificationOutcome out;
    out.row = row;
    if (row.c.n != row.d.n || row.c.q != row.d.q) {
        out.error = "codes of a row must share n and q";
        return out;
    }
    const std::size_t n = row.c.n;
    std::optional<Field> field;
    std::optional<Polynomial> gc, gd;
    try {
        field = field_of_order(row.c.q);
        gc = parse_poly(row.g_c_text, *field);
        gd = parse_poly(row.g_d_text, *field);
    } catch (const std::exception& ex) {
        out.error = ex.what();
        return out;
    }

    auto build = [&](const Polynomial& g, Check check) -> std::optional<CyclicCode> {
        try {
            auto code = make_code(n, *field, g);
            out.checks.push_back({check, true, "g | x^n - 1", "divides"});
            return code;
        } catch (const std::exception& ex) {
            out.checks.push_back({check, false, "g | x^n - 1", ex.what()});
            return std::nullopt;
        }
    };
    const auto code_c = build(*gc, Check::DivisibilityC);
    const auto code_d = build(*gd, Check::DivisibilityD);

    auto dim = [&](const std::optional<CyclicCode>& code, const CodeParams& p, Check check) {
        const std::string computed = code ? std::to_string(code->dimension()) : "n/a";
        out.checks.push_back({check, code && code->dimension() == p.k, std::to_string(p.k), computed});
    };
    dim(code_c, row.c, Check::DimC);
    dim(code_d, row.d, Check::DimD);

    auto dist = [&](const std::optional<CyclicCode>& code, const CodeParams& p, Check check) {
        CheckResult r{check, false, std::to_string(p.d), "n/a"};
        if (code) {
            try {
                const auto report = min_distance(*code, options);
                if (report.d) {
                    r.computed = std::to_string(*report.d);
                    r.pass = *report.d == p.d;
                } else {
                    r.computed = "none (zero code)";
                }
            } catch (const CapExceeded&) {
                r.computed = "cap exceeded";
                out.cap_exceeded = true;
            }
        }
        out.checks.push_back(std::move(r));
    };
    dist(code_c, row.c, Check::DistC);
    dist(code_d, row.d, Check::DistD);

    CheckResult ell{Check::Ell, false, std::to_string(row.expected_ell), "n/a"};
    if (code_c && code_d) {
        const auto report = pair_analyze(*code_c, *code_d);
        ell.computed = std::to_string(report.ell);
        ell.pass = report.ell == row.expected_ell;
    }
    out.checks.push_back(std::move(ell));
    return out;
}

VerificationRun verify_table(const std::vector<CorpusEntry>& corpus, const DistanceOptions& options, unsigned threads) {
    VerificationRun run;
    run.outcomes.resize(corpus.size());
    auto work = [&](std::size_t i) {
        const auto& entry = corpus[i];
        VerificationOutcome out;
        if (entry.row) {
            out = verify_row(*entry.row, options);
        } else {
            out.error = entry.error;
        }
        out.line = entry.line;
        run.outcomes[i] = std::move(out);
    };
    if (threads <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < corpus.size(); i = next++) work(i);
            });
    }
    for (const auto& o : run.outcomes) {
        ++run.summary.rows;
        if (o.pass())
            ++run.summary.passed;
        else
            ++run.summary.failed;
        if (o.cap_exceeded) ++run.summary.cap_exceeded;
    }
    return run;
}

}  // namespace cyclicpairs
