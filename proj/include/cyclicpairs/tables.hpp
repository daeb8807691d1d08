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

#ifndef CYCLICPAIRS_TABLES_HPP
#define CYCLICPAIRS_TABLES_HPP

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclicpairs/cyclic_code.hpp"

namespace cyclicpairs {

/// Claimed [n,k,d]_q parameters of one code of a table row.
struct CodeParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::uint64_t q = 2;
};

/// One published pair: "n q k1 d1 k2 d2 ell | g1 | g2".
struct TableRow {
    CodeParams c;
    CodeParams d;
    std::string g_c_text;
    std::string g_d_text;
    std::size_t expected_ell = 0;
};

/// Throws ParseError on malformed lines.
TableRow parse_table_row(std::string_view line);
std::string format_table_row(const TableRow& row);

struct CorpusEntry {
    std::size_t line = 0;
    std::optional<TableRow> row;
    std::string error;  // set when row is empty
};

/// Skips blank lines and '#' comments. Malformed rows become entries with an error, so one bad
/// line does not hide the rest of the corpus.
std::vector<CorpusEntry> parse_corpus(std::istream& in);

enum class Check { DivisibilityC, DivisibilityD, DimC, DimD, DistC, DistD, Ell };
std::string to_string(Check check);

struct CheckResult {
    Check check;
    bool pass = false;
    std::string expected;
    std::string computed;
};

struct VerificationOutcome {
    std::size_t line = 0;
    std::optional<TableRow> row;
    std::vector<CheckResult> checks;
    std::string error;         // parse or construction failure
    bool cap_exceeded = false;  // some distance could not be enumerated

    bool pass() const;
    const CheckResult* find(Check check) const;
};

struct VerificationSummary {
    std::size_t rows = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t cap_exceeded = 0;
};

struct VerificationRun {
    std::vector<VerificationOutcome> outcomes;
    VerificationSummary summary;
};

/**
 * Rebuilds both codes of the row and checks divisibility of x^n - 1, dimensions, exact minimum
 * distances and the intersection dimension. Dimensions and distances are matched positionally;
 * the intersection does not depend on the order of the pair.
 */
VerificationOutcome verify_row(const TableRow& row, const DistanceOptions& options = {});

/// Outcomes follow corpus order; rows are independent and may be checked in parallel.
VerificationRun verify_table(const std::vector<CorpusEntry>& corpus, const DistanceOptions& options = {},
                             unsigned threads = 1);

}  // namespace cyclicpairs

#endif
