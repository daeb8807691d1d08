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

// Plain-text, JSON and CSV renderings shared by the command-line tool.

#ifndef CYCLICPAIRS_REPORT_HPP
#define CYCLICPAIRS_REPORT_HPP

#include <json.hpp>
#include <string>

#include "cyclicpairs/constructions.hpp"
#include "cyclicpairs/cyclotomic.hpp"
#include "cyclicpairs/factorization.hpp"
#include "cyclicpairs/pairs.hpp"
#include "cyclicpairs/search.hpp"
#include "cyclicpairs/tables.hpp"

namespace cyclicpairs {

using Json = nlohmann::ordered_json;

/// {n, q, codes: [{k, d, g}], ell, sum_dim, exact}; exact is null unless a construction certifies it.
Json pair_json(const PairReport& report);
/// pair_json plus a "construction" object.
Json construction_json(const ConstructionResult& result);
Json factorization_json(const Factorization& fact);
Json cosets_json(const CosetPartition& part);
Json existence_json(const ExistenceWitness& w);
Json verification_json(const VerificationRun& run);
Json search_json(const SearchResult& result, std::uint64_t n, std::uint64_t q);

/// "[n,k1,d1]_q [n,k2,d2]_q ell=<l> sum_dim=<s>"
std::string pair_line(const PairReport& report);

inline constexpr const char* kCsvHeader = "n,q,k1,d1,g1,k2,d2,g2,ell";
std::string csv_row(const PairReport& report);

}  // namespace cyclicpairs

#endif
