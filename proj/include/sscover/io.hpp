// Copyright 2026 The sscover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON formats.
//
// Instance:
//   {"ground_size": N,
//    "items": [{"cost": "num/den",
//               "dist": [{"state": [e, ...], "prob": "num/den"}, ...]},
//              ...]}
// Rationals are "num/den" strings or bare integers. Element lists must be
// strictly ascending. Item ids are positions in "items". Written rationals
// are always "num/den".
//
// Trace:
//   {"steps": [{"item": F, "cost": r, "unitprice": r, "covered": [e, ...],
//               "g_cov": n}, ...],
//    "prices": [r, ...], "total_cost": r, "evaluated": [F, ...]}
//
// Edge map: {"edges": [[item, element], ...]} in edge-index order.
//
// Oracle report:
//   {"reduced": bool, "ground_size": n, "greedy_expected_cost": r,
//    "optimal_expected_cost": r, "ratio": r | null, "bound": r,
//    "eval_probs": [r, ...], "price_expectations": [r, ...],
//    "checks": {"identity": {"items_side": r, "prices_side": r,
//                            "holds": bool},
//               "bound": {"holds": bool}}}

#ifndef SSCOVER_IO_HPP_
#define SSCOVER_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "sscover/greedy.hpp"
#include "sscover/instance.hpp"
#include "sscover/oracle.hpp"
#include "sscover/reduction.hpp"

namespace sscover {

// Every message is prefixed with "line N: ".
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<std::string> messages);
  const std::vector<std::string>& messages() const { return messages_; }

 private:
  std::vector<std::string> messages_;
};

// Parses and validates. Throws ParseError on malformed JSON, schema errors
// or any validate_instance violation.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

nlohmann::json instance_to_json(const Instance& inst);
nlohmann::json marginals_to_json(const MarginalTable& q);
nlohmann::json trace_to_json(const GreedyTrace& trace);
nlohmann::json edge_map_to_json(const BipartiteGraph& graph);
nlohmann::json report_to_json(const OracleReport& report);

// Throws std::runtime_error when the file cannot be written.
void write_text(const std::string& path, const std::string& text);

}  // namespace sscover

#endif  // SSCOVER_IO_HPP_
