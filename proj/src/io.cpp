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

#include "sscover/io.hpp"

#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

namespace sscover {
namespace {

using nlohmann::json;

std::string Join(const std::vector<std::string>& lines) {
  std::string out;
  for (const std::string& l : lines) {
    if (!out.empty()) out += "\n";
    out += l;
  }
  return out;
}

// Forward iterator over a buffer that counts the newlines it steps over, so
// a SAX handler can ask which line the parser is on.
class LineCountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  LineCountingIterator() = default;
  LineCountingIterator(const char* p, std::size_t* line) : p_(p), line_(line) {}

  reference operator*() const { return *p_; }
  LineCountingIterator& operator++() {
    if (*p_ == '\n') ++*line_;
    ++p_;
    return *this;
  }
  LineCountingIterator operator++(int) {
    LineCountingIterator old = *this;
    ++*this;
    return old;
  }
  bool operator==(const LineCountingIterator& o) const { return p_ == o.p_; }

 private:
  const char* p_ = nullptr;
  std::size_t* line_ = nullptr;
};

// Records the line on which every object and array starts, keyed by JSON
// pointer ("/items/0/dist/1").
class LineRecorder : public nlohmann::json_sax<json> {
 public:
  explicit LineRecorder(const std::size_t* line) : line_(line) {}

  const std::map<std::string, std::size_t>& lines() const { return lines_; }

  bool null() override { return Scalar(); }
  bool boolean(bool) override { return Scalar(); }
  bool number_integer(number_integer_t) override { return Scalar(); }
  bool number_unsigned(number_unsigned_t) override { return Scalar(); }
  bool number_float(number_float_t, const string_t&) override {
    return Scalar();
  }
  bool string(string_t&) override { return Scalar(); }
  bool binary(binary_t&) override { return Scalar(); }
  bool start_object(std::size_t) override { return Open(false); }
  bool end_object() override { return Close(); }
  bool start_array(std::size_t) override { return Open(true); }
  bool end_array() override { return Close(); }
  bool key(string_t& k) override {
    frames_.back().key = k;
    return true;
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception&) override {
    return false;
  }

 private:
  struct Frame {
    bool array = false;
    std::size_t index = 0;
    std::string key;
  };

  std::string Pointer() const {
    std::string p;
    for (const Frame& f : frames_) {
      p += "/";
      p += f.array ? std::to_string(f.index) : f.key;
    }
    return p;
  }
  void Advance() {
    if (!frames_.empty() && frames_.back().array) ++frames_.back().index;
  }
  bool Scalar() {
    Advance();
    return true;
  }
  bool Open(bool array) {
    lines_[Pointer()] = *line_;
    frames_.push_back(Frame{array, 0, {}});
    return true;
  }
  bool Close() {
    frames_.pop_back();
    Advance();
    return true;
  }

  const std::size_t* line_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> lines_;
};

class Decoder {
 public:
  Decoder(std::map<std::string, std::size_t> lines) : lines_(std::move(lines)) {}

  std::vector<std::string>& errors() { return errors_; }

  std::size_t LineOf(const std::string& pointer) const {
    std::string p = pointer;
    while (true) {
      if (const auto it = lines_.find(p); it != lines_.end()) return it->second;
      if (p.empty()) return 1;
      p = p.substr(0, p.rfind('/'));
    }
  }

  void Error(const std::string& pointer, const std::string& msg) {
    errors_.push_back("line " + std::to_string(LineOf(pointer)) + ": " + msg);
  }

  std::optional<Rational> DecodeRational(const json& v,
                                         const std::string& pointer,
                                         const std::string& what) {
    try {
      if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
      if (v.is_string()) return Rational::Parse(v.get<std::string>());
    } catch (const std::exception& e) {
      Error(pointer, what + ": " + e.what());
      return std::nullopt;
    }
    Error(pointer, what + " must be a \"num/den\" string or an integer");
    return std::nullopt;
  }

  bool CheckKeys(const json& obj, const std::string& pointer,
                 std::initializer_list<const char*> allowed) {
    bool ok = true;
    for (const auto& [k, unused] : obj.items()) {
      bool known = false;
      for (const char* a : allowed) known = known || k == a;
      if (!known) {
        Error(pointer, "unknown key \"" + k + "\"");
        ok = false;
      }
    }
    for (const char* a : allowed) {
      if (!obj.contains(a)) {
        Error(pointer, std::string("missing key \"") + a + "\"");
        ok = false;
      }
    }
    return ok;
  }

  std::optional<Instance> Decode(const json& root) {
    if (!root.is_object()) {
      Error("", "instance must be a JSON object");
      return std::nullopt;
    }
    if (!CheckKeys(root, "", {"ground_size", "items"})) return std::nullopt;
    const json& gs = root["ground_size"];
    if (!gs.is_number_unsigned()) {
      Error("", "ground_size must be a non-negative integer");
      return std::nullopt;
    }
    if (!root["items"].is_array()) {
      Error("/items", "items must be an array");
      return std::nullopt;
    }
    Instance inst;
    inst.ground_size = gs.get<std::size_t>();
    const json& items = root["items"];
    for (std::size_t k = 0; k < items.size(); ++k) {
      inst.items.push_back(DecodeItem(items[k], k, inst.ground_size));
    }
    return inst;
  }

 private:
  Item DecodeItem(const json& v, std::size_t k, std::size_t ground_size) {
    const std::string ptr = "/items/" + std::to_string(k);
    const std::string label = "item " + std::to_string(k);
    Item item;
    item.id = k;
    if (!v.is_object()) {
      Error(ptr, label + ": must be an object");
      return item;
    }
    if (!CheckKeys(v, ptr, {"cost", "dist"})) return item;
    if (auto c = DecodeRational(v["cost"], ptr, label + ": cost")) item.cost = *c;
    const json& dist = v["dist"];
    if (!dist.is_array()) {
      Error(ptr, label + ": dist must be an array");
      return item;
    }
    std::vector<StateOutcome> support;
    for (std::size_t j = 0; j < dist.size(); ++j) {
      const std::string eptr = ptr + "/dist/" + std::to_string(j);
      const std::string elabel = label + ": dist entry " + std::to_string(j);
      const json& entry = dist[j];
      if (!entry.is_object()) {
        Error(eptr, elabel + ": must be an object");
        continue;
      }
      if (!CheckKeys(entry, eptr, {"state", "prob"})) continue;
      StateOutcome out;
      if (auto p = DecodeRational(entry["prob"], eptr, elabel + ": prob")) {
        out.prob = *p;
        if (out.prob.sign() <= 0) {
          Error(eptr, elabel + ": nonpositive probability " + out.prob.str());
        }
      }
      const json& state = entry["state"];
      if (!state.is_array()) {
        Error(eptr, elabel + ": state must be an array of element indices");
        continue;
      }
      std::optional<std::size_t> prev;
      for (const json& e : state) {
        if (!e.is_number_unsigned()) {
          Error(eptr, elabel + ": element indices must be non-negative integers");
          break;
        }
        const auto idx = e.get<std::size_t>();
        if (idx >= ground_size) {
          Error(eptr, elabel + ": state out of range: element " +
                          std::to_string(idx) + " >= ground size " +
                          std::to_string(ground_size));
        }
        if (prev && idx <= *prev) {
          Error(eptr, elabel + ": element list not strictly ascending");
        }
        prev = idx;
        out.state.insert(idx);
      }
      support.push_back(std::move(out));
    }
    item.dist = StateDistribution(std::move(support));
    return item;
  }

  std::map<std::string, std::size_t> lines_;
  std::vector<std::string> errors_;
};

json RationalJson(const Rational& r) { return r.str(); }

json RationalArray(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(RationalJson(r));
  return a;
}

json SetArray(const BitSet& s) { return json(s.to_vector()); }

}  // namespace

ParseError::ParseError(std::vector<std::string> messages)
    : std::runtime_error(Join(messages)), messages_(std::move(messages)) {}

Instance parse_instance(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line;
    }
    throw ParseError({"line " + std::to_string(line) + ": " + e.what()});
  }

  std::size_t line = 1;
  LineRecorder recorder(&line);
  json::sax_parse(LineCountingIterator(text.data(), &line),
                  LineCountingIterator(text.data() + text.size(), &line),
                  &recorder);

  Decoder decoder(recorder.lines());
  std::optional<Instance> inst = decoder.Decode(root);
  if (!decoder.errors().empty() || !inst) {
    throw ParseError(std::move(decoder.errors()));
  }

  const ValidationReport report = validate_instance(*inst);
  if (!report.ok()) {
    std::vector<std::string> messages;
    for (const Violation& v : report.violations) {
      std::string ptr = v.item ? "/items/" + std::to_string(*v.item) : "";
      std::string msg = v.item ? "item " + std::to_string(*v.item) + ": " : "";
      messages.push_back("line " + std::to_string(decoder.LineOf(ptr)) + ": " +
                         msg + v.message);
    }
    throw ParseError(std::move(messages));
  }
  return std::move(*inst);
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

json instance_to_json(const Instance& inst) {
  json items = json::array();
  for (const Item& item : inst.items) {
    json dist = json::array();
    for (const StateOutcome& out : item.dist.support()) {
      dist.push_back({{"state", SetArray(out.state)},
                      {"prob", RationalJson(out.prob)}});
    }
    items.push_back({{"cost", RationalJson(item.cost)}, {"dist", dist}});
  }
  return {{"ground_size", inst.ground_size}, {"items", items}};
}

json marginals_to_json(const MarginalTable& q) {
  json rows = json::array();
  for (ItemId f = 0; f < q.item_count(); ++f) {
    json row = json::array();
    for (ElementId e = 0; e < q.ground_size(); ++e) {
      row.push_back(RationalJson(q.at(f, e)));
    }
    rows.push_back(row);
  }
  return {{"ground_size", q.ground_size()},
          {"marginals", rows},
          {"perfect_coverage", is_perfect_coverage(q)}};
}

json trace_to_json(const GreedyTrace& trace) {
  json steps = json::array();
  for (const GreedyStep& s : trace.steps) {
    steps.push_back({{"item", s.item},
                     {"cost", RationalJson(s.cost)},
                     {"unitprice", RationalJson(s.unitprice)},
                     {"covered", SetArray(s.newly_covered)},
                     {"g_cov", s.g_cov}});
  }
  return {{"steps", steps},
          {"prices", RationalArray(trace.prices)},
          {"total_cost", RationalJson(trace.total_cost)},
          {"evaluated", SetArray(trace.evaluated)}};
}

json edge_map_to_json(const BipartiteGraph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.edges()) edges.push_back({e.item, e.element});
  return {{"edges", edges}};
}

json report_to_json(const OracleReport& report) {
  return {
      {"reduced", report.reduced},
      {"ground_size", report.ground_size},
      {"greedy_expected_cost", RationalJson(report.greedy_expected_cost)},
      {"optimal_expected_cost", RationalJson(report.optimal_expected_cost)},
      {"ratio", report.ratio ? RationalJson(*report.ratio) : json(nullptr)},
      {"bound", RationalJson(report.bound)},
      {"eval_probs", RationalArray(report.eval_probs)},
      {"price_expectations", RationalArray(report.price_expectations)},
      {"checks",
       {{"identity",
         {{"items_side", RationalJson(report.cost_by_items)},
          {"prices_side", RationalJson(report.cost_by_prices)},
          {"holds", report.identity_holds()}}},
        {"bound", {{"holds", report.bound_holds()}}}}}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace sscover
