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

#include "sscover/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace sscover {
namespace {

bool IsDigitRun(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
    : value_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!IsDigitRun(num) || !IsDigitRun(den)) {
    throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                "\"");
  }
  Rational r;
  r.value_.get_num().set_str(std::string(num), 10);
  r.value_.get_den().set_str(std::string(den), 10);
  if (r.value_.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator \"" +
                                std::string(text) + "\"");
  }
  r.value_.canonicalize();
  if (text.front() == '-') r.value_ = -r.value_;
  return r;
}

std::string Rational::str() const {
  return numerator_str() + "/" + denominator_str();
}

std::string Rational::numerator_str() const {
  return value_.get_num().get_str();
}

std::string Rational::denominator_str() const {
  return value_.get_den().get_str();
}

double Rational::to_double() const { return value_.get_d(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace sscover
