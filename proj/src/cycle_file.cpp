// Copyright 2026 The chowreg Authors
//
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

#include "chowreg/cycle_file.hpp"

#include <cctype>
#include <sstream>

#include "chowreg/error.hpp"

namespace chowreg {

namespace {

[[noreturn]] void parse_error(int line, int col, const std::string& msg) {
  fail(ErrorClass::kParse, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                               ": " + msg);
}

// Recursive descent over one expression; `col0` is the 1-based column of
// text[0] in the source line.
class ExprParser {
 public:
  ExprParser(const std::string& text, int order, int line, int col0)
      : s_(text), order_(order), line_(line), col0_(col0) {}

  RationalFunction parse() {
    skip_ws();
    if (pos_ == s_.size()) error("empty expression");
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    parse_error(line_, col0_ + static_cast<int>(pos_), msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction constant(long v) const {
    return RationalFunction::constant(CyclotomicNumber::integer(order_, v));
  }

  RationalFunction expr() {
    RationalFunction acc = term();
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        size_t at = pos_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          error("division by zero");
        }
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    size_t at = pos_;
    long e = integer_literal();
    if (e > 10000) {
      pos_ = at;
      error("exponent too large");
    }
    if (neg && base.is_zero()) {
      pos_ = at;
      error("negative power of zero");
    }
    return base.pow(static_cast<int>(neg ? -e : e));
  }

  long integer_literal() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      error("expected an integer");
    }
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ - start > 18) {
      pos_ = start;
      error("integer literal too long");
    }
    return std::stol(s_.substr(start, pos_ - start));
  }

  RationalFunction primary() {
    skip_ws();
    if (pos_ >= s_.size()) error("unexpected end of expression");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class v(s_.substr(start, pos_ - start));
      return RationalFunction::constant(CyclotomicNumber::rational(order_, Rational(v)));
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string word = s_.substr(start, pos_ - start);
      if (word == "t") return RationalFunction::t(order_);
      if (word == "zeta") return RationalFunction::constant(CyclotomicNumber::zeta(order_));
      if (word == "i") {
        if (order_ % 4 != 0) {
          pos_ = start;
          error("'i' requires a cyclotomic order divisible by 4");
        }
        return RationalFunction::constant(CyclotomicNumber::zeta(order_, order_ / 4));
      }
      pos_ = start;
      error("unknown identifier '" + word + "'");
    }
    error(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  int order_;
  int line_;
  int col0_;
  size_t pos_ = 0;
};

struct Line {
  int number;
  std::string text;
};

// "key=<int>" starting at `pos`; advances past it.
long keyed_int(const Line& l, size_t& pos, const std::string& key) {
  while (pos < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[pos]))) ++pos;
  if (l.text.compare(pos, key.size() + 1, key + "=") != 0) {
    parse_error(l.number, static_cast<int>(pos) + 1, "expected '" + key + "=<int>'");
  }
  pos += key.size() + 1;
  size_t start = pos;
  if (pos < l.text.size() && (l.text[pos] == '-' || l.text[pos] == '+')) ++pos;
  while (pos < l.text.size() && std::isdigit(static_cast<unsigned char>(l.text[pos]))) ++pos;
  std::string digits = l.text.substr(start, pos - start);
  if (digits.empty() || digits == "-" || digits == "+" || digits.size() > 18) {
    parse_error(l.number, static_cast<int>(start) + 1, "expected an integer after '" + key + "='");
  }
  return std::stol(digits);
}

std::string word_at(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return s.substr(start, pos - start);
}

void finish_cycle(CycleDefinition& def, std::vector<CurveComponent>& curves,
                  std::vector<PointComponent>& points, int order, int line) {
  try {
    if (def.point_level()) {
      def.points.n = def.n;
      def.points.order = order;
      def.points.components = std::move(points);
      def.points = reduce(std::move(def.points), 256);
    } else {
      def.curve = make_precycle(def.n, std::move(curves));
      def.curve.order = order;
    }
  } catch (const Error& e) {
    parse_error(line, 1, "cycle '" + def.name + "': " + e.what());
  }
  curves.clear();
  points.clear();
}

}  // namespace

RationalFunction parse_expression(const std::string& text, int order) {
  return ExprParser(text, order, 1, 1).parse();
}

CycleFile parse_cycle_file(const std::string& text) {
  CycleFile file;
  bool have_field = false;
  std::vector<CurveComponent> curves;
  std::vector<PointComponent> points;
  CycleDefinition* current = nullptr;
  int current_line = 0;

  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    Line l{number, raw};
    size_t pos = 0;
    std::string kw = word_at(raw, pos);
    if (kw.empty() || kw[0] == '#') continue;

    if (kw == "field") {
      if (have_field) parse_error(number, 1, "duplicate field declaration");
      std::string rest = raw.substr(pos);
      size_t open = rest.find("cyclotomic(");
      size_t close = rest.find(')');
      if (open == std::string::npos || close == std::string::npos || close < open) {
        parse_error(number, static_cast<int>(pos) + 2, "expected 'cyclotomic(<N>)'");
      }
      std::string arg = rest.substr(open + 11, close - open - 11);
      int n = 0;
      try {
        size_t used = 0;
        n = std::stoi(arg, &used);
        if (used != arg.size()) n = 0;
      } catch (const std::exception&) {
        n = 0;
      }
      if (n < 1 || n > 1000) {
        parse_error(number, static_cast<int>(pos + open + 12), "cyclotomic order must be in 1..1000");
      }
      file.order = n;
      have_field = true;
    } else if (kw == "cycle") {
      if (!have_field) parse_error(number, 1, "'cycle' before 'field'");
      if (current) finish_cycle(*current, curves, points, file.order, current_line);
      CycleDefinition def;
      def.name = word_at(raw, pos);
      if (def.name.empty() || def.name.find('=') != std::string::npos) {
        parse_error(number, static_cast<int>(pos) + 1, "expected a cycle name");
      }
      for (const auto& c : file.cycles) {
        if (c.name == def.name) parse_error(number, 7, "duplicate cycle name '" + def.name + "'");
      }
      def.n = static_cast<int>(keyed_int(l, pos, "n"));
      def.p = static_cast<int>(keyed_int(l, pos, "p"));
      if (def.n < 1 || def.n > 16) parse_error(number, 1, "n must be in 1..16");
      if (def.n - def.p != 0 && def.n - def.p != 1) {
        parse_error(number, 1, "n - p must be 0 or 1");
      }
      if (!word_at(raw, pos).empty()) parse_error(number, static_cast<int>(pos), "trailing text");
      file.cycles.push_back(std::move(def));
      current = &file.cycles.back();
      current_line = number;
    } else if (kw == "component") {
      if (!current) parse_error(number, 1, "'component' outside a cycle block");
      long mult = keyed_int(l, pos, "mult");
      std::vector<RationalFunction> coords;
      size_t start = pos;
      for (;;) {
        size_t semi = raw.find(';', start);
        std::string piece = raw.substr(start, semi == std::string::npos ? std::string::npos
                                                                         : semi - start);
        RationalFunction f =
            ExprParser(piece, file.order, number, static_cast<int>(start) + 1).parse();
        if (f.is_constant() && f.constant_value().is_one()) {
          parse_error(number, static_cast<int>(start) + 1, "coordinate is identically 1");
        }
        coords.push_back(std::move(f));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      if (static_cast<int>(coords.size()) != current->n) {
        size_t first = raw.find_first_not_of(" \t", pos);
        parse_error(number, static_cast<int>(first == std::string::npos ? pos : first) + 1,
                    "expected " + std::to_string(current->n) + " coordinates, got " +
                        std::to_string(coords.size()));
      }
      if (current->point_level()) {
        PointComponent pc;
        pc.mult = mult;
        for (auto& f : coords) {
          if (!f.is_constant()) parse_error(number, 1, "point-level cycle needs constant coordinates");
          pc.coords.emplace_back(f.constant_value());
        }
        points.push_back(std::move(pc));
      } else {
        curves.push_back({std::move(coords), mult});
      }
    } else {
      parse_error(number, 1, "unknown directive '" + kw + "'");
    }
  }
  if (!have_field) parse_error(number + 1, 1, "missing field declaration");
  if (current) finish_cycle(*current, curves, points, file.order, current_line);
  return file;
}

std::string serialize_cycle_file(const CycleFile& file) {
  std::ostringstream out;
  out << "field cyclotomic(" << file.order << ")\n";
  for (const auto& c : file.cycles) {
    out << "cycle " << c.name << " n=" << c.n << " p=" << c.p << "\n";
    auto emit = [&](long mult, const std::vector<std::string>& coords) {
      out << "component mult=" << mult << " ";
      for (size_t k = 0; k < coords.size(); ++k) out << (k ? " ; " : "") << coords[k];
      out << "\n";
    };
    if (c.point_level()) {
      for (const auto& p : c.points.components) {
        std::vector<std::string> s;
        for (const auto& x : p.coords) {
          if (!x.is_exact()) fail(ErrorClass::kDomain, "cannot serialize a numeric point");
          s.push_back(x.exact().to_string());
        }
        emit(p.mult, s);
      }
    } else {
      for (const auto& comp : c.curve.components) {
        std::vector<std::string> s;
        for (const auto& f : comp.coords) s.push_back(f.to_string());
        emit(comp.mult, s);
      }
    }
  }
  return out.str();
}

}  // namespace chowreg
