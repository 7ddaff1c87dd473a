// Copyright 2026 The rsdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rsdl/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "rsdl/error.hpp"

namespace rsdl {

namespace {

u64 parse_u64(std::string_view s, const std::string& what) {
  u64 v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw IoError("bad " + what + ": '" + std::string(s) + "'");
  }
  return v;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

// "# key=value" -> (key, value); false for comment lines without '='.
bool split_header(const std::string& line, std::string& key, std::string& value) {
  std::string body = trim(std::string_view(line).substr(1));
  auto eq = body.find('=');
  if (eq == std::string::npos) return false;
  key = trim(std::string_view(body).substr(0, eq));
  value = trim(std::string_view(body).substr(eq + 1));
  return true;
}

void apply_param(FieldParams& params, const std::string& key, const std::string& value) {
  if (key == "p") {
    params.p = parse_u64(value, "p");
  } else if (key == "h") {
    params.h = static_cast<unsigned>(parse_u64(value, "h"));
  } else if (key == "Q") {
    params.Q = parse_coeffs(value);
  } else if (key == "mode") {
    try {
      params.mode = parse_mode(value);
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
  } else if (key == "e") {
    params.e = static_cast<unsigned>(parse_u64(value, "e"));
  } else if (key == "seed") {
    params.seed = parse_u64(value, "seed");
  }
}

void write_param_header(std::ostream& out, const FieldParams& params) {
  out << "# p=" << params.p << '\n'
      << "# h=" << params.h << '\n'
      << "# Q=" << format_coeffs(params.Q) << '\n'
      << "# mode=" << to_string(params.mode) << '\n'
      << "# e=" << params.e << '\n'
      << "# seed=" << params.seed << '\n';
}

void check_params(const FieldParams& params, std::size_t line) {
  if (params.p == 0 || params.h == 0 || params.Q.empty()) {
    throw IoError(at_line(line) + "header is missing p, h or Q");
  }
}

}  // namespace

std::string format_coeffs(const std::vector<u64>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::vector<u64> parse_coeffs(const std::string& s) {
  std::vector<u64> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_u64(trim(tok), "coefficient"));
  if (out.empty()) throw IoError("empty coefficient list");
  return out;
}

void write_context(const std::filesystem::path& path, const FieldParams& params) {
  nlohmann::json j;
  j["p"] = params.p;
  j["h"] = params.h;
  j["Q"] = params.Q;
  j["mode"] = to_string(params.mode);
  j["e"] = params.e;
  j["seed"] = params.seed;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + path.string());
}

FieldParams read_context(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    FieldParams params;
    params.p = j.at("p").get<u64>();
    params.h = j.at("h").get<unsigned>();
    params.Q = j.at("Q").get<std::vector<u64>>();
    params.mode = parse_mode(j.value("mode", std::string("fq")));
    params.e = j.value("e", 1u);
    params.seed = j.value("seed", u64{0});
    return params;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_relations(std::ostream& out, const FieldParams& params, const RelationSet& rels) {
  out << "# rsdl relations\n";
  write_param_header(out, params);
  out << "# scan=" << rels.scan_begin << ':' << rels.cursor << '\n'
      << "# target=" << rels.target << '\n';
  for (const auto& [u, rel] : rels.relations) {
    out << u << ';';
    for (std::size_t i = 0; i < rel.roots.size(); ++i) {
      if (i) out << ',';
      out << rel.roots[i];
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed");
}

RelationFile read_relations(std::istream& in) {
  RelationFile file;
  std::string line;
  std::size_t lineno = 0;
  bool body = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line[0] == '#') {
      if (body) throw IoError(at_line(lineno) + "header after relation lines");
      std::string key, value;
      if (!split_header(line, key, value)) continue;
      try {
        if (key == "scan") {
          auto colon = value.find(':');
          if (colon == std::string::npos) throw IoError("bad scan range '" + value + "'");
          file.set.scan_begin = parse_u64(value.substr(0, colon), "scan start");
          file.set.cursor = parse_u64(value.substr(colon + 1), "scan cursor");
        } else if (key == "target") {
          file.set.target = parse_u64(value, "target");
        } else {
          apply_param(file.params, key, value);
        }
      } catch (const IoError& e) {
        throw IoError(at_line(lineno) + e.what());
      }
      continue;
    }
    if (!body) {
      check_params(file.params, lineno);
      body = true;
    }
    auto semi = line.find(';');
    if (semi == std::string::npos) throw IoError(at_line(lineno) + "expected 'u;r1,r2,...'");
    Relation rel;
    try {
      rel.u = parse_u64(trim(std::string_view(line).substr(0, semi)), "exponent");
      std::string rest = trim(std::string_view(line).substr(semi + 1));
      if (!rest.empty()) rel.roots = parse_coeffs(rest);
    } catch (const IoError& e) {
      throw IoError(at_line(lineno) + e.what());
    }
    std::sort(rel.roots.begin(), rel.roots.end());
    file.lines.push_back({lineno, rel});
    if (!file.set.insert(rel)) throw IoError(at_line(lineno) + "duplicate exponent " + std::to_string(rel.u));
  }
  if (!body) check_params(file.params, lineno);
  file.set.mode = file.params.mode;
  file.set.e = file.params.e;
  file.set.seed = file.params.seed;
  return file;
}

void write_log_table(std::ostream& out, const Instance& inst, const LogTable& table) {
  const ExtensionField& K = inst.tower.field();
  std::map<u64, u64> by_element;
  for (const auto& [rep, lg] : table.logs) {
    auto idx = inst.code.index_of_representative(rep);
    if (!idx) throw std::invalid_argument("log table entry outside the factor base");
    by_element[K.serialize(K.from_poly(inst.code.base[*idx].minpoly))] = lg;
  }
  out << "# rsdl logtable\n";
  write_param_header(out, inst.params);
  out << "# generator=X\n"
      << "# order=" << table.order << '\n'
      << "# logG=" << table.log_G << '\n';
  for (const auto& [el, lg] : by_element) out << el << ';' << lg << '\n';
  if (!out) throw IoError("write failed");
}

LogTableFile read_log_table(std::istream& in) {
  LogTableFile file;
  std::string line;
  std::size_t lineno = 0;
  bool body = false, have_g = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    if (line[0] == '#') {
      if (body) throw IoError(at_line(lineno) + "header after table lines");
      std::string key, value;
      if (!split_header(line, key, value)) continue;
      try {
        if (key == "order") {
          file.order = parse_u64(value, "order");
        } else if (key == "logG") {
          file.log_G = parse_u64(value, "logG");
          file.log_G_line = lineno;
          have_g = true;
        } else if (key == "generator") {
          if (value != "X") throw IoError("unsupported generator '" + value + "'");
        } else {
          apply_param(file.params, key, value);
        }
      } catch (const IoError& e) {
        throw IoError(at_line(lineno) + e.what());
      }
      continue;
    }
    if (!body) {
      check_params(file.params, lineno);
      if (!have_g) throw IoError(at_line(lineno) + "header is missing logG");
      body = true;
    }
    auto semi = line.find(';');
    if (semi == std::string::npos) throw IoError(at_line(lineno) + "expected 'element;log'");
    try {
      LogTableLine entry;
      entry.line = lineno;
      entry.element = parse_u64(trim(std::string_view(line).substr(0, semi)), "element");
      entry.log = parse_u64(trim(std::string_view(line).substr(semi + 1)), "log");
      file.lines.push_back(entry);
    } catch (const IoError& e) {
      throw IoError(at_line(lineno) + e.what());
    }
  }
  if (!body) {
    check_params(file.params, lineno);
    if (!have_g) throw IoError("log table header is missing logG");
  }
  return file;
}

LogTable to_log_table(const LogTableFile& file, const Instance& inst) {
  const ExtensionField& K = inst.tower.field();
  std::unordered_map<u64, u64> rep_of_element;
  for (const auto& entry : inst.code.base) {
    rep_of_element[K.serialize(K.from_poly(entry.minpoly))] = entry.representative;
  }
  LogTable table;
  table.order = inst.tower.group_order();
  if (file.order != 0 && file.order != table.order) {
    throw IoError("table order " + std::to_string(file.order) + " does not match q^h - 1");
  }
  table.log_G = file.log_G;
  for (const auto& l : file.lines) {
    auto it = rep_of_element.find(l.element);
    if (it == rep_of_element.end()) {
      throw IoError(at_line(l.line) + "element " + std::to_string(l.element) +
                    " is not in the factor base");
    }
    if (!table.logs.emplace(it->second, l.log).second) {
      throw IoError(at_line(l.line) + "duplicate element " + std::to_string(l.element));
    }
  }
  return table;
}

QuotientElem parse_target(const std::string& expr, const ExtensionField& K) {
  const PrimeField& F = K.base();
  const u64 p = F.order();
  std::string s;
  for (char ch : expr) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw IoError("empty target expression");
  auto fail = [&](const std::string& why) {
    throw IoError("bad target '" + expr + "': " + why);
  };
  QuotientElem acc = K.zero();
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    // Coefficient, reduced mod p digit by digit so any length works.
    u64 coef = 1;
    bool have_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coef = F.add(F.mul(coef, 10 % p), static_cast<u64>(s[i] - '0') % p);
        ++i;
      }
      have_coef = true;
    }
    u64 degree = 0;
    bool have_x = false;
    if (have_coef && i < s.size() && s[i] == '*') {
      ++i;
      if (i >= s.size() || (s[i] != 'X' && s[i] != 'x')) fail("expected X after '*'");
    }
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      have_x = true;
      degree = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("missing exponent");
        degree = parse_u64(std::string_view(s).substr(i, j - i), "exponent");
        i = j;
      }
    }
    if (!have_coef && !have_x) fail("empty term");
    QuotientElem term = K.mul(K.constant(negative ? F.neg(coef) : coef), K.pow(K.x(), degree));
    acc = K.add(acc, term);
  }
  return acc;
}

}  // namespace rsdl
