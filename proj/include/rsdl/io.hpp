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

#ifndef RSDL_IO_HPP
#define RSDL_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rsdl/pipeline.hpp"

namespace rsdl {

std::string format_coeffs(const std::vector<u64>& c);
// "11,2,0,1" -> {11, 2, 0, 1}. Throws IoError.
std::vector<u64> parse_coeffs(const std::string& s);

void write_context(const std::filesystem::path& path, const FieldParams& params);
FieldParams read_context(const std::filesystem::path& path);

// Relation file: '#' header lines, then one `u;r1,r2,...` line per relation in
// ascending u.
void write_relations(std::ostream& out, const FieldParams& params, const RelationSet& rels);

struct RelationLine {
  std::size_t line = 0;  // 1-based
  Relation relation;
};

struct RelationFile {
  FieldParams params;
  RelationSet set;
  std::vector<RelationLine> lines;
};

RelationFile read_relations(std::istream& in);

// Log table file: header, then `element;log` with element the base-q
// serialization of the factor-base element in GF(q^h), sorted by element.
void write_log_table(std::ostream& out, const Instance& inst, const LogTable& table);

struct LogTableLine {
  std::size_t line = 0;
  u64 element = 0;
  u64 log = 0;
};

struct LogTableFile {
  FieldParams params;
  u64 order = 0;
  u64 log_G = 0;
  std::size_t log_G_line = 0;
  std::vector<LogTableLine> lines;
};

LogTableFile read_log_table(std::istream& in);

// Maps the file entries back to factor-base representatives. Throws IoError
// for an element outside the factor base.
LogTable to_log_table(const LogTableFile& file, const Instance& inst);

// Polynomial in X with integer coefficients, e.g. "X^2+1", "-3*X^4 + X", "5".
QuotientElem parse_target(const std::string& expr, const ExtensionField& K);

}  // namespace rsdl

#endif  // RSDL_IO_HPP
