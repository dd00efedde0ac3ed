// Copyright 2026 The semdd Authors.
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

#include "semdd/prov/csv.hpp"

#include <algorithm>
#include <set>

#include "semdd/query/results.hpp"
#include "semdd/rdf/snapshot.hpp"

namespace semdd::prov {

std::optional<std::size_t> SourceTable::column(std::string_view name) const {
  auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

SourceTable parse_csv(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> record_lines;
  std::vector<std::string> record;
  std::string field;
  std::size_t line = 1;
  std::size_t record_line = 1;
  std::size_t i = 0;
  bool pending = false;  // something seen since the last record break

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record_lines.push_back(record_line);
    record.clear();
    pending = false;
  };

  while (i < text.size()) {
    char c = text[i];
    if (!pending) record_line = line;
    if (c == '"' && field.empty()) {
      // Quoted field.
      pending = true;
      ++i;
      while (true) {
        if (i >= text.size()) throw CsvError(record_line, "unterminated quoted field");
        char q = text[i++];
        if (q == '"') {
          if (i < text.size() && text[i] == '"') {
            field += '"';
            ++i;
            continue;
          }
          break;
        }
        if (q == '\n') ++line;
        field += q;
      }
      if (i < text.size() && text[i] != ',' && text[i] != '\r' && text[i] != '\n') {
        throw CsvError(line, "unexpected character after closing quote");
      }
      continue;
    }
    if (c == ',') {
      pending = true;
      end_field();
      ++i;
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      ++i;
      if (pending || !field.empty()) end_record();
      ++line;
    } else {
      if (c == '"') throw CsvError(line, "quote inside unquoted field");
      pending = true;
      field += c;
      ++i;
    }
  }
  if (pending || !field.empty()) end_record();

  SourceTable t;
  if (records.empty()) throw CsvError(1, "missing header row");
  t.header = std::move(records[0]);
  std::set<std::string> seen;
  for (const auto& h : t.header) {
    if (h.empty()) throw CsvError(1, "empty column name in header");
    if (!seen.insert(h).second) throw CsvError(1, "duplicate column '" + h + "'");
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size()) {
      throw CsvError(record_lines[r], "expected " + std::to_string(t.header.size()) + " fields, got " +
                                          std::to_string(records[r].size()));
    }
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

SourceTable read_csv_file(const std::string& path) { return parse_csv(rdf::read_file(path)); }

std::string write_csv(const SourceTable& table) {
  std::string out;
  auto write_record = [&](const std::vector<std::string>& rec) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i) out += ',';
      out += query::csv_field(rec[i]);
    }
    out += "\r\n";
  };
  write_record(table.header);
  for (const auto& r : table.rows) write_record(r);
  return out;
}

}  // namespace semdd::prov
