// Copyright 2026 The QRS Authors
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

// Minimal CSV reader for tests; cells never contain commas or quotes here.

#ifndef QRS_TESTS_CSV_READER_H_
#define QRS_TESTS_CSV_READER_H_

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace testing_csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t Col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
    throw std::out_of_range("no column " + name);
  }
  // NaN for empty cells.
  double Num(std::size_t row, const std::string& name) const {
    const std::string& cell = rows.at(row).at(Col(name));
    return cell.empty() ? std::nan("") : std::stod(cell);
  }
  std::vector<double> Column(const std::string& name) const {
    std::vector<double> out;
    for (std::size_t r = 0; r < rows.size(); ++r) out.push_back(Num(r, name));
    return out;
  }
};

inline std::vector<std::string> SplitLine(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

inline Table Parse(const std::string& text) {
  Table t;
  std::stringstream ss(text);
  std::string line;
  if (std::getline(ss, line)) t.header = SplitLine(line);
  while (std::getline(ss, line)) t.rows.push_back(SplitLine(line));
  return t;
}

inline Table ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Parse(buf.str());
}

}  // namespace testing_csv

#endif  // QRS_TESTS_CSV_READER_H_
