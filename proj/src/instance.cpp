// Copyright 2026 The lightxc Authors.
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

#include "lightxc/instance.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace lightxc {
namespace {

std::string describe(const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

// Checks one subset against the universe and returns it sorted.
Subset normalize(Subset s, std::size_t n, std::size_t index) {
  const std::string which = "subset " + std::to_string(index + 1);
  if (s.empty()) throw InvalidArgument(which + " is empty");
  for (Element e : s) {
    if (e < 1 || e > n) {
      throw InvalidArgument(which + ": element " + std::to_string(e) +
                            " outside 1.." + std::to_string(n));
    }
  }
  std::sort(s.begin(), s.end());
  if (auto it = std::adjacent_find(s.begin(), s.end()); it != s.end()) {
    throw InvalidArgument(which + ": element " + std::to_string(*it) +
                          " listed twice");
  }
  return s;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\v\f";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::uint64_t> parse_numbers(std::string_view line, std::size_t lineno) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      std::size_t end = pos;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
      throw ParseError("expected a non-negative integer, got '" +
                           std::string(line.substr(pos, end - pos)) + "'",
                       lineno);
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

XCInstance::XCInstance(std::size_t n, std::vector<Subset> subsets,
                       bool allow_duplicates)
    : n_(n) {
  if (n == 0) throw InvalidArgument("universe size must be at least 1");
  subsets_.reserve(subsets.size());
  std::set<Subset> seen;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    Subset s = normalize(std::move(subsets[i]), n, i);
    if (!seen.insert(s).second && !allow_duplicates) {
      throw InvalidArgument("subset " + std::to_string(i + 1) + " " +
                            describe(s) + " duplicates an earlier subset");
    }
    subsets_.push_back(std::move(s));
  }
}

XCInstance parse_instance(std::string_view text, const ParseOptions& options,
                          std::vector<std::string>* warnings) {
  struct Line {
    std::size_t number;
    std::string_view body;
  };
  std::vector<Line> lines;
  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    ++lineno;
    std::string_view body = trim(text.substr(pos, nl - pos));
    if (!body.starts_with('#')) lines.push_back({lineno, body});
    pos = nl + 1;
  }
  // Blank lines before the header and after the last subset carry nothing.
  while (!lines.empty() && lines.back().body.empty()) lines.pop_back();
  auto first = std::find_if(lines.begin(), lines.end(),
                            [](const Line& l) { return !l.body.empty(); });
  if (first == lines.end()) throw ParseError("missing header 'n m'", 0);

  const auto header = parse_numbers(first->body, first->number);
  if (header.size() != 2) {
    throw ParseError("header must be exactly two integers 'n m'", first->number);
  }
  const std::uint64_t n = header[0];
  const std::uint64_t m = header[1];
  if (n == 0) throw ParseError("universe size n must be at least 1", first->number);
  if (n > std::numeric_limits<Element>::max()) {
    throw ParseError("universe size n too large", first->number);
  }

  const auto body_begin = std::next(first);
  const auto available = static_cast<std::uint64_t>(lines.end() - body_begin);
  if (available != m) {
    throw ParseError("header declares " + std::to_string(m) + " subsets but " +
                         std::to_string(available) + " subset lines follow",
                     first->number);
  }

  std::vector<Subset> subsets;
  subsets.reserve(static_cast<std::size_t>(m));
  std::set<Subset> seen;
  for (auto it = body_begin; it != lines.end(); ++it) {
    const auto values = parse_numbers(it->body, it->number);
    Subset s;
    s.reserve(values.size());
    for (auto v : values) {
      if (v < 1 || v > n) {
        throw ParseError("element index " + std::to_string(v) + " outside 1.." +
                             std::to_string(n),
                         it->number);
      }
      s.push_back(static_cast<Element>(v));
    }
    try {
      s = normalize(std::move(s), static_cast<std::size_t>(n), subsets.size());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), it->number);
    }
    if (!seen.insert(s).second) {
      const std::string msg = "subset " + describe(s) + " duplicates an earlier subset";
      if (!options.allow_duplicates) throw ParseError(msg, it->number);
      if (warnings) warnings->push_back("line " + std::to_string(it->number) + ": " + msg);
    }
    subsets.push_back(std::move(s));
  }
  return XCInstance(static_cast<std::size_t>(n), std::move(subsets),
                    options.allow_duplicates);
}

std::string render_instance(const XCInstance& inst) {
  std::ostringstream out;
  out << inst.universe_size() << ' ' << inst.subset_count() << '\n';
  for (const auto& s : inst.subsets()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out << ' ';
      out << s[i];
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::size_t> element_coverage(const XCInstance& inst) {
  std::vector<std::size_t> coverage(inst.universe_size(), 0);
  for (const auto& s : inst.subsets()) {
    for (Element e : s) ++coverage[e - 1];
  }
  return coverage;
}

std::vector<Element> uncovered_elements(const XCInstance& inst) {
  const auto coverage = element_coverage(inst);
  std::vector<Element> out;
  for (std::size_t i = 0; i < coverage.size(); ++i) {
    if (coverage[i] == 0) out.push_back(static_cast<Element>(i + 1));
  }
  return out;
}

}  // namespace lightxc
