// Copyright 2026 The fuzzysim Authors
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

#pragma once

#include <cstddef>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzysim/degree.hpp"
#include "fuzzysim/graph.hpp"
#include "fuzzysim/relation.hpp"
#include "fuzzysim/symbols.hpp"

namespace fuzzysim {

// Error in a line-oriented input document. line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;
};

// Calls `on_line(line_number, tokens)` for every non-blank line; '#' starts
// a comment that runs to the end of the line.
inline void for_each_line(
    std::string_view text,
    const std::function<void(std::size_t, const std::vector<Token>&)>& on_line) {
  std::size_t line_no = 0;
  std::vector<Token> tokens;
  while (!text.empty() || line_no == 0) {
    ++line_no;
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    tokens.clear();
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
        ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r')
        ++i;
      if (i > start) tokens.push_back({line.substr(start, i - start), start + 1});
    }
    if (!tokens.empty()) on_line(line_no, tokens);
    if (text.empty()) break;
  }
}

inline void expect_arity(std::size_t line, const std::vector<Token>& tokens,
                         std::size_t arity) {
  if (tokens.size() != arity + 1) {
    std::size_t column =
        tokens.size() > arity + 1 ? tokens[arity + 1].column : tokens.back().column;
    throw ParseError(line, column,
                     "'" + std::string(tokens[0].text) + "' expects " +
                         std::to_string(arity) + " argument(s), got " +
                         std::to_string(tokens.size() - 1));
  }
}

inline Degree parse_degree_token(std::size_t line, const Token& token) {
  std::string why;
  auto d = Degree::parse(token.text, &why);
  if (!d)
    throw ParseError(line, token.column,
                     why + ": '" + std::string(token.text) + "'");
  return *d;
}

}  // namespace detail

// Parses the graph file format:
//   vertex <name>
//   label <vertex> <symbol> <degree>
//   edge <from> <symbol> <to> <degree>
// Symbols are interned into `alphabet`, which must be shared with any graph
// this one is compared against.
inline FuzzyGraph parse_graph(std::string_view text, Alphabet& alphabet) {
  GraphBuilder builder;
  detail::for_each_line(text, [&](std::size_t line,
                                   const std::vector<detail::Token>& tok) {
    std::string_view keyword = tok[0].text;
    try {
      if (keyword == "vertex") {
        detail::expect_arity(line, tok, 1);
        builder.add_vertex(tok[1].text);
      } else if (keyword == "label") {
        detail::expect_arity(line, tok, 3);
        Degree d = detail::parse_degree_token(line, tok[3]);
        VertexId v = builder.add_vertex(tok[1].text);
        builder.set_label(v, alphabet.vertex_labels.intern(tok[2].text), d);
      } else if (keyword == "edge") {
        detail::expect_arity(line, tok, 4);
        Degree d = detail::parse_degree_token(line, tok[4]);
        VertexId from = builder.add_vertex(tok[1].text);
        VertexId to = builder.add_vertex(tok[3].text);
        builder.add_edge(from, alphabet.edge_labels.intern(tok[2].text), to, d);
      } else {
        throw ParseError(line, tok[0].column,
                         "unknown directive '" + std::string(keyword) + "'");
      }
    } catch (const GraphError& e) {
      throw ParseError(line, tok[0].column, e.what());
    }
  });
  return std::move(builder).build();
}

// Inverse of parse_graph: declarations, then labels, then edges.
inline std::string format_graph(const FuzzyGraph& g, const Alphabet& alphabet) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.vertex_name(v) << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (const LabelEntry& e : g.label(v))
      out << "label " << g.vertex_name(v) << ' '
          << alphabet.vertex_labels.name(e.symbol) << ' ' << e.degree.to_string()
          << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << g.vertex_name(e.from) << ' '
        << alphabet.edge_labels.name(e.label) << ' ' << g.vertex_name(e.to) << ' '
        << e.degree.to_string() << '\n';
  return out.str();
}

// Parses a relation document: one "x x'" pair of vertex names per line.
// Unknown names raise ParseError.
inline Relation parse_relation(std::string_view text, const FuzzyGraph& left,
                               const FuzzyGraph& right) {
  Relation z(left.vertex_count(), right.vertex_count());
  detail::for_each_line(text, [&](std::size_t line,
                                   const std::vector<detail::Token>& tok) {
    if (tok.size() != 2)
      throw ParseError(line, tok[0].column, "expected a pair of vertex names");
    auto x = left.find_vertex(tok[0].text);
    if (!x)
      throw ParseError(line, tok[0].column,
                       "unknown vertex '" + std::string(tok[0].text) + "'");
    auto y = right.find_vertex(tok[1].text);
    if (!y)
      throw ParseError(line, tok[1].column,
                       "unknown vertex '" + std::string(tok[1].text) + "'");
    z.insert(*x, *y);
  });
  return z;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace fuzzysim
