#pragma once

// Line-oriented text formats. Blank lines and anything after '#' are
// ignored.
//
// Instance:
//   mode vpg|epg                      first directive, exactly once
//   line v <x>                        optional vertical reference line
//   line h <y>                        optional horizontal reference line
//   path <id> <cx> <cy> <hx> <vy>     corner (cx,cy), tips (hx,cy) and (cx,vy)
//   label <id> <role>                 optional, e.g. "label 7 C(1)"
//
// Graph:
//   graph <n>
//   edge <u> <v>                      0-based, any order of endpoints
//
// Solution:
//   solution <kind> <size>
//   member <value>                    exactly <size> lines, distinct

#include <string>
#include <string_view>
#include <vector>

#include "b1grid/geometry.hpp"
#include "b1grid/graph.hpp"
#include "b1grid/reduction.hpp"

namespace b1grid {

// All parsers throw ParseError carrying the 1-based line number.
ReductionInstance parse_labelled_instance(std::string_view text);
Representation parse_instance(std::string_view text);
std::string emit_instance(const Representation& rep);
std::string emit_instance(const ReductionInstance& inst);

SimpleGraph parse_graph(std::string_view text);
std::string emit_graph(const SimpleGraph& g);

struct Solution {
  std::string kind;
  std::vector<std::int64_t> members;  // ascending
};

Solution parse_solution(std::string_view text);
std::string emit_solution(const std::string& kind, const std::vector<std::int64_t>& members);

}  // namespace b1grid
