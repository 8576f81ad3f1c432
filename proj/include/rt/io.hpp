#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "rt/graph.hpp"
#include "rt/rational.hpp"

namespace rt {

/// Thrown on malformed input; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}
    int line_number;
};

// Text formats:
//   edge-coloured graph:  "ecg <n>" header, one "e <u> <v> <colour>" per edge
//   digraph:              "dg <n>" header, one "a <u> <v>" per arc
//   pair density matrix:  "pdm <k>" header, "d <i> <j> <p/q>" and
//                         "dpm <i> <j> <p/q>" lines (omitted entries are 0)
//   vertex weighting:     one "w <v> <p/q>" line per vertex, ascending
// Parsers reject duplicate edges, loops and out-of-range ids.

EdgeColouredGraph parse_ecg(std::istream& in);
EdgeColouredGraph parse_ecg_string(const std::string& text);
std::string write_ecg(const EdgeColouredGraph& g);

Digraph parse_digraph(std::istream& in);
Digraph parse_digraph_string(const std::string& text);
std::string write_digraph(const Digraph& d);

std::string write_ecg_json(const EdgeColouredGraph& g);
EdgeColouredGraph parse_ecg_json(const std::string& text);
std::string write_digraph_json(const Digraph& d);
Digraph parse_digraph_json(const std::string& text);

std::string write_weighting(const std::map<int, Rational>& w);
std::map<int, Rational> parse_weighting(std::istream& in);
std::map<int, Rational> parse_weighting_string(const std::string& text);

EdgeColouredGraph load_ecg(const std::string& path);
Digraph load_digraph(const std::string& path);
void save_text(const std::string& path, const std::string& text);

/// parse -> serialize -> parse must be the identity; returns a short
/// description of the parsed object. Throws ParseError otherwise.
std::string roundtrip_check(const std::string& path);

}  // namespace rt
