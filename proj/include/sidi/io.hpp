#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sidi/graph.hpp"
#include "sidi/orderings.hpp"

namespace sidi {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format:
//   # comment
//   n <vertex count>
//   <tail> <head> <+1|-1>
// Blank lines and anything after '#' are ignored.
SignedDigraph parse_edge_list(std::istream& in);
SignedDigraph read_edge_list(const std::filesystem::path& path);
void write_edge_list(std::ostream& out, const SignedDigraph& g);

/// "%.6f"
std::string fixed6(double v);

/// rank,tie_group,c1_len,c1_sign,c2_len,c2_sign,value
void write_ordering_csv(std::ostream& out, const OrderingSequence& seq);
void write_ordering_text(std::ostream& out, const OrderingSequence& seq);
/// Static SVG 1.1 chart: rank on x, iota energy on y, one marker per tie group.
void write_ordering_svg(std::ostream& out, const OrderingSequence& seq);

}  // namespace sidi
