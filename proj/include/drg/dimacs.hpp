#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "drg/graph.hpp"

namespace drg {

// DIMACS edge-format support.  Files look like:
//   c optional comment
//   p edge <vertices> <edges>
//   e <u> <w>          (1-based endpoints, one line per edge)
// The reader enforces the declared edge count and rejects loops, duplicates
// and out-of-range endpoints, reporting the offending line number.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

// Writes with edges sorted lexicographically (u < w, 1-based), so equal
// graphs always serialize to identical bytes.  Comments, if given, are
// emitted first as "c " lines.
std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments = {});
void write_dimacs_file(const Graph& g, const std::string& path,
                       const std::vector<std::string>& comments = {});

}  // namespace drg
