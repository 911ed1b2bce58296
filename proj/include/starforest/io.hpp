#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "starforest/constructions.hpp"
#include "starforest/graph.hpp"

namespace starforest {

// Text interchange format, one record per line:
//
//   starforest 1
//   n 16
//   k 4
//   labels block12m4 1          (optional)
//   meta family k16             (any number of meta lines)
//   forest
//   star 0 : 3 8 10
//   ...
//
// Blank lines and lines starting with '#' are ignored. Forest and leaf order
// are preserved exactly.
inline constexpr int kFormatVersion = 1;

struct DecompositionFile {
    int version = kFormatVersion;
    Decomposition decomposition;
    std::map<std::string, std::string> meta;

    friend bool operator==(const DecompositionFile&, const DecompositionFile&) = default;
};

// Parse failure with the 1-based line it refers to (0 when not line-bound).
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

std::string serialize(const DecompositionFile& f);
DecompositionFile parse(const std::string& text);

// File wrapper with family, provenance and raw_duplicates meta entries.
DecompositionFile to_file(const ConstructionOutput& out);

// Space separated "u-v" list and back.
std::string format_edges(const std::vector<Edge>& edges);
std::vector<Edge> parse_edges(const std::string& text);

// One DOT graph with every forest in its own color.
std::string export_dot(const Decomposition& d);
// One DOT graph per forest, in forest order.
std::vector<std::string> export_dot_per_forest(const Decomposition& d);

// Writes to a temporary file in the same directory, then renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace starforest
