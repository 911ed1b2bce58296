#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace starforest {

using Vertex = int;

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A star, forest or decomposition breaks a structural invariant.
class MalformedError : public Error {
public:
    using Error::Error;
};

// Undirected edge of K_n in canonical form (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Canonicalizes {a, b}; throws MalformedError on a self-loop.
Edge make_edge(Vertex a, Vertex b);

std::string to_string(const Edge& e);

// Position of e in the lexicographic enumeration of E(K_n).
std::size_t edge_index(const Edge& e, int n);
std::size_t edge_count(int n);

struct Star {
    Vertex center = 0;
    std::vector<Vertex> leaves;

    friend bool operator==(const Star&, const Star&) = default;
};

struct StarForest {
    std::vector<Star> stars;

    std::size_t edge_count() const;
    friend bool operator==(const StarForest&, const StarForest&) = default;
};

// Presentation layer mapping dense ids onto the structured labels used by
// the constructions. Storage is always the plain integer id.
struct LabelScheme {
    enum class Kind { plain, f3cube, block12m4 };

    Kind kind = Kind::plain;
    // n for plain, unused for f3cube, m for block12m4.
    int param = 0;

    static LabelScheme plain(int n) { return {Kind::plain, n}; }
    static LabelScheme f3cube() { return {Kind::f3cube, 0}; }
    static LabelScheme block12m4(int m) { return {Kind::block12m4, m}; }

    int n() const;
    std::string name() const;
    std::string label(Vertex v) const;

    friend bool operator==(const LabelScheme&, const LabelScheme&) = default;
};

// Parses "plain", "f3cube" or "block12m4" together with its parameter.
LabelScheme parse_label_scheme(const std::string& name, int param);

// f3cube coordinates: (i, j, k) in F_3^3 <-> 9i + 3j + k, every index mod 3.
Vertex cube_vertex(int i, int j, int k);

// block12m4 coordinates. Block subscripts are absolute; the parenthesized
// index is taken mod 4.
enum class Block { A, B, C };
Vertex block_vertex(Block block, int subscript, int index);

struct Decomposition {
    int n = 0;
    int k = 0;
    std::vector<StarForest> forests;
    std::optional<LabelScheme> labels;

    std::size_t edge_slots() const;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// E(K_n) in lexicographic order. Throws PreconditionError for n = 0.
std::vector<Edge> complete_graph_edges(int n);

// Canonical center-leaf edges of every star in order. Throws MalformedError
// when f breaks the star-forest invariants.
std::vector<Edge> forest_edges(const StarForest& f);

// Returns a description of the first structural defect of f on vertex set
// {0..n-1}, or nothing when f is a well-formed star-forest.
std::optional<std::string> forest_defect(const StarForest& f, int n);

// Attaches scheme to a copy of d after checking that it describes d's
// vertex set. Edges and ids are untouched.
Decomposition relabel(const Decomposition& d, const LabelScheme& scheme);

// Applies a vertex permutation (perm[v] is the new id of v).
Decomposition permute(const Decomposition& d, const std::vector<Vertex>& perm);

}  // namespace starforest
