#pragma once
// File formats: the facet text format, the JSON complex format, the
// cochain text format, and resolution of complex arguments that may be
// registry names or file paths.

#include <stdexcept>
#include <string>
#include <vector>

#include "sqtop/cochain.hpp"
#include "sqtop/complex.hpp"

namespace sqtop {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Text format:
//   vertices m
//   facet v1 v2 ... vk
// Blank lines and lines starting with '#' are ignored.
SimplicialComplex parse_complex_text(const std::string& text);
std::string complex_to_text(const SimplicialComplex& k);

// {"vertices": m, "facets": [[...], ...]}
SimplicialComplex parse_complex_json(const std::string& text);
std::string complex_to_json(const SimplicialComplex& k);

// One simplex per line, "v1 v2 ... vk"; the lines are summed over F2 and
// must all have the same number of vertices.
Cochain parse_cochain_text(const SimplicialComplex& k, const std::string& text);
std::string cochain_to_text(const Cochain& c);

// Registry name ("P26", "boundary:3", ...) or a path to a text/JSON file.
SimplicialComplex resolve_complex(const std::string& arg);

// Comma-separated complex arguments, e.g. "points:2,point,point".
std::vector<SimplicialComplex> resolve_complex_list(const std::string& arg);

std::string read_file(const std::string& path);

}  // namespace sqtop
