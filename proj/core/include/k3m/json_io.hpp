#pragma once

#include "k3m/discform.hpp"
#include "k3m/embed.hpp"
#include "k3m/lattice.hpp"
#include "k3m/mirror.hpp"

#include <string>

namespace k3m {

// JSON persistence for the CLI-facing value types. Serializers emit compact
// single-line JSON with a fixed key order, so equal values serialize to equal
// bytes; parsers accept any key order and raise std::domain_error on
// malformed input.
//
//   Lattice      {"label": string?, "gram": [[int]]}
//   FQF          {"orders": [int], "q": ["p/q"], "b": [["p/q"]]}
//   Embedding    {"ambient": Lattice, "matrix": [[int]]}   (columns = basis)
//   MirrorResult {"check_lattice": Lattice, "m": int, "f": [int],
//                 "witness": [[int]]?}

std::string to_json(const Lattice& l);
Lattice lattice_from_json(const std::string& text);

std::string to_json(const FiniteQuadraticForm& a);
FiniteQuadraticForm fqf_from_json(const std::string& text);

std::string to_json(const Embedding& e);
Embedding embedding_from_json(const std::string& text);

std::string to_json(const MirrorResult& r);
MirrorResult mirror_result_from_json(const std::string& text);

}  // namespace k3m
