#ifndef CWCOH_DOCUMENT_HPP
#define CWCOH_DOCUMENT_HPP

#include "cwcoh/chain_map.hpp"
#include "cwcoh/complex.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace cwcoh {

/*
 * Complex documents are JSON objects in one of two forms.
 *
 * Boundary form:
 *   {"name": "klein", "cells": [1, 2, 1], "basepoint": 0,
 *    "boundaries": {"1": [[0, 0]], "2": [[2], [0]]}}
 * Matrix "n" is row-major with cells[n-1] rows and cells[n] columns; rows
 * index the lower-dimensional cells. "basepoint" defaults to 0.
 *
 * Presentation form (dimension <= 2):
 *   {"name": "torus", "vertices": 1, "basepoint": 0,
 *    "edges": [[0, 0], [0, 0]], "faces": [[1, 2, -1, -2]]}
 *
 * Map documents:
 *   {"source": <complex document or path>, "target": <same>,
 *    "maps": {"0": [[1]], "1": [[3]]}}
 * Missing dimensions are zero; relative paths resolve against base_dir.
 *
 * Integers beyond 64 bits are written as decimal strings.
 */

/// Throws ParseError (malformed JSON) or SchemaError. Shapes are checked;
/// the chain and augmentation conditions are left to validate().
CwComplex parse_complex_document(std::string_view text);

/// Canonical text: keys sorted, one top-level key per line, trailing newline.
std::string serialize_complex(const CwComplex& x);

ChainMap parse_map_document(std::string_view text, const std::filesystem::path& base_dir = {});
std::string serialize_map(const ChainMap& f);

CwComplex load_complex(const std::filesystem::path& path);
ChainMap load_map(const std::filesystem::path& path);

/// True if the document at `text` has a "maps" key.
bool is_map_document(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

} // namespace cwcoh

#endif
