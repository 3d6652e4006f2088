#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "walkup/complex.hpp"
#include "walkup/surgery.hpp"

namespace walkup {

/// Facet-list text: one facet per line, whitespace-separated labels, '#'
/// comment lines and blank lines ignored. Throws ParseError carrying the
/// line and column of the offending token.
SimplicialComplex parse_facet_list(std::string_view text);

/// {"facets": [[label, ...], ...]}. Throws ParseError.
SimplicialComplex parse_facets_json(std::string_view text);

/// Dispatches on the first non-blank character: '{' means JSON.
SimplicialComplex parse_complex(std::string_view text);

/// Canonical text form: facets in lexicographic order, one per line, labels
/// separated by single spaces, trailing newline.
std::string format_facet_list(const SimplicialComplex& complex);

std::string format_facets_json(const SimplicialComplex& complex);

std::string read_text(std::istream& in);
/// Throws Error(InvalidParameters) when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// {"format": "walkup-handle-ledger", "version": 1, "dimension": d,
///  "base": [[...]], "handles": [{"sigma1", "sigma2", "pairs"}]}
std::string format_ledger(const HandleLedger& ledger);
/// Throws ParseError on malformed documents.
HandleLedger parse_ledger(std::string_view text);

}  // namespace walkup
