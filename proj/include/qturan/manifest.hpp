#pragma once

#include <qturan/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qturan {

/// One `[section]` of the grid manifest: ordered key/value entries, where a
/// value is the raw text after `=` (whitespace-separated tokens).
struct ManifestSection {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    bool has(const std::string& key) const;
    /// Raw value text; throws grid_error when the key is missing.
    const std::string& raw(const std::string& key) const;
    /// Whitespace-split tokens of the value.
    std::vector<std::string> strings(const std::string& key) const;
    /// Tokens parsed as exact rationals.
    std::vector<Rational> rationals(const std::string& key) const;
    /// Single-token value parsed as a rational / integer.
    Rational rational(const std::string& key) const;
    long integer(const std::string& key) const;
};

/// Parsed parameter-grid manifest: a version line plus ordered sections.
struct Manifest {
    long version = 0;
    std::vector<ManifestSection> sections;

    bool has_section(const std::string& name) const;
    const ManifestSection& section(const std::string& name) const;
};

/// Parse manifest text: `version = N`, `[section]` headers, `key = tokens`
/// entries, `#` comments.  Throws grid_error with a line number on malformed
/// input.
Manifest parse_manifest(const std::string& text);

/// Read and parse a manifest file; throws grid_error on I/O failure.
Manifest load_manifest_file(const std::string& path);

/// The canonical manifest text embedded in the library.  The copy shipped at
/// data/example_grids.manifest must match it byte for byte.
const std::string& default_manifest_text();

/// Parsed form of default_manifest_text (parsed once).
const Manifest& default_manifest();

} // namespace qturan
