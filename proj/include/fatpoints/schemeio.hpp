#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fatpoints/bipoly.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

struct FileNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedScheme : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contents of a scheme file. Exactly one of the two sections is present:
// "points" yields a fat point scheme, "generators" an explicit ideal basis
// (used by the differential-module oracle for non-fat subschemes).
struct SchemeFile {
    std::optional<FatPointScheme> scheme;
    std::vector<BiPoly> generators;
    bool has_points() const { return scheme.has_value(); }
    bool has_generators() const { return !generators.empty(); }
};

// Parse the JSON document text. Throws MalformedScheme on any structural or
// value error, with the offending element named.
SchemeFile parse_scheme_text(const std::string& text);

// Load from disk. Throws FileNotFound when the file cannot be opened and
// MalformedScheme as above.
SchemeFile load_scheme_file(const std::string& path);

}  // namespace fatpoints
