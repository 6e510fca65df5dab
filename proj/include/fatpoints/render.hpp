#pragma once

#include <optional>
#include <string>

#include "fatpoints/hilbert.hpp"

namespace fatpoints {

enum class RenderFormat { pretty, csv, json };

std::optional<RenderFormat> parse_format(const std::string& name);

// pretty: right-aligned columns plus a stabilization annotation line when the
//         matrix carries metadata
// csv:    plain integers, row-major, no header ("1,2\n2,4\n")
// json:   {"rows":..., "cols":..., "data":[[...]], "eventual":...}
//         with eventual null when unknown
std::string render_matrix(const HilbertMatrix& h, RenderFormat format);
std::string render_matrix(const IntMatrix& m, RenderFormat format);

}  // namespace fatpoints
