#include "fatpoints/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace fatpoints {

namespace {

std::string render_pretty(const IntMatrix& m, const HilbertMeta* meta) {
    std::ostringstream out;
    size_t width = 1;
    for (const auto& row : m)
        for (long long v : row) width = std::max(width, std::to_string(v).size());
    for (const auto& row : m) {
        for (size_t c = 0; c < row.size(); ++c) {
            std::string s = std::to_string(row[c]);
            if (c) out << ' ';
            out << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    if (m.empty()) out << "(empty window)\n";
    if (meta && meta->rowBound >= 0) {
        out << "rows constant for i >= " << meta->rowBound << ", columns for j >= "
            << meta->colBound;
        if (meta->eventual) out << "; eventual value " << *meta->eventual;
        out << '\n';
    }
    return out.str();
}

std::string render_csv(const IntMatrix& m) {
    std::ostringstream out;
    for (const auto& row : m) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << row[c];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const IntMatrix& m, const HilbertMeta* meta) {
    nlohmann::ordered_json j;
    j["rows"] = m.size();
    j["cols"] = m.empty() ? 0 : m[0].size();
    j["data"] = m;
    if (meta && meta->eventual)
        j["eventual"] = *meta->eventual;
    else
        j["eventual"] = nullptr;
    return j.dump() + "\n";
}

std::string render(const IntMatrix& m, const HilbertMeta* meta, RenderFormat format) {
    switch (format) {
        case RenderFormat::pretty: return render_pretty(m, meta);
        case RenderFormat::csv: return render_csv(m);
        case RenderFormat::json: return render_json(m, meta);
    }
    return {};
}

}  // namespace

std::optional<RenderFormat> parse_format(const std::string& name) {
    if (name == "pretty") return RenderFormat::pretty;
    if (name == "csv") return RenderFormat::csv;
    if (name == "json") return RenderFormat::json;
    return std::nullopt;
}

std::string render_matrix(const HilbertMatrix& h, RenderFormat format) {
    return render(h.window, &h.meta, format);
}

std::string render_matrix(const IntMatrix& m, RenderFormat format) {
    return render(m, nullptr, format);
}

}  // namespace fatpoints
