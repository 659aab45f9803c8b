#include "cubevol/combine.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "cubevol/errors.hpp"
#include "cubevol/volume.hpp"

namespace cubevol::combine {

namespace {

int line_of(std::string_view text, std::size_t offset)
{
    int line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

/** Line on which each element of the top-level array starts. */
std::vector<int> element_lines(std::string_view text)
{
    std::vector<int> lines;
    int depth = 0;
    bool in_string = false;
    bool expect_element = false;
    int line = 1;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char ch = text[i];
        if (ch == '\n')
            ++line;
        if (in_string)
        {
            if (ch == '\\')
                ++i;
            else if (ch == '"')
                in_string = false;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        if (expect_element && depth == 1 && ch != ']')
        {
            lines.push_back(line);
            expect_element = false;
        }
        switch (ch)
        {
            case '"': in_string = true; break;
            case '[':
            case '{':
                ++depth;
                if (depth == 1)
                    expect_element = true;
                break;
            case ']':
            case '}': --depth; break;
            case ',':
                if (depth == 1)
                    expect_element = true;
                break;
            default: break;
        }
    }
    return lines;
}

}   // namespace

std::vector<PieceSpec> parse_pieces(std::string_view text)
{
    nlohmann::json doc;
    try
    {
        doc = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw InputError(std::string("malformed JSON: ") + e.what(), line_of(text, e.byte > 0 ? e.byte - 1 : 0));
    }
    if (!doc.is_array())
        throw InputError("pieces file must hold a JSON array", 1);

    const std::vector<int> lines = element_lines(text);
    std::vector<PieceSpec> pieces;
    for (std::size_t k = 0; k < doc.size(); ++k)
    {
        const int line = k < lines.size() ? lines[k] : 0;
        const auto& item = doc[k];
        if (!item.is_object())
            throw InputError("piece must be an object", line);
        PieceSpec p;
        p.line = line;
        p.label = item.contains("label") && item["label"].is_string() ? item["label"].get<std::string>()
                                                                       : "piece" + std::to_string(k + 1);
        if (!item.contains("kind") || !item["kind"].is_string())
            throw InputError("piece '" + p.label + "' has no kind", line);
        const std::string kind = item["kind"].get<std::string>();
        if (kind == "hyperbolic")
            p.kind = PieceKind::hyperbolic;
        else if (kind == "seifert")
            p.kind = PieceKind::seifert;
        else
            throw InputError("piece '" + p.label + "' has unknown kind '" + kind + "'", line);
        if (item.contains("volume"))
        {
            if (!item["volume"].is_number())
                throw InputError("piece '" + p.label + "' has a non-numeric volume", line);
            p.volume = item["volume"].get<double>();
        }
        if (p.kind == PieceKind::hyperbolic)
        {
            if (!p.volume)
                throw InputError("hyperbolic piece '" + p.label + "' is missing its volume", line);
            if (!(*p.volume > 0.0) || !std::isfinite(*p.volume))
                throw InputError("hyperbolic piece '" + p.label + "' must have positive volume", line);
        }
        pieces.push_back(std::move(p));
    }
    return pieces;
}

CombineReport combine(const std::vector<PieceSpec>& pieces)
{
    const double v3 = hyp::v3_simplex();
    CombineReport report;
    for (const auto& p : pieces)
    {
        double sv = 0.0;
        if (p.kind == PieceKind::hyperbolic)
        {
            if (!p.volume)
                throw InputError("hyperbolic piece '" + p.label + "' is missing its volume", p.line);
            if (!(*p.volume > 0.0) || !std::isfinite(*p.volume))
                throw InputError("hyperbolic piece '" + p.label + "' must have positive volume", p.line);
            sv = *p.volume / v3;
        }
        report.per_piece.push_back({p.label, sv});
        report.sv += sv;
    }
    report.qsv = report.sv / 5.0;
    return report;
}

nlohmann::json report_to_json(const CombineReport& report)
{
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : report.per_piece)
        pieces.push_back({{"label", p.label}, {"sv", p.sv}});
    return {{"schema_version", schema_version}, {"sv", report.sv}, {"qsv", report.qsv}, {"per_piece", pieces}};
}

std::vector<ConstantRow> constants_table()
{
    const double v3 = hyp::v3_simplex();
    const double pi = std::numbers::pi;
    return {
        {"v3_simplex", v3, "regular ideal tetrahedron, 3 L(pi/3)"},
        {"v3_cube", 5.0 * v3, "regular ideal cube, five regular ideal tetrahedra"},
        {"v2_simplex", pi, "ideal triangle"},
        {"v2_cube", 2.0 * pi, "ideal quadrilateral, two ideal triangles"},
    };
}

}   // namespace cubevol::combine
