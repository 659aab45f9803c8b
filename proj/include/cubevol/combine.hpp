#pragma once

/**
 * Simplicial volume bookkeeping for 3-manifolds given their geometric pieces.
 *
 * Hyperbolic pieces contribute vol / v3 (v3 the regular ideal tetrahedron
 * volume), Seifert fibred pieces contribute 0, and the cubical simplicial
 * volume is one fifth of the total.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace cubevol::combine {

inline constexpr int schema_version = 1;

enum class PieceKind { hyperbolic, seifert };

struct PieceSpec
{
    std::string label;
    PieceKind kind = PieceKind::hyperbolic;
    std::optional<double> volume;
    int line = 0;   ///< 1-based source line, 0 if not parsed from text
};

struct PieceContribution
{
    std::string label;
    double sv = 0.0;
};

struct CombineReport
{
    double sv = 0.0;
    double qsv = 0.0;
    std::vector<PieceContribution> per_piece;
};

/**
 * Parses `[{"label":..,"kind":"hyperbolic"|"seifert","volume":..}, ...]`.
 * @throws InputError with the line of the offending piece
 */
std::vector<PieceSpec> parse_pieces(std::string_view text);

/** @throws InputError on a hyperbolic piece with missing or non-positive volume */
CombineReport combine(const std::vector<PieceSpec>& pieces);

nlohmann::json report_to_json(const CombineReport& report);

struct ConstantRow
{
    std::string name;
    double value;
    std::string note;
};

/** v3 simplex, v3 cube = 5 v3, v2 simplex = pi, v2 cube = 2 pi. */
std::vector<ConstantRow> constants_table();

}   // namespace cubevol::combine
