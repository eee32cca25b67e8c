#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gfpoly/gfp.hpp"
#include "gfpoly/hosoya.hpp"
#include "gfpoly/poly.hpp"

namespace gfpoly {

using IntTriangle = std::vector<std::vector<Integer>>;

/// Entrywise evaluation of the Hosoya triangle of a catalog family, rows
/// 0..max_row. Throws UnknownFamily.
IntTriangle numeric_triangle(std::string_view family, std::size_t max_row, const Integer& x0);

IntTriangle evaluate(const PolyTriangle& t, const Integer& x0);

/// Exponents e_n, n = 1..max_n, of the coefficient gcd as a prime power:
/// fermat / fermat_lucas: content(G_n) = 3^e; pell: content(G_{2n}) = 2^e;
/// chebyshev2: content(G_n) = 2^e. Throws FamilyNotCovered for other
/// families and NotAPurePower if a content has another prime factor.
std::vector<unsigned> coefficient_gcd_exponents(std::string_view family, std::size_t max_n);

/// "index value" lines starting at `offset`, triangles flattened row-major.
std::string export_bfile(const std::vector<Integer>& sequence, long offset = 1);
std::vector<Integer> flatten(const IntTriangle& t);

/// {family, rows: [[poly, ...], ...], eval_point?, values?}
nlohmann::json triangle_json(std::string_view family, const PolyTriangle& rows,
                             std::optional<Integer> eval_point = std::nullopt);
/// One line per row, entries in the polynomial text format.
std::string triangle_csv(const PolyTriangle& rows);
std::string triangle_csv(const IntTriangle& rows);

}  // namespace gfpoly
