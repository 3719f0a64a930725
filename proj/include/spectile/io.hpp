#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectile/graph_reduction.hpp"
#include "spectile/matrices.hpp"
#include "spectile/point_set.hpp"

namespace spectile {

/// File formats (structured text, integers only):
///   set file    {"moduli": [8,8,8], "points": [[0,0,0], ...]}
///   matrix file {"denominator": 8, "rows": [[0,4,...], ...]}   (rational)
///               {"modulus": 8, "rows": ...}                    (integer mod N)
///   graph file  {"n": 4, "edges": [[1,2], [2,3]]}
/// Malformed input raises std::runtime_error naming the offending field.

PointSet set_from_text(const std::string& text);
std::string set_to_text(const PointSet& s);
PointSet read_set_file(const std::string& path);
void write_set_file(const std::string& path, const PointSet& s);

/// Raw matrix file content; exactly one of denominator/modulus is present.
struct MatrixFile {
    std::optional<std::int64_t> denominator;
    std::optional<std::int64_t> modulus;
    std::vector<std::vector<std::int64_t>> rows;
};

MatrixFile matrix_from_text(const std::string& text);
MatrixFile read_matrix_file(const std::string& path);

/// Interpret file content; "denominator" names a rational (log) matrix,
/// "modulus" an integer matrix. Either key is accepted for either reading
/// since both carry the same payload; `required` below enforces presence
/// of a value when the file carries none.
RationalMatrix as_rational_matrix(const MatrixFile& mf);
IntMatrixModN as_int_matrix(const MatrixFile& mf,
                            std::optional<std::int64_t> modulus_override = std::nullopt);

std::string rational_matrix_to_text(const RationalMatrix& m);
std::string int_matrix_to_text(const IntMatrixModN& m);

SimpleGraph graph_from_text(const std::string& text);
std::string graph_to_text(const SimpleGraph& g);
SimpleGraph read_graph_file(const std::string& path);

/// Inline "{0,1,3}" form for sets in cyclic groups; values reduce mod n.
PointSet parse_inline_set(const std::string& text, const GroupSpec& g);

/// Comma-separated moduli list, e.g. "8,8,8".
std::vector<std::int64_t> parse_moduli(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace spectile
