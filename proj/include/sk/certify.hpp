#pragma once

#include "sk/dyadic.hpp"
#include "sk/geometry.hpp"
#include "sk/isometry.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sk {

enum class TableEncoding { Dyadic, Decimal };

// A claimed sample table of a curve: 2^depth + 1 points, point i sampled at
// time i / 2^depth. Decimal input is parsed exactly as a rational and
// rounded to the nearest multiple of 2^-precision (ties to even), so the
// stored coordinates are always exact dyadics.
struct CandidateTable {
    unsigned depth = 0;
    TableEncoding encoding = TableEncoding::Dyadic;
    unsigned precision = 53;  // bits; meaningful for decimal input
    std::vector<Point> points;
};

// JSON shape: {"depth": N, "encoding": "dyadic" | "decimal",
//              "precision": bits (optional, decimal only),
//              "points": [["x", "y"], ...]}.
// Rejects depth 0 (the midpoint anchor would not exist), wrong-length
// tables (the error names expected and actual counts), and malformed
// coordinates (the error names the offending index).
CandidateTable load_table(std::istream& in);
CandidateTable load_table_file(const std::string& path);
std::string table_to_json_text(const CandidateTable& table);

// This curve's own samples at the given depth, as a dyadic table.
CandidateTable export_reference_table(unsigned depth);

enum class CheckId { C1, C2, C3, C4 };
const char* check_name(CheckId id);

struct Verdict {
    bool pass = false;
    std::optional<CheckId> failed_check;
    std::string first_violation;  // indices and exact values of the first failure
    std::optional<Isometry> isometry;
    std::string statement;  // what a pass certifies, and what it does not
};

// Decides whether the table is consistent with this curve at its depth, up
// to a plane isometry. Checks run in order and stop at the first failure:
//   C1  the anchor samples (t = 0, 1/2, 1) form a right isosceles triangle
//       with squared hypotenuse 4 (endpoints at the acute vertices), and
//       every sample lies in that triangle;
//   C2  every pair grows no faster than the square-to-linear bound:
//       |p_j - p_i|^2 <= 4 (j - i) / 2^depth + tol;
//   C3  each midpoint sample equals the right-angle vertex of the
//       sub-triangle determined recursively from the anchors;
//   C4  an admissible isometry carries the anchors onto the canonical
//       triangle and then matches every sample pointwise:
//       |iso(p_i) - s(i / 2^depth)|^2 <= tol^2.
// tol is a single additive tolerance on squared quantities (C4 squares it,
// as stated). Failures produce a Verdict, never an exception.
Verdict certify(const CandidateTable& table, const Dyadic& tol);

// Default tolerances: exact for dyadic input, 2^-40 (~9.1e-13) for decimal.
Dyadic default_tolerance(TableEncoding encoding);

}  // namespace sk
