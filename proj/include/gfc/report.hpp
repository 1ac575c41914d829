#ifndef GFC_REPORT_HPP
#define GFC_REPORT_HPP

/**
 * Serialization layer: JSON (exact, machine-checkable), CSV (flat summary),
 * and Markdown tables in the shape of the published classification tables.
 *
 * All geometry is converted to the Euclidean presentation here and nowhere
 * else.  Rational values are serialized as exact "p/q" strings; scalars in
 * Q(sqrt(3)) as {"a": ..., "b": ...} meaning a + b*sqrt(3).  Decimal floats
 * appear only in fields explicitly named "*_approx" (rendered to 4 places),
 * so byte-identical output is reproducible across platforms.
 */

#include "gfc/classify.hpp"
#include "gfc/geometry.hpp"
#include "gfc/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfc::report {

enum class Format { Json, Csv, Md };

std::optional<Format> format_from_name(const std::string& name);

/// Fixed CSV column set shared by the enumeration and classification reports.
extern const char* const kCsvHeader;

/// Equation of a facet's supporting line in Euclidean coordinates, in the
/// smallest integer form ("x+√3y=11", "y=(7/2)√3", "2x+y=8", "x=9/2").
std::string edge_equation(const rootdata::RootDatum& datum, const exactgeom::HalfPlane& facet);

/// Enumerate the groups at the given bound and serialize the census without
/// verdicts.  Records are in enumeration order (1-based index per group).
/// When bound_too_small is non-null it is OR-ed with each group's clip flag.
std::string enumeration_report(const std::vector<rootdata::Group>& groups, int bound,
                               Format format, bool* bound_too_small = nullptr);

/// Enumerate + classify the groups and serialize the full records: verdicts,
/// barycenters (lattice and Euclidean), Ricci bounds and their witnesses.
std::string classification_report(const std::vector<rootdata::Group>& groups, int bound,
                                  Format format, bool* bound_too_small = nullptr);

/// Compare an expected JSON classification report against a fresh run over
/// the same groups and bound (both read from the expected file).  Returns 0
/// on an exact match, 3 on a mismatch (diagnostics lists the differences),
/// 1 when the text is not a well-formed classification report.
int verify_classification(const std::string& expected_json_text, std::string& diagnostics);

}  // namespace gfc::report

#endif
