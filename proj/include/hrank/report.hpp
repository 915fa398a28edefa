#pragma once

// Text and JSON rendering of verification reports and gallery runs.  Exact
// scalars are written as strings in Scalar::str() form.

#include "hrank/gallery.hpp"
#include "hrank/normal_form.hpp"
#include "hrank/verify.hpp"

#include <string>
#include <vector>

namespace hrank {

enum class Format { Text, Json };
/// "text" or "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& s);

std::string emit_report(const VerificationReport& r, Format f);
/// JSON: one object per line, one line per case.
std::string emit_gallery(const std::vector<GalleryCase>& cases, Format f);
std::string emit_normal_form(const NormalFormReport& r, Format f);

std::string point_str(const Point& p);

}  // namespace hrank
