#pragma once

// JSON renderings of engine results. Polynomials are arrays of decimal
// strings; rationals are "num/den" strings with a presentation-only decimal
// alongside.

#include <string>

#include "mso/search.hpp"
#include "mso/subtree.hpp"

namespace mso {

std::string profile_to_json(const SubtreeProfile& profile, int digits);
std::string local_profile_to_json(const LocalProfile& profile, int digits);
std::string scan_to_json(const EdgeScanResult& scan, int digits);

/// Reads back profile_to_json output; derived fields are recomputed and must match.
SubtreeProfile profile_from_json(const std::string& text);

}  // namespace mso
