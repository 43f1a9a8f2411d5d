#pragma once

#include <string>
#include <vector>

namespace kummer {

struct IdentityResult {
    std::string name;
    bool passed = false;
    /// Canonical residual or a short explanation.
    std::string detail;
};

/// Exact symbolic identities of the Kummer groupoid with letters R and a.
/// Failures are reported in the results, never thrown.
std::vector<IdentityResult> verify_identities();

/// One JSON object per identity, one per line.
std::string render_identities(const std::vector<IdentityResult>& results);

} // namespace kummer
