#pragma once

// Verdicts on the Kummer groupoid of R(x) drawn from the Galois class of
// psi'' + (R/2) psi = 0, with witnesses that are re-verified before a
// report is returned.

#include "kummer/galois.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kummer {

enum class ProjectiveImage {
    Trivial,
    FiniteCyclic,
    InfiniteTorusImage,
    BorelImage,
    DihedralImage,
    A4,
    S4,
    A5,
    FullPSL2,
};

enum class Verdict { Yes, No, Undetermined };

/// Sub-groupoid preserving the affine structure r = -2u.
struct AffineWitness {
    RatFunc u;
    RatFunc r;
    LinearODE op;

    friend bool operator==(const AffineWitness&, const AffineWitness&) = default;
};

struct ClassificationReport {
    std::string input;
    GaloisClass galois_class;
    ProjectiveImage projective_image = ProjectiveImage::FullPSL2;
    bool integrable_pullback = false;
    Verdict integrable_isogeny = Verdict::No;
    std::optional<AffineWitness> affine_subgroupoid;
    Verdict minimal = Verdict::No;
    bool n_minimal_all_n = false;
    bool product_rigidity = false;
    bool acts_diagonally = false;
    std::optional<std::vector<RatFunc>> rational_sym2_basis;
    /// Name used when rendering rational functions.
    std::string variable = "x";
};

/// Equality of everything a JSON rendering carries.
bool operator==(const ClassificationReport& a, const ClassificationReport& b);

ProjectiveImage projective_image_of(const GaloisClass& g);

/// Throws UnsupportedPoles for non-rational poles and VerificationError if a
/// witness or a coherence rule fails.
ClassificationReport classify(const RatFunc& R, const std::string& variable = "x");

/// Re-checks every witness and coherence rule of a report; returns the
/// violations (empty when the report is sound).
std::vector<std::string> report_violations(const RatFunc& R, const ClassificationReport& rep);

enum class ReportFormat { Text, Json };

std::string render_report(const ClassificationReport& rep, ReportFormat format);

/// Inverse of the JSON rendering. Throws std::invalid_argument on malformed input.
ClassificationReport report_from_json(const std::string& json);

/// Justification printed after the minimality verdict.
std::string minimal_reason(const ClassificationReport& rep);

std::string to_string(ProjectiveImage v);
std::string to_string(Verdict v);

} // namespace kummer
