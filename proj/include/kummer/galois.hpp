#pragma once

// Differential Galois analysis of psi'' + (R/2) psi = 0 over Q(x):
// rational Riccati solutions, Kovacic's three cases on y'' = r y with
// r = -R/2, and the induced Lie-irreducibility of the projective image.

#include "kummer/projective.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kummer {

enum class RiccatiCount { None, One, Two, Infinite };

struct RiccatiAnalysis {
    /// Each u satisfies u' + u^2 + R/2 = 0, sorted by size then sign then text.
    std::vector<RatFunc> solutions;
    RiccatiCount count_class = RiccatiCount::None;
};

/// u' + u^2 + R/2, zero exactly on Riccati solutions.
RatFunc riccati_residual(const RatFunc& R, const RatFunc& u);

/// Rational solutions of u' + u^2 = r found through Kovacic's first case.
/// Throws UnsupportedInput when a candidate needs an irrational constant.
std::vector<RatFunc> kovacic_rational_riccati(const RatFunc& r);

RiccatiAnalysis riccati_rational(const ProjectiveStructure& p);

bool exp_integral_is_algebraic(const RatFunc& u);

enum class GaloisTag {
    ProjectivelyTrivial,
    TorusFinite,
    TorusInfinite,
    BorelFull,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    FullSL2,
};

enum class Finiteness { Finite, Infinite, Undetermined };

/// A root omega of omega^2 - phi*omega + (phi'/2 + phi^2/2 - r) solves the
/// Riccati equation omega' + omega^2 = r.
struct DihedralCertificate {
    RatFunc theta;
    Poly p;
    RatFunc phi;
};

/// Data of Kovacic's third case: P_{-1} = 0 for the recursion started at -p.
struct PrimitiveCertificate {
    int n = 0;
    RatFunc theta;
    Poly s;
    Poly p;
};

struct GaloisClass {
    GaloisTag tag = GaloisTag::FullSL2;
    /// Meaningful for Dihedral only.
    Finiteness finiteness = Finiteness::Undetermined;
    std::vector<RatFunc> riccati_solutions;
    std::vector<RatFunc> sym2_basis;
    std::optional<DihedralCertificate> dihedral;
    std::optional<PrimitiveCertificate> primitive;
    /// One entry per Kovacic case that was examined and did not apply.
    std::vector<std::string> failed_conditions;
};

std::optional<DihedralCertificate> kovacic_case2(const RatFunc& r);
std::optional<PrimitiveCertificate> kovacic_case3(const RatFunc& r, int n);

bool verify_dihedral(const RatFunc& r, const DihedralCertificate& c);
bool verify_primitive(const RatFunc& r, const PrimitiveCertificate& c);

GaloisClass kovacic_classify(const ProjectiveStructure& p);

bool lie_irreducible(GaloisTag tag);
inline bool lie_irreducible(const GaloisClass& g) { return lie_irreducible(g.tag); }

/// Lowercase identifiers, e.g. "torus_infinite".
std::string to_string(GaloisTag tag);
std::optional<GaloisTag> galois_tag_from_string(const std::string& s);
std::string to_string(Finiteness f);
std::optional<Finiteness> finiteness_from_string(const std::string& s);
std::string to_string(RiccatiCount c);

} // namespace kummer
