#include "kummer/classifier.hpp"

#include "kummer/errors.hpp"
#include "kummer/parser.hpp"
#include "kummer/rational_solutions.hpp"

#include <json.hpp>

#include <sstream>

namespace kummer {

namespace {

using Json = nlohmann::ordered_json;

const std::pair<ProjectiveImage, const char*> kImageNames[] = {
    {ProjectiveImage::Trivial, "trivial"},
    {ProjectiveImage::FiniteCyclic, "finite_cyclic"},
    {ProjectiveImage::InfiniteTorusImage, "infinite_torus_image"},
    {ProjectiveImage::BorelImage, "borel_image"},
    {ProjectiveImage::DihedralImage, "dihedral_image"},
    {ProjectiveImage::A4, "a4"},
    {ProjectiveImage::S4, "s4"},
    {ProjectiveImage::A5, "a5"},
    {ProjectiveImage::FullPSL2, "full_psl2"},
};

const std::pair<Verdict, const char*> kVerdictNames[] = {
    {Verdict::Yes, "yes"},
    {Verdict::No, "no"},
    {Verdict::Undetermined, "undetermined"},
};

template <class E, std::size_t N>
E enum_from(const std::pair<E, const char*> (&table)[N], const std::string& s, const char* what) {
    for (const auto& [v, name] : table)
        if (s == name) return v;
    throw std::invalid_argument(std::string("unknown ") + what + " '" + s + "'");
}

std::string galois_class_name(const GaloisClass& g) {
    if (g.tag == GaloisTag::Dihedral) return "dihedral_" + to_string(g.finiteness);
    return to_string(g.tag);
}

GaloisClass galois_class_from_name(const std::string& s) {
    GaloisClass g;
    const std::string prefix = "dihedral_";
    if (s.rfind(prefix, 0) == 0) {
        const auto f = finiteness_from_string(s.substr(prefix.size()));
        if (!f) throw std::invalid_argument("unknown galois_class '" + s + "'");
        g.tag = GaloisTag::Dihedral;
        g.finiteness = *f;
        return g;
    }
    const auto tag = galois_tag_from_string(s);
    if (!tag || *tag == GaloisTag::Dihedral) throw std::invalid_argument("unknown galois_class '" + s + "'");
    g.tag = *tag;
    return g;
}

std::string capitalized(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "Yes";
    case Verdict::No: return "No";
    case Verdict::Undetermined: return "Undetermined";
    }
    return "";
}

std::string join(const std::vector<RatFunc>& fs, const std::string& var) {
    std::string out;
    for (const auto& f : fs) out += (out.empty() ? "" : ", ") + f.to_string(var);
    return out;
}

bool independent(const std::vector<RatFunc>& fs) {
    std::vector<RatFunc> seen;
    for (const auto& f : fs) {
        if (f.is_zero() || span_coordinates(f, seen)) return false;
        seen.push_back(f);
    }
    return true;
}

Verdict isogeny_verdict(const GaloisClass& g) {
    switch (g.tag) {
    case GaloisTag::ProjectivelyTrivial:
    case GaloisTag::TorusFinite:
    case GaloisTag::Tetrahedral:
    case GaloisTag::Octahedral:
    case GaloisTag::Icosahedral:
        return Verdict::Yes;
    case GaloisTag::Dihedral:
        return g.finiteness == Finiteness::Finite     ? Verdict::Yes
               : g.finiteness == Finiteness::Infinite ? Verdict::No
                                                      : Verdict::Undetermined;
    default:
        return Verdict::No;
    }
}

std::string pullback_reason(const ClassificationReport& rep) {
    if (rep.integrable_pullback)
        return "pullback criterion: the symmetric square a'''+2*R*a'+R'*a = 0 has 3 independent rational solutions";
    return "pullback criterion: the symmetric square a'''+2*R*a'+R'*a = 0 has fewer than 3 independent rational "
           "solutions";
}

std::string isogeny_reason(const ClassificationReport& rep) {
    switch (rep.integrable_isogeny) {
    case Verdict::Yes: return "isogeny criterion: the Galois group is finite";
    case Verdict::No: return "isogeny criterion: the Galois group is infinite";
    case Verdict::Undetermined: return "isogeny criterion: finiteness of the dihedral Galois group is not decided";
    }
    return "";
}

} // namespace

std::string to_string(ProjectiveImage v) {
    for (const auto& [e, name] : kImageNames)
        if (e == v) return name;
    return "unknown";
}

std::string to_string(Verdict v) {
    for (const auto& [e, name] : kVerdictNames)
        if (e == v) return name;
    return "unknown";
}

bool operator==(const ClassificationReport& a, const ClassificationReport& b) {
    const auto finiteness = [](const ClassificationReport& r) {
        return r.galois_class.tag == GaloisTag::Dihedral ? r.galois_class.finiteness : Finiteness::Undetermined;
    };
    return a.input == b.input && a.galois_class.tag == b.galois_class.tag && finiteness(a) == finiteness(b) &&
           a.projective_image == b.projective_image && a.integrable_pullback == b.integrable_pullback &&
           a.integrable_isogeny == b.integrable_isogeny && a.affine_subgroupoid == b.affine_subgroupoid &&
           a.minimal == b.minimal && a.n_minimal_all_n == b.n_minimal_all_n &&
           a.product_rigidity == b.product_rigidity && a.acts_diagonally == b.acts_diagonally &&
           a.rational_sym2_basis == b.rational_sym2_basis;
}

ProjectiveImage projective_image_of(const GaloisClass& g) {
    switch (g.tag) {
    case GaloisTag::ProjectivelyTrivial: return ProjectiveImage::Trivial;
    case GaloisTag::TorusFinite: return ProjectiveImage::FiniteCyclic;
    case GaloisTag::TorusInfinite: return ProjectiveImage::InfiniteTorusImage;
    case GaloisTag::BorelFull: return ProjectiveImage::BorelImage;
    case GaloisTag::Dihedral: return ProjectiveImage::DihedralImage;
    case GaloisTag::Tetrahedral: return ProjectiveImage::A4;
    case GaloisTag::Octahedral: return ProjectiveImage::S4;
    case GaloisTag::Icosahedral: return ProjectiveImage::A5;
    case GaloisTag::FullSL2: return ProjectiveImage::FullPSL2;
    }
    return ProjectiveImage::FullPSL2;
}

ClassificationReport classify(const RatFunc& R, const std::string& variable) {
    const ProjectiveStructure p(R);
    ClassificationReport rep;
    rep.variable = variable;
    rep.input = R.to_string(variable);
    rep.galois_class = kovacic_classify(p);
    const GaloisClass& g = rep.galois_class;

    rep.projective_image = projective_image_of(g);
    rep.integrable_pullback = g.tag == GaloisTag::ProjectivelyTrivial;
    if (rep.integrable_pullback) rep.rational_sym2_basis = g.sym2_basis;
    rep.integrable_isogeny = isogeny_verdict(g);
    if (!g.riccati_solutions.empty()) {
        const RatFunc& u = g.riccati_solutions.front();
        const RatFunc r = RatFunc(-2) * u;
        rep.affine_subgroupoid = AffineWitness{u, r, affine_operator(AffineStructure(r))};
    }
    rep.minimal = lie_irreducible(g)                ? Verdict::Yes
                  : g.tag == GaloisTag::Dihedral ? Verdict::Undetermined
                                                  : Verdict::No;
    rep.n_minimal_all_n = lie_irreducible(g);
    rep.product_rigidity = rep.projective_image != ProjectiveImage::Trivial;
    rep.acts_diagonally = rep.integrable_pullback;

    const auto problems = report_violations(R, rep);
    if (!problems.empty()) {
        std::string msg = "report for " + rep.input + " failed verification:";
        for (const auto& s : problems) msg += " " + s + ";";
        throw VerificationError(msg);
    }
    return rep;
}

std::vector<std::string> report_violations(const RatFunc& R, const ClassificationReport& rep) {
    std::vector<std::string> out;
    const auto require = [&](bool ok, const std::string& what) {
        if (!ok) out.push_back(what);
    };
    const GaloisClass& g = rep.galois_class;
    const RatFunc r = RatFunc(make_rat(-1, 2)) * R;
    const bool trivial = g.tag == GaloisTag::ProjectivelyTrivial;

    for (const auto& u : g.riccati_solutions)
        require(riccati_residual(R, u).is_zero(), "Riccati solution " + u.to_string() + " fails substitution");
    if (trivial) {
        const LinearODE lie = lie_operator(ProjectiveStructure(R));
        require(g.sym2_basis.size() == 3 && independent(g.sym2_basis), "symmetric-square basis is not 3-dimensional");
        for (const auto& f : g.sym2_basis)
            require(lie.apply(f).is_zero(), "symmetric-square solution " + f.to_string() + " fails substitution");
    }
    const bool torus = g.tag == GaloisTag::TorusFinite || g.tag == GaloisTag::TorusInfinite;
    if (torus) {
        require(g.riccati_solutions.size() == 2, "torus class without two Riccati solutions");
        bool finite = true;
        for (const auto& u : g.riccati_solutions) finite = finite && exp_integral_is_algebraic(u);
        require(finite == (g.tag == GaloisTag::TorusFinite), "torus finiteness disagrees with the exponentials");
    }
    if (g.tag == GaloisTag::BorelFull) require(g.riccati_solutions.size() == 1, "Borel class without a unique solution");
    if (g.tag == GaloisTag::Dihedral)
        require(g.dihedral && verify_dihedral(r, *g.dihedral), "dihedral certificate fails");
    if (g.tag == GaloisTag::Tetrahedral || g.tag == GaloisTag::Octahedral || g.tag == GaloisTag::Icosahedral)
        require(g.primitive && verify_primitive(r, *g.primitive), "primitive certificate fails");

    if (const auto& w = rep.affine_subgroupoid) {
        require(riccati_residual(R, w->u).is_zero(), "affine witness u fails the Riccati equation");
        require(w->r == RatFunc(-2) * w->u, "affine witness r differs from -2u");
        require(affine_to_projective(AffineStructure(w->r)).R() == R, "R differs from r' - r^2/2");
        require(w->op == affine_operator(AffineStructure(w->r)), "affine operator differs from a''+r*a'+r'*a");
    }
    require(rep.affine_subgroupoid.has_value() == !g.riccati_solutions.empty(),
            "affine witness present exactly when a rational Riccati solution exists");
    require(rep.projective_image == projective_image_of(g), "projective image disagrees with the Galois class");
    require(rep.integrable_pullback == trivial, "pullback verdict disagrees with the Galois class");
    require(rep.integrable_pullback == (rep.rational_sym2_basis && rep.rational_sym2_basis->size() == 3),
            "pullback verdict disagrees with the symmetric-square basis");
    require(!rep.integrable_pullback || rep.integrable_isogeny == Verdict::Yes, "pullback without isogeny");
    require(rep.integrable_isogeny == isogeny_verdict(g), "isogeny verdict disagrees with the Galois class");
    require((rep.minimal == Verdict::Yes) == lie_irreducible(g), "minimality disagrees with Lie-irreducibility");
    require((rep.minimal == Verdict::Undetermined) == (g.tag == GaloisTag::Dihedral),
            "minimality undetermined outside the dihedral case");
    require(rep.minimal != Verdict::Yes || !rep.affine_subgroupoid, "minimal structure with an affine witness");
    require(rep.n_minimal_all_n == lie_irreducible(g), "n-minimality disagrees with Lie-irreducibility");
    require(rep.product_rigidity == (rep.projective_image != ProjectiveImage::Trivial),
            "product rigidity disagrees with the projective image");
    require(rep.acts_diagonally == rep.integrable_pullback, "diagonal action disagrees with the pullback verdict");
    return out;
}

std::string minimal_reason(const ClassificationReport& rep) {
    const std::string& v = rep.variable;
    switch (rep.minimal) {
    case Verdict::Yes:
        return "Lie-irreducible Galois image: no invariant line or plane in sl2";
    case Verdict::Undetermined:
        return "dihedral Galois image: an invariant Cartan line exists, yet no rational Riccati solution does; "
               "the algebraic Riccati solutions of degree 2 become rational only on a double cover";
    case Verdict::No:
        break;
    }
    std::string reason;
    if (rep.projective_image == ProjectiveImage::Trivial)
        reason = "trivial projective image: every algebraic subgroup of PSL2 pulls back to a sub-groupoid";
    if (const auto& w = rep.affine_subgroupoid) {
        if (!reason.empty()) reason += "; ";
        reason += "rational Riccati solution u = " + w->u.to_string(v) + "; affine reduction r = " + w->r.to_string(v);
    }
    return reason;
}

std::string render_report(const ClassificationReport& rep, ReportFormat format) {
    const std::string& v = rep.variable;
    const GaloisClass& g = rep.galois_class;
    if (format == ReportFormat::Json) {
        Json j;
        j["input"] = rep.input;
        j["galois_class"] = galois_class_name(g);
        j["projective_image"] = to_string(rep.projective_image);
        j["integrable_pullback"] = rep.integrable_pullback;
        j["integrable_isogeny"] = to_string(rep.integrable_isogeny);
        if (const auto& w = rep.affine_subgroupoid)
            j["affine_subgroupoid"] = {{"u", w->u.to_string(v)}, {"r", w->r.to_string(v)}, {"operator", w->op.to_string(v)}};
        else
            j["affine_subgroupoid"] = nullptr;
        j["minimal"] = to_string(rep.minimal);
        j["n_minimal_all_n"] = rep.n_minimal_all_n;
        j["product_rigidity"] = rep.product_rigidity;
        j["acts_diagonally"] = rep.acts_diagonally;
        if (rep.rational_sym2_basis) {
            Json arr = Json::array();
            for (const auto& f : *rep.rational_sym2_basis) arr.push_back(f.to_string(v));
            j["rational_sym2_basis"] = arr;
        } else {
            j["rational_sym2_basis"] = nullptr;
        }
        return j.dump();
    }

    std::ostringstream os;
    const auto flag = [](bool b) { return b ? "true" : "false"; };
    os << "input: " << rep.input << "\n";
    os << "galois_class: " << galois_class_name(g) << "\n";
    if (!g.riccati_solutions.empty()) os << "riccati_solutions: " << join(g.riccati_solutions, v) << "\n";
    if (g.dihedral) os << "dihedral_certificate: phi = " << g.dihedral->phi.to_string(v) << "\n";
    if (g.primitive)
        os << "primitive_certificate: n = " << g.primitive->n << ", P = " << g.primitive->p.to_string(v) << "\n";
    for (const auto& f : g.failed_conditions) os << "kovacic: " << f << "\n";
    os << "projective_image: " << to_string(rep.projective_image) << "\n";
    os << "integrable_pullback: " << flag(rep.integrable_pullback) << " (" << pullback_reason(rep) << ")\n";
    os << "integrable_isogeny: " << capitalized(rep.integrable_isogeny) << " (" << isogeny_reason(rep) << ")\n";
    if (const auto& w = rep.affine_subgroupoid)
        os << "affine_subgroupoid: u = " << w->u.to_string(v) << ", r = " << w->r.to_string(v) << ", "
           << w->op.to_string(v) << " = 0\n";
    else
        os << "affine_subgroupoid: none\n";
    os << "minimal: " << capitalized(rep.minimal) << " (" << minimal_reason(rep) << ")\n";
    os << "n_minimal_all_n: " << flag(rep.n_minimal_all_n)
       << " (Lie-irreducibility criterion: minimality of every Cartesian power follows from an irreducible image)\n";
    os << "product_rigidity: " << flag(rep.product_rigidity)
       << " (rigidity criterion: sl2 is simple; requires a nontrivial projective image)\n";
    os << "acts_diagonally: " << flag(rep.acts_diagonally)
       << " (diagonal action criterion: holds exactly when the pullback is integrable)\n";
    os << "rational_sym2_basis: " << (rep.rational_sym2_basis ? join(*rep.rational_sym2_basis, v) : "none") << "\n";
    return os.str();
}

ClassificationReport report_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    }
    try {
        ClassificationReport rep;
        rep.input = j.at("input").get<std::string>();
        const auto parsed = parse_expression(rep.input);
        std::optional<std::string> var = parsed.variable;
        const auto read = [&](const Json& s) {
            auto p = parse_expression(s.get<std::string>());
            if (p.variable) {
                if (var && *var != *p.variable) throw std::invalid_argument("report mixes variables");
                var = p.variable;
            }
            return evaluate(*p.ast);
        };
        rep.galois_class = galois_class_from_name(j.at("galois_class").get<std::string>());
        rep.projective_image = enum_from(kImageNames, j.at("projective_image").get<std::string>(), "projective_image");
        rep.integrable_pullback = j.at("integrable_pullback").get<bool>();
        rep.integrable_isogeny = enum_from(kVerdictNames, j.at("integrable_isogeny").get<std::string>(), "verdict");
        if (const auto& w = j.at("affine_subgroupoid"); !w.is_null()) {
            const RatFunc u = read(w.at("u"));
            const RatFunc r = read(w.at("r"));
            rep.affine_subgroupoid = AffineWitness{u, r, affine_operator(AffineStructure(r))};
        }
        rep.minimal = enum_from(kVerdictNames, j.at("minimal").get<std::string>(), "verdict");
        rep.n_minimal_all_n = j.at("n_minimal_all_n").get<bool>();
        rep.product_rigidity = j.at("product_rigidity").get<bool>();
        rep.acts_diagonally = j.at("acts_diagonally").get<bool>();
        if (const auto& b = j.at("rational_sym2_basis"); !b.is_null()) {
            std::vector<RatFunc> basis;
            for (const auto& f : b) basis.push_back(read(f));
            rep.rational_sym2_basis = std::move(basis);
        }
        rep.variable = var.value_or("x");
        if (const auto& w = j.at("affine_subgroupoid"); !w.is_null()) {
            if (w.at("operator").get<std::string>() != rep.affine_subgroupoid->op.to_string(rep.variable))
                throw std::invalid_argument("affine operator does not match r");
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report JSON: ") + e.what());
    } catch (const ParseError& e) {
        throw std::invalid_argument(std::string("malformed rational function in report: ") + e.what());
    }
}

} // namespace kummer
