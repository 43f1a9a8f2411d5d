#include "kummer/galois.hpp"

#include "kummer/errors.hpp"
#include "kummer/linear_algebra.hpp"
#include "kummer/local.hpp"
#include "kummer/rational_solutions.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>

namespace kummer {

namespace {

// rational + sum_k roots[k] * sqrt(k) with k squarefree and k not in {0, 1}.
struct Surd {
    Rat rational;
    std::map<Int, Rat> roots;

    Surd() = default;
    Surd(Rat q) : rational(std::move(q)) {}
    Surd(long q) : rational(q) {}

    // scale * sqrt(q)
    static Surd sqrt_of(const Rat& q, const Rat& scale = 1) {
        const auto s = exact_sqrt(q);
        if (s.radicand == 0 || scale == 0) return {};
        if (s.radicand == 1) return Surd(scale * s.scale);
        Surd out;
        out.roots[s.radicand] = scale * s.scale;
        return out;
    }

    bool is_rational() const { return roots.empty(); }

    Surd& operator+=(const Surd& o) {
        rational += o.rational;
        for (const auto& [k, c] : o.roots) {
            roots[k] += c;
            if (roots[k] == 0) roots.erase(k);
        }
        return *this;
    }
    Surd operator-() const {
        Surd out = *this;
        out.rational = -out.rational;
        for (auto& [k, c] : out.roots) c = -c;
        return out;
    }
    Surd& operator-=(const Surd& o) { return *this += -o; }
    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(Surd a, const Rat& s) {
        if (s == 0) return {};
        a.rational *= s;
        for (auto& [k, c] : a.roots) c *= s;
        return a;
    }
    friend bool operator==(const Surd&, const Surd&) = default;

    Int first_radicand() const { return roots.begin()->first; }
};

bool is_nonnegative_integer(const Surd& s) {
    return s.is_rational() && is_integer(s.rational) && s.rational >= 0;
}

[[noreturn]] void needs_algebraic(const std::string& where, const Int& radicand) {
    throw UnsupportedInput(where + " requires the algebraic number sqrt(" + to_string(radicand) + ")");
}

void dedupe(std::vector<Surd>& v) {
    std::vector<Surd> out;
    for (auto& s : v)
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    v = std::move(out);
}

Rat coefficient(const std::map<int, Rat>& m, int e) {
    const auto it = m.find(e);
    return it == m.end() ? Rat(0) : it->second;
}

struct LocalData {
    std::vector<PoleData> poles;
    // Order of r at infinity; INT_MAX for r = 0.
    int order_inf = INT_MAX;
    Laurent inf;
};

LocalData local_data(const RatFunc& r) {
    LocalData d;
    d.poles = rational_poles(r, -1);
    if (!r.is_zero()) {
        d.order_inf = order_at_infinity(r);
        d.inf = laurent_at_infinity(r, 2);
    }
    return d;
}

RatFunc inverse_power(const Rat& c, unsigned j) {
    return RatFunc(Poly(Rat(1)), Poly::linear(c).pow(j));
}

// ---- case 1 ----

struct Case1Option {
    int sign = 0;
    Surd alpha;
};

struct Case1Point {
    bool infinity = false;
    Rat c;
    // [sqrt r] = sqrt(radicand) * part
    Int radicand = 1;
    RatFunc part;
    std::vector<Case1Option> options;
};

// sqrt of lead * (s_0 + s_1 t + ...) with s_0 = 1: scale, radicand, and the
// truncated series q with terms 0..terms-1; b is the coefficient following
// the truncation in r - [sqrt r]^2.
struct SqrtExpansion {
    SquareRoot root;
    std::vector<Rat> q;
    Rat b;
};

SqrtExpansion expand_sqrt(const std::function<Rat(int)>& coeff, int start, int terms) {
    SqrtExpansion out;
    const Rat lead = coeff(start);
    out.root = exact_sqrt(lead);
    std::vector<Rat> s(terms + 1);
    for (int k = 0; k <= terms; ++k) s[k] = coeff(start + k) / lead;
    out.q = series_sqrt(s, terms - 1);
    const auto sq = series_mul(out.q, out.q, terms);
    out.b = coeff(start + terms) - lead * sq[terms];
    return out;
}

// b / sqrt(lead) where lead = scale^2 * radicand
Surd divide_by_root(const Rat& b, const SquareRoot& root) {
    if (root.radicand == 1) return Surd(b / root.scale);
    Surd out;
    if (b != 0) out.roots[root.radicand] = b / (root.scale * Rat(root.radicand));
    return out;
}

void add_pm_options(Case1Point& pt, const Surd& base, const Surd& delta) {
    const bool has_part = !pt.part.is_zero();
    if (!has_part && delta == Surd()) {
        pt.options.push_back({0, base});
        return;
    }
    pt.options.push_back({has_part ? 1 : 0, base + delta});
    pt.options.push_back({has_part ? -1 : 0, base - delta});
}

Surd half_one_plus_four(const Rat& b) { return Surd::sqrt_of(1 + 4 * b, make_rat(1, 2)); }

std::optional<std::string> case1_obstruction(const LocalData& d) {
    for (const auto& p : d.poles)
        if (p.order != 1 && p.order % 2 != 0)
            return "pole of r at " + to_string(p.location) + " has odd order " + std::to_string(p.order);
    if (d.order_inf != INT_MAX && d.order_inf <= 2 && d.order_inf % 2 != 0)
        return "order of r at infinity is " + std::to_string(d.order_inf);
    return std::nullopt;
}

std::vector<Case1Point> case1_points(const LocalData& d) {
    std::vector<Case1Point> pts;
    for (const auto& p : d.poles) {
        Case1Point pt;
        pt.c = p.location;
        if (p.order == 1) {
            pt.options.push_back({0, Surd(1)});
        } else if (p.order == 2) {
            add_pm_options(pt, Surd(make_rat(1, 2)), half_one_plus_four(coefficient(p.laurent, -2)));
        } else {
            const int nu = static_cast<int>(p.order) / 2;
            const auto ex = expand_sqrt([&](int e) { return coefficient(p.laurent, e); }, -2 * nu, nu - 1);
            pt.radicand = ex.root.radicand;
            for (int j = 0; j <= nu - 2; ++j)
                pt.part += RatFunc(ex.root.scale * ex.q[j]) * inverse_power(p.location, nu - j);
            add_pm_options(pt, Surd(make_rat(nu, 2)), divide_by_root(ex.b, ex.root) * make_rat(1, 2));
        }
        pts.push_back(std::move(pt));
    }
    Case1Point inf;
    inf.infinity = true;
    if (d.order_inf > 2) {
        inf.options = {{0, Surd(0)}, {0, Surd(1)}};
    } else if (d.order_inf == 2) {
        add_pm_options(inf, Surd(make_rat(1, 2)), half_one_plus_four(d.inf.at(2)));
    } else {
        const int nu = -d.order_inf / 2;
        const auto ex = expand_sqrt([&](int e) { return d.inf.at(e); }, -2 * nu, nu + 1);
        inf.radicand = ex.root.radicand;
        for (int j = 0; j <= nu; ++j)
            inf.part += RatFunc(Poly::monomial(ex.root.scale * ex.q[j], nu - j));
        add_pm_options(inf, Surd(make_rat(-nu, 2)), divide_by_root(ex.b, ex.root) * make_rat(1, 2));
    }
    pts.push_back(std::move(inf));
    return pts;
}

template <class Option, class Visit>
void for_each_choice(const std::vector<std::vector<Option>>& sets, Visit visit) {
    std::vector<std::size_t> idx(sets.size(), 0);
    for (const auto& s : sets)
        if (s.empty()) return;
    while (true) {
        visit(idx);
        std::size_t k = 0;
        while (k < sets.size() && ++idx[k] == sets[k].size()) idx[k++] = 0;
        if (k == sets.size()) return;
    }
}

bool solution_less(const RatFunc& a, const RatFunc& b) {
    const auto size = [](const RatFunc& f) {
        return (f.num().is_zero() ? 0 : f.num().degree()) + f.den().degree();
    };
    const auto negative = [](const RatFunc& f) { return !f.is_zero() && f.num().lc() < 0; };
    if (size(a) != size(b)) return size(a) < size(b);
    if (negative(a) != negative(b)) return !negative(a);
    return a.to_string() < b.to_string();
}

void sort_unique(std::vector<RatFunc>& v) {
    std::sort(v.begin(), v.end(), solution_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// ---- case 2 and case 3 exponent sets ----

std::optional<std::string> case2_obstruction(const LocalData& d) {
    for (const auto& p : d.poles)
        if (p.order == 2 || (p.order > 2 && p.order % 2 == 1)) return std::nullopt;
    return std::string("no pole of r of order 2 or of odd order above 2");
}

std::optional<std::string> case3_obstruction(const LocalData& d) {
    for (const auto& p : d.poles)
        if (p.order > 2)
            return "pole of r at " + to_string(p.location) + " has order " + std::to_string(p.order);
    if (d.order_inf < 2) return "order of r at infinity is " + std::to_string(d.order_inf);
    return std::nullopt;
}

RatFunc weighted_theta(const std::vector<PoleData>& poles, const std::vector<Surd>& e, const Rat& weight,
                       const std::string& where) {
    RatFunc theta;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (!e[i].is_rational()) needs_algebraic(where, e[i].first_radicand());
        theta += RatFunc(weight * e[i].rational) * inverse_power(poles[i].location, 1);
    }
    return theta;
}

Poly polynomial_of(const RatFunc& f) {
    if (!f.is_polynomial()) throw VerificationError("expected a polynomial");
    return f.num() * (1 / f.den().lc());
}

// P_{-1} of the case-3 recursion started at P_n = -p.
Poly recursion_tail(int n, const Poly& p, const Poly& s, const Poly& s_theta, const Poly& s2r) {
    const Poly ds = s.derivative();
    Poly next;        // P_{i+1}
    Poly cur = -p;    // P_i
    for (int i = n; i >= 0; --i) {
        Poly prev = -(s * cur.derivative()) + (Rat(n - i) * ds - s_theta) * cur -
                    Rat((n - i) * (i + 1)) * s2r * next;
        next = std::move(cur);
        cur = std::move(prev);
    }
    return cur;
}

} // namespace

RatFunc riccati_residual(const RatFunc& R, const RatFunc& u) {
    return u.derivative() + u * u + RatFunc(make_rat(1, 2)) * R;
}

std::vector<RatFunc> kovacic_rational_riccati(const RatFunc& r) {
    const auto data = local_data(r);
    if (case1_obstruction(data)) return {};
    const auto pts = case1_points(data);
    std::vector<std::vector<Case1Option>> sets;
    for (const auto& p : pts) sets.push_back(p.options);

    std::vector<RatFunc> found;
    for_each_choice(sets, [&](const std::vector<std::size_t>& idx) {
        Surd d = sets.back()[idx.back()].alpha;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) d -= sets[i][idx[i]].alpha;
        if (!is_nonnegative_integer(d)) return;

        RatFunc omega;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto& opt = sets[i][idx[i]];
            if (opt.sign != 0) {
                if (pts[i].radicand != 1) needs_algebraic("rational Riccati search", pts[i].radicand);
                omega += RatFunc(Rat(opt.sign)) * pts[i].part;
            }
            if (pts[i].infinity) continue;
            if (!opt.alpha.is_rational()) needs_algebraic("rational Riccati search", opt.alpha.first_radicand());
            omega += RatFunc(opt.alpha.rational) * inverse_power(pts[i].c, 1);
        }
        const std::vector<RatFunc> op{omega.derivative() + omega * omega - r, RatFunc(2) * omega, RatFunc(1)};
        for (const auto& p : polynomial_kernel(op, static_cast<int>(d.rational.get_num().get_si()))) {
            const RatFunc u = omega + RatFunc(p.derivative(), p);
            if (u.derivative() + u * u != r) throw VerificationError("Riccati candidate failed substitution");
            found.push_back(u);
        }
    });
    sort_unique(found);
    return found;
}

RiccatiAnalysis riccati_rational(const ProjectiveStructure& p) {
    const RatFunc r = RatFunc(make_rat(-1, 2)) * p.R();
    RiccatiAnalysis out;
    auto found = kovacic_rational_riccati(r);
    const bool full = rational_solutions(lie_operator(p)).size() == 3;
    if (full) {
        if (found.empty()) throw VerificationError("rational projective image without Riccati solutions");
        out.solutions = std::move(found);
        out.count_class = RiccatiCount::Infinite;
        return out;
    }
    if (found.empty()) return out;

    // Further solutions v = u + 1/w with w' = 2uw + 1.
    const RatFunc& u = found.front();
    const LinearODE homogeneous({RatFunc(-2) * u.derivative(), RatFunc(-2) * u, RatFunc(1)});
    const auto ws = rational_solutions(homogeneous);
    RatMatrix row(1);
    for (const auto& w : ws) {
        const RatFunc c = w.derivative() - RatFunc(2) * u * w;
        if (!c.is_constant()) throw VerificationError("first integral of the linearised Riccati equation");
        row[0].push_back(c.constant_value());
    }
    std::vector<RatFunc> all{u};
    if (!ws.empty()) {
        if (const auto coeffs = solve_linear(row, {Rat(1)}, ws.size())) {
            if (nullspace(row, ws.size()).size() > 0)
                throw VerificationError("one-parameter Riccati family with a finite projective image test");
            RatFunc w;
            for (std::size_t i = 0; i < ws.size(); ++i) w += RatFunc((*coeffs)[i]) * ws[i];
            all.push_back(u + RatFunc(1) / w);
        }
    }
    sort_unique(all);
    if (all != found) throw VerificationError("Riccati refinement disagrees with the exponent search");
    for (const auto& v : all)
        if (!riccati_residual(p.R(), v).is_zero()) throw VerificationError("Riccati solution failed substitution");
    out.solutions = std::move(all);
    out.count_class = out.solutions.size() == 1 ? RiccatiCount::One : RiccatiCount::Two;
    return out;
}

bool exp_integral_is_algebraic(const RatFunc& u) {
    const auto pf = partial_fractions(u);
    if (!pf.polynomial_part.is_zero()) return false;
    return std::all_of(pf.terms.begin(), pf.terms.end(), [](const auto& t) { return t.j == 1; });
}

std::optional<DihedralCertificate> kovacic_case2(const RatFunc& r) {
    const auto data = local_data(r);
    if (case2_obstruction(data)) return std::nullopt;
    std::vector<std::vector<Surd>> sets;
    for (const auto& p : data.poles) {
        std::vector<Surd> e;
        if (p.order == 1) {
            e = {Surd(4)};
        } else if (p.order == 2) {
            const Surd root = Surd::sqrt_of(1 + 4 * coefficient(p.laurent, -2), Rat(2));
            e = {Surd(2), Surd(2) + root, Surd(2) - root};
        } else {
            e = {Surd(static_cast<long>(p.order))};
        }
        dedupe(e);
        sets.push_back(std::move(e));
    }
    std::vector<Surd> e_inf;
    if (data.order_inf > 2) {
        e_inf = {Surd(0), Surd(2), Surd(4)};
    } else if (data.order_inf == 2) {
        const Surd root = Surd::sqrt_of(1 + 4 * data.inf.at(2), Rat(2));
        e_inf = {Surd(2), Surd(2) + root, Surd(2) - root};
    } else {
        e_inf = {Surd(static_cast<long>(data.order_inf))};
    }
    dedupe(e_inf);
    sets.push_back(e_inf);

    std::optional<DihedralCertificate> cert;
    for_each_choice(sets, [&](const std::vector<std::size_t>& idx) {
        if (cert) return;
        Surd d = sets.back()[idx.back()];
        std::vector<Surd> chosen;
        for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
            chosen.push_back(sets[i][idx[i]]);
            d -= chosen.back();
        }
        d = d * make_rat(1, 2);
        if (!is_nonnegative_integer(d)) return;
        const RatFunc theta = weighted_theta(data.poles, chosen, make_rat(1, 2), "dihedral search");
        const RatFunc dt = theta.derivative();
        const std::vector<RatFunc> op{
            dt.derivative() + RatFunc(3) * theta * dt + theta.pow(3) - RatFunc(4) * r * theta -
                RatFunc(2) * r.derivative(),
            RatFunc(3) * theta * theta + RatFunc(3) * dt - RatFunc(4) * r,
            RatFunc(3) * theta,
            RatFunc(1),
        };
        const auto kernel = polynomial_kernel(op, static_cast<int>(d.rational.get_num().get_si()));
        if (kernel.empty()) return;
        const Poly& p = kernel.front();
        cert = DihedralCertificate{theta, p, theta + RatFunc(p.derivative(), p)};
    });
    if (cert && !verify_dihedral(r, *cert)) throw VerificationError("dihedral certificate failed");
    return cert;
}

bool verify_dihedral(const RatFunc& r, const DihedralCertificate& c) {
    if (c.phi != c.theta + RatFunc(c.p.derivative(), c.p)) return false;
    const RatFunc c0 = RatFunc(make_rat(1, 2)) * (c.phi.derivative() + c.phi * c.phi) - r;
    return (c0.derivative() + c.phi * (c0 - r)).is_zero();
}

std::optional<PrimitiveCertificate> kovacic_case3(const RatFunc& r, int n) {
    if (n != 4 && n != 6 && n != 12) throw std::invalid_argument("case 3 degree must be 4, 6 or 12");
    const auto data = local_data(r);
    if (case3_obstruction(data)) return std::nullopt;
    const auto exponent_set = [n](const Rat& b) {
        const Surd root = Surd::sqrt_of(1 + 4 * b);
        std::vector<Surd> e;
        for (int k = -n / 2; k <= n / 2; ++k) e.push_back(Surd(6) + root * make_rat(12 * k, n));
        dedupe(e);
        return e;
    };
    std::vector<std::vector<Surd>> sets;
    Poly s(Rat(1));
    for (const auto& p : data.poles) {
        sets.push_back(p.order == 1 ? std::vector<Surd>{Surd(12)} : exponent_set(coefficient(p.laurent, -2)));
        s *= Poly::linear(p.location);
    }
    sets.push_back(exponent_set(data.order_inf == 2 ? data.inf.at(2) : Rat(0)));
    const Poly s2r = polynomial_of(RatFunc(s * s) * r);
    const Rat weight = make_rat(n, 12);

    std::optional<PrimitiveCertificate> cert;
    for_each_choice(sets, [&](const std::vector<std::size_t>& idx) {
        if (cert) return;
        Surd d = sets.back()[idx.back()];
        std::vector<Surd> chosen;
        for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
            chosen.push_back(sets[i][idx[i]]);
            d -= chosen.back();
        }
        d = d * weight;
        if (!is_nonnegative_integer(d)) return;
        const RatFunc theta = weighted_theta(data.poles, chosen, weight, "primitive search");
        const Poly s_theta = polynomial_of(RatFunc(s) * theta);
        const long deg = d.rational.get_num().get_si();
        std::vector<RatFunc> tails;
        for (long j = 0; j <= deg; ++j)
            tails.emplace_back(recursion_tail(n, Poly::monomial(Rat(1), j), s, s_theta, s2r));
        int height = 0;
        for (const auto& t : tails) height = std::max(height, t.num().degree() + 1);
        RatMatrix m(height, std::vector<Rat>(tails.size()));
        for (std::size_t j = 0; j < tails.size(); ++j)
            for (int k = 0; k <= tails[j].num().degree(); ++k) m[k][j] = tails[j].num().coeff(k);
        const auto kernel = nullspace(std::move(m), tails.size());
        if (kernel.empty()) return;
        cert = PrimitiveCertificate{n, theta, s, Poly(kernel.front())};
    });
    if (cert && !verify_primitive(r, *cert)) throw VerificationError("primitive certificate failed");
    return cert;
}

bool verify_primitive(const RatFunc& r, const PrimitiveCertificate& c) {
    if (c.p.is_zero()) return false;
    const Poly s_theta = polynomial_of(RatFunc(c.s) * c.theta);
    const Poly s2r = polynomial_of(RatFunc(c.s * c.s) * r);
    return recursion_tail(c.n, c.p, c.s, s_theta, s2r).is_zero();
}

GaloisClass kovacic_classify(const ProjectiveStructure& p) {
    const RatFunc r = RatFunc(make_rat(-1, 2)) * p.R();
    const auto data = local_data(r);
    GaloisClass g;
    const auto ric = riccati_rational(p);
    g.riccati_solutions = ric.solutions;
    switch (ric.count_class) {
    case RiccatiCount::Infinite:
        g.tag = GaloisTag::ProjectivelyTrivial;
        g.sym2_basis = rational_solutions(lie_operator(p));
        return g;
    case RiccatiCount::Two:
        g.tag = std::all_of(ric.solutions.begin(), ric.solutions.end(), exp_integral_is_algebraic)
                    ? GaloisTag::TorusFinite
                    : GaloisTag::TorusInfinite;
        return g;
    case RiccatiCount::One:
        g.tag = GaloisTag::BorelFull;
        return g;
    case RiccatiCount::None:
        break;
    }

    if (const auto why = case1_obstruction(data))
        g.failed_conditions.push_back("case 1: " + *why);
    else
        g.failed_conditions.push_back("case 1: no exponent family yields a polynomial solution");

    if (const auto why = case2_obstruction(data)) {
        g.failed_conditions.push_back("case 2: " + *why);
    } else if (auto cert = kovacic_case2(r)) {
        g.tag = GaloisTag::Dihedral;
        g.finiteness = Finiteness::Undetermined;
        g.dihedral = std::move(cert);
        return g;
    } else {
        g.failed_conditions.push_back("case 2: no exponent family yields a polynomial solution");
    }

    if (const auto why = case3_obstruction(data)) {
        g.failed_conditions.push_back("case 3: " + *why);
    } else {
        const std::pair<int, GaloisTag> degrees[] = {
            {4, GaloisTag::Tetrahedral}, {6, GaloisTag::Octahedral}, {12, GaloisTag::Icosahedral}};
        for (const auto& [n, tag] : degrees) {
            if (auto cert = kovacic_case3(r, n)) {
                g.tag = tag;
                g.primitive = std::move(cert);
                return g;
            }
        }
        g.failed_conditions.push_back("case 3: no exponent family yields a polynomial solution for n = 4, 6, 12");
    }
    g.tag = GaloisTag::FullSL2;
    return g;
}

bool lie_irreducible(GaloisTag tag) {
    switch (tag) {
    case GaloisTag::Tetrahedral:
    case GaloisTag::Octahedral:
    case GaloisTag::Icosahedral:
    case GaloisTag::FullSL2:
        return true;
    default:
        return false;
    }
}

namespace {

const std::pair<GaloisTag, const char*> kTagNames[] = {
    {GaloisTag::ProjectivelyTrivial, "projectively_trivial"},
    {GaloisTag::TorusFinite, "torus_finite"},
    {GaloisTag::TorusInfinite, "torus_infinite"},
    {GaloisTag::BorelFull, "borel_full"},
    {GaloisTag::Dihedral, "dihedral"},
    {GaloisTag::Tetrahedral, "tetrahedral"},
    {GaloisTag::Octahedral, "octahedral"},
    {GaloisTag::Icosahedral, "icosahedral"},
    {GaloisTag::FullSL2, "full_sl2"},
};

const std::pair<Finiteness, const char*> kFinitenessNames[] = {
    {Finiteness::Finite, "finite"},
    {Finiteness::Infinite, "infinite"},
    {Finiteness::Undetermined, "undetermined"},
};

} // namespace

std::string to_string(GaloisTag tag) {
    for (const auto& [t, name] : kTagNames)
        if (t == tag) return name;
    return "unknown";
}

std::optional<GaloisTag> galois_tag_from_string(const std::string& s) {
    for (const auto& [t, name] : kTagNames)
        if (s == name) return t;
    return std::nullopt;
}

std::string to_string(Finiteness f) {
    for (const auto& [v, name] : kFinitenessNames)
        if (v == f) return name;
    return "unknown";
}

std::optional<Finiteness> finiteness_from_string(const std::string& s) {
    for (const auto& [v, name] : kFinitenessNames)
        if (s == name) return v;
    return std::nullopt;
}

std::string to_string(RiccatiCount c) {
    switch (c) {
    case RiccatiCount::None: return "none";
    case RiccatiCount::One: return "one";
    case RiccatiCount::Two: return "two";
    case RiccatiCount::Infinite: return "infinite";
    }
    return "unknown";
}

} // namespace kummer
