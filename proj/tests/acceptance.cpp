// Acceptance runner: one PASS/FAIL line per criterion with its time budget.
// Usage: acceptance [--criterion N]...

#include "cli.hpp"
#include "kummer/classifier.hpp"
#include "kummer/errors.hpp"
#include "kummer/jet3.hpp"
#include "kummer/local.hpp"
#include "kummer/parser.hpp"
#include "kummer/projective.hpp"
#include "kummer/rational_solutions.hpp"
#include "kummer/series.hpp"
#include "kummer/vector_field.hpp"
#include "support/random.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace kummer;
using kummer::testing::RandomRational;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

RatFunc C(long n, long d = 1) { return RatFunc(make_rat(n, d)); }

const JetExpr& R() {
    static const JetExpr r = JetExpr::letter(kLetterR);
    return r;
}

JetExpr lie_a() { return lie_operator_expr(kLetterA, R()); }

Outcome x3_invariant() {
    const JetExpr lhs = apply_vf(prolong(kLetterA, 3), invariant_I(R()));
    const JetExpr diff = lhs - lie_a() * JetExpr::frame(1).pow(2);
    return {diff.is_zero(), "X^(3)I - (a'''+2Ra'+R'a)*lam_e^2 = " + diff.to_string()};
}

Outcome bracket_suite() {
    const FrameTriple y = parallel_basis_Y(R(), JetExpr::constant(kBaseValue));
    const FrameVectorField x2 = prolong(kLetterA, 2);
    const FrameVectorField expected0({JetExpr(), JetExpr(), lie_a() * JetExpr::frame(1).pow(3)});
    const FrameVectorField d0 = lie_bracket(y[0], x2) - expected0;
    const FrameVectorField d1 = lie_bracket(y[1], x2);
    const FrameVectorField d2 = lie_bracket(y[2], x2);
    return {d0.is_zero() && d1.is_zero() && d2.is_zero(),
            "[Y0,X2] - (a'''+2Ra'+R'a)lam_e^3 d/dlam_ee = " + d0.to_string() + ", [Y1,X2] = " + d1.to_string() +
                ", [Y2,X2] = " + d2.to_string()};
}

Outcome change_of_basis_as_stated() {
    const FrameTriple y = parallel_basis_Y(R(), JetExpr::constant(kBaseValue));
    const FrameTriple e = sl2_basis_E(R());
    const JetExpr half(make_rat(1, 2));
    const ExprMatrix3 stated{{{JetExpr(1), JetExpr(), half * JetExpr::constant(kBaseValue)},
                              {JetExpr(), JetExpr(1), JetExpr()},
                              {JetExpr(), JetExpr(), JetExpr(2)}}};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 3; ++i) {
        FrameVectorField acc = FrameVectorField::zero(2);
        for (int j = 0; j < 3; ++j) acc = acc + stated[i][j] * e[j];
        const FrameVectorField diff = y[i] - acc;
        if (!diff.is_zero()) {
            ok = false;
            detail += "row " + std::to_string(i) + " residual " + diff.to_string() + "; ";
        }
    }
    const ExprMatrix3 solved = change_of_basis_symbolic();
    detail += "exact decomposition gives bottom row [" + solved[2][0].to_string() + ", " + solved[2][1].to_string() +
              ", " + solved[2][2].to_string() + "]";
    return {ok, detail};
}

Outcome schwarzian_cocycle() {
    const auto c = [](const char* n) { return JetExpr::constant(n); };
    const Jet3<JetExpr> f{c("p"), c("q"), c("f1"), c("f2"), c("f3")};
    const Jet3<JetExpr> g{c("q"), c("s"), c("g1"), c("g2"), c("g3")};
    const JetExpr symbolic = schwarzian(compose(g, f)) - (schwarzian(g) * f.d1 * f.d1 + schwarzian(f));
    RandomRational rng(9004);
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const DiffeoJet3 fr{rng.rational(), rng.rational(), rng.nonzero_rational(), rng.rational(), rng.rational()};
        const DiffeoJet3 gr{fr.value, rng.rational(), rng.nonzero_rational(), rng.rational(), rng.rational()};
        if (schwarzian(compose(gr, fr)) != schwarzian(gr) * fr.d1 * fr.d1 + schwarzian(fr)) ++failures;
    }
    return {symbolic.is_zero() && failures == 0,
            "symbolic residual " + symbolic.to_string() + ", " + std::to_string(100 - failures) + "/100 random jets"};
}

Outcome planted_riccati() {
    RandomRational rng(9005);
    int nonempty = 0, verified = 0, planted_found = 0, solutions = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const RatFunc u = rng.ratfunc(3, 4);
        const RatFunc big_r = C(-2) * (u.derivative() + u * u);
        const auto a = riccati_rational(ProjectiveStructure(big_r));
        if (!a.solutions.empty()) ++nonempty;
        bool all = true;
        for (const auto& v : a.solutions) {
            ++solutions;
            all = all && riccati_residual(big_r, v).is_zero();
        }
        if (all) ++verified;
        if (std::find(a.solutions.begin(), a.solutions.end(), u) != a.solutions.end()) ++planted_found;
    }
    return {nonempty == 200 && verified == 200,
            std::to_string(nonempty) + "/200 nonempty, " + std::to_string(verified) + "/200 fully verified (" +
                std::to_string(solutions) + " solutions), planted u recovered in " + std::to_string(planted_found) +
                "/200"};
}

Outcome symmetric_square() {
    RandomRational rng(9006);
    const int n = 40;
    int good = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const RatFunc big_r = rng.ratfunc(3, 4);
        Rat p;
        do p = rng.rational(4, 3);
        while (big_r.is_pole(p));
        const auto fs = series_solutions(LinearODE({C(1, 2) * big_r, C(0), C(1)}), p, n);
        const LinearODE lie = lie_operator(ProjectiveStructure(big_r));
        const auto& s = fs.solutions;
        bool ok = true;
        for (const auto& prod : {series_mul(s[0], s[0], n), series_mul(s[0], s[1], n), series_mul(s[1], s[1], n)})
            for (const auto& c : apply_series(lie, prod, p, n)) ok = ok && c == 0;
        good += ok;
    }
    return {good == 100, std::to_string(good) + "/100 operators annihilate psi1^2, psi1*psi2, psi2^2 through order " +
                             std::to_string(n - 3)};
}

Outcome canonical_classifications() {
    const RatFunc x = RatFunc::x();
    std::string detail;
    bool ok = true;
    const auto check = [&](const std::string& label, const RatFunc& big_r, const std::function<bool(const ClassificationReport&)>& want) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto rep = classify(big_r);
        const bool sound = report_violations(big_r, rep).empty();
        const bool matches = want(rep);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool fast = secs < 5.0;
        ok = ok && sound && matches && fast;
        std::ostringstream os;
        os.precision(3);
        os << label << " " << (sound && matches && fast ? "ok" : "BAD") << " (" << secs << " s)";
        detail += (detail.empty() ? "" : "; ") + os.str();
    };
    check("R=0", C(0), [](const ClassificationReport& r) {
        return r.integrable_pullback && r.rational_sym2_basis && r.rational_sym2_basis->size() == 3;
    });
    check("R=-4/x^2", C(-4) / (x * x),
          [](const ClassificationReport& r) { return r.projective_image == ProjectiveImage::Trivial; });
    check("R=-2", C(-2), [](const ClassificationReport& r) {
        const auto& u = r.galois_class.riccati_solutions;
        const bool witnesses = u.size() == 2 && std::find(u.begin(), u.end(), C(1)) != u.end() &&
                               std::find(u.begin(), u.end(), C(-1)) != u.end();
        const bool affine = r.affine_subgroupoid && r.affine_subgroupoid->r == C(-2) &&
                            r.affine_subgroupoid->r.derivative() - C(1, 2) * r.affine_subgroupoid->r * r.affine_subgroupoid->r == C(-2);
        return r.galois_class.tag == GaloisTag::TorusInfinite && witnesses && affine;
    });
    check("R=-2(1+x^2)", C(-2) * (C(1) + x * x), [&](const ClassificationReport& r) {
        return r.galois_class.tag == GaloisTag::BorelFull && r.galois_class.riccati_solutions == std::vector<RatFunc>{x} &&
               riccati_residual(C(-2) * (C(1) + x * x), x).is_zero();
    });
    check("R=-2x", C(-2) * x, [](const ClassificationReport& r) {
        return r.galois_class.tag == GaloisTag::FullSL2 && r.minimal == Verdict::Yes && r.n_minimal_all_n;
    });
    return {ok, detail};
}

// f = c * prod (x - a_i)^e_i with rational a_i and integer e_i, so that the
// singular points of M o (D - f'/f) stay rational.
RatFunc planted_solution(RandomRational& rng) {
    RatFunc f(rng.nonzero_rational());
    const auto pts = rng.distinct_points(static_cast<int>(rng.integer(0, 3)));
    for (const auto& a : pts) {
        const long e = rng.integer(-2, 2);
        const RatFunc lin(Poly::linear(a));
        for (long k = 0; k < std::labs(e); ++k) f = e > 0 ? f * lin : f / lin;
    }
    return f;
}

std::vector<Rat> factorial_scaled(const std::vector<Rat>& taylor, int order) {
    std::vector<Rat> out;
    Rat fact(1);
    for (int m = 0; m < order; ++m) {
        if (m > 0) fact *= m;
        out.push_back(taylor[m] * fact);
    }
    return out;
}

Outcome rational_solutions_oracle() {
    RandomRational rng(9008);
    const int n = 40;
    int spanned = 0, satisfied = 0, series_ok = 0, trials = 0;
    std::size_t basis_total = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const RatFunc f = planted_solution(rng);
        const LinearODE m({rng.ratfunc(1, 2), rng.ratfunc(1, 2), C(1)});
        const LinearODE inner({C(-1) * f.derivative() / f, C(1)});
        const LinearODE l = compose(m, inner);
        ++trials;
        if (!l.apply(f).is_zero()) continue;
        const auto basis = rational_solutions(l);
        basis_total += basis.size();
        if (span_coordinates(f, basis)) ++spanned;
        bool all = true;
        for (const auto& b : basis) all = all && l.apply(b).is_zero();
        satisfied += all;

        Rat p(0);
        const auto singular = [&](const Rat& q) {
            for (const auto& c : l.coefficients())
                if (c.is_pole(q)) return true;
            return false;
        };
        while (singular(p) || f.is_pole(p)) p += 1;
        bool ok = true;
        const auto fs = series_solutions(l, p, n);
        for (const auto& b : basis) {
            if (b.is_pole(p)) {
                ok = false;
                break;
            }
            const auto taylor = series_at(b, p, n);
            const auto weights = factorial_scaled(taylor, static_cast<int>(l.order()));
            for (int k = 0; k <= n && ok; ++k) {
                Rat combined;
                for (std::size_t j = 0; j < weights.size(); ++j) combined += weights[j] * fs.solutions[j][k];
                ok = combined == taylor[k];
            }
        }
        series_ok += ok;
    }
    return {spanned == trials && satisfied == trials && series_ok == trials,
            "planted solution in span " + std::to_string(spanned) + "/" + std::to_string(trials) +
                ", basis verified " + std::to_string(satisfied) + "/" + std::to_string(trials) +
                ", series spans agree to order " + std::to_string(n) + " in " + std::to_string(series_ok) + "/" +
                std::to_string(trials) + " (" + std::to_string(basis_total) + " basis elements)"};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Outcome cli_contract() {
    std::istringstream none;
    std::ostringstream sc_out, sc_err;
    const int sc = cli::run({"selfcheck"}, none, sc_out, sc_err);

    const std::string corpus = read_file(KUMMER_CORPUS);
    std::string runs[2];
    for (auto& r : runs) {
        std::istringstream in(corpus);
        std::ostringstream out, err;
        cli::run({"batch"}, in, out, err);
        r = out.str();
    }
    const bool deterministic = !runs[0].empty() && runs[0] == runs[1];

    RandomRational rng(9009);
    int round_trips = 0;
    for (int i = 0; i < 1000; ++i) {
        const RatFunc f = rng.ratfunc(3, 5);
        const std::string text = f.to_string();
        const RatFunc g = parse_ratfunc(text);
        round_trips += g == f && g.to_string() == text;
    }
    return {sc == 0 && deterministic && round_trips == 1000,
            "selfcheck exit " + std::to_string(sc) + ", batch deterministic: " + (deterministic ? "yes" : "no") + " (" +
                std::to_string(runs[0].size()) + " bytes), parse round trips " + std::to_string(round_trips) + "/1000"};
}

std::vector<Criterion> criteria() {
    return {
        {1, "x3_invariant", 1, x3_invariant},
        {2, "bracket_suite", 1, bracket_suite},
        {3, "change_of_basis", 1, change_of_basis_as_stated},
        {4, "schwarzian_cocycle", 5, schwarzian_cocycle},
        {5, "planted_riccati", 60, planted_riccati},
        {6, "symmetric_square_oracle", 120, symmetric_square},
        {7, "canonical_classifications", 25, canonical_classifications},
        {8, "rational_solutions_oracle", 120, rational_solutions_oracle},
        {9, "cli_contract", 30, cli_contract},
    };
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "criterion number (repeatable); all when omitted")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    bool all_passed = true;
    for (const auto& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.budget_seconds;
        const bool passed = o.passed && in_time;
        all_passed = all_passed && passed;
        std::ostringstream line;
        line.precision(3);
        line << std::fixed << (passed ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " [" << secs
             << " s, limit " << std::setprecision(0) << c.budget_seconds << " s" << (in_time ? "" : ", OVER BUDGET")
             << "]: " << o.detail;
        std::cout << line.str() << std::endl;
    }
    return all_passed ? 0 : 1;
}
