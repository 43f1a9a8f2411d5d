"""Independent sympy oracle for the Riccati and symmetric-square witnesses.

Checks the values frozen into tests/test_galois.cpp, tests/test_classifier.cpp
and the acceptance suite by direct substitution. Not part of the build; rerun
by hand with python3.
"""
import sympy as sp

x = sp.symbols("x")


def riccati(R, u):
    return sp.simplify(sp.diff(u, x) + u**2 + R / 2)


def sym2(R, a):
    return sp.simplify(sp.diff(a, x, 3) + 2 * R * sp.diff(a, x) + sp.diff(R, x) * a)


def independent(fs):
    w = sp.Matrix([[sp.diff(f, x, k) for f in fs] for k in range(len(fs))])
    return sp.simplify(w.det()) != 0


cases = {
    "R = 0": (sp.Integer(0), [0, 1 / x], [1, x, x**2]),
    "R = -4/x^2": (-4 / x**2, [2 / x, -1 / x], [1 / x**2, x, x**4]),
    "R = -2": (sp.Integer(-2), [1, -1], None),
    "R = -2(1+x^2)": (-2 * (1 + x**2), [x], None),
    "R = 3/(8x^2)": (sp.Rational(3, 8) / x**2, [1 / (4 * x), 3 / (4 * x)], None),
}
for name, (R, us, basis) in cases.items():
    print(name, "riccati residuals:", [riccati(R, u) for u in us])
    if basis is not None:
        print(name, "sym2 residuals:", [sym2(R, a) for a in basis], "independent:", independent(basis))

# Unique rational Riccati solution for R = -2(1+x^2): the second solution of
# psi'' = (1+x^2) psi is exp(x^2/2) * integral(exp(-x^2)), which is not
# hyperexponential over Q(x).
psi1 = sp.exp(x**2 / 2)
print("psi1 residual:", sp.simplify(sp.diff(psi1, x, 2) - (1 + x**2) * psi1))

# Affine reduction r = -2u and R = r' - r^2/2.
for R, u in [(sp.Integer(-2), sp.Integer(1)), (-2 * (1 + x**2), x), (-4 / x**2, 2 / x)]:
    r = -2 * u
    print("affine reduction", r, "->", sp.simplify(sp.diff(r, x) - r**2 / 2 - R))

# Schwarz triangle potentials used for the finite primitive classes.
for l, m, n in [(sp.Rational(1, 2), sp.Rational(1, 3), sp.Rational(1, 3)),
                (sp.Rational(1, 2), sp.Rational(1, 3), sp.Rational(1, 4)),
                (sp.Rational(1, 2), sp.Rational(1, 3), sp.Rational(1, 5))]:
    R = (1 - l**2) / 2 / x**2 + (1 - m**2) / 2 / (x - 1) ** 2 - (1 - l**2 - m**2 + n**2) / 2 / (x * (x - 1))
    print("triangle", (l, m, n), sp.factor(sp.together(R)))

# Dihedral example R = -2/x + 3/(8x^2): psi = x^(1/4) exp(+-2 sqrt(x)), so the
# Riccati solutions are algebraic of degree 2 and not rational.
R = -2 / x + sp.Rational(3, 8) / x**2
for s in (1, -1):
    psi = x ** sp.Rational(1, 4) * sp.exp(2 * s * sp.sqrt(x))
    print("dihedral psi residual:", sp.simplify(sp.diff(psi, x, 2) + R / 2 * psi))
