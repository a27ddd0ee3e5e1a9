"""Independent derivations of the values frozen into the C++ tests.

Operators are modelled as maps on sympy expressions, so nothing here shares
code or representation with the library. Run: python3 tests/oracles/derive.py
"""

import json

import sympy as sp

z, t = sp.symbols("z t")
f = sp.Function("f")(z)


def act(terms, g):
    """terms: {(i, j): c} for c z^j D^i, applied to g."""
    return sp.expand(sum(c * z**j * sp.diff(g, z, i) for (i, j), c in terms.items()))


def act_image(terms, zmap, dmap, g):
    """Image of sum c z^j D^i under z -> zmap, D -> dmap (each a callable on expressions)."""
    out = 0
    for (i, j), c in terms.items():
        h = g
        for _ in range(i):
            h = dmap(h)
        for _ in range(j):
            h = zmap(h)
        out += c * h
    return sp.expand(out)


def fl_sym(terms, g):
    # z -> D, D -> -z ; images compose in reverse order of application
    return act_image(terms, lambda h: sp.diff(h, z), lambda h: -z * h, g)


def fl_plain(terms, g):
    # z -> -D, D -> z
    return act_image(terms, lambda h: -sp.diff(h, z), lambda h: z * h, g)


def proportional(a, b):
    """a and b are linear differential expressions in f; equal up to a nonzero rational."""
    a, b = sp.expand(a), sp.expand(b)
    derivs = [f] + [sp.diff(f, z, k) for k in range(1, 5)]
    ca = [sp.Poly(a.coeff(d), z) if a.coeff(d) != 0 else None for d in derivs]
    cb = [sp.Poly(b.coeff(d), z) if b.coeff(d) != 0 else None for d in derivs]
    ratio = None
    for x, y in zip(ca, cb):
        if (x is None) != (y is None):
            return False
        if x is None:
            continue
        r = sp.simplify(x.as_expr() / y.as_expr())
        if not r.is_Rational:
            return False
        if ratio is None:
            ratio = r
        elif ratio != r:
            return False
    return True


out = {}

# Airy sections: Y(x) = y(x^{2/3}) for y'' = z y, checked termwise.
N = 30
a = [sp.Integer(0)] * (N + 1)
a[0] = sp.Integer(1)
for n in range(3, N + 1):
    a[n] = a[n - 3] / (n * (n - 1))
out["airy_a3_a6"] = [str(a[3]), str(a[6])]
assert all(a[3 * k] == 1 / (9**k * sp.rf(sp.Rational(2, 3), k) * sp.factorial(k)) for k in range(10))
x = sp.symbols("x", positive=True)
Y = sum(a[n] * x ** (sp.Rational(2 * n, 3)) for n in range(0, N + 1, 3))
res = sp.expand(9 * x * sp.diff(Y, x, 2) + 3 * sp.diff(Y, x) - 4 * x * Y)
low = [term for term in sp.Add.make_args(res) if sp.degree(term.subs(x, t**3), t) < 2 * N - 3]
out["recalibrated_airy_kills_section"] = len(low) == 0

# FL of 9 z D^2 + 3 D - 4 z: proportional to (4 - 9 z^2) D - 15 z
E = {(2, 1): 9, (1, 0): 3, (0, 1): -4}
out["fl_sym_of_E_is_g"] = proportional(fl_sym(E, f), act({(1, 0): 4, (1, 2): -9, (0, 1): -15}, f))
out["g_exponents_at_pm_2/3"] = [
    str(sp.residue(15 * z / (4 - 9 * z**2), z, r)) for r in (sp.Rational(2, 3), sp.Rational(-2, 3))
]

# Frobenius at 0 of the E-operator: indicial 9X^2 - 6X.
X = sp.symbols("X")
out["E_indicial_roots"] = [str(r) for r in sorted(sp.roots(9 * X**2 - 6 * X, X))]

# Infinity solutions e^{-zeta z} z^{-1/6} sum c_n z^{-n} for zeta = -2/3.
zeta, alpha = sp.Rational(-2, 3), sp.Rational(1, 6)
M = 4
cs = sp.symbols("c0:%d" % M)
ansatz = sp.exp(-zeta * z) * z ** (-alpha) * sum(cs[n] * z ** (-n) for n in range(M))
s = sp.symbols("s", positive=True)
# Residual in s = 1/z after removing the exponential and the z^{-alpha} prefactor.
expr = sp.expand(sp.simplify(act(E, ansatz) / (sp.exp(-zeta * z) * z ** (-alpha))).subs(z, 1 / s))
by_power = {}
for term in sp.Add.make_args(expr):
    c_, e_ = term.as_coeff_exponent(s)
    by_power[e_] = by_power.get(e_, 0) + term / s**e_
sol = {cs[0]: 1}
for n in range(1, M):
    for e_ in sorted(by_power):
        eq = sp.expand(by_power[e_].subs(sol))
        if eq.has(cs[n]):
            sol[cs[n]] = sp.solve(eq, cs[n])[0]
            break
out["E_infinity_series_zeta_-2/3"] = [str(sol[cs[n]]) for n in range(M)]

# Whittaker k = 2, m = 1/3: symmetrized FL.
k_, m_ = 2, sp.Rational(1, 3)
W = {(2, 2): 1, (0, 2): sp.Rational(-1, 4), (0, 1): k_, (0, 0): sp.Rational(1, 4) - m_**2}
whit = fl_sym(W, f)
expected = act({(2, 2): 1, (2, 0): sp.Rational(-1, 4), (1, 1): 4, (1, 0): 2, (0, 0): sp.Rational(77, 36)}, f)
out["whittaker_fl_exact"] = sp.expand(whit - expected) == 0

# Euler: z D^2 + (1 - z) D - 1, symmetrized FL and the 3-function at 1/z.
EU = {(2, 1): 1, (1, 0): 1, (1, 1): -1, (0, 0): -1}
out["euler_fl_proportional"] = proportional(fl_sym(EU, f), act({(1, 2): 1, (1, 1): 1, (0, 1): 1}, f))
y = sum((-1) ** n * sp.factorial(n) * z ** (-n - 1) for n in range(12))
rem = sp.expand(act(EU, y))
out["euler_residual_lowest_power"] = str(min(term.as_coeff_exponent(z)[1] for term in sp.Add.make_args(rem)))

# Intertwining example: rederived G-operator, operator identity, solution.
phi = {(1, 2): -2, (1, 1): 3, (1, 0): -1, (0, 1): -2}  # (2z-1)(1-z)D - 2z
g = (2 * z - 1) / (1 - z) ** 2
out["g_operator_kills_f"] = sp.simplify(act(phi, g)) == 0
PHI = {(2, 1): 1, (1, 0): 1, (1, 1): -3, (0, 1): 2}
out["Phi_kills_(z-1)e^z"] = sp.simplify(act(PHI, (z - 1) * sp.exp(z))) == 0
lhs = sp.expand((z - 1) * act(PHI, f))
theta = lambda h: act({(1, 1): 1, (1, 0): -1, (0, 1): -1}, h)  # (z-1)D - z
rhs = sp.expand(act({(1, 1): 1, (0, 1): -2, (0, 0): 1}, theta(f)))
out["(z-1)Phi=(zD-2z+1)Theta"] = sp.expand(lhs - rhs) == 0
psi = {(1, 2): -1, (1, 1): 3, (1, 0): -2, (0, 0): 3, (0, 1): -1}  # -(z-1)(z-2)D + 3 - z
out["fl_sym_psi_proportional_Phi"] = proportional(fl_sym(psi, f), act(PHI, f))
out["psi_kills_F+"] = sp.simplify(act(psi, (2 - z) / (z - 1) ** 2)) == 0

# Airy FL unsymmetrized: D + z^2.
out["airy_fl_plain"] = proportional(fl_plain({(2, 0): 1, (0, 1): -1}, f), act({(1, 0): 1, (0, 2): 1}, f))

# Laplace of monomial-log terms by direct integration.
lap = sp.simplify(sp.integrate(sp.exp(-z * t) * sp.log(t), (t, 0, sp.oo), conds="none"))
out["laplace_log"] = str(sp.expand(lap))
out["laplace_z^(1/3)"] = str(sp.simplify(sp.integrate(sp.exp(-z * t) * t ** sp.Rational(1, 3), (t, 0, sp.oo), conds="none")))

# Nicole: 1/(x(x+1)) = sum a_n x^{-n-1}.
u = sp.symbols("u")  # u = 1/x, so 1/(x(x+1)) = u^2/(1+u)
ser = sp.series(u**2 / (1 + u), u, 0, 8).removeO()
out["nicole_b01"] = [str(ser.coeff(u, n + 1)) for n in range(6)]

# rho-table, alpha = 1/2, K = 2, from rho_{m,j} = rho_{m-1,j} - (j+1)/(alpha+m) rho_{m-1,j+1}.
r00, r01, r02 = sp.symbols("r00 r01 r02")
al = sp.Rational(1, 2)
row0 = [r00, r01, r02]
row1 = [row0[j] - (j + 1) / (al + 1) * (row0[j + 1] if j + 1 < 3 else 0) for j in range(3)]
out["rho_1_1_alpha_1/2"] = str(sp.expand(row1[1]))

# p-curvature of (4 - 9 z^2) D - 15 z as the 1x1 matrix A_p, A_{k+1} = A_k' + A_k A.
for p in (5, 7, 11, 13):
    A = 15 * z / (4 - 9 * z**2)
    Ak = A
    for _ in range(p - 1):
        Ak = sp.together(sp.diff(Ak, z) + Ak * A)
    num, den = sp.fraction(sp.together(Ak))
    out["pcurv_zero_%d" % p] = sp.Poly(num, z, modulus=p).is_zero
# D - 1: A = 1, so A_p = 1.
Ak = sp.Integer(1)
for _ in range(4):
    Ak = sp.diff(Ak, z) + Ak
out["pcurv_D-1_p5"] = str(Ak)

# Mellin: x Delta + 1 with x -> -zD, Delta -> z - 1.
img = sp.expand(-z * sp.diff((z - 1) * f, z) + f)
out["mellin_xDelta+1"] = str(sp.collect(img, [sp.diff(f, z), f]))

# Partie finie sum identity at samples.
def pf(al_, n):
    return sum((-1) ** m / (sp.factorial(m) * sp.factorial(n - m) * (m + al_ + 1)) for m in range(n + 1))

out["partie_finie_samples"] = all(
    pf(al_, n) == 1 / sp.rf(al_ + 1, n + 1) for al_ in (sp.Rational(1, 3), sp.Rational(-7, 2), sp.Rational(5, 4)) for n in range(8)
)

print(json.dumps(out, indent=1, sort_keys=True))
