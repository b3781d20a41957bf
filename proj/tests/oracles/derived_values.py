"""Independent symbolic oracle for the frozen expected values in the C++ tests.

Run with `python3 tests/oracles/derived_values.py`. Every value printed here is
computed with sympy directly from the operator definitions, without touching
the C++ engine; the unit and acceptance tests hard-code the results.
"""
import sympy as sp

t, s = sp.symbols("t s", real=True)


def sd(f, k):
    """Signed-order derivative; negative orders integrate from -infinity."""
    if k >= 0:
        return sp.diff(f, t, k)
    g = f
    for _ in range(-k):
        g = sp.integrate(g.subs(t, s), (s, -sp.oo, t))
    return sp.simplify(g)


def psi(f, k, sign):
    return sp.expand(sp.diff(f, t) * sd(f, k - 1) + sign * f * sd(f, k))


E = sp.exp
f1 = E(t) + E(2 * t)

print("(e^t+e^2t)^2 =", sp.expand(f1**2))
for k in (0, 2, 3):
    print(f"psi-_{k}(e^t+e^2t) =", sp.simplify(psi(f1, k, -1)), " expected", (1 - sp.Integer(2) ** (k - 1)) * E(3 * t))
print("psi+_1(e^t+e^2t) =", sp.expand(psi(f1, 1, 1)))
print("int_-inf^t s e^s ds =", sp.simplify(sd(t * E(t), -1)))
print("psi+_-1(e^t) =", sp.simplify(psi(E(t), -1, 1)))
print("P-(e^t,e^t) =", sp.simplify((E(t) * sp.diff(E(t), t) * 2) / 2 - (2 * E(t) * sp.diff(E(t), t, 2)) / 2))
g = E(t) + E(2 * t)
pm = sp.Rational(1, 2) * (2 * g * sp.diff(g, t)) - sp.Rational(1, 2) * (2 * g * sp.diff(g, t, 2))
print("P-(f,f) - psi-_2(f) =", sp.simplify(pm - psi(g, 2, -1)))
print("eval e+e^2 =", sp.N(E(1) + E(2), 15))
print("int_0^tau cos^2 =", sp.simplify(sp.integrate(sp.cos(s) ** 2, (s, 0, t))))
print("energy e^t on [0,1] =", sp.integrate(E(2 * s), (s, 0, 1)))
print("1/2+sin(2)/4 =", sp.N(sp.Rational(1, 2) + sp.sin(2) / 4, 15))
print("taylor e^2t coeffs:", [sp.diff(E(2 * t), t, k).subs(t, 0) / sp.factorial(k) for k in range(4)])
print("taylor cos coeffs:", [sp.diff(sp.cos(t), t, k).subs(t, 0) / sp.factorial(k) for k in range(5)])
# decompose_unity k=1, f=e^{3t}
f = E(3 * t)
print("unity k=1 terms:", sp.simplify(f**-2 * sp.diff(f**3, t)), sp.simplify(f**3 * sp.diff(f**-2, t)))
# cap_B(1,+,4,e^{2t}) = 3/2 psi+_1(e^{2t})
print("capB(1,+,4,e^2t) =", sp.Rational(3, 2) * psi(E(2 * t), 1, 1))
# Taylor series error of the cosine energy at tau=1 truncated after tau^12 and tau^14
Ecos = t / 2 + sp.sin(2 * t) / 4
ser = sp.series(Ecos, t, 0, 16).removeO()
for top in (12, 14):
    part = sum(ser.coeff(t, j) for j in range(top + 1))
    print(f"cos energy partial through t^{top}: err =", sp.N(abs(part - Ecos.subs(t, 1)), 6))
# psi+_1 and derivatives for g = A cos t
A = sp.symbols("A", real=True)
gc = A * sp.cos(t)
P = sp.diff(gc, t) * gc + gc * sp.diff(gc, t)
for p in range(4):
    print(f"d^{p} psi+_1(A cos t) =", sp.simplify(sp.diff(P, t, p)))
# chain rule residual for theta-(4), k=0, e^{2t}
f = E(2 * t)
th = lambda f, k: sp.Rational(3, 2) * psi(f, k, -1)
print("theta-(4) chain residual k=0:", sp.simplify(sp.diff(th(f, 0), t) - th(f, 1) - th(sp.diff(f, t), -1)))
# simplified a_p^+, p=5, f = t e^{2t}
f = t * E(2 * t)
unf = sum(sp.binomial(4, k) * psi(sd(f, 4 - k), 2 * (k + 1) - 5, 1) for k in range(5))
fold = 2 * sum(sp.binomial(4, k) * psi(sd(f, 4 - k), 2 * (k + 1) - 5, 1) for k in range(3, 5)) + sp.binomial(4, 2) * psi(sd(f, 2), 1, 1)
print("a5 folded-unfolded (t e^2t):", sp.simplify(unf - fold))
