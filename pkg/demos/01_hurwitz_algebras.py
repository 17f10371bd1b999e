"""The six real Hurwitz algebras and their derivations.

Run:  python demos/01_hurwitz_algebras.py
"""

from e6lab.algcore import derivations, inertia
from e6lab.composition import HURWITZ_NAMES, d_ab, hurwitz, octonion_z23_grading
from e6lab.gradings import type_vector, verify

print("Multiplication in the octonions (basis 1,i,j,k,l,il,jl,kl):")
o = hurwitz("O")


def show(a, b):
    va = o.alg.basis_vector(o.labels.index(a))
    vb = o.alg.basis_vector(o.labels.index(b))
    prod = o.alg.multiply(va, vb)
    terms = [
        ("-" if c < 0 else "+", o.labels[i])
        for i, c in enumerate(prod)
        if c
    ]
    pretty = " ".join(f"{s}{l}" for s, l in terms).lstrip("+")
    print(f"  {a} * {b} = {pretty}")


show("i", "j")
show("l", "i")
show("il", "jl")

print("\nNorms compose, n(xy) = n(x) n(y); norm signatures:")
for name in HURWITZ_NAMES:
    c = hurwitz(name)
    gram = [
        [c.norm_diag[i] if i == j else 0 for j in range(c.dim)]
        for i in range(c.dim)
    ]
    print(f"  {name:4s} dim {c.dim}: norm signature {inertia(gram).signature}")

print("\nDerivation algebras (the d_{a,b} span them):")
for name in ("O", "Os", "M2R", "H", "C", "RR"):
    print(f"  dim Der({name}) = {len(derivations(hurwitz(name).alg))}")

g = octonion_z23_grading()
print(f"\nThe Z2^3 grading of O: type {type_vector(g)}, valid = {verify(g).valid}")
print("every basis line is homogeneous; for example deg(kl) =", g.degree_of(
    o.alg.basis_vector(o.labels.index("kl"))))
