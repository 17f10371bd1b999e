"""The Tits construction and all real forms of e6 at a glance.

Run:  python demos/03_magic_square_signatures.py
"""

from e6lab.algcore import inertia, jacobi_defect
from e6lab.tits import (
    jacobson_table,
    proportionality_constants,
    sp31_decomposition,
    tits_model,
    twist_signature_identity,
)

t = tits_model("O", "m3r")
print(f"T(O, Mat3(R)+): dim {t.dim} = 14 + 7*8 + 8")
print(f"Jacobi violations: {len(jacobi_defect(t.lie.alg))}")
print(f"Killing signature: {inertia(t.lie.killing_matrix()).signature}   (the -26 real form)")

print("\nKilling signatures of T(C, J), C 2-dimensional (all real forms of e6):")
for (c, j), sig in sorted(jacobson_table().items()):
    print(f"  T({c:2s}, {j:12s}) -> {sig}")

print("\nKilling proportionality constants on T(O, Mat3(R)+):")
pc = proportionality_constants()
for k, v in sorted(pc.items()):
    print(f"  {k} = {v}")
print("(the tensor constant of the printed formula is exactly -144;")
print(" the published -60 does not survive exact recomputation)")

dec = sp31_decomposition()
print(f"\nThe quaternionic symplectic subalgebra: even dim {dec['even_dim']},"
      f" theta&nu fixed dim {dec['fix_theta_and_nu_dim']},"
      f" signature {dec['even_signature']}")
tw = twist_signature_identity()
print(f"twist identity: {tw['sign']} + {tw['sign_twisted']} = 2 * {tw['sign_even']}"
      f"  -> {tw['identity_holds']}")
