"""The sp8 + ker c model and the Z4 x Z2^4 grading.

Run:  python demos/05_symplectic_model.py
"""

from e6lab import e6sp8
from e6lab.algcore import inertia
from e6lab.gradings import type_vector, verify

model = e6sp8.assemble_e6()
print(f"S = sp8 + ker c: dim {model.dim} = {model.even_dim} + {model.odd_dim}")
print(f"joint eigenspace type of sp8 under the four matrices: {e6sp8.eigenspace_type()}")
print(f"even-part Killing signature: {e6sp8.model_even_signature()} (split c4)")
print(f"full signature at odd scale 1: {inertia(model.lie.killing_matrix()).signature}")
print(f"dim fix Ad(C A1 A2 A3) on sp8: {e6sp8.fix_ad_c_a123_dim()}")

data = e6sp8.conjugated_form()
print(f"\nconjugated real form: even signature {data['even_sig']},")
print(f"full {data['full_sig']} and twisted {data['twisted_sig']} "
      f"(sum {data['full_sig'] + data['twisted_sig']} = 2 * {data['even_sig']})")

g = e6sp8.gamma11()
print(f"\nZ4 x Z2^4 grading on the -26 member: type {type_vector(g)}, "
      f"valid = {verify(g).valid}")
print("group certificate:", e6sp8.dot_group_order_data())
