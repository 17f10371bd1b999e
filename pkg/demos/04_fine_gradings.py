"""Three fine gradings of the -26 form from graded ingredients.

Run:  python demos/04_fine_gradings.py
"""

from e6lab import catalog
from e6lab.algcore import inertia
from e6lab.gradings import (
    graded_witt_basis,
    killing_orthogonality_violations,
    signature_bound,
    type_vector,
    verify,
)

for name in ("gamma7", "gamma8", "gamma4"):
    g, carrier, desc = catalog.grading(name)
    sig = inertia(carrier.killing_matrix()).signature
    print(f"{name} on {desc} (signature {sig}):")
    print(f"  universal group {g.group.name()}, type {type_vector(g)}")
    print(f"  verified: {verify(g).valid}")
    print(f"  Killing orthogonality violations: "
          f"{len(killing_orthogonality_violations(g, carrier))}")
    rec = signature_bound(g, carrier)
    print(f"  |sign - dim L_e| = |{rec['sign']} - {rec['dim_e']}| <= {rec['d']}: "
          f"{rec['holds']}")
    witt = graded_witt_basis(g, carrier)
    print(f"  graded Witt basis: {len(witt['hyperbolic_pairs'])} hyperbolic pairs, "
          f"{len(witt['diagonal'])} diagonal vectors, signature {witt['signature']}")
    print()
