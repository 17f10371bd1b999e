"""The split form of e6 on a Chevalley basis, and its order-2 torus data.

Roots are integer coordinate vectors over the simple roots (Bourbaki E6
numbering: the branch node is alpha_2, attached to alpha_4).  Structure
constants come from a lattice 2-cocycle; the global [e, e_-] sign is fixed by
running the Jacobi certificate at build time.  The delivered basis is then
rebuilt through iterated bracket chains (height-lexicographic), one chain per
positive root, which keeps every partial sum a root.

omega is the involution e_j -> -f_j, f_j -> -e_j (it inverts the Cartan);
together with the 64 order-2 torus elements it produces the Z2^7 grading and
the classification of the real forms inheriting it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from . import linalg
from .algcore import (
    AlgebraError,
    LieAlgebra,
    StructAlgebra,
    fixed_subspace,
    inertia,
    is_diagonal_automorphism,
    is_monomial_automorphism,
    jacobi_defect,
    signature_from_fix,
)
from .gradings import FinAbGroup, GradedDecomposition
from .scalars import QQ

F = Fraction

# Bourbaki E6: chain 1-3-4-5-6, branch 2 attached to 4
_E6_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4))


def cartan_matrix():
    a = [[2 if i == j else 0 for j in range(6)] for i in range(6)]
    for i, j in _E6_EDGES:
        a[i - 1][j - 1] = -1
        a[j - 1][i - 1] = -1
    return a


@dataclass
class RootSystem:
    cartan: list
    positive: list  # integer coordinate tuples, sorted by (height, lex)
    index: dict  # root tuple -> position in positive

    @property
    def rank(self):
        return 6

    def pairing(self, alpha, beta) -> int:
        """(alpha, beta) with all roots of squared length 2."""
        return sum(
            a * self.cartan[i][j] * b
            for i, a in enumerate(alpha)
            for j, b in enumerate(beta)
        )

    def is_root(self, alpha) -> bool:
        return alpha in self.index or tuple(-c for c in alpha) in self.index

    def height(self, alpha) -> int:
        return sum(alpha)


@lru_cache(maxsize=None)
def e6_roots() -> RootSystem:
    """All 72 roots generated from the simple ones by root strings."""
    cartan = cartan_matrix()
    simple = [tuple(1 if j == i else 0 for j in range(6)) for i in range(6)]

    def pair(alpha, beta):
        return sum(
            a * cartan[i][j] * b
            for i, a in enumerate(alpha)
            for j, b in enumerate(beta)
        )

    positive = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for i, alpha in enumerate(simple):
                if pair(beta, alpha) == -1:
                    new = tuple(b + a for b, a in zip(beta, alpha))
                    if new not in positive:
                        positive.add(new)
                        nxt.append(new)
        frontier = nxt
    ordered = sorted(positive, key=lambda r: (sum(r), r))
    if len(ordered) != 36:
        raise AlgebraError(f"expected 36 positive roots, got {len(ordered)}")
    return RootSystem(
        cartan=cartan,
        positive=ordered,
        index={r: i for i, r in enumerate(ordered)},
    )


def chain_for(root_system: RootSystem, alpha) -> list:
    """Simple-root indices j1..jm with every partial sum a root.

    Chains are chosen height-lexicographically: peel the smallest simple
    index whose removal leaves a positive root, then recurse.
    """
    ht = sum(alpha)
    if ht == 1:
        return [alpha.index(1)]
    for j in range(6):
        if alpha[j] == 0:
            continue
        prev = tuple(c - (1 if i == j else 0) for i, c in enumerate(alpha))
        if all(c >= 0 for c in prev) and prev in root_system.index:
            return chain_for(root_system, prev) + [j]
    raise AlgebraError(f"no chain found for {alpha}")


# ---------------------------------------------------------------------------
# structure constants via the lattice cocycle, then the chain basis


def _epsilon_form():
    """Bilinear Z-form with eps(x, y) = (-1)^{x B y}, asymmetric half of the
    Cartan pairing plus the diagonal."""
    cartan = cartan_matrix()
    b = [[0] * 6 for _ in range(6)]
    for i in range(6):
        b[i][i] = 1
        for j in range(6):
            if i > j:
                b[i][j] = cartan[i][j]
    return b


def _build_cocycle_algebra(ef_sign: int) -> StructAlgebra:
    rs = e6_roots()
    cartan = rs.cartan
    bform = _epsilon_form()
    roots = [r for r in rs.positive] + [tuple(-c for c in r) for r in rs.positive]
    ridx = {r: i for i, r in enumerate(roots)}
    nroots = len(roots)
    dim = 6 + nroots

    def eps(x, y) -> int:
        s = sum(
            xi * bform[i][j] * yj
            for i, xi in enumerate(x)
            if xi
            for j, yj in enumerate(y)
            if yj
        )
        return -1 if s % 2 else 1

    sc = {}

    def put(i, k, row):
        row = {q: v for q, v in row.items() if v}
        if row:
            sc[(i, k)] = row
            sc[(k, i)] = {q: -v for q, v in row.items()}

    for hj in range(6):
        for r, root in enumerate(roots):
            val = sum(cartan[hj][i] * c for i, c in enumerate(root))
            if val:
                put(hj, 6 + r, {6 + r: F(val)})
    for r1 in range(nroots):
        a = roots[r1]
        for r2 in range(r1 + 1, nroots):
            b = roots[r2]
            s = tuple(x + y for x, y in zip(a, b))
            if all(c == 0 for c in s):
                # [x_a, x_-a] = ef_sign * eps(a,-a) * h_a
                coeff = F(ef_sign * eps(a, tuple(-c for c in a)))
                put(6 + r1, 6 + r2, {i: coeff * c for i, c in enumerate(a)})
            elif s in ridx:
                put(6 + r1, 6 + r2, {6 + ridx[s]: F(eps(a, b))})
    labels = (
        [f"h{j + 1}" for j in range(6)]
        + ["e" + "".join(map(str, r)) for r in rs.positive]
        + ["f" + "".join(map(str, r)) for r in rs.positive]
    )
    return StructAlgebra(field=QQ, dim=dim, basis_labels=labels, sc=sc)


@dataclass
class ChevalleyBasis:
    lie: LieAlgebra
    roots: RootSystem
    chains: list  # chain per positive root

    @property
    def dim(self):
        return 78

    def h_index(self, j: int) -> int:
        return j

    def e_index(self, r: int) -> int:
        return 6 + r

    def f_index(self, r: int) -> int:
        return 6 + 36 + r


@lru_cache(maxsize=None)
def e6_chevalley() -> ChevalleyBasis:
    """The split form on the iterated-bracket chain basis, Jacobi certified."""
    rs = e6_roots()
    base = None
    chosen = None
    for ef_sign in (-1, 1):
        cand = _build_cocycle_algebra(ef_sign)
        if not jacobi_defect(cand):
            base = cand
            chosen = ef_sign
            break
    if base is None:
        raise AlgebraError("no sign convention satisfies Jacobi")
    # [x_a, x_-a] = -ef_sign h_a (eps(a,-a) = -1), so seed f_j with the
    # compensating sign to get [e_j, f_j] = +h_j
    f_seed = -chosen
    # rebuild e_alpha, f_alpha through the chains; each is +-(cocycle vector)
    chains = [chain_for(rs, alpha) for alpha in rs.positive]
    n = base.dim
    basis_change = []  # new basis vectors in old coordinates

    def bracket(x, y):
        return base.multiply(x, y)

    def simple_pos(j: int) -> int:
        alpha = tuple(1 if i == j else 0 for i in range(6))
        return rs.index[alpha]

    def f_gen(j: int):
        v = base.basis_vector(6 + 36 + simple_pos(j))
        return v if f_seed == 1 else [-x for x in v]

    evecs = []
    fvecs = []
    for chain in chains:
        e = base.basis_vector(6 + simple_pos(chain[0]))
        f = f_gen(chain[0])
        for j in chain[1:]:
            e = bracket(base.basis_vector(6 + simple_pos(j)), e)
            f = bracket(f_gen(j), f)
        if all(v == 0 for v in e) or all(v == 0 for v in f):
            raise AlgebraError("chain bracket collapsed")
        evecs.append(e)
        fvecs.append(f)
    for j in range(6):
        basis_change.append(base.basis_vector(j))
    basis_change.extend(evecs)
    basis_change.extend(fvecs)
    solver = linalg.SpanSolver(basis_change, QQ)
    sc = {}
    for i in range(n):
        for j2 in range(n):
            if i == j2:
                continue
            prod = base.multiply(basis_change[i], basis_change[j2])
            coeffs = solver.coefficients(prod)
            row = {k: v for k, v in enumerate(coeffs) if v}
            if row:
                sc[(i, j2)] = row
    labels = (
        [f"h{j + 1}" for j in range(6)]
        + ["e" + "".join(map(str, r)) for r in rs.positive]
        + ["f" + "".join(map(str, r)) for r in rs.positive]
    )
    alg = StructAlgebra(field=QQ, dim=n, basis_labels=labels, sc=sc)
    for (i, j2), row in alg.sc.items():
        for k, v in row.items():
            if v.denominator != 1:
                raise AlgebraError("chain basis has non-integer constants")
    lie = LieAlgebra(alg)
    return ChevalleyBasis(lie=lie, roots=rs, chains=chains)


# ---------------------------------------------------------------------------
# omega and the order-2 torus


def omega(cb: ChevalleyBasis = None):
    """The automorphism with e_j -> -f_j, f_j -> -e_j; inverts the Cartan.

    Propagating through the chains gives e_a -> (-1)^height f_a."""
    if cb is None:
        cb = e6_chevalley()
    n = cb.lie.dim
    m = [[F(0)] * n for _ in range(n)]
    perm = list(range(n))
    coef = [F(0)] * n
    for j in range(6):
        m[j][j] = F(-1)
        perm[j] = j
        coef[j] = F(-1)
    for r, alpha in enumerate(cb.roots.positive):
        sign = F(-1) ** sum(alpha)
        ei, fi = cb.e_index(r), cb.f_index(r)
        m[fi][ei] = sign
        m[ei][fi] = sign
        perm[ei], perm[fi] = fi, ei
        coef[ei] = sign
        coef[fi] = sign
    if not is_monomial_automorphism(cb.lie.alg, perm, coef):
        raise AlgebraError("omega is not an automorphism")
    return m


def torus_element(cb: ChevalleyBasis, signs):
    """Diagonal automorphism: identity on h, s^alpha on the root vectors."""
    if len(signs) != 6 or any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be a +-1 vector of length 6")
    n = cb.lie.dim
    diag = [F(1)] * n
    for r, alpha in enumerate(cb.roots.positive):
        val = 1
        for i, c in enumerate(alpha):
            if c % 2 and signs[i] == -1:
                val = -val
        diag[cb.e_index(r)] = F(val)
        diag[cb.f_index(r)] = F(val)
    if not is_diagonal_automorphism(cb.lie.alg, diag):
        raise AlgebraError("torus element is not an automorphism")
    m = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = diag[i]
    return m


def fix_dim_t(cb: ChevalleyBasis, signs) -> int:
    """dim fix(t): Cartan plus both root vectors of every root with
    s^alpha = 1 (an even number of odd coordinates carrying -1)."""
    count = 6
    for alpha in cb.roots.positive:
        flips = sum(1 for c, s in zip(alpha, signs) if c % 2 and s == -1)
        if flips % 2 == 0:
            count += 2
    return count


def fix_dim_omega_t(cb: ChevalleyBasis, signs) -> int:
    """dim fix(omega t), computed honestly from the matrix kernel."""
    om = omega(cb)
    t = torus_element(cb, signs)
    mat = linalg.mat_mul(om, t, QQ)
    _, dim = fixed_subspace(mat, QQ)
    return dim


# ---------------------------------------------------------------------------
# the Z2^7 grading


def gamma13(cb: ChevalleyBasis = None) -> GradedDecomposition:
    """Simultaneous eigenspaces of omega and the six sign involutions."""
    if cb is None:
        cb = e6_chevalley()
    group = FinAbGroup(0, (2,) * 7)
    comps = {}
    hvecs = [cb.lie.alg.basis_vector(j) for j in range(6)]
    comps[(1, 0, 0, 0, 0, 0, 0)] = hvecs
    for r, alpha in enumerate(cb.roots.positive):
        bits = tuple(c % 2 for c in alpha)
        sign = (-1) ** sum(alpha)
        e = cb.lie.alg.basis_vector(cb.e_index(r))
        f = cb.lie.alg.basis_vector(cb.f_index(r))
        plus = linalg.vec_add(e, linalg.vec_scale(f, F(sign)))
        minus = linalg.vec_sub(e, linalg.vec_scale(f, F(sign)))
        # omega(plus) = +plus, omega(minus) = -minus
        comps.setdefault((0,) + bits, []).append(plus)
        comps.setdefault((1,) + bits, []).append(minus)
    return GradedDecomposition(group=group, algebra=cb.lie.alg, components=comps)


# ---------------------------------------------------------------------------
# which real forms inherit gamma13


def inheriting_signatures(cb: ChevalleyBasis = None) -> dict:
    """Signatures of the 128 real forms fixed by sigma0 q, q in {t, omega t}.

    q = omega t maps to the inner class of t (signature from dim fix(t));
    q = t maps to the outer class of omega t, whose fixed dimension is
    always 36, hence the split signature 6.
    """
    if cb is None:
        cb = e6_chevalley()
    sigs = []
    rows = []
    attained_fix_t = set()
    for signs in iproduct((1, -1), repeat=6):
        dft = fix_dim_t(cb, signs)
        dfot = fix_dim_omega_t(cb, signs)
        if dfot != 36:
            raise AlgebraError("dim fix(omega t) must be 36")
        sig_omega_t_form = signature_from_fix(78, dft)  # Phi([s0 w t]) = [t]
        sig_t_form = signature_from_fix(78, dfot)  # Phi([s0 t]) = [w t]
        sigs.append(sig_omega_t_form)
        sigs.append(sig_t_form)
        if any(s == -1 for s in signs):
            attained_fix_t.add(dft)
        rows.append(
            {
                "signs": signs,
                "dim_fix_t": dft,
                "dim_fix_omega_t": dfot,
                "signature_via_omega_t": sig_omega_t_form,
                "signature_via_t": sig_t_form,
            }
        )
    return {
        "signatures": sorted(set(sigs)),
        "multiset": sigs,
        "fix_t_values": sorted(attained_fix_t),
        "rows": rows,
        "contains_minus_26": -26 in sigs,
    }


def split_signature(cb: ChevalleyBasis = None) -> int:
    if cb is None:
        cb = e6_chevalley()
    return inertia(cb.lie.killing_matrix()).signature
