"""Gradings of algebras by finitely generated abelian groups.

A GradedDecomposition attaches to a StructAlgebra a degree map from group
elements to component bases (coordinate vectors).  Verification is exhaustive:
the components must sum directly to the whole algebra and every product of
homogeneous basis vectors must land in the component of the degree sum.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import linalg
from .algcore import LieAlgebra, StructAlgebra, inertia
from .scalars import QQ, Field


class GradingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class FinAbGroup:
    """Z^free_rank x Z_m1 x ... x Z_ms; elements are int tuples, torsion
    coordinates reduced mod m_i."""

    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        if any(m < 2 for m in self.torsion):
            raise GradingError("torsion orders must be >= 2")

    @property
    def ncoords(self) -> int:
        return self.free_rank + len(self.torsion)

    def identity(self):
        return (0,) * self.ncoords

    def reduce(self, g):
        g = tuple(g)
        if len(g) != self.ncoords:
            raise GradingError("element has wrong coordinate count")
        free = g[: self.free_rank]
        tor = tuple(
            c % m for c, m in zip(g[self.free_rank :], self.torsion)
        )
        return free + tor

    def add(self, g, h):
        return self.reduce(tuple(a + b for a, b in zip(g, h)))

    def neg(self, g):
        return self.reduce(tuple(-a for a in g))

    def is_identity(self, g) -> bool:
        return all(c == 0 for c in g)

    def order_divides_2(self, g) -> bool:
        free = g[: self.free_rank]
        if any(c != 0 for c in free):
            return False
        return all(
            (2 * c) % m == 0 for c, m in zip(g[self.free_rank :], self.torsion)
        )

    def product(self, other: "FinAbGroup") -> "FinAbGroup":
        return FinAbGroup(
            self.free_rank + other.free_rank, self.torsion + other.torsion
        )

    def combine_elements(self, other: "FinAbGroup", g, h):
        """Element of self.product(other): free coords first, then torsion."""
        return (
            g[: self.free_rank]
            + h[: other.free_rank]
            + g[self.free_rank :]
            + h[other.free_rank :]
        )

    def name(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        i = 0
        tor = list(self.torsion)
        while i < len(tor):
            j = i
            while j < len(tor) and tor[j] == tor[i]:
                j += 1
            count = j - i
            parts.append(f"Z{tor[i]}" + (f"^{count}" if count > 1 else ""))
            i = j
        return " x ".join(parts) if parts else "1"


# ---------------------------------------------------------------------------
# graded decompositions


@dataclass
class GradedDecomposition:
    group: FinAbGroup
    algebra: StructAlgebra
    components: dict  # group element -> list of coordinate vectors
    _solvers: dict = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        clean = {}
        for g, vecs in self.components.items():
            g = self.group.reduce(g)
            vecs = [list(v) for v in vecs if any(x != self.algebra.field.zero for x in v)]
            if vecs:
                if g in clean:
                    raise GradingError(f"duplicate degree {g}")
                clean[g] = vecs
        self.components = clean

    @property
    def support(self):
        return sorted(self.components)

    def dimension_of(self, g) -> int:
        return len(self.components.get(self.group.reduce(g), ()))

    def degree_of(self, vec):
        """Degree of a homogeneous vector, or None if not homogeneous."""
        for g, s in self._component_solvers().items():
            if s.contains(vec):
                return g
        return None

    def _component_solvers(self):
        if self._solvers is None:
            self._solvers = {
                g: linalg.SpanSolver(vecs, self.algebra.field)
                for g, vecs in self.components.items()
            }
        return self._solvers


@dataclass
class GradingReport:
    direct_sum_ok: bool
    closure_ok: bool
    violations: list

    @property
    def valid(self) -> bool:
        return self.direct_sum_ok and self.closure_ok


def verify(grading: GradedDecomposition) -> GradingReport:
    """Exhaustive check of direct sum and closure A_g A_h <= A_{g+h}."""
    alg = grading.algebra
    f = alg.field
    stacked = [v for vecs in grading.components.values() for v in vecs]
    total = len(stacked)
    direct_sum_ok = total == alg.dim and linalg.rank(stacked, f) == alg.dim
    violations = []
    solvers = grading._component_solvers()
    zero = [f.zero] * alg.dim
    for g, gv in grading.components.items():
        for h, hv in grading.components.items():
            target = grading.group.add(g, h)
            tsolver = solvers.get(target)
            for x in gv:
                for y in hv:
                    p = alg.multiply(x, y)
                    if p == zero:
                        continue
                    if tsolver is None or not tsolver.contains(p):
                        violations.append((g, h, target))
    return GradingReport(direct_sum_ok, not violations, violations)


def type_vector(grading: GradedDecomposition) -> tuple:
    """(h_1, ..., h_r): h_i = number of components of dimension i."""
    dims = [len(v) for v in grading.components.values()]
    if not dims:
        return ()
    out = [0] * max(dims)
    for d in dims:
        out[d - 1] += 1
    return tuple(out)


def type_vector_sum(grading: GradedDecomposition) -> int:
    return sum((i + 1) * h for i, h in enumerate(type_vector(grading)))


# ---------------------------------------------------------------------------
# induced grading on Der(A)


def induced_on_der(grading: GradedDecomposition, der_basis) -> GradedDecomposition:
    """Grading on Der(A) induced by a grading on A.

    Der(A)_g = {d : d(A_h) <= A_{g+h} for all h}; solved degree by degree
    inside the span of der_basis.  The pieces must exhaust Der(A); the
    returned components are coefficient vectors with respect to der_basis,
    attached to Der(A) as an abstract Lie algebra on that basis.
    """
    alg = grading.algebra
    f = alg.field
    n = alg.dim
    m = len(der_basis)
    supp = grading.support
    solvers = grading._component_solvers()
    # d(A_h) lives in sum over supp of components; candidates g = h' - h
    candidates = sorted(
        {grading.group.add(h2, grading.group.neg(h1)) for h1 in supp for h2 in supp}
    )
    # decompose every derivation image once over the whole grading
    der_sparse = [linalg.dense_to_sparse(d, f) for d in der_basis]
    stacked = []
    positions = []  # (degree, index inside component) per stacked row
    for h in supp:
        for r, v in enumerate(grading.components[h]):
            stacked.append(v)
            positions.append((h, r))
    full_solver = linalg.SpanSolver(stacked, f)
    slices = {}  # (h, vi) -> {target: [per-der {r: coeff}] }
    for h in supp:
        for vi, v in enumerate(grading.components[h]):
            vsp = {i: x for i, x in enumerate(v) if x != f.zero}
            per_target = {}
            for t, dsp in enumerate(der_sparse):
                img = linalg.sp_matvec(dsp, vsp)
                dense = [f.zero] * n
                for i, x in img.items():
                    dense[i] = x
                coeffs = full_solver.coefficients(dense)
                if coeffs is None:
                    raise GradingError("derivation image outside the algebra")
                for pos, co in enumerate(coeffs):
                    if co != f.zero:
                        tgt, r = positions[pos]
                        per_target.setdefault(tgt, {}).setdefault(t, {})[r] = co
            slices[(h, vi)] = per_target
    use_int = f.name == "Q"
    comps = {}
    total = 0
    for g in candidates:
        acc = linalg.IntKernelAccumulator(m) if use_int else None
        rows = []
        alive = True
        for (h, vi), per_target in slices.items():
            if not alive:
                break
            allowed = grading.group.add(g, h)
            for target, per_der in per_target.items():
                if target == allowed:
                    continue
                rs = {r for d in per_der.values() for r in d}
                for r in rs:
                    row = {
                        t: d[r] for t, d in per_der.items() if r in d
                    }
                    if not row:
                        continue
                    if use_int:
                        acc.add_constraint(row)
                        if acc.dimension == 0:
                            alive = False
                            break
                    else:
                        rows.append([row.get(t, f.zero) for t in range(m)])
                if not alive:
                    break
        if use_int:
            combos = acc.kernel_basis() if alive else []
        else:
            combos = linalg.kernel(rows, m, f) if rows else [
                list(r) for r in linalg.identity(m, f)
            ]
        if not combos:
            continue
        comps[g] = combos
        total += len(combos)
    if total != m:
        raise GradingError(
            f"induced derivation pieces sum to {total}, expected {m}"
        )
    der_alg = _matrix_span_algebra(der_basis, f, alg)
    return GradedDecomposition(group=grading.group, algebra=der_alg, components=comps)


_span_algebra_cache = {}


def _matrix_span_algebra(der_basis, f: Field, alg: StructAlgebra) -> StructAlgebra:
    """Der(A) as an abstract Lie algebra on the given basis (commutator)."""
    # keyed by identity; the cache keeps the basis alive so ids never recycle
    key = id(der_basis)
    cached = _span_algebra_cache.get(key)
    if cached is not None:
        return cached[1]
    n = alg.dim
    m = len(der_basis)
    flat = [sum((list(row) for row in d), []) for d in der_basis]
    expander = linalg.SparseSpanExpander(flat, f)
    sparse = [linalg.dense_to_sparse(d, f) for d in der_basis]
    sc = {}
    for i in range(m):
        for j in range(i + 1, m):
            comm = linalg.sp_commutator(sparse[i], sparse[j])
            coeffs = expander.coefficients(linalg.sp_flatten(comm, n))
            if coeffs is None:
                raise GradingError("derivation span not closed under commutator")
            row = {k: v for k, v in enumerate(coeffs) if v != f.zero}
            if row:
                sc[(i, j)] = row
                sc[(j, i)] = {k: -v for k, v in row.items()}
    out = StructAlgebra(
        field=f,
        dim=m,
        basis_labels=[f"d{i}" for i in range(m)],
        sc=sc,
    )
    _span_algebra_cache[key] = (der_basis, out)
    return out


# ---------------------------------------------------------------------------
# combinations


def combine(grading_c: GradedDecomposition, grading_j: GradedDecomposition, t) -> GradedDecomposition:
    """Mix a C-grading and a J-grading into a grading of T(C, J).

    Uniform rule: L_(g,h) = Der(C)_g [h=e]  +  Der(J)_h [g=e]  +
    (C0)_g x (J0)_h, with the induced gradings on the derivation summands.
    """
    c, j = t.comp, t.jordan
    f = QQ
    gc, gj = grading_c.group, grading_j.group
    lie = t.lie
    nj0 = len(t.j0_vectors)
    indc = (
        induced_on_der(grading_c, t.der_c_basis) if t.der_c_basis else None
    )
    indj = induced_on_der(grading_j, t.der_j_basis)
    # traceless parts of the graded components, in C0 / J0 coordinates
    j0_expand = linalg.SparseSpanExpander(t.j0_vectors, f)
    c0g = {}
    for g, vecs in grading_c.components.items():
        tv = [c.trace(v) for v in vecs]
        combos = linalg.kernel([tv], len(vecs), f)
        out = []
        for combo in combos:
            v = [f.zero] * c.dim
            for i2, co in enumerate(combo):
                if co != f.zero:
                    v = linalg.vec_add(v, linalg.vec_scale(vecs[i2], co))
            if v[c.unit_idx] != 0:
                raise GradingError("traceless C component touches the unit")
            out.append([v[b] for b in t.c0_idx])
        if out:
            c0g[g] = out
    j0h = {}
    for h, vecs in grading_j.components.items():
        tv = [j.t_j(v) for v in vecs]
        combos = linalg.kernel([tv], len(vecs), f)
        out = []
        for combo in combos:
            v = [f.zero] * j.dim
            for i2, co in enumerate(combo):
                if co != f.zero:
                    v = linalg.vec_add(v, linalg.vec_scale(vecs[i2], co))
            coeffs = j0_expand.coefficients({i2: x for i2, x in enumerate(v) if x})
            if coeffs is None:
                raise GradingError("traceless J component outside J0")
            out.append(coeffs)
        if out:
            j0h[h] = out
    ec, ej = gc.identity(), gj.identity()
    dc_off = t.layout["der_c"].start
    dj_off = t.layout["der_j"].start
    tn_off = t.layout["tensor"].start
    comps = {}

    def bucket(g, h):
        key = gc.combine_elements(gj, g, h)
        return comps.setdefault(key, [])

    if indc is not None:
        for g, vecs in indc.components.items():
            dst = bucket(g, ej)
            for coeffs in vecs:
                v = [f.zero] * lie.dim
                for i2, co in enumerate(coeffs):
                    v[dc_off + i2] = co
                dst.append(v)
    for h, vecs in indj.components.items():
        dst = bucket(ec, h)
        for coeffs in vecs:
            v = [f.zero] * lie.dim
            for i2, co in enumerate(coeffs):
                v[dj_off + i2] = co
            dst.append(v)
    for g, avecs in c0g.items():
        for h, xvecs in j0h.items():
            dst = bucket(g, h)
            for a in avecs:
                for x in xvecs:
                    v = [f.zero] * lie.dim
                    for ci2, av in enumerate(a):
                        if av != f.zero:
                            for ji2, xv in enumerate(x):
                                if xv != f.zero:
                                    v[tn_off + ci2 * nj0 + ji2] = av * xv
                    dst.append(v)
    group = gc.product(gj)
    return GradedDecomposition(group=group, algebra=lie.alg, components=comps)


def common_refinement(g1: GradedDecomposition, g2: GradedDecomposition) -> GradedDecomposition:
    """Intersection grading over the product group (compatible gradings only)."""
    if g1.algebra is not g2.algebra and g1.algebra.sc != g2.algebra.sc:
        raise GradingError("gradings live on different algebras")
    alg = g1.algebra
    f = alg.field
    group = g1.group.product(g2.group)
    comps = {}
    total = 0
    for a, va in g1.components.items():
        for b, vb in g2.components.items():
            inter = linalg.intersect_spans(va, vb, f)
            if inter:
                comps[g1.group.combine_elements(g2.group, a, b)] = inter
                total += len(inter)
    if total != alg.dim:
        raise GradingError("gradings are not compatible (refinement not direct)")
    return GradedDecomposition(group=group, algebra=alg, components=comps)


def coarsen(grading: GradedDecomposition, hom, target_group: FinAbGroup) -> GradedDecomposition:
    """Push a grading through a group homomorphism given as element map."""
    comps = {}
    for g, vecs in grading.components.items():
        t = target_group.reduce(hom(g))
        comps.setdefault(t, []).extend(list(v) for v in vecs)
    return GradedDecomposition(group=target_group, algebra=grading.algebra, components=comps)


# ---------------------------------------------------------------------------
# Killing-form tools on graded real Lie algebras


def killing_orthogonality_violations(grading: GradedDecomposition, lie: LieAlgebra):
    """Pairs (g,h) with g+h != e but K(L_g, L_h) != 0 (must be empty)."""
    k = lie.killing_matrix()
    f = lie.field
    out = []
    items = sorted(grading.components.items())
    for gi, (g, gv) in enumerate(items):
        for h, hv in items[gi:]:
            if grading.group.is_identity(grading.group.add(g, h)):
                continue
            if any(
                _bilinear(k, x, y, f) != f.zero for x in gv for y in hv
            ):
                out.append((g, h))
    return out


def _bilinear(mat, x, y, f: Field):
    acc = f.zero
    for i, xi in enumerate(x):
        if xi == f.zero:
            continue
        row = mat[i]
        for j, yj in enumerate(y):
            if yj != f.zero and row[j] != f.zero:
                acc = acc + xi * row[j] * yj
    return acc


def signature_bound(grading: GradedDecomposition, lie: LieAlgebra) -> dict:
    """|sign L - dim L_e| <= sum of dims over order-2 nonidentity degrees."""
    sig = inertia(lie.killing_matrix()).signature
    dim_e = grading.dimension_of(grading.group.identity())
    d = sum(
        len(vecs)
        for g, vecs in grading.components.items()
        if grading.group.order_divides_2(g) and not grading.group.is_identity(g)
    )
    return {
        "sign": sig,
        "dim_e": dim_e,
        "d": d,
        "holds": abs(sig - dim_e) <= d,
    }


def graded_witt_basis(grading: GradedDecomposition, lie: LieAlgebra) -> dict:
    """Homogeneous basis splitting K into hyperbolic pairs and diagonal pivots.

    Components pair off degree against opposite degree (Killing orthogonality
    guarantees everything else vanishes); degrees with 2g = e are diagonalized
    by exact congruence, keeping the rational pivots and their signs.
    """
    k = lie.killing_matrix()
    f = lie.field
    group = grading.group
    pairs = []  # (u_i, v_i)
    zvecs = []  # (z, pivot)
    done = set()
    for g in grading.support:
        if g in done:
            continue
        neg = group.neg(g)
        gv = grading.components[g]
        if neg == g:
            gram = [[_bilinear(k, x, y, f) for y in gv] for x in gv]
            diag, p = linalg.congruence_diagonalize(gram)
            if any(d == 0 for d in diag):
                raise GradingError(f"Killing form degenerate on component {g}")
            for col in range(len(gv)):
                z = [f.zero] * lie.dim
                for r in range(len(gv)):
                    if p[r][col] != f.zero:
                        z = linalg.vec_add(z, linalg.vec_scale(gv[r], p[r][col]))
                zvecs.append((z, diag[col]))
            done.add(g)
        else:
            if neg not in grading.components:
                raise GradingError(f"component {g} has no pairing partner")
            hv = grading.components[neg]
            if len(gv) != len(hv):
                raise GradingError("paired components have different dimensions")
            gram = [[_bilinear(k, x, y, f) for y in hv] for x in gv]
            ginv = linalg.mat_inverse(gram, f)
            for i in range(len(gv)):
                v = [f.zero] * lie.dim
                for r in range(len(hv)):
                    if ginv[r][i] != f.zero:
                        v = linalg.vec_add(v, linalg.vec_scale(hv[r], ginv[r][i]))
                pairs.append((gv[i], v))
            done.add(g)
            done.add(neg)
    # certificate: assemble the Gram matrix of the full basis
    basis = []
    for u, v in pairs:
        basis.extend([u, v])
    basis.extend(z for z, _ in zvecs)
    gram = [[_bilinear(k, x, y, f) for y in basis] for x in basis]
    nb = len(basis)
    expected = [[f.zero] * nb for _ in range(nb)]
    for t in range(len(pairs)):
        expected[2 * t][2 * t + 1] = f.one
        expected[2 * t + 1][2 * t] = f.one
    for t, (_, piv) in enumerate(zvecs):
        i = 2 * len(pairs) + t
        expected[i][i] = piv
    if gram != expected:
        raise GradingError("Witt basis Gram certificate failed")
    sig = sum(1 if piv > 0 else -1 for _, piv in zvecs)
    if sig != inertia(k).signature:
        raise GradingError("Witt signature disagrees with inertia")
    return {
        "hyperbolic_pairs": pairs,
        "diagonal": zvecs,
        "signature": sig,
        "gram_ok": True,
    }


# ---------------------------------------------------------------------------
# JSON


def grading_to_json(grading: GradedDecomposition) -> dict:
    f = grading.algebra.field
    comps = []
    for g in grading.support:
        comps.append(
            {
                "degree": list(g),
                "vectors": [[f.to_json(x) for x in v] for v in grading.components[g]],
            }
        )
    return {
        "group": {
            "free_rank": grading.group.free_rank,
            "torsion": list(grading.group.torsion),
        },
        "components": comps,
    }


def grading_from_json(doc: dict, algebra: StructAlgebra) -> GradedDecomposition:
    group = FinAbGroup(doc["group"]["free_rank"], tuple(doc["group"]["torsion"]))
    f = algebra.field
    comps = {}
    for c in doc["components"]:
        comps[tuple(c["degree"])] = [
            [f.from_json(x) for x in v] for v in c["vectors"]
        ]
    return GradedDecomposition(group=group, algebra=algebra, components=comps)
