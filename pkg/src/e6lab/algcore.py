"""Finite-dimensional algebras by structure constants, and Lie-algebra services.

A StructAlgebra is an ordered labeled basis plus a sparse structure-constant
tensor c[i][j][k] with b_i b_j = sum_k c[i][j][k] b_k, over Q or Q(i).
Everything downstream (Jacobi checks, derivation solving, Killing forms,
inertia, twists) works on this one representation.

Heavy verifications (Jacobi, Killing assembly) run on numpy int64 after
clearing denominators whenever a worst-case bound proves overflow impossible;
otherwise they fall back to pure exact arithmetic.  Both paths are exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

import numpy as np

from . import linalg
from .scalars import QQ, FIELDS, Field, Fraction as Rational

_INT64_SAFE = 2**62


class AlgebraError(ValueError):
    pass


# ---------------------------------------------------------------------------


@dataclass
class StructAlgebra:
    field: Field
    dim: int
    basis_labels: list
    sc: dict  # (i, j) -> {k: scalar}, zero rows omitted
    _int_cache: tuple = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        for (i, j), row in self.sc.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise AlgebraError("structure constant index out of range")
            for k in row:
                if not (0 <= k < self.dim):
                    raise AlgebraError("structure constant index out of range")

    def mult_basis(self, i: int, j: int) -> dict:
        return self.sc.get((i, j), {})

    def multiply(self, x, y):
        """Bilinear extension of the structure constants to coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraError("coordinate vector has wrong length")
        z = self.field.zero
        out = [z] * self.dim
        xs = [(i, v) for i, v in enumerate(x) if v != z]
        ys = [(j, v) for j, v in enumerate(y) if v != z]
        for i, xv in xs:
            for j, yv in ys:
                row = self.sc.get((i, j))
                if not row:
                    continue
                c = xv * yv
                for k, v in row.items():
                    out[k] = out[k] + c * v
        return out

    def left_mult_matrix(self, x) -> dict:
        """Sparse matrix of y -> x*y."""
        z = self.field.zero
        out = {}
        xs = [(i, v) for i, v in enumerate(x) if v != z]
        for j in range(self.dim):
            for i, xv in xs:
                row = self.sc.get((i, j))
                if not row:
                    continue
                for k, v in row.items():
                    r = out.setdefault(k, {})
                    val = r.get(j, z) + xv * v
                    if val == z:
                        r.pop(j, None)
                    else:
                        r[j] = val
        return {k: r for k, r in out.items() if r}

    def right_mult_matrix(self, x) -> dict:
        """Sparse matrix of y -> y*x."""
        z = self.field.zero
        out = {}
        xs = [(j, v) for j, v in enumerate(x) if v != z]
        for i in range(self.dim):
            for j, xv in xs:
                row = self.sc.get((i, j))
                if not row:
                    continue
                for k, v in row.items():
                    r = out.setdefault(k, {})
                    val = r.get(i, z) + xv * v
                    if val == z:
                        r.pop(i, None)
                    else:
                        r[i] = val
        return {k: r for k, r in out.items() if r}

    def is_anticommutative(self) -> bool:
        for (i, j), row in self.sc.items():
            if i == j and row:
                return False
            other = self.sc.get((j, i), {})
            if set(row) != set(other):
                return False
            for k, v in row.items():
                if other[k] != -v:
                    return False
        return True

    def is_commutative(self) -> bool:
        for (i, j), row in self.sc.items():
            other = self.sc.get((j, i), {})
            if set(row) != set(other):
                return False
            for k, v in row.items():
                if other[k] != v:
                    return False
        return True

    def basis_vector(self, i: int):
        z = self.field.zero
        v = [z] * self.dim
        v[i] = self.field.one
        return v

    # -- integer-scaled dense tensor (rational algebras only) --

    def int_tensor(self):
        """(D, T) with T[i,j,k] = D * c[i][j][k] as int64, or None if unsafe."""
        if self._int_cache is not None:
            return self._int_cache
        if self.field is not QQ and self.field.name != "Q":
            object.__setattr__(self, "_int_cache", (None, None))
            return self._int_cache
        lcm = 1
        for row in self.sc.values():
            for v in row.values():
                d = v.denominator
                lcm = lcm * d // gcd(lcm, d)
        maxabs = 0
        entries = []
        for (i, j), row in self.sc.items():
            for k, v in row.items():
                iv = int(v * lcm)
                entries.append((i, j, k, iv))
                maxabs = max(maxabs, abs(iv))
        # overflow bound for one matrix product entry: dim * maxabs^2
        if maxabs and self.dim * maxabs * maxabs >= _INT64_SAFE:
            object.__setattr__(self, "_int_cache", (None, None))
            return self._int_cache
        t = np.zeros((self.dim, self.dim, self.dim), dtype=np.int64)
        for i, j, k, iv in entries:
            t[i, j, k] = iv
        object.__setattr__(self, "_int_cache", (lcm, t))
        return self._int_cache


def algebra_from_products(field: Field, labels, product) -> StructAlgebra:
    """Build a StructAlgebra from product(i, j) -> coordinate vector."""
    n = len(labels)
    z = field.zero
    sc = {}
    for i in range(n):
        for j in range(n):
            vec = product(i, j)
            row = {k: v for k, v in enumerate(vec) if v != z}
            if row:
                sc[(i, j)] = row
    return StructAlgebra(field=field, dim=n, basis_labels=list(labels), sc=sc)


# ---------------------------------------------------------------------------
# Jacobi


def jacobi_defect(alg: StructAlgebra):
    """All basis triples i<j<k violating Jacobi; empty list certifies it.

    Works through the equivalent statement ad([x,y]) = [ad x, ad y] checked
    for every pair, which covers every triple through the matrix columns.
    """
    if not alg.is_anticommutative():
        raise AlgebraError("jacobi_defect requires an anticommutative algebra")
    lcm, t = alg.int_tensor()
    if t is not None:
        return _jacobi_defect_int(alg, t)
    return _jacobi_defect_exact(alg)


def _jacobi_defect_int(alg, t):
    n = alg.dim
    ads = np.ascontiguousarray(t.transpose(0, 2, 1))  # ads[m] = ad(b_m)
    bad = set()
    for i in range(n):
        adi = ads[i]
        for j in range(i + 1, n):
            row = alg.sc.get((i, j))
            lhs = np.zeros((n, n), dtype=np.int64)
            if row:
                tij = t[i, j]
                for m in np.nonzero(tij)[0]:
                    lhs += int(tij[m]) * ads[m]
            rhs = adi @ ads[j] - ads[j] @ adi
            # scale: lhs carries D*D through tij*ads, rhs likewise
            if not np.array_equal(lhs, rhs):
                cols = np.nonzero((lhs - rhs).any(axis=0))[0]
                for q in cols:
                    tri = tuple(sorted((i, j, int(q))))
                    if len(set(tri)) == 3:
                        bad.add(tri)
    return sorted(bad)


def _jacobi_defect_exact(alg):
    n = alg.dim
    z = alg.field.zero
    bad = set()
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                acc = {}
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    vab = alg.sc.get((a, b))
                    if not vab:
                        continue
                    for m, coef in vab.items():
                        row = alg.sc.get((m, c))
                        if not row:
                            continue
                        for q, v in row.items():
                            val = acc.get(q, z) + coef * v
                            if val == z:
                                acc.pop(q, None)
                            else:
                                acc[q] = val
                if acc:
                    bad.add((i, j, k))
    return sorted(bad)


# ---------------------------------------------------------------------------
# Lie algebras


class LieAlgebra:
    """Anticommutative StructAlgebra whose Jacobi identity has been certified."""

    def __init__(self, alg: StructAlgebra, check_jacobi: bool = True):
        if not alg.is_anticommutative():
            raise AlgebraError("not anticommutative")
        if check_jacobi:
            defect = jacobi_defect(alg)
            if defect:
                raise AlgebraError(
                    f"Jacobi fails on {len(defect)} basis triples, first {defect[0]}"
                )
        self.alg = alg
        self._killing = None

    @property
    def field(self):
        return self.alg.field

    @property
    def dim(self):
        return self.alg.dim

    @property
    def basis_labels(self):
        return self.alg.basis_labels

    def bracket(self, x, y):
        return self.alg.multiply(x, y)

    def ad_sparse(self, i: int) -> dict:
        out = {}
        for q in range(self.alg.dim):
            row = self.alg.sc.get((i, q))
            if row:
                for p, v in row.items():
                    out.setdefault(p, {})[q] = v
        return out

    def killing_matrix(self):
        if self._killing is None:
            self._killing = killing_matrix(self)
        return self._killing


def killing_matrix(lie: LieAlgebra):
    """K[i][j] = tr(ad b_i ad b_j), exact and symmetric."""
    alg = lie.alg
    n = alg.dim
    lcm, t = alg.int_tensor()
    if t is not None:
        maxabs = int(np.abs(t).max()) if n else 0
        if maxabs == 0 or n * n * maxabs * maxabs < _INT64_SAFE:
            k_int = np.einsum("imq,jqm->ij", t, t)
            d2 = Fraction(1, lcm * lcm)
            return [
                [Fraction(int(k_int[i, j])) * d2 for j in range(n)] for i in range(n)
            ]
    # exact fallback: index nonzeros by (m, q)
    z = alg.field.zero
    by_mq = {}
    for (i, m), row in alg.sc.items():
        for q, v in row.items():
            by_mq.setdefault((m, q), []).append((i, v))
    kmat = [[z] * n for _ in range(n)]
    for (m, q), left in by_mq.items():
        right = by_mq.get((q, m))
        if not right:
            continue
        for i, vi in left:
            for j, vj in right:
                if j < i:
                    continue
                kmat[i][j] = kmat[i][j] + vi * vj
    for i in range(n):
        for j in range(i):
            kmat[i][j] = kmat[j][i]
    return kmat


# ---------------------------------------------------------------------------
# inertia / signature


@dataclass(frozen=True)
class InertiaResult:
    n_plus: int
    n_minus: int
    n_zero: int

    @property
    def signature(self) -> int:
        return self.n_plus - self.n_minus

    @property
    def dim(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero


def inertia(matrix) -> InertiaResult:
    """Exact Sylvester inertia of a symmetric rational matrix."""
    np_, nm, nz = linalg.congruence_inertia(matrix)
    return InertiaResult(np_, nm, nz)


def signature_from_fix(dim_s: int, dim_fix: int) -> int:
    """Killing signature of a real form from the fixed dimension of its
    commuting order-2 automorphism: dim S - 2 dim fix."""
    if not (0 <= dim_fix <= dim_s):
        raise ValueError("dim_fix out of range")
    return dim_s - 2 * dim_fix


def fixed_subspace(matrix, field: Field = QQ):
    """(basis, dim) of ker(M - id), basis in reduced echelon form."""
    n = len(matrix)
    shifted = [list(row) for row in matrix]
    for i in range(n):
        shifted[i][i] = shifted[i][i] - field.one
    basis = linalg.kernel(shifted, n, field)
    return basis, len(basis)


# ---------------------------------------------------------------------------
# Z2 twist


def twist(lie: LieAlgebra, even_idx, t: Rational) -> LieAlgebra:
    """Scale odd x odd brackets by t; the index split must be a Z2-grading."""
    alg = lie.alg
    even = frozenset(even_idx)
    parity = [0 if i in even else 1 for i in range(alg.dim)]
    for (i, j), row in alg.sc.items():
        want = parity[i] ^ parity[j]
        for k in row:
            if parity[k] != want:
                raise AlgebraError(
                    f"index split is not a Z2-grading: [{i},{j}] hits {k}"
                )
    t = Fraction(t)
    sc = {}
    for (i, j), row in alg.sc.items():
        if parity[i] == 1 and parity[j] == 1:
            newrow = {k: v * t for k, v in row.items() if v * t != 0}
            if newrow:
                sc[(i, j)] = newrow
        else:
            sc[(i, j)] = dict(row)
    twisted = StructAlgebra(
        field=alg.field, dim=alg.dim, basis_labels=list(alg.basis_labels), sc=sc
    )
    return LieAlgebra(twisted, check_jacobi=False)


# ---------------------------------------------------------------------------
# derivations


def derivations(alg: StructAlgebra):
    """Basis of Der(A): all d with d(xy) = d(x)y + x d(y).

    Returns dim x dim matrices (column action), as the reduced-echelon basis
    of the Leibniz kernel in row-major unknowns d[p][q]; deterministic.
    """
    if alg.field.name != "Q":
        raise AlgebraError("derivations implemented over Q only")
    n = alg.dim
    acc = linalg.IntKernelAccumulator(n * n)
    commutative = alg.is_commutative()
    anticomm = alg.is_anticommutative()
    # c[p][j][k] indexed with j fixed: second_tables[j][p] = sc[(p, j)]
    first = [[alg.sc.get((i, q), None) for q in range(n)] for i in range(n)]
    for i in range(n):
        jstart = i if commutative else (i + 1 if anticomm else 0)
        for j in range(jstart, n):
            if anticomm and i == j:
                continue
            prod = alg.sc.get((i, j), {})
            rows = [dict() for _ in range(n)]
            for m, v in prod.items():
                for k in range(n):
                    rows[k][k * n + m] = rows[k].get(k * n + m, 0) + v
            for p in range(n):
                row_pj = first[p][j]
                if row_pj:
                    for k, v in row_pj.items():
                        rows[k][p * n + i] = rows[k].get(p * n + i, 0) - v
            for q in range(n):
                row_iq = first[i][q]
                if row_iq:
                    for k, v in row_iq.items():
                        rows[k][q * n + j] = rows[k].get(q * n + j, 0) - v
            for r in rows:
                if r:
                    acc.add_constraint(r)
    basis = acc.kernel_basis()
    out = []
    for vec in basis:
        out.append([vec[p * n : (p + 1) * n] for p in range(n)])
    return out


def leibniz_defect(alg: StructAlgebra, d) -> bool:
    """True iff the matrix d fails d(xy) = d(x)y + x d(y) on some basis pair."""
    f = alg.field
    n = alg.dim
    for i in range(n):
        bi = alg.basis_vector(i)
        dbi = linalg.mat_vec(d, bi, f)
        for j in range(n):
            bj = alg.basis_vector(j)
            lhs = linalg.mat_vec(d, alg.multiply(bi, bj), f)
            rhs = linalg.vec_add(alg.multiply(dbi, bj), alg.multiply(bi, linalg.mat_vec(d, bj, f)))
            if lhs != rhs:
                return True
    return False


# ---------------------------------------------------------------------------
# algebra homomorphism checks


def is_automorphism(alg: StructAlgebra, m) -> bool:
    """Exact check of M(xy) = M(x)M(y) on all basis pairs."""
    f = alg.field
    n = alg.dim
    cols = [[m[p][q] for p in range(n)] for q in range(n)]
    for i in range(n):
        for j in range(n):
            prod = alg.sc.get((i, j), {})
            lhs = [f.zero] * n
            for k, v in prod.items():
                col = cols[k]
                for p in range(n):
                    if col[p] != f.zero:
                        lhs[p] = lhs[p] + v * col[p]
            rhs = alg.multiply(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def is_diagonal_automorphism(alg: StructAlgebra, diag) -> bool:
    """Fast path for maps b_i -> diag[i] b_i."""
    for (i, j), row in alg.sc.items():
        lam = diag[i] * diag[j]
        for k in row:
            if diag[k] != lam:
                return False
    return True


def is_monomial_automorphism(alg: StructAlgebra, perm, coef) -> bool:
    """Fast path for maps b_i -> coef[i] * b_perm[i]."""
    f = alg.field
    z = f.zero
    n = alg.dim
    table = {}
    for (i, j), row in alg.sc.items():
        table[(i, j)] = row
    for i in range(n):
        for j in range(n):
            row = table.get((i, j), {})
            lhs = {}
            c = coef[i] * coef[j]
            target = table.get((perm[i], perm[j]), {})
            for k, v in row.items():
                lhs[perm[k]] = coef[k] * v * f.one
            rhs = {k: c * v for k, v in target.items()}
            rhs = {k: v for k, v in rhs.items() if v != z}
            lhs = {k: v for k, v in lhs.items() if v != z}
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# JSON persistence


def algebra_to_json(alg: StructAlgebra, provenance=None) -> dict:
    f = alg.field
    entries = []
    for (i, j) in sorted(alg.sc):
        row = alg.sc[(i, j)]
        for k in sorted(row):
            entries.append([i, j, k, f.to_json(row[k])])
    doc = {
        "field": f.name,
        "dim": alg.dim,
        "basis": list(alg.basis_labels),
        "sc": entries,
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def algebra_from_json(doc: dict) -> StructAlgebra:
    f = FIELDS[doc["field"]]
    sc = {}
    for i, j, k, val in doc["sc"]:
        sc.setdefault((i, j), {})[k] = f.from_json(val)
    return StructAlgebra(
        field=f, dim=doc["dim"], basis_labels=list(doc["basis"]), sc=sc
    )
