"""Jordan algebras: H3(C, gamma) over a Hurwitz algebra and Mat3(R)+.

H3(C, gamma) is the gamma-hermitian 3x3 matrices over C (x* = gamma conj(x)^t
gamma) under the symmetrized product; its basis is E1, E2, E3 and the
off-diagonal embeddings iota_t(b) for b running over the basis of C.  The
normalized trace t_J = tr/3 is the unique associative linear form with
t_J(I) = 1, and J = F I + J0 with J0 = ker t_J.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algcore import StructAlgebra, algebra_from_products
from .composition import CompositionAlgebra, hurwitz
from .gradings import FinAbGroup, GradedDecomposition, GradingError
from .scalars import QQ

F = Fraction


@dataclass
class JordanAlgebra:
    alg: StructAlgebra
    unit: list
    t_row: list
    kind: str  # "h3" or "m3r"
    gamma: tuple = None
    comp: CompositionAlgebra = None
    comp_name: str = None
    e_idx: tuple = ()
    iota_base: tuple = ()  # iota_base[t] = first index of the iota_t block

    @property
    def dim(self):
        return self.alg.dim

    def t_j(self, x):
        return sum(a * b for a, b in zip(self.t_row, x))

    def e_vec(self, i: int):
        return self.alg.basis_vector(self.e_idx[i])

    def iota(self, t: int, cvec):
        """Coordinates of iota_t(a) for a C-coordinate vector a."""
        out = [F(0)] * self.dim
        for ci, v in enumerate(cvec):
            out[self.iota_base[t] + ci] = v
        return out

    def iota_part(self, t: int, x):
        nc = self.comp.dim
        return x[self.iota_base[t] : self.iota_base[t] + nc]

    def mult(self, x, y):
        return self.alg.multiply(x, y)

    def r_op(self, x):
        """Dense matrix of the multiplication operator y -> y . x."""
        return linalg.sparse_to_dense(
            self.alg.right_mult_matrix(x), self.dim, self.dim, QQ
        )


# ---------------------------------------------------------------------------
# H3(C, gamma)


def _h3_matrix_mult(c: CompositionAlgebra, x, y):
    """Product in Mat3(C) with entries as C-coordinate vectors."""
    nc = c.dim
    zero = [F(0)] * nc
    out = [[list(zero) for _ in range(3)] for _ in range(3)]
    for i in range(3):
        for j in range(3):
            acc = list(zero)
            for k in range(3):
                xv = x[i][k]
                yv = y[k][j]
                if any(xv) and any(yv):
                    acc = linalg.vec_add(acc, c.alg.multiply(xv, yv))
            out[i][j] = acc
    return out


def _h3_basis_matrices(c: CompositionAlgebra, gamma):
    """Matrices of E1,E2,E3 and iota_t(b_k); iota_t(a) has a at (t+1, t+2)
    and gamma_{t+1} gamma_{t+2} conj(a) at (t+2, t+1), indices mod 3."""
    nc = c.dim
    zero = [F(0)] * nc
    unit = c.unit()
    mats = []
    labels = []
    for i in range(3):
        m = [[list(zero) for _ in range(3)] for _ in range(3)]
        m[i][i] = list(unit)
        mats.append(m)
        labels.append(f"E{i + 1}")
    for t in range(3):
        r, s = (t + 1) % 3, (t + 2) % 3
        sign = gamma[r] * gamma[s]
        for ci in range(nc):
            a = c.alg.basis_vector(ci)
            m = [[list(zero) for _ in range(3)] for _ in range(3)]
            m[r][s] = list(a)
            m[s][r] = [sign * v for v in c.conj(a)]
            mats.append(m)
            labels.append(f"i{t + 1}({c.labels[ci]})")
    return mats, labels


def _h3_from_matrix(c: CompositionAlgebra, gamma, m):
    """Coordinates of a hermitian matrix in the E/iota basis."""
    nc = c.dim
    out = []
    for i in range(3):
        diag = m[i][i]
        for ci in range(nc):
            if ci == c.unit_idx:
                continue
            if diag[ci] != 0:
                raise ValueError("matrix is not hermitian (diagonal)")
        out.append(diag[c.unit_idx])
    coords = list(out)
    for t in range(3):
        r, s = (t + 1) % 3, (t + 2) % 3
        a = m[r][s]
        sign = gamma[r] * gamma[s]
        expect = [sign * v for v in c.conj(a)]
        if m[s][r] != expect:
            raise ValueError("matrix is not hermitian (off-diagonal)")
        coords.extend(a)
    return coords


@lru_cache(maxsize=None)
def _h3_cached(comp_name: str, gamma: tuple) -> JordanAlgebra:
    c = hurwitz(comp_name)
    mats, labels = _h3_basis_matrices(c, gamma)
    n = len(labels)

    def product(i, j):
        xy = _h3_matrix_mult(c, mats[i], mats[j])
        yx = _h3_matrix_mult(c, mats[j], mats[i])
        sym = [
            [[(a + b) / 2 for a, b in zip(xy[r][s], yx[r][s])] for s in range(3)]
            for r in range(3)
        ]
        return _h3_from_matrix(c, gamma, sym)

    alg = algebra_from_products(QQ, labels, product)
    unit = [F(0)] * n
    unit[0] = unit[1] = unit[2] = F(1)
    t_row = [F(0)] * n
    t_row[0] = t_row[1] = t_row[2] = F(1, 3)
    nc = c.dim
    return JordanAlgebra(
        alg=alg,
        unit=unit,
        t_row=t_row,
        kind="h3",
        gamma=gamma,
        comp=c,
        comp_name=comp_name,
        e_idx=(0, 1, 2),
        iota_base=tuple(3 + t * nc for t in range(3)),
    )


def h3(comp_name: str, gamma=(1, 1, 1)) -> JordanAlgebra:
    """H3(C, gamma) for C a named Hurwitz algebra and gamma in {+-1}^3."""
    gamma = tuple(int(g) for g in gamma)
    if any(g not in (1, -1) for g in gamma):
        raise ValueError("gamma entries must be +-1")
    return _h3_cached(comp_name, gamma)


# ---------------------------------------------------------------------------
# Mat3(R)+


@lru_cache(maxsize=None)
def m3r() -> JordanAlgebra:
    """Mat3(R) under the symmetrized product; basis = matrix units E_pq."""
    labels = [f"E{p + 1}{q + 1}" for p in range(3) for q in range(3)]

    def product(i, j):
        p, q = divmod(i, 3)
        r, s = divmod(j, 3)
        out = [F(0)] * 9
        if q == r:
            out[3 * p + s] += F(1, 2)
        if s == p:
            out[3 * r + q] += F(1, 2)
        return out

    alg = algebra_from_products(QQ, labels, product)
    unit = [F(0)] * 9
    t_row = [F(0)] * 9
    for i in range(3):
        unit[4 * i] = F(1)
        t_row[4 * i] = F(1, 3)
    return JordanAlgebra(
        alg=alg, unit=unit, t_row=t_row, kind="m3r", e_idx=(0, 4, 8)
    )


# ---------------------------------------------------------------------------
# star product, multiplication operators, inner derivations


def star(j: JordanAlgebra, x, y):
    """x*y = x.y - t_J(x.y) I, the product induced on J0."""
    p = j.mult(x, y)
    t = j.t_j(p)
    if t:
        p = [a - t * u for a, u in zip(p, j.unit)]
    return p


def inner_der(j: JordanAlgebra, x, y):
    """[R_x, R_y], always a derivation of J."""
    return linalg.sparse_to_dense(inner_der_sparse(j, x, y), j.dim, j.dim, QQ)


def inner_der_sparse(j: JordanAlgebra, x, y) -> dict:
    rx = j.alg.right_mult_matrix(x)
    ry = j.alg.right_mult_matrix(y)
    return linalg.sp_commutator(rx, ry)


def j0_basis(j: JordanAlgebra):
    """Deterministic basis of J0 = ker t_J.

    For h3: {E1-E2, E2-E3} then all iota vectors; for m3r the same diagonal
    differences then the off-diagonal matrix units.
    """
    out = []
    e = j.e_idx
    for a, b in ((0, 1), (1, 2)):
        v = [F(0)] * j.dim
        v[e[a]] = F(1)
        v[e[b]] = F(-1)
        out.append(v)
    for i in range(j.dim):
        if i not in e:
            out.append(j.alg.basis_vector(i))
    return out


def check_jordan_identity(j: JordanAlgebra, extended: bool = True):
    """(x^2 y) x == x^2 (y x) on basis pairs, plus two-term x samples."""
    n = j.dim
    xs = [j.alg.basis_vector(i) for i in range(n)]
    if extended:
        xs += [
            linalg.vec_add(j.alg.basis_vector(a), j.alg.basis_vector(b))
            for a in range(n)
            for b in range(a + 1, n)
        ]
    for x in xs:
        x2 = j.mult(x, x)
        for yi in range(n):
            y = j.alg.basis_vector(yi)
            lhs = j.mult(j.mult(x2, y), x)
            rhs = j.mult(x2, j.mult(y, x))
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# gradings of the Jordan algebras


def _z23_on_h3(j: JordanAlgebra) -> GradedDecomposition:
    from .composition import OCTONION_DEGREES

    group = FinAbGroup(0, (2, 2, 2))
    comps = {}
    e = group.identity()
    ident = []
    for i in range(3):
        ident.append(j.e_vec(i))
    for t in range(3):
        ident.append(j.iota(t, j.comp.unit()))
    comps[e] = ident
    for ci, lbl in enumerate(j.comp.labels):
        g = OCTONION_DEGREES[lbl]
        if g == (0, 0, 0):
            continue
        comps.setdefault(g, [])
        for t in range(3):
            comps[g].append(j.iota(t, j.comp.alg.basis_vector(ci)))
    return GradedDecomposition(group=group, algebra=j.alg, components=comps)


def _z22_on_h3(j: JordanAlgebra) -> GradedDecomposition:
    group = FinAbGroup(0, (2, 2))
    degs = {0: (0, 1), 1: (1, 0), 2: (1, 1)}
    comps = {(0, 0): [j.e_vec(i) for i in range(3)]}
    for t in range(3):
        comps[degs[t]] = [
            j.iota(t, j.comp.alg.basis_vector(ci)) for ci in range(j.comp.dim)
        ]
    return GradedDecomposition(group=group, algebra=j.alg, components=comps)


def z_grading_operator(j: JordanAlgebra):
    """4 [R_iota1(1), R_E2], the derivation whose integer eigenspaces grade J."""
    d = inner_der(j, j.iota(0, j.comp.unit()), j.e_vec(1))
    return [[4 * v for v in row] for row in d]


def _z_on_h3(j: JordanAlgebra) -> GradedDecomposition:
    group = FinAbGroup(1, ())
    op = z_grading_operator(j)
    comps = {}
    total = 0
    for lam in range(-2, 3):
        basis = linalg.eigenspace(op, F(lam), QQ)
        if basis:
            comps[(lam,)] = basis
            total += len(basis)
    if total != j.dim:
        raise GradingError("grading operator does not have integer spectrum -2..2")
    return GradedDecomposition(group=group, algebra=j.alg, components=comps)


def _z2_on_m3r(j: JordanAlgebra) -> GradedDecomposition:
    group = FinAbGroup(2, ())
    gvecs = {0: (0, 0), 1: (1, 0), 2: (0, 1)}
    comps = {}
    for p in range(3):
        for q in range(3):
            deg = tuple(a - b for a, b in zip(gvecs[q], gvecs[p]))
            comps.setdefault(deg, []).append(j.alg.basis_vector(3 * p + q))
    return GradedDecomposition(group=group, algebra=j.alg, components=comps)


def jordan_gradings(j: JordanAlgebra) -> dict:
    """The named gradings used downstream.

    h3 over O: 'z2^3' (octonion degrees), 'z2^2' (off-diagonal slots), 'z'
    (eigenspaces of the grading operator).  m3r: 'z^2' (E_pq at g_q - g_p).
    """
    if j.kind == "m3r":
        return {"z^2": _z2_on_m3r(j)}
    if j.comp_name not in ("O", "Os"):
        raise ValueError("gradings implemented for octonion H3 and m3r")
    return {
        "z2^3": _z23_on_h3(j),
        "z2^2": _z22_on_h3(j),
        "z": _z_on_h3(j),
    }


# ---------------------------------------------------------------------------
# the order-2 automorphism nu of the Albert algebra


def nu_automorphism():
    """Matrix on H3(O, I): identity on the H3(H, I) part, -1 on the H l part."""
    j = h3("O", (1, 1, 1))
    quat = {"1", "i", "j", "k"}
    diag = []
    for lbl in j.alg.basis_labels:
        if lbl.startswith("E"):
            diag.append(F(1))
        else:
            inner = lbl[lbl.index("(") + 1 : -1]
            diag.append(F(1) if inner in quat else F(-1))
    n = j.dim
    m = [[F(0)] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = diag[i]
    return m


def h3rr_to_m3r_iso():
    """Explicit isomorphism H3(R+R, I) -> Mat3(R)+ as a 9x9 matrix."""
    src = h3("RR", (1, 1, 1))
    dst = m3r()
    cols = {}
    for i in range(3):
        cols[src.e_idx[i]] = dst.alg.basis_vector(4 * i)
    # iota_t(a) at slot (r,s): first component of a goes to E_{rs},
    # second to E_{sr}; in the {1, s} basis 1 -> E_rs + E_sr, s -> E_rs - E_sr
    for t in range(3):
        r, s = (t + 1) % 3, (t + 2) % 3
        e_rs = dst.alg.basis_vector(3 * r + s)
        e_sr = dst.alg.basis_vector(3 * s + r)
        cols[src.iota_base[t]] = linalg.vec_add(e_rs, e_sr)
        cols[src.iota_base[t] + 1] = linalg.vec_sub(e_rs, e_sr)
    m = [[F(0)] * 9 for _ in range(9)]
    for col, vec in cols.items():
        for row in range(9):
            m[row][col] = vec[row]
    return m
