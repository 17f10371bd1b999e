"""The unified construction T(C, J) = Der(C) + C0 x J0 + Der(J).

The mixed bracket is

    [a x, b y] = t_J(x.y) d_{a,b}  +  [a,b] (x*y)  +  2 t_C(ab) [R_x, R_y],

with Der parts acting componentwise and annihilating each other.  A sign or
convention error anywhere surfaces as a Jacobi failure, so construction always
certifies Jacobi before returning.

Also here: the Der(J) + J0 shortcut model, the signature table over the
2-dimensional composition algebras, the proportionality constants of the
Killing form on T(O, M3R), and the 36-dimensional fixed part of the twisted
Albert involution (the quaternionic symplectic subalgebra).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algcore import (
    AlgebraError,
    LieAlgebra,
    StructAlgebra,
    derivations,
    fixed_subspace,
    inertia,
    is_automorphism,
    killing_matrix,
    twist,
)
from .composition import CompositionAlgebra, hurwitz
from .jordan import (
    JordanAlgebra,
    h3,
    inner_der_sparse,
    j0_basis,
    m3r,
    nu_automorphism,
    star,
)
from .scalars import QQ

F = Fraction


@dataclass
class TitsAlgebra:
    lie: LieAlgebra
    layout: dict  # name -> range
    provenance: dict
    comp: CompositionAlgebra
    jordan: JordanAlgebra
    der_c_basis: list
    der_j_basis: list
    c0_idx: list  # C basis indices spanning C0
    j0_vectors: list

    @property
    def dim(self):
        return self.lie.dim

    def even_indices(self):
        """Indices of Der(C) + Der(J), the even part of the C0 Z2-split."""
        return list(self.layout["der_c"]) + list(self.layout["der_j"])

    def tensor_index(self, ci: int, ji: int) -> int:
        return self.layout["tensor"].start + ci * len(self.j0_vectors) + ji


@lru_cache(maxsize=None)
def _der_basis_cached(which: str, gamma=None):
    if which == "m3r":
        return derivations(m3r().alg)
    if which in ("O", "Os", "RR", "C", "H", "M2R"):
        return derivations(hurwitz(which).alg)
    return derivations(h3(which[3:], gamma).alg)


def der_basis_for_comp(name: str):
    return _der_basis_cached(name)


def der_basis_for_jordan(j: JordanAlgebra):
    if j.kind == "m3r":
        return _der_basis_cached("m3r")
    return _der_basis_cached("h3:" + j.comp_name, j.gamma)


def tits(c: CompositionAlgebra, j: JordanAlgebra, comp_name: str = None) -> TitsAlgebra:
    """Assemble T(C, J) with certified Jacobi."""
    if comp_name is None:
        comp_name = next(
            (n for n in ("RR", "C", "H", "M2R", "O", "Os") if hurwitz(n) is c), None
        )
    der_c = der_basis_for_comp(comp_name) if comp_name else derivations(c.alg)
    der_j = der_basis_for_jordan(j)
    c0 = c.traceless_indices()
    j0 = j0_basis(j)
    nc, nj = len(c0), len(j0)
    ndc, ndj = len(der_c), len(der_j)
    dim = ndc + nc * nj + ndj

    rng_dc = range(0, ndc)
    rng_t = range(ndc, ndc + nc * nj)
    rng_dj = range(ndc + nc * nj, dim)

    der_c_sp = [linalg.dense_to_sparse(d, QQ) for d in der_c]
    der_j_sp = [linalg.dense_to_sparse(d, QQ) for d in der_j]
    dc_expand = (
        linalg.SparseSpanExpander([sum(d, []) for d in der_c], QQ) if ndc else None
    )
    dj_expand = linalg.SparseSpanExpander([sum(d, []) for d in der_j], QQ)
    j0_expand = linalg.SparseSpanExpander(j0, QQ)
    ncdim = c.dim
    njdim = j.dim

    def expand_der_c(sp):
        flat = linalg.sp_flatten(sp, ncdim)
        if not flat:
            return {}
        if dc_expand is None:
            raise AlgebraError("derivation of C outside Der(C) span")
        coeffs = dc_expand.coefficients(flat)
        if coeffs is None:
            raise AlgebraError("derivation of C outside Der(C) span")
        return {i: v for i, v in enumerate(coeffs) if v}

    def expand_der_j(sp):
        coeffs = dj_expand.coefficients(linalg.sp_flatten(sp, njdim))
        if coeffs is None:
            raise AlgebraError("derivation of J outside Der(J) span")
        return {rng_dj.start + i: v for i, v in enumerate(coeffs) if v}

    def expand_c0(vec):
        if vec[c.unit_idx] != 0:
            raise AlgebraError("C0 element has a unit component")
        return {ci: vec[b] for ci, b in enumerate(c0) if vec[b]}

    def expand_j0(vec):
        coeffs = j0_expand.coefficients({i: v for i, v in enumerate(vec) if v})
        if coeffs is None:
            raise AlgebraError("element outside J0")
        return {i: v for i, v in enumerate(coeffs) if v}

    def tensor_entry(ci, ji):
        return rng_t.start + ci * nj + ji

    sc = {}

    def put(i, k, row):
        row = {q: v for q, v in row.items() if v}
        if row:
            sc[(i, k)] = row
            sc[(k, i)] = {q: -v for q, v in row.items()}

    # Der(C) x Der(C), Der(J) x Der(J): commutators
    for p in range(ndc):
        for q in range(p + 1, ndc):
            put(p, q, expand_der_c(linalg.sp_commutator(der_c_sp[p], der_c_sp[q])))
    for p in range(ndj):
        for q in range(p + 1, ndj):
            put(
                rng_dj.start + p,
                rng_dj.start + q,
                expand_der_j(linalg.sp_commutator(der_j_sp[p], der_j_sp[q])),
            )

    # Der parts act componentwise on the tensor summand
    for p in range(ndc):
        dmat = der_c[p]
        for ci, b in enumerate(c0):
            img = expand_c0([row[b] for row in dmat])
            for ji in range(nj):
                put(
                    p,
                    tensor_entry(ci, ji),
                    {tensor_entry(ci2, ji): v for ci2, v in img.items()},
                )
    j0_sp = [{i: v for i, v in enumerate(vec) if v} for vec in j0]
    for p in range(ndj):
        dsp = der_j_sp[p]
        for ji in range(nj):
            imgvec = linalg.sp_matvec(dsp, j0_sp[ji])
            coeffs = j0_expand.coefficients(imgvec)
            if coeffs is None:
                raise AlgebraError("derivation image outside J0")
            for ci in range(nc):
                put(
                    rng_dj.start + p,
                    tensor_entry(ci, ji),
                    {tensor_entry(ci, ji2): v for ji2, v in enumerate(coeffs) if v},
                )

    # tensor x tensor per the three-term bracket
    from .composition import d_ab

    cvecs = [c.alg.basis_vector(b) for b in c0]
    dab_tab = {}
    lie_c0 = {}
    trace_c0 = {}
    for a in range(nc):
        for b in range(nc):
            prod = c.alg.multiply(cvecs[a], cvecs[b])
            trace_c0[(a, b)] = c.trace(prod)
            if a < b:
                dab_tab[(a, b)] = expand_der_c(
                    linalg.dense_to_sparse(d_ab(c, cvecs[a], cvecs[b]), QQ)
                )
                rev = c.alg.multiply(cvecs[b], cvecs[a])
                lie_c0[(a, b)] = expand_c0(linalg.vec_sub(prod, rev))
    star_tab = {}
    tj_tab = {}
    inner_tab = {}
    for x in range(nj):
        for y in range(x, nj):
            p = j.mult(j0[x], j0[y])
            tj_tab[(x, y)] = j.t_j(p)
            star_tab[(x, y)] = expand_j0(star(j, j0[x], j0[y]))
            if x < y:
                inner_tab[(x, y)] = expand_der_j(inner_der_sparse(j, j0[x], j0[y]))

    for a in range(nc):
        for x in range(nj):
            i1 = tensor_entry(a, x)
            for b in range(a, nc):
                for y in range(nj):
                    i2 = tensor_entry(b, y)
                    if i2 <= i1:
                        continue
                    row = {}
                    xs, ys = (x, y) if x <= y else (y, x)
                    tj = tj_tab[(xs, ys)]
                    if tj and a != b:
                        for k, v in dab_tab[(a, b)].items():
                            row[k] = row.get(k, F(0)) + tj * v
                    if a != b:
                        lie_ab = lie_c0[(a, b)]
                        st = star_tab[(xs, ys)]
                        for ci2, cv in lie_ab.items():
                            for ji2, jv in st.items():
                                k = tensor_entry(ci2, ji2)
                                row[k] = row.get(k, F(0)) + cv * jv
                    tc = trace_c0[(a, b)]
                    if tc and x != y:
                        xx, yy = (x, y) if x < y else (y, x)
                        sgn = 1 if x < y else -1
                        for k, v in inner_tab[(xx, yy)].items():
                            row[k] = row.get(k, F(0)) + 2 * sgn * tc * v
                    put(i1, i2, row)

    labels = (
        [f"dC{p}" for p in range(ndc)]
        + [f"t[{c.labels[c0[a]]};{x}]" for a in range(nc) for x in range(nj)]
        + [f"dJ{p}" for p in range(ndj)]
    )
    alg = StructAlgebra(field=QQ, dim=dim, basis_labels=labels, sc=sc)
    lie = LieAlgebra(alg)  # certifies Jacobi; a convention bug fails loudly here
    return TitsAlgebra(
        lie=lie,
        layout={"der_c": rng_dc, "tensor": rng_t, "der_j": rng_dj},
        provenance={
            "construction": "tits",
            "C": comp_name,
            "J": j.kind if j.kind == "m3r" else f"h3({j.comp_name},{list(j.gamma)})",
        },
        comp=c,
        jordan=j,
        der_c_basis=der_c,
        der_j_basis=der_j,
        c0_idx=c0,
        j0_vectors=j0,
    )


# ---------------------------------------------------------------------------
# the Der(J) + J0 shortcut (degenerate C = R+R, odd part unscaled)


def derj_j0_model(j: JordanAlgebra) -> TitsAlgebra:
    """Der(J) + J0 with [x, y] = [R_x, R_y]; Z2-graded with even part Der(J).

    Isomorphic to T(R+R, J) up to a positive rescaling of the odd part, so
    same Killing signature; the tensor slot holds J0 itself.
    """
    der_j = der_basis_for_jordan(j)
    j0 = j0_basis(j)
    nj = len(j0)
    ndj = len(der_j)
    dim = nj + ndj
    rng_t = range(0, nj)
    rng_dj = range(nj, dim)
    der_j_sp = [linalg.dense_to_sparse(d, QQ) for d in der_j]
    dj_expand = linalg.SparseSpanExpander([sum(d, []) for d in der_j], QQ)
    j0_expand = linalg.SparseSpanExpander(j0, QQ)
    j0_sp = [{i: v for i, v in enumerate(vec) if v} for vec in j0]
    njdim = j.dim

    sc = {}

    def put(i, k, row):
        row = {q: v for q, v in row.items() if v}
        if row:
            sc[(i, k)] = row
            sc[(k, i)] = {q: -v for q, v in row.items()}

    def expand_dj(sp):
        coeffs = dj_expand.coefficients(linalg.sp_flatten(sp, njdim))
        if coeffs is None:
            raise AlgebraError("matrix outside Der(J) span")
        return coeffs

    for p in range(ndj):
        for q in range(p + 1, ndj):
            coeffs = expand_dj(linalg.sp_commutator(der_j_sp[p], der_j_sp[q]))
            put(rng_dj.start + p, rng_dj.start + q,
                {rng_dj.start + i: v for i, v in enumerate(coeffs) if v})
    for p in range(ndj):
        for ji in range(nj):
            img = j0_expand.coefficients(linalg.sp_matvec(der_j_sp[p], j0_sp[ji]))
            if img is None:
                raise AlgebraError("derivation image outside J0")
            put(rng_dj.start + p, ji, {i: v for i, v in enumerate(img) if v})
    for x in range(nj):
        for y in range(x + 1, nj):
            coeffs = expand_dj(inner_der_sparse(j, j0[x], j0[y]))
            put(x, y, {rng_dj.start + i: v for i, v in enumerate(coeffs) if v})

    labels = [f"x{i}" for i in range(nj)] + [f"dJ{p}" for p in range(ndj)]
    alg = StructAlgebra(field=QQ, dim=dim, basis_labels=labels, sc=sc)
    lie = LieAlgebra(alg)
    rr = hurwitz("RR")
    return TitsAlgebra(
        lie=lie,
        layout={"der_c": range(0, 0), "tensor": rng_t, "der_j": rng_dj},
        provenance={
            "construction": "derj+j0",
            "C": "RR",
            "J": j.kind if j.kind == "m3r" else f"h3({j.comp_name},{list(j.gamma)})",
        },
        comp=rr,
        jordan=j,
        der_c_basis=[],
        der_j_basis=der_j,
        c0_idx=rr.traceless_indices(),
        j0_vectors=j0,
    )


# ---------------------------------------------------------------------------
# signature table for the 2-dimensional composition algebras


JORDAN_INGREDIENTS = {
    "albert": ("O", (1, 1, 1)),
    "albert-split": ("O", (1, -1, 1)),
    "splitalbert": ("Os", (1, 1, 1)),
}


def jordan_ingredient(jname: str) -> JordanAlgebra:
    if jname == "m3r":
        return m3r()
    o, gamma = JORDAN_INGREDIENTS[jname]
    return h3(o, gamma)


@lru_cache(maxsize=None)
def tits_model(cname: str, jname: str) -> TitsAlgebra:
    return tits(hurwitz(cname), jordan_ingredient(jname), comp_name=cname)


@lru_cache(maxsize=None)
def derj_model(jname: str) -> TitsAlgebra:
    return derj_j0_model(jordan_ingredient(jname))


def jacobson_table() -> dict:
    """Exact Killing signatures of T(C, J) for C in {C, R+R} and the three
    octonion Jordan ingredients."""
    out = {}
    for cname in ("C", "RR"):
        for jname in JORDAN_INGREDIENTS:
            t = tits_model(cname, jname)
            sig = inertia(t.lie.killing_matrix()).signature
            out[(cname, jname)] = sig
    return out


# ---------------------------------------------------------------------------
# Killing proportionality constants on T(O, M3R)


def _submatrix(k, idx):
    return [[k[i][j] for j in idx] for i in idx]


def _ratio_constant(kmat, idx, other):
    """k[idx x idx] = const * other, verified entrywise; returns const."""
    const = None
    for a in range(len(idx)):
        for b in range(len(idx)):
            lhs = kmat[idx[a]][idx[b]]
            rhs = other[a][b]
            if rhs == 0:
                if lhs != 0:
                    raise AlgebraError("forms are not proportional")
                continue
            r = lhs / rhs
            if const is None:
                const = r
            elif const != r:
                raise AlgebraError("ratio is not constant")
    return const


def proportionality_constants(t: TitsAlgebra = None) -> dict:
    """The four exact constants tying the Killing form of T(O, M3R) and the
    quaternionic subalgebra to the natural forms of the ingredients."""
    if t is None:
        t = tits_model("O", "m3r")
    k = t.lie.killing_matrix()
    # Der(O): k(d, d') = 12 tr(d d')
    idx_c = list(t.layout["der_c"])
    tr_c = [
        [
            linalg.sp_trace_product(
                linalg.dense_to_sparse(a, QQ), linalg.dense_to_sparse(b, QQ)
            )
            or F(0)
            for b in t.der_c_basis
        ]
        for a in t.der_c_basis
    ]
    c_der_c = _ratio_constant(k, idx_c, tr_c)
    # Der(M): k(D, D') = 8 tr(D D')
    idx_j = list(t.layout["der_j"])
    tr_j = [
        [
            linalg.sp_trace_product(
                linalg.dense_to_sparse(a, QQ), linalg.dense_to_sparse(b, QQ)
            )
            or F(0)
            for b in t.der_j_basis
        ]
        for a in t.der_j_basis
    ]
    c_der_j = _ratio_constant(k, idx_j, tr_j)
    # tensor part: k(a x, b y) = alpha n(a,b) t_M(x.y)
    c = t.comp
    j = t.jordan
    nc, nj = len(t.c0_idx), len(t.j0_vectors)
    cvecs = [c.alg.basis_vector(b) for b in t.c0_idx]
    form = [[F(0)] * (nc * nj) for _ in range(nc * nj)]
    for a in range(nc):
        for x in range(nj):
            for b in range(nc):
                for y in range(nj):
                    form[a * nj + x][b * nj + y] = c.norm_polar(
                        cvecs[a], cvecs[b]
                    ) * j.t_j(j.mult(t.j0_vectors[x], t.j0_vectors[y]))
    idx_t = list(t.layout["tensor"])
    alpha = _ratio_constant(k, idx_t, form)
    # delta: K restricted to the 36-dim even part of the Albert nu-twist
    # against that subalgebra's own Killing form
    dec = sp31_decomposition()
    delta = dec["delta"]
    return {
        "c_der_C": c_der_c,
        "c_der_J": c_der_j,
        "alpha": alpha,
        "delta": delta,
    }


# ---------------------------------------------------------------------------
# the sp(3,1) decomposition of the Albert model


@lru_cache(maxsize=None)
def sp31_decomposition() -> dict:
    """Even part of the theta*nu involution on Der(J) + J0, J the Albert
    algebra: dimension 36, theta-and-nu fixed dimension 24, Killing
    signature -12, Killing ratio delta against its own Killing form."""
    j = h3("O", (1, 1, 1))
    t = derj_model("albert")
    lie = t.lie
    dim = lie.dim
    nu_j = nu_automorphism()
    if not is_automorphism(j.alg, nu_j):
        raise AlgebraError("nu is not an automorphism of the Albert algebra")
    # lift: D -> nu D nu^{-1} on Der(J), x -> nu(x) on J0 (here nu^2 = id)
    der = t.der_j_basis
    dj_solver = linalg.SpanSolver([sum(d, []) for d in der], QQ)
    j0 = t.j0_vectors
    j0_solver = linalg.SpanSolver(j0, QQ)
    nu_l = [[F(0)] * dim for _ in range(dim)]
    for ji, x in enumerate(j0):
        img = j0_solver.coefficients(linalg.mat_vec(nu_j, x, QQ))
        for r, v in enumerate(img):
            nu_l[t.layout["tensor"].start + r][t.layout["tensor"].start + ji] = v
    for p, d in enumerate(der):
        conj = linalg.mat_mul(nu_j, linalg.mat_mul(d, nu_j, QQ), QQ)
        img = dj_solver.coefficients(sum(conj, []))
        if img is None:
            raise AlgebraError("nu conjugation leaves Der(J)")
        for r, v in enumerate(img):
            nu_l[t.layout["der_j"].start + r][t.layout["der_j"].start + p] = v
    theta = [[F(0)] * dim for _ in range(dim)]
    for i in range(dim):
        theta[i][i] = F(1) if i in t.layout["der_j"] else F(-1)
    nu_prime = linalg.mat_mul(theta, nu_l, QQ)
    if not is_automorphism(lie.alg, nu_prime):
        raise AlgebraError("theta*nu is not an automorphism")
    even_basis, even_dim = fixed_subspace(nu_prime, QQ)
    # fix(theta) & fix(nu) = derivations commuting with nu (nu_l is block
    # diagonal, so restrict to the Der block and take its fixed space)
    der_range = t.layout["der_j"]
    nu_der_block = [
        [nu_l[der_range.start + r][der_range.start + p] for p in range(len(der))]
        for r in range(len(der))
    ]
    fix_both, _ = fixed_subspace(nu_der_block, QQ)
    k = lie.killing_matrix()
    f = QQ
    gram = [
        [
            sum(
                x[i] * k[i][jj] * y[jj]
                for i in range(dim)
                if x[i]
                for jj in range(dim)
                if y[jj] and k[i][jj]
            )
            for y in even_basis
        ]
        for x in even_basis
    ]
    even_sig = inertia(gram).signature
    # the even part as its own Lie algebra, for delta
    solver = linalg.SpanSolver(even_basis, f)
    sub_sc = {}
    for a in range(even_dim):
        for b in range(even_dim):
            if a == b:
                continue
            br = lie.bracket(even_basis[a], even_basis[b])
            coeffs = solver.coefficients(br)
            if coeffs is None:
                raise AlgebraError("even part is not closed under bracket")
            row = {i: v for i, v in enumerate(coeffs) if v}
            if row:
                sub_sc[(a, b)] = row
    sub = LieAlgebra(
        StructAlgebra(
            field=f,
            dim=even_dim,
            basis_labels=[f"s{i}" for i in range(even_dim)],
            sc=sub_sc,
        ),
        check_jacobi=False,
    )
    k0 = killing_matrix(sub)
    delta = _ratio_constant(gram, list(range(even_dim)), k0)
    return {
        "even_dim": even_dim,
        "odd_dim": dim - even_dim,
        "fix_theta_and_nu_dim": len(fix_both),
        "even_signature": even_sig,
        "delta": delta,
        "model": t,
        "even_basis": even_basis,
    }


def twist_signature_identity() -> dict:
    """sign(L) + sign(L^{-1}) = 2 sign(K|even) on Der(J) + J0, J Albert."""
    t = derj_model("albert")
    lie = t.lie
    k = lie.killing_matrix()
    sig = inertia(k).signature
    tw = twist(lie, set(t.even_indices()), F(-1))
    sig_tw = inertia(killing_matrix(tw)).signature
    even_idx = t.even_indices()
    even_sig = inertia(_submatrix(k, even_idx)).signature
    return {
        "sign": sig,
        "sign_twisted": sig_tw,
        "sign_even": even_sig,
        "identity_holds": sig + sig_tw == 2 * even_sig,
    }
