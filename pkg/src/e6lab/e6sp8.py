"""The symplectic model of e6: sp8 + ker c on the fourth exterior power.

S0 = sp(8) for the form C = [[0, I4], [-I4, 0]]; the odd part is the kernel
of the contraction c: Lambda^4 -> Lambda^2.  Four monomial symplectic
matrices A1..A4 act on everything; their joint eigenspaces are computed
exactly over Q(i) by iterated splitting (eigenvalues are fourth roots of
unity), and every joint eigenspace turns out to have a rational basis, which
yields the graded basis of the real form.

The odd x odd bracket is recovered by trace duality against the
Lambda^4 x Lambda^4 -> Lambda^8 pairing; any nonzero scaling satisfies
Jacobi (the scaling freedom is the same as the Z2 twist), so the module
fixes lambda = 1 and records it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .algcore import (
    AlgebraError,
    LieAlgebra,
    StructAlgebra,
    fixed_subspace,
    inertia,
    killing_matrix,
    twist,
)
from .gradings import FinAbGroup, GradedDecomposition
from .scalars import GI_I, GI_ONE, GI_ZERO, QI, QQ, GaussRational, lift

F = Fraction

MON4 = list(combinations(range(8), 4))
MON2 = list(combinations(range(8), 2))
IDX4 = {m: i for i, m in enumerate(MON4)}
IDX2 = {m: i for i, m in enumerate(MON2)}

ODD_BRACKET_SCALE = F(1)


def _c_entry(i: int, j: int) -> int:
    if j == i + 4:
        return 1
    if j == i - 4:
        return -1
    return 0


def c_matrix():
    return [[F(_c_entry(i, j)) for j in range(8)] for i in range(8)]


def _gi(re=0, im=0) -> GaussRational:
    return GaussRational(F(re), F(im))


def a_matrices():
    """A1..A4 over Q(i), exactly as displayed; monomial matrices."""
    z = GI_ZERO
    a1 = [[z] * 8 for _ in range(8)]
    for r, c in ((0, 4), (1, 5), (4, 0), (5, 1), (2, 7), (3, 6), (6, 3), (7, 2)):
        a1[r][c] = _gi(0, 1)
    a2 = [[z] * 8 for _ in range(8)]
    for i in range(8):
        a2[i][i] = _gi(0, 1) if i < 4 else _gi(0, -1)
    a3 = [[z] * 8 for _ in range(8)]
    for b in range(4):
        a3[2 * b][2 * b + 1] = _gi(1)
        a3[2 * b + 1][2 * b] = _gi(1)
    a4 = [[z] * 8 for _ in range(8)]
    diag = [_gi(1), _gi(-1), _gi(0, -1), _gi(0, 1), _gi(1), _gi(-1), _gi(0, 1), _gi(0, -1)]
    for i in range(8):
        a4[i][i] = diag[i]
    return [a1, a2, a3, a4]


@dataclass
class SymplecticFrame:
    c: list
    a: list

    def check(self):
        """A_i C A_i^t = C for all i; order data of A2, A4."""
        cqi = [[lift(v) for v in row] for row in self.c]
        for ai in self.a:
            at = linalg.transpose(ai)
            prod = linalg.mat_mul(ai, linalg.mat_mul(cqi, at, QI), QI)
            if prod != cqi:
                raise AlgebraError("A C A^t != C")
        a2sq = linalg.mat_mul(self.a[1], self.a[1], QI)
        if a2sq != linalg.mat_scale(linalg.identity(8, QI), _gi(-1)):
            raise AlgebraError("A2^2 != -I")
        a4sq = linalg.mat_mul(self.a[3], self.a[3], QI)
        a4quad = linalg.mat_mul(a4sq, a4sq, QI)
        if a4quad != linalg.identity(8, QI):
            raise AlgebraError("A4^4 != I")
        return True


@lru_cache(maxsize=None)
def frame() -> SymplecticFrame:
    fr = SymplecticFrame(c=c_matrix(), a=a_matrices())
    fr.check()
    return fr


# ---------------------------------------------------------------------------
# contraction and its kernel


def _perm_sign(seq) -> int:
    sign = 1
    s = list(seq)
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] > s[j]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def contraction_matrix():
    """28 x 70 matrix of c over Q (the alternating-sum pairing with C)."""
    rows = [[F(0)] * 70 for _ in range(28)]
    for col, mono in enumerate(MON4):
        for p, q in combinations(range(4), 2):
            rest = [t for t in range(4) if t not in (p, q)]
            sign = _perm_sign([p, q] + rest)
            factor = _c_entry(mono[p], mono[q])
            if factor:
                pair = (mono[rest[0]], mono[rest[1]])
                rows[IDX2[pair]][col] += sign * factor
    return rows


def contraction(u):
    """Apply c to a four-form given as a 70-coordinate vector."""
    return linalg.mat_vec(contraction_matrix(), u, QQ)


@lru_cache(maxsize=None)
def kernel_c_basis():
    """Rational basis of ker c (dim 42), primitive integer vectors."""
    mat = contraction_matrix()
    if linalg.rank(mat, QQ) != 28:
        raise AlgebraError("contraction is not surjective")
    ker = linalg.kernel(mat, 70, QQ)
    out = []
    for v in ker:
        ints = linalg.clear_denominators(v)
        out.append([F(x) for x in ints])
    return out


# ---------------------------------------------------------------------------
# sp8 and actions


@lru_cache(maxsize=None)
def sp8_rational_basis():
    """Reduced-echelon rational basis of {x : xC + Cx^t = 0} (dim 36)."""
    c = c_matrix()
    rows = []
    for i in range(8):
        for j in range(8):
            row = [F(0)] * 64
            for k in range(8):
                row[i * 8 + k] += c[k][j]
                row[j * 8 + k] += c[i][k]
            if any(row):
                rows.append(row)
    return linalg.kernel(rows, 64, QQ)


def act4_matrix_sparse(x, field):
    """Derivation action of an 8x8 matrix on Lambda^4 (sparse, 70x70)."""
    z = field.zero
    cols = {}
    for c in range(8):
        col = {r: x[r][c] for r in range(8) if x[r][c] != z}
        if col:
            cols[c] = col
    out = {}
    for src, mono in enumerate(MON4):
        for t in range(4):
            col = cols.get(mono[t])
            if not col:
                continue
            for r, coef in col.items():
                if r == mono[t]:
                    dst, sign = src, 1
                elif r in mono:
                    continue
                else:
                    order = list(mono[:t]) + [r] + list(mono[t + 1 :])
                    dst = IDX4[tuple(sorted(order))]
                    sign = _perm_sign(order)
                row = out.setdefault(dst, {})
                val = row.get(src, z) + (coef if sign == 1 else -coef)
                if val == z:
                    row.pop(src, None)
                else:
                    row[src] = val
    return {r: row for r, row in out.items() if row}


def wedge4_matrix_sparse(a, field):
    """Multiplicative action e_{i1}^..^e_{i4} -> A e_{i1} ^ .. ^ A e_{i4}."""
    z = field.zero
    cols = {}
    for c in range(8):
        col = [(r, a[r][c]) for r in range(8) if a[r][c] != z]
        cols[c] = col
    out = {}
    for src, mono in enumerate(MON4):
        choices = [cols[i] for i in mono]
        stack = [([], field.one)]
        for col in choices:
            nxt = []
            for chosen, coef in stack:
                for r, v in col:
                    if r in chosen:
                        continue
                    nxt.append((chosen + [r], coef * v))
            stack = nxt
        for chosen, coef in stack:
            sign = _perm_sign(chosen)
            dst = IDX4[tuple(sorted(chosen))]
            row = out.setdefault(dst, {})
            val = row.get(src, z) + (coef if sign == 1 else -coef)
            if val == z:
                row.pop(src, None)
            else:
                row[src] = val
    return {r: row for r, row in out.items() if row}


def act2_matrix_sparse(x, field):
    z = field.zero
    out = {}
    for src, mono in enumerate(MON2):
        for t in range(2):
            for r in range(8):
                coef = x[r][mono[t]]
                if coef == z:
                    continue
                if r == mono[t]:
                    dst, sign = src, 1
                elif r in mono:
                    continue
                else:
                    order = list(mono[:t]) + [r] + list(mono[t + 1 :])
                    dst = IDX2[tuple(sorted(order))]
                    sign = _perm_sign(order)
                row = out.setdefault(dst, {})
                val = row.get(src, z) + (coef if sign == 1 else -coef)
                if val == z:
                    row.pop(src, None)
                else:
                    row[src] = val
    return {r: row for r, row in out.items() if row}


def ad_matrix_on_flat(m, field):
    """X -> M X M^{-1} as a 64x64 dense matrix over the field of M."""
    minv = linalg.mat_inverse(m, field)
    out = [[field.zero] * 64 for _ in range(64)]
    for p in range(8):
        for q in range(8):
            # image of E_pq: column q of M times row p of M^{-1}
            for r in range(8):
                for s in range(8):
                    v = m[r][p] * minv[q][s]
                    if v != field.zero:
                        out[r * 8 + s][p * 8 + q] = v
    return out


# ---------------------------------------------------------------------------
# joint eigenspace splitting over Q(i)


EIGS4 = [GI_ONE, GI_I, -GI_ONE, -GI_I]  # i^k


def _operator_on_subspace(op_apply, basis, field):
    solver = linalg.SpanSolver(basis, field)
    cols = []
    for v in basis:
        img = op_apply(v)
        co = solver.coefficients(img)
        if co is None:
            raise AlgebraError("operator does not preserve the subspace")
        cols.append(co)
    k = len(basis)
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _split(subspaces, op_apply, nev, field):
    out = []
    for basis, tag in subspaces:
        m = _operator_on_subspace(op_apply, basis, field)
        k = len(basis)
        found = 0
        for e in range(nev):
            lam = EIGS4[(4 // nev) * e] if nev == 4 else EIGS4[2 * e]
            combos = linalg.eigenspace(m, lam, field)
            if not combos:
                continue
            newbasis = []
            for combo in combos:
                v = [field.zero] * len(basis[0])
                for idx, co in enumerate(combo):
                    if co != field.zero:
                        v = linalg.vec_add(v, linalg.vec_scale(basis[idx], co))
                newbasis.append(v)
            out.append((newbasis, tag + (e,)))
            found += len(combos)
        if found != k:
            raise AlgebraError("operator is not semisimple on the subspace")
    return out


def _rational_points(basis_qi):
    """Primitive rational basis of the sigma-fixed points of a Q(i)-span."""
    k = len(basis_qi)
    n = len(basis_qi[0])
    rows = []
    for coord in range(n):
        re_row = [basis_qi[j][coord].im for j in range(k)] + [
            basis_qi[j][coord].re for j in range(k)
        ]
        if any(re_row):
            rows.append([F(x) for x in re_row])
    combos = linalg.kernel(rows, 2 * k, QQ)
    out = []
    for combo in combos:
        v = [F(0)] * n
        for j in range(k):
            alpha, beta = combo[j], combo[k + j]
            if alpha or beta:
                for c2 in range(n):
                    b = basis_qi[j][c2]
                    v[c2] += alpha * b.re - beta * b.im
        if any(v):
            out.append(v)
    if len(out) != k:
        raise AlgebraError("eigenspace admits no full rational basis")
    red, _ = linalg.rref(out, QQ)
    return [[F(x) for x in linalg.clear_denominators(v)] for v in red]


@dataclass
class Sp8Model:
    lie: LieAlgebra
    even_dim: int
    odd_dim: int
    even_tags: list  # per even basis vector: (e1,e2,e3,e4)
    odd_tags: list
    even_matrices: list  # 8x8 rational matrices (entries in {-1,0,1})
    odd_vectors: list  # 70-coordinate rational four-forms
    even_leaf_dims: dict
    provenance: dict

    @property
    def dim(self):
        return self.lie.dim

    def even_indices(self):
        return range(self.even_dim)

    def tag_of(self, idx: int):
        """(e4; e1,e2,e3, theta) in Z4 x Z2^4 for a basis index."""
        if idx < self.even_dim:
            e1, e2, e3, e4 = self.even_tags[idx]
            th = 0
        else:
            e1, e2, e3, e4 = self.odd_tags[idx - self.even_dim]
            th = 1
        return (e4, e1, e2, e3, th)


def sp8_basis():
    """The 36 simultaneous eigenvectors with entries in {-1, 0, 1}."""
    model = assemble_e6()
    return model.even_matrices


@lru_cache(maxsize=None)
def _graded_bases():
    fr = frame()
    ads = [ad_matrix_on_flat(a, QI) for a in fr.a]

    def apply_ad(i):
        m = ads[i]

        def go(v):
            return linalg.mat_vec(m, v, QI)

        return go

    even = [([[lift(x) for x in v] for v in sp8_rational_basis()], ())]
    for i in range(4):
        even = _split(even, apply_ad(i), 2 if i < 3 else 4, QI)
    acts = [wedge4_matrix_sparse(a, QI) for a in fr.a]

    def apply_act(i):
        m = acts[i]

        def go(v):
            sp = {c: x for c, x in enumerate(v) if x != GI_ZERO}
            img = linalg.sp_matvec(m, sp)
            dense = [GI_ZERO] * 70
            for c, x in img.items():
                dense[c] = x
            return dense

        return go

    odd = [([[lift(x) for x in v] for v in kernel_c_basis()], ())]
    for i in range(4):
        odd = _split(odd, apply_act(i), 2 if i < 3 else 4, QI)
    even.sort(key=lambda t: t[1])
    odd.sort(key=lambda t: t[1])
    even_rat = [(_rational_points(b), tag) for b, tag in even]
    odd_rat = [(_rational_points(b), tag) for b, tag in odd]
    return even_rat, odd_rat


def wedge8_pairs():
    """mono index -> (complement index, sign of the concatenation)."""
    out = {}
    for i, mono in enumerate(MON4):
        comp = tuple(sorted(set(range(8)) - set(mono)))
        out[i] = (IDX4[comp], _perm_sign(list(mono) + list(comp)))
    return out


@lru_cache(maxsize=None)
def assemble_e6(lam: Fraction = ODD_BRACKET_SCALE) -> Sp8Model:
    """The 78-dimensional rational Lie algebra sp8 + ker c.

    Any nonzero lam yields a Lie algebra (twist freedom); lam is recorded in
    the provenance.  Jacobi is certified exhaustively.
    """
    lam = F(lam)
    if lam == 0:
        raise AlgebraError("odd bracket scale must be nonzero")
    even_rat, odd_rat = _graded_bases()
    even_type = {}
    for b, tag in even_rat:
        even_type[tag] = len(b)
    even_mats = []
    even_tags = []
    for b, tag in even_rat:
        for v in b:
            if any(x not in (-1, 0, 1) for x in v):
                raise AlgebraError("even eigenvector entries outside {-1,0,1}")
            even_mats.append([v[8 * r : 8 * r + 8] for r in range(8)])
            even_tags.append(tag)
    odd_vecs = []
    odd_tags = []
    for b, tag in odd_rat:
        for v in b:
            odd_vecs.append(v)
            odd_tags.append(tag)
    ne, no = len(even_mats), len(odd_vecs)
    if (ne, no) != (36, 42):
        raise AlgebraError("unexpected graded dimensions")

    even_flat = [sum(m, []) for m in even_mats]
    even_expand = linalg.SparseSpanExpander(even_flat, QQ)
    odd_expand = linalg.SparseSpanExpander(odd_vecs, QQ)
    even_sp = [linalg.dense_to_sparse(m, QQ) for m in even_mats]
    act_sp = [act4_matrix_sparse(m, QQ) for m in even_mats]
    odd_sp = [{c: x for c, x in enumerate(v) if x} for v in odd_vecs]

    sc = {}

    def put(i, k, row):
        row = {q: v for q, v in row.items() if v}
        if row:
            sc[(i, k)] = row
            sc[(k, i)] = {q: -v for q, v in row.items()}

    # even x even
    for p in range(ne):
        for q in range(p + 1, ne):
            comm = linalg.sp_commutator(even_sp[p], even_sp[q])
            coeffs = even_expand.coefficients(linalg.sp_flatten(comm, 8))
            if coeffs is None:
                raise AlgebraError("sp8 not closed under bracket")
            put(p, q, {i: v for i, v in enumerate(coeffs) if v})
    # even x odd: derivation action on four-forms stays inside ker c
    for p in range(ne):
        for u in range(no):
            img = linalg.sp_matvec(act_sp[p], odd_sp[u])
            coeffs = odd_expand.coefficients(img)
            if coeffs is None:
                raise AlgebraError("sp8 action leaves ker c")
            put(p, ne + u, {ne + i: v for i, v in enumerate(coeffs) if v})
    # odd x odd by trace duality: tr(X x) = lam * wedge8((x.u) ^ v)
    gram = [
        [linalg.sp_trace_product(even_sp[p], even_sp[q]) or F(0) for q in range(ne)]
        for p in range(ne)
    ]
    ginv = linalg.mat_inverse(gram, QQ)
    w8 = wedge8_pairs()
    paired = []  # paired[x][u] = (M_x u) reindexed for the wedge8 pairing
    for x in range(ne):
        per_u = []
        for u in range(no):
            w = linalg.sp_matvec(act_sp[x], odd_sp[u])
            per_u.append({w8[c][0]: (v if w8[c][1] == 1 else -v) for c, v in w.items()})
        paired.append(per_u)
    for u in range(no):
        for v in range(u + 1, no):
            b = []
            vv = odd_sp[v]
            for x in range(ne):
                w = paired[x][u]
                acc = F(0)
                if len(w) > len(vv):
                    small, big = vv, w
                else:
                    small, big = w, vv
                for c, val in small.items():
                    other = big.get(c)
                    if other is not None:
                        acc += val * other
                b.append(acc)
            coeffs = linalg.mat_vec(ginv, b, QQ)
            put(ne + u, ne + v, {i: lam * co for i, co in enumerate(coeffs) if co})

    labels = [f"x{i}" for i in range(ne)] + [f"u{j}" for j in range(no)]
    alg = StructAlgebra(field=QQ, dim=78, basis_labels=labels, sc=sc)
    lie = LieAlgebra(alg)
    return Sp8Model(
        lie=lie,
        even_dim=ne,
        odd_dim=no,
        even_tags=even_tags,
        odd_tags=odd_tags,
        even_matrices=even_mats,
        odd_vectors=odd_vecs,
        even_leaf_dims=even_type,
        provenance={
            "construction": "sp8+kerc",
            "odd_bracket_scale": str(lam),
        },
    )


def eigenspace_type() -> tuple:
    """(number of 1-dim, number of 2-dim) joint eigenspaces of sp8."""
    model = assemble_e6()
    dims = sorted(model.even_leaf_dims.values())
    return (dims.count(1), dims.count(2))


def model_even_signature() -> int:
    """Killing signature of the even (sp8) part of the assembled model."""
    model = assemble_e6()
    k = model.lie.killing_matrix()
    idx = list(range(model.even_dim))
    return inertia([[k[i][j] for j in idx] for i in idx]).signature


def odd_bracket(u, v, lam: Fraction = ODD_BRACKET_SCALE):
    """Bracket of two ker-c vectors (70 coords), as an 8x8 sp8 matrix."""
    model = assemble_e6()
    ne = model.even_dim
    ex = linalg.SparseSpanExpander(model.odd_vectors, QQ)
    cu = ex.coefficients({i: x for i, x in enumerate(u) if x})
    cv = ex.coefficients({i: x for i, x in enumerate(v) if x})
    if cu is None or cv is None:
        raise AlgebraError("arguments must lie in ker c")
    out = [[F(0)] * 8 for _ in range(8)]
    scale = F(lam) / ODD_BRACKET_SCALE
    for i, a in enumerate(cu):
        if not a:
            continue
        for j, b in enumerate(cv):
            if not b:
                continue
            row = model.lie.alg.sc.get((ne + i, ne + j))
            if not row:
                continue
            for k, coef in row.items():
                m = model.even_matrices[k]
                c2 = a * b * coef * scale
                for r in range(8):
                    for s in range(8):
                        if m[r][s]:
                            out[r][s] += c2 * m[r][s]
    return out


# ---------------------------------------------------------------------------
# conjugated real form and the Z4 x Z2^4 grading


def _chi_bits(model: Sp8Model):
    """chi = eigenvalue of (A1 A2 A3)-dot per basis vector; 0 even, 1 odd."""
    bits = []
    for i in range(model.dim):
        e4, e1, e2, e3, _th = model.tag_of(i)
        bits.append((e1 + e2 + e3) % 2)
    return bits


@lru_cache(maxsize=None)
def conjugated_form() -> dict:
    """The sigma' = sigma (A1 A2 A3)-dot real form and its signatures.

    The character chi of (A1 A2 A3)-dot is real on every component, so the
    fixed points of sigma' are the chi-even part plus i times the chi-odd
    part, i.e. the chi-twist of the rational model by -1.
    """
    model = assemble_e6()
    fr = frame()
    m = linalg.mat_mul(fr.a[0], linalg.mat_mul(fr.a[1], fr.a[2], QI), QI)
    if any(x.im != 0 for row in m for x in row):
        raise AlgebraError("A1 A2 A3 should be real")
    m2 = linalg.mat_mul(m, m, QI)
    ident = linalg.identity(8, QI)
    neg = linalg.mat_scale(ident, _gi(-1))
    if m2 != ident and m2 != neg:
        raise AlgebraError("sigma' is not an involution")
    bits = _chi_bits(model)
    even_idx = {i for i, b in enumerate(bits) if b == 0}
    lprime = twist(model.lie, even_idx, F(-1))
    k = lprime.killing_matrix()
    theta_even = list(range(model.even_dim))
    sub = [[k[i][j] for j in theta_even] for i in theta_even]
    even_sig = inertia(sub).signature
    full_sig = inertia(k).signature
    twisted = twist(lprime, set(theta_even), F(-1))
    twisted_sig = inertia(killing_matrix(twisted)).signature
    return {
        "lie": lprime,
        "twisted": twisted,
        "model": model,
        "even_sig": even_sig,
        "full_sig": full_sig,
        "twisted_sig": twisted_sig,
        "chi_bits": bits,
    }


def fix_ad_c_a123_dim() -> int:
    """dim of the Ad(C A1 A2 A3)-fixed subspace of sp8 (rational, dim 24)."""
    fr = frame()
    cqi = [[lift(v) for v in row] for row in fr.c]
    g = cqi
    for a in fr.a[:3]:
        g = linalg.mat_mul(g, a, QI)
    if any(x.im != 0 for row in g for x in row):
        raise AlgebraError("C A1 A2 A3 should be real")
    greal = [[x.re for x in row] for row in g]
    ad = ad_matrix_on_flat(greal, QQ)
    basis = sp8_rational_basis()
    solver = linalg.SpanSolver(basis, QQ)
    cols = []
    for v in basis:
        img = linalg.mat_vec(ad, v, QQ)
        co = solver.coefficients(img)
        if co is None:
            raise AlgebraError("Ad does not preserve sp8")
        cols.append(co)
    mat = [[cols[j][i] for j in range(36)] for i in range(36)]
    _, dim = fixed_subspace(mat, QQ)
    return dim


def minus26_carrier():
    """The member of {L', L'^{-1}} with Killing signature -26, plus data."""
    data = conjugated_form()
    if data["full_sig"] == -26:
        return data["lie"], data
    if data["twisted_sig"] == -26:
        return data["twisted"], data
    raise AlgebraError("neither conjugated form has signature -26")


def gamma11() -> GradedDecomposition:
    """The Z4 x Z2^4 grading on the signature -26 symplectic carrier."""
    carrier, data = minus26_carrier()
    model = data["model"]
    group = FinAbGroup(0, (4, 2, 2, 2, 2))
    comps = {}
    for i in range(model.dim):
        comps.setdefault(model.tag_of(i), []).append(
            carrier.alg.basis_vector(i)
        )
    return GradedDecomposition(group=group, algebra=carrier.alg, components=comps)


def gamma11_on_split_model() -> GradedDecomposition:
    """Same degrees on the untwisted rational model (component-wise equal)."""
    model = assemble_e6()
    group = FinAbGroup(0, (4, 2, 2, 2, 2))
    comps = {}
    for i in range(model.dim):
        comps.setdefault(model.tag_of(i), []).append(
            model.lie.alg.basis_vector(i)
        )
    return GradedDecomposition(group=group, algebra=model.lie.alg, components=comps)


# ---------------------------------------------------------------------------
# the abstract group generated by {A1., A2., A3., A4., theta}


def _canonical_mod_sign(m):
    for row in m:
        for x in row:
            if x != GI_ZERO:
                if x.re < 0 or (x.re == 0 and x.im < 0):
                    return tuple(
                        tuple(-y for y in r) for r in m
                    )
                return tuple(tuple(r) for r in m)
    return tuple(tuple(r) for r in m)


def dot_group_order_data() -> dict:
    """Certify <A1., .., A4., theta> iso Z4 x Z2^4 by word enumeration."""
    fr = frame()
    words = {}
    for b1 in range(2):
        for b2 in range(2):
            for b3 in range(2):
                for a4 in range(4):
                    m = linalg.identity(8, QI)
                    for _ in range(b1):
                        m = linalg.mat_mul(m, fr.a[0], QI)
                    for _ in range(b2):
                        m = linalg.mat_mul(m, fr.a[1], QI)
                    for _ in range(b3):
                        m = linalg.mat_mul(m, fr.a[2], QI)
                    for _ in range(a4):
                        m = linalg.mat_mul(m, fr.a[3], QI)
                    words[(b1, b2, b3, a4)] = _canonical_mod_sign(m)
    distinct = len(set(words.values()))
    # pairwise commutation mod +-I
    commute = True
    for i in range(4):
        for j in range(i + 1, 4):
            ab = linalg.mat_mul(fr.a[i], fr.a[j], QI)
            ba = linalg.mat_mul(fr.a[j], fr.a[i], QI)
            if _canonical_mod_sign(ab) != _canonical_mod_sign(ba):
                commute = False
    # element orders mod +-I (theta doubles the count, each theta-word order 2 factor)
    order_le2 = 0
    for (b1, b2, b3, a4), _mat in words.items():
        if (2 * a4) % 4 == 0:
            order_le2 += 1
    return {
        "matrix_group_order": distinct,
        "with_theta_order": distinct * 2,
        "abelian": commute,
        "order_le2_with_theta": order_le2 * 2,
        "is_z4_x_z2_4": distinct == 32 and commute and order_le2 * 2 == 32,
    }
