"""Exact linear algebra over Q and Q(i).

Dense matrices are lists of row lists; sparse vectors are {index: scalar}
dicts and sparse matrices {row: {col: scalar}}.  All elimination routines use
lexicographic pivot selection so that every returned basis is deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import Field, QQ


# ---------------------------------------------------------------------------
# dense helpers


def zeros(n, m, field: Field):
    z = field.zero
    return [[z] * m for _ in range(n)]


def identity(n, field: Field):
    m = zeros(n, n, field)
    for i in range(n):
        m[i][i] = field.one
    return m


def mat_vec(m, v, field: Field):
    z = field.zero
    out = []
    for row in m:
        acc = z
        for a, b in zip(row, v):
            if a != z and b != z:
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(a, b, field: Field):
    z = field.zero
    nb = len(b[0])
    out = [[z] * nb for _ in range(len(a))]
    for i, arow in enumerate(a):
        orow = out[i]
        for k, aik in enumerate(arow):
            if aik == z:
                continue
            brow = b[k]
            for j in range(nb):
                if brow[j] != z:
                    orow[j] = orow[j] + aik * brow[j]
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(u, s):
    return [x * s for x in u]


def is_zero_vec(v, field: Field) -> bool:
    z = field.zero
    return all(x == z for x in v)


# ---------------------------------------------------------------------------
# echelon forms, kernels, solving


def rref(rows, field: Field):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column list).  Pivots are chosen
    left to right, first suitable row wins; this keeps output deterministic
    for any input order.
    """
    z = field.zero
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if m[i][c] != z:
                sel = i
                break
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = field.inv(m[r][c])
        if inv != field.one:
            m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != z:
                f = m[i][c]
                mr = m[r]
                m[i] = [a - f * b for a, b in zip(m[i], mr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rank(rows, field: Field) -> int:
    if not rows:
        return 0
    return len(rref(rows, field)[0])


def kernel(rows, ncols, field: Field):
    """Canonical basis of {v : rows @ v = 0}, itself in reduced echelon form."""
    if not rows:
        return [r[:] for r in identity(ncols, field)]
    red, pivots = rref(rows, field)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    z = field.zero
    basis = []
    for fc in free:
        v = [z] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    if not basis:
        return []
    out, _ = rref(basis, field)
    return out


def solve_in_rref(red, pivots, v, field: Field):
    """Coefficients of v in the span of rref rows, or None if outside."""
    z = field.zero
    coeffs = [v[c] for c in pivots]
    resid = list(v)
    for co, row in zip(coeffs, red):
        if co != z:
            resid = [a - co * b for a, b in zip(resid, row)]
    if any(x != z for x in resid):
        return None
    return coeffs


class SpanSolver:
    """Expresses vectors in a fixed (not necessarily echelon) basis."""

    def __init__(self, basis, field: Field):
        self.field = field
        self.basis = [list(b) for b in basis]
        n = len(self.basis)
        ncols = len(self.basis[0]) if n else 0
        aug = [list(b) + [field.zero] * n for b in self.basis]
        for i in range(n):
            aug[i][ncols + i] = field.one
        red, pivots = rref(aug, field)
        if len(red) != n or (pivots and pivots[-1] >= ncols):
            raise ValueError("basis vectors are linearly dependent")
        self.red = [row[:ncols] for row in red]
        self.transform = [row[ncols:] for row in red]
        self.pivots = pivots

    def coefficients(self, v):
        """Coefficients wrt the original basis, or None if v is outside."""
        f = self.field
        z = f.zero
        rc = [v[c] for c in self.pivots]
        resid = list(v)
        for co, row in zip(rc, self.red):
            if co != z:
                resid = [a - co * b for a, b in zip(resid, row)]
        if any(x != z for x in resid):
            return None
        n = len(self.basis)
        out = [z] * n
        for co, trow in zip(rc, self.transform):
            if co != z:
                for j in range(n):
                    if trow[j] != z:
                        out[j] = out[j] + co * trow[j]
        return out

    def contains(self, v) -> bool:
        return self.coefficients(v) is not None

    def residual(self, v):
        """v minus its span part; zero iff v is in the span (linear in v)."""
        f = self.field
        z = f.zero
        resid = list(v)
        for c, row in zip(self.pivots, self.red):
            co = v[c]
            if co != z:
                resid = [a - co * b for a, b in zip(resid, row)]
        return resid


def sp_flatten(m: dict, ncols: int) -> dict:
    """Sparse matrix {r: {c: v}} to sparse row-major vector {r*ncols+c: v}."""
    out = {}
    for r, row in m.items():
        base = r * ncols
        for c, v in row.items():
            out[base + c] = v
    return out


class SparseSpanExpander:
    """Like SpanSolver but takes sparse vectors; built for very sparse
    echelon rows (derivation spans), where the dense residual is wasteful."""

    def __init__(self, basis_dense, field: Field):
        self.field = field
        solver = SpanSolver(basis_dense, field)
        self.pivots = solver.pivots
        z = field.zero
        self.red_sparse = [
            {c: v for c, v in enumerate(row) if v != z} for row in solver.red
        ]
        self.transform = solver.transform
        self.nbasis = len(basis_dense)

    def coefficients(self, vec: dict):
        """Coefficients wrt the original basis of a sparse vector, or None."""
        f = self.field
        z = f.zero
        rc = [vec.get(p, z) for p in self.pivots]
        resid = {k: v for k, v in vec.items() if v != z}
        for co, row in zip(rc, self.red_sparse):
            if co != z:
                sp_add_into(resid, row, -co)
        if resid:
            return None
        out = [z] * self.nbasis
        for co, trow in zip(rc, self.transform):
            if co != z:
                for j2, tv in enumerate(trow):
                    if tv != z:
                        out[j2] = out[j2] + co * tv
        return out


def mat_inverse(a, field: Field):
    n = len(a)
    aug = [list(row) + irow for row, irow in zip(a, identity(n, field))]
    red, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)) or len(red) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def eigenspace(m, lam, field: Field):
    n = len(m)
    shifted = [list(row) for row in m]
    for i in range(n):
        shifted[i][i] = shifted[i][i] - lam
    return kernel(shifted, n, field)


def intersect_spans(basis_a, basis_b, field: Field):
    """Basis of span(basis_a) & span(basis_b)."""
    if not basis_a or not basis_b:
        return []
    ncols = len(basis_a[0])
    rows = []
    for col in range(ncols):
        rows.append([b[col] for b in basis_a] + [-b[col] for b in basis_b])
    na = len(basis_a)
    combos = kernel(rows, na + len(basis_b), field)
    out = []
    z = field.zero
    for c in combos:
        v = [z] * ncols
        for i in range(na):
            if c[i] != z:
                for col in range(ncols):
                    if basis_a[i][col] != z:
                        v[col] = v[col] + c[i] * basis_a[i][col]
        out.append(v)
    if not out:
        return []
    red, _ = rref(out, field)
    return red


# ---------------------------------------------------------------------------
# symmetric congruence diagonalization (Sylvester inertia) over Q


def congruence_inertia(m):
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix.

    Simultaneous row/column elimination; a zero diagonal pivot with a nonzero
    off-diagonal a_ij is repaired by adding row/col j into i, which makes the
    diagonal entry 2*a_ij != 0 over Q.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    npos = nneg = nzero = 0
    for k in range(n):
        if a[k][k] == 0:
            swap = None
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    swap = j
                    break
            if swap is None:
                pair = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    nzero += n - k
                    break
                i, j = pair
                for c in range(n):
                    a[i][c] += a[j][c]
                for r in range(n):
                    a[r][i] += a[r][j]
                swap = i
            if swap != k:
                a[k], a[swap] = a[swap], a[k]
                for r in range(n):
                    a[r][k], a[r][swap] = a[r][swap], a[r][k]
        p = a[k][k]
        if p > 0:
            npos += 1
        else:
            nneg += 1
        for r in range(k + 1, n):
            if a[r][k] != 0:
                f = a[r][k] / p
                ak = a[k]
                ar = a[r]
                for c in range(k, n):
                    ar[c] -= f * ak[c]
        for c in range(k + 1, n):
            if a[k][c] != 0:
                f = a[k][c] / p
                for r in range(k, n):
                    a[r][c] -= f * a[r][k]
    return npos, nneg, nzero


def congruence_diagonalize(m):
    """(diag, p) with p^T m p = diag(diag), p rational invertible.

    Same pivoting as congruence_inertia but the transform is kept; used for
    the graded Witt basis.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def colop_add(dst, src, f):
        # column dst += f * column src, applied to a (both sides) and p
        for r in range(n):
            a[r][dst] += f * a[r][src]
        for r in range(n):
            a[dst][r] += f * a[src][r]
        for r in range(n):
            p[r][dst] += f * p[r][src]

    def colop_swap(i, j):
        for r in range(n):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        a[i], a[j] = a[j], a[i]
        for r in range(n):
            p[r][i], p[r][j] = p[r][j], p[r][i]

    for k in range(n):
        if a[k][k] == 0:
            swap = None
            for j in range(k + 1, n):
                if a[j][j] != 0:
                    swap = j
                    break
            if swap is None:
                pair = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if a[i][j] != 0:
                            pair = (i, j)
                            break
                    if pair:
                        break
                if pair is None:
                    break
                i, j = pair
                colop_add(i, j, Fraction(1))
                swap = i
            if swap != k:
                colop_swap(k, swap)
        piv = a[k][k]
        if piv == 0:
            continue
        for c in range(k + 1, n):
            if a[k][c] != 0:
                colop_add(c, k, -a[k][c] / piv)
    return [a[i][i] for i in range(n)], p


# ---------------------------------------------------------------------------
# sparse dict vectors / matrices


def sp_add_into(acc: dict, v: dict, coef):
    for k, x in v.items():
        val = acc.get(k)
        val = coef * x if val is None else val + coef * x
        if val:
            acc[k] = val
        else:
            acc.pop(k, None)


def sp_matvec(m: dict, v: dict) -> dict:
    # m: {row: {col: val}} acting on column vector v
    out = {}
    for r, row in m.items():
        acc = None
        for c, x in row.items():
            y = v.get(c)
            if y is not None:
                acc = x * y if acc is None else acc + x * y
        if acc:
            out[r] = acc
    return out


def sp_mul(a: dict, b: dict) -> dict:
    # (a @ b)[i][j] = sum_k a[i][k] b[k][j]
    out = {}
    for i, arow in a.items():
        orow = {}
        for k, x in arow.items():
            brow = b.get(k)
            if not brow:
                continue
            for j, y in brow.items():
                val = orow.get(j)
                val = x * y if val is None else val + x * y
                if val:
                    orow[j] = val
                else:
                    orow.pop(j, None)
        if orow:
            out[i] = orow
    return out


def sp_commutator(a: dict, b: dict) -> dict:
    ab = sp_mul(a, b)
    ba = sp_mul(b, a)
    out = {}
    rows = set(ab) | set(ba)
    for r in rows:
        row = dict(ab.get(r, ()))
        for c, v in ba.get(r, {}).items():
            val = row.get(c)
            val = -v if val is None else val - v
            if val:
                row[c] = val
            else:
                row.pop(c, None)
        if row:
            out[r] = row
    return out


def sp_trace_product(a: dict, b: dict):
    # tr(a @ b), exact
    acc = None
    for i, arow in a.items():
        for k, x in arow.items():
            brow = b.get(k)
            if brow is None:
                continue
            y = brow.get(i)
            if y is not None:
                acc = x * y if acc is None else acc + x * y
    return acc


def dense_to_sparse(m, field: Field) -> dict:
    z = field.zero
    out = {}
    for i, row in enumerate(m):
        r = {j: x for j, x in enumerate(row) if x != z}
        if r:
            out[i] = r
    return out


def sparse_to_dense(m: dict, nrows, ncols, field: Field):
    out = zeros(nrows, ncols, field)
    for i, row in m.items():
        for j, x in row.items():
            out[i][j] = x
    return out


# ---------------------------------------------------------------------------
# integer fast machinery for big homogeneous rational systems


def _row_to_int(row: dict) -> dict:
    """Scale a sparse Fraction row to coprime integers."""
    if not row:
        return {}
    lcm = 1
    for v in row.values():
        d = v.denominator
        lcm = lcm * d // gcd(lcm, d)
    out = {}
    g = 0
    for k, v in row.items():
        iv = int(v * lcm)
        if iv:
            out[k] = iv
            g = gcd(g, abs(iv))
    if g > 1:
        for k in out:
            out[k] //= g
    return out


class IntKernelAccumulator:
    """Incremental kernel of a growing homogeneous system over Q.

    The basis of the current solution space is kept as primitive integer
    sparse vectors; each new constraint either is already satisfied or cuts
    the dimension by one.  A column index accelerates the dot products.
    """

    def __init__(self, nunknowns: int):
        self.n = nunknowns
        self.basis: dict[int, dict[int, int]] = {
            u: {u: 1} for u in range(nunknowns)
        }
        self.cols: dict[int, set[int]] = {u: {u} for u in range(nunknowns)}
        self._next_id = nunknowns
        self._seen: set[tuple] = set()

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def add_constraint(self, row: dict) -> bool:
        """Add one {unknown: Fraction|int} row; True if the dimension dropped."""
        introw = _row_to_int(
            {k: Fraction(v) for k, v in row.items() if v}
        )
        if not introw:
            return False
        key = tuple(sorted(introw.items()))
        if key in self._seen:
            return False
        self._seen.add(key)
        dots: dict[int, int] = {}
        for u, c in introw.items():
            ids = self.cols.get(u)
            if not ids:
                continue
            for vid in ids:
                d = dots.get(vid, 0) + c * self.basis[vid][u]
                dots[vid] = d
        hit = [(vid, d) for vid, d in dots.items() if d]
        if not hit:
            return False
        hit.sort()
        pid, pd = hit[0]
        pvec = self.basis.pop(pid)
        for u in pvec:
            self.cols[u].discard(pid)
        for vid, d in hit[1:]:
            vvec = self.basis[vid]
            newvec = {}
            for u, x in vvec.items():
                newvec[u] = pd * x
            for u, x in pvec.items():
                val = newvec.get(u, 0) - d * x
                if val:
                    newvec[u] = val
                else:
                    newvec.pop(u, None)
            g = 0
            for x in newvec.values():
                g = gcd(g, abs(x))
                if g == 1:
                    break
            if g > 1:
                newvec = {u: x // g for u, x in newvec.items()}
            for u in vvec:
                if u not in newvec:
                    self.cols[u].discard(vid)
            for u in newvec:
                if u not in vvec:
                    self.cols.setdefault(u, set()).add(vid)
            self.basis[vid] = newvec
        return True

    def kernel_basis(self):
        """Deterministic rational basis (reduced echelon) of the kernel."""
        vecs = []
        for vid in sorted(self.basis):
            v = [Fraction(0)] * self.n
            for u, x in self.basis[vid].items():
                v[u] = Fraction(x)
            vecs.append(v)
        if not vecs:
            return []
        red, _ = rref(vecs, QQ)
        return red


def clear_denominators(vec):
    """Scale a rational dense vector to a primitive integer vector."""
    lcm = 1
    for v in vec:
        d = Fraction(v).denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(Fraction(v) * lcm) for v in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints
