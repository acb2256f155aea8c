"""Sparse exact linear algebra over cyclotomic scalars.

Vectors and matrices are dicts keyed by index; stored entries are never
zero.  The solver is fraction-free (Bareiss) Gaussian elimination with
pivots chosen by sparsity count, so huge intermediate fractions never
appear.  Convolution products/inverses and algebra-element inversion
live here too: they are the substrate for antipodes, twist inverses and
section inverses.

An "algebra" argument below is any object with
    dim, mult(i, j) -> {k: scalar}, unit -> {k: scalar}
and optionally grading (list of nonneg ints per basis index).
A "coalgebra" argument needs
    dim, comult(i) -> {(j, k): scalar}, counit -> {i: scalar}.
"""

from __future__ import annotations

from math import gcd

from .scalars import CycScalar, scalar
from .errors import NoSolution, NotInvertible


# ---------------------------------------------------------------------------
# raw dict-vector helpers (shared across the package)

def v_add_into(acc: dict, other: dict, coef: CycScalar | None = None) -> dict:
    """acc += coef*other in place; prunes zeros; returns acc."""
    if coef is not None and coef.is_zero():
        return acc
    for k, v in other.items():
        w = v if coef is None else v * coef
        cur = acc.get(k)
        s = w if cur is None else cur + w
        if s.is_zero():
            acc.pop(k, None)
        else:
            acc[k] = s
    return acc


def v_scale(d: dict, c: CycScalar) -> dict:
    if c.is_zero():
        return {}
    if c.is_one():
        return dict(d)
    return {k: v * c for k, v in d.items()}


def v_eq(a: dict, b: dict) -> bool:
    if set(a) != set(b):
        return False
    return all(a[k] == b[k] for k in a)


def v_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        s = -v if cur is None else cur - v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


class SparseVec:
    """Sparse column vector over CycScalar."""

    __slots__ = ("dim", "entries")

    def __init__(self, dim: int, entries: dict | None = None):
        self.dim = dim
        self.entries = {}
        if entries:
            for k, v in entries.items():
                assert 0 <= k < dim
                if not v.is_zero():
                    self.entries[k] = v

    def __eq__(self, other):
        return (isinstance(other, SparseVec) and self.dim == other.dim
                and v_eq(self.entries, other.entries))

    def __repr__(self):
        return "SparseVec(%d, %r)" % (self.dim, self.entries)


class SparseMat:
    """Sparse matrix over CycScalar, entries keyed by (row, col)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                assert 0 <= i < rows and 0 <= j < cols
                if not v.is_zero():
                    self.entries[(i, j)] = v

    @staticmethod
    def identity(n: int) -> "SparseMat":
        one = scalar(1)
        return SparseMat(n, n, {(i, i): one for i in range(n)})

    def col(self, j: int) -> dict:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def cols_dict(self) -> list:
        out = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        cols = None
        for j, c in vec.items():
            if cols is None:
                cols = self.cols_dict()
            v_add_into(out, cols[j], c)
        return out

    def transpose(self) -> "SparseMat":
        return SparseMat(self.cols, self.rows,
                         {(j, i): v for (i, j), v in self.entries.items()})

    def __eq__(self, other):
        return (isinstance(other, SparseMat) and (self.rows, self.cols) ==
                (other.rows, other.cols) and v_eq(self.entries, other.entries))

    def __repr__(self):
        return "SparseMat(%dx%d, nnz=%d)" % (self.rows, self.cols, len(self.entries))


# ---------------------------------------------------------------------------
# elimination

def _clear_denominators(row: dict) -> dict:
    den = 1
    for v in row.values():
        if v.den != 1:
            den = den * v.den // gcd(den, v.den)
    if den == 1:
        return row
    c = scalar(den)
    return {k: v * c for k, v in row.items()}


def _divexact(a: CycScalar, piv: CycScalar) -> CycScalar:
    q = a * piv.inv()
    # Bareiss quotients are minors, hence cyclotomic integers
    assert q.den == 1, "fraction-free division produced a fraction"
    return q


def solve_linear(A: SparseMat, b: SparseVec) -> SparseVec:
    """Some exact x with A x = b; raises NoSolution if inconsistent.

    Unique solutions are returned deterministically; free variables are
    set to zero.
    """
    assert A.rows == b.dim
    n = A.cols
    RHS = n  # rhs column key
    rows = [dict() for _ in range(A.rows)]
    for (i, j), v in A.entries.items():
        rows[i][j] = v
    for i, v in b.entries.items():
        rows[i][RHS] = v
    rows = [_clear_denominators(r) for r in rows]
    # keep the rhs column out of pivot selection by eliminating on a view
    pivots = _bareiss_solve(rows, n)
    used = {pr for pr, _ in pivots}
    for ri, row in enumerate(rows):
        if ri not in used and row.get(RHS) is not None and set(row) == {RHS}:
            raise NoSolution("inconsistent linear system")
    x: dict = {}
    for pr, pc in reversed(pivots):
        row = rows[pr]
        acc = row.get(RHS, None)
        acc = acc if acc is not None else scalar(0)
        for c, v in row.items():
            if c in (pc, RHS):
                continue
            xv = x.get(c)
            if xv is not None:
                acc = acc - v * xv
        if not acc.is_zero():
            x[pc] = acc * row[pc].inv()
    return SparseVec(n, x)


def _bareiss_solve(rows, width):
    """Bareiss elimination that never pivots on the rhs column (key==width)."""
    pivots = []
    used = set()
    prev = scalar(1)
    while True:
        col_count: dict = {}
        for ri, row in enumerate(rows):
            if ri in used:
                continue
            for c in row:
                if c < width:
                    col_count[c] = col_count.get(c, 0) + 1
        best = None
        best_score = None
        for ri, row in enumerate(rows):
            if ri in used:
                continue
            rn = len(row)
            for c in row:
                if c >= width:
                    continue
                score = (rn - 1) * (col_count[c] - 1)
                if best_score is None or score < best_score or \
                        (score == best_score and (ri, c) < best):
                    best, best_score = (ri, c), score
        if best is None:
            return pivots
        pr, pc = best
        pval = rows[pr][pc]
        prow = rows[pr]
        for ri, row in enumerate(rows):
            if ri == pr or ri in used or not row:
                continue
            f = row.get(pc)
            new = {}
            if f is None:
                for k, v in row.items():
                    val = v * pval
                    new[k] = _divexact(val, prev) if not prev.is_one() else val
            else:
                for k in set(row) | set(prow):
                    a = row.get(k)
                    bb = prow.get(k)
                    if a is not None and bb is not None:
                        val = pval * a - f * bb
                    elif a is not None:
                        val = pval * a
                    else:
                        val = -(f * bb)
                    if not val.is_zero():
                        new[k] = _divexact(val, prev) if not prev.is_one() else val
                new.pop(pc, None)
            rows[ri] = new
        used.add(pr)
        pivots.append((pr, pc))
        prev = pval


def nullspace(A: SparseMat) -> list:
    """Basis of ker A as dict-vectors via reduced row echelon form."""
    rows = [dict() for _ in range(A.rows)]
    for (i, j), v in A.entries.items():
        rows[i][j] = v
    piv_of_col: dict = {}
    reduced: list = []
    for row in rows:
        row = dict(row)
        row = _reduce_row(row, piv_of_col, reduced)
        if row:
            lead = min(row)
            c = row[lead].inv()
            row = {k: v * c for k, v in row.items()}
            # back-substitute into earlier rows
            for rr in reduced:
                f = rr.get(lead)
                if f is not None:
                    for k, v in row.items():
                        cur = rr.get(k)
                        s = (-v * f) if cur is None else cur - v * f
                        if s.is_zero():
                            rr.pop(k, None)
                        else:
                            rr[k] = s
            piv_of_col[lead] = len(reduced)
            reduced.append(row)
    basis = []
    pivcols = set(piv_of_col)
    one = scalar(1)
    for j in range(A.cols):
        if j in pivcols:
            continue
        vec = {j: one}
        for row in reduced:
            f = row.get(j)
            if f is not None:
                lead = min(row)
                vec[lead] = -f
        basis.append(vec)
    return basis


def _reduce_row(row: dict, piv_of_col: dict, reduced: list) -> dict:
    changed = True
    while changed:
        changed = False
        for c in sorted(row):
            ri = piv_of_col.get(c)
            if ri is not None:
                f = row[c]
                v_add_into(row, reduced[ri], -f)
                changed = True
                break
    return row


class Echelon:
    """Growing reduced row echelon form over the field.

    add(vec) inserts a vector; reduce(vec) returns its residue modulo
    the current row space.  Used for quotient-space normal forms.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: list = []
        self.piv_of_col: dict = {}

    def reduce(self, vec: dict) -> dict:
        out = dict(vec)
        while True:
            hit = None
            for c in out:
                if c in self.piv_of_col:
                    hit = c
                    break
            if hit is None:
                return out
            v_add_into(out, self.rows[self.piv_of_col[hit]], -out[hit])

    def add(self, vec: dict) -> bool:
        """Insert; returns True if the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        lead = min(res)
        c = res[lead].inv()
        row = {k: v * c for k, v in res.items()}
        for rr in self.rows:
            f = rr.get(lead)
            if f is not None:
                v_add_into(rr, row, -f)
        self.piv_of_col[lead] = len(self.rows)
        self.rows.append(row)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def mat_mul_sparse(A: SparseMat, B: SparseMat) -> SparseMat:
    assert A.cols == B.rows
    bcols = B.cols_dict()
    entries: dict = {}
    acols = A.cols_dict()
    for j in range(B.cols):
        out: dict = {}
        for k, v in bcols[j].items():
            v_add_into(out, acols[k], v)
        for i, v in out.items():
            entries[(i, j)] = v
    return SparseMat(A.rows, B.cols, entries)


def mat_inverse(M: SparseMat) -> SparseMat:
    """Exact inverse of a square sparse matrix; NotInvertible if singular."""
    assert M.rows == M.cols
    n = M.rows
    out = {}
    for j in range(n):
        e = SparseVec(n, {j: scalar(1)})
        try:
            x = solve_linear(M, e)
        except NoSolution:
            raise NotInvertible("matrix is singular")
        for i, v in x.entries.items():
            out[(i, j)] = v
    inv = SparseMat(n, n, out)
    # re-substitution check: M @ inv = id
    for j in range(n):
        col = inv.col(j)
        img = M.apply(col)
        if not v_eq(img, {j: scalar(1)}):
            raise NotInvertible("matrix is singular")
    return inv


# ---------------------------------------------------------------------------
# algebra-element operations
#
# An algebra object provides basis() (iterable of hashable keys),
# mult(i, j) -> dict, unit() -> dict, degree(key) -> int or None, and
# optionally max_degree() when graded.

def algebra_mul(alg, u: dict, v: dict) -> dict:
    """Product of two dict-elements in a structure-constant algebra."""
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            c = a * b
            if not c.is_zero():
                v_add_into(out, alg.mult(i, j), c)
    return out


def algebra_pow(alg, u: dict, n: int) -> dict:
    out = dict(alg.unit())
    for _ in range(n):
        out = algebra_mul(alg, out, u)
    return out


def algebra_invert(alg, a: dict) -> dict:
    """Two-sided inverse of a in the algebra, or NotInvertible.

    Fast path: with a grading, a = a0 + n with n in positive degree uses
    a finite Neumann series once a0 is inverted inside the degree-zero
    subalgebra.  Falls back to a dense solve on the left-multiplication
    matrix.  Results are always re-checked on both sides.
    """
    if not a:
        raise NotInvertible("zero is not invertible")
    graded = all(alg.degree(k) is not None for k in a)
    if graded:
        a0 = {k: v for k, v in a.items() if alg.degree(k) == 0}
        pos = {k: v for k, v in a.items() if alg.degree(k) > 0}
        if a0:
            inv0 = _invert_degree_zero(alg, a0)
            if inv0 is not None:
                if not pos:
                    return inv0
                m = algebra_mul(alg, inv0, pos)  # positive degree, nilpotent
                out = dict(alg.unit())
                term = dict(alg.unit())
                maxdeg = alg.max_degree()
                for _ in range(maxdeg + 1):
                    term = algebra_mul(alg, {k: -v for k, v in m.items()}, term)
                    if not term:
                        break
                    v_add_into(out, term)
                out = algebra_mul(alg, out, inv0)
                _check_inverse(alg, a, out)
                return out
        else:
            raise NotInvertible("no degree-zero part")
    x = _solve_inverse_dense(alg, a)
    _check_inverse(alg, a, x)
    return x


def _invert_degree_zero(alg, a0: dict):
    idx = [k for k in alg.basis() if alg.degree(k) == 0]
    pos_of = {k: p for p, k in enumerate(idx)}
    n = len(idx)
    entries = {}
    for p, j in enumerate(idx):
        img: dict = {}
        for i, c in a0.items():
            v_add_into(img, alg.mult(i, j), c)
        for i, v in img.items():
            assert alg.degree(i) == 0, "degree-zero block is not a subalgebra"
            entries[(pos_of[i], p)] = v
    unit = alg.unit()
    rhs = SparseVec(n, {pos_of[k]: v for k, v in unit.items()})
    try:
        x = solve_linear(SparseMat(n, n, entries), rhs)
    except NoSolution:
        return None
    cand = {idx[p]: v for p, v in x.entries.items()}
    if not v_eq(algebra_mul(alg, a0, cand), dict(unit)):
        return None
    return cand


def _solve_inverse_dense(alg, a: dict) -> dict:
    keys = list(alg.basis())
    pos_of = {k: p for p, k in enumerate(keys)}
    n = len(keys)
    entries = {}
    for p, j in enumerate(keys):
        img: dict = {}
        for i, c in a.items():
            v_add_into(img, alg.mult(i, j), c)
        for i, v in img.items():
            entries[(pos_of[i], p)] = v
    rhs = SparseVec(n, {pos_of[k]: v for k, v in alg.unit().items()})
    try:
        x = solve_linear(SparseMat(n, n, entries), rhs)
    except NoSolution:
        raise NotInvertible("element has no right inverse")
    return {keys[p]: v for p, v in x.entries.items()}


def _check_inverse(alg, a: dict, b: dict):
    unit = dict(alg.unit())
    if not (v_eq(algebra_mul(alg, a, b), unit) and v_eq(algebra_mul(alg, b, a), unit)):
        raise NotInvertible("element has no two-sided inverse")


# ---------------------------------------------------------------------------
# convolution algebra of maps C -> A

def convolution_product(f: SparseMat, g: SparseMat, C, A) -> SparseMat:
    """(f * g)(c) = m_A (f tensor g) Delta_C(c), computed exactly."""
    assert f.cols == C.dim and g.cols == C.dim
    assert f.rows == A.dim and g.rows == A.dim
    fc, gc = f.cols_dict(), g.cols_dict()
    entries = {}
    for c in range(C.dim):
        acc: dict = {}
        for (j, k), d in C.comult(c).items():
            u, v = fc[j], gc[k]
            if u and v:
                v_add_into(acc, algebra_mul(A, u, v), d)
        for i, val in acc.items():
            entries[(i, c)] = val
    return SparseMat(A.dim, C.dim, entries)


def convolution_unit(C, A) -> SparseMat:
    entries = {}
    unit = A.unit()
    for c, e in C.counit().items():
        for i, u in unit.items():
            val = u * e
            if not val.is_zero():
                entries[(i, c)] = val
    return SparseMat(A.dim, C.dim, entries)


def convolution_inverse(f: SparseMat, C, A) -> SparseMat:
    """g with f*g = g*f = unit in Hom(C, A), or NotInvertible.

    With a coalgebra grading on C this is solved degree by degree; the
    lowest degree reduces to algebra inversion when the (0, n) component
    of each coproduct is a single degree-zero basis element (pointed
    case), otherwise to a blockwise linear solve.
    """
    cog = getattr(C, "cograding", None)
    grading = cog() if cog is not None else None
    if grading is not None and any(g > 0 for g in grading):
        g = _conv_inverse_graded(f, C, A, grading)
    else:
        g = _conv_inverse_solve(f, C, A)
    uni = convolution_unit(C, A)
    if convolution_product(f, g, C, A) != uni or convolution_product(g, f, C, A) != uni:
        raise NotInvertible("map is not two-sided convolution invertible")
    return g


def _conv_inverse_solve(f: SparseMat, C, A) -> SparseMat:
    # unknown matrix G, equations sum f(c1) G(c2) = eps(c) 1 for all c
    nC, nA = C.dim, A.dim
    fc = f.cols_dict()
    rows_eq: dict = {}  # (c, i) -> {(k_col, a_row): coeff}
    for c in range(nC):
        for (j, k), d in C.comult(c).items():
            u = fc[j]
            for uu, cu in u.items():
                # f(e_j) * G(e_k): need mult of basis uu with each basis of G col k
                for m in range(nA):
                    prod = A.mult(uu, m)
                    if not prod:
                        continue
                    coef = cu * d
                    for i, pv in prod.items():
                        key = (c, i)
                        rows_eq.setdefault(key, {})
                        cur = rows_eq[key].get((k, m))
                        val = pv * coef
                        s = val if cur is None else cur + val
                        if s.is_zero():
                            rows_eq[key].pop((k, m), None)
                        else:
                            rows_eq[key][(k, m)] = s
    # flatten
    colix = {}
    for k in range(nC):
        for m in range(nA):
            colix[(k, m)] = k * nA + m
    entries = {}
    rowix = {}
    for key, row in rows_eq.items():
        r = rowix.setdefault(key, len(rowix))
        for km, v in row.items():
            entries[(r, colix[km])] = v
    uni = convolution_unit(C, A)
    rhs_entries = {}
    for c in range(nC):
        for i in range(nA):
            val = uni.entries.get((i, c))
            if val is not None:
                key = (c, i)
                r = rowix.setdefault(key, len(rowix))
                rhs_entries[r] = val
    M = SparseMat(len(rowix), nC * nA, entries)
    try:
        x = solve_linear(M, SparseVec(len(rowix), rhs_entries))
    except NoSolution:
        raise NotInvertible("no convolution inverse")
    out = {}
    for flat, v in x.entries.items():
        k, m = divmod(flat, nA)
        out[(m, k)] = v
    return SparseMat(nA, nC, out)


def _conv_inverse_graded(f: SparseMat, C, A, grading) -> SparseMat:
    nA = A.dim
    fc = f.cols_dict()
    maxdeg = max(grading)
    by_deg = [[] for _ in range(maxdeg + 1)]
    for c in range(C.dim):
        by_deg[grading[c]].append(c)
    gcols = [None] * C.dim

    # degree 0: restricted subcoalgebra, solve there
    zero_idx = by_deg[0]
    sub = _SubCoalgebra(C, zero_idx)
    f0 = SparseMat(nA, len(zero_idx),
                   {(i, p): v for p, c in enumerate(zero_idx)
                    for i, v in fc[c].items()})
    g0 = _conv_inverse_solve(f0, sub, A)
    g0c = g0.cols_dict()
    for p, c in enumerate(zero_idx):
        gcols[c] = g0c[p]

    uni = convolution_unit(C, A)
    for deg in range(1, maxdeg + 1):
        pending = list(by_deg[deg])
        # try the pointed fast path per element; collect the stubborn ones
        block = []
        for c in pending:
            res = _pointed_step(f, fc, gcols, C, A, c, deg, grading, uni)
            if res is None:
                block.append(c)
            else:
                gcols[c] = res
        if block:
            _block_step(fc, gcols, C, A, block, deg, grading, uni)
    entries = {}
    for c in range(C.dim):
        for i, v in (gcols[c] or {}).items():
            entries[(i, c)] = v
    return SparseMat(nA, C.dim, entries)


class _SubCoalgebra:
    def __init__(self, C, idx):
        self.dim = len(idx)
        self._C = C
        self._idx = idx
        self._pos = {c: p for p, c in enumerate(idx)}

    def comult(self, p):
        out = {}
        for (j, k), v in self._C.comult(self._idx[p]).items():
            pj, pk = self._pos.get(j), self._pos.get(k)
            assert pj is not None and pk is not None, \
                "degree-zero block is not a subcoalgebra"
            out[(pj, pk)] = v
        return out

    def counit(self):
        full = self._C.counit()
        return {p: full[c] for p, c in enumerate(self._idx) if c in full}


def _pointed_step(f, fc, gcols, C, A, c, deg, grading, uni):
    """Solve f*g = unit at basis c when the (0, deg) part of Delta(c) is
    a single term f(group-like-ish) tensor c itself."""
    lead = None
    rest = []
    for (j, k), d in C.comult(c).items():
        if grading[j] == 0 and grading[k] == deg:
            if k != c or lead is not None:
                return None
            lead = (j, d)
        else:
            rest.append((j, k, d))
    if lead is None:
        return None
    j0, d0 = lead
    u = fc[j0]
    try:
        uinv = algebra_invert(A, u)
    except NotInvertible:
        return None
    acc = {i: v for (i, cc), v in uni.entries.items() if cc == c}
    for (j, k, d) in rest:
        gk = gcols[k]
        if gk is None:
            return None  # needs same-degree value not yet known
        if fc[j] and gk:
            v_add_into(acc, algebra_mul(A, fc[j], gk), -d)
    return algebra_mul(A, uinv, v_scale(acc, d0.inv()))


def _block_step(fc, gcols, C, A, block, deg, grading, uni):
    """Blockwise linear solve for all degree `deg` columns at once."""
    nA = A.dim
    pos = {c: p for p, c in enumerate(block)}
    colix = {}
    for c in block:
        for m in range(nA):
            colix[(c, m)] = pos[c] * nA + m
    rows_eq: dict = {}
    rhs: dict = {}
    rowix: dict = {}

    def rid(key):
        return rowix.setdefault(key, len(rowix))

    for c in block:
        acc_known: dict = {i: v for (i, cc), v in uni.entries.items() if cc == c}
        for (j, k), d in C.comult(c).items():
            if k in pos and grading[j] == 0:
                u = fc[j]
                for uu, cu in u.items():
                    for m in range(nA):
                        prod = A.mult(uu, m)
                        if not prod:
                            continue
                        coef = cu * d
                        for i, pv in prod.items():
                            r = rid((c, i))
                            row = rows_eq.setdefault(r, {})
                            key = colix[(k, m)]
                            cur = row.get(key)
                            val = pv * coef
                            s = val if cur is None else cur + val
                            if s.is_zero():
                                row.pop(key, None)
                            else:
                                row[key] = s
            else:
                gk = gcols[k]
                assert gk is not None, "coproduct not triangular for grading"
                if fc[j] and gk:
                    v_add_into(acc_known, algebra_mul(A, fc[j], gk), -d)
        for i, v in acc_known.items():
            rhs[rid((c, i))] = v
    entries = {}
    for r, row in rows_eq.items():
        for ccol, v in row.items():
            entries[(r, ccol)] = v
    nrows = len(rowix)
    try:
        x = solve_linear(SparseMat(nrows, len(block) * nA, entries),
                         SparseVec(nrows, rhs))
    except NoSolution:
        raise NotInvertible("no convolution inverse (graded block)")
    for c in block:
        col = {}
        for m in range(nA):
            v = x.entries.get(pos[c] * nA + m)
            if v is not None:
                col[m] = v
        gcols[c] = col
