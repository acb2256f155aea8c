"""Nichols algebras built degreewise from quantum symmetrizer kernels.

Degree n of B(V) is V^{tensor n} / ker(S_n) where S_n sums the braiding
lifts of all permutations along reduced words.  The construction keeps,
per degree, an echelonized kernel plus a set of basis words, so products
and the braided coproduct are exact normal-form computations.  The
builder stops when a graded component vanishes and reports truncation
explicitly when it does not.
"""

from __future__ import annotations

import itertools

from ..scalars import CycScalar, scalar
from ..hopf import HopfData
from ..yd import YDModuleData, braiding, DiagonalRealization
from ..linalg import Echelon, v_add_into, v_eq
from ..errors import ConstructionError
from ..groups import perm_sign, transpositions


class BraidedHopfData:
    """A graded braided Hopf algebra in YD over `base`, with structure
    constants on a monomial basis.  Degree one is the input module."""

    def __init__(self, base: HopfData, labels, degrees, mult, comult,
                 counit, action, coaction, module: YDModuleData,
                 status: str, top_degree: int):
        self.base = base
        self.dim = len(labels)
        self.labels = list(labels)
        self.degrees = list(degrees)
        self._mult = mult
        self._comult = comult
        self._counit = dict(counit)
        self.action = action      # (h, r) -> {r: scalar}
        self.coaction = coaction  # r -> {(h, r): scalar}
        self.module = module
        self.status = status      # 'complete' | 'truncated'
        self.top_degree = top_degree
        self.delta_graded = True  # twisting the coproduct clears this
        self.braided_antipode = None
        self.aux = {}

    # algebra/coalgebra protocol (same shape as HopfData)

    def basis(self):
        return range(self.dim)

    def degree(self, i):
        return self.degrees[i]

    def max_degree(self):
        return self.top_degree

    def cograding(self):
        return self.degrees if self.delta_graded else None

    def mult(self, i, j) -> dict:
        return self._mult.get((i, j), {})

    def comult(self, i) -> dict:
        return self._comult.get(i, {})

    def unit(self) -> dict:
        return {0: scalar(1)}

    def counit(self) -> dict:
        return self._counit

    def product(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                c = a * b
                if not c.is_zero():
                    v_add_into(out, self.mult(i, j), c)
        return out

    def coproduct(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            v_add_into(out, self.comult(i), c)
        return out

    def counit_of(self, u: dict) -> CycScalar:
        acc = scalar(0)
        for i, c in u.items():
            e = self._counit.get(i)
            if e is not None:
                acc = acc + e * c
        return acc

    def act(self, h: int, i: int) -> dict:
        return self.action.get((h, i), {})

    def act_elem(self, helem: dict, u: dict) -> dict:
        out: dict = {}
        for h, ch in helem.items():
            for i, ci in u.items():
                c = ch * ci
                if not c.is_zero():
                    v_add_into(out, self.act(h, i), c)
        return out

    def coact(self, u: dict) -> dict:
        out: dict = {}
        for i, c in u.items():
            v_add_into(out, self.coaction.get(i, {}), c)
        return out

    def graded_dims(self):
        out = [0] * (self.top_degree + 1)
        for d in self.degrees:
            out[d] += 1
        return out

    def antipode_map(self):
        """Braided antipode columns: graded recursion when the coproduct
        is graded, otherwise a direct convolution-inverse solve."""
        if self.braided_antipode is None:
            if self.delta_graded:
                cols = {0: {0: scalar(1)}}
                order = sorted(range(self.dim), key=lambda i: self.degrees[i])
                for i in order:
                    if self.degrees[i] == 0:
                        continue
                    acc: dict = {}
                    for (a, b), c in self.comult(i).items():
                        if a == 0 or b == 0:
                            continue
                        # S(r1) r2 for middle terms
                        for sa, cs in cols[a].items():
                            v_add_into(acc, self.mult(sa, b), c * cs)
                    col = {i: scalar(-1)}
                    v_add_into(col, {k: -v for k, v in acc.items()})
                    cols[i] = col
                self.braided_antipode = cols
            else:
                from ..linalg import convolution_inverse, SparseMat
                S = convolution_inverse(SparseMat.identity(self.dim), self, self)
                self.braided_antipode = S.cols_dict()
        return self.braided_antipode

    def antipode_of(self, u: dict) -> dict:
        cols = self.antipode_map()
        out: dict = {}
        for i, c in u.items():
            v_add_into(out, cols[i], c)
        return out

    def __repr__(self):
        return "BraidedHopfData(dim=%d, degrees=%s, %s)" % (
            self.dim, self.graded_dims(), self.status)


# ---------------------------------------------------------------------------
# module builders

def diagonal_module(realization: DiagonalRealization) -> YDModuleData:
    return realization.module()


def yd_pair_module(H: HopfData, g_index: int, chi_values: list,
                   label: str = "x") -> YDModuleData:
    """The one-dimensional module k_g^chi: coaction x -> g tensor x,
    action h.x = chi(h) x."""
    action = {}
    for h in range(H.dim):
        v = chi_values[h]
        if not v.is_zero():
            action[(h, 0)] = {0: v}
    coaction = {0: {(g_index, 0): scalar(1)}}
    return YDModuleData(H, 1, action, coaction, [label])


def transposition_module(H_functions: HopfData) -> YDModuleData:
    """The transposition conjugacy-class module over k^{S_n}:
    d_tau . y_eta = [tau == eta] y_eta and
    y_eta -> sum_w sign(w) d_w tensor y_{w^-1 eta w}."""
    G = H_functions.aux.get("group")
    assert G is not None and G.perms is not None, "needs a symmetric group function algebra"
    X = transpositions(G)
    pos = {g: i for i, g in enumerate(X)}
    one = scalar(1)
    action = {}
    coaction = {}
    for i, eta in enumerate(X):
        action[(eta, i)] = {i: one}
        co = {}
        for w in range(G.n):
            conj = G.conjugate(G.inv[w], eta)  # w^{-1} eta w
            co[(w, pos[conj])] = scalar(perm_sign(G.perms[w]))
        coaction[i] = co
    labels = ["y_%s" % G.labels[eta] for eta in X]
    return YDModuleData(H_functions, len(X), action, coaction, labels)


# ---------------------------------------------------------------------------
# symmetrizer machinery (words are tuples of module indices)

def _braiding_table(V: YDModuleData) -> dict:
    """c(i tensor j) = sum coef (a tensor b) as {(i,j): {(a,b): coef}}."""
    c = braiding(V)
    d = V.dim
    out: dict = {}
    for (r, col), v in c.entries.items():
        i, j = divmod(col, d)
        a, b = divmod(r, d)
        out.setdefault((i, j), {})[(a, b)] = v
    return out


def _apply_c(vec: dict, pos: int, ctab: dict) -> dict:
    """Apply the braiding at positions (pos, pos+1) to a word vector."""
    out: dict = {}
    for w, coef in vec.items():
        comp = ctab.get((w[pos], w[pos + 1]))
        if not comp:
            continue
        for (a, b), v in comp.items():
            ww = w[:pos] + (a, b) + w[pos + 2:]
            c = coef * v
            cur = out.get(ww)
            s = c if cur is None else cur + c
            if s.is_zero():
                out.pop(ww, None)
            else:
                out[ww] = s
    return out


def _symmetrizer_cols(n: int, words, ctab: dict) -> dict:
    """Columns of S_n = sum over permutations of braiding lifts.

    BFS over the weak order: T_{p s_i} = T_p composed after c_i whenever
    the length goes up, so each lift uses one reduced word (any choice
    agrees, by the braid equation)."""
    perms = {tuple(range(n)): {w: {w: scalar(1)} for w in words}}
    total = {w: {w: scalar(1)} for w in words}
    frontier = [tuple(range(n))]
    seen = {tuple(range(n))}
    while frontier:
        nxt = []
        for p in frontier:
            base_cols = perms[p]
            for i in range(n - 1):
                if p[i] < p[i + 1]:  # length increases
                    q = list(p)
                    q[i], q[i + 1] = q[i + 1], q[i]
                    q = tuple(q)
                    if q in seen:
                        continue
                    qcols = {w: _apply_c(vec, i, ctab)
                             for w, vec in base_cols.items()}
                    perms[q] = qcols
                    seen.add(q)
                    nxt.append(q)
                    for w, vec in qcols.items():
                        v_add_into(total[w], vec)
        frontier = nxt
    return total


def nichols_algebra(V: YDModuleData, max_degree: int = 12) -> BraidedHopfData:
    """Build B(V) degreewise from quantum symmetrizer kernels.

    Stops when a graded component vanishes; otherwise stops at
    max_degree with status 'truncated' (never silently).
    """
    H = V.base
    theta = V.dim
    ctab = _braiding_table(V)

    kernels = {0: Echelon(1), 1: Echelon(theta)}
    basis_words = {0: [()], 1: [(i,) for i in range(theta)]}
    top = max_degree
    status = "truncated"
    for n in range(2, max_degree + 1):
        words = list(itertools.product(range(theta), repeat=n))
        sym = _symmetrizer_cols(n, words, ctab)
        ker = Echelon(0)
        # kernel of the symmetrizer: eliminate [S_n(w) | w] pairs
        ker = _kernel_echelon(words, sym)
        bw = [w for w in words if w not in ker.piv_of_col]
        kernels[n] = ker
        basis_words[n] = bw
        if not bw:
            top = n - 1
            status = "complete"
            break
    else:
        top = max_degree

    # global index
    labels = []
    degrees = []
    index = {}
    for n in range(top + 1):
        for w in basis_words[n]:
            index[w] = len(labels)
            labels.append(_word_label(V, w))
            degrees.append(n)
    dim = len(labels)

    def nf(vec: dict, n: int) -> dict:
        """Normal form of a word vector of degree n, in basis indices."""
        if n > top:
            if status == "complete":
                return {}
            raise ConstructionError("product exceeds computed degree %d" % top)
        red = kernels[n].reduce(vec) if n >= 2 else vec
        return {index[w]: c for w, c in red.items()}

    mult: dict = {}
    for i, w1 in enumerate(_all_words(basis_words, top)):
        d1 = len(w1)
        for w2 in _all_words(basis_words, top):
            d2 = len(w2)
            if d1 + d2 > top and status == "truncated":
                continue
            prod = nf({w1 + w2: scalar(1)}, d1 + d2) if d1 + d2 <= top else {}
            if prod:
                mult[(index[w1], index[w2])] = prod

    comult: dict = {}
    for w in _all_words(basis_words, top):
        n = len(w)
        parts = _braided_coproduct_word(w, ctab)
        out: dict = {}
        for (w1, w2), c in parts.items():
            left = nf({w1: scalar(1)}, len(w1))
            right = nf({w2: scalar(1)}, len(w2))
            for a, ca in left.items():
                for b, cb in right.items():
                    key = (a, b)
                    add = c * ca * cb
                    cur = out.get(key)
                    s = add if cur is None else cur + add
                    if s.is_zero():
                        out.pop(key, None)
                    else:
                        out[key] = s
        comult[index[w]] = out

    counit = {index[()]: scalar(1)}

    action: dict = {}
    coaction: dict = {}
    one = scalar(1)
    for w in _all_words(basis_words, top):
        n = len(w)
        i = index[w]
        # coaction: product of letter coactions, H parts multiplied
        co = {(u, ()): c for u, c in H.unit().items()}
        for letter in w:
            nco: dict = {}
            for (hu, wpart), c in co.items():
                for (h2, v0), c2 in V.coaction.get(letter, {}).items():
                    for hk, ch in H.mult(hu, h2).items():
                        key = (hk, wpart + (v0,))
                        add = c * c2 * ch
                        cur = nco.get(key)
                        s = add if cur is None else cur + add
                        if s.is_zero():
                            nco.pop(key, None)
                        else:
                            nco[key] = s
            co = nco
        coa: dict = {}
        for (hk, word), c in co.items():
            for j, cj in nf({word: one}, n).items():
                key = (hk, j)
                add = c * cj
                cur = coa.get(key)
                s = add if cur is None else cur + add
                if s.is_zero():
                    coa.pop(key, None)
                else:
                    coa[key] = s
        coaction[i] = coa
        # action: iterated coproduct of h across letters
        for h in range(H.dim):
            if n == 0:
                e = H.counit().get(h)
                if e is not None and not e.is_zero():
                    action[(h, i)] = {i: e}
                continue
            dh = H.coproduct_iter({h: one}, n - 1)
            acc: dict = {}
            for hkey, c in dh.items():
                vec = {(): c}
                dead = False
                for s_pos, letter in enumerate(w):
                    comp = V.act(hkey[s_pos], letter)
                    if not comp:
                        dead = True
                        break
                    nvec: dict = {}
                    for wpart, cc in vec.items():
                        for v0, cv in comp.items():
                            key = wpart + (v0,)
                            add = cc * cv
                            cur = nvec.get(key)
                            s = add if cur is None else cur + add
                            if s.is_zero():
                                nvec.pop(key, None)
                            else:
                                nvec[key] = s
                    vec = nvec
                if dead:
                    continue
                v_add_into(acc, vec)
            img = nf(acc, n)
            if img:
                action[(h, i)] = img

    R = BraidedHopfData(H, labels, degrees, mult, comult, counit,
                        action, coaction, V, status, top)
    R.aux["basis_words"] = {n: list(basis_words[n]) for n in range(top + 1)}
    R.aux["word_index"] = index
    return R


def _all_words(basis_words, top):
    for n in range(top + 1):
        for w in basis_words[n]:
            yield w


def _word_label(V, w):
    if not w:
        return "1"
    return ".".join(V.labels[i] for i in w)


def _kernel_echelon(words, sym_cols) -> Echelon:
    """Echelonized kernel of the symmetrizer on the span of `words`:
    vectors v with sum_w v_w S(w) = 0, found by eliminating the columns
    with an augmented identity part."""
    ker = Echelon(0)
    # Gaussian elimination on the transposed system with augmented identity
    rows = []
    for w in words:
        aug = {("img", u): c for u, c in sym_cols[w].items()}
        aug[("id", w)] = scalar(1)
        rows.append(aug)
    piv_of: dict = {}
    reduced: list = []
    for row in rows:
        row = dict(row)
        while True:
            hit = None
            for key in row:
                if key[0] == "img" and key in piv_of:
                    hit = key
                    break
            if hit is None:
                break
            v_add_into(row, reduced[piv_of[hit]], -row[hit])
        lead = None
        for key in sorted(k for k in row if k[0] == "img"):
            lead = key
            break
        if lead is None:
            # pure identity part: kernel vector
            ker.add({key[1]: v for key, v in row.items()})
            continue
        c = row[lead].inv()
        row = {k: v * c for k, v in row.items()}
        piv_of[lead] = len(reduced)
        reduced.append(row)
    return ker


def _braided_coproduct_word(w: tuple, ctab: dict) -> dict:
    """Coproduct of a word in T(V) tensor T(V): product of the letter
    coproducts x -> x tensor 1 + 1 tensor x in the braided square."""
    cur = {((), ()): scalar(1)}
    for letter in w:
        nxt: dict = {}
        for (w1, w2), c in cur.items():
            # term (w1, w2) * (letter, ()): c_{|w2|,1} braids w2 past the letter
            vec = {w2 + (letter,): c}
            for pos in range(len(w2) - 1, -1, -1):
                vec = _apply_c(vec, pos, ctab)
            for moved_word, cc in vec.items():
                key = (w1 + (moved_word[0],), moved_word[1:])
                cur2 = nxt.get(key)
                s = cc if cur2 is None else cur2 + cc
                if s.is_zero():
                    nxt.pop(key, None)
                else:
                    nxt[key] = s
            # term (w1, w2) * ((), letter): plain append on the right
            key = (w1, w2 + (letter,))
            cur2 = nxt.get(key)
            s = c if cur2 is None else cur2 + c
            if s.is_zero():
                nxt.pop(key, None)
            else:
                nxt[key] = s
        cur = nxt
    return cur


def rebase(R: BraidedHopfData, new_vectors: list, new_labels: list) -> BraidedHopfData:
    """Express R on a new basis given as dict-vectors in the old basis.

    The change of basis must be degree-preserving and invertible.
    """
    from ..linalg import SparseMat, mat_inverse
    n = R.dim
    assert len(new_vectors) == n
    P = SparseMat(n, n, {(i, j): c for j, vec in enumerate(new_vectors)
                         for i, c in vec.items()})
    Pinv = mat_inverse(P)
    pc = P.cols_dict()
    pic = Pinv.cols_dict()

    def to_new(vec: dict) -> dict:
        out: dict = {}
        for i, c in vec.items():
            v_add_into(out, pic[i], c)
        return out

    degrees = []
    for j, vec in enumerate(new_vectors):
        degs = {R.degrees[i] for i in vec}
        assert len(degs) == 1, "new basis vector %d not homogeneous" % j
        degrees.append(degs.pop())

    mult = {}
    for i in range(n):
        for j in range(n):
            prod = R.product(pc[i], pc[j])
            out = to_new(prod)
            if out:
                mult[(i, j)] = out
    comult = {}
    for i in range(n):
        acc: dict = {}
        for (a, b), c in R.coproduct(pc[i]).items():
            for a2, ca in to_new({a: c}).items():
                for b2, cb in to_new({b: scalar(1)}).items():
                    key = (a2, b2)
                    add = ca * cb
                    cur = acc.get(key)
                    s = add if cur is None else cur + add
                    if s.is_zero():
                        acc.pop(key, None)
                    else:
                        acc[key] = s
        comult[i] = acc
    counit = {}
    for i in range(n):
        e = R.counit_of(pc[i])
        if not e.is_zero():
            counit[i] = e
    action = {}
    for h in range(R.base.dim):
        for i in range(n):
            img = to_new(R.act_elem({h: scalar(1)}, pc[i]))
            if img:
                action[(h, i)] = img
    coaction = {}
    for i in range(n):
        acc = {}
        for (h, r), c in R.coact(pc[i]).items():
            for r2, cr in to_new({r: c}).items():
                key = (h, r2)
                cur = acc.get(key)
                s = cr if cur is None else cur + cr
                if s.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = s
        coaction[i] = acc
    out = BraidedHopfData(R.base, new_labels, degrees, mult, comult, counit,
                          action, coaction, R.module, R.status, R.top_degree)
    # unit must stay index 0 with coefficient 1
    assert v_eq(to_new({0: scalar(1)}), {0: scalar(1)}), "rebase must fix the unit"
    return out
