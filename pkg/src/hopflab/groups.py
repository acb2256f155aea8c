"""Finite groups as explicit multiplication tables.

Built-ins cover the groups used by the constructors and the gallery:
cyclic groups, S3, S4, C2xC2 and the dihedral group of order 8.
Symmetric-group tables remember their permutations so conjugacy-class
constructions stay readable.
"""

from __future__ import annotations

from itertools import permutations

from .errors import ConstructionError
from .scalars import root_of_unity, scalar


class GroupTable:
    def __init__(self, mult, labels=None, perms=None):
        self.n = len(mult)
        self.mult = [list(r) for r in mult]
        self.labels = list(labels) if labels else ["g%d" % i for i in range(self.n)]
        self.perms = perms
        self._check()
        self.e = next(i for i in range(self.n)
                      if all(self.mult[i][j] == j for j in range(self.n)))
        self.inv = [next(j for j in range(self.n) if self.mult[i][j] == self.e)
                    for i in range(self.n)]

    def _check(self):
        n = self.n
        seen_unit = False
        for i in range(n):
            if sorted(self.mult[i]) != list(range(n)) or \
               sorted(self.mult[j][i] for j in range(n)) != list(range(n)):
                raise ConstructionError("multiplication table is not a bijection in row/col %d" % i)
        for i in range(n):
            if all(self.mult[i][j] == j == self.mult[j][i] for j in range(n)):
                seen_unit = True
        if not seen_unit:
            raise ConstructionError("no identity element")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if self.mult[self.mult[i][j]][k] != self.mult[i][self.mult[j][k]]:
                        raise ConstructionError("associativity fails at (%d,%d,%d)" % (i, j, k))

    def op(self, i, j):
        return self.mult[i][j]

    def order_of(self, i):
        k, x = 1, i
        while x != self.e:
            x = self.mult[x][i]
            k += 1
        return k

    def exponent(self):
        from math import lcm
        return lcm(*[self.order_of(i) for i in range(self.n)]) if self.n > 1 else 1

    def conjugate(self, g, x):
        """g x g^{-1}"""
        return self.mult[self.mult[g][x]][self.inv[g]]

    def is_abelian(self):
        return all(self.mult[i][j] == self.mult[j][i]
                   for i in range(self.n) for j in range(self.n))

    def subgroup_closure(self, gens):
        out = {self.e}
        frontier = list(set(gens) | {self.e})
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(out):
                    for c in (self.mult[a][b], self.mult[b][a]):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        return sorted(out)

    def commutator_subgroup(self):
        comms = set()
        for a in range(self.n):
            for b in range(self.n):
                c = self.mult[self.mult[a][b]][self.mult[self.inv[a]][self.inv[b]]]
                comms.add(c)
        return self.subgroup_closure(comms)

    def generating_set(self):
        """A small (greedy) generating set."""
        gens = []
        span = {self.e}
        for i in sorted(range(self.n), key=self.order_of, reverse=True):
            if i not in span:
                gens.append(i)
                span = set(self.subgroup_closure(gens))
                if len(span) == self.n:
                    break
        return gens

    def characters(self):
        """All 1-dimensional characters G -> k^x as value lists.

        Returns a list of lists of CycScalar, exact roots of unity.
        Enumerated on a generating set and verified on the full table.
        """
        gens = self.generating_set()
        if not gens:
            return [[scalar(1)] * self.n]
        orders = [self.order_of(g) for g in gens]
        chars = []
        stack = [[]]
        for g, og in zip(gens, orders):
            stack = [pre + [k] for pre in stack for k in range(og)]
        for choice in stack:
            vals = self._extend_character(gens, orders, choice)
            if vals is not None:
                chars.append(vals)
        return chars

    def _extend_character(self, gens, orders, choice):
        vals = [None] * self.n
        vals[self.e] = scalar(1)
        frontier = [self.e]
        gen_vals = {g: root_of_unity(o, k) for g, o, k in zip(gens, orders, choice)}
        while frontier:
            nxt = []
            for x in frontier:
                for g, gv in gen_vals.items():
                    y = self.mult[x][g]
                    w = vals[x] * gv
                    if vals[y] is None:
                        vals[y] = w
                        nxt.append(y)
                    elif vals[y] != w:
                        return None
            frontier = nxt
        if any(v is None for v in vals):
            return None
        for i in range(self.n):
            for j in range(self.n):
                if vals[self.mult[i][j]] != vals[i] * vals[j]:
                    return None
        return vals

    def __repr__(self):
        return "GroupTable(order=%d)" % self.n


def cyclic(n: int) -> GroupTable:
    mult = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e"] + ["g^%d" % i if i > 1 else "g" for i in range(1, n)]
    return GroupTable(mult, labels)


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    n = A.n * B.n
    def pack(a, b):
        return a * B.n + b
    mult = [[0] * n for _ in range(n)]
    labels = [None] * n
    for a in range(A.n):
        for b in range(B.n):
            labels[pack(a, b)] = "(%s,%s)" % (A.labels[a], B.labels[b])
            for c in range(A.n):
                for d in range(B.n):
                    mult[pack(a, b)][pack(c, d)] = pack(A.mult[a][c], B.mult[b][d])
    return GroupTable(mult, labels)


def klein_four() -> GroupTable:
    G = direct_product(cyclic(2), cyclic(2))
    G.labels = ["e", "g2", "g1", "g1g2"]  # (a,b) with a the first C2
    return G


def _perm_mul(p, q):
    # (p*q)(x) = p(q(x))
    return tuple(p[q[x]] for x in range(len(p)))


def symmetric(n: int) -> GroupTable:
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    mult = [[index[_perm_mul(p, q)] for q in perms] for p in perms]
    labels = [perm_label(p) for p in perms]
    return GroupTable(mult, labels, perms=perms)


def perm_label(p) -> str:
    """Cycle notation, 1-based."""
    n = len(p)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append("(" + "".join(str(x + 1) for x in cyc) + ")")
    return "".join(out) if out else "e"


def perm_sign(p) -> int:
    n = len(p)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n: r^n = s^2 = e, s r s = r^{-1}."""
    def pack(flip, rot):
        return flip * n + rot
    N = 2 * n
    mult = [[0] * N for _ in range(N)]
    labels = []
    for f in range(2):
        for r in range(n):
            labels.append(("s" if f else "") + ("r^%d" % r if r > 1 else "r" if r else "e" if not f else ""))
    labels = [l if l else "e" for l in labels]
    for f1 in range(2):
        for r1 in range(n):
            for f2 in range(2):
                for r2 in range(n):
                    # (s^f1 r^r1)(s^f2 r^r2) = s^(f1+f2) r^(±r1 + r2)
                    f = (f1 + f2) % 2
                    r = ((-r1 if f2 else r1) + r2) % n
                    mult[pack(f1, r1)][pack(f2, r2)] = pack(f, r)
    return GroupTable(mult, labels)


def transpositions(G: GroupTable):
    """Indices of transpositions in a symmetric-group table."""
    assert G.perms is not None
    out = []
    for i, p in enumerate(G.perms):
        moved = [x for x in range(len(p)) if p[x] != x]
        if len(moved) == 2:
            out.append(i)
    return out


BUILTIN_GROUPS = {
    "S3": lambda: symmetric(3),
    "S4": lambda: symmetric(4),
    "C2xC2": klein_four,
    "D4": lambda: dihedral(4),
}


def builtin_group(name: str) -> GroupTable:
    if name in BUILTIN_GROUPS:
        return BUILTIN_GROUPS[name]()
    if name.startswith("C") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    raise ConstructionError("unknown group %r" % name)
