"""The example catalogue: builders for every concrete twist and cocycle
the package ships, plus probes like the character convolution group.

Each builder returns its ambient algebra together with the twist or
cocycle data; regression values live in the test suite.  Pairs that the
theory relates (a cocycle and its dual twist, a braided twist and its
bosonization) are always built from separate formulas so the relation
stays a real check.
"""

from __future__ import annotations

from math import lcm

from .scalars import CycScalar, scalar, root_of_unity, invert, q_factorial, mult_order
from .groups import GroupTable, cyclic, klein_four, symmetric, transpositions, perm_sign
from .hopf import HopfData, TensorPower, dual_hopf
from .yd import YDModuleData, DiagonalRealization
from .linalg import algebra_invert, v_eq
from .construct import (group_algebra, matched_pair_extension,
                        nichols_algebra, bosonize)
from .construct.groups_hopf import conjugation_action
from .construct.nichols import BraidedHopfData
from .construct.presets import (quantum_line_bosonization, qls_nichols,
                                fk3_nichols, fk3_bosonization)
from .twists import TwistData, CocycleData, BraidedTwistData, bosonize_twist
from .errors import ConstructionError


# ---------------------------------------------------------------------------
# quantum line: sigma_xi and J_xi


def sigma_xi(N: int, gorder: int, xi: CycScalar) -> CocycleData:
    """sigma(x^i g^t, x^j g^u) = d_{i+j,0} + xi q^{jt} d_{i+j,N} on the
    quantum line bosonization with chi(g) = q primitive of order N."""
    A = quantum_line_bosonization(N, gorder)
    sp = A.aux["smash"]
    H, pack = sp["H"], sp["pack"]
    G = H.aux["group"]
    q = root_of_unity(N, 1).embed(A.order)
    vals = {}
    for i in range(N):
        for t in range(gorder):
            for j in range(N):
                for u in range(gorder):
                    acc = scalar(0)
                    if i + j == 0:
                        acc = acc + scalar(1)
                    if i + j == N:
                        acc = acc + xi * q ** (j * t)
                    if not acc.is_zero():
                        vals[(pack(i, t), pack(j, u))] = acc
    return CocycleData(A, vals, name="sigma_xi(N=%d,|g|=%d)" % (N, gorder))


def j_xi(N: int, gorder: int, xi: CycScalar) -> TwistData:
    """J_xi = 1 tensor 1 + xi sum_k x^k ghat^{N-k} tensor x^{N-k} /
    ((N-k)_q! (k)_q!), built on the side whose coaction group-like ghat
    has order exactly N.

    For gorder = N that is the quantum line bosonization itself; in
    general it is its dual, generated by y = sum_t (x g^t)* and
    ghat = sum_t q^t (g^t)*.  (On the primal side the identity picks up
    an obstruction xi (1 - g^N) tensor ... unless g^N = 1.)
    """
    A = quantum_line_bosonization(N, gorder)
    Ad = dual_hopf(A)
    sp = A.aux["smash"]
    pack = sp["pack"]
    q = root_of_unity(N, 1).embed(A.order)
    y = {pack(1, t): scalar(1, A.order) for t in range(gorder)}
    ghat = {pack(0, t): q ** t for t in range(gorder)}
    one_d = dict(Ad.unit())
    elem = {}
    for a, ca in one_d.items():
        for b, cb in one_d.items():
            elem[(a, b)] = ca * cb
    for k in range(1, N):
        coef = xi * invert(q_factorial(N - k, q) * q_factorial(k, q))
        left = dict(one_d)
        for _ in range(k):
            left = Ad.product(left, y)
        for _ in range(N - k):
            left = Ad.product(left, ghat)
        right = dict(one_d)
        for _ in range(N - k):
            right = Ad.product(right, y)
        for a, ca in left.items():
            for b, cb in right.items():
                key = (a, b)
                cur = elem.get(key, scalar(0))
                elem[key] = cur + coef * ca * cb
    elem = {k2: v for k2, v in elem.items() if not v.is_zero()}
    return TwistData(Ad, elem, name="J_xi(N=%d,|g|=%d)" % (N, gorder))


def braided_j_xi(N: int, gorder: int, xi: CycScalar) -> BraidedTwistData:
    """The braided element 1 tensor 1 + xi sum x^k tensor x^{N-k} / (...)
    over the primal Nichols factor; a braided twist iff g^N = 1."""
    A = quantum_line_bosonization(N, gorder)
    R = A.aux["smash"]["R"]
    q = root_of_unity(N, 1).embed(A.order)
    elem = {(0, 0): scalar(1, A.order)}
    for k in range(1, N):
        coef = xi * invert(q_factorial(N - k, q) * q_factorial(k, q))
        elem[(k, N - k)] = coef
    return BraidedTwistData(R, elem, name="Jb_xi(N=%d,|g|=%d)" % (N, gorder))


# ---------------------------------------------------------------------------
# abelian group twists J_alpha


def character_group(G: GroupTable):
    """The character group of an abelian group as (GroupTable, values)."""
    chars = G.characters()
    if len(chars) != G.n:
        raise ConstructionError("character enumeration incomplete (G abelian?)")
    idx = {}
    for i, ch in enumerate(chars):
        key = tuple(c.to_json().__repr__() for c in ch)
        idx[key] = i

    def key_of(vals):
        return tuple(c.to_json().__repr__() for c in vals)

    mult = [[0] * G.n for _ in range(G.n)]
    for i, ci in enumerate(chars):
        for j, cj in enumerate(chars):
            prod = [a * b for a, b in zip(ci, cj)]
            mult[i][j] = idx[key_of(prod)]
    table = GroupTable(mult, ["chi%d" % i for i in range(G.n)])
    return table, chars


def check_group_2_cocycle(T: GroupTable, alpha) -> None:
    """alpha(a, b) alpha(ab, c) = alpha(a, bc) alpha(b, c), normalized."""
    for a in range(T.n):
        if not (alpha(a, T.e).is_one() and alpha(T.e, a).is_one()):
            raise ConstructionError("alpha not normalized at %s" % T.labels[a])
    for a in range(T.n):
        for b in range(T.n):
            for c in range(T.n):
                lhs = alpha(a, b) * alpha(T.op(a, b), c)
                rhs = alpha(a, T.op(b, c)) * alpha(b, c)
                if lhs != rhs:
                    raise ConstructionError(
                        "alpha fails the 2-cocycle identity at (%s, %s, %s)"
                        % (T.labels[a], T.labels[b], T.labels[c]))


def twist_abelian(Gamma: GroupTable, alpha, ambient: HopfData | None = None,
                  embed=None) -> TwistData:
    """J_alpha = sum alpha(chi, tau) e_chi tensor e_tau with e_chi the
    orthogonal central idempotents of k Gamma; optionally pushed along an
    embedding of Gamma into the group of `ambient`.

    alpha(i, j) takes character-group indices; it must be a normalized
    group 2-cocycle (checked, witness reported on failure).
    """
    if not Gamma.is_abelian():
        raise ConstructionError("J_alpha needs an abelian group")
    T, chars = character_group(Gamma)
    check_group_2_cocycle(T, alpha)
    order = 1
    for ch in chars:
        for v in ch:
            order = lcm(order, v.order)
    if ambient is None:
        ambient = group_algebra(Gamma, order)
        embed = lambda g: g
    assert embed is not None, "embedding required with an ambient algebra"
    inv_card = scalar(1) * invert(scalar(Gamma.n))
    idem = []
    for ch in chars:
        vec = {}
        for g in range(Gamma.n):
            coef = ch[Gamma.inv[g]] * inv_card
            key = embed(g)
            cur = vec.get(key, scalar(0, order))
            vec[key] = cur + coef.embed(order)
        idem.append({k: v for k, v in vec.items() if not v.is_zero()})
    elem = {}
    inv_elem = {}
    for i, ei in enumerate(idem):
        for j, ej in enumerate(idem):
            a = alpha(i, j)
            ainv = invert(a)
            for u, cu in ei.items():
                for v, cv in ej.items():
                    key = (u, v)
                    cur = elem.get(key, scalar(0, order))
                    elem[key] = cur + a * cu * cv
                    cur = inv_elem.get(key, scalar(0, order))
                    inv_elem[key] = cur + ainv * cu * cv
    elem = {k: v for k, v in elem.items() if not v.is_zero()}
    inv_elem = {k: v for k, v in inv_elem.items() if not v.is_zero()}
    return TwistData(ambient, elem, inv_elem, name="J_alpha")


def alpha_c2c2():
    """The nondegenerate 2-cocycle on the character group of C2 x C2:
    alpha(chi^a tau^b, chi^c tau^d) = (-1)^{bc} in suitable coordinates."""
    Gamma = klein_four()
    T, chars = character_group(Gamma)
    # identify exponents: chars are indexed arbitrarily; decompose each
    # character by its values on the two generators g1 = index 2, g2 = 1
    expo = {}
    for i, ch in enumerate(chars):
        a = 0 if ch[2].is_one() else 1
        b = 0 if ch[1].is_one() else 1
        expo[i] = (a, b)

    def alpha(i, j):
        (a, b), (c, d) = expo[i], expo[j]
        return scalar(-1) ** (b * c)

    return Gamma, alpha


def klein_in_s4():
    """The normal C2 x C2 = {e, (12)(34), (13)(24), (14)(23)} inside S4,
    as an index map from klein_four()."""
    S4 = symmetric(4)
    targets = {
        (0, 0): tuple(range(4)),
        (1, 0): (1, 0, 3, 2),   # (12)(34)
        (0, 1): (2, 3, 0, 1),   # (13)(24)
        (1, 1): (3, 2, 1, 0),   # (14)(23)
    }
    lookup = {p: i for i, p in enumerate(S4.perms)}
    # klein_four packs (a, b) as a*2 + b
    mapping = {a * 2 + b: lookup[p] for (a, b), p in targets.items()}
    return S4, (lambda g: mapping[g])


def j_alpha_klein(ambient: str = "C2xC2") -> TwistData:
    Gamma, alpha = alpha_c2c2()
    if ambient == "C2xC2":
        return twist_abelian(Gamma, alpha)
    if ambient == "S4":
        S4, emb = klein_in_s4()
        return twist_abelian(Gamma, alpha, group_algebra(S4, 1), emb)
    raise ConstructionError("unknown ambient %r" % ambient)


# ---------------------------------------------------------------------------
# quantum linear spaces: the braided twist from (xi_i) and (a_ij)


def braided_j_d(R: BraidedHopfData, realization: DiagonalRealization,
                xis, a_offdiag: dict) -> BraidedTwistData:
    """prod_i J_{xi_i} . prod_{i != j} exp_{q}(a_ij x_i tensor x_j) in
    the braided tensor square of the quantum linear space B(V).

    exp uses sum_n a^n / (n)_{q_ii}! (x_i tensor x_j)^n with the powers
    taken in the braided square (so each step picks up q_ji).
    """
    from .twists import BraidedPower, braided_elem_product
    theta = realization.theta
    BP = BraidedPower(R, 2)
    acc = dict(BP.unit())
    widx = R.aux["word_index"]
    for i in range(theta):
        q = realization.qmatrix[i][i]
        N = mult_order(q)
        term = dict(BP.unit())
        xi = xis[i]
        if not xi.is_zero():
            for k in range(1, N):
                coef = xi * invert(q_factorial(N - k, q) * q_factorial(k, q))
                term[(widx[(i,) * k], widx[(i,) * (N - k)])] = coef
        acc = braided_elem_product(R, 2, acc, term)
    for (i, j), a in a_offdiag.items():
        if i == j or a.is_zero():
            continue
        q = realization.qmatrix[i][i]
        N = mult_order(q)
        gen = {(widx[(i,)], widx[(j,)]): scalar(1)}
        term = dict(BP.unit())
        power = dict(BP.unit())
        apow = scalar(1)
        for n in range(1, N + 1):
            power = braided_elem_product(R, 2, power, gen)
            if not power:
                break
            apow = apow * a
            coef = apow * invert(q_factorial(n, q))
            for kk, vv in power.items():
                cur = term.get(kk, scalar(0))
                term[kk] = cur + coef * vv
        term = {k: v for k, v in term.items() if not v.is_zero()}
        acc = braided_elem_product(R, 2, acc, term)
    return BraidedTwistData(R, acc, name="Jb_D")


def twist_j_d(xis=None, a_offdiag=None, F: TwistData | None = None) -> TwistData:
    """The bosonized quantum-plane twist: braided J_D pushed into
    B(V) # k(C2 x C2), optionally multiplied by a twist F of the group
    algebra."""
    real, R, A = quantum_plane_setup()
    if xis is None:
        xis = [scalar(1), scalar(1)]
    if a_offdiag is None:
        a_offdiag = {(0, 1): scalar(1)}
    Jb = braided_j_d(R, real, xis, a_offdiag)
    return bosonize_twist(Jb, A, F)


def quantum_plane_setup():
    """theta = 2 quantum plane with N1 = N2 = 2, q12 = q21 = -1 (so
    q12 q21 = 1), realized over C2 x C2 with g1 = g2 the product of the
    two generators and chi1 = chi2.  This realization satisfies
    g_i g_j = e and chi_i chi_j = eps, which is what lets the scalars
    (xi_i, a_12) define a braided twist.

    Returns (realization, R, A) with A = B(V) # k(C2 x C2), dim 16."""
    m1 = scalar(-1)
    p1 = scalar(1)
    q = [[m1, m1], [m1, m1]]
    G = klein_four()
    chi = [p1, p1, m1, m1]  # -1 on g1, +1 on g2 (labels e, g2, g1, g1g2)
    real = DiagonalRealization(q, G, [3, 3], [chi, chi], 1)
    R = qls_nichols(real)
    A = bosonize(R, R.base)
    A.aux["realization"] = real
    return real, R, A


# ---------------------------------------------------------------------------
# the transposition Nichols algebra over S_n: J_n and sigma_GM


def braided_j_n(n: int = 3) -> BraidedTwistData:
    """1 tensor 1 + sum_{eta,tau} y_eta tensor y_tau over FK_n."""
    if n != 3:
        raise ConstructionError("only n = 3 ships fully verified")
    R = fk3_nichols()
    one = scalar(1)
    elem = {(0, 0): one}
    deg1 = [i for i in range(R.dim) if R.degrees[i] == 1]
    for i in deg1:
        for j in deg1:
            elem[(i, j)] = one
    return BraidedTwistData(R, elem, name="Jb_3")


def twist_j_n(n: int = 3, A: HopfData | None = None) -> TwistData:
    """J_n = 1 tensor 1 + sum_w sign(w) sum_{eta,tau} y_eta d_w tensor
    y_{w^{-1} tau w} on FK_n # k^{S_n}, from the printed formula."""
    if n != 3:
        raise ConstructionError("only n = 3 ships fully verified")
    if A is None:
        A = fk3_bosonization()
    sp = A.aux["smash"]
    R, H, pack = sp["R"], sp["H"], sp["pack"]
    G = H.aux["group"]
    X = transpositions(G)
    pos = {g: i for i, g in enumerate(X)}
    rdeg1 = {i: R.labels[i] for i in range(R.dim) if R.degrees[i] == 1}
    # map transposition eta to the R index of y_eta via the module labels
    eta_to_r = {}
    for i in rdeg1:
        for eta in X:
            if R.labels[i] == "y_%s" % G.labels[eta]:
                eta_to_r[eta] = i
    elem = {}
    for u, cu in H.unit().items():
        for v, cv in H.unit().items():
            elem[(pack(0, u), pack(0, v))] = cu * cv
    for w in range(G.n):
        sgn = scalar(perm_sign(G.perms[w]))
        for eta in X:
            for tau in X:
                conj = G.conjugate(G.inv[w], tau)
                for v, cv in H.unit().items():
                    key = (pack(eta_to_r[eta], w), pack(eta_to_r[conj], v))
                    cur = elem.get(key, scalar(0))
                    elem[key] = cur + sgn * cv
    elem = {k: v for k, v in elem.items() if not v.is_zero()}
    return TwistData(A, elem, name="J_%d" % n)


def sigma_gm(n: int = 3, A: HopfData | None = None, Ad: HopfData | None = None) -> CocycleData:
    """The sign cocycle on the dual of FK_n # k^{S_n}: on dual basis
    elements it is sign(w) on degree (1,1) pairs (w the group part of
    the first argument), 1 on degree (0,0) pairs, 0 elsewhere."""
    if n != 3:
        raise ConstructionError("only n = 3 ships fully verified")
    if A is None:
        A = fk3_bosonization()
    if Ad is None:
        Ad = dual_hopf(A)
    sp = A.aux["smash"]
    R, H, nH, pack = sp["R"], sp["H"], sp["nH"], sp["pack"]
    G = H.aux["group"]
    vals = {}
    deg0 = [i for i in range(R.dim) if R.degrees[i] == 0]
    deg1 = [i for i in range(R.dim) if R.degrees[i] == 1]
    for w in range(G.n):
        for wp in range(G.n):
            vals[(pack(0, w), pack(0, wp))] = scalar(1)
    for r1 in deg1:
        for r2 in deg1:
            for w in range(G.n):
                sgn = scalar(perm_sign(G.perms[w]))
                for wp in range(G.n):
                    vals[(pack(r1, w), pack(r2, wp))] = sgn
    inverse = algebra_invert(TensorPower(A, 2), vals)
    return CocycleData(Ad, vals, inverse, name="sigma_GM")


def fk3_over_extension(m: int) -> tuple:
    """FK3 over the bicrossed extension k^{S3} # k C_m: the module of
    Lemma-matched type with f . y_eta = y_{eta <| f^{-1}}; returns
    (H, V, R, A) with A of dimension 72 m."""
    S3 = symmetric(3)
    F = cyclic(m)
    if m == 1:
        emb = lambda f: S3.e
    elif m == 2:
        twelve = next(i for i, p in enumerate(S3.perms) if p == (1, 0, 2))
        emb = lambda f: S3.e if f == 0 else twelve
    elif m == 3:
        three = next(i for i, p in enumerate(S3.perms) if p == (1, 2, 0))
        def emb(f):
            x = S3.e
            for _ in range(f):
                x = S3.op(x, three)
            return x
    else:
        raise ConstructionError("m must be 1, 2 or 3")
    act = conjugation_action(S3, F, emb)
    H = matched_pair_extension(S3, F, act)
    pack_h = H.aux["pack"]
    X = transpositions(S3)
    pos = {g: i for i, g in enumerate(X)}
    one = scalar(1)
    action = {}
    coaction = {}
    for i, eta in enumerate(X):
        co = {}
        for w in range(S3.n):
            conj = S3.conjugate(S3.inv[w], eta)
            co[(pack_h(w, F.e), pos[conj])] = scalar(perm_sign(S3.perms[w]))
        coaction[i] = co
        for tau in range(S3.n):
            for f in range(F.n):
                # (d_tau # f) . y_eta = [tau == eta <| f^{-1}] y_{eta <| f^{-1}}
                target = act(eta, F.inv[f])
                if tau == target:
                    action[(pack_h(tau, f), i)] = {pos[target]: one}
    labels = ["y_%s" % S3.labels[eta] for eta in X]
    V = YDModuleData(H, len(X), action, coaction, labels)
    R = nichols_algebra(V, max_degree=6)
    assert R.status == "complete" and R.dim == 12
    A = bosonize(R, H)
    return H, V, R, A


def extend_j3(m: int) -> TwistData:
    """The FK3 twist injected along k^{S3} into the extension base."""
    H, V, R, A = fk3_over_extension(m)
    sp = A.aux["smash"]
    pack = sp["pack"]
    pack_h = H.aux["pack"]
    S3 = symmetric(3)
    X = transpositions(S3)
    pos = {g: i for i, g in enumerate(X)}
    eta_to_r = {}
    for i in range(R.dim):
        if R.degrees[i] == 1:
            for eta in X:
                if R.labels[i] == "y_%s" % S3.labels[eta]:
                    eta_to_r[eta] = i
    elem = {}
    for u, cu in H.unit().items():
        for v, cv in H.unit().items():
            elem[(pack(0, u), pack(0, v))] = cu * cv
    for w in range(S3.n):
        sgn = scalar(perm_sign(S3.perms[w]))
        for eta in X:
            for tau in X:
                conj = S3.conjugate(S3.inv[w], tau)
                for v, cv in H.unit().items():
                    key = (pack(eta_to_r[eta], pack_h(w, 0)), pack(eta_to_r[conj], v))
                    cur = elem.get(key, scalar(0))
                    elem[key] = cur + sgn * cv
    elem = {k: v for k, v in elem.items() if not v.is_zero()}
    return TwistData(A, elem, name="J_3#ext(m=%d)" % m)


# ---------------------------------------------------------------------------
# algebra characters under convolution


def algebra_characters(H: HopfData) -> list:
    """All algebra characters H -> k, found from the distinguished
    generator metadata and verified multiplicative on the full basis."""
    assert H.distinguished, "needs distinguished generator metadata"
    family = None
    nilpotent = ()
    for idxs, kind in H.distinguished:
        if kind == "group-like-family":
            family = tuple(idxs)
        elif kind == "nilpotent":
            nilpotent = tuple(idxs)
    assert family is not None
    covered = set(family) | set(nilpotent)
    assert covered == set(range(H.dim)), "metadata must cover the basis"

    candidates = []
    one = scalar(1)
    # orthogonal idempotent family?
    is_idem = all(v_eq(H.mult(a, b), {a: one} if a == b else {})
                  for a in family for b in family)
    if is_idem:
        for a in family:
            chi = {a: one}
            candidates.append(chi)
    else:
        # group-like basis family: extract the group table
        index_of = {g: t for t, g in enumerate(family)}
        mult_tab = []
        for a in family:
            row = []
            for b in family:
                prod = H.mult(a, b)
                if len(prod) != 1:
                    raise ConstructionError("family is not group-like")
                (c, coef), = prod.items()
                if not coef.is_one() or c not in index_of:
                    raise ConstructionError("family is not group-like")
                row.append(index_of[c])
            mult_tab.append(row)
        T = GroupTable(mult_tab, [H.labels[g] for g in family])
        for ch in T.characters():
            chi = {family[t]: ch[t] for t in range(T.n) if not ch[t].is_zero()}
            candidates.append(chi)

    out = []
    for chi in candidates:
        full = dict(chi)
        ok = True
        # chi(1) = 1
        acc = scalar(0)
        for i, c in H.unit().items():
            v = full.get(i)
            if v is not None:
                acc = acc + c * v
        if not acc.is_one():
            continue
        for i in range(H.dim):
            if not ok:
                break
            for j in range(H.dim):
                lhs = scalar(0)
                for k, c in H.mult(i, j).items():
                    v = full.get(k)
                    if v is not None:
                        lhs = lhs + c * v
                a = full.get(i, scalar(0))
                b = full.get(j, scalar(0))
                if lhs != a * b:
                    ok = False
                    break
        if ok:
            out.append(full)
    return out


def character_convolution_group(H: HopfData):
    """The group of algebra characters under convolution with the
    current comultiplication; returns (characters, GroupTable)."""
    chars = algebra_characters(H)

    def conv(c1, c2):
        out = {}
        for i in range(H.dim):
            acc = scalar(0)
            for (a, b), d in H.comult(i).items():
                va = c1.get(a)
                if va is None:
                    continue
                vb = c2.get(b)
                if vb is not None:
                    acc = acc + va * vb * d
            if not acc.is_zero():
                out[i] = acc
        return out

    def find(c):
        for t, ch in enumerate(chars):
            if v_eq(ch, c):
                return t
        raise ConstructionError("characters not closed under convolution")

    mult = [[find(conv(c1, c2)) for c2 in chars] for c1 in chars]
    table = GroupTable(mult, ["chi%d" % t for t in range(len(chars))])
    return chars, table
