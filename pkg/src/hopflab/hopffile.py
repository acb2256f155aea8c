"""The JSON interchange format.

One file holds one ambient Hopf algebra (structure constants as sparse
coordinate lists) plus named attached blocks: twists, cocycles,
Yetter-Drinfeld modules and braided twists/cocycles (the latter carry
their Nichols-algebra tables so verification is self-contained).
Scalars serialize as {"order": L, "coeffs": {"k": "p/q"}}; normal forms
are unique so files are canonical byte-for-byte given sorted keys.
"""

from __future__ import annotations

import json

from .scalars import CycScalar
from .hopf import HopfData, verify_bialgebra, verify_antipode
from .yd import YDModuleData
from .linalg import SparseMat
from .construct.nichols import BraidedHopfData
from .twists import TwistData, CocycleData, BraidedTwistData, BraidedCocycleData
from .errors import HopfLabError

FORMAT_VERSION = "1"


def _s(x: CycScalar):
    return x.to_json()


def _l(obj) -> CycScalar:
    return CycScalar.from_json(obj)


def _coords2(table: dict) -> list:
    out = []
    for (i, j), vec in sorted(table.items()):
        for k, v in sorted(vec.items()):
            out.append([i, j, k, _s(v)])
    return out


def _coords_comult(table: dict) -> list:
    out = []
    for i in sorted(table):
        for (j, k), v in sorted(table[i].items()):
            out.append([i, j, k, _s(v)])
    return out


def _coords_vec(vec: dict) -> list:
    return [[i, _s(v)] for i, v in sorted(vec.items())]


def _coords_mat(M: SparseMat) -> list:
    return [[i, j, _s(v)] for (i, j), v in sorted(M.entries.items())]


def _coords_pairs(d: dict) -> list:
    return [[i, j, _s(v)] for (i, j), v in sorted(d.items())]


def hopf_to_json(H: HopfData) -> dict:
    out = {
        "format_version": FORMAT_VERSION,
        "scalar_order": H.order,
        "dim": H.dim,
        "labels": list(H.labels),
        "mult": _coords2(H._mult),
        "comult": _coords_comult(H._comult),
        "unit": _coords_vec(H._unit),
        "counit": _coords_vec(H._counit),
    }
    if H.antipode is not None:
        out["antipode"] = _coords_mat(H.antipode)
    if H.grading is not None:
        out["grading"] = list(H.grading)
        out["mult_graded"] = H.mult_graded
        out["delta_graded"] = H.delta_graded
    if H.generators is not None:
        out["generators"] = list(H.generators)
    if H.distinguished is not None:
        out["distinguished_generators"] = [[list(ix), kind]
                                           for ix, kind in H.distinguished]
    return out


def hopf_from_json(obj: dict, strict: bool = True) -> HopfData:
    if obj.get("format_version") != FORMAT_VERSION:
        raise HopfLabError("unsupported format_version %r" % obj.get("format_version"))
    dim = int(obj["dim"])
    mult: dict = {}
    for i, j, k, v in obj["mult"]:
        mult.setdefault((i, j), {})[k] = _l(v)
    comult: dict = {}
    for i, j, k, v in obj["comult"]:
        comult.setdefault(i, {})[(j, k)] = _l(v)
    unit = {i: _l(v) for i, v in obj["unit"]}
    counit = {i: _l(v) for i, v in obj["counit"]}
    S = None
    if "antipode" in obj:
        S = SparseMat(dim, dim, {(i, j): _l(v) for i, j, v in obj["antipode"]})
    H = HopfData(dim, int(obj["scalar_order"]), obj["labels"], mult, comult,
                 unit, counit, antipode=S, grading=obj.get("grading"),
                 generators=obj.get("generators"))
    if "grading" in obj:
        H.mult_graded = bool(obj.get("mult_graded", True))
        H.delta_graded = bool(obj.get("delta_graded", True))
    if "distinguished_generators" in obj:
        H.distinguished = [(tuple(ix), kind)
                           for ix, kind in obj["distinguished_generators"]]
    if strict:
        rep = verify_bialgebra(H)
        if not rep.ok:
            raise HopfLabError("file fails bialgebra axioms:\n%s" % rep)
        if H.antipode is not None and not verify_antipode(H).ok:
            raise HopfLabError("file fails the antipode axiom")
    return H


def braided_to_json(R: BraidedHopfData) -> dict:
    return {
        "dim": R.dim,
        "labels": list(R.labels),
        "degrees": list(R.degrees),
        "status": R.status,
        "top_degree": R.top_degree,
        "mult": _coords2(R._mult),
        "comult": _coords_comult(R._comult),
        "counit": _coords_vec(R._counit),
        "action": [[h, i, j, _s(v)] for (h, i), vec in sorted(R.action.items())
                   for j, v in sorted(vec.items())],
        "coaction": [[i, h, j, _s(v)] for i in sorted(R.coaction)
                     for (h, j), v in sorted(R.coaction[i].items())],
    }


def braided_from_json(obj: dict, base: HopfData) -> BraidedHopfData:
    mult: dict = {}
    for i, j, k, v in obj["mult"]:
        mult.setdefault((i, j), {})[k] = _l(v)
    comult: dict = {i: {} for i in range(obj["dim"])}
    for i, j, k, v in obj["comult"]:
        comult[i][(j, k)] = _l(v)
    counit = {i: _l(v) for i, v in obj["counit"]}
    action: dict = {}
    for h, i, j, v in obj["action"]:
        action.setdefault((h, i), {})[j] = _l(v)
    coaction: dict = {i: {} for i in range(obj["dim"])}
    for i, h, j, v in obj["coaction"]:
        coaction[i][(h, j)] = _l(v)
    return BraidedHopfData(base, obj["labels"], obj["degrees"], mult, comult,
                           counit, action, coaction, None,
                           obj["status"], obj["top_degree"])


def block_to_json(block) -> dict:
    if isinstance(block, TwistData):
        return {"type": "twist", "element": _coords_pairs(block.element),
                "inverse": _coords_pairs(block.inverse)}
    if isinstance(block, CocycleData):
        return {"type": "cocycle", "values": _coords_pairs(block.values),
                "inverse": _coords_pairs(block.inverse)}
    if isinstance(block, BraidedTwistData):
        return {"type": "braided-twist", "nichols": braided_to_json(block.base),
                "element": _coords_pairs(block.element),
                "inverse": _coords_pairs(block.inverse)}
    if isinstance(block, BraidedCocycleData):
        return {"type": "braided-cocycle", "nichols": braided_to_json(block.base),
                "values": _coords_pairs(block.values),
                "inverse": _coords_pairs(block.inverse)}
    if isinstance(block, YDModuleData):
        return {
            "type": "yd-module", "dim": block.dim, "labels": list(block.labels),
            "action": [[h, i, j, _s(v)] for (h, i), vec in sorted(block.action.items())
                       for j, v in sorted(vec.items())],
            "coaction": [[i, h, j, _s(v)] for i in sorted(block.coaction)
                         for (h, j), v in sorted(block.coaction[i].items())],
        }
    raise HopfLabError("cannot serialize block %r" % (block,))


def block_from_json(obj: dict, H: HopfData):
    kind = obj["type"]
    if kind == "twist":
        return TwistData(H, {(i, j): _l(v) for i, j, v in obj["element"]},
                         {(i, j): _l(v) for i, j, v in obj["inverse"]})
    if kind == "cocycle":
        return CocycleData(H, {(i, j): _l(v) for i, j, v in obj["values"]},
                           {(i, j): _l(v) for i, j, v in obj["inverse"]})
    if kind == "braided-twist":
        R = braided_from_json(obj["nichols"], H)
        return BraidedTwistData(R, {(i, j): _l(v) for i, j, v in obj["element"]},
                                {(i, j): _l(v) for i, j, v in obj["inverse"]})
    if kind == "braided-cocycle":
        R = braided_from_json(obj["nichols"], H)
        return BraidedCocycleData(R, {(i, j): _l(v) for i, j, v in obj["values"]},
                                  {(i, j): _l(v) for i, j, v in obj["inverse"]})
    if kind == "yd-module":
        action: dict = {}
        for h, i, j, v in obj["action"]:
            action.setdefault((h, i), {})[j] = _l(v)
        coaction: dict = {i: {} for i in range(obj["dim"])}
        for i, h, j, v in obj["coaction"]:
            coaction[i][(h, j)] = _l(v)
        return YDModuleData(H, obj["dim"], action, coaction, obj.get("labels"))
    raise HopfLabError("unknown block type %r" % kind)


def save_file(path: str, H: HopfData, blocks: dict | None = None) -> None:
    obj = hopf_to_json(H)
    if blocks:
        obj["blocks"] = {name: block_to_json(b) for name, b in sorted(blocks.items())}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_file(path: str, strict: bool = True):
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    H = hopf_from_json(obj, strict=strict)
    blocks = {name: block_from_json(b, H)
              for name, b in obj.get("blocks", {}).items()}
    return H, blocks
