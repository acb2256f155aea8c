"""Command line front end.

    hopflab build <recipe> [params] -o out.json
    hopflab verify hopf|twist|cocycle|braided-twist|braided-cocycle|yd FILE [--block NAME]
    hopflab twist apply FILE --block NAME -o out.json
    hopflab cocycle apply FILE --block NAME -o out.json
    hopflab dualize FILE -o out.json
    hopflab gallery <name> [params] -o out.json
    hopflab probe cocommutative|characters|group-likes-in-basis FILE
    hopflab regress [--long]

Exit codes: 0 = pass, 1 = verification failure, 2 = input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .scalars import scalar, CycScalar
from .groups import builtin_group
from .hopf import (dual_hopf, verify_hopf, is_cocommutative,
                   group_likes_in_basis)
from .yd import verify_yd
from .errors import HopfLabError
from . import hopffile


def _fr(text: str) -> CycScalar:
    return scalar(Fraction(text))


def cmd_build(args) -> int:
    from .construct import (group_algebra, function_algebra)
    from .construct.presets import (quantum_line_bosonization, a2_bosonization,
                                    fk3_bosonization)
    name = args.recipe
    blocks = {}
    if name == "group-algebra":
        H = group_algebra(builtin_group(args.group))
    elif name == "function-algebra":
        H = function_algebra(builtin_group(args.group))
    elif name == "matched-pair":
        from .gallery import fk3_over_extension
        H = fk3_over_extension(args.m)[0]
    elif name == "qls":
        from .gallery import quantum_plane_setup
        H = quantum_plane_setup()[2]
    elif name == "nichols-a2":
        H = a2_bosonization()
    elif name == "fk3":
        H = fk3_bosonization()
    elif name == "bosonize":
        H = quantum_line_bosonization(args.N, args.gorder)
    elif name == "cleft-a2":
        from .construct.cleft import cleft_a2
        from .twists import cocycle_from_section
        c = cleft_a2((_fr(args.l1), _fr(args.l2), _fr(args.l12)))
        H = c.base
        blocks["sigma_lambda"] = cocycle_from_section(c)
    else:
        print("unknown recipe %r" % name, file=sys.stderr)
        return 2
    hopffile.save_file(args.output, H, blocks)
    print("wrote %s (dim %d)" % (args.output, H.dim))
    return 0


def cmd_verify(args) -> int:
    try:
        H, blocks = hopffile.load_file(args.file, strict=False)
    except (HopfLabError, OSError, ValueError, KeyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    kind = args.kind
    if kind == "hopf":
        rep = verify_hopf(H)
    else:
        if args.block is None or args.block not in blocks:
            print("needs --block naming one of %s" % sorted(blocks), file=sys.stderr)
            return 2
        b = blocks[args.block]
        from .twists import (TwistData, CocycleData, BraidedTwistData,
                             BraidedCocycleData, verify_twist, verify_cocycle,
                             verify_braided_twist, verify_braided_cocycle)
        from .yd import YDModuleData
        want = {"twist": TwistData, "cocycle": CocycleData,
                "braided-twist": BraidedTwistData,
                "braided-cocycle": BraidedCocycleData,
                "yd": YDModuleData}[kind]
        if not isinstance(b, want):
            print("block %r is not a %s" % (args.block, kind), file=sys.stderr)
            return 2
        rep = {"twist": lambda: verify_twist(b),
               "cocycle": lambda: verify_cocycle(b),
               "braided-twist": lambda: verify_braided_twist(b),
               "braided-cocycle": lambda: verify_braided_cocycle(b),
               "yd": lambda: verify_yd(b)}[kind]()
    for line in rep.lines():
        print(line)
    return 0 if rep.ok else 1


def cmd_apply(args, what: str) -> int:
    try:
        H, blocks = hopffile.load_file(args.file, strict=False)
    except (HopfLabError, OSError, ValueError, KeyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    if args.block not in blocks:
        print("no block %r in file" % args.block, file=sys.stderr)
        return 2
    b = blocks[args.block]
    from .twists import TwistData, CocycleData, apply_twist, apply_cocycle
    try:
        if what == "twist":
            assert isinstance(b, TwistData), "block is not a twist"
            out = apply_twist(H, b)
        else:
            assert isinstance(b, CocycleData), "block is not a cocycle"
            out = apply_cocycle(H, b)
    except (HopfLabError, AssertionError) as exc:
        print("failed: %s" % exc, file=sys.stderr)
        return 1
    hopffile.save_file(args.output, out)
    print("wrote %s" % args.output)
    return 0


def cmd_dualize(args) -> int:
    try:
        H, _ = hopffile.load_file(args.file, strict=False)
    except (HopfLabError, OSError, ValueError, KeyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    hopffile.save_file(args.output, dual_hopf(H))
    print("wrote %s" % args.output)
    return 0


def cmd_gallery(args) -> int:
    from . import gallery as G
    name = args.name
    blocks = {}
    if name == "j-xi":
        J = G.j_xi(args.N, args.gorder, _fr(args.xi))
        H, blocks["J_xi"] = J.base, J
    elif name == "sigma-xi":
        s = G.sigma_xi(args.N, args.gorder, _fr(args.xi))
        H, blocks["sigma_xi"] = s.base, s
    elif name == "j-alpha":
        J = G.j_alpha_klein(args.ambient)
        H, blocks["J_alpha"] = J.base, J
    elif name == "j-d":
        from .twists import bosonize_twist
        real, R, A = G.quantum_plane_setup()
        Jb = G.braided_j_d(R, real, [_fr(args.xi1), _fr(args.xi2)],
                           {(0, 1): _fr(args.a12), (1, 0): _fr(args.a21)})
        H = A
        blocks["Jb_D"] = Jb
        blocks["J_D"] = bosonize_twist(Jb, A)
    elif name == "j-n":
        if args.n != 3:
            print("n = 4 is gated: see the README notes on FK4", file=sys.stderr)
            return 2
        J = G.twist_j_n(3)
        H, blocks["J_3"] = J.base, J
    elif name == "sigma-gm":
        s = G.sigma_gm(3)
        H, blocks["sigma_GM"] = s.base, s
    elif name == "extend-j3":
        J = G.extend_j3(args.m)
        H, blocks["J_3_ext"] = J.base, J
    else:
        print("unknown gallery name %r" % name, file=sys.stderr)
        return 2
    hopffile.save_file(args.output, H, blocks)
    print("wrote %s (dim %d, blocks: %s)" % (args.output, H.dim, sorted(blocks)))
    return 0


def cmd_probe(args) -> int:
    try:
        H, _ = hopffile.load_file(args.file, strict=False)
    except (HopfLabError, OSError, ValueError, KeyError) as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    if args.what == "cocommutative":
        print("cocommutative: %s" % is_cocommutative(H))
    elif args.what == "group-likes-in-basis":
        gl = group_likes_in_basis(H)
        print("group-like basis elements: %s" % [H.labels[i] for i in gl])
    elif args.what == "characters":
        from .gallery import character_convolution_group
        chars, table = character_convolution_group(H)
        print("%d algebra characters; convolution group %s of order %d"
              % (len(chars), "abelian" if table.is_abelian() else "nonabelian",
                 table.n))
    return 0


def cmd_regress(args) -> int:
    from .regress import run_all
    results = run_all(long=args.long)
    ok = True
    for name, passed, detail in results:
        print("%-60s %s" % (name, "pass" if passed else "FAIL"))
        if not passed:
            ok = False
            if detail:
                print("    " + str(detail))
    return 0 if ok else 1


def main(argv=None) -> int:
    p = argparse.ArgumentParser(prog="hopflab", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build")
    b.add_argument("recipe", choices=["group-algebra", "function-algebra",
                                      "matched-pair", "qls", "nichols-a2",
                                      "fk3", "bosonize", "cleft-a2"])
    b.add_argument("--group", default="S3")
    b.add_argument("--m", type=int, default=2)
    b.add_argument("--N", type=int, default=2)
    b.add_argument("--gorder", type=int, default=2)
    b.add_argument("--l1", default="0")
    b.add_argument("--l2", default="0")
    b.add_argument("--l12", default="0")
    b.add_argument("-o", "--output", required=True)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify")
    v.add_argument("kind", choices=["hopf", "twist", "cocycle",
                                    "braided-twist", "braided-cocycle", "yd"])
    v.add_argument("file")
    v.add_argument("--block")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("twist")
    tsub = t.add_subparsers(dest="action", required=True)
    ta = tsub.add_parser("apply")
    ta.add_argument("file")
    ta.add_argument("--block", required=True)
    ta.add_argument("-o", "--output", required=True)
    ta.set_defaults(func=lambda a: cmd_apply(a, "twist"))

    c = sub.add_parser("cocycle")
    csub = c.add_subparsers(dest="action", required=True)
    ca = csub.add_parser("apply")
    ca.add_argument("file")
    ca.add_argument("--block", required=True)
    ca.add_argument("-o", "--output", required=True)
    ca.set_defaults(func=lambda a: cmd_apply(a, "cocycle"))

    d = sub.add_parser("dualize")
    d.add_argument("file")
    d.add_argument("-o", "--output", required=True)
    d.set_defaults(func=cmd_dualize)

    g = sub.add_parser("gallery")
    g.add_argument("name", choices=["j-xi", "sigma-xi", "j-alpha", "j-d",
                                    "j-n", "sigma-gm", "extend-j3"])
    g.add_argument("--N", type=int, default=2)
    g.add_argument("--gorder", type=int, default=2)
    g.add_argument("--xi", default="1")
    g.add_argument("--xi1", default="1")
    g.add_argument("--xi2", default="1")
    g.add_argument("--a12", default="1")
    g.add_argument("--a21", default="0")
    g.add_argument("--ambient", default="C2xC2", choices=["C2xC2", "S4"])
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--m", type=int, default=2)
    g.add_argument("-o", "--output", required=True)
    g.set_defaults(func=cmd_gallery)

    pr = sub.add_parser("probe")
    pr.add_argument("what", choices=["cocommutative", "characters",
                                     "group-likes-in-basis"])
    pr.add_argument("file")
    pr.set_defaults(func=cmd_probe)

    r = sub.add_parser("regress")
    r.add_argument("--long", action="store_true",
                   help="include the long FK4 checks")
    r.set_defaults(func=cmd_regress)

    args = p.parse_args(argv)
    try:
        return args.func(args)
    except HopfLabError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
