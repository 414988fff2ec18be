"""Command-line front end.

Subcommands: count prints the exact sequences of the three weighted models,
verify runs exhaustive bijection sweeps and exits 1 on the first mismatch,
asymptotics prints the growth-constant report, generate streams canonical
objects of a class, and gt prints the label multisets of the generating
tree.  Output is deterministic for fixed flags; json is the machine format.
"""

import argparse
import json
import sys
from fractions import Fraction
from itertools import permutations as _itertools_permutations

from .asymptotics import central_charge, non_dfinite_check, solve_constants
from .counting import VPoly, b_sequence, e_sequence, t_sequence
from .kmsw import (
    kmsw_backward,
    kmsw_forward,
    poset_to_v_walk,
    t_walk_to_transversal,
    transversal_to_t_walk,
    v_walk_to_poset,
)
from .maps import grid_quad_count, grid_transversal, is_poset
from .permutations import (
    Permutation,
    descents,
    is_plane,
    omega_counts,
    perm_children,
    perm_label,
    perm_parent,
    phi_map,
    poset_children,
    poset_label,
    poset_parent,
    psi_map,
    tree_leaves,
)
from .walks import FaceStep, SEStep, enumerate_walks, walk_to_json

MODELS = ("posets-edges", "posets-vertices", "transversal")
SUITES = ("kmsw", "poset-v", "transversal", "plane-perm", "gt")
CLASSES = ("bipolar", "poset", "plane-perm", "transversal")


def _scalar_text(val) -> str:
    if isinstance(val, bool):
        return "true" if val else "false"
    if isinstance(val, float):
        return repr(val)
    return str(val)


def _pjson(doc) -> None:
    print(json.dumps(doc, sort_keys=True))


def _parse_v(parser, text, allow_symbolic=False):
    """--v as an exact Fraction; None means the flag was absent (v = 0)."""
    if text is None:
        return Fraction(0)
    if text == "symbolic":
        if not allow_symbolic:
            parser.error("--v symbolic is only available for count")
        return None
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        parser.error(f"cannot parse --v value {text!r} as a rational")
    if value < 0:
        parser.error("--v must be nonnegative")
    return value


# --- count -------------------------------------------------------------------


def _term_text(t) -> str:
    return t.render() if isinstance(t, VPoly) else str(t)


def _term_json(t):
    if isinstance(t, VPoly):
        return {"coeffs": list(t.coeffs)}
    if isinstance(t, Fraction):
        return int(t) if t.denominator == 1 else str(t)
    return t


def _cmd_count(parser, args) -> int:
    if args.n < 1:
        parser.error("--n must be at least 1")
    if args.model != "transversal" and args.v is not None:
        parser.error("--v applies only to the transversal model")
    v = Fraction(0)
    if args.model == "posets-edges":
        terms = e_sequence(args.n)
    elif args.model == "posets-vertices":
        terms = b_sequence(args.n)
    else:
        v = _parse_v(parser, args.v, allow_symbolic=True)
        terms = t_sequence(args.n, v)
    if args.format == "json":
        doc = {"model": args.model, "n": args.n, "terms": [_term_json(t) for t in terms]}
        if args.model == "transversal":
            doc["v"] = "symbolic" if v is None else str(v)
        _pjson(doc)
    elif args.format == "csv":
        print("n,term")
        for i, t in enumerate(terms, 1):
            print(f"{i},{_term_text(t)}")
    else:
        sep = ", " if any(isinstance(t, VPoly) for t in terms) else " "
        print(sep.join(_term_text(t) for t in terms))
    return 0


# --- verify ------------------------------------------------------------------


def _n_se(walk) -> int:
    return sum(1 for s in walk.steps if isinstance(s, SEStep))


def _face_types(walk) -> list:
    return sorted((s.i, s.j) for s in walk.steps if isinstance(s, FaceStep))


def _suite_kmsw(max_len):
    """Plain walks of length <= max_len, boundaries <= 2, against the core maps."""
    for length in range(max_len + 1):
        for a in range(3):
            for b in range(3):
                for w in enumerate_walks("plain", length, start=(0, a), end=(b, 0)):
                    m = kmsw_backward(w)
                    back = kmsw_forward(m)
                    if back != w:
                        return {
                            "check": "backward then forward is the identity",
                            "walk": walk_to_json(w),
                            "returned": walk_to_json(back),
                        }
                    if kmsw_backward(back) != m:
                        return {
                            "check": "forward then backward is the identity",
                            "walk": walk_to_json(w),
                        }
                    if _n_se(w) != m.map.n_vertices - 2:
                        return {
                            "check": "SE count equals non-pole vertices",
                            "walk": walk_to_json(w),
                            "vertices": m.map.n_vertices,
                        }
                    inner = sorted(tuple(m.face_type(h)) for h in m.inner_face_halves())
                    if _face_types(w) != inner:
                        return {
                            "check": "face-step types equal inner-face types",
                            "walk": walk_to_json(w),
                            "inner_faces": inner,
                        }
                    strict = all(
                        s.i >= 1 and s.j >= 1
                        for s in w.steps
                        if isinstance(s, FaceStep)
                    )
                    if strict != is_poset(m):
                        return {
                            "check": "strict face steps characterise posets",
                            "walk": walk_to_json(w),
                        }
    return None


def _suite_poset_v(max_edges):
    """phi_V / psi_V from both ends: posets by edges, then V-walks."""
    # the single-edge poset has no non-pole vertex, so it sits outside the
    # vertex correspondence; start at two edges
    for n_edges in range(2, max_edges + 1):
        length = n_edges - 1
        for a in range(length + 1):
            for b in range(length + 1):
                for w in enumerate_walks("E", length, start=(0, a), end=(b, 0)):
                    P = kmsw_backward(w)
                    if not is_poset(P):
                        return {"check": "E walks yield posets", "walk": walk_to_json(w)}
                    vw = poset_to_v_walk(P)
                    if v_walk_to_poset(vw) != P:
                        return {
                            "check": "poset to V-walk and back is the identity",
                            "walk": walk_to_json(w),
                            "v_walk": walk_to_json(vw),
                        }
    for length in range(max(0, max_edges - 1)):
        for a in range(3):
            for b in range(3):
                for w in enumerate_walks("V", length, start=(0, a), end=(b, 0)):
                    P = v_walk_to_poset(w)
                    if not is_poset(P):
                        return {"check": "V walks yield posets", "walk": walk_to_json(w)}
                    if P.map.n_vertices != length + 3:
                        return {
                            "check": "poset has walk length plus three vertices",
                            "walk": walk_to_json(w),
                            "vertices": P.map.n_vertices,
                        }
                    if P.pole_type() != (a, b):
                        return {
                            "check": "pole type equals walk boundary sizes",
                            "walk": walk_to_json(w),
                            "pole_type": P.pole_type(),
                        }
                    back = poset_to_v_walk(P)
                    if back != w:
                        return {
                            "check": "V-walk to poset and back is the identity",
                            "walk": walk_to_json(w),
                            "returned": walk_to_json(back),
                        }
    return None


def _unmarked_nw(walk) -> int:
    return sum(
        s.attached.count("NW")
        for s in walk.steps
        if isinstance(s, FaceStep) and s.attached
    )


def _suite_transversal(max_len):
    """T-walks of length <= max_len against transversal structures.

    The empty walk is skipped: the plain square carries no transversal
    structure, and every nonempty quadrant walk has an SE step.
    """
    for length in range(1, max_len + 1):
        for a in range(3):
            for b in range(3):
                for w in enumerate_walks("T", length, start=(0, a), end=(b, 0)):
                    x = t_walk_to_transversal(w)
                    back = transversal_to_t_walk(x)
                    if back != w:
                        return {
                            "check": "T-walk to structure and back is the identity",
                            "walk": walk_to_json(w),
                            "returned": walk_to_json(back),
                        }
                    if len(x.inner_vertices()) != _n_se(w):
                        return {
                            "check": "inner vertices equal SE count",
                            "walk": walk_to_json(w),
                            "inner_vertices": len(x.inner_vertices()),
                        }
                    if x.quad_count() != _unmarked_nw(w):
                        return {
                            "check": "quadrangular faces equal unmarked NW letters",
                            "walk": walk_to_json(w),
                            "quads": x.quad_count(),
                        }
    for n in range(1, 10):
        x, quads = grid_transversal(n)
        w = transversal_to_t_walk(x)
        if t_walk_to_transversal(w) != x:
            return {"check": "grid structure round-trip", "n": n}
        if quads != grid_quad_count(n) or quads != x.quad_count() or quads != _unmarked_nw(w):
            return {
                "check": "grid quadrangle count",
                "n": n,
                "quads": quads,
                "formula": grid_quad_count(n),
            }
    return None


def _suite_plane_perm(max_n):
    """Phi / Psi sweeps between plane permutations and posets by vertices."""
    level = [Permutation((1,))]
    for size in range(1, max_n + 1):
        if size <= min(max_n, 7):
            brute = sorted(
                vals
                for vals in _itertools_permutations(range(1, size + 1))
                if is_plane(Permutation(vals))
            )
            if sorted(p.values for p in level) != brute:
                return {
                    "check": "generating tree reaches exactly the plane permutations",
                    "size": size,
                }
        for p in level:
            bmap = phi_map(p)
            if not is_poset(bmap):
                return {"check": "Phi yields posets", "perm": list(p.values)}
            back = psi_map(bmap)
            if back != p:
                return {
                    "check": "Psi of Phi is the identity",
                    "perm": list(p.values),
                    "returned": list(back.values),
                }
            if descents(p) + 1 != tree_leaves(bmap):
                return {
                    "check": "descents equal rightmost-tree leaves minus one",
                    "perm": list(p.values),
                }
            if perm_label(p) != poset_label(bmap):
                return {
                    "check": "generating-tree labels transport through Phi",
                    "perm": list(p.values),
                }
        if size < max_n:
            level = [c for p in level for c in perm_children(p)]
    for size in range(1, max_n + 1):
        length = size - 1
        for a in range(length + 1):
            for b in range(length + 1):
                for w in enumerate_walks("V", length, start=(0, a), end=(b, 0)):
                    bmap = v_walk_to_poset(w)
                    p = psi_map(bmap)
                    if not is_plane(p):
                        return {
                            "check": "Psi yields plane permutations",
                            "perm": list(p.values),
                        }
                    if phi_map(p) != bmap:
                        return {
                            "check": "Phi of Psi is the identity",
                            "perm": list(p.values),
                            "walk": walk_to_json(w),
                        }
    return None


def _omega_productions(h, k):
    return [(t, k + 1) for t in range(1, h + 1)] + [
        (h + t, k + 1 - t) for t in range(1, k + 1)
    ]


def _suite_gt(max_levels):
    """Both generating trees against the label rewriting rule, level by level."""
    totals = b_sequence(max_levels)
    omega = omega_counts(max_levels)
    perms = [Permutation((1,))]
    posets = [phi_map(Permutation((1,)))]
    for lvl in range(1, max_levels + 1):
        if len(perms) != totals[lvl - 1]:
            return {
                "check": "level size equals the vertex-counted sequence",
                "level": lvl,
                "size": len(perms),
                "expected": totals[lvl - 1],
            }
        expected = sorted(
            lab for lab, c in omega[lvl - 1].items() for _ in range(c)
        )
        if sorted(perm_label(p) for p in perms) != expected:
            return {"check": "permutation labels follow the rewriting rule", "level": lvl}
        if sorted(poset_label(b) for b in posets) != expected:
            return {"check": "poset labels follow the rewriting rule", "level": lvl}
        if lvl == max_levels:
            break
        next_perms, next_posets = [], []
        for p, b in zip(perms, posets):
            if phi_map(p) != b:
                return {
                    "check": "Phi intertwines the two trees",
                    "level": lvl,
                    "perm": list(p.values),
                }
            pc = perm_children(p)
            bc = poset_children(b)
            prods = _omega_productions(*perm_label(p))
            if [perm_label(c) for c in pc] != prods:
                return {
                    "check": "permutation children realise the productions in order",
                    "perm": list(p.values),
                }
            if [poset_label(c) for c in bc] != prods:
                return {
                    "check": "poset children realise the productions in order",
                    "perm": list(p.values),
                }
            for c in pc:
                if perm_parent(c) != p:
                    return {
                        "check": "permutation parent inverts the child step",
                        "perm": list(c.values),
                    }
            for c in bc:
                parent, _ = poset_parent(c)
                if parent != b:
                    return {
                        "check": "poset parent inverts the child step",
                        "perm": list(p.values),
                    }
            next_perms.extend(pc)
            next_posets.extend(bc)
        perms, posets = next_perms, next_posets
    return None


_SUITE_FUNCS = {
    "kmsw": _suite_kmsw,
    "poset-v": _suite_poset_v,
    "transversal": _suite_transversal,
    "plane-perm": _suite_plane_perm,
    "gt": _suite_gt,
}


def _cmd_verify(parser, args) -> int:
    if args.format == "csv":
        parser.error("csv output is not available for verify")
    if args.max < 1:
        parser.error("--max must be at least 1")
    fail = _SUITE_FUNCS[args.suite](args.max)
    if args.format == "json":
        doc = {"suite": args.suite, "max": args.max, "ok": fail is None}
        if fail is not None:
            doc["counterexample"] = fail
        _pjson(doc)
    elif fail is None:
        print(f"suite {args.suite}: ok (max {args.max})")
    else:
        print(f"suite {args.suite}: FAIL")
        _pjson(fail)
    return 0 if fail is None else 1


# --- asymptotics ---------------------------------------------------------------


def _cmd_asymptotics(parser, args) -> int:
    if args.model != "transversal" and args.v is not None:
        parser.error("--v applies only to the transversal model")
    v = _parse_v(parser, args.v)
    const = solve_constants(args.model, v)
    charge = central_charge(const.alpha)
    obstruction = non_dfinite_check(args.model, v)["certified_non_dfinite"]
    pairs = [("model", args.model)]
    if args.model == "transversal":
        pairs.append(("v", str(v)))
    pairs += [
        ("z0", round(const.z0, 10)),
        ("gamma", round(const.gamma, 10)),
        ("xi", round(const.xi, 10)),
        ("alpha", round(const.alpha, 10)),
        ("central_charge", round(charge, 10)),
        ("dfinite_obstruction", obstruction),
    ]
    if args.format == "json":
        _pjson(dict(pairs))
    elif args.format == "csv":
        print("key,value")
        for key, val in pairs:
            print(f"{key},{_scalar_text(val)}")
    else:
        for key, val in pairs:
            print(f"{key} = {_scalar_text(val)}")
    return 0


# --- generate ------------------------------------------------------------------


def _cmd_generate(parser, args) -> int:
    if args.format == "csv":
        parser.error("csv output is not available for generate")
    n = args.size
    if n < 1:
        parser.error("--size must be at least 1")
    if args.cls == "plane-perm":
        level = [Permutation((1,))]
        for _ in range(n - 1):
            level = [c for p in level for c in perm_children(p)]
        for vals in sorted(p.values for p in level):
            if args.format == "json":
                print(json.dumps(list(vals)))
            else:
                print(" ".join(map(str, vals)))
        return 0
    if args.cls in ("bipolar", "poset"):
        walk_class = "plain" if args.cls == "bipolar" else "E"
        length = n - 1
        for a in range(length + 1):
            for b in range(length + 1):
                for w in enumerate_walks(walk_class, length, start=(0, a), end=(b, 0)):
                    _pjson(kmsw_backward(w).canonical().to_json())
        return 0
    for p in range(n + 1):
        for q in range(n + 1):
            for length in range(n, 2 * n + 1):
                for w in enumerate_walks("T", length, start=(0, p), end=(q, 0)):
                    if _n_se(w) != n:
                        continue
                    _pjson(t_walk_to_transversal(w).canonical().to_json())
    return 0


# --- gt ------------------------------------------------------------------------


def _cmd_gt(parser, args) -> int:
    if args.levels < 1:
        parser.error("--levels must be at least 1")
    table = omega_counts(args.levels)
    if args.format == "json":
        doc = {
            "levels": [
                {
                    "level": i,
                    "total": sum(counts.values()),
                    "labels": [
                        {"h": h, "k": k, "count": c}
                        for (h, k), c in sorted(counts.items())
                    ],
                }
                for i, counts in enumerate(table, 1)
            ]
        }
        _pjson(doc)
    elif args.format == "csv":
        print("level,h,k,count")
        for i, counts in enumerate(table, 1):
            for (h, k), c in sorted(counts.items()):
                print(f"{i},{h},{k},{c}")
    else:
        for i, counts in enumerate(table, 1):
            cells = " ".join(f"({h},{k})x{c}" for (h, k), c in sorted(counts.items()))
            print(f"level {i}: {cells} total {sum(counts.values())}")
    return 0


# --- wiring --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tandemwalks",
        description="Exact counting and bijection checks for oriented planar "
        "maps and quadrant tandem walks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="print a counting sequence")
    c.add_argument("--model", choices=MODELS, required=True)
    c.add_argument("--n", type=int, required=True, help="number of terms")
    c.add_argument("--v", help="quadrangle weight: a rational, or 'symbolic'")

    ver = sub.add_parser("verify", help="run an exhaustive bijection sweep")
    ver.add_argument("--suite", choices=SUITES, required=True)
    ver.add_argument("--max", type=int, required=True, help="size bound of the sweep")

    asy = sub.add_parser("asymptotics", help="print the constants report")
    asy.add_argument("--model", choices=MODELS, required=True)
    asy.add_argument("--v", help="quadrangle weight (rational, transversal only)")

    gen = sub.add_parser("generate", help="stream all canonical objects of a size")
    gen.add_argument("--class", dest="cls", choices=CLASSES, required=True)
    gen.add_argument(
        "--size",
        type=int,
        required=True,
        help="edges for bipolar/poset, points for plane-perm, "
        "inner vertices for transversal",
    )

    gt = sub.add_parser("gt", help="print generating-tree label multisets")
    gt.add_argument("--levels", type=int, required=True)

    for p in (c, ver, asy, gen, gt):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    return parser


_HANDLERS = {
    "count": _cmd_count,
    "verify": _cmd_verify,
    "asymptotics": _cmd_asymptotics,
    "generate": _cmd_generate,
    "gt": _cmd_gt,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _HANDLERS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
