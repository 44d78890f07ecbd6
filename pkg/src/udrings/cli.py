"""Command-line front end: ``udrings --m 3 --N 2 classify "a0"``."""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import Algebra
from .classifier import census, locate_component, udr
from .errors import AlgebraError
from .fields import make_field
from .homs import hom_basis, hom_dim, stable_hom_dim
from .representations import string_module
from .strings import (
    Family,
    FamilySpec,
    HookKind,
    Side,
    build_family,
    enumerate_strings,
    format_string,
    parse,
    try_modify,
)
from .syzygy import ext1_dim, omega, omega_orbit, omega_power


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="udrings", description="String modules over the algebras Lambda_{m,N}.")
    p.add_argument("--m", type=int, help="number of vertices (>= 3); not needed by verify")
    p.add_argument("--N", type=int, help="relation exponent (>= 1); not needed by verify")
    p.add_argument("--field", choices=("rational", "gfp"), default="rational")
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "json", "dot"), default="table")
    p.add_argument("--max-len", type=int, default=None, help="enumeration / verify scale")
    p.add_argument("--radius", type=int, default=None, help="syzygy steps for orbit walks")
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", help="check strings and print their canonical forms").add_argument("strings", nargs="+")
    fam = sub.add_parser("families", help="build a named string")
    fam.add_argument("name", choices=[f.value for f in Family])
    fam.add_argument("--base", type=int, default=0)
    fam.add_argument("--level", type=int, default=0)
    fam.add_argument("--variant", default=None)
    sub.add_parser("enumerate", help="list strings up to --max-len, one per equivalence class")
    for name in ("hom", "stable-hom", "ext"):
        sp = sub.add_parser(name)
        sp.add_argument("source")
        sp.add_argument("target")
    om = sub.add_parser("omega", help="syzygy (negative power: inverse syzygy)")
    om.add_argument("string")
    om.add_argument("--power", type=int, default=1)
    sub.add_parser("orbit", help="syzygy orbit within --radius").add_argument("string")
    sub.add_parser("component", help="locate the stable AR component").add_argument("string")
    sub.add_parser("classify", help="universal deformation ring label").add_argument("strings", nargs="+")
    cen = sub.add_parser("census", help="orbit census of the tubes or of a component")
    cen.add_argument("scope", choices=("TUBES", "COMPONENT"))
    cen.add_argument("string", nargs="?")
    ver = sub.add_parser("verify", help="run acceptance checks")
    ver.add_argument("--criteria", default="1,2,3,4,5,6,7,8,9", help="comma separated numbers")
    return p


def _emit(args, payload, rows=None) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
        return
    for row in rows if rows is not None else [payload]:
        if isinstance(row, dict):
            print("  ".join(f"{k}={v}" for k, v in row.items()))
        else:
            print(row)


def _algebra_dict(alg, field) -> dict:
    return {"m": alg.m, "N": alg.N, "field": str(field)}


def _classify_record(alg, text, field, radius) -> dict:
    c = parse(alg, text)
    lab = udr(alg, c, radius=radius, field=field)
    return {
        "algebra": _algebra_dict(alg, field),
        "input": text,
        "canonical": format_string(c.canonical_form()),
        "locus": lab.locus.to_dict() if lab.locus else None,
        "ring": lab.ring_text(),
        "ext1": lab.ext1_self,
        "justification": lab.justification,
    }


def _dot(alg, c) -> str:
    """The string and its one-step hook and cohook neighbours as a DOT graph."""
    c = c.canonical_form()
    lines = ["digraph mesh {", f'  "{format_string(c)}";']
    for side in Side:
        for kind in HookKind:
            for direction in ("ADD", "STRIP"):
                d = try_modify(alg, c, side, kind, direction)
                if d is None:
                    continue
                # adding a hook or removing a cohook is an irreducible map out of C
                src, dst = (c, d) if (kind is HookKind.HOOK) == (direction == "ADD") else (d, c)
                lines.append(f'  "{format_string(src)}" -> "{format_string(dst)}" '
                             f'[label="{kind.value.lower()} {side.value.lower()}"];')
    lines.append("}")
    return "\n".join(lines)


def run(argv=None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    if args.command != "verify" and (args.m is None or args.N is None):
        parser.error("--m and --N are required")
    try:
        field = make_field(args.field, args.prime)
        if args.command == "verify":
            return _verify(args, field)
        return _dispatch(args, Algebra(args.m, args.N), field)
    except AlgebraError as exc:
        payload = {"error": exc.to_dict()}
        if args.format == "json":
            print(json.dumps(payload, sort_keys=True))
        else:
            print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1


def _dispatch(args, alg, field) -> int:
    cmd = args.command
    if cmd == "validate":
        out = []
        for text in args.strings:
            c = parse(alg, text)
            out.append({"input": text, "valid": True, "canonical": format_string(c.canonical_form()),
                        "length": c.length})
        _emit(args, {"algebra": _algebra_dict(alg, field), "results": out}, out)
    elif cmd == "families":
        c = build_family(alg, FamilySpec(Family(args.name), args.base, args.level, args.variant))
        _emit(args, {"family": args.name, "base": args.base, "level": args.level,
                     "string": format_string(c), "length": c.length})
    elif cmd == "enumerate":
        max_len = 4 if args.max_len is None else args.max_len
        cs = [format_string(c) for c in enumerate_strings(alg, max_len) if c.canonical]
        _emit(args, {"algebra": _algebra_dict(alg, field), "max_len": max_len, "count": len(cs),
                     "strings": cs}, cs + [f"# {len(cs)} strings"])
    elif cmd in ("hom", "stable-hom", "ext"):
        s, t = parse(alg, args.source), parse(alg, args.target)
        out = {"source": format_string(s), "target": format_string(t)}
        if cmd == "hom":
            basis = hom_basis(alg, s, t, field)
            out["basis_size"] = len(basis)
            out["oracle_dim"] = hom_dim(string_module(alg, s, field), string_module(alg, t, field))
            out["occurrences"] = [
                {"substring": format_string(o.substring), "source_start": o.source_start,
                 "target_start": o.target_start, "reversed": o.reversed}
                for o, _ in basis
            ]
        elif cmd == "stable-hom":
            out["dim"] = stable_hom_dim(string_module(alg, s, field), string_module(alg, t, field))
        else:
            out["dim"] = ext1_dim(alg, s, t, field)
        _emit(args, out)
    elif cmd == "omega":
        c = parse(alg, args.string)
        if args.power == 1:
            res = omega(alg, c, field, args.seed)
            out = {"input": format_string(c), "omega": format_string(res.string),
                   "cover_dim": res.cover_dim, "verified": res.verify()}
        else:
            out = {"input": format_string(c), "power": args.power,
                   "omega": format_string(omega_power(alg, c, args.power, field))}
        _emit(args, out)
    elif cmd == "orbit":
        radius = 2 if args.radius is None else args.radius
        orbit = omega_orbit(alg, parse(alg, args.string), radius, field)
        rows = [{"j": j - radius, "string": format_string(x)} for j, x in enumerate(orbit)]
        _emit(args, {"radius": radius, "orbit": rows}, rows)
    elif cmd == "component":
        c = parse(alg, args.string)
        if args.format == "dot":
            print(_dot(alg, c))
            return 0
        _emit(args, locate_component(alg, c, args.radius, field).to_dict())
    elif cmd == "classify":
        records = [_classify_record(alg, text, field, args.radius) for text in args.strings]
        if args.format == "json":
            print(json.dumps(records[0] if len(records) == 1 else records, ensure_ascii=False, sort_keys=True))
        else:
            for r in records:
                loc = r["locus"] or {}
                print(f"{r['canonical']}: ring={r['ring']} ext1={r['ext1']} "
                      f"family={loc.get('family', '-')} index={loc.get('orbit_index', '-')} "
                      f"[{r['justification']}]")
    elif cmd == "census":
        subject = parse(alg, args.string) if args.string else None
        rep = census(alg, args.scope, subject, field=field)
        rows = [r.__dict__ for r in rep.rows] + [t.__dict__ for t in rep.tubes]
        rows.append(f"# qualifying: {rep.omega_orbits} syzygy orbits, {rep.tau_orbits} Omega^2-orbits")
        _emit(args, rep.to_dict(), rows)
    return 0


def _verify(args, field) -> int:
    from . import verification as v

    wanted = [int(x) for x in args.criteria.split(",") if x.strip()]
    results = []
    for k in wanted:
        fn = v.CHECKS.get(k)
        if fn is None:
            print(f"udrings: error: unknown criterion {k}", file=sys.stderr)
            return 2
        kw = {}
        if args.max_len is not None and k in (1, 2, 9):
            kw["max_len"] = args.max_len
        results.append(fn(field=field, **kw))
    if args.format == "json":
        print(json.dumps([r.to_dict() for r in results], sort_keys=True))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
