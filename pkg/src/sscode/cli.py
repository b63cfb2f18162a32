"""``sscode`` command-line tool.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import bounds, io, sizes
from .errors import SubspaceCodeError
from .registry import registry_default

CONSTRUCTIONS = [
    "pending-dots", "A", "A-mod", "B", "C4", "C5", "D", "lifted-mrd", "multicomponent", "registry", "punctured", "projective",
]


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--construction {args.construction} needs " + ", ".join("--" + m.replace("_", "-") for m in missing))


def _size_line(M: int, q: int) -> str:
    return f"{M} = {sizes.format_size(M, q)}"


def _build_code(args, reg):
    from . import cdc, constructions, projective

    c, q = args.construction, args.q
    if c == "pending-dots":
        _need(args, "n")
        return constructions.pending_dots(args.n, q)
    if c == "A":
        _need(args, "n", "k")
        return constructions.construction_A(args.n, args.k, q)
    if c == "A-mod":
        _need(args, "n", "k")
        return constructions.construction_A_mod(args.n, args.k, q)
    if c == "B":
        _need(args, "n", "k")
        return constructions.construction_B(args.n, args.k, q, reg)
    if c == "C4":
        _need(args, "n")
        return constructions.construction_C4(args.n, q, reg)
    if c == "C5":
        _need(args, "n")
        return constructions.construction_C5(args.n, q, reg)
    if c == "D":
        _need(args, "n", "k", "d", "delta")
        return cdc.construction_D(reg.build(q, args.n - args.delta, args.d, args.k), args.delta)
    if c == "lifted-mrd":
        _need(args, "n", "k", "d")
        return cdc.lifted_mrd(args.n, args.k, args.d, q)
    if c == "multicomponent":
        _need(args, "n", "k", "d")
        return cdc.multicomponent(args.n, args.k, args.d, q)
    if c == "registry":
        _need(args, "n", "k", "d")
        return reg.build(q, args.n, args.d, args.k)
    if c == "punctured":
        # puncture the registry code of length n+1
        _need(args, "n", "k", "d")
        seed = reg.buildable().build(q, args.n + 1, args.d, args.k)
        Q, v, _ = projective.choose_Qv(seed)
        return projective.punctured_code(seed, Q, v)
    if c == "projective":
        _need(args, "n", "d")
        return projective.projective_construct(args.n, args.d, q, args.metric, reg, materialize=True).code
    raise UsageError(f"unknown construction {c}")


def cmd_build(args) -> int:
    reg = registry_default()
    code = _build_code(args, reg)
    cells = hasattr(code, "cells") and not args.expand
    text = io.emit(code, cells)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        print(f"size={_size_line(code.size, code.field.q)}")
        print(f"wrote {args.output} ({'cells' if cells else 'expanded'})")
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    from .verify import default_jobs, verify_distance

    code = io.read(args.file)
    mode = args.mode or ("structured" if hasattr(code, "cells") else "exhaustive")
    report = verify_distance(
        code, mode=mode, budget=args.budget, pairs=args.pairs, seed=args.seed, jobs=args.jobs or default_jobs()
    )
    print(report)
    return 0 if report.passed else 1


def cmd_expand(args) -> int:
    code = io.read(args.file)
    text = io.emit(code, cells=False)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _registry_base(reg, q, n, d, k) -> int:
    return reg.lookup(q, n, d, k).size


def cmd_size(args) -> int:
    from .constructions import pending_ell

    c, q = args.construction, args.q
    reg = registry_default()
    if c == "pending-dots":
        _need(args, "n")
        M = sizes.size_pending_dots(args.n, q)
    elif c == "A":
        _need(args, "n", "k")
        M = sizes.size_A(args.n, args.k, q) if args.k == 3 or q * q + q + 1 >= pending_ell(args.n, args.k) else None
        if M is None:
            raise UsageError("field too small for Construction A; use A-mod")
    elif c == "A-mod":
        _need(args, "n", "k")
        M = sizes.size_A_mod(args.n, args.k, q)
    elif c in ("B", "C4", "C5"):
        k = {"C4": 4, "C5": 5}.get(c, args.k)
        if k is None:
            _need(args, "k")
        _need(args, "n")
        base = args.base if args.base is not None else _registry_base(reg, q, args.n - k, 2, k)
        if c == "B":
            f = sizes.size_B_enumerated if args.enumerated else sizes.size_B
            M = f(args.n, k, q, base)
        elif c == "C4":
            M = (sizes.size_C4_enumerated if args.enumerated else sizes.size_C4)(args.n, q, base)
        else:
            M = (sizes.size_C5_enumerated if args.enumerated else sizes.size_C5)(args.n, q, base)
    elif c == "D":
        _need(args, "n", "k", "d", "delta")
        base = args.base if args.base is not None else _registry_base(reg, q, args.n - args.delta, args.d, args.k)
        M = sizes.size_D(base, args.k, args.d, q, args.delta)
    elif c == "lifted-mrd":
        _need(args, "n", "k", "d")
        M = sizes.size_lifted_mrd(args.n, args.k, args.d, q)
    elif c == "multicomponent":
        _need(args, "n", "k", "d")
        M = sizes.size_MC(args.n, args.k, args.d, q)
    elif c == "registry":
        _need(args, "n", "k", "d")
        M = reg.lookup(q, args.n, args.d, args.k).size
    else:
        raise UsageError(f"no closed size for {c}")
    print(_size_line(M, q))
    return 0


def cmd_bounds(args) -> int:
    if args.suite:
        ok = True
        for q in args.suite_q or [2, 3]:
            for cmp in bounds.comparison_suite(q):
                print(cmp.line())
                ok &= cmp.passed
        return 0 if ok else 1
    if args.ratio:
        _need(args, "n", "k")
        r = bounds.steiner_ratio(args.n, args.k, args.q)
        print(f"ratio n={args.n} k={args.k} q={args.q} value={float(r):.6f} exact={r}")
        return 0
    _need(args, "n", "k", "d")
    print(f"johnson {bounds.johnson_bound(args.n, args.d, args.k, args.q)}")
    if args.d == args.k - 1 and args.k >= 3:
        s = bounds.steiner_bound(args.n, args.k, args.q)
        print(f"steiner {s.value} = {args.q}^{2 * (args.n - args.k)}+{s.remainder} ({s.estimate})")
    return 0


def cmd_tables(args) -> int:
    from .tables import table_report

    sys.stdout.write(table_report(args.which))
    return 0


def cmd_registry(args) -> int:
    reg = registry_default()
    if args.action == "list":
        for e in reg.entries():
            if args.q is None or e.q == args.q:
                print(f"{e.q} {e.n} {e.d} {e.k} {e.size} {e.provenance}" + (f" builder={e.builder}" if e.builder else ""))
        return 0
    _need(args, "n", "k", "d")
    q = args.q or 2
    e = reg.lookup(q, args.n, args.d, args.k)
    print(f"lookup {_size_line(e.size, q)} {e.provenance}")
    b = reg.best(q, args.n, args.d, args.k)
    print(f"best {_size_line(b.size, q)} {b.provenance}")
    for c in reg.candidates(q, args.n, args.d, args.k):
        print(f"  {c.builder}: {c.size}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sscode", description="Subspace code constructions and checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def params(sp, construction=True):
        if construction:
            sp.add_argument("--construction", "-c", required=True, choices=CONSTRUCTIONS)
        sp.add_argument("--q", type=int, default=2)
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int)
        sp.add_argument("--d", type=int)
        sp.add_argument("--delta", type=int)

    b = sub.add_parser("build", help="construct a code and write it")
    params(b)
    b.add_argument("--metric", choices=["I", "S"], default="I")
    b.add_argument("--expand", action="store_true", help="write every codeword (.ssc)")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check the declared minimum distance of a code file")
    v.add_argument("file")
    v.add_argument("--mode", choices=["exhaustive", "structured", "sampled"])
    v.add_argument("--pairs", type=int, default=1_000_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int)
    v.add_argument("--budget", type=int)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("size", help="closed-form cardinality")
    params(s)
    s.add_argument("--base", type=int, help="size of the base code (default: registry)")
    s.add_argument("--enumerated", action="store_true", help="sum cell sizes instead of the closed form")
    s.set_defaults(func=cmd_size)

    bo = sub.add_parser("bounds", help="upper bounds and size comparisons")
    params(bo, construction=False)
    bo.add_argument("--suite", action="store_true", help="run the size-difference inequalities")
    bo.add_argument("--suite-q", type=int, action="append")
    bo.add_argument("--ratio", action="store_true", help="Construction A size relative to the lifted-MRD upper bound")
    bo.set_defaults(func=cmd_bounds)

    t = sub.add_parser("tables", help="regenerate a comparison table")
    t.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    t.set_defaults(func=cmd_tables)

    e = sub.add_parser("expand", help="turn a cell file into an expanded file")
    e.add_argument("file")
    e.add_argument("-o", "--output")
    e.set_defaults(func=cmd_expand)

    r = sub.add_parser("registry", help="list or inspect best known sizes")
    r.add_argument("action", choices=["list", "inspect"])
    r.add_argument("--q", type=int)
    r.add_argument("--n", type=int)
    r.add_argument("--k", type=int)
    r.add_argument("--d", type=int)
    r.set_defaults(func=cmd_registry)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SubspaceCodeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
