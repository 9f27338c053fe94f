"""Command-line front end.

Every command prints one document ``{command, input_digest, result,
diagnostics, timing}``.  Output is byte-identical across runs for identical
input: vectors are primitive where they are rays, sorted
lexicographically, rationals are written as ``"p/q"`` strings and integers
bare.  ``timing`` is null unless ``--timing`` is given, because wall-clock
numbers would break that contract.

Exit codes: 0 ok, 1 verification failure, 2 usage, 3 parse error,
4 precondition violated, 5 budget exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from .budget import Budget, BudgetExhausted
from .equivariant import (
    ChainSpec,
    EventuallyConstantSeq,
    PreconditionError,
    classify_global_cone,
    classify_global_monoid,
    classify_local_cone,
    classify_local_monoid,
    classify_restricted_dual,
    equivariant_dual_generators,
    equivariant_hilbert_basis,
    global_dual_member,
    local_cone,
    monoid_stability_index,
    orbit_representatives,
    refined_params,
    stability_index,
    sym_closure_cone,
    transfer_plan,
)
from .exactmath import as_rational
from .latticepoints import MonoidSpec, hilbert_basis
from .oracle import OracleConfig, pairing_audit, restricted_dual_probe
from .polyhedra import contains, dual, equals, lineality, membership_witness
from .suites import SUITES, run_suite

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_PARSE, EXIT_PRECONDITION, EXIT_BUDGET = 0, 1, 2, 3, 4, 5


class ParseError(ValueError):
    pass


# -- serialization --------------------------------------------------------------------


def q_out(x):
    x = as_rational(x)
    return x if isinstance(x, int) else f"{x.numerator}/{x.denominator}"


def vec_out(v) -> list:
    return [q_out(x) for x in v]


def vecs_out(vs) -> list:
    return [vec_out(v) for v in sorted(tuple(v) for v in vs)]


def _entry(x, where: str):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"{where}: expected an integer or a \"p/q\" string, got {x!r}")
    try:
        return as_rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def parse_spec_text(text: str) -> ChainSpec:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if not isinstance(doc, dict) or "r" not in doc or "generators" not in doc:
        raise ParseError('spec must be an object with keys "r" and "generators"')
    r = doc["r"]
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ParseError(f'"r" must be a positive integer, got {r!r}')
    rows = doc["generators"]
    if not isinstance(rows, list):
        raise ParseError('"generators" must be a list of rows')
    gens = []
    for i, row in enumerate(rows, start=1):
        if not isinstance(row, list):
            raise ParseError(f"generator row {i}: expected a list")
        if len(row) != r:
            raise ParseError(f"generator row {i}: length {len(row)} differs from r = {r}")
        gens.append(tuple(_entry(x, f"generator row {i}, column {j}") for j, x in enumerate(row, start=1)))
    return ChainSpec(r, tuple(gens))


def spec_json(spec: ChainSpec) -> dict:
    return {"r": spec.r, "generators": [vec_out(g) for g in spec.generators]}


def parse_vector(text: str, what: str = "vector") -> list:
    text = text.strip()
    try:
        raw = json.loads(text) if text.startswith("[") else [t.strip().strip('"') for t in text.split(",") if t.strip()]
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: invalid JSON at column {exc.colno}: {exc.msg}") from None
    return [_entry(x, f"{what} entry {j}") for j, x in enumerate(raw, start=1)]


# -- commands -------------------------------------------------------------------------


def cmd_dual(args, spec, budget, diag):
    C = local_cone(spec, args.level)
    D = dual(C, budget)
    lin = lineality(D)
    return {"level": args.level, "rays": vecs_out(D.rays), "lineality": vecs_out(lin),
            "pointed": not lin}


def cmd_equidual(args, spec, budget, diag):
    n = args.level
    plan = transfer_plan(spec, args.refined)
    F = equivariant_dual_generators(spec, n, args.refined)
    out = {"level": n, "refined": args.refined, "base_level": plan.base_level,
           "insertion_index": plan.index, "base": vecs_out(plan.base), "generators": vecs_out(F)}
    if args.refined:
        s, t, p = refined_params(spec)
        out["params"] = {"s": s, "t": t, "p": p}
    if args.no_check:
        out["sound"] = None
        diag.append("oracle cross-check skipped (--no-check)")
        return out
    direct = dual(local_cone(spec, n), budget)
    same = equals(sym_closure_cone(F, n), direct)
    audit = pairing_audit(spec.nonzero, F, OracleConfig(seed=args.seed), n)
    out["sound"] = bool(same and audit.ok)
    if not audit.ok:
        diag.append(f"pairing violation: {audit.counterexample}")
    if not same:
        diag.append("cone(Sym(n)(F_n)) differs from the directly computed dual")
    return out


def cmd_hilbert(args, spec, budget, diag):
    if not spec.is_integral:
        raise PreconditionError("Hilbert bases need integral generators")
    H = hilbert_basis(local_cone(spec, args.level), budget)
    return {"level": args.level, "basis": vecs_out(H), "size": len(H), "norm": H.norm,
            "representatives": vecs_out(orbit_representatives(H))}


def cmd_equihilbert(args, spec, budget, diag):
    mode = "certified" if args.certified else "empirical"
    res = equivariant_hilbert_basis(spec, mode, args.cap, args.window, budget)
    out = {"mode": mode, "monoid_class": res.monoid_class.value, "level": res.level,
           "q": res.q, "representatives": vecs_out(res.representatives),
           "basis": vecs_out(res.basis) if res.basis is not None else None,
           "report": res.report.to_json()}
    if res.basis is None and res.report.empirical_index is None and res.monoid_class.value == "Positive":
        diag.append(f"no stabilization found up to cap {args.cap}")
    return out


def cmd_stabilize(args, spec, budget, diag):
    if args.monoid:
        rep = monoid_stability_index(spec, args.cap, args.window, certify=args.certified, budget=budget)
    else:
        rep = stability_index(spec, args.cap, args.window)
    return {"chain": "monoid" if args.monoid else "cone", "report": rep.to_json()}


def cmd_classify(args, spec, budget, diag):
    if args.restricted_dual:
        tag = classify_restricted_dual(spec).value
        probe = restricted_dual_probe(spec.nonzero, spec.r, OracleConfig(seed=args.seed))
        if probe.observed != tag:
            diag.append(f"oracle probe observed {probe.observed}: {probe.counterexample}")
        return {"scope": "restricted_dual", "tag": tag, "oracle_observed": probe.observed}
    if args.level is not None:
        C = local_cone(spec, args.level)
        if args.monoid:
            M = MonoidSpec(args.level, C.rays)
            return {"scope": "local", "level": args.level, "tag": classify_local_monoid(M).value}
        return {"scope": "local", "level": args.level, "tag": classify_local_cone(C).value}
    tag = classify_global_monoid(spec) if args.monoid else classify_global_cone(spec)
    return {"scope": "global", "tag": tag.value}


def cmd_member(args, spec, budget, diag):
    if args.global_dual:
        if args.prefix is None or args.tail is None:
            raise PreconditionError("--global-dual needs --prefix and --tail")
        w = EventuallyConstantSeq(tuple(parse_vector(args.prefix, "prefix")), parse_vector(args.tail, "tail")[0])
        v = global_dual_member(spec, w)
        out = {"scope": "global_dual", "prefix": vec_out(w.prefix), "tail": q_out(w.tail),
               "member": v.member, "min_pairing": q_out(v.min_pairing) if v.min_pairing is not None else None}
        if not v.member:
            out["violation"] = {"generator": vec_out(v.generator), "placed": vec_out(v.violation)}
        return out
    if args.level is None or args.vector is None:
        raise PreconditionError("member needs --level and --vector (or --global-dual)")
    u = parse_vector(args.vector)
    if len(u) != args.level:
        raise PreconditionError(f"vector has length {len(u)}, level is {args.level}")
    C = local_cone(spec, args.level)
    ok = contains(C, u)
    out = {"scope": "local", "level": args.level, "vector": vec_out(u), "member": ok}
    if ok:
        wit = membership_witness(C, u)
        out["witness"] = [{"ray": vec_out(r), "coefficient": q_out(c)} for r, c in wit.terms]
    return out


def cmd_verify(args, spec, budget, diag):
    names = list(SUITES) if args.suite in (None, "all") else [args.suite]
    rows = []
    for name in names:
        res = run_suite(name, args.seed, args.trials)
        rows.append({"suite": name, "trials": res.trials, "violations": res.violations,
                     "ok": res.ok, "counterexample": None if res.ok else repr(res.counterexample)})
        if not res.ok:
            diag.append(res.line())
    return {"seed": args.seed, "suites": rows, "ok": all(r["ok"] for r in rows)}


COMMANDS = {
    "dual": cmd_dual, "equidual": cmd_equidual, "hilbert": cmd_hilbert,
    "equihilbert": cmd_equihilbert, "stabilize": cmd_stabilize, "classify": cmd_classify,
    "member": cmd_member, "verify": cmd_verify,
}


# -- argument parsing -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--budget", type=int, default=None,
                        help="node/ray ceiling for expensive steps (default: $SYMCONES_BUDGET, else unlimited)")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the output")

    p = argparse.ArgumentParser(prog="symcones", description="Symmetric cones, duals and Hilbert bases.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_spec(name, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.add_argument("spec", help='chain spec JSON file ({"r": .., "generators": [[..], ..]}), or - for stdin')
        return sp

    sp = with_spec("dual", "rays of C_n^* by double description")
    sp.add_argument("--level", type=int, required=True)

    sp = with_spec("equidual", "equivariant generating set F_n of C_n^*")
    sp.add_argument("--level", type=int, required=True)
    sp.add_argument("--refined", action="store_true")
    sp.add_argument("--no-check", action="store_true", help="skip the direct-dual cross-check")
    sp.add_argument("--seed", type=int, default=0)

    sp = with_spec("hilbert", "Hilbert basis of C_n cap Z^n")
    sp.add_argument("--level", type=int, required=True)

    sp = with_spec("equihilbert", "equivariant Hilbert basis of the monoid chain")
    sp.add_argument("--certified", action="store_true")
    sp.add_argument("--cap", type=int, default=8)
    sp.add_argument("--window", type=int, default=3)

    sp = with_spec("stabilize", "stability index of the cone or monoid chain")
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--window", type=int, default=3)
    sp.add_argument("--monoid", action="store_true")
    sp.add_argument("--certified", action="store_true", help="also compute the certified bound q (monoid)")

    sp = with_spec("classify", "classification tag")
    sp.add_argument("--level", type=int)
    sp.add_argument("--monoid", action="store_true")
    sp.add_argument("--restricted-dual", action="store_true")
    sp.add_argument("--seed", type=int, default=0)

    sp = with_spec("member", "membership in C_n or in the global dual")
    sp.add_argument("--level", type=int)
    sp.add_argument("--vector")
    sp.add_argument("--global-dual", action="store_true")
    sp.add_argument("--prefix")
    sp.add_argument("--tail")

    sp = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    sp.add_argument("--suite", choices=["all"] + list(SUITES), default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=None)
    return p


def _digest(args, spec) -> str:
    skip = {"format", "timing", "spec", "command"}
    payload = {
        "command": args.command,
        "spec": spec_json(spec) if spec is not None else None,
        "args": {k: v for k, v in sorted(vars(args).items()) if k not in skip},
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


def render_table(doc: dict) -> str:
    lines = [f"command: {doc['command']}", f"input:   {doc['input_digest']}"]

    def walk(obj, indent):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)) and v and not _is_vec(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_fmt(v)}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, dict):
                    walk(v, indent)
                    lines.append("")
                else:
                    lines.append(f"{pad}{_fmt(v)}")

    walk({"result": doc["result"]}, 0)
    for d in doc["diagnostics"]:
        lines.append(f"note: {d}")
    if doc["timing"] is not None:
        lines.append(f"time: {doc['timing']['seconds']}s")
    return "\n".join(lines)


def _is_vec(v) -> bool:
    return isinstance(v, list) and all(isinstance(x, (int, str)) for x in v)


def _fmt(v) -> str:
    if _is_vec(v):
        return "(" + ", ".join(str(x) for x in v) + ")"
    if v is None:
        return "-"
    return str(v).lower() if isinstance(v, bool) else str(v)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    spec = None
    diag: list[str] = []
    try:
        if args.command != "verify":
            text = sys.stdin.read() if args.spec == "-" else _read(args.spec)
            spec = parse_spec_text(text)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE

    budget = Budget(args.budget) if args.budget is not None else Budget.from_env()
    start = time.perf_counter()
    code = EXIT_OK
    try:
        result = COMMANDS[args.command](args, spec, budget, diag)
    except ParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return EXIT_PARSE
    except BudgetExhausted as exc:
        result = {"outcome": "budget exhausted", "detail": str(exc)}
        code = EXIT_BUDGET
    except ValueError as exc:  # PreconditionError, NotPointed, dimension errors
        print(f"precondition violated: {exc}", file=stderr)
        return EXIT_PRECONDITION
    if args.command == "verify" and not result["ok"]:
        code = EXIT_VERIFY
    if args.command == "equidual" and result.get("sound") is False:
        code = EXIT_VERIFY

    doc = {
        "command": args.command,
        "input_digest": _digest(args, spec),
        "result": result,
        "diagnostics": diag,
        "timing": {"seconds": round(time.perf_counter() - start, 3)} if args.timing else None,
    }
    if args.format == "table":
        print(render_table(doc), file=stdout)
    else:
        print(json.dumps(doc, indent=2, default=_json_default), file=stdout)
    return code


def _json_default(o):
    if isinstance(o, Fraction):
        return q_out(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
