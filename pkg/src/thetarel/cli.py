"""Command line interface.

Exit codes: 0 success, 2 bad input, 3 P0 search failure, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import BUILTIN, LatticeSpec, SpecError, builtin_spec, load_spec
from .lattice import LatticeError, format_vector
from .p0search import P0SearchError
from . import pipeline

EXIT_OK, EXIT_INPUT, EXIT_SEARCH, EXIT_VERIFY = 0, 2, 3, 4


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="thetarel",
                                 description="Exact linear relations among powers of lattice theta functions.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, needs_spec=True):
        g = p.add_mutually_exclusive_group(required=needs_spec)
        g.add_argument("--spec", type=Path, help="JSON lattice specification")
        g.add_argument("--builtin", choices=sorted(BUILTIN), help="use a built-in specification")
        p.add_argument("--out", type=Path, help="write the JSON report here")

    p = sub.add_parser("info", help="lattice invariants and coset representatives")
    common(p)
    p = sub.add_parser("find-p0", help="greedy search for P0")
    common(p)
    p.add_argument("--max-sum", type=int, help="largest s(p) tried (default from the spec file)")
    p = sub.add_parser("relations", help="theta vectors, rank and relations")
    common(p)
    p.add_argument("--max-sum", type=int, help="largest s(p) tried (default from the spec file)")
    p.add_argument("--threads", type=int, default=1, help="worker threads; output does not depend on it")
    p.add_argument("--omit-theta", action="store_true", help="leave the theta vectors out of the JSON")
    p = sub.add_parser("verify", help="check relations against theta q-expansions")
    common(p, needs_spec=False)
    p.add_argument("relations", type=Path, help="relations JSON (as written by 'relations --out')")
    p.add_argument("--trunc", type=str, help="q-series truncation (default from the spec file)")
    return ap


def _load(args) -> LatticeSpec | None:
    if getattr(args, "builtin", None):
        return builtin_spec(args.builtin)
    if getattr(args, "spec", None):
        return load_spec(args.spec)
    return None


def _write(path: Path | None, data: dict):
    if path is not None:
        text = json.dumps(data, indent=1, sort_keys=True, ensure_ascii=False) + "\n"
        path.write_text(text, encoding="utf-8")


def _cmd_info(args, spec: LatticeSpec) -> int:
    data = pipeline.info(spec)
    print(f"{spec.name}: dimension {data['dimension']}, det {data['determinant']}, level {data['level']}")
    print(f"elementary divisors {data['elementary_divisors']}, c bound {data['c_bound']}")
    print(f"power {spec.power}: {len(spec.alphas)} of {len(spec.alpha_reps)} alpha survive, "
          f"{len(spec.beta_reps)} beta")
    for a in spec.alphas:
        print(f"  alpha {format_vector(a)}")
    for b in spec.beta_reps:
        print(f"  beta  {format_vector(b)}")
    _write(args.out, data)
    return EXIT_OK


def _cmd_find_p0(args, spec: LatticeSpec) -> int:
    res = pipeline.search_p0(spec, args.max_sum)
    print(f"P0: {len(res.p0)} multi-indices, hat closure {len(res.hat)}, index set {len(res.index)}")
    print(" ".join("(" + ",".join(map(str, p)) + ")" for p in res.p0))
    _write(args.out, pipeline.p0_report(spec, res))
    return EXIT_OK


def _cmd_relations(args, spec: LatticeSpec) -> int:
    data, report = pipeline.run_relations(spec, args.max_sum, max(1, args.threads),
                                          include_theta=not args.omit_theta)
    print(f"{spec.name}: P0 {data['p0_size']}, hat {data['hat_size']}, index {data['index_size']}, "
          f"{len(report.labels)} theta powers, rank {report.rank}, {len(report.relations)} relations")
    if report.order > 2:
        print(f"(z denotes exp(2 pi i/{report.order}))")
    if "note" in data:
        print("note:", data["note"])
    for r in report.relations:
        print("  " + pipeline.relation_text(r.label, report.independent, r.coefficients, spec.power))
    _write(args.out, data)
    return EXIT_OK


def _cmd_verify(args, spec: LatticeSpec | None) -> int:
    try:
        report = json.loads(args.relations.read_text())
    except OSError as exc:
        raise SpecError(f"cannot read {args.relations}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise SpecError(f"{args.relations} is not valid JSON: {exc}") from None
    if not isinstance(report, dict):
        raise SpecError("relations file must be a JSON object")
    outcomes = pipeline.verify_relations(report, spec, args.trunc)
    for o in outcomes:
        print(f"relation {o.relation}: {'ok' if o.ok else 'FAILED at ' + o.first_nonzero}")
    failed = sum(not o.ok for o in outcomes)
    print(f"{len(outcomes) - failed} of {len(outcomes)} relations hold")
    _write(args.out, {"results": [{"relation": o.relation, "ok": o.ok, "first_nonzero": o.first_nonzero}
                                  for o in outcomes]})
    return EXIT_VERIFY if failed else EXIT_OK


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handlers = {"info": _cmd_info, "find-p0": _cmd_find_p0, "relations": _cmd_relations,
                "verify": _cmd_verify}
    try:
        spec = _load(args)
        return handlers[args.command](args, spec)
    except P0SearchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEARCH
    except (SpecError, LatticeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
