"""End-to-end runs behind the command line: info, P0 search, relations, verification."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .config import LatticeSpec, SpecError, spec_from_dict
from .exactmath import CyclotomicElement, as_fraction
from .lattice import format_vector
from .p0search import find_p0, taylor_state
from .qseries import evaluate_relation, series_pow, theta_qexp
from .relations import (IndexPair, Label, RelationReport, all_theta_vectors, find_relations,
                        index_set, n_bound)
from .taylor import hat_closure

log = logging.getLogger(__name__)

NORMALIZATION = ("Theta entries omit the factor 4^lambda lambda! (pi i)^s(p), which depends only "
                 "on the index (p, n) and does not affect linear relations.")


def fmt_elem(x) -> Any:
    """Rationals as strings; other cyclotomic numbers as power-basis coordinate lists."""
    if isinstance(x, CyclotomicElement):
        if x.is_rational():
            return str(x.coeffs[0])
        return {"order": x.order, "coeffs": [str(c) for c in x.coeffs]}
    return str(x)


def parse_elem(obj, order: int) -> CyclotomicElement:
    if isinstance(obj, dict):
        try:
            return CyclotomicElement(int(obj["order"]), obj["coeffs"]).lift(order)
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecError(f"bad cyclotomic coefficient {obj!r}: {exc}") from None
    try:
        return CyclotomicElement.rational(order, as_fraction(str(obj)))
    except (TypeError, ValueError, ZeroDivisionError):
        raise SpecError(f"bad coefficient {obj!r}") from None


def _v(v) -> list[str]:
    return [str(x) for x in v]


def info(spec: LatticeSpec) -> dict:
    lat = spec.lattice
    rescaled = lat.rescale(spec.power)
    return {
        "name": spec.name,
        "dimension": lat.n,
        "gram": [list(r) for r in lat.gram],
        "determinant": lat.det,
        "level": lat.level,
        "elementary_divisors": lat.elementary_divisors,
        "power": spec.power,
        "c_bound": str(spec.c_bound),
        "dual_classes": lat.det,
        "alpha_reps": [_v(a) for a in spec.alpha_reps],
        "alpha_used": [_v(a) for a in spec.alphas],
        "beta_reps": [_v(b) for b in spec.beta_reps],
        "rescaled_dual_classes": rescaled.det,
        "n_bound_p0": n_bound((0,) * lat.n, lat.level, spec.power, lat.n),
    }


@dataclass
class P0Result:
    p0: list
    hat: list
    index: list[IndexPair]


def search_p0(spec: LatticeSpec, max_sum: int | None = None) -> P0Result:
    lat = spec.lattice
    rescaled = lat.rescale(spec.power)
    c = spec.c_bound / spec.power
    state = taylor_state(rescaled, c=c)
    p0 = find_p0(rescaled, max_sum=spec.max_sum if max_sum is None else max_sum, state=state)
    hat = hat_closure(p0)
    index = index_set(hat, lat.level, spec.power, lat.n)
    if spec.n_max is not None:
        index = [ix for ix in index if ix.n <= spec.n_max]
    return P0Result(p0, hat, index)


def p0_report(spec: LatticeSpec, res: P0Result) -> dict:
    return {
        "spec": spec.to_json(),
        "p0": [list(p) for p in res.p0],
        "p0_size": len(res.p0),
        "hat_size": len(res.hat),
        "index_size": len(res.index),
        "restricted_n_max": spec.n_max,
    }


def run_relations(spec: LatticeSpec, max_sum: int | None = None, threads: int = 1,
                  include_theta: bool = True) -> tuple[dict, RelationReport]:
    res = search_p0(spec, max_sum)
    log.info("P0 has %d elements, hat %d, index %d", len(res.p0), len(res.hat), len(res.index))
    vectors = all_theta_vectors(spec.lattice, spec.alphas, spec.beta_reps, spec.power, res.index,
                                c=spec.c_bound, threads=threads)
    report = find_relations(vectors)
    out = p0_report(spec, res)
    out.update({
        "normalization": NORMALIZATION,
        "field_order": report.order,
        "labels": [_label_json(lab) for lab in report.labels],
        "rank": report.rank,
        "independent": [_label_json(lab) for lab in report.independent],
        "relations": [
            {
                "label": _label_json(r.label),
                "coefficients": [fmt_elem(c) for c in r.coefficients],
                "terms": relation_terms(r.label, report.independent, r.coefficients),
            }
            for r in report.relations
        ],
    })
    if spec.n_max is not None:
        out["note"] = ("index set restricted to n <= n_max: the rank certifies independence, "
                       "but relations found here are not certified")
    if include_theta:
        out["index"] = [[list(ix.p), ix.n] for ix in res.index]
        out["theta"] = [{"label": _label_json(v.label), "values": [fmt_elem(x) for x in v.values]}
                        for v in vectors]
    return out, report


def _label_json(lab: Label) -> dict:
    return {"alpha": _v(lab.alpha), "beta": _v(lab.beta)}


def relation_terms(label: Label, independent, coeffs) -> list[dict]:
    """The relation as sum c * theta^N'_{label} = 0."""
    terms = [{**_label_json(label), "coeff": "1"}]
    for lab, c in zip(independent, coeffs):
        if not c.is_zero():
            terms.append({**_label_json(lab), "coeff": fmt_elem(-c)})
    return terms


def theta_name(alpha, beta, power: int) -> str:
    return f"θ^{power}_{{{format_vector(alpha)},{format_vector(beta)}}}"


def relation_text(label: Label, independent, coeffs, power: int) -> str:
    rhs = []
    for lab, c in zip(independent, coeffs):
        if c.is_zero():
            continue
        name = theta_name(lab.alpha, lab.beta, power)
        s = str(c)
        if c == 1:
            rhs.append(f"+ {name}")
        elif c == -1:
            rhs.append(f"- {name}")
        elif c.is_rational():
            q = c.to_fraction()
            rhs.append(f"{'-' if q < 0 else '+'} {abs(q)}*{name}")
        else:
            rhs.append(f"+ ({s})*{name}")
    body = " ".join(rhs) if rhs else "0"
    if body.startswith("+ "):
        body = body[2:]
    elif body.startswith("- "):
        body = "-" + body[2:]
    return f"{theta_name(label.alpha, label.beta, power)} = {body}"


# ---------------------------------------------------------------------------
# verification with the q-series oracle


@dataclass
class VerifyOutcome:
    relation: int
    ok: bool
    first_nonzero: str | None


def verify_relations(report: dict, spec: LatticeSpec | None = None, trunc=None) -> list[VerifyOutcome]:
    """Check every relation of a report (or hand-written file) against theta q-expansions."""
    if spec is None:
        if "spec" not in report:
            raise SpecError("relations file has no embedded spec; pass --spec or --builtin")
        spec = spec_from_dict(report["spec"])
    trunc = spec.truncation if trunc is None else as_fraction(trunc)
    rels = report.get("relations")
    if not isinstance(rels, list):
        raise SpecError("relations file must contain a list under 'relations'")
    lat = spec.lattice
    order = lat.level
    cache: dict = {}
    out = []
    for i, rel in enumerate(rels):
        terms = rel.get("terms") if isinstance(rel, dict) else None
        if not isinstance(terms, list) or not terms:
            raise SpecError(f"relation {i} has no terms")
        coeffs, series = [], []
        for t in terms:
            try:
                alpha = tuple(as_fraction(str(x)) for x in t["alpha"])
                beta = tuple(as_fraction(str(x)) for x in t["beta"])
            except (KeyError, TypeError, ValueError):
                raise SpecError(f"relation {i}: each term needs alpha, beta and coeff") from None
            if len(alpha) != lat.n or len(beta) != lat.n:
                raise SpecError(f"relation {i}: vector of the wrong dimension")
            key = (alpha, beta)
            if key not in cache:
                cache[key] = series_pow(theta_qexp(lat, alpha, beta, trunc, c=spec.c_bound), spec.power)
            coeffs.append(parse_elem(t.get("coeff", "1"), order))
            series.append(cache[key])
        resid = evaluate_relation(coeffs, series)
        bad = resid.nonzero_terms()
        first = None
        if bad:
            e, m, c = bad[0]
            first = f"q^{e} zeta^{list(m)}: {c}"
        out.append(VerifyOutcome(i, not bad, first))
    return out
