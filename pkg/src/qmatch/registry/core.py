"""Registry of named checks: relation sets, series identities, parametric families."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

from ..dsl import evaluate, parse
from ..errors import InsufficientOrder, UnknownId
from ..matching import DEFAULT_MIN_CHECKS, MatchRelation, verify_relation
from ..series import VerificationReport, equal_to_order, extract, invert

from . import dissections, identities, theorems

RELATION_ORDER = 600
IDENTITY_ORDER = 400

KINDS = ("relation-set", "series-identity", "parametric-identity", "conjecture")


@dataclass(frozen=True)
class RegistryEntry:
    id: str
    kind: str
    source: str
    statement: str
    expr: Optional[str] = None
    expr_b: Optional[str] = None
    relations: tuple = ()
    stated: tuple = ()
    stated_b: Optional[str] = None
    suggested: tuple = ()
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    extract: Optional[tuple] = None
    printed_lhs: Optional[str] = None
    printed_rhs: Optional[str] = None
    erratum: Optional[str] = None
    aliases: tuple = ()
    params: tuple = ()
    derived: bool = False
    default_order: int = RELATION_ORDER
    # parametric entries: runner(param, N, min_checks) -> list of detail dicts
    runner: Optional[Callable] = field(default=None, compare=False, repr=False)
    # parametric entries: order needed for one parameter value
    param_order: Optional[Callable] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def has_errata(self) -> bool:
        return self.erratum is not None

    def min_order(self, checks: int = DEFAULT_MIN_CHECKS) -> int:
        """Smallest order at which every check in this entry gets ``checks`` comparisons."""
        if self.kind in ("relation-set", "conjecture"):
            return max(r.min_order(checks) for r in self.relations)
        if self.kind == "series-identity":
            return checks
        return max(self.param_order(p, checks) for p in self.params)

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "kind": self.kind,
            "source": self.source,
            "statement": self.statement,
            "min_order": self.min_order(DEFAULT_MIN_CHECKS),
        }
        for key in ("expr", "expr_b", "lhs", "rhs", "printed_lhs", "printed_rhs", "stated_b", "erratum"):
            v = getattr(self, key)
            if v is not None:
                d[key] = v
        if self.relations:
            d["relations"] = [r.to_dict() for r in self.relations]
        if self.stated:
            d["stated"] = [r.to_dict() for r in self.stated]
        if self.suggested:
            d["suggested"] = [r.to_dict() for r in self.suggested]
        if self.extract:
            d["extract"] = list(self.extract)
        if self.aliases:
            d["aliases"] = list(self.aliases)
        if self.params:
            d["params"] = [list(p) if isinstance(p, tuple) else p for p in self.params]
        if self.derived:
            d["derived"] = True
        return d


@dataclass
class EntryReport:
    id: str
    kind: str
    status: str
    report: VerificationReport
    details: list
    erratum: Optional[str] = None
    warnings: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> dict:
        d = {"id": self.id, "kind": self.kind, "status": self.status}
        d.update(self.report.to_dict())
        d["details"] = self.details
        if self.erratum:
            d["erratum"] = self.erratum
        if self.warnings:
            d["warnings"] = self.warnings
        return d


@dataclass
class Summary:
    entries: list

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def counterexamples(self) -> list:
        return [e for e in self.entries if e.status == "counterexample"]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "total": len(self.entries),
            "failed": [e.id for e in self.entries if not e.passed],
            "entries": [e.to_dict() for e in self.entries],
        }


# -- building the catalog -----------------------------------------------------------


def _rels(tuples) -> tuple:
    return tuple(MatchRelation(*t) for t in tuples)


def _theorem_entries():
    groups = [
        (theorems.INTRO, "relation-set", "introductory example"),
        (theorems.T12, "relation-set", "theorem, delta family"),
        (theorems.T13, "relation-set", "theorem, mu/nu/eta/zeta/theta family"),
        (theorems.T14, "relation-set", "theorem, Rogers-Ramanujan continued fraction family"),
        (theorems.T15, "relation-set", "theorem, Ramanujan-Goellnitz-Gordon family"),
        (theorems.T16, "relation-set", "theorem, Slater X/Y family"),
        (theorems.CONJECTURES, "conjecture", "conjecture"),
    ]
    out = []
    for items, kind, source in groups:
        for id_, expr, rels, statement in items:
            fix = theorems.ERRATA.get(id_)
            if fix is None:
                out.append(RegistryEntry(id_, kind, source, statement, expr=expr, relations=_rels(rels)))
            elif kind == "conjecture":
                # the printed list is the claim; a failure there is a counterexample
                out.append(RegistryEntry(
                    id_, kind, source, statement, expr=expr, relations=_rels(rels),
                    suggested=_rels(fix["relations"]), erratum=fix["note"],
                ))
            else:
                out.append(RegistryEntry(
                    id_, kind, source, statement, expr=expr,
                    relations=_rels(fix["relations"]), stated=_rels(rels),
                    stated_b=fix.get("stated_b"), erratum=fix["note"],
                ))
    return out


def _twin_entries():
    """q -> -q twins of the delta family: derived here, not stated in the source."""
    out = []
    for id_, expr, rels, _ in theorems.T12:
        fix = theorems.ERRATA.get(id_)
        if fix:
            rels = fix["relations"]
        twin = theorems.negate_q(expr)
        new = []
        for cA, aA, rA, cB, aB, rB in rels:
            # odd moduli only: the sign picked up is (-1)^(rA + rB) on every n
            if aA % 2 == 0 or aB % 2 == 0:
                raise ValueError(f"{id_}: twin rule needs odd moduli")
            new.append((cA, aA, rA, cB * (-1) ** (rA + rB), aB, rB))
        out.append(RegistryEntry(
            f"TW.{id_}", "relation-set", "q -> -q twin (derived, not asserted by the source)",
            f"{twin}: " + "; ".join(str(MatchRelation(*t)) for t in new),
            expr=twin, relations=_rels(new), derived=True,
        ))
    return out


def _identity_entries():
    groups = [
        (identities.LEMMAS, "lemma identity"),
        (identities.LEMMA_PROOFS, "identity used in a lemma proof"),
        (identities.PROOFS, "identity used in a theorem proof"),
    ]
    out = []
    for items, source in groups:
        for id_, lhs, rhs, statement, opts in items:
            out.append(RegistryEntry(
                id_, "series-identity", source, statement, lhs=lhs, rhs=rhs,
                extract=opts.get("extract"), printed_lhs=opts.get("printed_lhs"),
                printed_rhs=opts.get("printed_rhs"), erratum=opts.get("erratum"),
                aliases=tuple(opts.get("aliases", ())), default_order=IDENTITY_ORDER,
            ))
    for id_, lhs, rhs, statement in identities.JACOBI:
        out.append(RegistryEntry(id_, "series-identity", "introductory identity", statement,
                                 lhs=lhs, rhs=rhs, default_order=IDENTITY_ORDER))
    return out


def _parametric_entries():
    out = []
    for item in theorems.T11:
        out.append(RegistryEntry(
            item.id, "parametric-identity", "theorem, p-dissection family", item.statement,
            params=tuple(item.primes), runner=item.run, param_order=item.min_order,
        ))
    for id_, alias, name in dissections.THETA_LEMMA:
        out.append(RegistryEntry(
            id_, "parametric-identity", "lemma identity (theta function, monomial grid)", name,
            aliases=(alias,), params=tuple(dissections.default_grid(alias)),
            runner=dissections.theta_runner(alias), param_order=dissections.theta_order,
            default_order=dissections.THETA_ORDER,
        ))
    for id_, which, primes, name in dissections.P_DISSECTIONS:
        out.append(RegistryEntry(
            id_, "parametric-identity", "p-dissection", name, params=tuple(primes),
            runner=dissections.dissection_runner(which), param_order=dissections.dissection_order,
            default_order=dissections.DISSECTION_ORDER,
        ))
    return out


def _build():
    entries = _theorem_entries() + _identity_entries() + _parametric_entries() + _twin_entries()
    table, alias = {}, {}
    for e in entries:
        if e.id in table:
            raise ValueError(f"duplicate id {e.id}")
        table[e.id] = e
    for e in entries:
        for a in e.aliases:
            if a in table or a in alias:
                raise ValueError(f"alias {a} collides")
            alias[a] = e.id
    return table, alias


REGISTRY, ALIASES = _build()


def get_entry(id_: str) -> RegistryEntry:
    key = ALIASES.get(id_, id_)
    try:
        return REGISTRY[key]
    except KeyError:
        raise UnknownId(id_) from None


def list_ids(prefix: Optional[str] = None, include_derived: bool = False) -> list:
    return sorted(
        i for i, e in REGISTRY.items()
        if (prefix is None or i.startswith(prefix)) and (include_derived or not e.derived)
    )


def export_catalog(prefix: Optional[str] = None, include_derived: bool = True) -> str:
    entries = [REGISTRY[i].to_dict() for i in list_ids(prefix, include_derived)]
    return json.dumps(entries, indent=1, sort_keys=True)


# -- verification ---------------------------------------------------------------------


@lru_cache(maxsize=32)
def _series(text: str, N: int):
    return evaluate(parse(text), N)


@lru_cache(maxsize=32)
def _reciprocal(text: str, N: int):
    return invert(_series(text, N))


def _aggregate(details, N) -> VerificationReport:
    checked = sum(d["checked_count"] for d in details if d.get("counted", True))
    for d in details:
        if d.get("counted", True) and not d["passed"]:
            return VerificationReport(False, checked, d["first_failure_n"], N)
    return VerificationReport(True, checked, None, N)


def _detail(label, rep: VerificationReport, counted=True):
    d = {"label": label, "passed": rep.passed, "checked_count": rep.checked_count,
         "first_failure_n": rep.first_failure_n, "order_used": rep.order_used}
    if not counted:
        d["counted"] = False
    return d


def _run_relations(e: RegistryEntry, N, min_checks):
    A = _series(e.expr, N)
    B = _reciprocal(e.expr_b or e.expr, N)
    details = [_detail(str(r), verify_relation(A, B, r, min_checks)) for r in e.relations]
    if e.stated:
        Bs = _reciprocal(e.stated_b, N) if e.stated_b else B
        for r in e.stated:
            if r.checks_available(A.order, Bs.order) < 1:
                continue
            rep = verify_relation(A, Bs, r, 1)
            details.append(_detail(f"printed: {r}" + (" against " + e.stated_b if e.stated_b else ""),
                                   rep, counted=False))
    for r in e.suggested:
        details.append(_detail(f"suggested: {r}", verify_relation(A, B, r, min_checks), counted=False))
    return details


def _identity_sides(lhs, rhs, ex, N):
    if ex:
        a, b = ex
        L = extract(_series(lhs, a * N + b), ex)
    else:
        L = _series(lhs, N)
    return L, _series(rhs, N)


def _run_identity(e: RegistryEntry, N, min_checks):
    L, R = _identity_sides(e.lhs, e.rhs, e.extract, N)
    rep = equal_to_order(L, R)
    if rep.checked_count < min_checks and rep.passed:
        raise InsufficientOrder(
            f"{e.id}: only {rep.checked_count} coefficients compared, need {min_checks}",
            checked=rep.checked_count, required=min_checks,
        )
    details = [_detail("lhs = rhs", rep)]
    if e.printed_lhs or e.printed_rhs:
        Lp, Rp = _identity_sides(e.printed_lhs or e.lhs, e.printed_rhs or e.rhs, e.extract, N)
        details.append(_detail("printed form", equal_to_order(Lp, Rp), counted=False))
    return details


def _run_parametric(e: RegistryEntry, N, min_checks, params):
    details = []
    for p in params:
        need = e.param_order(p, min_checks)
        if N < need:
            raise InsufficientOrder(
                f"{e.id} at {p}: order {N} below the {need} needed for {min_checks} checks",
                checked=0, required=min_checks,
            )
        details.extend(e.runner(p, N, min_checks))
    return details


def verify_entry(
    id_: str,
    N: Optional[int] = None,
    min_checks: int = DEFAULT_MIN_CHECKS,
    auto_raise: bool = False,
    params=None,
) -> EntryReport:
    """Check one entry at order ``N`` (default: the entry's own default, raised to its minimum).

    With ``auto_raise`` an order too small for ``min_checks`` is raised and a
    warning recorded; otherwise :class:`InsufficientOrder` propagates.
    """
    e = get_entry(id_)
    warnings = []
    if params is None:
        params = e.params
    elif e.kind != "parametric-identity":
        raise ValueError(f"{e.id} takes no parameters")
    need = e.min_order(min_checks) if e.kind != "parametric-identity" else max(
        e.param_order(p, min_checks) for p in params)
    if N is None:
        N = max(e.default_order, need)
    elif N < need and auto_raise:
        warnings.append(f"order raised from {N} to {need} to give {min_checks} checks")
        N = need
    if e.kind in ("relation-set", "conjecture"):
        details = _run_relations(e, N, min_checks)
    elif e.kind == "series-identity":
        details = _run_identity(e, N, min_checks)
    else:
        details = _run_parametric(e, N, min_checks, params)
    rep = _aggregate(details, N)
    if e.kind == "conjecture":
        status = "verified to order" if rep.passed else "counterexample"
    else:
        status = "passed" if rep.passed else "failed"
    return EntryReport(e.id, e.kind, status, rep, details, e.erratum, warnings)


def _verify_one(args):
    id_, N, min_checks = args
    return verify_entry(id_, N, min_checks, auto_raise=True)


def verify_all(
    prefix: Optional[str] = None,
    N: Optional[int] = None,
    jobs: int = 1,
    min_checks: int = DEFAULT_MIN_CHECKS,
    include_derived: bool = False,
) -> Summary:
    """Run every entry whose id starts with ``prefix``; orders are raised per entry as needed."""
    ids = list_ids(prefix, include_derived)
    work = [(i, N, min_checks) for i in ids]
    if jobs and jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_verify_one, work))
    else:
        reports = [_verify_one(w) for w in work]
    return Summary(sorted(reports, key=lambda r: r.id))
