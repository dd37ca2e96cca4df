"""Claim-verification sweep over graph corpora.

Each isolate-free input graph is measured exactly (gamma, gamma_t,
pattern freeness, special vertices, classifier verdict) and then checked
against the named claims below. A violation means the library broke an
established theorem, so the CLI turns any violation into exit code 2.

Claims:

* ``bounds``: gamma <= gamma_t <= 2*gamma, and gamma_t <= 2n/3 on
  connected graphs of order >= 3.
* ``lemma6``: if the special-vertex representatives form a packing and a
  dominating set, then gamma_t = 2*gamma (no freeness assumption).
* ``prop7``: on graphs with no induced c6/h1/h2 the classifier verdict
  matches the oracle test gamma_t = 2*gamma (both directions).
* ``cor2``: chordal graphs are pattern-free and the classifier matches
  the oracle on them.
* ``lemma5``: on graphs with gamma_t = 2*gamma, the minimum dominating
  sets are exactly the packing-and-dominating sets of size gamma.
* ``cor9``: on pattern-free graphs with gamma_t = 2*gamma, the number of
  minimum dominating sets equals the product of twin-class sizes, and is
  1 iff every class is a singleton.
* ``cor4``: a graph with gamma_t = 2*gamma and minimum degree >= 2
  contains an induced triangle or hexagon and has girth at most 6.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from multiprocessing import Pool

from . import characterize, domination, structure
from .domination import DEFAULT_ORACLE_CAP
from .forbidden import C3, C6, find_induced, girth, is_chordal, is_free
from .graphs import Graph, basic_stats, parse_graph6, serialize_graph6

CLAIM_NAMES = ("bounds", "lemma5", "lemma6", "prop7", "cor2", "cor4", "cor9")


@dataclass
class Violation:
    claim: str
    graph6: str
    detail: str


@dataclass
class ClaimResult:
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)


@dataclass
class SweepResult:
    graphs_seen: int = 0
    skipped_isolated: int = 0
    claims: dict[str, ClaimResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(not c.violations for c in self.claims.values())

    def merge_graph(self, checked: dict[str, int], violations: list[tuple[str, str, str]]) -> None:
        for name, inc in checked.items():
            self.claims.setdefault(name, ClaimResult()).checked += inc
        for claim, g6, detail in violations:
            self.claims.setdefault(claim, ClaimResult()).violations.append(
                Violation(claim, g6, detail)
            )


def check_graph(
    g: Graph, claims: tuple[str, ...] = CLAIM_NAMES, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> tuple[bool, dict[str, int], list[tuple[str, str, str]]]:
    """Check one graph. Returns (skipped, per-claim checked counts, violations)."""
    stats = basic_stats(g)
    if stats.isolated_count:
        return True, {}, []

    gamma = domination.exact_gamma(g, oracle_cap).value
    gamma_t = domination.exact_gamma_total(g, oracle_cap).value
    is_g2 = gamma_t == 2 * gamma
    # freeness is searched explicitly even on chordal graphs so cor2 can
    # check the "chordal implies pattern-free" inclusion
    free = is_free(g)[0]
    chordal = is_chordal(g)
    classes = structure.special_classes(g)
    reps = sorted(classes.representatives)
    pack = domination.is_packing(g, reps)[0]
    dom = domination.is_dominating(g, reps)
    verdict = characterize.classify(g).verdict

    checked: dict[str, int] = {}
    violations: list[tuple[str, str, str]] = []
    g6 = serialize_graph6(g).decode("ascii")

    def record(claim: str, ok: bool, detail: str) -> None:
        checked[claim] = checked.get(claim, 0) + 1
        if not ok:
            violations.append((claim, g6, detail))

    if "bounds" in claims:
        ok = gamma <= gamma_t <= 2 * gamma
        if ok and stats.component_count == 1 and g.n >= 3:
            ok = 3 * gamma_t <= 2 * g.n
        record("bounds", ok, f"gamma={gamma} gamma_t={gamma_t} n={g.n}")

    if "lemma6" in claims:
        ok = is_g2 if (pack and dom) else True
        record("lemma6", ok, f"representatives {reps} pack+dominate but gamma_t={gamma_t} != 2*{gamma}")

    if "prop7" in claims and free:
        ok = (verdict == characterize.VERDICT_YES) == is_g2
        record("prop7", ok, f"classifier={verdict} oracle gamma={gamma} gamma_t={gamma_t}")

    if "cor2" in claims and chordal:
        ok = free and (verdict == characterize.VERDICT_YES) == is_g2
        record("cor2", ok, f"chordal graph: free={free} classifier={verdict} gamma={gamma} gamma_t={gamma_t}")

    if "lemma5" in claims and is_g2:
        enum = domination.enumerate_gamma_sets(g, cap=oracle_cap)
        pd = set()
        for combo in combinations(range(g.n), gamma):
            if domination.is_dominating(g, combo) and domination.is_packing(g, combo)[0]:
                pd.add(frozenset(combo))
        ok = set(enum.sets) == pd
        record("lemma5", ok, f"gamma-sets {sorted(map(sorted, enum.sets))} != packing+dominating {sorted(map(sorted, pd))}")

    if "cor9" in claims and free and is_g2:
        formula = 1
        for c in classes.classes:
            formula *= len(c)
        enum = domination.enumerate_gamma_sets(g, cap=oracle_cap)
        ok = formula == enum.count and (enum.count == 1) == all(len(c) == 1 for c in classes.classes)
        record("cor9", ok, f"twin-class product {formula}, enumerated {enum.count}")

    if "cor4" in claims and is_g2 and stats.min_degree >= 2:
        has_short = find_induced(g, C3) is not None or find_induced(g, C6) is not None
        ok = girth(g) <= 6 and has_short
        record("cor4", ok, f"girth={girth(g)} induced c3/c6 present={has_short}")

    return False, checked, violations


_WORKER_CLAIMS: tuple[str, ...] = CLAIM_NAMES
_WORKER_CAP: int = DEFAULT_ORACLE_CAP


def _init_worker(claims: tuple[str, ...], cap: int) -> None:
    global _WORKER_CLAIMS, _WORKER_CAP
    _WORKER_CLAIMS = claims
    _WORKER_CAP = cap


def _worker(g6: str) -> tuple[bool, dict[str, int], list[tuple[str, str, str]]]:
    return check_graph(parse_graph6(g6), _WORKER_CLAIMS, _WORKER_CAP)


def sweep_graphs(
    graphs,
    claims: tuple[str, ...] = CLAIM_NAMES,
    jobs: int = 1,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> SweepResult:
    """Run the claim checks over an iterable of graphs.

    With ``jobs > 1`` the graphs fan out to a process pool; results merge
    back in input order either way.
    """
    result = SweepResult(claims={name: ClaimResult() for name in claims})
    if jobs <= 1:
        for g in graphs:
            result.graphs_seen += 1
            skipped, checked, violations = check_graph(g, claims, oracle_cap)
            if skipped:
                result.skipped_isolated += 1
            result.merge_graph(checked, violations)
        return result

    lines = (serialize_graph6(g).decode("ascii") for g in graphs)
    with Pool(jobs, initializer=_init_worker, initargs=(claims, oracle_cap)) as pool:
        for skipped, checked, violations in pool.imap(_worker, lines, chunksize=64):
            result.graphs_seen += 1
            if skipped:
                result.skipped_isolated += 1
            result.merge_graph(checked, violations)
    return result
