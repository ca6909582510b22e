"""Brute-force reference implementations used to check the transducer
algebra.

Everything here recomputes relations from first principles: pairs are
collected by naively walking arcs and concatenating symbol strings, and
the algebra operations are recomputed on plain Python sets.  Nothing in
this module calls back into the library's own closure/compose/apply
logic, so agreement between the two is meaningful.
"""

from __future__ import annotations

import random

from hindimorph.fst import EPSILON, SymbolTable, Transducer, build

ALPHABET = ("a", "b", "c")


class OracleBudgetExceeded(Exception):
    """The naive walk grew past its safety budget (regenerate the trial)."""


def path_pairs(t: Transducer, max_arcs: int, budget: int = 400_000) -> set[tuple[str, str]]:
    """All accepting (input, output) pairs over paths of <= max_arcs arcs.

    Walks every path individually (no config merging) so it cannot share
    bugs with the library's level-BFS enumerator.
    """
    table = t.symbols
    pairs: set[tuple[str, str]] = set()
    frontier: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = [(t.start, (), ())]
    steps = 0
    for _ in range(max_arcs + 1):
        nxt = []
        for state, ins, outs in frontier:
            if state in t.finals:
                pairs.add((_render(ins, table), _render(outs, table)))
            for arc in t.out_arcs(state):
                steps += 1
                if steps > budget:
                    raise OracleBudgetExceeded(f"more than {budget} path steps")
                nins = ins if arc.ilab == EPSILON else ins + (arc.ilab,)
                nouts = outs if arc.olab == EPSILON else outs + (arc.olab,)
                nxt.append((arc.dst, nins, nouts))
        frontier = nxt
        if not frontier:
            break
    # pairs from states reached exactly at the horizon were added above;
    # anything still in `frontier` has used max_arcs+1 arcs already.
    return pairs


def relation_upto(t: Transducer, cap: int, budget: int = 400_000) -> set[tuple[str, str]]:
    """All accepting pairs whose input AND output are <= cap symbols long.

    Unlike path_pairs this is horizon-exact for cyclic machines: the cap
    applies to the strings themselves, not to how many arcs a particular
    construction happens to spend producing them.
    """
    table = t.symbols
    start = (t.start, (), ())
    seen = {start}
    stack = [start]
    pairs: set[tuple[str, str]] = set()
    while stack:
        state, ins, outs = stack.pop()
        if state in t.finals:
            pairs.add((_render(ins, table), _render(outs, table)))
        for arc in t.out_arcs(state):
            nins = ins if arc.ilab == EPSILON else ins + (arc.ilab,)
            nouts = outs if arc.olab == EPSILON else outs + (arc.olab,)
            if len(nins) > cap or len(nouts) > cap:
                continue
            cfg = (arc.dst, nins, nouts)
            if cfg not in seen:
                if len(seen) > budget:
                    raise OracleBudgetExceeded(f"more than {budget} configs")
                seen.add(cfg)
                stack.append(cfg)
    return pairs


def full_relation(t: Transducer) -> set[tuple[str, str]]:
    """Entire relation of an acyclic machine (paths cannot repeat states)."""
    return path_pairs(t, t.state_count)


def _render(ids: tuple[int, ...], table: SymbolTable) -> str:
    return "".join(table.lookup(i) for i in ids)


# ---------------------------------------------------------------------------
# set-theoretic recombination


def union_sets(a: set, b: set) -> set:
    return a | b


def concat_sets(a: set, b: set) -> set:
    return {(x1 + x2, y1 + y2) for x1, y1 in a for x2, y2 in b}


def compose_sets(a: set, b: set) -> set:
    by_mid: dict[str, list[str]] = {}
    for y, z in b:
        by_mid.setdefault(y, []).append(z)
    return {(x, z) for x, y in a for z in by_mid.get(y, ())}


def invert_sets(a: set) -> set:
    return {(y, x) for x, y in a}


def project_sets(a: set, side: str) -> set:
    if side == "input":
        return {(x, x) for x, _ in a}
    return {(y, y) for _, y in a}


def star_upto(a: set, cap: int) -> set:
    """Kleene closure of a pair set, restricted to both sides <= cap."""
    growing = {p for p in a if p != ("", "")}
    closed = {("", "")}
    frontier = {("", "")}
    while frontier:
        nxt = set()
        for x, y in frontier:
            for u, v in growing:
                cand = (x + u, y + v)
                if len(cand[0]) <= cap and len(cand[1]) <= cap and cand not in closed:
                    closed.add(cand)
                    nxt.add(cand)
        frontier = nxt
    return closed


def plus_upto(a: set, cap: int) -> set:
    tail = star_upto(a, cap)
    return {(x + u, y + v)
            for x, y in a
            for u, v in tail
            if len(x + u) <= cap and len(y + v) <= cap}


def optional_sets(a: set) -> set:
    return a | {("", "")}


# ---------------------------------------------------------------------------
# random machine generation


def make_table() -> SymbolTable:
    return SymbolTable(ALPHABET)


def rand_acyclic(rng: random.Random, table: SymbolTable,
                 max_states: int = 5, out_degree: int = 3) -> Transducer:
    """Random DAG-shaped transducer: arcs only go to higher state ids."""
    n = rng.randint(2, max_states)
    labels = [0] + [table.id_of(s) for s in ALPHABET]
    arcs = []
    for src in range(n - 1):
        for _ in range(rng.randint(0, out_degree)):
            dst = rng.randint(src + 1, n - 1)
            arcs.append((src, rng.choice(labels), rng.choice(labels), dst))
    finals = [s for s in range(n) if rng.random() < 0.5]
    if not finals:
        finals = [n - 1]
    return build(n, 0, finals, arcs, table)


def rand_machine(rng: random.Random, table: SymbolTable,
                 max_states: int = 5, out_degree: int = 3) -> Transducer:
    """Random transducer that may contain cycles (including epsilon ones)."""
    n = rng.randint(1, max_states)
    labels = [0] + [table.id_of(s) for s in ALPHABET]
    arcs = []
    for src in range(n):
        for _ in range(rng.randint(0, out_degree)):
            arcs.append((src, rng.choice(labels), rng.choice(labels),
                         rng.randint(0, n - 1)))
    finals = [s for s in range(n) if rng.random() < 0.5]
    if not finals:
        finals = [rng.randrange(n)]
    return build(n, 0, finals, arcs, table)
