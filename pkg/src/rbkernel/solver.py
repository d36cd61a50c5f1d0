"""Exact solvers used as correctness oracles.

Both the red/blue domination optimum and the small-graph dominating set
optimum reduce to minimum set cover, solved here by branch and bound over
bitmasks.  These searches are meant for verification on small instances,
not for scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import RBGraph

MAX_DS_VERTICES = 24


class InstanceTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class SolveOutcome:
    """Either infeasible (size is None) or an optimum with a witness set."""

    size: int | None
    witness: frozenset | None

    @property
    def feasible(self) -> bool:
        return self.size is not None


INFEASIBLE = SolveOutcome(None, None)


def verify_solution(g: RBGraph, chosen) -> bool:
    """True iff ``chosen`` is a set of blue vertices dominating every red."""
    d = set(chosen)
    if not d <= g.blue:
        return False
    return all(g.adj[r] & d for r in g.red)


def min_rbds(g: RBGraph) -> SolveOutcome:
    """Exact minimum number of blues needed to dominate all reds.

    Blues play the role of sets, reds of universe elements.  Among all
    minimum solutions the lexicographically smallest id set is returned so
    golden tests stay stable.
    """
    reds = sorted(g.red)
    bit = {r: 1 << i for i, r in enumerate(reds)}
    target = (1 << len(reds)) - 1
    sets = [(b, _mask(g.adj[b], bit)) for b in sorted(g.blue)]
    res = _min_cover(target, sets)
    if res is None:
        return INFEASIBLE
    size, chosen = res
    return SolveOutcome(size, frozenset(chosen))


def decide_rbds(g: RBGraph, k: int) -> bool:
    """True iff at most ``k`` blues dominate every red vertex."""
    if k < 0:
        return False
    reds = sorted(g.red)
    bit = {r: 1 << i for i, r in enumerate(reds)}
    target = (1 << len(reds)) - 1
    sets = [(b, _mask(g.adj[b], bit)) for b in sorted(g.blue)]
    return _coverable(target, [m for _, m in sets], k)


def min_ds(adj: dict, limit: int = MAX_DS_VERTICES) -> SolveOutcome:
    """Exact minimum dominating set of a small general graph.

    ``adj`` maps each vertex to a set of neighbors.  Every vertex must be
    covered by a chosen vertex or a chosen neighbor, so the set system is
    the family of closed neighborhoods.
    """
    if len(adj) > limit:
        raise InstanceTooLargeError(
            "graph has %d vertices, exact search is capped at %d" % (len(adj), limit)
        )
    vs = sorted(adj)
    bit = {v: 1 << i for i, v in enumerate(vs)}
    target = (1 << len(vs)) - 1
    sets = [(v, _mask(adj[v], bit) | bit[v]) for v in vs]
    res = _min_cover(target, sets)
    if res is None:
        return INFEASIBLE  # unreachable: closed neighborhoods always cover
    size, chosen = res
    return SolveOutcome(size, frozenset(chosen))


# -- set cover engine --------------------------------------------------------


def _mask(items, bit) -> int:
    m = 0
    for x in items:
        m |= bit[x]
    return m


def _min_cover(target: int, sets: list[tuple[int, int]]):
    """Minimum cover of ``target`` by the given (id, mask) sets.

    Returns (size, sorted id tuple) or None when the union misses part of
    the universe.  The witness is the lexicographically smallest id set
    among minimum covers.
    """
    if target == 0:
        return 0, ()
    union = 0
    for _, m in sets:
        union |= m
    if union & target != target:
        return None

    best = _cover_size(target, sets)

    # Second pass: rebuild the witness greedily in ascending id order, at
    # each step keeping an id only if the optimum size stays reachable.
    chosen: list[int] = []
    covered = 0
    for i, (sid, m) in enumerate(sets):
        if len(chosen) == best:
            break
        need = best - len(chosen) - 1
        rest = [mm for _, mm in sets[i + 1:]]
        if _coverable(target & ~(covered | m), rest, need):
            chosen.append(sid)
            covered |= m
            if covered & target == target:
                break
    return best, tuple(chosen)


def _cover_size(target: int, sets: list[tuple[int, int]]) -> int:
    """Size of a minimum cover, assuming one exists."""
    masks = _prune_subsumed([m & target for _, m in sets])
    covers = _element_covers(target, masks)

    ub, _ = _greedy(target, masks)
    best = ub
    maxsize = max(m.bit_count() for m in masks)

    def dfs(uncovered: int, used: int) -> None:
        nonlocal best
        if uncovered == 0:
            if used < best:
                best = used
            return
        lb = used + -(-uncovered.bit_count() // maxsize)
        if lb >= best:
            return
        e = _pick_element(uncovered, covers)
        cands = sorted(covers[e], key=lambda m: -(m & uncovered).bit_count())
        for m in cands:
            dfs(uncovered & ~m, used + 1)

    dfs(target, 0)
    return best


def _coverable(target: int, masks: list[int], budget: int) -> bool:
    """Can ``target`` be covered with at most ``budget`` masks?"""
    if target == 0:
        return True
    if budget <= 0:
        return False
    masks = _prune_subsumed([m & target for m in masks if m & target])
    union = 0
    for m in masks:
        union |= m
    if union & target != target:
        return False
    covers = _element_covers(target, masks)
    maxsize = max(m.bit_count() for m in masks)

    def dfs(uncovered: int, left: int) -> bool:
        if uncovered == 0:
            return True
        if left <= 0 or -(-uncovered.bit_count() // maxsize) > left:
            return False
        e = _pick_element(uncovered, covers)
        cands = sorted(covers[e], key=lambda m: -(m & uncovered).bit_count())
        return any(dfs(uncovered & ~m, left - 1) for m in cands)

    return dfs(target, budget)


def _prune_subsumed(masks: list[int]) -> list[int]:
    """Drop masks contained in another mask (the search-side twin of the
    blue subset rule); keeps one copy of duplicates."""
    uniq = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    out = []
    for i, m in enumerate(uniq):
        if m == 0:
            continue
        if any(m & big == m for big in uniq[i + 1:]):
            continue
        out.append(m)
    return out


def _element_covers(target: int, masks: list[int]) -> dict[int, list[int]]:
    covers: dict[int, list[int]] = {}
    e = 1
    while e <= target:
        if e & target:
            covers[e] = [m for m in masks if m & e]
        e <<= 1
    return covers


def _pick_element(uncovered: int, covers: dict[int, list[int]]) -> int:
    """Uncovered element with the fewest covering sets: smallest branching."""
    best_e, best_n = 0, None
    e = 1
    while e <= uncovered:
        if e & uncovered:
            n = len(covers[e])
            if best_n is None or n < best_n:
                best_e, best_n = e, n
                if n <= 1:
                    break
        e <<= 1
    return best_e


def _greedy(target: int, masks: list[int]) -> tuple[int, int]:
    covered, used = 0, 0
    while covered & target != target:
        m = max(masks, key=lambda mm: (mm & target & ~covered).bit_count())
        if not m & target & ~covered:
            break
        covered |= m
        used += 1
    return used, covered
