"""Ground-truth counting of pattern-avoiding permutations.

Three routes: brute force over S_n, pruned rightward-tree expansion, and
refined counting where each permutation contributes a monomial u^a v^b in
its label statistics.  The brute force is the oracle; everything faster is
checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _all_perms
from typing import Callable, Iterator

from .patterns import PatternSet, avoids
from .perms import Perm, append_child, reduce_to_perm, statistic
from .series import Poly

BRUTE_GUARD = 10

# Filters on a statistic pair (a, b), selecting refined sub-series.
FILTERS: dict[str, Callable[[int, int], bool]] = {
    "u>v": lambda a, b: a > b,
    "u<v": lambda a, b: a < b,
    "u=v": lambda a, b: a == b,
    "v=1": lambda a, b: b == 1,
    "theta1": lambda a, b: a < b != 1,
    "theta2": lambda a, b: (a, b) == (0, 1),
    "theta3": lambda a, b: a > b == 1,
    "theta4": lambda a, b: a > b > 1,
}


class ClosureError(ValueError):
    """The class is not closed under deletion of the last entry."""


def iter_avoiders_brute(pats: PatternSet, n: int) -> Iterator[Perm]:
    for perm in _all_perms(range(1, n + 1)):
        if avoids(perm, pats):
            yield perm


def count_brute(pats: PatternSet, n: int, guard: int = BRUTE_GUARD) -> int:
    """|S_n(pats)| by filtering all n! permutations."""
    if not 1 <= n <= guard:
        raise ValueError(f"n={n} outside the brute-force guard 1..{guard}")
    return sum(1 for _ in iter_avoiders_brute(pats, n))


def iter_tree_levels(pats: PatternSet, nmax: int) -> Iterator[list[Perm]]:
    """Levels 1..nmax of the rightward generating tree, as permutation lists.

    Assumes (does not check) that the class is closed under last-entry
    deletion, so pruning at each level is sound.
    """
    level: list[Perm] = [(1,)] if avoids((1,), pats) else []
    yield level
    for n in range(1, nmax):
        nxt = []
        for perm in level:
            for v in range(1, n + 2):
                child = append_child(perm, v)
                if avoids(child, pats):
                    nxt.append(child)
        level = nxt
        yield level


def closure_check(pats: PatternSet, nmax: int = 6) -> None:
    """Verify closure under last-entry deletion, exhaustively up to nmax.

    Raises ClosureError with a counterexample if some avoider's parent
    (last entry deleted, rest relabeled) fails to avoid.
    """
    for n in range(2, nmax + 1):
        for perm in iter_avoiders_brute(pats, n):
            parent = reduce_to_perm(perm[:-1])
            if not avoids(parent, pats):
                raise ClosureError(
                    f"avoider {perm} has non-avoiding parent {parent}")


def count_tree(pats: PatternSet, nmax: int, check_closure: bool = False) -> list[int]:
    """Level sizes 1..nmax of the pruned rightward tree."""
    if check_closure:
        closure_check(pats, min(nmax, 6))
    return [len(level) for level in iter_tree_levels(pats, nmax)]


@dataclass(frozen=True)
class RefinedCount:
    """Coefficient of u^a v^b = number of length-n avoiders with statistics (a, b)."""

    n: int
    poly: Poly

    def total(self) -> int:
        return self.poly(1, 1)


def refined_series(pats: PatternSet, stats: tuple[str, ...], nmax: int,
                   filter: str | None = None) -> list[RefinedCount]:
    """Per-length polynomials in u (and v) marking the given statistics.

    ``stats`` is one or two of r, l, h, s, m; the optional ``filter`` is a
    key of FILTERS restricting which statistic pairs are counted.
    """
    if not 1 <= len(stats) <= 2:
        raise ValueError("stats must name one or two statistics")
    if filter is not None:
        if len(stats) != 2:
            raise ValueError("filters require a statistic pair")
        pred = FILTERS[filter]
    out = []
    for n, level in enumerate(iter_tree_levels(pats, nmax), start=1):
        terms: dict[tuple[int, int], int] = {}
        for perm in level:
            a = statistic(perm, stats[0])
            b = statistic(perm, stats[1]) if len(stats) == 2 else 0
            if filter is not None and not pred(a, b):
                continue
            key = (a, b)
            terms[key] = terms.get(key, 0) + 1
        out.append(RefinedCount(n, Poly(terms)))
    return out
