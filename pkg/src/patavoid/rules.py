"""The registry of succession rules for the twelve studied classes.

Each class couples a pattern set with labels drawn from the statistics of
``perms.statistic`` (plus, for C9-C11, the current length) and a children
map: the label of a node determines the multiset of its children's labels.
``count_by_rule`` runs a dynamic program over label multiplicities;
``verify_rule`` replays the actual rightward tree and compares.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .enumerate import RefinedCount, iter_tree_levels
from .patterns import PatternSet, avoids, parse_pattern_set
from .perms import Perm, append_child, statistic
from .series import Poly

Label = tuple[int, ...]


@dataclass(frozen=True)
class ClassSpec:
    id: str
    patterns: PatternSet
    label_stats: tuple[str, ...]  # statistic names; "n" = current length
    root_label: Label
    children: Callable[[Label, int], list[Label]]

    @property
    def arity(self) -> int:
        return len(self.label_stats)

    def label_of(self, perm: Perm) -> Label:
        return tuple(len(perm) if w == "n" else statistic(perm, w)
                     for w in self.label_stats)


def rule_children(spec: ClassSpec, label: Label, n: int) -> list[Label]:
    """The rule's child labels for a node with this label at level n."""
    return spec.children(label, n)


def _c1(label: Label, n: int) -> list[Label]:
    (r,) = label
    return [(j,) for j in range(1, r)] + [(r + 1,)]


def _c2(label: Label, n: int) -> list[Label]:
    (r,) = label
    return [(j,) for j in range(1, r + 2) if (r - j) % 2 == 1]


def _c2e(label: Label, n: int) -> list[Label]:
    # Derived rule: appending j <= r leaves r - j entries strictly between
    # j and the old last entry, all to its left, so the new descent has
    # exactly r - j extensions; j = r + 1 creates no descent.
    (r,) = label
    return [(j,) for j in range(1, r + 1) if (r - j) % 2 == 0] + [(r + 1,)]


def _c3(label: Label, n: int) -> list[Label]:
    (r,) = label
    if r == 1:
        return [(1,), (2,)]
    return [(r - 1,), (r,), (r + 1,)]


def _c4(label: Label, n: int) -> list[Label]:
    l, r = label
    if l == r:
        return [(l + 1, j) for j in range(1, l + 1)]
    if l > r:
        return [(l + 1, j) for j in range(1, r + 1)] + [(r + 1, r + 1)]
    return []


def _c5(label: Label, n: int) -> list[Label]:
    h, r = label
    return [(j, j) for j in range(h + 1, r + 1)] + [(h, r + 1)]


def _c6(label: Label, n: int) -> list[Label]:
    s, r = label
    if s < r:
        return ([(s + 1, j) for j in range(1, s + 1)]
                + [(s, s + 1), (r, r + 1)])
    if s > r:
        return [(s + 1, r + 1)]
    return []


def _c7(label: Label, n: int) -> list[Label]:
    m, r = label
    if r == 1:
        return [(m + 1, 1), (2, 2)]
    if m == r == 2:
        return [(3, 1), (2, 2), (2, 3)]
    if m < r:
        return [(m + 1, 1), (2, 2)] + [(m, j) for j in range(m + 1, r + 1)]
    return []


def _c8(label: Label, n: int) -> list[Label]:
    l, r = label
    if l > r:
        return [(l + 1, j) for j in range(1, r + 1)] + [(r + 1, r + 1)]
    if l == r:
        return [(l + 1, j) for j in range(1, l + 1)] + [(l, l + 1)]
    return [(l + 1, j) for j in range(1, l + 1)] + [(l, j) for j in range(l + 1, r + 1)]


def _c9(label: Label, n: int) -> list[Label]:
    r, _ = label
    if r == 1:
        return [(1, n + 1), (n + 1, n + 1)]
    return [(j, n + 1) for j in range(1, r + 1)]


def _c10(label: Label, n: int) -> list[Label]:
    s, r, _ = label
    if s < r != 1:
        return ([(s + 1, j, n + 1) for j in range(1, s + 1)]
                + [(s, j, n + 1) for j in range(s + 1, r + 1)])
    if (s, r) == (0, 1):
        return [(0, 1, n + 1), (1, n + 1, n + 1)]
    if s > r == 1:
        return [(s, n + 1, n + 1)]
    return []


def _c11(label: Label, n: int) -> list[Label]:
    s, r, _ = label
    if s < r != 1:
        return ([(s + 1, j, n + 1) for j in range(1, s + 1)]
                + [(s, j, n + 1) for j in range(s + 1, r + 1)])
    if (s, r) == (0, 1):
        return [(0, 1, n + 1)] + [(1, j, n + 1) for j in range(2, n + 2)]
    if s > r == 1:
        return ([(s + 1, j, n + 1) for j in range(2, s + 1)]
                + [(s, j, n + 1) for j in range(s + 1, n + 2)])
    return []


def _spec(id: str, patterns: str, stats: tuple[str, ...], root: Label,
          children: Callable[[Label, int], list[Label]]) -> ClassSpec:
    return ClassSpec(id, parse_pattern_set(patterns), stats, root, children)


REGISTRY: dict[str, ClassSpec] = {s.id: s for s in [
    _spec("C1", "2-1-3,[2]-31", ("r",), (1,), _c1),
    _spec("C2", "2-1-3,[2o]-31", ("r",), (1,), _c2),
    _spec("C2e", "2-1-3,[2e]-31", ("r",), (1,), _c2e),
    _spec("C3", "2-1-3,2-3-41,3-2-41", ("r",), (1,), _c3),
    _spec("C4", "2-1-3,12-3", ("l", "r"), (2, 1), _c4),
    _spec("C5", "2-1-3,32-1", ("h", "r"), (0, 1), _c5),
    _spec("C6", "2-1-3,34-21", ("s", "r"), (0, 1), _c6),
    _spec("C7", "1-2-34,2-1-3", ("m", "r"), (2, 1), _c7),
    _spec("C8", "12-34,2-1-3", ("l", "r"), (2, 1), _c8),
    _spec("C9", "1-23,3-12", ("r", "n"), (1, 1), _c9),
    _spec("C10", "1-23,3-12,34-21", ("s", "r", "n"), (0, 1, 1), _c10),
    _spec("C11", "1-23,34-21", ("s", "r", "n"), (0, 1, 1), _c11),
]}

CLASS_IDS = tuple(REGISTRY)


def _dp_levels(spec: ClassSpec, nmax: int) -> list[dict[Label, int]]:
    """Label -> multiplicity maps for levels 1..nmax."""
    levels = [{spec.root_label: 1}]
    for n in range(1, nmax):
        nxt: dict[Label, int] = {}
        for label, mult in levels[-1].items():
            for child in spec.children(label, n):
                nxt[child] = nxt.get(child, 0) + mult
        levels.append(nxt)
    return levels


def count_by_rule(spec: ClassSpec, nmax: int) -> list[int]:
    """Level totals 1..nmax from the label dynamic program."""
    return [sum(level.values()) for level in _dp_levels(spec, nmax)]


def _label_monomial(spec: ClassSpec, label: Label) -> tuple[int, int]:
    exps = tuple(x for x, w in zip(label, spec.label_stats) if w != "n")
    if len(exps) == 1:
        return (exps[0], 0)
    return exps


def refined_by_rule(spec: ClassSpec, nmax: int) -> list[RefinedCount]:
    """Per-level polynomials u^label1 (v^label2), the length component implicit."""
    out = []
    for n, level in enumerate(_dp_levels(spec, nmax), start=1):
        terms: dict[tuple[int, int], int] = {}
        for label, mult in level.items():
            key = _label_monomial(spec, label)
            terms[key] = terms.get(key, 0) + mult
        out.append(RefinedCount(n, Poly(terms)))
    return out


@dataclass(frozen=True)
class RuleReport:
    class_id: str
    max_n: int
    ok: bool
    labels_seen: frozenset[Label]
    counterexample: tuple[Perm, tuple[Label, ...], tuple[Label, ...]] | None

    def __str__(self) -> str:
        if self.ok:
            return (f"{self.class_id}: rule matches tree up to n={self.max_n} "
                    f"({len(self.labels_seen)} distinct labels)")
        perm, predicted, actual = self.counterexample
        return (f"{self.class_id}: MISMATCH at {perm}: "
                f"rule predicts {predicted}, tree has {actual}")


def verify_rule(spec: ClassSpec, nmax: int) -> RuleReport:
    """Compare rule-predicted child labels with the actual rightward tree."""
    seen: set[Label] = set()
    root = (1,)
    if spec.label_of(root) != spec.root_label:
        return RuleReport(spec.id, nmax, False, frozenset(),
                          (root, (spec.root_label,), (spec.label_of(root),)))
    for n, level in enumerate(iter_tree_levels(spec.patterns, nmax), start=1):
        for perm in level:
            label = spec.label_of(perm)
            seen.add(label)
            if n == nmax:
                continue
            actual = sorted(spec.label_of(append_child(perm, v))
                            for v in range(1, n + 2)
                            if avoids(append_child(perm, v), spec.patterns))
            predicted = sorted(spec.children(label, n))
            if actual != predicted:
                return RuleReport(spec.id, nmax, False, frozenset(seen),
                                  (perm, tuple(predicted), tuple(actual)))
    return RuleReport(spec.id, nmax, True, frozenset(seen), None)
