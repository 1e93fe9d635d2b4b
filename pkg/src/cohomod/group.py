# src/cohomod/group.py

"""
Finite p-groups given by permutations or by a multiplication table.

Elements are indices ``0 .. |G|-1`` into a multiplication table; index 0 is
always the identity. Permutations are 0-based image arrays and compose as
``(a*b)(i) = a[b[i]]``.
"""

import itertools
import logging
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

from .config import DEFAULT_MAX_ORDER
from .errors import CapExceededError, InputFormatError, NotAPGroupError
from .linalg import PrimeField

logger = logging.getLogger(__name__)


def _is_power_of(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True, eq=False)
class PGroup:
    """
    A finite p-group as a multiplication table.

    ``table[a, b]`` is the index of ``a*b``. ``generators`` are element indices
    generating the group (used for radicals and kG-module actions).
    """

    p: int
    table: np.ndarray
    generators: Tuple[int, ...]
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    @property
    def log_order(self) -> int:
        return round(math.log(self.order, self.p)) if self.order > 1 else 0

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def power(self, g: int, k: int) -> int:
        result = 0
        for _ in range(k):
            result = int(self.table[result, g])
        return result

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = int(self.table[x, g])
            k += 1
        return k

    def conjugate(self, h: int, g: int) -> int:
        """``g h g^-1``."""
        return int(self.table[self.table[g, h], self.inverses[g]])

    def commute(self, a: int, b: int) -> bool:
        return self.table[a, b] == self.table[b, a]

    def closure(self, elements: Iterable[int]) -> FrozenSet[int]:
        """Subgroup generated by ``elements``."""
        gens = [int(e) for e in elements if int(e) != 0]
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = int(self.table[x, s])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def center(self) -> Tuple[int, ...]:
        return tuple(
            z for z in range(self.order)
            if all(self.commute(z, s) for s in self.generators)
        )

    def __repr__(self) -> str:
        return f"PGroup(p={self.p}, order={self.order}, generators={self.generators})"


@dataclass(frozen=True)
class SubgroupEmbedding:
    """A subgroup as the sorted tuple of its element indices in ``parent``."""

    elements: Tuple[int, ...]
    parent: PGroup = field(repr=False, compare=False)

    def __post_init__(self):
        if not self.elements or self.elements[0] != 0:
            raise NotAPGroupError("Subgroup must contain the identity")

    @classmethod
    def generated_by(cls, parent: PGroup, elements: Iterable[int]) -> "SubgroupEmbedding":
        return cls(tuple(sorted(parent.closure(elements))), parent)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rank(self) -> int:
        """Rank as an elementary abelian group (only meaningful when it is one)."""
        return round(math.log(self.order, self.parent.p)) if self.order > 1 else 0

    def contains(self, g: int) -> bool:
        return g in self._element_set

    @cached_property
    def _element_set(self) -> FrozenSet[int]:
        return frozenset(self.elements)

    def is_abelian(self) -> bool:
        return all(self.parent.commute(a, b) for a, b in itertools.combinations(self.elements, 2))

    def is_elementary_abelian(self) -> bool:
        p = self.parent.p
        return self.is_abelian() and all(self.parent.power(g, p) == 0 for g in self.elements)

    def conjugate_by(self, g: int) -> "SubgroupEmbedding":
        return SubgroupEmbedding(
            tuple(sorted(self.parent.conjugate(h, g) for h in self.elements)), self.parent
        )

    @cached_property
    def basis(self) -> Tuple[int, ...]:
        """Greedy minimal generating set in element order (a basis when elementary abelian)."""
        chosen: List[int] = []
        span = frozenset([0])
        for g in self.elements:
            if g not in span:
                chosen.append(g)
                span = self.parent.closure(chosen)
        return tuple(chosen)

    @cached_property
    def coordinates(self) -> Dict[int, Tuple[int, ...]]:
        """Element index -> coordinate vector over :attr:`basis` (elementary abelian only)."""
        p = self.parent.p
        coords: Dict[int, Tuple[int, ...]] = {}
        for exps in itertools.product(range(p), repeat=len(self.basis)):
            g = 0
            for b, e in zip(self.basis, exps):
                g = self.parent.mul(g, self.parent.power(b, e))
            coords[g] = tuple(exps)
        return coords

    def element_from_coordinates(self, coords: Sequence[int]) -> int:
        g = 0
        for b, e in zip(self.basis, coords):
            g = self.parent.mul(g, self.parent.power(b, int(e) % self.parent.p))
        return g

    def as_group(self) -> Tuple[PGroup, Tuple[int, ...]]:
        """
        The subgroup as a stand-alone :class:`PGroup` plus the inclusion map.

        Local index ``i`` corresponds to parent element ``elements[i]``; the
        local generators are the images of :attr:`basis`.
        """
        position = {g: i for i, g in enumerate(self.elements)}
        els = np.array(self.elements)
        sub_table = self.parent.table[np.ix_(els, els)]
        local = np.vectorize(position.__getitem__, otypes=[np.int64])(sub_table)
        gens = tuple(position[b] for b in self.basis)
        return PGroup(self.parent.p, np.asarray(local, dtype=np.int64), gens), tuple(self.elements)


@dataclass(frozen=True)
class ElabClass:
    representative: SubgroupEmbedding
    rank: int


@dataclass(frozen=True)
class ElabClassList:
    """Conjugacy classes of maximal elementary abelian p-subgroups."""

    classes: Tuple[ElabClass, ...]

    @property
    def p_rank(self) -> int:
        return max((c.rank for c in self.classes), default=0)

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _validate_p(p: int) -> int:
    try:
        return PrimeField(p).p
    except Exception as e:
        raise NotAPGroupError(str(e)) from e


def build_group(p: int, generators: Sequence[Sequence[int]], max_order: int = DEFAULT_MAX_ORDER) -> PGroup:
    """
    Close a list of 0-based permutations into a multiplication table.

    Elements are enumerated breadth first over generator words, so the table
    is deterministic for a given generator list.

    :raises InputFormatError: if a generator is not a permutation.
    :raises NotAPGroupError: if the generated order is not a power of ``p``.
    :raises CapExceededError: if the order exceeds ``max_order``.
    """
    p = _validate_p(p)
    degree = max((len(g) for g in generators), default=1)
    perms: List[Tuple[int, ...]] = []
    for gen in generators:
        gen = [int(v) for v in gen]
        if sorted(gen) != list(range(len(gen))):
            raise InputFormatError(f"Generator {gen} is not a permutation of 0..{len(gen) - 1}")
        perms.append(tuple(gen + list(range(len(gen), degree))))

    sym_group = PermutationGroup([Permutation(list(g)) for g in perms] or [Permutation(list(range(degree)))])
    order = int(sym_group.order())
    if order > max_order:
        raise CapExceededError(f"Group order {order} exceeds the cap {max_order}")
    if not _is_power_of(order, p):
        raise NotAPGroupError(f"Generated group has order {order}, not a power of {p}")

    identity = tuple(range(degree))
    elements: List[Tuple[int, ...]] = [identity]
    index = {identity: 0}
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for s in perms:
            y = tuple(x[s[i]] for i in range(degree))
            if y not in index:
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)

    perm_arr = np.array(elements, dtype=np.int64)
    n = len(elements)
    products = perm_arr[np.arange(n)[:, None, None], perm_arr[None, :, :]]
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            table[i, j] = index[tuple(products[i, j])]

    gens = tuple(dict.fromkeys(index[s] for s in perms if index[s] != 0))
    logger.info(f"Built group of order {n} from {len(perms)} permutation generators")
    return PGroup(p, table, gens)


def build_group_from_table(p: int, table: Sequence[Sequence[int]], max_order: int = DEFAULT_MAX_ORDER) -> PGroup:
    """
    Validate a 0-based multiplication table (identity = 0) and wrap it.

    :raises InputFormatError: if the table is not square or has out-of-range entries.
    :raises NotAPGroupError: if the table is not a group or its order is not a power of ``p``.
    """
    p = _validate_p(p)
    try:
        t = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as e:
        raise InputFormatError(f"Multiplication table is not an integer matrix: {e}") from e
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise InputFormatError(f"Multiplication table must be square, got shape {t.shape}")
    n = t.shape[0]
    if n > max_order:
        raise CapExceededError(f"Group order {n} exceeds the cap {max_order}")
    if t.min() < 0 or t.max() >= n:
        raise InputFormatError("Multiplication table entries must lie in 0..order-1")
    ident = np.arange(n)
    if not (np.array_equal(t[0], ident) and np.array_equal(t[:, 0], ident)):
        raise NotAPGroupError("Element 0 is not the identity of the table")
    if not all(np.array_equal(np.sort(row), ident) for row in t):
        raise NotAPGroupError("Table rows are not permutations (missing inverses)")
    if not np.array_equal(t[t], t[:, t]):
        raise NotAPGroupError("Table is not associative")
    if not _is_power_of(n, p):
        raise NotAPGroupError(f"Table has order {n}, not a power of {p}")

    group = PGroup(p, t, ())
    gens: List[int] = []
    span = frozenset([0])
    for g in range(n):
        if g not in span:
            gens.append(g)
            span = group.closure(gens)
    logger.info(f"Loaded group of order {n} from a multiplication table")
    return PGroup(p, t, tuple(gens))


# ---------------------------------------------------------------------------
# Elementary abelian subgroups
# ---------------------------------------------------------------------------

def _order_p_elements(g: PGroup) -> List[int]:
    return [x for x in range(1, g.order) if g.power(x, g.p) == 0]


def elementary_abelian_subgroups(g: PGroup) -> List[SubgroupEmbedding]:
    """All nontrivial elementary abelian subgroups, by rank then element tuple."""
    if "elabs" in g._cache:
        return g._cache["elabs"]
    order_p = _order_p_elements(g)
    level = {g.closure([x]) for x in order_p}
    found = set(level)
    while level:
        nxt = set()
        for s in level:
            for x in order_p:
                if x in s or not all(g.commute(x, y) for y in s):
                    continue
                bigger = frozenset(g.closure(list(s) + [x]))
                if bigger not in found:
                    found.add(bigger)
                    nxt.add(bigger)
        level = nxt
    subs = [SubgroupEmbedding(tuple(sorted(s)), g) for s in found]
    subs.sort(key=lambda s: (s.order, s.elements))
    g._cache["elabs"] = subs
    return subs


def _is_maximal_elab(g: PGroup, s: SubgroupEmbedding, order_p: List[int]) -> bool:
    return not any(
        not s.contains(x) and all(g.commute(x, y) for y in s.elements) for x in order_p
    )


def maximal_elementary_abelians(g: PGroup) -> ElabClassList:
    """Representatives of the conjugacy classes of maximal elementary abelian subgroups."""
    if "max_elabs" in g._cache:
        return g._cache["max_elabs"]
    order_p = _order_p_elements(g)
    maximal = [s for s in elementary_abelian_subgroups(g) if _is_maximal_elab(g, s, order_p)]
    maximal.sort(key=lambda s: (-s.order, s.elements))

    reps: List[SubgroupEmbedding] = []
    seen_conjugates = set()
    for s in maximal:
        if s.elements in seen_conjugates:
            continue
        reps.append(s)
        for h in range(g.order):
            seen_conjugates.add(s.conjugate_by(h).elements)

    result = ElabClassList(tuple(ElabClass(s, s.rank) for s in reps))
    logger.info(
        f"Found {len(result)} class(es) of maximal elementary abelian subgroups, "
        f"ranks {[c.rank for c in result]}"
    )
    g._cache["max_elabs"] = result
    return result


def p_rank(g: PGroup) -> int:
    return maximal_elementary_abelians(g).p_rank


def center_rank(g: PGroup) -> int:
    """p-rank of the center: log_p of the number of central elements z with z^p = 1."""
    omega_1 = sum(1 for z in g.center() if g.power(z, g.p) == 0)
    return round(math.log(omega_1, g.p)) if omega_1 > 1 else 0


def subspaces_of_rank(rank: int, s: int, p: int) -> List[np.ndarray]:
    """
    Every s-dimensional subspace of F_p^rank, each as its unique s x rank
    reduced row-echelon basis.
    """
    if s == 0:
        return [np.zeros((0, rank), dtype=np.int64)]
    out: List[np.ndarray] = []
    for pivots in itertools.combinations(range(rank), s):
        free_slots = [
            (i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, rank) if c not in pivots
        ]
        for values in itertools.product(range(p), repeat=len(free_slots)):
            basis = np.zeros((s, rank), dtype=np.int64)
            for i, pc in enumerate(pivots):
                basis[i, pc] = 1
            for (i, c), v in zip(free_slots, values):
                basis[i, c] = v
            out.append(basis)
    return out


def subgroup_from_subspace(e: SubgroupEmbedding, basis: np.ndarray) -> SubgroupEmbedding:
    """The subgroup of elementary abelian ``e`` spanned by coordinate rows ``basis``."""
    gens = [e.element_from_coordinates(row) for row in basis]
    return SubgroupEmbedding.generated_by(e.parent, gens)
