# src/cohomod/ring_extract.py

"""
Degree-by-degree extraction of a presentation from a minimal resolution.

In degree n the products of existing generators are evaluated as cocycles;
their span against H^n = F_p^{b_n} yields new relations (the kernel of the
evaluation map on standard monomials) and new generators (a complement of
the image in rref order). Names x1, x2, ... follow (degree, pivot) order.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import Caps
from .dickson import ElabRestriction, SubgroupRestriction
from .errors import CertificationError, ResolutionTooShortError
from .group import PGroup, SubgroupEmbedding, maximal_elementary_abelians, subgroup_from_subspace, subspaces_of_rank
from .gring import GradedPresentation, Polynomial, TruncatedPresentation
from .linalg import DTYPE, LinearSolver, kernel_basis_array, span_complement
from .modres import Cocycle, MinimalResolution, extend_resolution, left_multiplication, resolve
from .modres.chain_maps import restriction_map

logger = logging.getLogger(__name__)

SparseMonomial = Tuple[Tuple[int, int], ...]


def _sparse(mono: Sequence[int]) -> SparseMonomial:
    return tuple((i, e) for i, e in enumerate(mono) if e)


@dataclass(frozen=True)
class GeneratorRecord:
    name: str
    degree: int
    vector: Tuple[int, ...]

    def cocycle(self, p: int) -> Cocycle:
        return Cocycle(self.degree, self.vector, p)


@dataclass(frozen=True, eq=False)
class ExtractionState:
    """
    ``correspondence[n]`` has the cocycle vectors of the standard monomials of
    degree n as columns (square and invertible: dimension b_n).
    """

    resolution: MinimalResolution
    through: int
    generators: Tuple[GeneratorRecord, ...]
    relations: Tuple[Polynomial, ...]
    base: GradedPresentation
    correspondence: Tuple[np.ndarray, ...]
    _cache: Dict = field(default_factory=dict, repr=False)

    @property
    def group(self) -> PGroup:
        return self.resolution.group

    @property
    def p(self) -> int:
        return self.resolution.p


def initial_state(res: MinimalResolution) -> ExtractionState:
    p = res.p
    base = GradedPresentation(p, ())
    values = {(): np.array([1], dtype=DTYPE)}
    return ExtractionState(res, 0, (), (), base, (np.eye(1, dtype=DTYPE),), values)


def _monomial_value(state: ExtractionState, res: MinimalResolution, mono: Sequence[int]) -> np.ndarray:
    """Cocycle vector of a normal-ordered monomial, peeling off its first generator."""
    key = _sparse(mono)
    cached = state._cache.get(key)
    if cached is not None:
        return cached
    k = next(i for i, e in enumerate(mono) if e)
    rest = list(mono)
    rest[k] -= 1
    rest_value = _monomial_value(state, res, rest)
    rest_degree = sum(e * g.degree for e, g in zip(rest, state.generators))
    gen = state.generators[k].cocycle(res.p)
    value = left_multiplication(gen, rest_degree, res) @ rest_value % res.p
    state._cache[key] = value
    return value


def pad_polynomial(poly: Polynomial, degrees: Sequence[int]) -> Polynomial:
    extra = len(degrees) - len(poly.degrees)
    return Polynomial({m + (0,) * extra: c for m, c in poly.terms.items()}, poly.p, degrees)


def advance(state: ExtractionState, to_degree: int, res: Optional[MinimalResolution] = None) -> ExtractionState:
    """
    Extend the presentation through ``to_degree``.

    :raises ResolutionTooShortError: if the resolution does not reach ``to_degree``.
    :raises CertificationError: if a degree's dimension disagrees with b_n.
    """
    res = res or state.resolution
    res.require(to_degree)
    p = res.p
    current = replace(state, resolution=res, _cache=state._cache)
    for n in range(state.through + 1, to_degree + 1):
        pres = current.base
        std = pres.degree_basis(n).standard[n]
        b_n = res.cohomology_dim(n)
        if std:
            values = np.array([_monomial_value(current, res, m) for m in std], dtype=DTYPE).T
        else:
            values = np.zeros((b_n, 0), dtype=DTYPE)

        new_relations = []
        for row in kernel_basis_array(values, p, n_cols=len(std)):
            new_relations.append(pres.polynomial({m: int(c) for m, c in zip(std, row) if int(c)}))

        picks = span_complement(values.T, np.eye(b_n, dtype=DTYPE), p)
        generators = list(current.generators)
        for c in picks:
            vec = tuple(int(i == c) for i in range(b_n))
            generators.append(GeneratorRecord(f"x{len(generators) + 1}", n, vec))
        degrees = tuple(g.degree for g in generators)
        relations = tuple(pad_polynomial(r, degrees) for r in current.relations + tuple(new_relations))
        base = GradedPresentation(p, tuple((g.name, g.degree) for g in generators), relations)
        for g_index in range(len(current.generators), len(generators)):
            mono = tuple(int(i == g_index) for i in range(len(generators)))
            current._cache[_sparse(mono)] = np.array(generators[g_index].vector, dtype=DTYPE)

        current = replace(current, generators=tuple(generators), relations=relations, base=base)
        new_std = base.degree_basis(n).standard[n]
        if len(new_std) != b_n:
            raise CertificationError(
                f"Presentation has dimension {len(new_std)} in degree {n}, cohomology has {b_n}"
            )
        corr = (
            np.array([_monomial_value(current, res, m) for m in new_std], dtype=DTYPE).T
            if new_std
            else np.zeros((0, 0), dtype=DTYPE)
        )
        current = replace(current, through=n, correspondence=current.correspondence + (corr,))
        if picks or new_relations:
            logger.info(f"Degree {n}: {len(picks)} new generator(s), {len(new_relations)} new relation(s)")
        else:
            logger.debug(f"Degree {n}: no new generators or relations")
    return current


def presentation(state: ExtractionState) -> TruncatedPresentation:
    return TruncatedPresentation(state.base, state.through)


def _solver(state: ExtractionState, n: int) -> LinearSolver:
    key = ("solver", n)
    if key not in state._cache:
        state._cache[key] = LinearSolver(state.correspondence[n], state.p)
    return state._cache[key]


def to_polynomial(state: ExtractionState, vector: Sequence[int], n: int) -> Polynomial:
    """The normal-form polynomial whose cocycle is ``vector`` in degree n."""
    if n > state.through:
        raise ResolutionTooShortError(f"Presentation extracted through degree {state.through}, need {n}")
    coeffs = _solver(state, n).solve(np.asarray(vector, dtype=DTYPE) % state.p)
    if coeffs is None:
        raise CertificationError(f"Degree-{n} correspondence is not invertible")
    return state.base.from_vector(coeffs, n)


def to_cocycle(state: ExtractionState, poly: Polynomial, n: int) -> Cocycle:
    """Cocycle of the degree-n part of ``poly``."""
    if n > state.through:
        raise ResolutionTooShortError(f"Presentation extracted through degree {state.through}, need {n}")
    coords = state.base.normal_form_vector(pad_polynomial(poly, state.base.degrees), n)
    vec = state.correspondence[n] @ coords % state.p if coords.size else np.zeros(0, dtype=DTYPE)
    return Cocycle.from_vector(n, vec, state.p)


def extract(group: PGroup, to_degree: int, caps: Optional[Caps] = None) -> ExtractionState:
    res = resolve(group, to_degree, caps)
    return advance(initial_state(res), to_degree)


# ---------------------------------------------------------------------------
# Restriction data for parameter search
# ---------------------------------------------------------------------------

def generator_restrictions(
    state: ExtractionState,
    e: SubgroupEmbedding,
    e_state: ExtractionState,
) -> Tuple[Polynomial, ...]:
    """Images of ``state``'s generators in the presentation of H*(E)."""
    images = []
    for g in state.generators:
        matrix = restriction_map(e, g.degree, state.resolution, e_state.resolution)
        vec = matrix.data @ np.array(g.vector, dtype=DTYPE) % state.p
        images.append(to_polynomial(e_state, vec, g.degree))
    return tuple(images)


def _local_embedding(e: SubgroupEmbedding, w: SubgroupEmbedding, e_group: PGroup) -> SubgroupEmbedding:
    position = {g: i for i, g in enumerate(e.elements)}
    return SubgroupEmbedding(tuple(sorted(position[g] for g in w.elements)), e_group)


def elab_restrictions(
    state: ExtractionState,
    caps: Optional[Caps] = None,
    states_cache: Optional[Dict] = None,
) -> List[ElabRestriction]:
    """
    Restriction data for every maximal elementary abelian class: H*(E), the
    images of the generators, and the proper subgroups of rank below the
    p-rank with the images of E's generators.
    """
    caps = caps or Caps.from_env()
    cache = states_cache if states_cache is not None else {}
    g = state.group
    classes = maximal_elementary_abelians(g)
    r = classes.p_rank
    top = max((gen.degree for gen in state.generators), default=1)
    out = []
    for cls in classes:
        e = cls.representative
        key = ("elab", e.elements)
        e_state = cache.get(key)
        if e_state is None:
            e_state = extract(e.as_group()[0], max(top, 2), caps)
        elif e_state.through < top:
            e_state = advance(e_state, top, extend_resolution(e_state.resolution, top, caps))
        cache[key] = e_state
        e_group = e_state.group
        images = generator_restrictions(state, e, e_state)

        subgroups = []
        for s in range(1, min(cls.rank, r - 1) + 1):
            if s == cls.rank:
                continue
            for basis in subspaces_of_rank(cls.rank, s, g.p):
                w = subgroup_from_subspace(e, basis)
                w_local = _local_embedding(e, w, e_group)
                w_group, _ = w_local.as_group()
                w_key = ("sub", e.elements, w.elements)
                w_state = cache.get(w_key)
                if w_state is None:
                    w_state = extract(w_group, 2, caps)
                    cache[w_key] = w_state
                w_images = generator_restrictions(e_state, w_local, w_state)
                subgroups.append(SubgroupRestriction(s, w_state.base, w_images))
        out.append(ElabRestriction(cls.rank, e_state.base, images, tuple(subgroups)))
        logger.debug(f"Restriction data for a rank-{cls.rank} class with {len(subgroups)} subgroup(s)")
    return out


def hilbert_audit(state: ExtractionState, extra: int, caps: Optional[Caps] = None) -> List[Tuple[int, int, int]]:
    """
    Compare the presentation's Hilbert function with b_n through
    ``state.through + extra``; returns mismatches (n, presentation dim, b_n).
    """
    target = state.through + extra
    res = extend_resolution(state.resolution, target, caps)
    dims = state.base.hilbert(target)
    return [(n, dims[n], res.ranks[n]) for n in range(target + 1) if dims[n] != res.ranks[n]]
