# src/cohomod/modres/chain_maps.py

"""
Cocycles, chain-map lifting, cup products and restriction maps.

By minimality every kG-map P_n -> k is a cocycle and none is a coboundary,
so H^n(G,k) = F_p^{b_n}: a class is the vector of its values on the
generators of P_n.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..errors import CertificationError, DimensionMismatchError, GroupMismatchError
from ..group import SubgroupEmbedding
from ..linalg import DTYPE, FpMatrix
from .modules import act_free, augment
from .resolution import MinimalResolution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cocycle:
    degree: int
    vector: Tuple[int, ...]
    p: int

    @classmethod
    def from_vector(cls, degree: int, vector: Sequence[int], p: int) -> "Cocycle":
        return cls(degree, tuple(int(v) % p for v in vector), p)

    @classmethod
    def basis(cls, degree: int, res: MinimalResolution) -> List["Cocycle"]:
        b = res.cohomology_dim(degree)
        return [cls(degree, tuple(int(i == j) for j in range(b)), res.p) for i in range(b)]

    @classmethod
    def unit(cls, p: int) -> "Cocycle":
        return cls(0, (1,), p)

    def is_zero(self) -> bool:
        return not any(self.vector)

    def as_array(self) -> np.ndarray:
        return np.array(self.vector, dtype=DTYPE)


class ChainMapLift:
    """
    A chain map from ``source`` (over a group H) to ``target`` (over G >= H,
    restricted along ``inclusion``) of degree ``-shift``.

    ``components[j]`` holds the images of the generators of source degree
    ``shift + j`` in target degree ``j``. Components are computed lazily and
    never recomputed; later calls may pass longer versions of the same
    resolutions.
    """

    def __init__(
        self,
        source: MinimalResolution,
        target: MinimalResolution,
        shift: int,
        base: np.ndarray,
        inclusion: Optional[Sequence[int]] = None,
    ):
        self.source = source
        self.target = target
        self.shift = shift
        self.inclusion = np.arange(source.group.order) if inclusion is None else np.asarray(inclusion)
        if len(self.inclusion) != source.group.order:
            raise GroupMismatchError("Inclusion map does not match the source group order")
        self.components: List[np.ndarray] = [np.asarray(base, dtype=DTYPE) % target.p]

    def extend(
        self,
        through: int,
        source: Optional[MinimalResolution] = None,
        target: Optional[MinimalResolution] = None,
    ) -> None:
        if source is not None:
            self.source = source
        if target is not None:
            self.target = target
        self.source.require(self.shift + through)
        self.target.require(through)
        p = self.target.p
        h_order = self.source.group.order
        g_group = self.target.group
        for j in range(len(self.components), through + 1):
            u = self.source.differential(self.shift + j).reshape(
                self.source.ranks[self.shift + j], self.source.ranks[self.shift + j - 1], h_order
            )
            prev = self.components[j - 1]
            moved = np.stack([act_free(prev, int(self.inclusion[h]), g_group) for h in range(h_order)])
            rhs = np.einsum("ikh,hkc->ic", u, moved) % p
            x, ok = self.target.solver(j).solve_many(rhs.T)
            if not bool(np.all(ok)):
                raise CertificationError(
                    f"Chain map lift failed at target degree {j}: composite not in the image of d_{j}"
                )
            self.components.append(x.T.copy())
        logger.debug(f"Chain map of shift {self.shift} lifted through degree {through}")

    def induced(self, j: int) -> np.ndarray:
        """
        Matrix (s_{shift+j} x b_j) of values ``eps_k(f_j(e_i))``: the map on
        cohomology sends a target class z to ``induced(j) @ z``.
        """
        self.extend(j)
        return augment(self.components[j], self.target.group.order, self.target.p)


def _unit_base(coefficients: Sequence[int], res: MinimalResolution) -> np.ndarray:
    base = np.zeros((len(coefficients), res.group.order), dtype=DTYPE)
    base[:, 0] = coefficients
    return base


def cocycle_lift(a: Cocycle, res: MinimalResolution) -> ChainMapLift:
    """The chain map P_{|a|+j} -> P_j lifting ``a`` (cached on the resolution)."""
    key = ("lift", a.degree, a.vector)
    lift = res._cache.get(key)
    if lift is None:
        res.require(a.degree)
        lift = ChainMapLift(res, res, a.degree, _unit_base(a.vector, res))
        res._cache[key] = lift
    else:
        lift.source = lift.target = res if res.length >= lift.source.length else lift.source
    return lift


def left_multiplication(a: Cocycle, k: int, res: MinimalResolution) -> np.ndarray:
    """Matrix (b_{|a|+k} x b_k) of ``b -> a . b`` on degree-k classes."""
    res.require(a.degree + k)
    lift = cocycle_lift(a, res)
    return lift.induced(k)


def cup_product(a: Cocycle, b: Cocycle, res: MinimalResolution) -> Cocycle:
    """
    ``a . b``: composition of ``b`` with the lift of ``a`` through |b| stages.

    :raises ResolutionTooShortError: if ``res`` stops below |a| + |b|.
    """
    if a.p != b.p or a.p != res.p:
        raise DimensionMismatchError("Cocycles over different primes")
    if len(b.vector) != res.cohomology_dim(b.degree) or len(a.vector) != res.cohomology_dim(a.degree):
        raise DimensionMismatchError("Cocycle length does not match the resolution rank")
    product = left_multiplication(a, b.degree, res) @ b.as_array() % res.p
    return Cocycle.from_vector(a.degree + b.degree, product, res.p)


def restriction_lift(e: SubgroupEmbedding, res_g: MinimalResolution, res_e: MinimalResolution) -> ChainMapLift:
    """The kE-chain map P^E -> P^G|_E lifting the identity of k."""
    if res_e.group.order != e.order or res_g.group is not e.parent:
        raise GroupMismatchError("Resolutions do not match the subgroup embedding")
    key = ("restriction", e.elements)
    lift = res_e._cache.get(key)
    if lift is None:
        lift = ChainMapLift(res_e, res_g, 0, _unit_base([1], res_g), inclusion=e.elements)
        res_e._cache[key] = lift
    return lift


def restriction_map(
    e: SubgroupEmbedding, n: int, res_g: MinimalResolution, res_e: MinimalResolution
) -> FpMatrix:
    """
    Matrix of res: H^n(G,k) -> H^n(E,k) in the cocycle bases.

    ``res_e`` must resolve ``e.as_group()[0]``.
    """
    lift = restriction_lift(e, res_g, res_e)
    lift.extend(n, source=_longer(lift.source, res_e), target=_longer(lift.target, res_g))
    return FpMatrix(lift.induced(n), res_g.p)


def _longer(a: MinimalResolution, b: MinimalResolution) -> MinimalResolution:
    return a if a.length >= b.length else b
