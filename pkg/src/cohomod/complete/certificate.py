# src/cohomod/complete/certificate.py

"""
The completion certificate: when a presentation computed through degree N
is already the whole cohomology ring.

Given parameters z_1..z_r (r > 1, every |z_i| = n_i >= 2) of the truncated
ring that are filter-regular there and whose images are a system of
parameters of the cohomology ring, the truncation is complete as soon as

    N > max(alpha, 0) + sum(n_i - 1)

where alpha = max over i <= r - 2 of (a^i + i), with a^i the local
cohomology a-invariants of the truncated ring (alpha = -inf once the depth
reaches r - 1). When the center has rank at least two the strict inequality
may be relaxed to >=.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple, Union

from ..config import Caps
from ..dickson import ElabRestriction
from ..errors import CapExceededError, NotHSOPError, TheoremInapplicableError
from ..gring import NEG_INF, TruncatedPresentation, finite_length_certificate
from ..regseq import MODE_CERTIFIED, ParameterSequence, RingAnalysis, analyze_ring

logger = logging.getLogger(__name__)

Degree = Union[int, float]

INEQUALITY_STRICT = "strict"
INEQUALITY_NONSTRICT = "non-strict"

REASON_NOT_CERTIFIED = "filter-regularity not certified"
REASON_NOT_HSOP = "images are not a system of parameters on every maximal elementary abelian"
REASON_INEQUALITY = "inequality"


@dataclass(frozen=True)
class CompletionVerdict:
    complete: bool
    N: int
    alpha: Degree
    r: int
    param_degrees: Tuple[int, ...]
    bound: Optional[int]
    inequality: str
    reasons: Tuple[str, ...] = ()
    method: str = "certificate"
    analysis: Optional[RingAnalysis] = field(default=None, repr=False, compare=False)

    def required_degree(self) -> Optional[int]:
        """Least N the inequality would accept with the same parameters and alpha."""
        if self.bound is None:
            return None
        return self.bound if self.inequality == INEQUALITY_NONSTRICT else self.bound + 1

    def as_dict(self) -> dict:
        return {
            "complete": self.complete,
            "N": self.N,
            "alpha": "-inf" if self.alpha == NEG_INF else int(self.alpha),
            "r": self.r,
            "param_degrees": list(self.param_degrees),
            "bound": self.bound,
            "inequality": self.inequality,
            "reasons": list(self.reasons),
            "method": self.method,
        }


def projected_degree(params: Union[ParameterSequence, Sequence[int]]) -> int:
    """1 + sum(n_j - 1): the degree that suffices when the regularity is zero."""
    degrees = params.degrees if isinstance(params, ParameterSequence) else tuple(params)
    return 1 + sum(n - 1 for n in degrees)


def images_form_hsop(params: ParameterSequence, elab_data: Sequence[ElabRestriction]) -> bool:
    """
    The restrictions of ``params`` to each maximal elementary abelian class
    leave a quotient of finite length.
    """
    for e in elab_data:
        images = [im for im in (e.restrict(z) for z in params.elements) if not im.is_zero()]
        if len(images) < e.rank:
            logger.debug(f"Only {len(images)} nonzero restriction(s) to a class of rank {e.rank}")
            return False
        bound = sum(im.homogeneous_degree() for im in images) + e.rank * e.ring.max_generator_degree + 2
        if finite_length_certificate(e.ring.quotient(images), bound) is None:
            return False
    return True


def alpha_from_analysis(analysis: RingAnalysis, r: int) -> Degree:
    """
    max over i <= r - 2 of (a^i + i), preferring exact a-invariants and
    falling back to the bounds of the admissible type; a^i = -inf below the depth.
    """
    report = analysis.report
    if report.depth >= r - 1:
        return NEG_INF
    alpha = NEG_INF
    for i in range(r - 1):
        if i < report.depth:
            continue
        exact = analysis.a_exact[i] if analysis.a_exact is not None else None
        a_i = exact if exact is not None else report.a_bound[i]
        alpha = max(alpha, a_i + i)
    return alpha


def _inequality(strict: Optional[bool], center_rank_hint: int) -> str:
    if strict is None:
        return INEQUALITY_NONSTRICT if center_rank_hint >= 2 else INEQUALITY_STRICT
    if strict:
        return INEQUALITY_STRICT
    if center_rank_hint < 2:
        logger.warning(
            f"Non-strict inequality refused: center rank {center_rank_hint} < 2 gives no depth-two guarantee"
        )
        return INEQUALITY_STRICT
    return INEQUALITY_NONSTRICT


def completion_test(
    tau: TruncatedPresentation,
    N: int,
    params: ParameterSequence,
    elab_data: Sequence[ElabRestriction],
    center_rank_hint: int = 0,
    strict: Optional[bool] = None,
    caps: Optional[Caps] = None,
    analysis: Optional[RingAnalysis] = None,
) -> CompletionVerdict:
    """
    Decide whether ``tau`` (generators and relations through degree N) is
    the whole cohomology ring.

    Args:
        tau: The truncated presentation.
        N: Degree through which ``tau`` is known to agree with cohomology.
        params: Parameters expressed in ``tau``.
        elab_data: Restriction data for every maximal elementary abelian class.
        center_rank_hint: Rank of the largest central elementary abelian
            subgroup; at least two allows the non-strict inequality.
        strict: Force the strict (True) or non-strict (False) inequality.
            None picks non-strict exactly when ``center_rank_hint >= 2``.
        caps: Resource caps for the ring analysis.
        analysis: A certified analysis of ``tau`` with ``params`` to reuse.

    Returns:
        A CompletionVerdict; ``complete`` only when every hypothesis was
        verified with certified inputs.

    Raises:
        TheoremInapplicableError: if r <= 1 or some parameter has degree < 2.
    """
    r = params.r
    degrees = params.degrees
    if r <= 1:
        raise TheoremInapplicableError(f"Completion certificate needs rank > 1, got {r}")
    if any(n < 2 for n in degrees):
        raise TheoremInapplicableError(f"Every parameter needs degree >= 2, got {list(degrees)}")
    inequality = _inequality(strict, center_rank_hint)

    def verdict(complete, alpha=NEG_INF, bound=None, reasons=(), result=None):
        return CompletionVerdict(complete, N, alpha, r, degrees, bound, inequality, tuple(reasons), analysis=result)

    if not images_form_hsop(params, elab_data):
        logger.info(f"N={N}: parameters do not restrict to a system of parameters")
        return verdict(False, reasons=[REASON_NOT_HSOP])

    if analysis is None:
        try:
            analysis = analyze_ring(tau.base, params, mode=MODE_CERTIFIED, caps=caps)
        except (CapExceededError, NotHSOPError) as e:
            logger.warning(f"N={N}: ring analysis failed ({e})")
            return verdict(False, reasons=[REASON_NOT_CERTIFIED])
    if analysis.mode != MODE_CERTIFIED:
        logger.info(f"N={N}: filter-regularity only bounded through degree {analysis.bound}")
        return verdict(False, reasons=[REASON_NOT_CERTIFIED], result=analysis)

    alpha = alpha_from_analysis(analysis, r)
    bound = int(max(alpha, 0)) + sum(n - 1 for n in degrees)
    passes = N >= bound if inequality == INEQUALITY_NONSTRICT else N > bound
    reasons = () if passes else (REASON_INEQUALITY,)
    symbol = ">=" if inequality == INEQUALITY_NONSTRICT else ">"
    logger.info(
        f"N={N}: alpha {'-inf' if alpha == NEG_INF else int(alpha)}, "
        f"{N} {symbol} {bound} is {'satisfied' if passes else 'not satisfied'}"
    )
    return verdict(passes, alpha, bound, reasons, analysis)
