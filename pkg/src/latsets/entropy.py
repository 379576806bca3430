"""Shannon entropy kernels, all base 2.

H(X) = sum p(x) log2(1/p(x)), with the standard convention that terms with
p = 0 contribute 0.  Sums use math.fsum so that uniform distributions
reproduce log2(m) to full double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Hashable, Iterable, Mapping, Sequence

SUM_TOLERANCE = 1e-9
INEQUALITY_TOLERANCE = 1e-9


@dataclass(frozen=True, eq=False)
class Distribution:
    """Finite probability mass function over hashable outcome labels."""

    probabilities: dict

    def __post_init__(self) -> None:
        probs = dict(self.probabilities)
        for outcome, p in probs.items():
            if not isinstance(p, (int, float)) or p < 0:
                raise ValueError(f"probability of {outcome!r} must be >= 0, got {p!r}")
        total = math.fsum(probs.values())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def uniform(cls, outcomes: Iterable[Hashable]) -> "Distribution":
        outcomes = list(outcomes)
        if not outcomes:
            raise ValueError("uniform distribution needs at least one outcome")
        p = 1.0 / len(outcomes)
        return cls({outcome: p for outcome in outcomes})

    @classmethod
    def from_counts(cls, counts: Mapping[Hashable, int]) -> "Distribution":
        total = sum(counts.values())
        if total <= 0:
            raise ValueError("counts must sum to a positive total")
        return cls({outcome: c / total for outcome, c in counts.items()})

    def __len__(self) -> int:
        return len(self.probabilities)


def entropy(d: Distribution) -> float:
    """H(d) = sum p log2(1/p) over outcomes with p > 0."""
    return math.fsum(-p * math.log2(p) for p in d.probabilities.values() if p > 0)


def binary_entropy(x: float) -> float:
    """h(x) = x log2(1/x) + (1-x) log2(1/(1-x)), with h(0) = h(1) = 0."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"binary entropy needs x in [0, 1], got {x!r}")
    if x == 0.0 or x == 1.0:
        return 0.0
    return -x * math.log2(x) - (1.0 - x) * math.log2(1.0 - x)


@dataclass(frozen=True)
class SubadditivityReport:
    joint_entropy: float
    marginal_sum: float
    holds: bool


def subadditivity_check(joint: Distribution) -> SubadditivityReport:
    """Check H(joint) <= sum of coordinate marginal entropies.

    The outcomes of `joint` must be equal-length tuples; the i-th marginal
    is the induced distribution of the i-th coordinate.
    """
    outcomes = list(joint.probabilities)
    if not all(isinstance(o, tuple) for o in outcomes):
        raise ValueError("joint outcomes must be tuples")
    dims = {len(o) for o in outcomes}
    if len(dims) > 1:
        raise ValueError(f"ragged outcome tuples: lengths {sorted(dims)}")
    dim = dims.pop() if dims else 0

    marginal_sum = 0.0
    if dim:
        per_coord: list[dict] = [{} for _ in range(dim)]
        for outcome, p in joint.probabilities.items():
            for i, value in enumerate(outcome):
                per_coord[i][value] = per_coord[i].get(value, 0.0) + p
        marginal_sum = math.fsum(entropy(Distribution(m)) for m in per_coord)

    joint_entropy = entropy(joint)
    return SubadditivityReport(
        joint_entropy, marginal_sum, joint_entropy <= marginal_sum + INEQUALITY_TOLERANCE
    )


@dataclass(frozen=True)
class ConcavityReport:
    lhs: float
    rhs: float
    holds: bool


def concavity_bound_check(values: Sequence[float]) -> ConcavityReport:
    """Check sum p_j log2(1/p_j) <= s * (sum p_j / s) * log2(s / sum p_j).

    Valid for any p_j in [0, 1] because x log2(1/x) is concave on x > 0.
    """
    for p in values:
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"values must lie in [0, 1], got {p!r}")
    s = len(values)
    lhs = math.fsum(-p * math.log2(p) for p in values if p > 0)
    total = math.fsum(values)
    rhs = total * math.log2(s / total) if total > 0 else 0.0
    return ConcavityReport(lhs, rhs, lhs <= rhs + INEQUALITY_TOLERANCE)
