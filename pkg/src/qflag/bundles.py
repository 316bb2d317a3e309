"""Line-bundle cohomology oracle and positivity classifier.

Degree-zero holomorphic sections of E_k are the highest-weight module of
weight k*w_s when k >= 0 and vanish otherwise; the anti-holomorphic count
is read off the conjugate bundle E_-k.  Feeding both counts through the
cohomological trichotomy classifies every covariant line bundle as
positive, flat, or negative, with no shortcut on the sign of k.  Higher
cohomology of nonnegative bundles vanishes, and positive/negative bundles
carry vanishing predictions above/below the middle degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .cartan import fundamental_weight, weyl_dim
from .flag import FlagManifold


class LineBundleClass(Enum):
    POSITIVE = "positive"
    FLAT = "flat"
    NEGATIVE = "negative"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class CohomologySignature:
    """Dimensions of the degree-zero holomorphic and anti-holomorphic
    cohomology groups."""

    h0_dbar: int
    h0_del: int


@dataclass(frozen=True)
class FanoCertificate:
    is_fano: bool
    canonical_degree: int
    canonical_class: LineBundleClass


def borel_weil_h0(fm: FlagManifold, k: int) -> int:
    """dim H0_dbar(E_k): the Weyl dimension of k*w_s for k >= 0, else 0."""
    if k < 0:
        return 0
    weight = fundamental_weight(fm.root_system, fm.node, multiple=k)
    return weyl_dim(fm.root_system, weight)


def bott_borel_weil(fm: FlagManifold, k: int, i: int) -> int:
    """dim H^(0,i)_dbar(E_k) = 0 for k >= 0 and i > 0.

    Values outside those hypotheses are deliberately unavailable: i = 0 is
    the degree-zero oracle above, and negative bundles carry no statement
    here beyond the vanishing predictions.
    """
    if k < 0:
        raise ValueError("higher cohomology is only computed for k >= 0")
    if i < 1:
        raise ValueError("degree i must be positive; use borel_weil_h0 for i = 0")
    return 0


def classify_from_h0(sig: CohomologySignature) -> LineBundleClass:
    """Sufficient-condition trichotomy on degree-zero cohomology counts.

    Unequal nonzero counts satisfy none of the three clauses, so they map
    to UNDETERMINED rather than an error.
    """
    if sig.h0_dbar > 0 and sig.h0_del == 0:
        return LineBundleClass.POSITIVE
    if sig.h0_dbar == 0 and sig.h0_del > 0:
        return LineBundleClass.NEGATIVE
    if sig.h0_dbar == sig.h0_del and sig.h0_dbar > 0:
        return LineBundleClass.FLAT
    return LineBundleClass.UNDETERMINED


def classify_flag_bundle(fm: FlagManifold, k: int) -> LineBundleClass:
    """Classify E_k from its cohomology signature.

    The anti-holomorphic count comes from the conjugate bundle: since
    (E_k)* = E_-k and conjugation swaps the two Dolbeault directions,
    dim H0_del(E_k) = dim H0_dbar(E_-k).
    """
    sig = CohomologySignature(
        h0_dbar=borel_weil_h0(fm, k),
        h0_del=borel_weil_h0(fm, -k),
    )
    return classify_from_h0(sig)


def kodaira_predictions(cls: LineBundleClass, dim_m: int) -> list[tuple[int, int]]:
    """Vanishing bigrades: above the middle degree for positive bundles,
    below it for negative ones."""
    if cls is LineBundleClass.POSITIVE:
        keep = lambda a, b: a + b > dim_m
    elif cls is LineBundleClass.NEGATIVE:
        keep = lambda a, b: a + b < dim_m
    else:
        raise ValueError(f"no vanishing statement for class {cls.value}")
    return [
        (a, b)
        for a in range(dim_m + 1)
        for b in range(dim_m + 1)
        if keep(a, b)
    ]


def fano_verdict(fm: FlagManifold) -> FanoCertificate:
    """Fano certificate: the top holomorphic forms are E_-k with k the
    canonical degree, and that bundle classifies as negative."""
    k = fm.canonical_degree
    canonical_class = classify_flag_bundle(fm, -k)
    return FanoCertificate(
        is_fano=(k > 0 and canonical_class is LineBundleClass.NEGATIVE),
        canonical_degree=k,
        canonical_class=canonical_class,
    )
