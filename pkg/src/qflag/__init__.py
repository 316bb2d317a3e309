"""Exact symbolic toolkit for the Kahler geometry of quantum flag manifolds.

Submodules:

- qarith:  Laurent polynomials in a root of q, quantum integers, q-binomials
- cartan:  root systems, weights, Weyl dimensions, cominuscule nodes
- flag:    quantum flag manifold invariants and canonical bundle degrees
- qps:     noncommutative rewriting engine for projective space curvature
- kaehler: exterior-algebra model of the Lefschetz/Hodge operator calculus
- bundles: line-bundle cohomology counts and the positivity trichotomy
- cli:     command-line verification suites
"""

from .qarith import QScalar, bracket_paren_identity, q_binomial, qint_bracket, qint_paren
from .cartan import RootSystem, Weight, build_root_system, cominuscule_nodes, weyl_dim
from .flag import FlagManifold, make_flag
from .bundles import LineBundleClass, classify_flag_bundle, fano_verdict

__all__ = [
    "QScalar",
    "qint_bracket",
    "qint_paren",
    "q_binomial",
    "bracket_paren_identity",
    "RootSystem",
    "Weight",
    "build_root_system",
    "cominuscule_nodes",
    "weyl_dim",
    "FlagManifold",
    "make_flag",
    "LineBundleClass",
    "classify_flag_bundle",
    "fano_verdict",
]
