"""Exact characteristic numbers, genera and rational cobordism of projective bundles.

Manifolds are given by descriptor strings such as ``"cp:2"``, ``"hp:2"``,
``"pb:3:[2,0,0,0]"``, ``"prod(cp:2,hp:2)"`` or ``"X12:c=2"``; functionals by
expressions such as ``"sign - 45*p1*p2"``. Rational results are returned as
:class:`fractions.Fraction`.
"""

from fractions import Fraction

from . import _cobord
from ._cobord import ConsistencyError, ParseError, dimension, is_spin, run_cli

__all__ = [
    "ConsistencyError",
    "ParseError",
    "ahat",
    "dimension",
    "distinct_cobordism_types",
    "elliptic_q_coefficients",
    "elliptic_span",
    "family_polynomial",
    "is_spin",
    "pontryagin_numbers",
    "resolve_functional",
    "run_cli",
    "signature",
    "span_membership",
    "twisted_ahat_tangent",
    "unbounded_verdict",
]


def _fractions(values):
    return [Fraction(v) for v in values]


def pontryagin_numbers(manifold):
    """Pontryagin numbers keyed by partition, e.g. ``{"p1^3": Fraction(-8), ...}``."""
    return {k: Fraction(v) for k, v in _cobord.pontryagin_numbers(manifold).items()}


def signature(manifold):
    return Fraction(_cobord.signature(manifold))


def ahat(manifold):
    return Fraction(_cobord.ahat(manifold))


def twisted_ahat_tangent(manifold):
    return Fraction(_cobord.twisted_ahat_tangent(manifold))


def elliptic_q_coefficients(manifold, q_order=-1):
    """Coefficients of q^0..q^N of q^(k/2) times the elliptic genus (N defaults to dim/4)."""
    return _fractions(_cobord.elliptic_q_coefficients(manifold, q_order))


def elliptic_span(dim, q_order=-1):
    """Returns (functional strings, rank)."""
    return _cobord.elliptic_span(dim, q_order)


def resolve_functional(expr, dim):
    return {k: Fraction(v) for k, v in _cobord.resolve_functional(expr, dim).items()}


def span_membership(expr, dim, q_order=-1):
    return _cobord.span_membership(expr, dim, q_order)


def family_polynomial(family, expr):
    """Coefficients of the family polynomial in c, lowest degree first."""
    return _fractions(_cobord.family_polynomial(family, expr))


def unbounded_verdict(expr, dim):
    result = _cobord.unbounded_verdict(expr, dim)
    for evaluation in result["evaluations"]:
        evaluation["polynomial"] = _fractions(evaluation["polynomial"])
    if result["witness"] is not None:
        result["witness"]["polynomial"] = _fractions(result["witness"]["polynomial"])
    return result


def distinct_cobordism_types(family, params):
    """Returns (distinct, [(c1, c2, separating partition or None), ...])."""
    return _cobord.distinct_cobordism_types(family, list(params))
