"""Lower-bound evaluators for alliance numbers, domination, and girth.

Each evaluator substitutes graph quantities (order n, size m, degree
extremes, algebraic connectivity, adjacency spectral radius, Laplacian
spectral radius) into one closed-form theorem and takes a tolerance-aware
integer ceiling. ``evaluate_all`` wires a graph and its spectral summary
into every theorem and reports applicability honestly: a theorem whose
hypotheses fail yields no number, only the reason.

Theorem identifiers are stable strings used in reports:

  def-mu               defensive / strong defensive vs algebraic connectivity
  strongdef-mu-delta   strong defensive vs connectivity and maximum degree
  globdef-lambda       global (strong) defensive vs spectral radius
  globdef-degree       global (strong) defensive vs maximum degree
  globdef-degree-prior earlier degree-only global defensive bound
  girth-regular-mu     girth of connected 3/4/5-regular graphs vs connectivity
  globoff-laplacian    global (strong) offensive vs Laplacian spectral radius
  globoff-quadratic    global (strong) offensive vs order, size, max degree
  globdual-lambda      global (strong) dual vs spectral radius
  globdual-size        global (strong) dual vs order and size
  dom-laplacian        domination vs Laplacian spectral radius
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .graph_core import Graph, degree_stats, is_connected
from .spectral import SpectralSummary

__all__ = [
    "BoundResult",
    "THEOREM_IDS",
    "safe_ceil",
    "defensive_connectivity",
    "strong_defensive_connectivity_degree",
    "global_defensive_spectral_radius",
    "global_defensive_degree",
    "global_defensive_degree_prior",
    "girth_regular_connectivity",
    "global_offensive_laplacian_radius",
    "global_offensive_quadratic",
    "global_dual_spectral_radius",
    "global_dual_size",
    "domination_laplacian_radius",
    "evaluate_all",
]

SNAP = 1e-7  # three orders of magnitude above the eigensolver residual

THEOREM_IDS: tuple[str, ...] = (
    "def-mu",
    "strongdef-mu-delta",
    "globdef-lambda",
    "globdef-degree",
    "globdef-degree-prior",
    "girth-regular-mu",
    "globoff-laplacian",
    "globoff-quadratic",
    "globdual-lambda",
    "globdual-size",
    "dom-laplacian",
)


@dataclass(frozen=True)
class BoundResult:
    """One theorem applied to one target quantity.

    ``value`` is an integer lower bound on the target when ``applicable``,
    otherwise absent with a reason. ``degenerate`` flags bounds that hold
    but are vacuous (connectivity-based bounds on disconnected graphs).
    """

    theorem: str
    target: str
    value: int | None
    applicable: bool = True
    reason: str | None = None
    degenerate: bool = False
    inputs: dict = field(default_factory=dict)


def safe_ceil(x: float) -> int:
    """Ceiling that snaps values within 1e-7 of an integer to that integer."""
    if not math.isfinite(x):
        raise ValueError(f"cannot take the ceiling of {x!r}")
    nearest = round(x)
    if abs(x - nearest) < SNAP:
        return int(nearest)
    return math.ceil(x)


def _nonnegative(value: float, label: str) -> float:
    """Clamp tiny negative eigensolver noise to zero; reject real negatives."""
    if value < -SNAP:
        raise ValueError(f"{label} must be nonnegative, got {value}")
    return max(value, 0.0)


def defensive_connectivity(n: int, algebraic_connectivity: float) -> tuple[int, int]:
    """Bounds ceil(n*mu/(n+mu)) on the defensive and ceil(n*(mu+1)/(n+mu))
    on the strong defensive alliance number, mu the algebraic connectivity."""
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    mu = _nonnegative(algebraic_connectivity, "algebraic connectivity")
    return (
        safe_ceil(n * mu / (n + mu)),
        safe_ceil(n * (mu + 1.0) / (n + mu)),
    )


def strong_defensive_connectivity_degree(n: int, algebraic_connectivity: float, max_degree: int) -> int:
    """Bound ceil(n*(mu - floor(Delta/2))/mu) on the strong defensive alliance
    number; only meaningful for connected graphs, where mu > 0."""
    mu = _nonnegative(algebraic_connectivity, "algebraic connectivity")
    if mu <= 0:
        raise ValueError("bound requires positive algebraic connectivity (connected graph)")
    return max(0, safe_ceil(n * (mu - max_degree // 2) / mu))


def global_defensive_spectral_radius(n: int, spectral_radius: float) -> tuple[int, int]:
    """Bounds ceil(n/(lambda+2)) and ceil(n/(lambda+1)) on the global (strong)
    defensive alliance numbers, lambda the adjacency spectral radius."""
    lam = _nonnegative(spectral_radius, "spectral radius")
    return safe_ceil(n / (lam + 2.0)), safe_ceil(n / (lam + 1.0))


def global_defensive_degree(n: int, max_degree: int) -> tuple[int, int]:
    """Bounds ceil(2n/(Delta+3)) and ceil(n/(floor(Delta/2)+1)) on the global
    (strong) defensive alliance numbers."""
    return (
        safe_ceil(2.0 * n / (max_degree + 3)),
        safe_ceil(n / (max_degree // 2 + 1)),
    )


def global_defensive_degree_prior(n: int, max_degree: int) -> int:
    """Earlier degree-only bound n/(ceil(Delta/2)+1) on the global defensive
    alliance number; kept alongside the sharper globdef-degree bound."""
    return safe_ceil(n / ((max_degree + 1) // 2 + 1))


def girth_regular_connectivity(n: int, algebraic_connectivity: float, degree: int) -> int:
    """Girth bound for connected regular graphs of degree 3, 4, or 5:
    ceil(n*(mu-1)/mu), ceil(n*(mu-2)/mu), ceil(n*mu/(n+mu)) respectively."""
    mu = _nonnegative(algebraic_connectivity, "algebraic connectivity")
    if degree == 3:
        return max(0, safe_ceil(n * (mu - 1.0) / mu))
    if degree == 4:
        return max(0, safe_ceil(n * (mu - 2.0) / mu))
    if degree == 5:
        return max(0, safe_ceil(n * mu / (n + mu)))
    raise ValueError(f"girth bound applies to regular degrees 3, 4, 5 only, got {degree}")


def global_offensive_laplacian_radius(n: int, min_degree: int, laplacian_radius: float) -> tuple[int, int]:
    """Bounds ceil((n/mu*) * ceil((delta+1)/2)) and ceil((n/mu*) * (ceil(delta/2)+1))
    on the global (strong) offensive alliance numbers."""
    mu_star = _nonnegative(laplacian_radius, "Laplacian spectral radius")
    if mu_star <= 0:
        raise ValueError("bound requires a positive Laplacian spectral radius (at least one edge)")
    return (
        safe_ceil(n / mu_star * ((min_degree + 2) // 2)),
        safe_ceil(n / mu_star * ((min_degree + 1) // 2 + 1)),
    )


def global_offensive_quadratic(n: int, m: int, max_degree: int) -> tuple[int, int]:
    """Quadratic-root bounds on the global (strong) offensive alliance numbers
    from order, size, and maximum degree alone."""
    b_plain = 2 * n + max_degree + 1
    b_strong = 2 * n + max_degree + 2
    disc_plain = b_plain * b_plain - 8 * (2 * m + n)
    disc_strong = b_strong * b_strong - 16 * (m + n)
    # Nonnegative by derivation; a negative value means the inputs are not
    # from a simple graph and deserves a hard error rather than a clamp.
    if disc_plain < 0 or disc_strong < 0:
        raise ValueError(
            f"negative discriminant for n={n}, m={m}, max_degree={max_degree}; inputs are inconsistent"
        )
    return (
        safe_ceil((b_plain - math.sqrt(disc_plain)) / 4.0),
        safe_ceil((b_strong - math.sqrt(disc_strong)) / 4.0),
    )


def global_dual_spectral_radius(n: int, m: int, spectral_radius: float) -> tuple[int, int]:
    """Bounds ceil((2m+n)/(4(lambda+1))) and ceil((m+n)/(2*lambda+1)) on the
    global (strong) dual alliance numbers."""
    lam = _nonnegative(spectral_radius, "spectral radius")
    return (
        safe_ceil((2 * m + n) / (4.0 * (lam + 1.0))),
        safe_ceil((m + n) / (2.0 * lam + 1.0)),
    )


def global_dual_size(n: int, m: int) -> tuple[int, int]:
    """Bounds ceil(sqrt(2m+n)/2) and ceil((1+sqrt(1+8(n+m)))/4) on the global
    (strong) dual alliance numbers."""
    return (
        safe_ceil(math.sqrt(2 * m + n) / 2.0),
        safe_ceil((1.0 + math.sqrt(1.0 + 8.0 * (n + m))) / 4.0),
    )


def domination_laplacian_radius(n: int, laplacian_radius: float) -> int:
    """Bound n/mu* on the domination number, rounded up."""
    mu_star = _nonnegative(laplacian_radius, "Laplacian spectral radius")
    if mu_star <= 0:
        raise ValueError("bound requires a positive Laplacian spectral radius (at least one edge)")
    return safe_ceil(n / mu_star)


def evaluate_all(
    g: Graph,
    summary: SpectralSummary | None = None,
    theorems: Iterable[str] | None = None,
) -> list[BoundResult]:
    """Evaluate every requested theorem on one graph.

    ``summary`` may be None (order-1 graphs have no algebraic connectivity);
    spectral theorems are then reported inapplicable. Values are clamped at
    zero: a negative lower bound carries no information.
    """
    if theorems is None:
        selected = set(THEOREM_IDS)
    else:
        selected = set(theorems)
        unknown = selected.difference(THEOREM_IDS)
        if unknown:
            raise ValueError(f"unknown theorem id(s): {', '.join(sorted(unknown))}")

    n, m = g.n, g.m
    stats = degree_stats(g)
    connected = summary.connected if summary is not None else is_connected(g)
    mu = summary.algebraic_connectivity if summary is not None else None
    lam = summary.spectral_radius if summary is not None else None
    mu_star = summary.laplacian_radius if summary is not None else None
    no_spectrum = "spectral summary unavailable (order < 2)"

    results: list[BoundResult] = []

    def emit(theorem: str, target: str, value: int, degenerate: bool = False, **inputs) -> None:
        results.append(
            BoundResult(theorem, target, max(0, value), degenerate=degenerate, inputs=inputs)
        )

    def skip(theorem: str, target: str, reason: str, **inputs) -> None:
        results.append(
            BoundResult(theorem, target, None, applicable=False, reason=reason, inputs=inputs)
        )

    if "def-mu" in selected:
        if mu is None:
            skip("def-mu", "defensive", no_spectrum)
            skip("def-mu", "strong_defensive", no_spectrum)
        else:
            plain, strong = defensive_connectivity(n, mu)
            degenerate = not connected  # mu ~ 0 makes these vacuous
            emit("def-mu", "defensive", plain, degenerate, n=n, algebraic_connectivity=mu)
            emit("def-mu", "strong_defensive", strong, degenerate, n=n, algebraic_connectivity=mu)

    if "strongdef-mu-delta" in selected:
        if mu is None:
            skip("strongdef-mu-delta", "strong_defensive", no_spectrum)
        elif not connected:
            skip("strongdef-mu-delta", "strong_defensive", "graph is disconnected")
        else:
            value = strong_defensive_connectivity_degree(n, mu, stats.max_degree)
            emit(
                "strongdef-mu-delta",
                "strong_defensive",
                value,
                n=n,
                algebraic_connectivity=mu,
                max_degree=stats.max_degree,
            )

    if "globdef-lambda" in selected:
        if lam is None:
            skip("globdef-lambda", "global_defensive", no_spectrum)
            skip("globdef-lambda", "global_strong_defensive", no_spectrum)
        else:
            plain, strong = global_defensive_spectral_radius(n, lam)
            emit("globdef-lambda", "global_defensive", plain, n=n, spectral_radius=lam)
            emit("globdef-lambda", "global_strong_defensive", strong, n=n, spectral_radius=lam)

    if "globdef-degree" in selected:
        plain, strong = global_defensive_degree(n, stats.max_degree)
        emit("globdef-degree", "global_defensive", plain, n=n, max_degree=stats.max_degree)
        emit("globdef-degree", "global_strong_defensive", strong, n=n, max_degree=stats.max_degree)

    if "globdef-degree-prior" in selected:
        value = global_defensive_degree_prior(n, stats.max_degree)
        emit("globdef-degree-prior", "global_defensive", value, n=n, max_degree=stats.max_degree)

    if "girth-regular-mu" in selected:
        if stats.regular is None:
            skip("girth-regular-mu", "girth", "graph is not regular")
        elif stats.regular not in (3, 4, 5):
            skip(
                "girth-regular-mu",
                "girth",
                f"regular of degree {stats.regular}; theorem covers degrees 3, 4, 5",
            )
        elif not connected:
            skip("girth-regular-mu", "girth", "graph is disconnected")
        elif mu is None:
            skip("girth-regular-mu", "girth", no_spectrum)
        else:
            value = girth_regular_connectivity(n, mu, stats.regular)
            emit(
                "girth-regular-mu",
                "girth",
                value,
                n=n,
                algebraic_connectivity=mu,
                degree=stats.regular,
            )

    if "globoff-laplacian" in selected:
        if mu_star is None:
            skip("globoff-laplacian", "global_offensive", no_spectrum)
            skip("globoff-laplacian", "global_strong_offensive", no_spectrum)
        elif mu_star <= SNAP:
            reason = "Laplacian spectral radius is zero (edgeless graph)"
            skip("globoff-laplacian", "global_offensive", reason)
            skip("globoff-laplacian", "global_strong_offensive", reason)
        else:
            plain, strong = global_offensive_laplacian_radius(n, stats.min_degree, mu_star)
            emit(
                "globoff-laplacian",
                "global_offensive",
                plain,
                n=n,
                min_degree=stats.min_degree,
                laplacian_radius=mu_star,
            )
            emit(
                "globoff-laplacian",
                "global_strong_offensive",
                strong,
                n=n,
                min_degree=stats.min_degree,
                laplacian_radius=mu_star,
            )

    if "globoff-quadratic" in selected:
        plain, strong = global_offensive_quadratic(n, m, stats.max_degree)
        emit("globoff-quadratic", "global_offensive", plain, n=n, m=m, max_degree=stats.max_degree)
        emit(
            "globoff-quadratic",
            "global_strong_offensive",
            strong,
            n=n,
            m=m,
            max_degree=stats.max_degree,
        )

    if "globdual-lambda" in selected:
        if lam is None:
            skip("globdual-lambda", "global_dual", no_spectrum)
            skip("globdual-lambda", "global_strong_dual", no_spectrum)
        else:
            plain, strong = global_dual_spectral_radius(n, m, lam)
            emit("globdual-lambda", "global_dual", plain, n=n, m=m, spectral_radius=lam)
            emit("globdual-lambda", "global_strong_dual", strong, n=n, m=m, spectral_radius=lam)

    if "globdual-size" in selected:
        plain, strong = global_dual_size(n, m)
        emit("globdual-size", "global_dual", plain, n=n, m=m)
        emit("globdual-size", "global_strong_dual", strong, n=n, m=m)

    if "dom-laplacian" in selected:
        if mu_star is None:
            skip("dom-laplacian", "domination", no_spectrum)
        elif mu_star <= SNAP:
            skip("dom-laplacian", "domination", "Laplacian spectral radius is zero (edgeless graph)")
        else:
            value = domination_laplacian_radius(n, mu_star)
            emit("dom-laplacian", "domination", value, n=n, laplacian_radius=mu_star)

    return results
