"""Numerical bound formulas: the essential-surface intersection threshold
and its inversion into hitting-number lower bounds, catching-surface Euler
characteristic bookkeeping, the bridge-number lower bound, and the strong
threshold.

Conventions.  Hitting-number bounds come from inequalities of the shape
max(h, 1) >= |i| * N - c; these certify a bound on h itself only when the
right-hand side exceeds 1, so the integerized functions return
ceil(|i| * N - c) in that regime and 0 otherwise.  The bridge bound is
returned as an exact Fraction; its consumers do their own rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .torus import NU, TorusCurve, intersection


class BadChi(ValueError):
    """A negative Euler characteristic input was required."""


class BadGenus(ValueError):
    """Genus outside the formula's range."""


class BadRecipe(ValueError):
    """Catching-surface recipe data is inconsistent or missing."""


@dataclass(frozen=True)
class CatchingStats:
    """Boundary/Euler bookkeeping for a catching surface Q against a
    properly embedded surface F.

    f_K, f_L, f_M count boundary components of F on the three boundary
    pieces; chi_F_hat is the Euler characteristic of F capped off.  The
    primed quantities f'_K = max(f_K, 1), f'_M = max(f_M, 1) and
    Delta'_K = max(Delta_K, 1) are derived, never stored.
    """

    chi_Q: int
    f_K: int
    f_L: int
    f_M: int
    chi_F_hat: int
    Delta_K: int
    Delta_L: int = 0
    Delta_M: int = 0

    def __post_init__(self):
        if self.f_L < 1:
            raise ValueError("f_L >= 1 is a standing assumption")
        if min(self.f_K, self.f_M, self.Delta_K, self.Delta_L, self.Delta_M) < 0:
            raise ValueError("boundary counts and distances are nonnegative")

    @property
    def f_K_prime(self) -> int:
        return max(self.f_K, 1)

    @property
    def f_M_prime(self) -> int:
        return max(self.f_M, 1)

    @property
    def Delta_K_prime(self) -> int:
        return max(self.Delta_K, 1)


def threshold(stats: CatchingStats) -> int:
    """The distance threshold above which the dichotomy (Mobius band or
    spanning annulus) applies: 6 f'_M max(-6 chi(Q), 2)
    (f'_K Delta'_K + f_M - chi(F^) + 2).
    """
    return (
        6
        * stats.f_M_prime
        * max(-6 * stats.chi_Q, 2)
        * (
            stats.f_K_prime * stats.Delta_K_prime
            + stats.f_M
            - stats.chi_F_hat
            + 2
        )
    )


def parallelism_class_bound(chi_Q: int) -> int:
    """Max number of parallelism classes of nontrivial edges on Q."""
    return max(-3 * chi_Q, 1)


def parallel_edges_threshold(V: int, chi_S: int) -> int:
    """Edge count above which a monogon-free graph in S has parallel edges.

    Strictly above forces parallel edges; when chi(S) > 0 or S has
    boundary, equality already suffices.
    """
    if V < 1:
        raise ValueError("V >= 1 required")
    return 3 * V * max(1 - chi_S, 1)


@dataclass(frozen=True)
class CatchingRecipe:
    """Euler-characteristic recipe: a base surface, tube pairs joining
    oppositely oriented intersections, and punctures from removed
    neighborhoods."""

    base_chi: int
    tube_pairs: int
    punctures: int

    def __post_init__(self):
        if self.tube_pairs < 0 or self.punctures < 0:
            raise BadRecipe("tube and puncture counts are nonnegative")


def catching_chi(recipe: CatchingRecipe) -> int:
    """chi = base_chi - 2 * tube_pairs - punctures."""
    return recipe.base_chi - 2 * recipe.tube_pairs - recipe.punctures


def gamma_disk_recipe() -> CatchingRecipe:
    """The tubed meridian disk caught by the gamma_g curve: the curve meets
    the disk 7 times but algebraically once, so 3 tube pairs and one
    remaining puncture."""
    return CatchingRecipe(base_chi=1, tube_pairs=3, punctures=1)


GAMMA_DISK = catching_chi(gamma_disk_recipe())  # -6


def nu_recipe(kappa: TorusCurve) -> CatchingRecipe:
    """Catching surface for twisting along the (1,1)-annulus: a 3-punctured
    sphere pushed off the splitting, punctured once by the lower annulus
    boundary and once per crossing of the companion curve with (1,1)."""
    return CatchingRecipe(
        base_chi=-1,
        tube_pairs=0,
        punctures=1 + intersection(kappa, NU),
    )


# Copies of the separating product disk appearing in the central-disk
# intersection pattern; used only for algebraic-intersection sanity checks,
# never for Euler characteristics (they cancel algebraically).
SEPARATING_DISK_COPIES_BANDED = {"H": 4, "S": 8}
SEPARATING_DISK_COPIES_PER_TWIST = {"H": 32, "S": 64}


def central_disk_algebraic(alpha: TorusCurve) -> int:
    """|algebraic| intersection of the annulus boundary curves (copies of
    alpha) with the banded central disk: |p - q|, zero exactly for the
    (1,1) and (1,-1) classes."""
    return abs(alpha.p - alpha.q)


def genus2_recipe(
    alpha: TorusCurve,
    l_plus_geometric: int,
    l_minus_geometric: int,
    kappa_crossings: int,
) -> CatchingRecipe:
    """i-independent genus-2 catching surface: central disk with four bands
    (base chi = -3), tubed to make the annulus-boundary intersections
    coherent.  Geometric counts must be supplied; the recipe refuses to
    guess them."""
    a = central_disk_algebraic(alpha)
    if a == 0:
        raise BadRecipe(
            "tubing cannot orient the boundary coherently for this class"
        )
    if kappa_crossings < 0:
        raise BadRecipe("crossing counts are nonnegative")
    excess = 0
    for geo in (l_plus_geometric, l_minus_geometric):
        if geo < a or (geo - a) % 2:
            raise BadRecipe(
                f"geometric count {geo} inconsistent with algebraic count {a}"
            )
        excess += geo - a
    return CatchingRecipe(
        base_chi=-3,
        tube_pairs=excess // 2,
        punctures=2 * a + kappa_crossings,
    )


def _check_chi(chi_Q: int) -> int:
    if chi_Q >= 0:
        raise BadChi("a catching surface with chi(Q) < 0 is required")
    return abs(chi_Q)


def disk_hitting_lower_bound(i: int, chi_Q: int) -> int:
    """Certified lower bound on the disk hitting number after |i| twists.

    From max(h, 1) >= |i| / (36 |chi|) - 1; informative only when the
    right side exceeds 1, i.e. |i| > 72 |chi|.
    """
    c = _check_chi(chi_Q)
    d = 36 * c
    if abs(i) <= 2 * d:
        return 0
    return -((d - abs(i)) // d)  # ceil(|i|/d - 1)


def annulus_hitting_lower_bound(i: int, chi_Q: int) -> int:
    """Certified lower bound on the annulus hitting number after |i| twists.

    From max(h, 1) >= |i| / (72 |chi|) - 2; informative when |i| > 216 |chi|.
    """
    c = _check_chi(chi_Q)
    d = 72 * c
    if abs(i) <= 3 * d:
        return 0
    return -((2 * d - abs(i)) // d)  # ceil(|i|/d - 2)


def bridge_lower_bound(n: int, chi_Q: int, g: int) -> Fraction:
    """Lower bound (1/2)(|n| / (36 |chi|) - 2g) on the genus-g bridge
    number, clamped at 0; exact rational."""
    c = _check_chi(chi_Q)
    if g < 2:
        raise BadGenus("bridge bound needs g >= 2")
    value = Fraction(abs(n), 72 * c) - g
    return max(value, Fraction(0))


def n_strong(chi_Q_nu: int) -> int:
    """Smallest threshold T with |i| > T certifying hitting numbers
    h_D > 3 and h_A > 1 for the core curve; equals 216 |chi|
    (= max(4 * 36 |chi|, 3 * 72 |chi|))."""
    c = _check_chi(chi_Q_nu)
    return 216 * c
