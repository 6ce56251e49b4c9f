"""Certified knot-family catalogs.

A KnotSpec names a knot K(tau, g, *, i): the curve tau = T_alpha^n(kappa)
sits on the boundary of a genus-g handlebody (family H) or of a Seifert
piece with 1-handles (family S), and i counts twists along the annulus
neighborhood of the gamma_g curve.  A Certificate collects everything the
bound engine can certify about that knot, with every uncertified field
carrying an explicit reason instead of a silent default.

Catalogs are deterministic: identical inputs give byte-identical csv/txt
output (schema "knotforge-catalog v1").
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import bounds
from .torus import LAMBDA, MU, NU, TorusCurve, dehn_twist, is_exceptional


class CertificateError(ValueError):
    """A certificate failed its internal consistency guards."""


class NonPrimitiveBase(ValueError):
    """Seifert base coordinates must be coprime."""


@dataclass(frozen=True)
class KnotSpec:
    g: int
    family: str  # "H" (handlebody) or "S" (Seifert)
    kappa: TorusCurve
    alpha: TorusCurve
    n: int
    i: int

    def __post_init__(self):
        if self.g < 2:
            raise CertificateError("knot specs need g >= 2")
        if self.family not in ("H", "S"):
            raise CertificateError("family must be 'H' or 'S'")
        if self.kappa == self.alpha:
            raise CertificateError("kappa and alpha must be distinct classes")


@dataclass(frozen=True)
class ExteriorFlags:
    irreducible: bool
    boundary_irreducible: bool
    atoroidal: bool
    anannular: bool

    def all_true(self) -> bool:
        return (
            self.irreducible
            and self.boundary_irreducible
            and self.atoroidal
            and self.anannular
        )


@dataclass(frozen=True)
class Certificate:
    """Certified data for one knot.  Optional fields are None with a
    reason string when not certified; reasons render as "n/a(reason)"."""

    tau: TorusCurve
    exceptional: bool
    seifert: tuple[int, int] | None
    surgery: str
    bridge_lower: Fraction | None
    bridge_lower_reason: str
    bridge_upper_heuristic: int
    hbar_D_lower: int
    hbar_A_lower: int
    strong: bool
    exterior_flags: ExteriorFlags
    unique_surgery: bool

    def __post_init__(self):
        if self.seifert is not None:
            p, q = self.seifert
            if gcd(abs(p), abs(q)) != 1:
                raise CertificateError(f"seifert data {self.seifert} not coprime")
        if self.exterior_flags.all_true() and not (self.strong and not self.exceptional):
            raise CertificateError("exterior flags require strong and non-exceptional")
        if self.unique_surgery != self.exterior_flags.all_true():
            raise CertificateError("unique surgery must track the exterior flags")
        if (
            self.bridge_lower is not None
            and self.bridge_lower > self.bridge_upper_heuristic
        ):
            raise CertificateError(
                f"bridge lower bound {self.bridge_lower} exceeds the"
                f" heuristic upper bound {self.bridge_upper_heuristic}"
            )


def seifert_invariants(r: int, s: int, n: int) -> tuple[int, int]:
    """Exceptional-fiber orders after n annulus twists:
    ((n+1)r - ns, nr - (n-1)s)."""
    if gcd(abs(r), abs(s)) != 1:
        raise NonPrimitiveBase(f"({r}, {s}) is not primitive")
    return ((n + 1) * r - n * s, n * r - (n - 1) * s)


def bridge_upper_heuristic(tau: TorusCurve) -> int:
    """|p| + |q|: maxima of the standard bridge presentation of tau in a
    collar of the splitting surface.  A presentation heuristic, not a
    certified bound; rendered with a heuristic marker."""
    return abs(tau.p) + abs(tau.q)


def build_certificate(
    spec: KnotSpec,
    chi_Q_bridge: int | None = None,
    chi_Q_nu: int | None = None,
    chi_Q_hit: int | None = None,
) -> Certificate:
    """Assemble the certificate for one knot spec.

    chi_Q_hit (hitting bounds) defaults to the tubed-meridian-disk value
    GAMMA_DISK; chi_Q_nu (the strong threshold) defaults to the
    3-punctured-sphere recipe for spec.kappa; chi_Q_bridge defaults to the
    same recipe when alpha is the (1,1) class and is otherwise required
    explicitly (the catching surface depends on i there).
    """
    tau = dehn_twist(spec.kappa, spec.alpha, spec.n)
    exceptional = is_exceptional(tau)
    if chi_Q_hit is None:
        chi_Q_hit = bounds.GAMMA_DISK
    if chi_Q_nu is None:
        chi_Q_nu = bounds.catching_chi(bounds.nu_recipe(spec.kappa))
    strong = abs(spec.i) > bounds.n_strong(chi_Q_nu)
    hbar_D = bounds.disk_hitting_lower_bound(spec.i, chi_Q_hit)
    hbar_A = bounds.annulus_hitting_lower_bound(spec.i, chi_Q_hit)

    bridge_lower = None
    reason = ""
    if not strong:
        reason = "needs |i| above the strong threshold"
    elif spec.alpha in (MU, LAMBDA):
        reason = "alpha must miss the product-disk classes"
    else:
        if chi_Q_bridge is None and spec.alpha == NU:
            chi_Q_bridge = bounds.catching_chi(bounds.nu_recipe(spec.kappa))
        if chi_Q_bridge is None:
            reason = "not i-uniform; supply a catching chi"
        else:
            bridge_lower = bounds.bridge_lower_bound(spec.n, chi_Q_bridge, spec.g)

    if spec.family == "S":
        seifert = (tau.p, tau.q)
        surgery = f"D({tau.p},{tau.q})-Seifert + {spec.g - 1} 1-handles"
    else:
        seifert = None
        surgery = "handlebody"

    flags_all = strong and not exceptional
    flags = ExteriorFlags(flags_all, flags_all, flags_all, flags_all)
    return Certificate(
        tau=tau,
        exceptional=exceptional,
        seifert=seifert,
        surgery=surgery,
        bridge_lower=bridge_lower,
        bridge_lower_reason=reason,
        bridge_upper_heuristic=bridge_upper_heuristic(tau),
        hbar_D_lower=hbar_D,
        hbar_A_lower=hbar_A,
        strong=strong,
        exterior_flags=flags,
        unique_surgery=flags.all_true(),
    )


@dataclass(frozen=True)
class CatalogRow:
    n: int
    i: int
    certificate: Certificate | None
    error: str = ""


@dataclass(frozen=True)
class Catalog:
    g: int
    family: str
    kappa: TorusCurve
    alpha: TorusCurve
    statements: tuple[str, ...]
    rows: tuple[CatalogRow, ...]

    @property
    def errored(self) -> bool:
        return any(row.error for row in self.rows)


def generate_family(
    g: int,
    family: str,
    kappa: TorusCurve,
    alpha: TorusCurve,
    n_range,
    i_range,
    chi_Q_bridge: int | None = None,
    chi_Q_nu: int | None = None,
    chi_Q_hit: int | None = None,
) -> Catalog:
    """One certificate row per (n, i), sorted lexicographically; failed
    rows carry their error message and are never dropped."""
    rows = []
    for n in sorted(set(n_range)):
        for i in sorted(set(i_range)):
            try:
                spec = KnotSpec(g=g, family=family, kappa=kappa, alpha=alpha, n=n, i=i)
                cert = build_certificate(spec, chi_Q_bridge, chi_Q_nu, chi_Q_hit)
                rows.append(CatalogRow(n, i, cert))
            except (ValueError, ArithmeticError) as exc:
                rows.append(CatalogRow(n, i, None, error=str(exc)))
    statements = ()
    if alpha not in (MU, LAMBDA):
        statements = ("distinctness: hbar_D lower bound unbounded in |i|",)
    return Catalog(g, family, kappa, alpha, statements, tuple(rows))


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

SCHEMA = "knotforge-catalog v1"

_COLUMNS = (
    "n",
    "i",
    "tau",
    "exceptional",
    "seifert",
    "surgery",
    "bridge_lower",
    "bridge_upper_heuristic",
    "hbar_D_lower",
    "hbar_A_lower",
    "strong",
    "irreducible",
    "boundary_irreducible",
    "atoroidal",
    "anannular",
    "unique_surgery",
    "error",
)


def _na(reason: str) -> str:
    return f"n/a({reason})"


def _row_values(row: CatalogRow) -> list[str]:
    if row.certificate is None:
        out = [str(row.n), str(row.i)]
        out += [_na("row error")] * (len(_COLUMNS) - 3)
        out.append(row.error)
        return out
    c = row.certificate
    seifert = f"({c.seifert[0]},{c.seifert[1]})" if c.seifert else _na("handlebody family")
    bridge = (
        str(c.bridge_lower) if c.bridge_lower is not None else _na(c.bridge_lower_reason)
    )
    f = c.exterior_flags
    return [
        str(row.n),
        str(row.i),
        str(c.tau),
        str(c.exceptional).lower(),
        seifert,
        c.surgery,
        bridge,
        f"{c.bridge_upper_heuristic} (heuristic)",
        str(c.hbar_D_lower),
        str(c.hbar_A_lower),
        str(c.strong).lower(),
        str(f.irreducible).lower(),
        str(f.boundary_irreducible).lower(),
        str(f.atoroidal).lower(),
        str(f.anannular).lower(),
        str(c.unique_surgery).lower(),
        "",
    ]


def render_csv(catalog: Catalog) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([SCHEMA])
    writer.writerow(
        [
            f"g={catalog.g}",
            f"family={catalog.family}",
            f"kappa={catalog.kappa}",
            f"alpha={catalog.alpha}",
        ]
    )
    for s in catalog.statements:
        writer.writerow(["statement", s])
    writer.writerow(_COLUMNS)
    for row in catalog.rows:
        writer.writerow(_row_values(row))
    return buf.getvalue()


def render_txt(catalog: Catalog) -> str:
    lines = [
        SCHEMA,
        f"g={catalog.g} family={catalog.family}"
        f" kappa={catalog.kappa} alpha={catalog.alpha}",
    ]
    lines.extend(f"statement: {s}" for s in catalog.statements)
    for row in catalog.rows:
        values = _row_values(row)
        fields = " ".join(
            f"{name}={value}" for name, value in zip(_COLUMNS, values) if value != ""
        )
        lines.append(fields)
    return "\n".join(lines) + "\n"
