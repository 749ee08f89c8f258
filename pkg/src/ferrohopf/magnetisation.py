"""Relative-permeability laws mu(s) and the magnetisation potential M(s).

A law provides mu(s) > 1 on its working range together with the potential
M(s) = integral of t*mu(t) from 0 to s, so that dM/ds = s*mu(s).  Three
kinds are supported:

* ``constant``  -- mu(s) = mu (linear magnetisation law),
* ``langevin``  -- mu(s) = 1 + (Ms/s)*(coth(g*s) - 1/(g*s)) with
  g = 3*chi0/Ms, where Ms is the magnetic saturation and chi0 the initial
  susceptibility,
* ``tabulated`` -- C^2 cubic-spline interpolation of (s, mu) samples.

Every law must satisfy mu(1) + dmu/ds(1) > 0; violating laws are rejected
at construction.  The four derivatives of mu at s = 1 form the "jet" that
all downstream dispersion/normal-form formulas consume.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate as _integrate
from scipy.interpolate import CubicSpline

from .errors import InvalidLawError, NumericalError

# coth(x) - 1/x loses every digit as x -> 0; switch to its Taylor series.
LANGEVIN_SERIES_CUTOFF = 1e-3

# Step for the finite-difference jet of tabulated laws (fourth-order
# central stencils need s = 1 +/- 3h inside the sample range).
_TAB_FD_STEP = 1e-2

QUADRATURE_ABS_TOL = 1e-12


@dataclass(frozen=True)
class LawJet:
    """mu and its first three s-derivatives evaluated at s = 1."""

    mu1: float
    dmu1: float
    ddmu1: float
    dddmu1: float

    def __post_init__(self):
        if not self.mu1 + self.dmu1 > 0.0:
            raise InvalidLawError(
                f"mu(1) + mu'(1) = {self.mu1 + self.dmu1} must be positive"
            )

    @property
    def qtilde_factor(self) -> float:
        """Ratio qtilde/q = sqrt(mu1/(mu1 + dmu1)) of strip wavenumbers."""
        return math.sqrt(self.mu1 / (self.mu1 + self.dmu1))


def _langevin(x):
    """coth(x) - 1/x, series below the cutoff to avoid cancellation."""
    x = np.asarray(x, dtype=float)
    tiny = np.abs(x) < LANGEVIN_SERIES_CUTOFF
    xb = np.where(tiny, 1.0, np.minimum(x, 350.0))
    big = 1.0 + 2.0 / np.expm1(2.0 * xb) - 1.0 / xb
    big = np.where(x > 350.0, 1.0 - 1.0 / np.where(tiny, 1.0, x), big)
    series = x / 3.0 - x**3 / 45.0 + 2.0 * x**5 / 945.0
    out = np.where(tiny, series, big)
    return out if out.ndim else float(out)


class MagnetisationLaw:
    """A relative-permeability law; immutable after construction.

    Use the factory helpers :func:`constant_law`, :func:`langevin_law`,
    :func:`tabulated_law` or :func:`law_from_json` rather than calling the
    constructor directly.
    """

    def __init__(self, kind, *, mu=None, saturation=None, chi0=None,
                 samples=None):
        if kind not in ("constant", "langevin", "tabulated"):
            raise InvalidLawError(f"unknown law kind {kind!r}")
        self.kind = kind
        self._spline = None
        if kind == "constant":
            if mu is None or not mu > 1.0:
                raise InvalidLawError("constant law needs mu > 1")
            self.mu = float(mu)
        elif kind == "langevin":
            if saturation is None or not saturation > 0.0:
                raise InvalidLawError("langevin law needs saturation > 0")
            if chi0 is None or not chi0 > 0.0:
                raise InvalidLawError("langevin law needs chi0 > 0")
            self.saturation = float(saturation)
            self.chi0 = float(chi0)
            self.gamma = 3.0 * self.chi0 / self.saturation
        else:
            pts = np.asarray(samples, dtype=float)
            if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 8:
                raise InvalidLawError(
                    "tabulated law needs at least 8 (s, mu) sample pairs"
                )
            s, mu_s = pts[:, 0], pts[:, 1]
            order = np.argsort(s)
            s, mu_s = s[order], mu_s[order]
            if np.any(np.diff(s) <= 0.0):
                raise InvalidLawError("tabulated s values must be distinct")
            if np.any(mu_s <= 1.0):
                raise InvalidLawError("tabulated mu values must exceed 1")
            margin = 3.0 * _TAB_FD_STEP
            if s[0] > 1.0 - margin or s[-1] < 1.0 + margin:
                raise InvalidLawError(
                    f"tabulated grid must cover [1-{margin}, 1+{margin}] "
                    "to differentiate at s = 1"
                )
            self.samples = np.column_stack([s, mu_s])
            self.s_min, self.s_max = float(s[0]), float(s[-1])
            self._spline = CubicSpline(s, mu_s)
        # Computing the jet also enforces mu(1) + mu'(1) > 0.
        self.jet = self._compute_jet()

    # -- evaluation ---------------------------------------------------

    def mu_of(self, s):
        s_arr = np.asarray(s, dtype=float)
        if np.any(s_arr <= 0.0):
            raise ValueError("mu(s) requires s > 0")
        if self.kind == "constant":
            out = np.full_like(s_arr, self.mu)
        elif self.kind == "langevin":
            out = 1.0 + self.saturation * _langevin(self.gamma * s_arr) / s_arr
        else:
            if np.any(s_arr < self.s_min) or np.any(s_arr > self.s_max):
                raise ValueError(
                    f"tabulated law only valid on [{self.s_min}, {self.s_max}]"
                )
            out = self._spline(s_arr)
        return out if out.ndim else float(out)

    def _compute_jet(self) -> LawJet:
        if self.kind == "constant":
            return LawJet(self.mu, 0.0, 0.0, 0.0)
        if self.kind == "langevin":
            return self._langevin_jet()
        return self._finite_difference_jet()

    def _langevin_jet(self) -> LawJet:
        ms, g = self.saturation, self.gamma
        if g < LANGEVIN_SERIES_CUTOFF:
            # mu(s) = 1 + Ms*(g/3 - g^3 s^2/45 + 2 g^5 s^4/945) near g*s = 0.
            return LawJet(
                1.0 + ms * (g / 3.0 - g**3 / 45.0 + 2.0 * g**5 / 945.0),
                ms * (-2.0 * g**3 / 45.0 + 8.0 * g**5 / 945.0),
                ms * (-2.0 * g**3 / 45.0 + 24.0 * g**5 / 945.0),
                ms * (48.0 * g**5 / 945.0),
            )
        c = 1.0 + 2.0 / math.expm1(2.0 * g) if g < 350.0 else 1.0
        e = (2.0 * math.exp(-g) / -math.expm1(-2.0 * g)) ** 2  # cosech^2
        # Derivatives of coth(g*s) at s = 1 enter via g(s)/s - 1/(g s^2).
        return LawJet(
            1.0 + ms * (c - 1.0 / g),
            ms * (-g * e - c + 2.0 / g),
            ms * (2.0 * g * g * e * c + 2.0 * g * e + 2.0 * c - 6.0 / g),
            ms * (-4.0 * g**3 * e * c * c - 2.0 * g**3 * e * e
                  - 6.0 * g * g * e * c - 6.0 * g * e - 6.0 * c + 24.0 / g),
        )

    def _finite_difference_jet(self) -> LawJet:
        h = _TAB_FD_STEP
        f = self._spline(1.0 + h * np.arange(-3, 4))
        d1 = (-f[5] + 8.0 * f[4] - 8.0 * f[2] + f[1]) / (12.0 * h)
        d2 = (-f[5] + 16.0 * f[4] - 30.0 * f[3] + 16.0 * f[2] - f[1]) / (
            12.0 * h * h)
        d3 = (f[6] - 8.0 * f[5] + 13.0 * f[4] - 13.0 * f[2] + 8.0 * f[1]
              - f[0]) / (8.0 * h**3)
        return LawJet(float(f[3]), float(d1), float(d2), float(d3))

    def to_json(self) -> str:
        if self.kind == "constant":
            doc = {"kind": "constant", "mu": self.mu}
        elif self.kind == "langevin":
            doc = {"kind": "langevin", "saturation": self.saturation,
                   "chi0": self.chi0}
        else:
            doc = {"kind": "tabulated", "samples": self.samples.tolist()}
        return json.dumps(doc, sort_keys=True)

    def __repr__(self):
        if self.kind == "constant":
            return f"MagnetisationLaw(constant, mu={self.mu})"
        if self.kind == "langevin":
            return (f"MagnetisationLaw(langevin, saturation={self.saturation},"
                    f" chi0={self.chi0})")
        return f"MagnetisationLaw(tabulated, {len(self.samples)} samples)"


def constant_law(mu: float) -> MagnetisationLaw:
    return MagnetisationLaw("constant", mu=mu)


def langevin_law(saturation: float, chi0: float) -> MagnetisationLaw:
    return MagnetisationLaw("langevin", saturation=saturation, chi0=chi0)


def tabulated_law(samples) -> MagnetisationLaw:
    return MagnetisationLaw("tabulated", samples=samples)


def law_from_json(doc) -> MagnetisationLaw:
    """Build a law from a JSON string or an already-parsed dict."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise InvalidLawError(f"malformed law JSON: {exc}") from exc
    if not isinstance(doc, dict) or "kind" not in doc:
        raise InvalidLawError("law JSON must be an object with a 'kind' key")
    kind = doc["kind"]
    try:
        if kind == "constant":
            return constant_law(doc["mu"])
        if kind == "langevin":
            return langevin_law(doc["saturation"], doc["chi0"])
        if kind == "tabulated":
            return tabulated_law(doc["samples"])
    except KeyError as exc:
        raise InvalidLawError(f"law JSON missing field {exc}") from exc
    raise InvalidLawError(f"unknown law kind {kind!r}")


# -- operations -------------------------------------------------------


def eval_mu(law: MagnetisationLaw, s):
    """Relative permeability mu(s); s > 0, 1d arrays accepted."""
    return law.mu_of(s)


def eval_M(law: MagnetisationLaw, s: float) -> float:
    """Magnetisation potential M(s) = integral_0^s t*mu(t) dt."""
    if not s > 0.0:
        if s == 0.0:
            return 0.0
        raise ValueError("M(s) requires s >= 0")
    if law.kind == "constant":
        return 0.5 * law.mu * s * s
    value, err = _integrate.quad(
        lambda t: t * law.mu_of(t) if t > 0.0 else 0.0,
        0.0, s, epsabs=QUADRATURE_ABS_TOL, epsrel=1e-12, limit=200)
    if err > 1e-9 * max(1.0, abs(value)):
        raise NumericalError(
            f"quadrature for M({s}) did not converge (error estimate {err})"
        )
    return value


def jet_at_one(law: MagnetisationLaw) -> LawJet:
    """The (mu, mu', mu'', mu''') jet of the law at s = 1."""
    return law.jet
