"""Closed-form Wigner functions of the single-qudit reference state.

Neither expression is used as ground truth. The exact form as printed
lacks the -pi/d factor in its first Gaussian and is evaluated with it
restored; the compact form is a large-d approximation. Both are compared
with the definitional grid and the discrepancy is reported.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from phasevault._types._alias import RealArray
from phasevault.quasidist.grid import SOrder
from phasevault.quasidist.kernel import quasidist
from phasevault.states.reference import reference_state
from phasevault.states.vector import TAIL_BOUND, ThetaParams

__all__ = [
    "CrossCheckReport",
    "wigner_reference_closed_form",
    "wigner_reference_approx",
    "cross_check_reference_wigner",
]

logger = logging.getLogger(__name__)

DISCREPANCY_WARNING = 1e-6


@dataclass(frozen=True)
class CrossCheckReport:
    d: int
    closed_form_error: float
    approx_error: float

    @property
    def worst(self) -> float:
        return max(self.closed_form_error, self.approx_error)


def _window(d: int, scale: float) -> np.ndarray:
    half = math.ceil(math.sqrt(math.log(1.0 / TAIL_BOUND) * scale * d / math.pi)) + 1
    return np.arange(-half, half + 1)


def wigner_reference_closed_form(d: int) -> RealArray:
    """(d/C) sum_k sum_{p,q} omega((2k-1-2m) n) exp(-(pi/d)(-k+2m+qd-(d-1)/2)^2) exp(-(pi/d)(k+pd-d/2)^2)."""
    params = ThetaParams.for_dimension(d)
    wraps = np.arange(-3, 4)
    k = np.arange(d)
    m = np.arange(d)
    n = np.arange(d)
    first = np.exp(
        -(math.pi / d)
        * (-k[None, :, None] + 2 * m[:, None, None] + wraps[None, None, :] * d - (d - 1) / 2.0) ** 2
    ).sum(axis=-1)
    second = np.exp(-(math.pi / d) * (k[:, None] + wraps[None, :] * d - d / 2.0) ** 2).sum(axis=-1)
    phase = np.exp(2j * math.pi * ((2 * k[None, None, :] - 1 - 2 * m[:, None, None]) * n[None, :, None]) / d)
    values = (d / params.C) * np.einsum("mnk,mk,k->mn", phase, first, second)
    return np.real(values)


def wigner_reference_approx(d: int) -> RealArray:
    """sqrt(2)/d^(3/2) sum_{k,l} (-1)^(kl) omega(mk - nl) exp(-pi (k^2 + l^2) / (2d))."""
    window = _window(d, 2.0)
    sign = np.where((window[:, None] * window[None, :]) % 2 == 0, 1.0, -1.0)
    gauss = np.exp(-math.pi * (window[:, None] ** 2 + window[None, :] ** 2) / (2.0 * d))
    ell = np.arange(d)
    along_m = np.exp(2j * math.pi * np.outer(ell, window) / d)
    along_n = np.exp(-2j * math.pi * np.outer(ell, window) / d)
    values = math.sqrt(2.0) / d**1.5 * (along_m @ (sign * gauss) @ along_n.T)
    return np.real(values)


def _unit(values: np.ndarray) -> np.ndarray:
    return values / np.sum(values)


def cross_check_reference_wigner(d: int) -> CrossCheckReport:
    """Max discrepancy of both closed forms against the definitional W, unit-sum views."""
    state = reference_state(d)
    exact = _unit(np.real(quasidist(state.density(), SOrder.WIGNER).values))
    report = CrossCheckReport(
        d=d,
        closed_form_error=float(np.max(np.abs(_unit(wigner_reference_closed_form(d)) - exact))),
        approx_error=float(np.max(np.abs(_unit(wigner_reference_approx(d)) - exact))),
    )
    if report.worst > DISCREPANCY_WARNING:
        logger.warning(
            "Closed-form Wigner functions differ from the definitional grid at d=%d: printed %.3e, compact %.3e",
            d,
            report.closed_form_error,
            report.approx_error,
        )
    return report
