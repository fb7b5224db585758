"""Unit-power constellations and their power-law moments.

Point sets: BPSK {+1, -1}; QPSK (+-1 +-j)/sqrt(2), so E[s^4] = -1; 8-PSK e^{j pi k/4};
16-QAM the square {+-1, +-3}^2 grid scaled by 1/sqrt(10). Bit mapping is not modelled.
"""

from __future__ import annotations

from functools import cache
from typing import TYPE_CHECKING
from typing import Final

import numpy as np

from blindmc.core.errors import InvalidParameterError
from blindmc.core.types import ConstellationSpec
from blindmc.core.types import SchemeId
from blindmc.core.types import SymbolSequence


if TYPE_CHECKING:
    from numpy.typing import NDArray


DEFAULT_CANDIDATES: Final = (SchemeId.BPSK, SchemeId.QPSK, SchemeId.PSK8, SchemeId.QAM16)

# P = modulation order for PSK, 4 for QAM
_POWER_LAW_ORDER: Final = {
    SchemeId.BPSK: 2,
    SchemeId.QPSK: 4,
    SchemeId.PSK8: 8,
    SchemeId.QAM16: 4,
}


def _psk_points(order: int, offset: float = 0.0) -> NDArray[np.complex128]:
    k = np.arange(order)
    return np.exp(1j * (offset + 2.0 * np.pi * k / order))


def _square_qam_points(order: int) -> NDArray[np.complex128]:
    side = int(round(np.sqrt(order)))
    levels = np.arange(-(side - 1), side, 2, dtype=np.float64)
    grid = (levels[:, None] + 1j * levels[None, :]).ravel()
    return grid / np.sqrt(np.mean(np.abs(grid) ** 2))


def _canonical_points(scheme: SchemeId) -> NDArray[np.complex128]:
    match scheme:
        case SchemeId.BPSK:
            return np.array([1.0 + 0.0j, -1.0 + 0.0j])
        case SchemeId.QPSK:
            return _psk_points(4, offset=np.pi / 4)
        case SchemeId.PSK8:
            return _psk_points(8)
        case SchemeId.QAM16:
            return _square_qam_points(16)


@cache
def build_constellation(scheme: SchemeId | str) -> ConstellationSpec:
    """Build the canonical constellation for a scheme.

    Returns:
        ConstellationSpec with unit average power, power-law order P and E[s^P].

    Raises:
        UnsupportedSchemeError: If the scheme name is not supported.
    """
    scheme_id = SchemeId.parse(scheme)
    points = _canonical_points(scheme_id)
    order = _POWER_LAW_ORDER[scheme_id]
    return ConstellationSpec(
        scheme=scheme_id,
        points=points,
        power_law_order=order,
        reference_moment=complex(np.mean(points**order)),
    )


def build_candidates(schemes: tuple[SchemeId | str, ...] = DEFAULT_CANDIDATES) -> list[ConstellationSpec]:
    """Build specs for a candidate list, preserving its order.

    Returns:
        List of ConstellationSpec in the given order.
    """
    return [build_constellation(scheme) for scheme in schemes]


def constellation_moment(spec: ConstellationSpec, order: int) -> complex:
    """Exact noise-free moment E[s^order] over the point set.

    Returns:
        The average of point**order.

    Raises:
        InvalidParameterError: If order < 1.
    """
    if order < 1:
        raise InvalidParameterError("order", order, "moment order must be >= 1")
    return complex(np.mean(spec.points**order))


def draw_symbols(spec: ConstellationSpec, count: int, rng: np.random.Generator) -> SymbolSequence:
    """Draw ``count`` i.i.d. symbols uniformly from the constellation.

    Returns:
        SymbolSequence, deterministic for a given generator state.

    Raises:
        InvalidParameterError: If count < 1.
    """
    if count < 1:
        raise InvalidParameterError("count", count, "must draw at least one symbol")
    indices = rng.integers(0, spec.cardinality, size=count)
    return SymbolSequence(values=spec.points[indices], scheme=spec.scheme)
