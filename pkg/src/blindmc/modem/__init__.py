from blindmc.modem.constellation import DEFAULT_CANDIDATES
from blindmc.modem.constellation import build_candidates
from blindmc.modem.constellation import build_constellation
from blindmc.modem.constellation import constellation_moment
from blindmc.modem.constellation import draw_symbols


__all__ = [
    "DEFAULT_CANDIDATES",
    "build_candidates",
    "build_constellation",
    "constellation_moment",
    "draw_symbols",
]
