from blindmc.equalize.mmse import distortion_variance
from blindmc.equalize.mmse import effective_gain
from blindmc.equalize.mmse import equalize
from blindmc.equalize.mmse import equalize_streams
from blindmc.equalize.mmse import mmse_filter


__all__ = [
    "distortion_variance",
    "effective_gain",
    "equalize",
    "equalize_streams",
    "mmse_filter",
]
