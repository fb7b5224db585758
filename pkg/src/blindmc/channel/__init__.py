from blindmc.channel.capture import read_capture
from blindmc.channel.capture import write_capture
from blindmc.channel.simulate import NOISE_FLOOR
from blindmc.channel.simulate import complex_gaussian
from blindmc.channel.simulate import derive_seed
from blindmc.channel.simulate import draw_channel
from blindmc.channel.simulate import noise_realization
from blindmc.channel.simulate import noise_variance_from_snr
from blindmc.channel.simulate import synthesize_frame


__all__ = [
    "NOISE_FLOOR",
    "complex_gaussian",
    "derive_seed",
    "draw_channel",
    "noise_realization",
    "noise_variance_from_snr",
    "read_capture",
    "synthesize_frame",
    "write_capture",
]
