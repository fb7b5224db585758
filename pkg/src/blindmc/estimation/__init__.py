from blindmc.estimation.jade import cumulant_matrices
from blindmc.estimation.jade import jade_separate
from blindmc.estimation.jade import joint_diagonalize
from blindmc.estimation.phase import estimate_phase
from blindmc.estimation.phase import estimate_phases
from blindmc.estimation.phase import phase_correct
from blindmc.estimation.whitening import sample_covariance
from blindmc.estimation.whitening import whiten


__all__ = [
    "cumulant_matrices",
    "estimate_phase",
    "estimate_phases",
    "jade_separate",
    "joint_diagonalize",
    "phase_correct",
    "sample_covariance",
    "whiten",
]
