# physics/experiments/__init__.py

from physics.experiments.reports import (  # noqa: F401
    coupling_from_flux,
    dipole_report,
    experiment_report,
    laser_angular_frequency,
    photon_flux,
    quadrupole_report,
    raman_report,
    scaled_config,
    single_mode_validity,
)
