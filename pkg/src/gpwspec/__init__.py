"""Pseudo weakly prime spectra of finite graded modules and their Zariski topology."""

from .catalog import catalog_instance, catalog_names
from .instances import build_instance, load_instance, parse_instance
from .spectrum import pseudo_spectrum
from .theorems import verify
from .topology import build_zariski

__version__ = "0.1.0"

__all__ = [
    "build_instance",
    "build_zariski",
    "catalog_instance",
    "catalog_names",
    "load_instance",
    "parse_instance",
    "pseudo_spectrum",
    "verify",
]
