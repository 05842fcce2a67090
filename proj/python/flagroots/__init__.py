"""Exact root data, Chevalley brackets and structural equigeodesic families."""
import json
import os
from pathlib import Path

from ._flagroots import (
    InputError,
    cartan,
    enumerate_maximal_families,
    highest_root,
    is_equigeodesic_all_metrics,
    is_structural_family,
    modules,
    positive_roots,
    structure_constant,
)
from . import _flagroots

__all__ = [
    "InputError", "cartan", "enumerate_maximal_families", "highest_root", "is_equigeodesic_all_metrics",
    "is_structural_family", "modules", "positive_roots", "structure_constant", "report", "run",
]


def _fixtures(explicit):
    if explicit is not None:
        return str(explicit)
    if os.environ.get("FLAGROOTS_FIXTURES"):
        return None
    bundled = Path(__file__).with_name("fixtures")
    return str(bundled) if bundled.is_dir() else None


def run(command, space, *args, format="text", check=False, verify_fixtures=False, min_modules=2, cap=None, seed=0,
        fixtures=None):
    """Same as the command line tool; returns (status, rendered report)."""
    return _flagroots.run(command, space, list(args), format, check, verify_fixtures, min_modules, cap, seed,
                          _fixtures(fixtures))


def report(command, space, *args, **kw):
    """Run a command and return (status, decoded JSON report)."""
    kw["format"] = "json"
    status, text = run(command, space, *args, **kw)
    return status, json.loads(text)
