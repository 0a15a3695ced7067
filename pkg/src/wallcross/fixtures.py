"""Fixture loading.

All hand-entered reference data (Ext tables, fixed-point weight tables,
quiver presentations, wall-crossing class lists) lives in versioned JSON
files under ``wallcross/fixtures/``; a sidecar ``manifest.json`` records a
content note for every file.  Code never embeds these tables inline.

The environment variable ``WALLCROSS_FIXTURES`` overrides the directory.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

ENV_VAR = "WALLCROSS_FIXTURES"


def fixtures_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> Path:
    p = fixtures_dir() / name
    if not p.exists():
        raise FileNotFoundError(f"fixture {name!r} not found in {fixtures_dir()}")
    return p


def load_fixture(name: str):
    with open(fixture_path(name), "r", encoding="utf-8") as fh:
        return json.load(fh)


def manifest() -> dict:
    return load_fixture("manifest.json")
