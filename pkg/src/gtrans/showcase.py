"""The declarations behind the checked-in generated modules in ``gtrans.generated``."""
from __future__ import annotations

from pathlib import Path

from .adt import parse_decls
from .codegen import GenUnit, generate_module

SHOWCASE_DIR = Path(__file__).parent / "generated"
SHOWCASE_FILES = ("lam.gt", "t.gt", "expr.gt")
SHOWCASE_PLUGINS = ("show", "foldl", "map")


def generate_showcase() -> list[GenUnit]:
    units: list[GenUnit] = []
    for name in SHOWCASE_FILES:
        source = (SHOWCASE_DIR / name).read_text(encoding="utf-8")
        units += generate_module(parse_decls(source), SHOWCASE_PLUGINS)
    return units
