"""The built-in group and cocycle catalog, shipped as text data files.

Groups: cyclic up to order 16, small direct products (including the square
carriers of the standard non-degenerate cocycles), dihedral groups up to
order 16, the symmetric groups on 3 and 4 letters, and the quaternion
group.  Cocycles: the standard non-degenerate class on B x B for every
abelian B of order at most 6.

Data files live in the package's ``catalog/`` directory; the environment
variable ``GQ_CATALOG_DIR`` overrides the location.  Loading always
re-validates against the generating constructors.
"""

from __future__ import annotations

import os
from pathlib import Path

from .cocycles import CocycleTable, format_cocycle, parse_cocycle, standard_nondegenerate
from .errors import ValidationError
from .groups import FiniteGroup, format_group_table, make_group, parse_group_table

GROUP_SPECS = (
    [f"C{n}" for n in range(1, 17)]
    + ["C2xC2", "C2xC4", "C2xC6", "C2xC2xC2", "C3xC3", "C4xC4", "C5xC5", "C6xC6", "C2xC2xC2xC2"]
    + [f"D{n}" for n in range(3, 9)]
    + ["S3", "S4", "Q8"]
)

# invariant factors of B for the standard non-degenerate class on B x B,
# keyed by the carrier group's catalog name
NONDEGENERATE_CARRIERS = {
    "C2xC2": (2,),
    "C3xC3": (3,),
    "C4xC4": (4,),
    "C5xC5": (5,),
    "C6xC6": (6,),
    "C2xC2xC2xC2": (2, 2),
}


def catalog_dir() -> Path:
    env = os.environ.get("GQ_CATALOG_DIR")
    if env:
        return Path(env)
    return Path(__file__).parent / "catalog"


def build_group(name: str) -> FiniteGroup:
    if name not in GROUP_SPECS:
        raise ValidationError(f"{name!r} is not a catalog group")
    return make_group(name)


def build_cocycle(name: str) -> tuple[str, CocycleTable]:
    """A catalog cocycle plus the name of its carrier group."""
    if not name.startswith("nd_") or name[3:] not in NONDEGENERATE_CARRIERS:
        raise ValidationError(f"{name!r} is not a catalog cocycle")
    carrier = name[3:]
    return carrier, standard_nondegenerate(NONDEGENERATE_CARRIERS[carrier])


def cocycle_names() -> list[str]:
    return [f"nd_{carrier}" for carrier in NONDEGENERATE_CARRIERS]


def write_catalog(target: Path | None = None) -> Path:
    """Write every catalog group and cocycle as text files; returns the dir."""
    target = Path(target) if target is not None else catalog_dir()
    target.mkdir(parents=True, exist_ok=True)
    for name in GROUP_SPECS:
        (target / f"group_{name}.txt").write_text(format_group_table(build_group(name)))
    for name in cocycle_names():
        carrier, table = build_cocycle(name)
        (target / f"cocycle_{name}.txt").write_text(format_cocycle(table))
    return target


def load_group(name: str) -> FiniteGroup:
    """Load a catalog group from its data file, falling back to construction."""
    path = catalog_dir() / f"group_{name}.txt"
    if path.exists():
        return parse_group_table(path.read_text())
    return build_group(name)


def load_cocycle(name: str) -> tuple[str, CocycleTable]:
    carrier, built = build_cocycle(name)
    path = catalog_dir() / f"cocycle_{name}.txt"
    if path.exists():
        loaded = parse_cocycle(path.read_text(), load_group(carrier))
        return carrier, loaded
    return carrier, built


def resolve_group(token: str) -> FiniteGroup:
    """A group from a file path or a catalog/constructor descriptor."""
    p = Path(token)
    if p.exists() and p.is_file():
        return parse_group_table(p.read_text())
    return make_group(token)


def resolve_cocycle(token: str, group: FiniteGroup) -> CocycleTable:
    """A cocycle from a file path, the word 'trivial', or a catalog name."""
    if token == "trivial":
        return CocycleTable.trivial(group)
    p = Path(token)
    if p.exists() and p.is_file():
        return parse_cocycle(p.read_text(), group)
    if token.startswith("nd_"):
        carrier, table = build_cocycle(token)
        if table.group != group:
            raise ValidationError(f"catalog cocycle {token} lives on {carrier}, not this group")
        return table
    raise ValidationError(f"cannot resolve cocycle {token!r}")
