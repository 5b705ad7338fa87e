"""The shipped fixtures: groups, 2-categories and actions under stable names.

The files in ``twocat/fixtures`` are generated from these constructors by
``python -m twocat.standard``; the test suite checks that both agree.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .core2 import (
    Fin2Cat,
    FinGroup,
    arrow_2cat,
    cyclic_group,
    delooping,
    delooping_with_2cells,
    fixture_groups,
    trivial_group,
    unit_2cat,
)
from .formats import EXTENSIONS, serialize
from .gaction import GroupAction2, cocycle_action, inversion_action, trivial_action

FIXTURE_DIR = Path(__file__).with_name("fixtures")


def standard_groups() -> dict[str, FinGroup]:
    return {name.lower(): G for name, G in fixture_groups().items()}


def standard_2categories() -> dict[str, Fin2Cat]:
    out = {f"sigma_{name}": delooping(G) for name, G in standard_groups().items()}
    out["unit"] = unit_2cat()
    out["arrow"] = arrow_2cat()
    out["sigma_c1_c2"] = delooping_with_2cells(trivial_group(), cyclic_group(2))
    return out


def _cocycle_value(g, h, f, A):
    # the nontrivial normalized 3-cocycle of C2 with values in C2
    return 1 if (g, h, f) == (1, 1, 1) else 0


def standard_actions() -> dict[str, tuple[str, str, GroupAction2]]:
    """``name -> (group name, base name, action)``."""
    B = standard_2categories()
    C2, C3 = cyclic_group(2), cyclic_group(3)
    return {
        "trivial_c2": ("c2", "sigma_c2", trivial_action(C2, B["sigma_c2"], "trivial_c2")),
        "trivial_c3": ("c3", "sigma_c2", trivial_action(C3, B["sigma_c2"], "trivial_c3")),
        "inv_act": ("c2", "sigma_c4", inversion_action(C2, cyclic_group(4), "inv_act")),
        "unit_trivial_c2": ("c2", "unit", trivial_action(C2, B["unit"], "unit_trivial_c2")),
        "arrow_trivial_c2": ("c2", "arrow", trivial_action(C2, B["arrow"], "arrow_trivial_c2")),
        "cocycle_c2": ("c2", "sigma_c1_c2", cocycle_action(C2, B["sigma_c1_c2"], _cocycle_value, "cocycle_c2")),
    }


def write_fixtures(directory: Path = FIXTURE_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, G in standard_groups().items():
        written.append(directory / f"{name}{EXTENSIONS['group']}")
        written[-1].write_text(serialize(G, name), encoding="utf-8")
    for name, B in standard_2categories().items():
        written.append(directory / f"{name}{EXTENSIONS['2category']}")
        written[-1].write_text(serialize(B, name), encoding="utf-8")
    for name, (gname, bname, action) in standard_actions().items():
        written.append(directory / f"{name}{EXTENSIONS['action']}")
        written[-1].write_text(serialize(action, name, group_name=gname, base_name=bname), encoding="utf-8")
    return written


if __name__ == "__main__":
    for path in write_fixtures(Path(sys.argv[1]) if len(sys.argv) > 1 else FIXTURE_DIR):
        print(path)
