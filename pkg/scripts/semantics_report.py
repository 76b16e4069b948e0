#!/usr/bin/env python3
"""Print side-by-side semantics tables for one or more program files.

Usage: python3 scripts/semantics_report.py [file.blp ...]

Without arguments, reports on the bundled example programs.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from blp import compare_semantics, ground, parse_program  # noqa: E402

BUNDLED = sorted(
    (pathlib.Path(__file__).resolve().parents[1] / "tests" / "data").glob("*.blp")
)


def report(path: pathlib.Path) -> None:
    print(f"== {path.name} ==")
    gp = ground(parse_program(path.read_text()))
    if not len(gp.base):
        print("  (empty base)\n")
        return
    result = compare_semantics(gp)
    names = ["F", "T", "U", "I", "consensus"]
    width = max(4, max(len(str(a)) for a in gp.base.atoms))
    print("  " + "atom".ljust(width), *(n.ljust(9) for n in names))
    for atom in gp.base.atoms:
        row = [str(result.valuations[n][atom]).ljust(9) for n in names]
        print("  " + str(atom).ljust(width), *row)
    cons = result.consensus
    print(
        f"  consensus: fixed-under-F={cons.fixed_under_pessimistic}"
        f" fixed-under-T={cons.fixed_under_optimistic}"
        f" rule-bound={cons.rule_bound_holds}"
    )
    print()


def main() -> int:
    paths = [pathlib.Path(arg) for arg in sys.argv[1:]] or BUNDLED
    for path in paths:
        report(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
