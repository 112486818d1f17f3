"""Print the verdict matrix of every corpus protocol next to the published one.

    python scripts/reproduce_tables.py [--witnesses]

Exits non-zero if any cell differs.
"""
import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from enact.cli import read_protocol  # noqa: E402
from enact.comm import CommModel  # noqa: E402
from enact.enactability import matrix  # noqa: E402
from enact.moi import MOI_COLUMNS  # noqa: E402
from published import TABLES, rows  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--witnesses", action="store_true", help="show one witness per non-strong cell")
    args = ap.parse_args()

    start = time.perf_counter()
    mismatches = 0
    for name in sorted(TABLES):
        pf = read_protocol(f"corpus/{name}.aip")
        grid = matrix(pf.body)
        want = rows(name)
        print(f"protocol {name}")
        print(("CM   " + "".join(f"{m.value:<12}" for m in MOI_COLUMNS)).rstrip())
        for r, cm in enumerate(CommModel):
            cells = []
            for c, moi in enumerate(MOI_COLUMNS):
                got = grid[cm, moi].glyph
                flag = "" if got == want[r][c] else "!"
                mismatches += bool(flag)
                cells.append(f"{got}/{want[r][c]}{flag}".ljust(12))
            print(f"{cm.name:<5}" + "".join(cells).rstrip())
            if args.witnesses:
                for moi in MOI_COLUMNS:
                    ws = grid[cm, moi].witnesses
                    if ws:
                        trace = " ".join(str(e) for e in ws[0].trace) or "<>"
                        print(f"      {moi.value} {ws[0].side.value}: {trace}")
        print()
    elapsed = time.perf_counter() - start
    print(f"computed/published, {mismatches} mismatching cells, {elapsed:.2f}s")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
