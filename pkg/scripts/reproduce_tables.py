"""Write the four family tables as CSV files into a directory (default: ./tables)."""

import argparse
from pathlib import Path

from elep.emit import family_csv
from elep.families import errata_for, horizontal_family, vertical_side2_family, vertical_side4_family

TABLES = {
    "horizontal.csv": [horizontal_family(n) for n in range(9)],
    "vertical_side2.csv": [vertical_side2_family(n) for n in range(1, 10)],
    "vertical_side4_branch1.csv": [vertical_side4_family(1, n) for n in range(1, 7)],
    "vertical_side4_branch2.csv": [vertical_side4_family(2, n) for n in range(1, 7)],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="tables")
    out = Path(ap.parse_args().outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, members in TABLES.items():
        (out / name).write_text(family_csv(members), encoding="utf-8")
        print(f"wrote {out / name} ({len(members)} rows)")
        for m in members:
            for col, printed, built in errata_for(m.family_tag, m.index):
                print(f"  n={m.index} {col}: construction gives {built}, commonly printed {printed}")


if __name__ == "__main__":
    main()
