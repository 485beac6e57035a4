"""Render the tree of side pairs to DOT, and to SVG when graphviz ``dot`` is on PATH."""

import argparse
import shutil
import subprocess
from pathlib import Path

from elep.emit import tree_dot
from elep.tree import enumerate_tree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=3)
    ap.add_argument("--max-b", type=int, default=None)
    ap.add_argument("-o", "--output", default="tree.dot")
    args = ap.parse_args()
    path = Path(args.output)
    path.write_text(tree_dot(enumerate_tree(args.depth, args.max_b)), encoding="utf-8")
    print(f"wrote {path}")
    if shutil.which("dot"):
        svg = path.with_suffix(".svg")
        subprocess.run(["dot", "-Tsvg", str(path), "-o", str(svg)], check=True)
        print(f"wrote {svg}")


if __name__ == "__main__":
    main()
