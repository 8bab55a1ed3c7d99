#!/usr/bin/env python3
"""Regenerate the canonical example files under data/.

Every file is emitted through the canonical serializer, so re-running this
script after a library change shows any format drift as a git diff.
"""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from spreadhom import PrimeField, spread_from_antichains, spread_module
from spreadhom.files import dump_family, dump_module, dump_poset
from spreadhom.gallery import atilde5_family, grid23_diagram_modules, path_poset, equal_rank_pair

DATA = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def write(name, text):
    path = os.path.join(DATA, name)
    with open(path, "w") as fh:
        fh.write(text)
    print(f"wrote {os.path.relpath(path)}")


def main():
    os.makedirs(DATA, exist_ok=True)
    field = PrimeField()

    # the 2x2 grid and the equal-rank pair on it
    p22, m, mprime = equal_rank_pair(field)
    write("grid2x2.yaml", dump_poset(p22))
    write("equal_rank_m.yaml", dump_module(m, "grid2x2.yaml"))
    write("equal_rank_mprime.yaml", dump_module(mprime, "grid2x2.yaml"))

    # the 2x3 grid batch: diagram collision, Hom separation
    g = grid23_diagram_modules(field)
    write("grid2x3.yaml", dump_poset(g["poset"]))
    write("diagram_m.yaml", dump_module(g["m"], "grid2x3.yaml"))
    write("diagram_x.yaml", dump_module(g["x"], "grid2x3.yaml"))
    write("diagram_n.yaml", dump_module(g["n"], "grid2x3.yaml"))
    write("diagram_l.yaml", dump_module(g["l"], "grid2x3.yaml"))

    # the six-element crown-like poset whose nine-member family has a Hom cycle
    pa, fam = atilde5_family()
    write("atilde5.yaml", dump_poset(pa))
    write("atilde5_family.yaml", dump_family(fam.members))
    m16 = spread_module(spread_from_antichains(pa, ["1"], ["6"]), field)
    write("m16.yaml", dump_module(m16, "atilde5.yaml"))

    # a W-shaped zigzag with a small barcode example
    pw = path_poset("udud")
    write("zigzag_w.yaml", dump_poset(pw))
    from spreadhom import direct_sum, interval_module

    zm = direct_sum([
        interval_module(pw, field, 0, 1),
        interval_module(pw, field, 2, 1),
        interval_module(pw, field, 2, 3),
    ])
    write("zigzag_module.yaml", dump_module(zm, "zigzag_w.yaml"))


if __name__ == "__main__":
    main()
