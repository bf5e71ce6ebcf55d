#!/usr/bin/env python3
"""Print the height-2 orbit catalogue for every type up to rank 8 and
compare it with the embedded label table."""

import sys
import time

from nilc.height2_catalogue import catalogue, diagram_string
from nilc.orbit_labels import rows
from nilc.verification import TABLE_TYPES
from nilc.root_system import build


def main() -> int:
    t0 = time.perf_counter()
    mismatches = 0
    for ct in TABLE_TYPES:
        cat = catalogue(build(ct))
        want = sorted((r[1], r[4]) for r in rows(ct))
        got = sorted((o.diagram, o.rank_r) for o in cat)
        ok = got == want
        mismatches += not ok
        cells = ", ".join(f"{diagram_string(o.diagram)} r={o.rank_r}" for o in cat)
        print(f"{'ok ' if ok else 'BAD'} {str(ct):<4} {cells}")
    print(f"{len(TABLE_TYPES) - mismatches}/{len(TABLE_TYPES)} types match ({time.perf_counter() - t0:.1f}s)")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
