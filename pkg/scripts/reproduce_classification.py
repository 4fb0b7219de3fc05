"""H^1 types over all admissible minimal subgroups, for each of the four base-field cases."""
import argparse
import sys
import time

from delpezzo_bm import classify, pipeline
from delpezzo_bm.cli import CASES


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", choices=sorted(CASES) + ["all"], default="all")
    args = ap.parse_args()
    ctx = pipeline.context()
    union = set()
    for name in sorted(CASES) if args.case == "all" else [args.case]:
        t = time.time()
        rows = classify.classify(*CASES[name], ctx.action)
        types = classify.type_set(rows)
        union |= set(types)
        print(f"case {name}: {len(rows)} conjugacy classes, {len(types)} types ({time.time() - t:.1f}s)")
        for divs in types:
            example = next(r for r in rows if r.divisors == divs)
            print(f"  {classify.format_type(divs):24s} e.g. <{example.words}> of order {example.order}")
    print(f"{len(union)} types in total")
    return 0


if __name__ == "__main__":
    sys.exit(main())
