"""Reduce the sample terms under every strategy and print a table.

    python scripts/run_samples.py [--trace] [--better]
"""
import argparse

from gtrans.lam import STRATEGY_NAMES, STRATEGY_TITLES, better_show, reduce, reduce_with_trace, show
from gtrans.lam.samples import SAMPLES


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trace", action="store_true", help="also print every intermediate term")
    ap.add_argument("--better", action="store_true", help="print variables bare")
    args = ap.parse_args()
    render = better_show if args.better else show
    for name in STRATEGY_NAMES:
        print(f"== {STRATEGY_TITLES[name]} ({name})")
        for t in SAMPLES:
            if args.trace:
                result, steps = reduce_with_trace(name, t)
                print(f"  {render(t)}")
                for s in steps:
                    print(f"    => {render(s)}")
            else:
                result = reduce(name, t)
                print(f"  {render(t)}  ~>  {render(result)}")


if __name__ == "__main__":
    main()
