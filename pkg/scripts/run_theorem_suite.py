"""Exhaustively check every registered theorem over small orders and print a summary table."""
import argparse

from hambypass.cli import parse_orders
from hambypass.harness import THEOREMS, run_theorem_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", default="3..5", help="orders, e.g. 3..5")
    ap.add_argument("--theorems", default=",".join(sorted(THEOREMS)))
    args = ap.parse_args()
    orders = parse_orders(args.n)
    print(f"{'theorem':<8} {'instances':>10} {'hits':>9} {'exceptions':>10} {'violations':>10} {'secs':>7}")
    for name in args.theorems.split(","):
        v = run_theorem_suite(name, [n for n in orders if n >= THEOREMS[name].min_order])
        print(f"{name:<8} {v.instances_checked:>10} {v.hypothesis_hits:>9} {v.exceptions:>10} "
              f"{len(v.violations):>10} {v.elapsed:>7.1f}")


if __name__ == "__main__":
    main()
