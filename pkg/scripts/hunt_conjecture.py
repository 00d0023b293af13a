"""Counterexample hunts: in-degree-two variant of the bypass theorem, and the thm13/thm14 problem.

Exhaustive at orders up to 5, then seeded sampling above.  Bypass-free
instances are deduplicated up to isomorphism and written out in the text
format, one block per digraph.
"""
import argparse

from hambypass import from_text, recognize_exception
from hambypass.harness import CONJECTURE_HYPOTHESIS, PROBLEM_HYPOTHESES, hunt_counterexample


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--which", choices=("conjecture", "thm13", "thm14"), default="conjecture")
    ap.add_argument("--max-exhaustive", type=int, default=5)
    ap.add_argument("--sample-orders", default="6,7")
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--arc-probability", type=float, default=0.6)
    args = ap.parse_args()
    hyp = CONJECTURE_HYPOTHESIS if args.which == "conjecture" else PROBLEM_HYPOTHESES[args.which]

    verdicts = [hunt_counterexample(hyp, "bypass", range(4, args.max_exhaustive + 1),
                                    dedupe_iso=True, claim=args.which)]
    orders = [int(n) for n in args.sample_orders.split(",") if n]
    if orders:
        verdicts.append(hunt_counterexample(hyp, "bypass", orders, "sample", count=args.count, seed=args.seed,
                                            arc_probability=args.arc_probability, dedupe_iso=True,
                                            claim=args.which))
    for v in verdicts:
        print(f"# {v.mode} orders={v.orders} instances={v.instances_checked} hits={v.hypothesis_hits} "
              f"bypass-free={len(v.violations)} ({v.elapsed:.1f}s)")
        for text in v.violations:
            D = from_text(text)
            print(f"# recognized as: {recognize_exception(D) or 'unnamed'}")
            print(text)


if __name__ == "__main__":
    main()
