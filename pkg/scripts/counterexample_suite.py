"""Confirm that every named extremal digraph lacks a Hamiltonian bypass, with timing."""
import time

from hambypass import find_ham_bypass
from hambypass.families import FamilySpec, d0_b_choices, generate


def suite():
    yield FamilySpec("T5")
    yield FamilySpec("C3")
    yield FamilySpec("D7")
    for n in range(4, 8):
        for k in range(1, n - 1):
            yield FamilySpec("D1", n=n, k=k)
    for n in (5, 7):
        for b in d0_b_choices(n):
            yield FamilySpec("D0", n=n, b_arcs=b)
    for variant in ("chain", "wrap"):
        for n in range(5, 10):
            yield FamilySpec("DnChords", n=n, variant=variant)


def main():
    bad = 0
    for spec in suite():
        start = time.perf_counter()
        cert = find_ham_bypass(generate(spec))
        status = "absent" if cert is None else cert.to_text()
        bad += cert is not None
        fields = {k: v for k, v in vars(spec).items() if v not in (None, (), "chain") and k != "family"}
        print(f"{spec.family:<9} {fields!s:<40} {status} ({time.perf_counter() - start:.3f}s)")
    print(f"{bad} digraphs with a bypass")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
