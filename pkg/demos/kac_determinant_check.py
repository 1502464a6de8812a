"""Compute Shapovalov determinants from the PBW basis and compare them with
the closed product formulas, grade by grade."""

import sys
import time

from admkit import detformulas
from admkit.shapovalov import AffineSl2Engine, NeveuSchwarzEngine, VirasoroEngine


def run(label, engine, grades, compare):
    for g in grades:
        t = time.perf_counter()
        det = engine.shapovalov_det(g)
        res = compare(det, g)
        print(f"{label:8} grade {engine.format_grade(g)!s:>8}  "
              f"scalar {res.scalar!s:>12}  {'ok' if res.ok else 'MISMATCH'}  "
              f"{time.perf_counter() - t:.2f}s")
        if not res.ok:
            sys.exit(1)


def main():
    vir = VirasoroEngine()
    run("vir", vir, [(n,) for n in range(1, 6)], lambda d, g: detformulas.compare_vir(d, g[0]))
    ns = NeveuSchwarzEngine()
    run("ns", ns, ns.grades_upto(3), lambda d, g: detformulas.compare_ns(d, ns.format_grade(g)))
    aff = AffineSl2Engine(max_depth=4)
    run("aff-sl2", aff, aff.grades_upto(2), detformulas.compare_affine_sl2)


if __name__ == "__main__":
    main()
