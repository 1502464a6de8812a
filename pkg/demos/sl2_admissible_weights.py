"""List the admissible weights of affine sl2 at k = p/q - 2 and re-derive
them through the general root-system classifier."""

import argparse

from admkit import affine_adm


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--q", type=int, default=2)
    args = ap.parse_args(argv)

    weights = affine_adm.sl2_kadm_set(args.p, args.q)
    kw = affine_adm.sl2_kw_set(args.p, args.q)
    print(f"k = {weights[0].k}: {len(weights)} admissible, {len(kw)} KW-admissible")
    for w in weights:
        g1, g2 = w.gamma
        print(f"  r={w.r} s={w.s}  (lam, alpha) = {w.finite_coord!s:>6}  "
              f"simple coroots {g1}, {g2}  {'KW' if w.is_kw else ''}")

    check = affine_adm.cross_validate_sl2(args.p, args.q)
    print(f"cross-check against classify(): {check.checked} weights, "
          f"{'ok' if check.ok else check.mismatches}")


if __name__ == "__main__":
    main()
