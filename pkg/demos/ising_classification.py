"""Classify the Virasoro highest weights on the (p, q) = (4, 3) grid.

c = 1/2.  Prints every grid point with its flags and then the three
minimal-model weights 0, 1/16, 1/2.
"""

from admkit import virasoro

P, Q = 4, 3


def main():
    print(f"c = {virasoro.c_pq(P, Q)}")
    print(f"{'r':>2} {'s':>2} {'h':>7}  weak  c-adm  minimal")
    for row in virasoro.classify_grid(P, Q):
        print(f"{row['r']:>2} {row['s']:>2} {str(row['h']):>7}  "
              f"{row['weaklyAdmissible']!s:5} {row['cAdmissible']!s:6} {row['minimalModel']}")
    hs = [g.h for g in virasoro.minimal_models(P, Q)]
    print("minimal model weights:", ", ".join(str(h) for h in sorted(hs)))


if __name__ == "__main__":
    main()
