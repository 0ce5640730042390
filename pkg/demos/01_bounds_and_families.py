"""Closed-form determinant bounds across the built-in generator families.

For a generator Phi with 2-jet (d1, d2) and e = d2/(2 d1), the sharp bounds

    |det T_{2,2}| <= (d1^2/4)(e + d1)^2 + d1^2
    |det T_{3,1}| <= 1 + 2 d1^2 + (d1^2/4)(3 d1 - e)(e + d1)

hold whenever the corresponding admissibility condition on (d1, d2) is met.
This script prints the jets, conditions, and bounds for each family and shows
the classical starlike case landing exactly on 13 and 24.
"""

import toeplitz_lab as tl

FAMILIES = [
    ("half-plane (starlike)", tl.halfplane()),
    ("order 0.5", tl.alpha(0.5)),
    ("Janowski(0.8, -0.6)", tl.janowski(0.8, -0.6)),
    ("strongly starlike, gamma=0.5", tl.power(0.5)),
    ("strongly starlike, gamma=0.25", tl.power(0.25)),
]


def main():
    header = f"{'family':32s} {'d1':>6s} {'d2':>6s} {'t22?':>5s} {'t31?':>5s} {'t22':>10s} {'t31':>10s}"
    print(header)
    print("-" * len(header))
    for label, phi in FAMILIES:
        jet = tl.jet2(phi)
        c22, c31 = tl.condition_t22(phi), tl.condition_t31(phi)
        t22 = f"{tl.t22_bound(jet):10.6f}" if c22 else "      --  "
        t31 = f"{tl.t31_bound(jet):10.6f}" if c31 else "      --  "
        print(f"{label:32s} {jet.d1:6.3f} {jet.d2:6.3f} {str(c22):>5s} {str(c31):>5s} {t22} {t31}")

    print()
    jet = tl.jet2(tl.halfplane())
    print("starlike check: t22 =", tl.t22_bound(jet), " t31 =", tl.t31_bound(jet))
    print("Fekete-Szego at lambda=1:", tl.fekete_szego_bound(jet, 1.0))

    # the full report object, as the CLI would serialize it
    rep = tl.report(tl.power(0.25), lam_list=[0.0, 0.5, 1.0])
    print("\nreport for gamma=0.25 (conditions fail -> bounds withheld):")
    print(rep.to_json_dict())


if __name__ == "__main__":
    main()
