"""Determinant-type inequalities on the unit ball and unit polydisc.

A 1-D class member g lifts to a map G(z) = z * h(z_1) on the polydisc (or
along a direction u on the ball) via h = g/w.  The homogeneous expansion
terms q2, q3 of G satisfy radius-weighted versions of the 1-D inequalities.
At the extremal lift and z = (r, 0, ..., 0) both polydisc inequalities are
exact equalities: 9 r^6 + 4 r^4 and 15 r^6 + 8 r^4 + 1 for the half-plane
generator.
"""

import numpy as np

import toeplitz_lab as tl
from toeplitz_lab import highdim as hd

PHI = tl.halfplane()


def main():
    h = hd.extremal_lift(PHI)
    print("polydisc, extremal lift, z = (r, 0, 0):")
    for r in (0.3, 0.6, 0.9):
        z = hd.NormedPoint((r, 0j, 0j), "sup")
        rep = tl.verify_polydisc(PHI, h, z)
        print(f"  r={r}:  lhs22={rep.lhs_t22:.9f} (= 9r^6+4r^4 = {9*r**6+4*r**4:.9f})"
              f"  lhs31={rep.lhs_t31:.9f} (= 15r^6+8r^4+1 = {15*r**6+8*r**4+1:.9f})")

    print("\nball, extremal lift along u = e1, Euclidean norm:")
    u = np.array([1.0, 0j, 0j])
    for r in (0.3, 0.6, 0.9):
        z = hd.NormedPoint((r, 0j, 0j), "euclid")
        rep = tl.verify_ball(PHI, h, z, direction=u)
        print(f"  r={r}:  margin22={rep.margin_t22:+.2e}  margin31={rep.margin_t31:+.2e}")

    print("\nrandom lifted class members at random interior points (margins >= 0):")
    rng = np.random.default_rng(11)
    worst = np.inf
    for _ in range(50):
        w = tl.sample_words(1, int(rng.integers(0, 2**62)))[0]
        hs = hd.lift_from_class_member(tl.g_from_schwarz(PHI, w, 10))
        z = hd.random_interior_point(rng, 3, "sup")
        rep = tl.verify_polydisc(PHI, hs, z)
        worst = min(worst, rep.margin_t22, rep.margin_t31)
    print(f"  worst margin over 50 draws: {worst:+.3e}")


if __name__ == "__main__":
    main()
