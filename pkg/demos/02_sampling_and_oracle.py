"""Stress-testing the bounds: random class members and an independent oracle.

Two independent ways to probe sharpness:

1. Monte-Carlo over Schwarz words: random finite Blaschke-type inner maps
   omega generate class members g via g = z * exp(int (Phi(omega(t)) - 1)/t dt);
   every sampled |det| must stay below the closed-form bound.
2. A grid scan of the coefficient body {|w1| <= 1, |w2| <= 1 - |w1|^2}
   (the exact range of the first two Schwarz coefficients), which recovers
   the supremum without ever constructing a function.
"""

import toeplitz_lab as tl

PHI = tl.halfplane()


def main():
    bound = tl.t22_bound(tl.jet2(PHI))
    rep = tl.montecarlo_verify(PHI, 5000, seed=42, theorem="t22")
    print(f"t22 bound          : {bound}")
    print(f"MC max over 5000   : {rep.max_observed:.6f}  (violations: {len(rep.violations)})")
    print("margin histogram (distance below the bound):")
    for cell in rep.margin_histogram:
        print(f"  [{cell['lo']:7.3f}, {cell['hi']:7.3f})  {cell['count']:5d}")

    oracle = tl.oracle_sup(PHI, "t22", grid=200)
    print(f"\ngrid-200 oracle    : {oracle.value:.12f}  (argmax {oracle.argmax})")
    print(f"deficit vs bound   : {bound - oracle.value:.3e}")

    # a single hand-built Schwarz word and its determinant values
    w = tl.SchwarzWord(1j, (0.3,), 1)
    g = tl.g_from_schwarz(PHI, w, 12)
    j = tl.coeff_jet(g)
    print(f"\nsample word {w}:")
    print(f"  b2 = {j.b2:.6f}, b3 = {j.b3:.6f}")
    print(f"  |det T22| = {abs(tl.det_t22(j)):.6f}  <= {bound}")


if __name__ == "__main__":
    main()
