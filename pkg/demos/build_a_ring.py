"""Building rings from structural data and inspecting them.

A presentation is a field GF(p^r), matrices A_1 .. A_t (the products of
radical generators, expressed in the chosen basis of the square of the
radical and its annihilator complement), a tail dimension lambda, and
Frobenius exponents.  The Ring object turns that into actual
multiplication on coefficient tuples.
"""

import numpy as np

from ringforge import (GF, Ring, RingSpec, check_axioms, ring_structure)


def named(ring, x):
    """Render a ring element as a combination of the basis 1, u_i, w_k, v_j."""
    F = ring.field
    names = (["1"] + [f"u{i+1}" for i in range(ring.s)]
             + [f"w{k+1}" for k in range(ring.t)]
             + [f"v{j+1}" for j in range(ring.lam)])
    terms = []
    for c, nm in zip(x, names):
        if c == 0:
            continue
        if nm == "1":
            terms.append(F.poly_str(c))
        else:
            terms.append(("" if c == 1 else f"({F.poly_str(c)})") + nm)
    return " + ".join(terms) or "0"


def main():
    # the smallest noncommutative example in scope: order 16 over GF(2),
    # two radical generators, one product matrix that is not symmetric
    F = GF(2)
    spec = RingSpec(F, s=2, t=1, lam=0,
                    matrices=np.array([[[0, 1], [0, 0]]]),
                    sigma=(0, 0), theta=(0,))
    R = Ring(spec)
    print(f"ring of order {R.order}: u1*u2 lands on w1, u2*u1 is zero")
    u1, u2 = (0, 1, 0, 0), (0, 0, 1, 0)   # coefficients on (1, u1, u2, w1)
    print(f"  u1*u2 = {named(R, R.mul(u1, u2))}")
    print(f"  u2*u1 = {named(R, R.mul(u2, u1))}")
    rep = ring_structure(R)
    print(f"  structure: invariants {rep.invariants},"
          f" radical dims {rep.radical_dims},"
          f" commutative {rep.commutative}, field central {rep.f_central}")
    ax = check_axioms(R, mode="exhaustive")
    print(f"  axioms ({ax.mode}): ok={ax.ok}, laws checked: {sorted(ax.checked)}")
    print()

    # same shape with the symmetric matrix instead: commutative
    spec_c = RingSpec(F, s=2, t=1, lam=0,
                      matrices=np.array([[[0, 1], [1, 0]]]),
                      sigma=(0, 0), theta=(0,))
    rep_c = ring_structure(Ring(spec_c))
    print(f"symmetric structural matrix: commutative {rep_c.commutative}")
    print()

    # over GF(4) a nontrivial Frobenius exponent moves the field out of
    # the center even though s = t = 1
    F4 = GF(2, 2)
    tw = RingSpec(F4, s=1, t=1, lam=0,
                  matrices=np.array([[[1]]]), sigma=(1,), theta=(0,))
    Rt = Ring(tw)
    rep_t = ring_structure(Rt)
    print(f"twisted order-{Rt.order} ring over GF(4):"
          f" field central {rep_t.f_central},"
          f" commutative {rep_t.commutative}")
    x, y = (2, 1, 0), (0, 2, 0)   # a + u1 and (a)u1 on the basis (1, u1, w1)
    print(f"  [{named(Rt, x)}] * [{named(Rt, y)}] = {named(Rt, Rt.mul(x, y))}")
    print(f"  [{named(Rt, y)}] * [{named(Rt, x)}] = {named(Rt, Rt.mul(y, x))}")


if __name__ == "__main__":
    main()
