"""A walk through the finite field layer.

Elements of GF(p^r) are integer codes 0 .. p^r - 1, read as base-p digit
strings of the coefficient vector (constant digit first).  Everything
else in the package sits on top of this encoding, so it is worth seeing
once in isolation.
"""

import numpy as np

from ringforge import GF


def main():
    F = GF(3, 2)
    print(f"field: {F!r}  (order {F.q}, modulus {F.modulus})")
    print()

    # codes <-> polynomials
    print("code  digits  polynomial")
    for a in range(F.q):
        print(f"{a:4d}  {F.element_digits(a)}  {F.poly_str(a)}")
    print()

    # arithmetic works on scalars and numpy arrays alike
    a, b = 5, 7
    print(f"{F.poly_str(a)} + {F.poly_str(b)} = {F.poly_str(F.add(a, b))}")
    print(f"{F.poly_str(a)} * {F.poly_str(b)} = {F.poly_str(F.mul(a, b))}")
    print(f"inverse of {F.poly_str(a)} is {F.poly_str(F.inv(a))}")
    v = np.arange(1, F.q)
    print("v * v^-1 =", F.mul(v, np.array([F.inv(int(x)) for x in v])))
    print()

    # the unit group is cyclic; the stored generator is the least one
    g = F.multiplicative_generator()
    powers = [F.pow(g, k) for k in range(F.q - 1)]
    print(f"generator {F.poly_str(g)} sweeps the units: {powers}")
    print()

    # frobenius x -> x^p generates Gal(GF(p^r) / GF(p))
    print("a     a^3 (frobenius)")
    for a in range(F.q):
        print(f"{F.poly_str(a):6}  {F.poly_str(F.frobenius(a))}")
    print()
    fixed = [a for a in range(F.q) if F.frobenius(a) == a]
    print(f"fixed points of frobenius: {fixed}  (the prime subfield)")
    print()

    # quadratic structure, used when normalizing symmetric forms
    print(f"squares: {sorted(F.squares())}")
    print(f"least nonsquare: {F.poly_str(F.least_nonsquare())}")


if __name__ == "__main__":
    main()
