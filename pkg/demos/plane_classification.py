"""Classifying t-dimensional spaces of s x s matrices.

The structural data of a ring with radical cube zero is, up to the
bookkeeping, a t-dimensional subspace of s x s matrices over GF(q),
acted on by simultaneous congruence, basis recombination inside the
space, and (over proper extensions) the Frobenius.  This demo walks
the smallest interesting cell: planes (t = 2) of 2 x 2 matrices.
"""

import numpy as np

from ringforge import (GF, classify_subspaces, gaussian_binomial, orbit_of,
                       subspace_key, tuple_compatible)


def main():
    F = GF(2)
    rep = classify_subspaces(F, s=2, t=2)
    total = gaussian_binomial(4, 2, 2)
    print(f"planes of 2 x 2 matrices over GF(2): {rep.class_count} classes,"
          f" {rep.total_objects} planes (Gaussian binomial check: {total})")
    print()
    print("rep basis pair                                flags")
    for c in rep.classes:
        mats = [M.tolist() for M in c.rep_matrices()]
        flags = []
        if c.contains_compatible:
            flags.append("contains a ring-compatible basis tuple")
        if c.commutative_capable:
            flags.append("all-symmetric basis, commutative candidate")
        print(f"  {mats!s:42}  {'; '.join(flags) or '-'}")
    print()

    # compatibility of one basis tuple: independent, and no index is dead
    # (row i and column i both zero would strand a radical generator)
    good = np.array([[[1, 0], [0, 0]], [[0, 0], [0, 1]]])
    stranded = np.array([[[1, 0], [0, 0]]])
    dependent = np.array([[[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    print("diag pair:      ", tuple_compatible(F, good))
    print("corner matrix:  ", tuple_compatible(F, stranded))
    print("repeated matrix:", tuple_compatible(F, dependent))
    print()

    # one orbit under the microscope
    key = subspace_key(F, good)
    res = orbit_of(F, key, include_members=True)
    print(f"orbit of the diagonal plane: size {res.orbit_size}")
    print(f"canonical rep rows: {res.canonical_rep.rows}")
    print(f"member keys: {sorted(res.members)[:8]} ...")
    print()

    # the same cell over a proper extension; Frobenius glues orbits
    F4 = GF(2, 2)
    with_f = classify_subspaces(F4, s=2, t=1)
    without = classify_subspaces(F4, s=2, t=1, use_frobenius=False)
    print(f"lines of 2 x 2 matrices over GF(4): {with_f.class_count} classes"
          f" with Frobenius, {without.class_count} without")


if __name__ == "__main__":
    main()
