"""Congruence orbits of bilinear forms.

A single s x s matrix A over GF(q), taken modulo A -> C^T A C for
invertible C, is the s = t = 1 slice of the structural data: one
multiplication matrix, rescaled by base change on the radical.  The
orbit counts follow q + 4 for s = 2, and the symmetric orbits recover
the classical quadratic form story.
"""

from ringforge import GF, classify_congruence, congruence_twist, orbit_of


def show(report, F):
    print(f"  {report.class_count} classes, {report.total_objects} matrices,"
          f" strategy {report.strategy}")
    for c in report.classes:
        M = c.rep_matrices()[0]
        sym = "symmetric" if (M == M.T).all() else "         "
        print(f"  rep {M.tolist()}  orbit {c.orbit_size:3d}  {sym}")


def main():
    for p in (2, 3, 5):
        F = GF(p)
        print(f"2 x 2 forms over GF({p}):  expect {p} + 4 classes")
        show(classify_congruence(F, 2), F)
        print()

    # symmetric forms only, congruence restricted to the symmetric cone
    F = GF(3)
    print("symmetric 2 x 2 forms over GF(3):")
    sym = classify_congruence(F, 2, symmetric_only=True)
    show(sym, F)
    print("  rank and the square class of the discriminant decide the class")
    print()

    # a single orbit, inspected directly
    A = [[1, 0], [0, 2]]
    res = orbit_of(F, A)
    print(f"orbit of {A} over GF(3): size {res.orbit_size},"
          f" canonical rep {res.canonical_rep.tolist()}")
    C = [[1, 1], [0, 1]]
    B = congruence_twist(F, C, A)
    res2 = orbit_of(F, B)
    print(f"twisting by C = {C} gives {B.tolist()},"
          f" same canonical rep: {res2.canonical_rep.tolist()}")


if __name__ == "__main__":
    main()
