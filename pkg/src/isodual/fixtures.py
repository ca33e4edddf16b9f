"""Published reference data used as gold fixtures.

``EAB_F8`` is the 4x8 generator matrix of the lift of the [4,2] rational
code on alphas {0, a+1, a^2+1, a^2+a+1} of F_8 = F_2[a]/(a^3+a+1) to
y^2 + y = x^3.  Rows are the monomials 1, x, x^2, y.  Column j of the
published matrix is column ``perm[j]`` of our canonical ordering, which
sorts places by (alpha, beta) code.
"""

EAB_F8 = {
    "field": (2, 3),
    "qprime": 2,
    "f": (0, 0, 0, 1),
    "alphas": (0, 3, 5, 7),
    "matrix": (
        (1, 1, 1, 1, 1, 1, 1, 1),
        (0, 0, 3, 3, 7, 7, 5, 5),
        (0, 0, 5, 5, 3, 3, 7, 7),
        (0, 1, 6, 7, 4, 5, 2, 3),
    ),
    "perm": (0, 1, 2, 3, 6, 7, 4, 5),
    "distance": 4,
}
