"""Shared fixture matrices and frozen expected values.

Every expected value here was produced or cross-checked through an
independent route before being frozen: optima by exhaustive fiber
enumeration, subdivisions by exact dual certificates, standard pairs by
lattice-point-freeness of their polytopes, census counts by two
traversals from different seeds.  Faces and roots are 0-based in this
module; the command line layer is what shifts to 1-based.
"""

# 3x6 instance whose decomposition uses low-dimensional faces: 70 standard
# pairs, faces down to the empty set, not a Gomory family.
A_LOWFACE = [[5, 0, 0, 2, 1, 0], [0, 5, 0, 1, 4, 2], [0, 0, 5, 2, 0, 3]]
C_LOWFACE = (21, 6, 1, 0, 0, 0)
B_LOWFACE = (5, 5, 5)
LOWFACE_FACES = ((0, 2, 3), (0, 3, 4), (1, 4, 5), (2, 3, 5), (3, 4, 5))

# the full 70-pair decomposition: face -> roots (exact, order-free)
LOWFACE_PAIRS = {
    (0, 2, 3): (
        (0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 0, 1),
        (0, 0, 0, 0, 1, 1),
        (0, 0, 0, 0, 0, 2),
    ),
    (0, 3, 4): (
        (0, 0, 0, 0, 0, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1),
        (0, 1, 1, 0, 0, 0),
        (0, 2, 0, 0, 0, 0),
        (0, 3, 0, 0, 0, 0),
        (0, 2, 1, 0, 0, 0),
    ),
    (1, 4, 5): (
        (0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 2, 0, 0, 0),
    ),
    (2, 3, 5): (
        (0, 0, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 0, 0, 0, 2, 0),
        (0, 0, 0, 0, 3, 0),
    ),
    (3, 4, 5): (
        (0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 2, 0, 0, 0),
        (0, 0, 3, 0, 0, 0),
        (0, 0, 4, 0, 0, 0),
    ),
    (0, 3): (
        (0, 0, 1, 0, 2, 1),
        (0, 0, 2, 0, 2, 1),
        (0, 0, 2, 0, 2, 0),
        (0, 0, 2, 0, 3, 0),
        (0, 0, 2, 0, 4, 0),
    ),
    (0, 4): (
        (0, 1, 0, 0, 0, 1),
        (0, 2, 0, 0, 0, 1),
        (0, 3, 0, 0, 0, 1),
    ),
    (1, 4): (
        (0, 0, 1, 1, 0, 0),
        (0, 0, 0, 1, 0, 0),
        (0, 0, 0, 2, 0, 0),
    ),
    (2, 3): (
        (0, 1, 0, 0, 0, 0),
        (1, 1, 0, 0, 0, 0),
        (1, 0, 0, 0, 2, 0),
        (1, 0, 0, 0, 2, 1),
        (0, 1, 0, 0, 1, 0),
    ),
    (2, 5): (
        (0, 1, 0, 0, 0, 0),
        (0, 1, 0, 0, 1, 0),
    ),
    (3, 4): (
        (0, 1, 2, 0, 0, 0),
        (0, 1, 3, 0, 0, 0),
        (0, 2, 2, 0, 0, 0),
        (0, 3, 1, 0, 0, 0),
        (0, 4, 0, 0, 0, 0),
    ),
    (4, 5): ((0, 1, 3, 0, 0, 0),),
    (0,): (
        (0, 1, 1, 0, 0, 1),
        (0, 1, 1, 0, 1, 1),
        (0, 1, 0, 0, 0, 2),
        (0, 1, 1, 0, 0, 2),
        (0, 2, 0, 0, 0, 2),
        (0, 1, 1, 0, 2, 1),
    ),
    (2,): (
        (1, 1, 0, 0, 0, 1),
        (1, 1, 0, 0, 0, 2),
    ),
    (3,): (
        (1, 1, 2, 0, 1, 0),
        (1, 1, 2, 0, 2, 0),
        (1, 1, 2, 0, 3, 0),
        (1, 1, 2, 0, 4, 0),
        (1, 0, 3, 0, 3, 0),
        (1, 0, 3, 0, 4, 0),
    ),
    (): (
        (1, 1, 2, 0, 1, 1),
        (1, 1, 2, 0, 2, 1),
        (1, 2, 1, 0, 0, 1),
        (1, 2, 1, 0, 1, 1),
        (1, 2, 1, 0, 2, 1),
        (1, 2, 1, 0, 0, 2),
        (1, 3, 0, 0, 0, 2),
    ),
}

# b = (5,5,5): optimum, its top-level relaxation face, and the unique
# face of maximum size whose relaxation solves
LOWFACE_OPTIMUM = (1, 1, 1, 0, 0, 0)
LOWFACE_VALUE = 28
LOWFACE_TOP_FACE = (3, 4, 5)
LOWFACE_SOLVING_FACE = (0, 3, 4)

# 3x6 instance with a Gomory cost: 6 standard pairs, all on maximal faces
A_GOMORY = [[1, 0, 1, 1, 1, 1], [0, 1, 1, 1, 2, 2], [0, 0, 1, 2, 3, 4]]
C_GOMORY = (0, 0, 1, 1, 0, 3)
GOMORY_FACES = ((0, 1, 4), (0, 3, 4), (1, 4, 5), (3, 4, 5))
GOMORY_PAIRS = {
    (0, 1, 4): (
        (0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 0, 0, 1, 0, 0),
    ),
    (0, 3, 4): ((0, 0, 0, 0, 0, 0),),
    (1, 4, 5): ((0, 0, 0, 0, 0, 0),),
    (3, 4, 5): ((0, 0, 0, 0, 0, 0),),
}
GOMORY_CENSUS = {"ideals": 48, "triangulations": 14, "gomory_triangulations": 10}

# a cost whose subdivision is the single simplex on columns 1, 2, 6;
# its radical group in the census has 13 ideals, exactly one of them Gomory
SINGLE_SIMPLEX_SEED = (0, 0, 1, 1, 1, 0)
SINGLE_SIMPLEX_FACES = ((0, 1, 5),)
SINGLE_SIMPLEX_IDEALS = 13
SINGLE_SIMPLEX_WINNER_ROOTS = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 0),
)

# 2x4 matrix whose columns do not generate all of cone(A)'s lattice points
A_NONNORMAL = [[1, 1, 1, 1], [0, 1, 3, 4]]
NONNORMAL_CENSUS = {"ideals": 10, "triangulations": 4, "gomory_triangulations": 0}
NONNORMAL_TRIANGULATIONS = (
    ((0, 1), (1, 2), (2, 3)),
    ((0, 1), (1, 3)),
    ((0, 2), (2, 3)),
    ((0, 3),),
)

# the smallest interesting instance: toric ideal generated by one binomial
A_SIMPLE = [[1, 0, 1], [0, 1, 1]]
C_SIMPLE = (0, 0, 1)

# 4x8 normal matrix: 77 triangulations, none unimodular
A_NORMAL48 = [
    [1, 0, 0, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 2, 2, 2],
    [0, 0, 1, 1, 2, 2, 3, 3],
    [0, 0, 0, 1, 2, 3, 4, 5],
]
NORMAL48_TRIANGULATIONS = 77

# 4x7: 19 triangulations, 11 of them supporting a Gomory family
A_4X7 = [
    [1, 0, 0, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 2, 2],
    [0, 0, 1, 1, 2, 2, 3],
    [0, 0, 0, 1, 2, 3, 4],
]
CENSUS_4X7 = {"triangulations": 19, "gomory_triangulations": 11}

# 7x12 with all maximal minors in {0,1,2}: every generic cost is Gomory
A_7X12 = [
    [1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0],
    [0, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
]
CENSUS_7X12 = {"ideals": 418, "triangulations": 376}

# degree-4 monomial curve: every triangulation supports exactly one
# Gomory ideal
A_CURVE4 = [[1, 1, 1, 1, 1], [0, 1, 2, 3, 4]]
