"""Knot inputs shared by the tests.  Handedness: positive crossings = right-handed."""

RIGHT_TREFOIL_PD = "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)"
LEFT_TREFOIL_PD = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
RIGHT_TREFOIL_GAUSS = "O1+ U2+ O3+ U1+ O2+ U3+"
LEFT_TREFOIL_GAUSS = "O1- U2- O3- U1- O2- U3-"
RIGHT_TREFOIL_BRAID = "2: s1 s1 s1"
LEFT_TREFOIL_BRAID = "2: s1^-1 s1^-1 s1^-1"
FIGURE_EIGHT_PD = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"
FIGURE_EIGHT_BRAID = "3: s1 s2^-1 s1 s2^-1"
T27_BRAID = "2: s1^7"
T34_BRAID = "3: s1 s2 s1 s2 s1 s2 s1 s2"
HOPF_PD = "X(1,4,2,3) X(3,2,4,1)"
POSITIVE_HOPF_PD = "X(1,3,2,4) X(3,1,4,2)"

# (name, parser, text, sigma(-1), Alexander coefficients {exp: coeff}, Arf)
TABLE = [
    ("unknot", "pd", "U", 0, {0: 1}, 0),
    ("right trefoil pd", "pd", RIGHT_TREFOIL_PD, -2, {-1: 1, 0: -1, 1: 1}, 1),
    ("right trefoil gauss", "gauss", RIGHT_TREFOIL_GAUSS, -2, {-1: 1, 0: -1, 1: 1}, 1),
    ("right trefoil braid", "braid", RIGHT_TREFOIL_BRAID, -2, {-1: 1, 0: -1, 1: 1}, 1),
    ("left trefoil pd", "pd", LEFT_TREFOIL_PD, 2, {-1: 1, 0: -1, 1: 1}, 1),
    ("left trefoil gauss", "gauss", LEFT_TREFOIL_GAUSS, 2, {-1: 1, 0: -1, 1: 1}, 1),
    ("left trefoil braid", "braid", LEFT_TREFOIL_BRAID, 2, {-1: 1, 0: -1, 1: 1}, 1),
    ("figure eight pd", "pd", FIGURE_EIGHT_PD, 0, {-1: -1, 0: 3, 1: -1}, 1),
    ("figure eight braid", "braid", FIGURE_EIGHT_BRAID, 0, {-1: -1, 0: 3, 1: -1}, 1),
    ("T(2,7)", "braid", T27_BRAID, -6, {-3: 1, -2: -1, -1: 1, 0: -1, 1: 1, 2: -1, 3: 1}, 0),
    ("T(3,4)", "braid", T34_BRAID, -6, {-3: 1, -2: -1, 0: 1, 2: -1, 3: 1}, 1),
    ("kinked unknot", "braid", "2: s1", 0, {0: 1}, 0),
    ("kinked unknot gauss", "gauss", "O1+ U1+", 0, {0: 1}, 0),
]
