from degcount import DegreeSet

# The degree sets exercised throughout the suite: the three closed-form
# infinite families plus finite lists covering singleton, periodic and
# aperiodic cases.
FAMILY = [
    DegreeSet.min_degree(0),
    DegreeSet.min_degree(1),
    DegreeSet.min_degree(2),
    DegreeSet.even(),
    DegreeSet.odd(),
    DegreeSet.finite([2]),
    DegreeSet.finite([1, 3]),
    DegreeSet.finite([2, 3]),
]

FAMILY_IDS = [str(d) for d in FAMILY]

# Subfamily where the saddle-point machinery applies (at least two members).
SADDLE_FAMILY = [d for d in FAMILY if d.size != 1]
SADDLE_FAMILY_IDS = [str(d) for d in SADDLE_FAMILY]
