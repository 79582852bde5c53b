BOX_BUDGET_A = 24
"""
Maximal number of boxes of a diagram filled by the type A enumeration.
"""

BOX_BUDGET_BCD = 40
"""
Maximal number of boxes of a doubled shape Ψ(λ) filled by the B/C/D enumeration.
"""

DIM_BUDGET = 10**7
"""
Maximal dimension of V_λ handled by the Freudenthal oracle.
"""

WEYL_RANK_BOUND = 6
"""
Maximal rank for explicit Weyl group enumeration (Bruhat order, tuple oracle).
"""

WEYL_GROUP_ORDER_BOUND = 100_000
"""
Maximal order of W_Θ for the alternating sum method of the invariant oracle.
Above this bound the extraction method is used.
"""

ADMISSIBLE_RANK_BOUND = 6
"""
Maximal rank for the breadth first search over s_α steps between two columns.
"""

DEFAULT_JOBS = 1
"""
Number of worker processes for the verification sweeps.
"""

COLUMN_UNIVERSE_RANK_BOUND = 8
"""
Maximal rank for which all 3^r - 1 strongly standard columns are enumerated.
"""

PRIMITIVE_BOX_BUDGET = 5_000_000
"""
Maximal number of fundamental-coordinate tuples searched for the primitive
elements of Q ∩ h^+.
"""

WEIGHT_BOUND = 4
"""
Default bound on λ_1 (type A: on Σ|λ_i| / 2) for the sweeps.
"""
