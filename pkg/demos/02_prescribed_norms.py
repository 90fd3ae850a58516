"""Which squared-norm profiles can a unit decomposition have?

The answer is a majorization condition: (c_1, ..., c_n) is attainable in
R^k exactly when the indicator vector with k ones majorizes it.  The
construction is fully explicit, so we can both test profiles and build a
frame realizing any feasible one.
"""

import numpy as np

from framegeo import (NormProfile, NotRealizableError,
                      certify_unit_decomposition, construct_realization,
                      is_realizable, majorizes, random_realizable_profile)

indicator = [1.0, 1.0, 0.0, 0.0, 0.0]
profile = NormProfile(k=2, entries=[0.7, 0.5, 0.4, 0.3, 0.1])
print(f"indicator majorizes profile: {majorizes(indicator, profile.entries)}")
print(f"profile realizable in R^2:   {is_realizable(profile)}")

frame = construct_realization(profile)
print("\nconstructed frame (rows):")
print(np.array_str(frame.vectors, precision=4, suppress_small=True))
print(f"squared norms: {np.round(frame.squared_norms(), 12)}")
print(f"certified: {certify_unit_decomposition(frame).ok}")

# a profile whose largest entry exceeds 1 cannot come from any frame
try:
    construct_realization(NormProfile(k=2, entries=[1.5, 0.5]))
except NotRealizableError as err:
    print(f"\nrejected as expected: {err} (violated prefix length {err.prefix})")

# random feasible profiles round-trip through the construction
worst = 0.0
for seed in range(200):
    p = random_realizable_profile(n=9, k=4, seed=seed)
    f = construct_realization(p)
    worst = max(worst, float(np.max(np.abs(f.squared_norms() - p.entries))))
print(f"\nworst norm error over 200 random feasible profiles: {worst:.2e}")
