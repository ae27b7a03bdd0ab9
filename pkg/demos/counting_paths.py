# Counting allowed paths without listing them.
import numpy as np

from tropcyclic import count_tropical_paths, enumerate_tropical_paths, mcmullen_U
from tropcyclic.bounds import natural_pattern, trop_upper_bound
from tropcyclic.paths import count_paths_signs

# The natural pattern: two diagonal bands of minus signs.
nat = natural_pattern(14, 7)
print(nat.to_string())
print("tropical paths:", count_tropical_paths(nat))
print("upper bound   :", mcmullen_U(21, 6))
print("listing agrees:", len(enumerate_tropical_paths(nat)) == count_tropical_paths(nat))

# batched DP over random patterns
rng = np.random.default_rng(1)
negs = rng.random((100_000, 6, 5)) < 0.5
ntrop = count_paths_signs(negs)
nclass = count_paths_signs(negs, classical=True)
print("max over 1e5 random 6 x 5:", ntrop.max(), "of at most", mcmullen_U(11, 4))
print("crude bound:", trop_upper_bound(6, 5))
assert (ntrop <= nclass).all()

# the classical count can be larger
i = int(np.argmax(nclass - ntrop))
print("largest gap:", ntrop[i], "vs", nclass[i])
