# Alternating column signs: allowed paths are Gale subsets in disguise.
from tropcyclic import mcmullen_U, alternating_pattern, enumerate_allowed_paths, path_to_gale
from tropcyclic.paths import LatticePath, enumerate_gale_subsets, render_path

p, d = 3, 4
alt = alternating_pattern(p, d)
paths = enumerate_allowed_paths(alt)
for q in paths:
    print(q.word(p), path_to_gale(q, p, d).Q)
print(len(paths), len(enumerate_gale_subsets(p + d, d - 1)), mcmullen_U(p + d, d - 1))

q = LatticePath((1, 2, 4, 5), (1, 4, 5, 6, 9))
print(render_path(q, alternating_pattern(7, 9)))
print(path_to_gale(q, 7, 9).Q)
