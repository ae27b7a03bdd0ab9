"""
Extreme rays of a small signed cyclic polar
===========================================

Two rows, three columns, the middle column negative.
"""
from tropcyclic import SignPattern, SignedCyclicSpec, build_polar, oracle_extreme_rays
from tropcyclic.cone import saturated_rows
from tropcyclic.cyclic import enumerate_rays_with_paths, format_ray
from tropcyclic.paths import render_path

pattern = SignPattern.from_string("+-+/+-+")
spec = SignedCyclicSpec(pattern)      # t defaults to 0, 1
polar = build_polar(spec)

print("A (negative part):", polar.A)
print("B (positive part):", polar.B)

# one ray per tropically allowed path
rays = enumerate_rays_with_paths(spec)
for ray in rays:
    print(format_ray(ray.coords), " saturates rows", sorted(saturated_rows(polar, ray.coords)))
    print(render_path(ray.path, pattern))
    print()

# the brute-force oracle never looks at paths
oracle = oracle_extreme_rays(spec)
print(len(rays), "rays from paths,", len(oracle), "from the oracle")

# a taller version: same column signs, five rows
tall = SignedCyclicSpec(SignPattern.from_function(5, 3, lambda i, j: j == 2))
print("5 x 3:", len(enumerate_rays_with_paths(tall)), "rays")
