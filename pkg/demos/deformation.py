# Rays survive the exponential deformation, with a log(d)/beta cushion.
import math

from tropcyclic import SignPattern, SignedCyclicSpec, build_polar, enumerate_extreme_rays
from tropcyclic.deform import deformed_member, deformed_row_margins, e_beta, lse

spec = SignedCyclicSpec(SignPattern.from_string("+-+/+-+"))
polar = build_polar(spec)

for x in enumerate_extreme_rays(spec):
    for beta in (1, 4, 16):
        margins = deformed_row_margins(polar, x, beta)
        print(x, beta, deformed_member(polar, x, beta), [round(m, 4) for m in margins])

print(e_beta((1, 1, 0), 2.0))
print(lse([0, 0, 0], 1.0), math.log(3))
