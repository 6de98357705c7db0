#!/usr/bin/env python3
"""Classic and dual polar varieties of a circle and a sphere, their
degeneracy loci, and the pointwise rank picture.

Run from the repository root:

    python3 demos/02_polar_varieties.py
"""

from polarvar import (ConstMatrix, PolarSpec, PrimeField, delta_ideal,
                      incidence_fiber_dim, parse_polynomial, polar_generators,
                      polar_ideal, thom_boardman_class,
                      verify_smooth_complete_intersection)

K = PrimeField()
circle = parse_polynomial("x1^2 + x2^2 - 1", 2, K)
print("S = circle,", verify_smooth_complete_intersection([circle]))

# Classic polar variety: points of the circle where the tangent line is
# parallel to the x2-axis, i.e. the two points (+-1, 0).
spec = PolarSpec.classic(2, 1, 1, [circle], ConstMatrix(K, [[1, 0]]))
R = polar_ideal(spec)
print(f"classic polar of the circle: dim {R.dim}, degree {R.degree}")
print("  generators:", "; ".join(str(g) for g in polar_generators(spec)))

# Dual polar variety: critical points of the distance to (2, 0).  The
# stacked determinant collapses to a multiple of x2.
dual = PolarSpec.dual(2, 1, 1, [circle], ConstMatrix(K, [[2, 0]]), column0=[1])
Rd = polar_ideal(dual)
print(f"dual polar about (2,0): dim {Rd.dim}, degree {Rd.degree}")

# About the center the construction degenerates: every point of the circle
# is critical for the distance to (0, 0).
center = PolarSpec.dual(2, 1, 1, [circle], ConstMatrix(K, [[0, 0]]),
                        column0=[1], strict=False)
Rc = polar_ideal(center)
print(f"dual polar about the center: dim {Rc.dim} (the whole circle)")

# On the sphere, slicing with two coordinate rows picks out the equator.
sphere = parse_polynomial("x1^2 + x2^2 + x3^2 - 1", 3, K)
a = ConstMatrix(K, [[1, 0, 0], [0, 1, 0]])
spec3 = PolarSpec.classic(3, 1, 1, [sphere], a)
R3 = polar_ideal(spec3)
print(f"\nsphere polar variety: dim {R3.dim}, degree {R3.degree}")

# The rank-degeneracy locus one step further down is empty here.
print(f"degeneracy locus: dim {delta_ideal(spec3).dim}")

# Pointwise: the kernel dimension of the projection differential tells
# which stratum a regular point sits on, and the multiplier fiber follows.
for x in ([1, 0, 0], [0, 0, 1]):
    j = thom_boardman_class([sphere], a, x)
    fib = incidence_fiber_dim([sphere], a, x, 1)
    member = "on" if j >= 1 else "off"
    print(f"x = {x}: kernel dim {j} -> {member} the polar variety, "
          f"fiber dim {fib}")
