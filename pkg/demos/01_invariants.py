"""Tour of the exact invariants of complete intersections.

X_n(d_1, ..., d_r) is a smooth complete intersection of complex dimension n
cut out by hypersurfaces of the given degrees.  Everything here is computed
in exact rational arithmetic; no floating point is involved anywhere.
"""

from cisym import CompleteIntersection, fraction_str, invariants


def show(n, *degrees):
    ci = CompleteIntersection(n, degrees)
    rep = invariants(ci)
    parts = [
        f"t={rep.t}",
        f"c1={rep.c1_coeff}",
        f"rho={rep.rho}",
        f"euler={rep.euler}",
        f"spin={'yes' if rep.spin else 'no'}",
    ]
    if rep.signature is not None:
        parts.append(f"sign={rep.signature}")
    if rep.a_hat is not None:
        parts.append(f"a_hat={fraction_str(rep.a_hat)}")
    if rep.b3 is not None:
        parts.append(f"b3={rep.b3}")
    print(f"{str(ci):14s} {'  '.join(parts)}")


print("Curves (complex dimension 1): euler = t * (r + 2 - sum of degrees)")
for degs in [(1,), (2,), (3,), (4,), (2, 2), (2, 3)]:
    show(1, *degs)

print()
print("Surfaces (complex dimension 2): signature and the a_hat genus exist")
for degs in [(1,), (2,), (3,), (4,), (5,), (6,), (2, 2), (2, 3)]:
    show(2, *degs)

print()
print("Threefolds (complex dimension 3): b3 = 4 - euler")
for degs in [(1,), (2,), (3,), (4,), (5,), (2, 2), (2, 2, 2)]:
    show(3, *degs)

print()
print("Spin check: for spin surfaces a_hat = -sign/8, an integer, and 16")
print("divides the signature.  The quartic surface is the classical example:")
show(2, 4)
