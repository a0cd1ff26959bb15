#!/usr/bin/env python3
"""Normal-ordered arithmetic in the deformed E2 algebra.

Builds a few operator polynomials, shows the rewriting rules in action,
and checks the dagger and PT behavior that everything else relies on.
"""

from deformed_e2 import (
    OperatorPoly,
    PTKind,
    commutator,
    dagger,
    pt_apply,
    pt_algebra_consistent,
)


def main():
    theta = 0.5
    u = OperatorPoly.generator("U", theta)
    v = OperatorPoly.generator("V", theta)
    j = OperatorPoly.generator("J", theta)

    print(f"working at theta = {theta}")
    print()
    print("defining relations (as normal-ordered polynomials):")
    print("  [U, J] =", commutator(u, j))
    print("  [V, J] =", commutator(v, j))
    print("  [U, V] =", commutator(u, v))
    print()

    print("products are re-normal-ordered on the fly:")
    print("  J U     =", j * u)
    print("  V U     =", v * u)
    print("  J^2 U   =", j * j * u)
    print()

    print("the ladder combination picks up the deformation:")
    print("  (U + iV)(U - iV) =", (u + 1j * v) * (u - 1j * v))
    print()

    print("dagger reverses words, conjugates coefficients, then reorders:")
    print("  (U V)^dag        =", dagger(u * v))
    print("  U V - i theta/2  =", u * v - 0.5j * theta * OperatorPoly.identity(theta))
    print("  ... is hermitian:", dagger(u * v - 0.5j * theta * OperatorPoly.identity(theta))
          == u * v - 0.5j * theta * OperatorPoly.identity(theta))
    print()

    print("antilinear PT maps on the generators:")
    for kind in PTKind:
        images = ", ".join(f"{g} -> {pt_apply(kind, p)}"
                           for g, p in (("U", u), ("V", v), ("J", j)))
        ok = pt_algebra_consistent(kind, theta)
        print(f"  {kind.name}: {images}   respects brackets at theta={theta}: {ok}")
    print()
    print("only PT3/PT4/PT5 survive the deformation; PT1/PT2 need theta = 0")


if __name__ == "__main__":
    main()
