#!/usr/bin/env python3
"""Truncated spectra in the Fock representation.

Diagonalizes one family on both sides of its transition and shows that
the spectral picture (all real vs complex-conjugate pairs) matches the
algebraic classification.  Then checks isospectrality of the running
example against its hermitian counterpart.
"""

from deformed_e2 import OperatorPoly
from deformed_e2.models import (
    Mu,
    build_pt5,
    hermitian_counterpart_pt5,
    with_special_choice,
)
from deformed_e2.representations import (
    diagonalize_classify,
    isospectral_check,
    make_representation,
)


def main():
    theta = 1.0
    rep = make_representation("fock", theta, 60)
    print("fock representation, N = 60, theta =", theta)
    print()

    # H = J^2 + mu3 U + i mu4 V for (mu3, mu4) on both sides of mu3 = mu4
    for mu3, mu4 in ((2.0, 1.0), (1.0, 2.0)):
        h = OperatorPoly({(0, 0, 2): 1.0, (1, 0, 0): mu3, (0, 1, 0): 1j * mu4},
                         theta)
        report = diagonalize_classify(h, rep, delta=15)
        print(f"(mu3, mu4) = ({mu3}, {mu4}): verdict {report.verdict}, "
              f"{len(report.converged)} converged, {report.pairs} pairs")
        sample = [e for e in report.eigenvalues[:6]]
        for e in sample:
            print(f"    {e.real:+.6f} {e.imag:+.6f}i")
        print()

    worked = with_special_choice(
        Mu(mu1=1.0, mu2=0.0, mu3=1.0, mu4=2.0, mu5=1.0, mu6=1.0, mu8=0.0))
    print("isospectrality of the running example at theta = 12:")
    rep12 = make_representation("fock", 12.0, 80)
    iso = isospectral_check(build_pt5(worked, 12.0),
                            hermitian_counterpart_pt5(worked, 12.0),
                            rep12, delta=20)
    print(f"  matched {iso.n_matched} converged eigenvalues")
    print(f"  worst relative mismatch {iso.max_mismatch:.3e}")
    print(f"  verdicts: {iso.verdict_h} / {iso.verdict_hh}")
    print(f"  passed: {iso.passed}")


if __name__ == "__main__":
    main()
