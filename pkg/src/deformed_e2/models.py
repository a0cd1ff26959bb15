"""PT-invariant Hamiltonian families on the deformed E2 algebra.

The general degree-2 Hamiltonian is

    H = c1 J^2 + c2 J + c3 U + c4 V + c5 UJ + c6 VJ + c7 U^2 + c8 V^2
        + c9 UV + c10,

with c_j = alpha_j + i beta_j.  Hermiticity pins the beta_j:

    beta_1 = beta_2 = 0,  beta_3 = alpha_6/2,  beta_4 = -alpha_5/2,
    beta_5 = ... = beta_9 = 0,  beta_10 = -theta*alpha_9/2.

Invariance under the antilinear maps forces coefficient patterns, which we
take as the definition of each invariant family:

    PT5 (U -> U, V -> -V):  c4, c6, c9 imaginary, the rest real;
    PT4 (U -> -U, V -> V):  c3, c5, c9 imaginary, the rest real;
    PT3 (U <-> V):          c1, c2, c9, c10+i*theta*c9/2 real,
                            c4 = conj(c3), c6 = conj(c5), c8 = conj(c7).

The PT5 family is parameterized by nine reals mu_1..mu_9:

    H = mu1 J^2 + mu2 J + mu3 U + i mu4 V + mu5 UJ + i mu6 VJ
        + mu7 U^2 + mu8 V^2 + i mu9 UV.

A Dyson map eta = exp(lam*J + rho*U + tau*V) with tau = 0,
rho = lam (mu5 - mu6 coth lam)/(2 mu1) renders H Hermitian when lam solves
coth(2 lam) = mu78/mu19 and coth(lam) = mu23/mu24 (undeformed), the latter
being replaced at theta != 0 by a condition on mu3 (`mu3_deformed`).  Real
solutions lam mark the PT-symmetric (real-spectrum) region; complex lam the
spontaneously broken one; exceptional points sit on the boundary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq, least_squares, minimize

from .algebra import OperatorPoly
from .dyson import DysonParams, adjoint_poly

SYMMETRIC = "Symmetric"
BROKEN = "Broken"
BOUNDARY = "Boundary"

# |ratio| within this distance of 1 is reported as Boundary, and the
# exceptional-point bisection stops at this bracket width.
BOUNDARY_TOL = 1e-9

# The ten basis monomials in c_1..c_10 order.
_BASIS = ((0, 0, 2), (0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 0, 1),
          (0, 1, 1), (2, 0, 0), (0, 2, 0), (1, 1, 0), (0, 0, 0))
_BASIS_INDEX = {m: j for j, m in enumerate(_BASIS)}


class BrokenPhaseError(ValueError):
    """A construction that needs a real Dyson map met a broken-phase input."""


class DegenerateLambdaError(ValueError):
    """The coth constraint degenerates (lambda -> 0 limit)."""


@dataclass(frozen=True)
class HamiltonianCoeffs:
    """The ten complex coefficients c_1..c_10 of the general Hamiltonian."""

    c: tuple

    def __post_init__(self):
        vals = tuple(complex(x) for x in self.c)
        if len(vals) != 10:
            raise ValueError("need exactly ten coefficients c_1..c_10")
        object.__setattr__(self, "c", vals)

    @classmethod
    def zero(cls):
        return cls((0,) * 10)

    def __getitem__(self, j):
        """1-based access matching the c_j labels."""
        if not 1 <= j <= 10:
            raise IndexError("coefficient index runs from 1 to 10")
        return self.c[j - 1]

    def alpha(self, j):
        return self[j].real

    def beta(self, j):
        return self[j].imag


@dataclass(frozen=True)
class Mu:
    """Real parameters mu_1..mu_9 of the PT5-invariant family."""

    mu1: float
    mu2: float = 0.0
    mu3: float = 0.0
    mu4: float = 0.0
    mu5: float = 0.0
    mu6: float = 0.0
    mu7: float = 0.0
    mu8: float = 0.0
    mu9: float = 0.0

    @property
    def is_hermitian(self):
        """True iff the built polynomial is Hermitian as an operator.

        Requires mu6 = 0, mu5 + 2 mu4 = 0 and mu9 = 0; the first two alone
        are necessary but not sufficient, since i*mu9*UV has no Hermitian
        completion inside the family (there is no constant term to absorb
        the theta shift).
        """
        return self.mu6 == 0 and self.mu5 + 2 * self.mu4 == 0 and self.mu9 == 0

    def as_coeffs(self):
        """The c_j image of Eq-style mu parameters: c4, c6, c9 imaginary."""
        return HamiltonianCoeffs((
            self.mu1, self.mu2, self.mu3, 1j * self.mu4, self.mu5,
            1j * self.mu6, self.mu7, self.mu8, 1j * self.mu9, 0.0,
        ))


@dataclass(frozen=True)
class MuAbbrev:
    """The four combinations controlling the Dyson constraints."""

    mu78: float
    mu19: float
    mu23: float
    mu24: float

    @classmethod
    def from_mu(cls, mu):
        if mu.mu1 == 0:
            raise ValueError("mu1 must be nonzero")
        return cls(
            mu78=(mu.mu5 ** 2 + mu.mu6 ** 2) / (4 * mu.mu1) - mu.mu7 + mu.mu8,
            mu19=mu.mu5 * mu.mu6 / (2 * mu.mu1) - mu.mu9,
            mu23=mu.mu2 * mu.mu5 / (2 * mu.mu1) - mu.mu6 / 2 - mu.mu3,
            mu24=mu.mu2 * mu.mu6 / (2 * mu.mu1) - mu.mu5 / 2 - mu.mu4,
        )


@dataclass(frozen=True)
class RegionVerdict:
    """Outcome of a phase classification.

    `witness` names the inequality (or ratio) that decided the verdict;
    margins are signed, positive when the corresponding condition holds.
    In deformed general mode the second margin is qualitative: +1.0 when a
    real lambda solving the mu3 condition exists, minus the smallest
    constraint mismatch found when none does.
    """

    phase: str
    witness: str
    margin1: float = math.nan
    margin2: float = math.nan
    lam: complex = None


def special_mu7(mu):
    return (mu.mu5 ** 2 + mu.mu6 ** 2 + 4 * mu.mu1 * mu.mu8) / (4 * mu.mu1)


def special_mu9(mu):
    return mu.mu5 * mu.mu6 / (2 * mu.mu1)


def with_special_choice(mu):
    """Fix mu7 and mu9 so the coth(2 lambda) constraint drops out."""
    return replace(mu, mu7=special_mu7(mu), mu9=special_mu9(mu))


def build_general(coeffs, theta):
    """The normal-ordered polynomial with the given c_1..c_10."""
    return OperatorPoly(
        {m: coeffs.c[j] for j, m in enumerate(_BASIS) if coeffs.c[j] != 0},
        theta,
    )


def build_pt5(mu, theta):
    """The PT5-invariant Hamiltonian for the given mu parameters."""
    return build_general(mu.as_coeffs(), theta)


def extract_coeffs(p):
    """Read c_1..c_10 back off a polynomial; rejects higher monomials."""
    c = [0j] * 10
    for mono, w in p.terms.items():
        j = _BASIS_INDEX.get(mono)
        if j is None:
            raise ValueError(f"monomial U^{mono[0]} V^{mono[1]} J^{mono[2]} "
                             "is outside the degree-2 coefficient basis")
        c[j] = w
    return HamiltonianCoeffs(tuple(c))


def constraint_residuals(coeffs, theta):
    """The ten signed Hermiticity residuals, all zero iff H = H^dagger.

    Ordered as [beta1, beta2, beta3 - alpha6/2, beta4 + alpha5/2, beta5,
    beta6, beta7, beta8, beta9, beta10 + theta*alpha9/2].
    """
    a, b = coeffs.alpha, coeffs.beta
    return np.array([
        b(1), b(2), b(3) - a(6) / 2, b(4) + a(5) / 2, b(5),
        b(6), b(7), b(8), b(9), b(10) + theta * a(9) / 2,
    ])


def arccoth(x):
    """Principal-branch inverse coth: 0.5*log((x+1)/(x-1)).

    Complex-capable.  For real x in (-1, 1) the imaginary part is +pi/2,
    which is the fixed branch used everywhere in this package.
    """
    x = complex(x)
    if x == 1 or x == -1:
        raise ZeroDivisionError("arccoth diverges at +/-1")
    w = (x + 1) / (x - 1)
    if w.imag == 0:
        # complex division can leave -0.0 here, which would flip cmath.log
        # onto the lower branch; pin the +pi/2 branch for real arguments
        w = complex(w.real, 0.0)
    return 0.5 * cmath.log(w)


def _coth(z):
    z = complex(z)
    s = cmath.sinh(z)
    if s == 0:
        raise ZeroDivisionError("coth pole at lambda = 0 (mod i*pi)")
    return cmath.cosh(z) / s


def rho_of_lambda(mu, lam):
    """rho = lam (mu5 - mu6 coth lam)/(2 mu1), continued through lam = 0."""
    lam = complex(lam)
    if abs(lam) < 1e-4:
        # lam*coth(lam) = 1 + lam^2/3 - lam^4/45 + ...
        lc = 1 + lam * lam / 3 - lam ** 4 / 45
    else:
        lc = lam * _coth(lam)
    return (lam * mu.mu5 - mu.mu6 * lc) / (2 * mu.mu1)


def solve_pt5_undeformed(mu):
    """Dyson parameters for the theta = 0 family, Eq-13 style.

    lam is taken from coth(lam) = mu23/mu24 via the principal arccoth; the
    remaining coth(2 lam) = mu78/mu19 relation is reported as a
    compatibility residual since the system is overdetermined.  When the
    fourth relation is vacuous (mu23 = mu24 = 0) lam is taken from the
    third instead, and when both are vacuous lam = 0 is returned (any lam
    works; the conjugation is well-defined for the whole family).
    """
    ab = MuAbbrev.from_mu(mu)
    if ab.mu24 == 0 and ab.mu23 != 0:
        raise DegenerateLambdaError(
            "coth(lambda) = mu23/mu24 degenerates (mu24 = 0, mu23 != 0): "
            "lambda -> 0 is the only limit and the map becomes singular")

    def third_residual(lam):
        if ab.mu19 != 0:
            return abs(_coth(2 * lam) - ab.mu78 / ab.mu19)
        return 0.0 if ab.mu78 == 0 else math.inf

    if ab.mu24 == 0:
        # fourth relation vacuous; fall back to the third
        if ab.mu19 != 0:
            lam = arccoth(ab.mu78 / ab.mu19) / 2
            residual = 0.0
        else:
            lam = 0j
            residual = 0.0 if ab.mu78 == 0 else math.inf
    else:
        lam = arccoth(ab.mu23 / ab.mu24)
        residual = third_residual(lam)

    rho = rho_of_lambda(mu, lam)
    return DysonParams(lam, rho, 0.0, 0.0), float(residual)


def mu3_deformed(mu, lam, theta):
    """The mu3 value enforcing Hermiticity at deformation theta.

    Replaces the coth(lambda) = mu23/mu24 relation; reduces to
    mu3 = -mu24 coth(lam) + mu2 mu5/(2 mu1) - mu6/2 at theta = 0.
    The mu3 stored on `mu` is ignored (this is the equation for it).
    """
    if mu.mu1 == 0:
        raise ValueError("mu1 must be nonzero")
    lam = float(lam)
    ch, sh = math.cosh(lam), math.sinh(lam)
    if sh == 0:
        raise ValueError("lambda = 0 is singular in the (1+cosh)/sinh term")
    ab = MuAbbrev.from_mu(mu)
    mu56 = (mu.mu6 * ch - mu.mu5 * sh) / (2 * mu.mu1 * (1 + ch))
    mu68 = mu.mu6 ** 2 / (4 * mu.mu1) + mu.mu8
    mu3_0 = -ab.mu24 * ch / sh + mu.mu2 * mu.mu5 / (2 * mu.mu1) - mu.mu6 / 2
    return mu3_0 + theta * 2 * mu56 * (
        ab.mu19 * (0.5 + ch) - ab.mu78 * sh - mu68 * (1 + ch) / sh)


def _special_ratio(mu, theta):
    """The coth(lambda) ratio of the special-choice family."""
    ab = MuAbbrev.from_mu(mu)
    mu68 = mu.mu6 ** 2 / (4 * mu.mu1) + mu.mu8
    num = mu.mu1 * ab.mu23 + theta * mu.mu5 * mu68
    den = mu.mu1 * ab.mu24 + theta * mu.mu6 * mu68
    return num, den


def solve_pt5_special(mu, theta):
    """Dyson parameters under the special mu7, mu9 choice.

    coth(lam) = (mu1 mu23 + theta mu5 mu68)/(mu1 mu24 + theta mu6 mu68);
    |ratio| <= 1 yields complex lam (broken phase), visible on the returned
    params' reality flag.  Assumes the special choice is in force, otherwise
    the resulting map does not Hermitize the Hamiltonian.
    """
    num, den = _special_ratio(mu, theta)
    if den == 0:
        raise ZeroDivisionError(
            "special-choice coth ratio has zero denominator; "
            "lambda degenerates")
    ratio = num / den
    lam = arccoth(ratio)
    rho = lam * (mu.mu5 - mu.mu6 * ratio) / (2 * mu.mu1)
    return DysonParams(lam, rho, 0.0, theta)


def _ratio_test(num, den):
    """(margin, at_boundary, diagnostic) for an |num| >= |den| inequality.

    A zero denominator never flags Boundary: 0/0 means the constraint is
    vacuous (satisfied with zero margin, lambda unconstrained by it) and
    |num| >= 0 with num != 0 is strictly satisfied.
    """
    if den == 0:
        return abs(num), False, None
    return abs(num) - abs(den), abs(abs(num / den) - 1) <= BOUNDARY_TOL, None


# Search window for a real lambda solving the deformed mu3 condition: sign
# changes of F(lam) = mu3_deformed(lam) - mu3 are bracketed on a symmetric
# log grid and polished by brentq.
_LAM_GRID = np.concatenate([
    -np.logspace(math.log10(30.0), -6, 200),
    np.logspace(-6, math.log10(30.0), 200),
])


def _deformed_mu3_root(mu, theta):
    """(lam, min |F|) with lam a real root of the mu3 condition, or None."""
    def f(lam):
        return mu3_deformed(mu, lam, theta) - mu.mu3

    vals = np.array([f(x) for x in _LAM_GRID])
    finite = np.isfinite(vals)
    best_miss = math.inf
    for i in range(len(_LAM_GRID) - 1):
        if not (finite[i] and finite[i + 1]):
            continue
        a, b = _LAM_GRID[i], _LAM_GRID[i + 1]
        if a < 0 < b:
            continue  # F has a pole at lambda = 0
        fa, fb = vals[i], vals[i + 1]
        if fa == 0:
            return float(a), 0.0
        if fa * fb < 0:
            return float(brentq(f, a, b, xtol=1e-12)), 0.0
        best_miss = min(best_miss, abs(fa), abs(fb))
    return None, best_miss


def classify_region(mu, theta, mode="general"):
    """Phase verdict for the PT5 family at the given deformation.

    general mode, theta = 0: the two inequalities |mu78| >= |mu19| and
    |mu23| >= |mu24|.  general mode, theta != 0: the first inequality is
    unchanged and the second is replaced by existence of a real lambda
    solving the deformed mu3 condition (checked exactly via the coth ratio
    when mu5 = mu6 = 0, by bracketed root search otherwise).  special mode:
    the single condition |coth ratio| > 1 of the special-choice family.
    Boundary is returned when the deciding ratio sits within 1e-9 of 1, or
    on zero-denominator degeneracies.
    """
    if mode == "special":
        num, den = _special_ratio(mu, theta)
        if den == 0:
            return RegionVerdict(
                BOUNDARY,
                "special coth ratio: zero denominator (lambda degenerates)",
                margin1=math.nan)
        ratio = num / den
        margin = abs(ratio) - 1
        if abs(margin) <= BOUNDARY_TOL:
            return RegionVerdict(BOUNDARY, "|special coth ratio| = 1",
                                 margin1=margin)
        phase = SYMMETRIC if margin > 0 else BROKEN
        return RegionVerdict(phase, f"|special coth ratio| = {abs(ratio)!r}",
                             margin1=margin, lam=arccoth(ratio))

    if mode != "general":
        raise ValueError(f"unknown mode {mode!r}")

    ab = MuAbbrev.from_mu(mu)
    m1, b1, d1 = _ratio_test(ab.mu78, ab.mu19)

    if theta == 0 or (mu.mu5 == 0 and mu.mu6 == 0):
        # at mu5 = mu6 = 0 the deformed mu3 condition collapses to the
        # undeformed coth(lambda) = mu23/mu24 for every theta
        m2, b2, d2 = _ratio_test(ab.mu23, ab.mu24)
        name2 = "|mu23| >= |mu24|"
        lam = None
        if ab.mu24 != 0 and abs(ab.mu23) != abs(ab.mu24):
            lam = arccoth(ab.mu23 / ab.mu24)
    else:
        name2 = "real lambda for mu3 condition"
        root, miss = _deformed_mu3_root(mu, theta)
        if root is not None:
            m2, b2, d2, lam = 1.0, False, None, complex(root)
        elif miss <= BOUNDARY_TOL:
            m2, b2, d2, lam = 0.0, True, "mu3 condition grazes zero", None
        else:
            m2, b2, d2, lam = -miss, False, None, None

    viol1 = m1 < 0 and not b1
    viol2 = m2 < 0 and not b2
    if viol1 or viol2:
        which = "|mu78| >= |mu19|" if viol1 else name2
        return RegionVerdict(BROKEN, f"violated: {which}",
                             margin1=m1, margin2=m2, lam=lam)
    if b1 or b2:
        which = d1 or d2 or ("first ratio at 1" if b1 else "second ratio at 1")
        return RegionVerdict(BOUNDARY, which, margin1=m1, margin2=m2, lam=lam)
    return RegionVerdict(SYMMETRIC, "both conditions hold",
                         margin1=m1, margin2=m2, lam=lam)


def hermitian_counterpart_pt5(mu, theta):
    """The closed-form Hermitian partner of the special-choice family.

    Valid when mu7, mu9 take their special values and the solved lambda is
    real; otherwise raises.  Must agree with conjugating the Hamiltonian by
    the solved Dyson map, which the tests check coefficient by coefficient.
    """
    if abs(mu.mu7 - special_mu7(mu)) > 1e-9 or abs(mu.mu9 - special_mu9(mu)) > 1e-9:
        raise ValueError("mu7/mu9 do not take the special-choice values")
    params = solve_pt5_special(mu, theta)
    if not params.is_real:
        num, den = _special_ratio(mu, theta)
        raise BrokenPhaseError(
            f"broken phase: |coth ratio| = {abs(num / den)} <= 1, "
            "lambda is complex")
    lam = params.lam.real
    ch, sh = math.cosh(lam), math.sinh(lam)
    ab = MuAbbrev.from_mu(mu)
    mu56 = (mu.mu6 * ch - mu.mu5 * sh) / (2 * mu.mu1 * (1 + ch))
    mu68 = mu.mu6 ** 2 / (4 * mu.mu1) + mu.mu8
    mu65 = mu.mu5 / 2 - mu.mu6 / 2 * math.tanh(lam / 2)

    c_j = mu.mu2 + theta * mu.mu6 * mu56
    c_u2 = mu.mu8 + mu.mu5 ** 2 / (4 * mu.mu1) + mu.mu6 * mu56
    c_u = (mu.mu2 / mu.mu1 * mu65 - ab.mu23 * ch + ab.mu24 * sh
           + theta * mu56 * (mu.mu6 / mu.mu1 * mu65 + 2 * mu68 * sh))
    scalar = (-theta * (mu.mu5 * mu.mu6 / (4 * mu.mu1)
                        + mu56 * (ab.mu24 * ch - ab.mu23 * sh
                                  - mu.mu4 - mu.mu5 / 2))
              - theta ** 2 * mu56 ** 2 * (mu68 * (1 + 2 * ch) + mu.mu8))

    # mu65 {U, J} with {U, J} = 2 UJ - iV in normal order
    return OperatorPoly({
        (0, 0, 2): mu.mu1,
        (0, 0, 1): c_j,
        (2, 0, 0): c_u2,
        (0, 2, 0): mu68,
        (1, 0, 0): c_u,
        (1, 0, 1): 2 * mu65,
        (0, 1, 0): -1j * mu65,
        (0, 0, 0): scalar,
    }, theta)


def toy_mu(mu1, mu4, lam):
    """The fully pinned toy family: mu2 = 0, mu5 = -2 mu4, mu6 = -2 mu3,
    mu8 = -mu3^2/mu1 with mu3 = mu4 coth(lam/2), special mu7 and mu9."""
    mu3 = mu4 / math.tanh(lam / 2)
    return with_special_choice(Mu(
        mu1=mu1, mu2=0.0, mu3=mu3, mu4=mu4,
        mu5=-2 * mu4, mu6=-2 * mu3, mu8=-mu3 ** 2 / mu1,
    ))


def toy_dyson_params(mu1, mu4, lam, theta):
    """The Dyson map of the toy family member at the given lam:
    rho = lam mu4/(2 mu1 sinh^2(lam/2)), tau = 0."""
    rho = lam * mu4 / (2 * mu1 * math.sinh(lam / 2) ** 2)
    return DysonParams(float(lam), rho, 0.0, theta)


def toy_lambda(mu3, mu4):
    """Inverse toy parameterization lam = 2 arccoth(mu3/mu4)."""
    return 2 * arccoth(mu3 / mu4)


def toy_model(mu1, mu4, lam=None, theta=0.0, mu3=None):
    """The toy Hermitian counterpart h = mu1 J^2 + eps J + shift.

    eps = theta mu4^2 / (mu1 sinh^2(lam/2)) and
    shift = (theta mu4^2 / mu1)(eps - coth(lam/2)), as stated in the source
    closed form; the engine conjugation arbitrates the scalar (see tests).
    Pass either lam directly or mu3 for the inverse parameterization
    lam = 2 arccoth(mu3/mu4); |mu3/mu4| <= 1 makes lam complex and is
    rejected as broken-phase.
    """
    if mu1 == 0:
        raise ValueError("mu1 must be nonzero")
    if (lam is None) == (mu3 is None):
        raise ValueError("pass exactly one of lam, mu3")
    if lam is None:
        z = toy_lambda(mu3, mu4)
        if abs(z.imag) > 1e-10:
            raise BrokenPhaseError(
                f"|mu3/mu4| <= 1 gives complex lambda {z}")
        lam = z.real
    lam = float(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    s2 = math.sinh(lam / 2) ** 2
    eps = theta * mu4 ** 2 / (mu1 * s2)
    shift = theta * mu4 ** 2 / mu1 * (eps - 1 / math.tanh(lam / 2))
    h = OperatorPoly({(0, 0, 2): mu1, (0, 0, 1): eps, (0, 0, 0): shift},
                     theta)
    return h, eps, shift


def toy_spectrum(mu1, epsilon, n, convention="oracle"):
    """Energy of mode n for h = mu1 J^2 + eps J (scalar shift excluded).

    "oracle": E_n = mu1 n^2 - eps n, from single-valued e^{i n phi} modes
    (J acts as -n on them, matching the circle representation).
    "paper": E_n = 4 pi^2 mu1 n^2 - 2 pi eps n, the published convention;
    it equals the oracle value with n -> 2 pi n.  Both kept deliberately.
    """
    if convention == "oracle":
        return mu1 * n * n - epsilon * n
    if convention == "paper":
        return 4 * math.pi ** 2 * mu1 * n * n - 2 * math.pi * epsilon * n
    raise ValueError(f"unknown convention {convention!r}")


def solve_generic_numeric(coeffs, theta, seed=0):
    """Search real (lam, rho, tau) Hermitizing the given Hamiltonian.

    Works for any of the invariant families (no tau = 0 assumption).
    Multi-start quasi-Newton on the summed squared Hermiticity residuals,
    polished by nonlinear least squares; returns the best parameters and
    the max-norm residual.  A residual below 1e-9 certifies a numerically
    Hermitizing real map (Symmetric phase); failure to find one is only a
    candidate for the broken phase, never a proof.
    """
    ham = build_general(coeffs, theta)

    def resid(x):
        params = DysonParams(float(x[0]), float(x[1]), float(x[2]), theta)
        r = constraint_residuals(extract_coeffs(adjoint_poly(params, ham)),
                                 theta)
        return np.where(np.isfinite(r), r, 1e50)

    def objective(x):
        r = resid(x)
        return 0.5 * float(r @ r)

    rng = np.random.default_rng(seed)
    starts = [np.zeros(3)]
    starts += [rng.uniform(-2.0, 2.0, 3) for _ in range(15)]
    bounds = [(-20.0, 20.0)] * 3

    best_x, best_r = None, math.inf
    for x0 in starts:
        res = minimize(objective, x0, method="L-BFGS-B", bounds=bounds)
        pol = least_squares(resid, np.clip(res.x, -20, 20),
                            bounds=(-20, 20), xtol=1e-15, ftol=1e-15,
                            gtol=1e-15)
        r = float(np.max(np.abs(resid(pol.x))))
        if r < best_r:
            best_x, best_r = pol.x, r
    if not math.isfinite(best_r):
        raise ArithmeticError("objective non-finite at every optimum")
    params = DysonParams(float(best_x[0]), float(best_x[1]),
                         float(best_x[2]), theta)
    return params, best_r


def find_exceptional_point(family, bracket, mode="general", tol=BOUNDARY_TOL):
    """Bisect a one-parameter family to the phase boundary.

    `family` maps the sweep parameter t to (Mu, theta).  The verdicts at the
    bracket ends must differ; bisection then narrows the bracket to `tol`
    and returns the boundary parameter (immediately, if a midpoint lands on
    Boundary).
    """
    a, b = float(bracket[0]), float(bracket[1])
    va = classify_region(*family(a), mode=mode).phase
    vb = classify_region(*family(b), mode=mode).phase
    if va == vb:
        raise ValueError(
            f"bracket endpoints agree ({va}); no boundary to bisect")
    while abs(b - a) > tol:
        m = 0.5 * (a + b)
        vm = classify_region(*family(m), mode=mode).phase
        if vm == BOUNDARY:
            return m
        if vm == va:
            a = m
        else:
            b = m
    return 0.5 * (a + b)
