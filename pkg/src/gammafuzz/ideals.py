"""Intuitionistic fuzzy ideals of a Γ-semigroup.

Predicates return an :class:`IdealVerdict`, which is truthy when the
property holds and otherwise carries the first violating tuple found in
canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import CarrierMismatch, EmptyIFS, NotAnIFI, ZeroRequired
from .gamma import GammaSemigroup
from .ifs import IFS, ONE, ZERO, constant_ifs, is_nonempty


@dataclass(frozen=True)
class IdealVerdict:
    holds: bool
    witness: tuple | None = None
    condition: str | None = None

    def __post_init__(self):
        assert self.holds == (self.witness is None)

    def __bool__(self) -> bool:
        return self.holds

    def describe(self) -> str:
        if self.holds:
            return "holds"
        return f"fails ({self.condition}) at {' '.join(map(str, self.witness))}"


HOLDS = IdealVerdict(True)


def _check(G: GammaSemigroup, A: IFS) -> None:
    if A.carrier != G.carrier:
        raise CarrierMismatch("IFS carrier differs from the Γ-semigroup carrier")


def _require_nonempty(A: IFS) -> None:
    if not is_nonempty(A):
        raise EmptyIFS("the IFS is empty (μ ≡ 0 or ν ≡ 1)")


def ideal_inequalities(G: GammaSemigroup, A: IFS, side: str) -> IdealVerdict:
    """The translation inequalities alone, without the non-emptiness requirement."""
    _check(G, A)
    mu, nu, T = A.mu, A.nu, G.sgs
    left = side in ("left", "two-sided")
    right = side in ("right", "two-sided")
    for x, g, y in product(range(G.size), range(G.gamma_size), range(G.size)):
        z = T[x][g][y]
        if left:
            if mu[z] < mu[y]:
                return _fail(G, x, g, y, "mu-left")
            if nu[z] > nu[y]:
                return _fail(G, x, g, y, "nu-left")
        if right:
            if mu[z] < mu[x]:
                return _fail(G, x, g, y, "mu-right")
            if nu[z] > nu[x]:
                return _fail(G, x, g, y, "nu-right")
    return HOLDS


def _fail(G, x, g, y, condition) -> IdealVerdict:
    return IdealVerdict(False, (G.carrier[x], G.gamma[g], G.carrier[y]), condition)


def is_ifli(G: GammaSemigroup, A: IFS) -> IdealVerdict:
    """μ(xγy) ≥ μ(y) and ν(xγy) ≤ ν(y) for all x, γ, y."""
    _check(G, A)
    _require_nonempty(A)
    return ideal_inequalities(G, A, "left")


def is_ifri(G: GammaSemigroup, A: IFS) -> IdealVerdict:
    """μ(xγy) ≥ μ(x) and ν(xγy) ≤ ν(x) for all x, γ, y."""
    _check(G, A)
    _require_nonempty(A)
    return ideal_inequalities(G, A, "right")


def is_ifi(G: GammaSemigroup, A: IFS) -> IdealVerdict:
    _check(G, A)
    _require_nonempty(A)
    return ideal_inequalities(G, A, "two-sided")


def is_if_ideal(G: GammaSemigroup, A: IFS, side: str) -> IdealVerdict:
    return {"left": is_ifli, "right": is_ifri, "two-sided": is_ifi}[side](G, A)


def whole_space(G: GammaSemigroup) -> IFS:
    return constant_ifs(G, ONE, ZERO)


def compose(G: GammaSemigroup, A: IFS, B: IFS) -> IFS:
    """A∘B: sup-min of μ and inf-max of ν over all factorizations x = uγv.

    Elements with no factorization get (0, 1).
    """
    _check(G, A)
    _check(G, B)
    mu, nu = [], []
    for facts in G.factorizations:
        if not facts:
            mu.append(ZERO)
            nu.append(ONE)
            continue
        mu.append(max(min(A.mu[u], B.mu[v]) for u, _, v in facts))
        nu.append(min(max(A.nu[u], B.nu[v]) for u, _, v in facts))
    return IFS(G.carrier, tuple(mu), tuple(nu))


def compose_explain(G: GammaSemigroup, A: IFS, B: IFS) -> dict[str, tuple | None]:
    """Per element, the first factorization achieving the μ supremum and the ν infimum."""
    C = compose(G, A, B)
    out: dict[str, tuple | None] = {}
    for x, facts in enumerate(G.factorizations):
        if not facts:
            out[G.carrier[x]] = None
            continue
        best_mu = next(f for f in facts if min(A.mu[f[0]], B.mu[f[2]]) == C.mu[x])
        best_nu = next(f for f in facts if max(A.nu[f[0]], B.nu[f[2]]) == C.nu[x])
        out[G.carrier[x]] = tuple(
            (G.carrier[u], G.gamma[g], G.carrier[v]) for u, g, v in (best_mu, best_nu)
        )
    return out


def _inf_mu(G, A, x, y) -> Fraction:
    return min(A.mu[G.sgs[x][g][y]] for g in range(G.gamma_size))


def _sup_nu(G, A, x, y) -> Fraction:
    return max(A.nu[G.sgs[x][g][y]] for g in range(G.gamma_size))


def _require_ifi(G, A) -> None:
    v = is_ifi(G, A)
    if not v:
        raise NotAnIFI(f"not an IF ideal: {v.describe()}")


def is_ifpi(G: GammaSemigroup, A: IFS) -> IdealVerdict:
    """inf_γ μ(xγy) = max(μ(x), μ(y)) and sup_γ ν(xγy) = min(ν(x), ν(y)) for all x, y.

    Raises NotAnIFI when A is not an IF ideal in the first place.
    """
    _require_ifi(G, A)
    for x, y in product(range(G.size), repeat=2):
        if _inf_mu(G, A, x, y) != max(A.mu[x], A.mu[y]):
            return IdealVerdict(False, (G.carrier[x], G.carrier[y]), "mu-prime")
        if _sup_nu(G, A, x, y) != min(A.nu[x], A.nu[y]):
            return IdealVerdict(False, (G.carrier[x], G.carrier[y]), "nu-prime")
    return HOLDS


def is_ifspi(G: GammaSemigroup, A: IFS) -> IdealVerdict:
    """μ(x) ≥ inf_γ μ(xγx) and ν(x) ≤ sup_γ ν(xγx) for all x."""
    _require_ifi(G, A)
    for x in range(G.size):
        if A.mu[x] < _inf_mu(G, A, x, x):
            return IdealVerdict(False, (G.carrier[x],), "mu-semiprime")
        if A.nu[x] > _sup_nu(G, A, x, x):
            return IdealVerdict(False, (G.carrier[x],), "nu-semiprime")
    return HOLDS


def omega_set(G: GammaSemigroup, A: IFS, omega) -> frozenset[str]:
    """{x : μ(x) ≥ μ(ω) and ν(x) ≤ ν(ω)} for an IF ideal A."""
    _require_ifi(G, A)
    w = G.s_index(omega)
    return frozenset(x for x, m, v in A.items() if m >= A.mu[w] and v <= A.nu[w])


def zero_set(G: GammaSemigroup, A: IFS) -> frozenset[str]:
    """{x : (μ(x), ν(x)) = (μ(0), ν(0))} for the designated zero of G."""
    if G.zero is None:
        raise ZeroRequired("the Γ-semigroup has no designated zero")
    _require_ifi(G, A)
    z = G.zero_index
    return frozenset(x for x, m, v in A.items() if m == A.mu[z] and v == A.nu[z])
