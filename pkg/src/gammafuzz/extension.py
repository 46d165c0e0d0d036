"""Extension of an IFS by an element: ⟨x, A⟩(y) = (inf_γ μ(xγy), sup_γ ν(xγy))."""

from __future__ import annotations

from .errors import NotCommutative, SumViolationInExtension
from .gamma import GammaSemigroup, is_commutative
from .ideals import IdealVerdict, _check, _inf_mu, _require_ifi, _sup_nu, is_ifi, is_ifpi, is_ifri, is_ifspi
from .ifs import IFS, ONE


def extend(G: GammaSemigroup, x, A: IFS) -> IFS:
    _check(G, A)
    ix = G.s_index(x)
    mu = tuple(_inf_mu(G, A, ix, y) for y in range(G.size))
    nu = tuple(_sup_nu(G, A, ix, y) for y in range(G.size))
    # min μ + max ν is bounded by μ + ν at the γ attaining max ν, so this
    # cannot fire; kept as a guard on the IFS invariant.
    for y, (m, v) in enumerate(zip(mu, nu)):
        if m + v > ONE:
            raise SumViolationInExtension(
                f"extension by {x} violates mu + nu <= 1 at {G.carrier[y]}"
            )
    return IFS(G.carrier, mu, nu)


def _require_commutative(G: GammaSemigroup) -> None:
    if not is_commutative(G):
        raise NotCommutative("this preservation property is only claimed for commutative Γ-semigroups")


def extension_is_ifi(G: GammaSemigroup, x, A: IFS) -> IdealVerdict:
    _require_commutative(G)
    return is_ifi(G, extend(G, x, A))


def extension_is_ifri(G: GammaSemigroup, x, A: IFS) -> IdealVerdict:
    """Needs no commutativity."""
    return is_ifri(G, extend(G, x, A))


def extension_is_ifpi(G: GammaSemigroup, x, A: IFS) -> IdealVerdict:
    _require_commutative(G)
    return is_ifpi(G, extend(G, x, A))


def extension_is_ifspi(G: GammaSemigroup, x, A: IFS) -> IdealVerdict:
    _require_commutative(G)
    return is_ifspi(G, extend(G, x, A))


def is_constant(A: IFS) -> bool:
    return len(set(A.mu)) <= 1 and len(set(A.nu)) <= 1


def is_extremal(A: IFS, x) -> bool:
    """μ(x) is the minimum of μ and ν(x) the maximum of ν."""
    return A.mu_of(x) == min(A.mu) and A.nu_of(x) == max(A.nu)


def extension_fixed_point_check(G: GammaSemigroup, A: IFS, x) -> bool:
    """Whether ⟨x, A⟩ = A, for an IF ideal A."""
    _require_ifi(G, A)
    return extend(G, x, A) == A


def fixed_point_candidates(A: IFS) -> list[str]:
    """Elements y with μ(y) not maximal in μ(S) and ν(y) not minimal in ν(S)."""
    top, bottom = max(A.mu), min(A.nu)
    return [y for y, m, v in A.items() if m != top and v != bottom]


def fixed_point_converse(G: GammaSemigroup, A: IFS) -> bool | None:
    """Evaluate "every candidate fixes A ⇒ A is an IF prime ideal" on an IF ideal A.

    Returns None when the premise is not met (no candidates at all, or some
    candidate moves A), otherwise whether A is an IF prime ideal.
    """
    _require_ifi(G, A)
    cands = fixed_point_candidates(A)
    if not cands or any(extend(G, y, A) != A for y in cands):
        return None
    return bool(is_ifpi(G, A))
