"""Finite Γ-semigroups: construction, axiom validation and crisp ideal theory.

Elements are opaque string ids. Internally every table is stored by
position (declaration order), which is also the canonical order used for
iteration, witness search and report output.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .errors import (
    AssociativityViolation,
    CarrierTooLarge,
    DuplicateElement,
    EmptySubset,
    InvalidParameters,
    InvalidZero,
    MissingTableEntry,
    NotAnIdeal,
    UnknownElement,
)

ID_PATTERN = re.compile(r"[A-Za-z0-9_-]+\Z")
SIDES = ("left", "right", "two-sided")
PRIME_CRITERIA = ("pairs", "sandwich", "subsets")

#: hard cap on |S| for anything that enumerates all subsets of the carrier
ENUMERATION_CAP = 12

Table = tuple[tuple[tuple[int, ...], ...], ...]
CrispSubset = frozenset


@dataclass(frozen=True)
class GammaSemigroup:
    """A validated finite Γ-semigroup. Build instances with :func:`build`.

    ``sgs[a][g][b]`` is the carrier position of ``aγb`` and ``gsg[g][a][h]``
    the Γ position of ``γaη``; all indices follow declaration order.
    """

    carrier: tuple[str, ...]
    gamma: tuple[str, ...]
    sgs: Table = field(repr=False)
    gsg: Table = field(repr=False)
    zero: str | None = None

    @cached_property
    def _s_pos(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.carrier)}

    @cached_property
    def _g_pos(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.gamma)}

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def gamma_size(self) -> int:
        return len(self.gamma)

    def s_index(self, x) -> int:
        try:
            return self._s_pos[str(x)]
        except KeyError:
            raise UnknownElement(f"{x!r} is not in the carrier") from None

    def g_index(self, g) -> int:
        try:
            return self._g_pos[str(g)]
        except KeyError:
            raise UnknownElement(f"{g!r} is not in Gamma") from None

    @cached_property
    def zero_index(self) -> int | None:
        return None if self.zero is None else self._s_pos[self.zero]

    def op_sgs(self, a, g, b) -> str:
        return self.carrier[self.sgs[self.s_index(a)][self.g_index(g)][self.s_index(b)]]

    def op_gsg(self, g, a, h) -> str:
        return self.gamma[self.gsg[self.g_index(g)][self.s_index(a)][self.g_index(h)]]

    def indices(self, subset: Iterable, *, allow_empty: bool = False) -> frozenset[int]:
        idx = frozenset(self.s_index(x) for x in subset)
        if not idx and not allow_empty:
            raise EmptySubset("subset must be non-empty")
        return idx

    def ids(self, positions: Iterable[int]) -> frozenset[str]:
        return frozenset(self.carrier[i] for i in positions)

    def ordered(self, subset: Iterable) -> tuple[str, ...]:
        """Members of ``subset`` in canonical (declaration) order."""
        return tuple(self.carrier[i] for i in sorted(self.indices(subset, allow_empty=True)))

    @cached_property
    def factorizations(self) -> tuple[tuple[tuple[int, int, int], ...], ...]:
        """Per carrier position x, every (u, γ, v) with uγv = x, canonical order."""
        found: list[list[tuple[int, int, int]]] = [[] for _ in self.carrier]
        n, m = self.size, self.gamma_size
        for u, g, v in product(range(n), range(m), range(n)):
            found[self.sgs[u][g][v]].append((u, g, v))
        return tuple(tuple(f) for f in found)

    @cached_property
    def _left_reach(self) -> tuple[int, ...]:
        # bitmask of SΓ{i} for each i
        masks = []
        for i in range(self.size):
            m = 0
            for s in range(self.size):
                for row in self.sgs[s]:
                    m |= 1 << row[i]
            masks.append(m)
        return tuple(masks)

    @cached_property
    def _right_reach(self) -> tuple[int, ...]:
        masks = []
        for i in range(self.size):
            m = 0
            for row in self.sgs[i]:
                for r in row:
                    m |= 1 << r
            masks.append(m)
        return tuple(masks)

    @cached_property
    def _ideal_masks(self) -> dict[str, tuple[int, ...]]:
        if self.size > ENUMERATION_CAP:
            raise CarrierTooLarge(f"|S| = {self.size} exceeds the enumeration cap {ENUMERATION_CAP}")
        out = {}
        for side in SIDES:
            # every ideal is a union of principal ones
            seen: set[int] = set()
            for p in {_closure_mask(self, 1 << i, side) for i in range(self.size)}:
                seen |= {s | p for s in seen}
                seen.add(p)
            out[side] = tuple(sorted(seen, key=lambda m: (bin(m).count("1"), _mask_key(m))))
        return out


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _to_mask(idx: Iterable[int]) -> int:
    m = 0
    for i in idx:
        m |= 1 << i
    return m


def _closure_mask(G: GammaSemigroup, mask: int, side: str) -> int:
    reach = []
    if side in ("left", "two-sided"):
        reach.append(G._left_reach)
    if side in ("right", "two-sided"):
        reach.append(G._right_reach)
    while True:
        new = mask
        for i in _mask_key(mask):
            for r in reach:
                new |= r[i]
        if new == mask:
            return mask
        mask = new


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise InvalidParameters(f"side must be one of {SIDES}, got {side!r}")


def _normalize_ids(ids: Sequence, role: str) -> tuple[str, ...]:
    out = tuple(str(x) for x in ids)
    if not out:
        raise InvalidParameters(f"{role} must be non-empty")
    for x in out:
        if not ID_PATTERN.match(x):
            raise InvalidParameters(f"invalid {role} id {x!r}")
    if len(set(out)) != len(out):
        dup = next(x for x in out if out.count(x) > 1)
        raise DuplicateElement(f"duplicate {role} id {dup!r}")
    return out


def _lookup_table(table, name: str) -> Callable:
    if callable(table):
        return lambda *k: table(*k)
    normalized = {tuple(str(p) for p in k): str(v) for k, v in table.items()}

    def get(*k):
        try:
            return normalized[k]
        except KeyError:
            raise MissingTableEntry(f"{name} table has no entry for {' '.join(k)}") from None

    return get


def build(
    carrier: Sequence,
    gamma: Sequence,
    sgs_table: Mapping | Callable,
    gsg_table: Mapping | Callable,
    zero=None,
) -> GammaSemigroup:
    """Construct a Γ-semigroup and validate both associative laws and the zero.

    Tables are mappings keyed by id triples (``(a, g, b) -> c``) or callables
    taking three ids. Raises MissingTableEntry, AssociativityViolation or
    InvalidZero.
    """
    S = _normalize_ids(carrier, "carrier")
    Gm = _normalize_ids(gamma, "gamma")
    s_pos = {x: i for i, x in enumerate(S)}
    g_pos = {g: i for i, g in enumerate(Gm)}
    get_sgs = _lookup_table(sgs_table, "sgs")
    get_gsg = _lookup_table(gsg_table, "gsg")

    def resolve(value, pos, role, key):
        try:
            return pos[str(value)]
        except KeyError:
            raise UnknownElement(f"{role} table maps {' '.join(key)} to unknown id {value!r}") from None

    sgs = tuple(
        tuple(tuple(resolve(get_sgs(a, g, b), s_pos, "sgs", (a, g, b)) for b in S) for g in Gm)
        for a in S
    )
    gsg = tuple(
        tuple(tuple(resolve(get_gsg(g, a, h), g_pos, "gsg", (g, a, h)) for h in Gm) for a in S)
        for g in Gm
    )
    if zero is not None:
        zero = str(zero)
        if zero not in s_pos:
            raise InvalidZero(f"zero {zero!r} is not in the carrier")
    G = GammaSemigroup(S, Gm, sgs, gsg, zero)
    validate(G)
    return G


def validate(G: GammaSemigroup) -> None:
    """Check both associative laws exhaustively and the zero, if designated.

    The first failing tuple in canonical order is reported.
    """
    T = np.array(G.sgs, dtype=np.intp)  # (n, m, n)
    U = np.array(G.gsg, dtype=np.intp)  # (m, n, m)
    n, m = G.size, G.gamma_size
    a = np.arange(n)[:, None, None, None, None]
    al = np.arange(m)[None, :, None, None, None]
    b = np.arange(n)[None, None, :, None, None]
    be = np.arange(m)[None, None, None, :, None]
    c = np.arange(n)[None, None, None, None, :]

    # law 1 over (a, α, b, β, c)
    left = T[T[a, al, b], be, c]
    mid = T[a, U[al, b, be], c]
    right = T[a, al, T[b, be, c]]
    bad = (left != mid) | (mid != right)
    if bad.any():
        pos = np.unravel_index(int(np.argmax(bad)), bad.shape)
        ia, ial, ib, ibe, ic = (int(p) for p in pos)
        vals = (left[pos], mid[pos], right[pos])
        eq = "(aαb)βc = a(αbβ)c" if vals[0] != vals[1] else "a(αbβ)c = aα(bβc)"
        raise AssociativityViolation(
            1,
            (G.carrier[ia], G.gamma[ial], G.carrier[ib], G.gamma[ibe], G.carrier[ic]),
            eq,
            tuple(G.carrier[int(v)] for v in vals),
        )

    # law 2 over (α, a, β, b, γ)
    g1 = np.arange(m)[:, None, None, None, None]
    x = np.arange(n)[None, :, None, None, None]
    g2 = np.arange(m)[None, None, :, None, None]
    y = np.arange(n)[None, None, None, :, None]
    g3 = np.arange(m)[None, None, None, None, :]
    left = U[g1, T[x, g2, y], g3]
    mid = U[U[g1, x, g2], y, g3]
    right = U[g1, x, U[g2, y, g3]]
    bad = (left != mid) | (mid != right)
    if bad.any():
        pos = np.unravel_index(int(np.argmax(bad)), bad.shape)
        i1, ix, i2, iy, i3 = (int(p) for p in pos)
        vals = (left[pos], mid[pos], right[pos])
        eq = "α(aβb)γ = (αaβ)bγ" if vals[0] != vals[1] else "(αaβ)bγ = αa(βbγ)"
        raise AssociativityViolation(
            2,
            (G.gamma[i1], G.carrier[ix], G.gamma[i2], G.carrier[iy], G.gamma[i3]),
            eq,
            tuple(G.gamma[int(v)] for v in vals),
        )

    z = G.zero_index
    if z is not None:
        for i, g in product(range(n), range(m)):
            if G.sgs[z][g][i] != z or G.sgs[i][g][z] != z:
                raise InvalidZero(
                    f"{G.zero} is not absorbing: fails with {G.carrier[i]} and {G.gamma[g]}"
                )


def modular_gamma_closure(n: int, gens: Iterable[int]) -> list[int]:
    """Smallest Γ ⊆ Z_n containing ``gens`` with γ·a·η mod n ∈ Γ for all a."""
    out = {int(g) % n for g in gens}
    while True:
        new = {(g * a * h) % n for g in out for h in out for a in range(n)} | out
        if new == out:
            return sorted(out)
        out = new


def make_modular(n: int, gamma_subset: Iterable[int], *, close: bool = False) -> GammaSemigroup:
    """Z_n with both operations given by the product of the three arguments mod n.

    The Γ-operation only lands in Γ when Γ·Z_n·Γ ⊆ Γ (so 0 ∈ Γ); otherwise
    InvalidParameters is raised, or with ``close=True`` Γ is replaced by its
    closure (e.g. {2} in Z_4 becomes {0, 2}).
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters(f"n must be a positive integer, got {n!r}")
    gs = sorted({int(g) for g in gamma_subset})
    if not gs or any(not 0 <= g < n for g in gs):
        raise InvalidParameters(f"gamma subset must be a non-empty subset of Z_{n}")
    closure = modular_gamma_closure(n, gs)
    if closure != gs:
        if not close:
            raise InvalidParameters(
                f"Gamma {gs} is not closed under g*a*h mod {n}; its closure is {closure}"
            )
        gs = closure
    return build(
        range(n),
        gs,
        lambda a, g, b: (int(a) * int(g) * int(b)) % n,
        lambda g, a, h: (int(g) * int(a) * int(h)) % n,
        zero=0,
    )


# crisp ideal theory


def _is_ideal_idx(G: GammaSemigroup, idx: frozenset[int], side: str) -> bool:
    mask = _to_mask(idx)
    return _closure_mask(G, mask, side) == mask


def is_ideal(G: GammaSemigroup, I: Iterable, side: str = "two-sided") -> bool:
    _check_side(side)
    return _is_ideal_idx(G, G.indices(I), side)


def ideal_product(G: GammaSemigroup, A: Iterable, B: Iterable) -> frozenset[str]:
    """AΓB = {aγb : a ∈ A, γ ∈ Γ, b ∈ B}."""
    ia, ib = G.indices(A), G.indices(B)
    return G.ids({G.sgs[a][g][b] for a in ia for g in range(G.gamma_size) for b in ib})


def ideal_closure(G: GammaSemigroup, X: Iterable, side: str = "two-sided") -> frozenset[str]:
    """Smallest ideal (of the given side) containing X."""
    _check_side(side)
    mask = _closure_mask(G, _to_mask(G.indices(X)), side)
    return G.ids(_mask_key(mask))


def enumerate_ideals(G: GammaSemigroup, side: str = "two-sided") -> list[frozenset[str]]:
    """All ideals of the given side, sorted by size then canonical position.

    Raises CarrierTooLarge above ENUMERATION_CAP elements.
    """
    _check_side(side)
    return [G.ids(_mask_key(m)) for m in G._ideal_masks[side]]


def _require_ideal(G: GammaSemigroup, I: Iterable) -> frozenset[int]:
    idx = G.indices(I)
    if not _is_ideal_idx(G, idx, "two-sided"):
        raise NotAnIdeal(f"{set(G.ordered(I))} is not a two-sided ideal")
    return idx


def _all_in(G: GammaSemigroup, x: int, y: int, idx: frozenset[int]) -> bool:
    return all(G.sgs[x][g][y] in idx for g in range(G.gamma_size))


def _sandwich_in(G: GammaSemigroup, x: int, y: int, idx: frozenset[int]) -> bool:
    m = G.gamma_size
    return all(
        G.sgs[G.sgs[x][g][s]][d][y] in idx
        for g in range(m)
        for s in range(G.size)
        for d in range(m)
    )


def prime_failure(G: GammaSemigroup, I: Iterable, criterion: str = "pairs"):
    """Return a witness that I is not prime under ``criterion``, or None.

    ``pairs``: xΓy ⊆ I with x, y ∉ I, witness (x, y).
    ``sandwich``: xΓSΓy ⊆ I with x, y ∉ I, witness (x, y).
    ``subsets``: ideals A, B with AΓB ⊆ I, A ⊄ I, B ⊄ I, witness (A, B).
    """
    idx = _require_ideal(G, I)
    n = G.size
    if criterion == "pairs":
        test = _all_in
    elif criterion == "sandwich":
        test = _sandwich_in
    elif criterion == "subsets":
        ideals = G._ideal_masks["two-sided"]
        imask = _to_mask(idx)
        outside = [m for m in ideals if m & ~imask]
        for ma in outside:
            for mb in outside:
                prod = ideal_product(G, G.ids(_mask_key(ma)), G.ids(_mask_key(mb)))
                if G.indices(prod) <= idx:
                    return (G.ids(_mask_key(ma)), G.ids(_mask_key(mb)))
        return None
    else:
        raise InvalidParameters(f"criterion must be one of {PRIME_CRITERIA}")
    for x, y in product(range(n), repeat=2):
        if x not in idx and y not in idx and test(G, x, y, idx):
            return (G.carrier[x], G.carrier[y])
    return None


def is_prime_ideal(G: GammaSemigroup, I: Iterable, criterion: str = "pairs") -> bool:
    return prime_failure(G, I, criterion) is None


def semiprime_failure(G: GammaSemigroup, I: Iterable, criterion: str = "pairs"):
    """Witness x (or ideal A for ``subsets``) showing I is not semiprime, or None."""
    idx = _require_ideal(G, I)
    if criterion == "pairs":
        test = _all_in
    elif criterion == "sandwich":
        test = _sandwich_in
    elif criterion == "subsets":
        imask = _to_mask(idx)
        for ma in G._ideal_masks["two-sided"]:
            if ma & ~imask:
                A = G.ids(_mask_key(ma))
                if G.indices(ideal_product(G, A, A)) <= idx:
                    return A
        return None
    else:
        raise InvalidParameters(f"criterion must be one of {PRIME_CRITERIA}")
    for x in range(G.size):
        if x not in idx and test(G, x, x, idx):
            return G.carrier[x]
    return None


def is_semiprime_ideal(G: GammaSemigroup, I: Iterable, criterion: str = "pairs") -> bool:
    return semiprime_failure(G, I, criterion) is None


@dataclass(frozen=True)
class Regularity:
    """Outcome of :func:`is_regular`; truthy iff every element is regular."""

    regular: bool
    witnesses: dict[str, tuple[str, str, str]]
    failing: str | None = None

    def __bool__(self) -> bool:
        return self.regular


def is_regular(G: GammaSemigroup) -> Regularity:
    """Search, for every c, the first (γ1, x, γ2) with c = cγ1xγ2c."""
    witnesses: dict[str, tuple[str, str, str]] = {}
    failing = None
    m, n = G.gamma_size, G.size
    for c in range(n):
        for g1, x, g2 in product(range(m), range(n), range(m)):
            if G.sgs[G.sgs[c][g1][x]][g2][c] == c:
                witnesses[G.carrier[c]] = (G.carrier[x], G.gamma[g1], G.gamma[g2])
                break
        else:
            if failing is None:
                failing = G.carrier[c]
    return Regularity(failing is None, witnesses, failing)


def crisp_extension(G: GammaSemigroup, x, A: Iterable) -> frozenset[str]:
    """{y : xγy ∈ A for every γ}; A may be any subset, including the empty one."""
    ix = G.s_index(x)
    idx = G.indices(A, allow_empty=True)
    return G.ids(y for y in range(G.size) if _all_in(G, ix, y, idx))


def power_element(G: GammaSemigroup, x, alpha, n: int) -> str:
    """(xα)^n x, i.e. x α x α ... x with n copies of "xα" in front of x."""
    if n < 0:
        raise InvalidParameters("n must be non-negative")
    ix, ia = G.s_index(x), G.g_index(alpha)
    r = ix
    for _ in range(n):
        r = G.sgs[ix][ia][r]
    return G.carrier[r]


def is_commutative(G: GammaSemigroup) -> bool:
    n = G.size
    return all(
        G.sgs[a][g][b] == G.sgs[b][g][a]
        for a in range(n)
        for b in range(a + 1, n)
        for g in range(G.gamma_size)
    )
