"""Intuitionistic fuzzy sets over a finite carrier, with exact rational degrees."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from functools import cached_property

from .errors import (
    CarrierMismatch,
    DegreeError,
    EmptyFamily,
    InvalidParameters,
    MissingValue,
    ParameterOrderViolation,
    SumExceedsOne,
    UnknownElement,
)

Degree = Fraction
ZERO = Fraction(0)
ONE = Fraction(1)


def degree(value) -> Fraction:
    """Coerce ``value`` to an exact degree in [0, 1].

    Accepts Fraction, int, Decimal and strings such as ``"3/4"`` or ``"0.1"``
    (parsed exactly as 1/10). Floats are rejected: they are not exact.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise DegreeError(f"degrees must be exact, got {type(value).__name__} {value!r}")
    if isinstance(value, Fraction):
        d = value
    elif isinstance(value, (int, Decimal)):
        d = Fraction(value)
    elif isinstance(value, str):
        try:
            d = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DegreeError(f"cannot parse degree {value!r}") from None
    else:
        raise DegreeError(f"unsupported degree type {type(value).__name__}")
    if not ZERO <= d <= ONE:
        raise DegreeError(f"degree {d} outside [0, 1]")
    return d


def format_degree(d: Fraction) -> str:
    return str(d)


def carrier_of(space) -> tuple[str, ...]:
    """Carrier ids of a GammaSemigroup, an IFS or a plain sequence."""
    c = getattr(space, "carrier", None)
    if c is not None:
        return tuple(c)
    return tuple(str(x) for x in space)


@dataclass(frozen=True)
class IFS:
    """Pair (μ, ν) of degree maps, stored positionally along ``carrier``.

    Construct through :func:`ifs_build` unless the values are already known
    to be valid degrees.
    """

    carrier: tuple[str, ...]
    mu: tuple[Fraction, ...]
    nu: tuple[Fraction, ...]

    def __post_init__(self):
        assert len(self.mu) == len(self.nu) == len(self.carrier)
        assert all(m + n <= ONE for m, n in zip(self.mu, self.nu)), "sum invariant broken"

    @cached_property
    def _pos(self) -> dict[str, int]:
        return {x: i for i, x in enumerate(self.carrier)}

    def _index(self, x) -> int:
        try:
            return self._pos[str(x)]
        except KeyError:
            raise UnknownElement(f"{x!r} is not in the carrier") from None

    def mu_of(self, x) -> Fraction:
        return self.mu[self._index(x)]

    def nu_of(self, x) -> Fraction:
        return self.nu[self._index(x)]

    def __getitem__(self, x) -> tuple[Fraction, Fraction]:
        i = self._index(x)
        return self.mu[i], self.nu[i]

    def items(self) -> Iterator[tuple[str, Fraction, Fraction]]:
        return zip(self.carrier, self.mu, self.nu)


def _values(carrier, values, name) -> tuple[Fraction, ...]:
    if isinstance(values, Mapping):
        norm = {str(k): v for k, v in values.items()}
        extra = set(norm) - set(carrier)
        if extra:
            raise UnknownElement(f"{name} has values for unknown elements {sorted(extra)}")
        missing = [x for x in carrier if x not in norm]
        if missing:
            raise MissingValue(f"{name} has no value for {missing[0]!r}")
        return tuple(degree(norm[x]) for x in carrier)
    values = tuple(values)
    if len(values) != len(carrier):
        raise MissingValue(f"{name} has {len(values)} values for {len(carrier)} elements")
    return tuple(degree(v) for v in values)


def ifs_build(space, mu: Mapping | Sequence, nu: Mapping | Sequence) -> IFS:
    """Validated IFS from per-element μ and ν values (mapping by id, or sequence)."""
    carrier = carrier_of(space)
    m = _values(carrier, mu, "mu")
    n = _values(carrier, nu, "nu")
    for x, a, b in zip(carrier, m, n):
        if a + b > ONE:
            raise SumExceedsOne(x, a, b)
    return IFS(carrier, m, n)


def constant_ifs(space, mu, nu) -> IFS:
    carrier = carrier_of(space)
    return ifs_build(carrier, [mu] * len(carrier), [nu] * len(carrier))


def empty_ifs(space) -> IFS:
    """The IFS (0, 1) everywhere."""
    carrier = carrier_of(space)
    return IFS(carrier, (ZERO,) * len(carrier), (ONE,) * len(carrier))


def is_nonempty(A: IFS) -> bool:
    """μ is not identically 0 and ν is not identically 1."""
    return any(A.mu) and any(v < ONE for v in A.nu)


def _same(A: IFS, B: IFS) -> None:
    if A.carrier != B.carrier:
        raise CarrierMismatch("IFSs live on different carriers")


def ifs_leq(A: IFS, B: IFS) -> bool:
    """A ⊆ B: μ_A ≤ μ_B and ν_A ≥ ν_B pointwise."""
    _same(A, B)
    return all(a <= b for a, b in zip(A.mu, B.mu)) and all(a >= b for a, b in zip(A.nu, B.nu))


def ifs_eq(A: IFS, B: IFS) -> bool:
    _same(A, B)
    return A.mu == B.mu and A.nu == B.nu


def ifs_complement(A: IFS) -> IFS:
    return IFS(A.carrier, A.nu, A.mu)


def ifs_box(A: IFS) -> IFS:
    return IFS(A.carrier, A.mu, tuple(ONE - m for m in A.mu))


def ifs_diamond(A: IFS) -> IFS:
    return IFS(A.carrier, tuple(ONE - v for v in A.nu), A.nu)


def ifs_meet(A: IFS, B: IFS) -> IFS:
    _same(A, B)
    return IFS(A.carrier, tuple(map(min, A.mu, B.mu)), tuple(map(max, A.nu, B.nu)))


def ifs_join(A: IFS, B: IFS) -> IFS:
    _same(A, B)
    return IFS(A.carrier, tuple(map(max, A.mu, B.mu)), tuple(map(min, A.nu, B.nu)))


def ifs_family_inf(family: Iterable[IFS]) -> IFS:
    family = list(family)
    if not family:
        raise EmptyFamily("inf of an empty family is undefined")
    out = family[0]
    for B in family[1:]:
        out = ifs_meet(out, B)
    return out


def ifs_family_sup(family: Iterable[IFS]) -> IFS:
    family = list(family)
    if not family:
        raise EmptyFamily("sup of an empty family is undefined")
    out = family[0]
    for B in family[1:]:
        out = ifs_join(out, B)
    return out


def upper_cut(A: IFS, t) -> frozenset[str]:
    """{x : μ(x) ≥ t}."""
    t = degree(t)
    return frozenset(x for x, m in zip(A.carrier, A.mu) if m >= t)


def lower_cut(A: IFS, t) -> frozenset[str]:
    """{x : ν(x) ≤ t}."""
    t = degree(t)
    return frozenset(x for x, v in zip(A.carrier, A.nu) if v <= t)


@dataclass(frozen=True)
class LevelCut:
    threshold: Fraction
    kind: str
    members: frozenset[str]


def level_cut(A: IFS, t, kind: str = "upper") -> LevelCut:
    if kind == "upper":
        return LevelCut(degree(t), kind, upper_cut(A, t))
    if kind == "lower":
        return LevelCut(degree(t), kind, lower_cut(A, t))
    raise InvalidParameters(f"kind must be 'upper' or 'lower', got {kind!r}")


def thresholds(A: IFS) -> list[Fraction]:
    """Im(μ) ∪ Im(ν) ∪ {0, 1}, ascending: the only thresholds where cuts change."""
    return sorted(set(A.mu) | set(A.nu) | {ZERO, ONE})


def support(A: IFS) -> frozenset[str]:
    """{x : μ(x) > 0 and ν(x) < 1}."""
    return frozenset(x for x, m, v in A.items() if m > ZERO and v < ONE)


def step_ifs(space, I: Iterable, alpha0, alpha1, beta0, beta1) -> IFS:
    """(α0, β0) on I and (α1, β1) elsewhere; needs α1 < α0, β0 < β1, αi + βi ≤ 1."""
    a0, a1, b0, b1 = (degree(v) for v in (alpha0, alpha1, beta0, beta1))
    if not (a1 < a0 and b0 < b1):
        raise ParameterOrderViolation(
            f"need alpha1 < alpha0 and beta0 < beta1, got {a1}, {a0}, {b0}, {b1}"
        )
    for a, b, where in ((a0, b0, "inside"), (a1, b1, "outside")):
        if a + b > ONE:
            raise SumExceedsOne(where, a, b)
    carrier = carrier_of(space)
    members = {str(x) for x in I}
    unknown = members - set(carrier)
    if unknown:
        raise UnknownElement(f"unknown elements {sorted(unknown)}")
    inside = [x in members for x in carrier]
    return IFS(
        carrier,
        tuple(a0 if f else a1 for f in inside),
        tuple(b0 if f else b1 for f in inside),
    )


def characteristic_pair(space, P: Iterable) -> IFS:
    """(χ_P, 1 − χ_P): (1, 0) on P and (0, 1) off P."""
    return step_ifs(space, P, ONE, ZERO, ZERO, ONE)
