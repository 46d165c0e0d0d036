"""Seeded instance and IFS generators for the verification harness.

Every stream is a pure function of its generator settings and seed.
Γ-semigroups come from three families: the bundled catalog, modular
families Z_n with a closed Γ ⊆ Z_n, and single-entry mutations of
known-valid tables that are kept only when they re-validate.
"""

from __future__ import annotations

import logging
import random
from collections.abc import Iterator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from itertools import combinations, product

from ..errors import CapExceeded, InvalidParameters, ValidationError
from ..formats import parse_gsg, parse_ifs
from ..gamma import (
    GammaSemigroup,
    enumerate_ideals,
    is_commutative,
    is_prime_ideal,
    is_regular,
    is_semiprime_ideal,
    make_modular,
    modular_gamma_closure,
    validate,
)
from ..ideals import is_if_ideal, is_ifpi, is_ifspi
from ..ifs import IFS, is_nonempty

log = logging.getLogger(__name__)

DEFAULT_GRID = tuple(Fraction(v) for v in ("0", "1/10", "1/4", "1/2", "3/4", "9/10", "1"))
MAX_SIZE = 8
MAX_GAMMA = 4
FAMILIES = ("modular", "table-mutation", "catalog")
CONSTRAINTS = ("none", "ifli", "ifri", "ifi", "ifpi", "ifspi")


@dataclass(frozen=True)
class InstanceGenerator:
    """Specification of a Γ-semigroup stream.

    ``sizes`` bounds |S| (inclusive); ``max_gamma`` bounds |Γ| for generated
    instances (default 4). The curated catalog is replayed whole unless
    ``max_gamma`` is given explicitly; catalog entries outside the bounds
    are then skipped.
    """

    family: str = "catalog"
    sizes: tuple[int, int] = (1, MAX_SIZE)
    max_gamma: int | None = None
    grid: tuple[Fraction, ...] = DEFAULT_GRID
    seed: int = 0
    names: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidParameters(f"family must be one of {FAMILIES}, got {self.family!r}")
        lo, hi = self.sizes
        if lo < 1 or hi < lo:
            raise InvalidParameters(f"bad size bounds {self.sizes}")
        if hi > MAX_SIZE or self.gamma_cap > MAX_GAMMA:
            raise CapExceeded(f"size bounds exceed the caps |S| <= {MAX_SIZE}, |Γ| <= {MAX_GAMMA}")
        if any(not 0 <= g <= 1 for g in self.grid):
            raise InvalidParameters("degree grid must lie in [0, 1]")

    @property
    def gamma_cap(self) -> int:
        return MAX_GAMMA if self.max_gamma is None else self.max_gamma


# catalog


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    tags: tuple[str, ...]
    G: GammaSemigroup


@lru_cache(maxsize=None)
def load_catalog() -> tuple[CatalogEntry, ...]:
    root = resources.files("gammafuzz") / "catalog"
    out = []
    for line in (root / "index.txt").read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].split()
        if not line:
            continue
        name, *tags = line
        G = parse_gsg((root / f"{name}.gsg").read_text(encoding="utf-8"))
        out.append(CatalogEntry(name, tuple(tags), G))
    return tuple(out)


def catalog_instance(name: str) -> GammaSemigroup:
    for entry in load_catalog():
        if entry.name == name:
            return entry.G
    raise KeyError(name)


def catalog_ifs(name: str) -> IFS:
    """A bundled IFS fixture, e.g. ``capped-int-A`` on the ``capped-int`` instance."""
    root = resources.files("gammafuzz") / "catalog"
    space = catalog_instance(name.rsplit("-", 1)[0])
    return parse_ifs((root / f"{name}.ifs").read_text(encoding="utf-8"), space)


def _catalog_pool(spec: InstanceGenerator) -> list[GammaSemigroup]:
    lo, hi = spec.sizes
    pool = [
        e.G
        for e in load_catalog()
        if lo <= e.G.size <= hi
        and (spec.max_gamma is None or e.G.gamma_size <= spec.max_gamma)
        and (spec.names is None or e.name in spec.names)
    ]
    if not pool:
        raise InvalidParameters("no catalog instance fits the size bounds")
    return pool


# modular family


@lru_cache(maxsize=None)
def closed_gammas(n: int, max_gamma: int = MAX_GAMMA) -> tuple[tuple[int, ...], ...]:
    """All Γ ⊆ Z_n with Γ·Z_n·Γ ⊆ Γ and |Γ| ≤ max_gamma, in lexicographic order."""
    out = []
    for k in range(1, min(n, max_gamma) + 1):
        for sub in combinations(range(n), k):
            if modular_gamma_closure(n, sub) == list(sub):
                out.append(sub)
    return tuple(out)


@lru_cache(maxsize=256)
def _modular(n: int, gammas: tuple[int, ...]) -> GammaSemigroup:
    return make_modular(n, gammas)


def random_modular(rng: random.Random, spec: InstanceGenerator) -> GammaSemigroup:
    lo, hi = spec.sizes
    n = rng.randint(lo, hi)
    return _modular(n, rng.choice(closed_gammas(n, spec.gamma_cap)))


# table mutation


def relabel(G: GammaSemigroup, rng: random.Random) -> GammaSemigroup:
    """An isomorphic copy with carrier and Γ positions shuffled (ids travel along)."""
    ps = list(range(G.size))
    pg = list(range(G.gamma_size))
    rng.shuffle(ps)
    rng.shuffle(pg)
    inv_s = {old: new for new, old in enumerate(ps)}
    inv_g = {old: new for new, old in enumerate(pg)}
    sgs = tuple(
        tuple(tuple(inv_s[G.sgs[a][g][b]] for b in ps) for g in pg) for a in ps
    )
    gsg = tuple(
        tuple(tuple(inv_g[G.gsg[g][a][h]] for h in pg) for a in ps) for g in pg
    )
    return GammaSemigroup(
        tuple(G.carrier[i] for i in ps), tuple(G.gamma[i] for i in pg), sgs, gsg, G.zero
    )


def _set_entry(table, i, j, k, value):
    rows = [list(map(list, plane)) for plane in table]
    rows[i][j][k] = value
    return tuple(tuple(tuple(r) for r in plane) for plane in rows)


def mutate(G: GammaSemigroup, rng: random.Random, tries: int = 40) -> GammaSemigroup | None:
    """Change one table entry at random until the result validates, or give up."""
    n, m = G.size, G.gamma_size
    for _ in range(tries):
        if rng.random() < 0.75 or m == 1:
            a, g, b = rng.randrange(n), rng.randrange(m), rng.randrange(n)
            v = rng.randrange(n)
            if v == G.sgs[a][g][b]:
                continue
            cand = GammaSemigroup(G.carrier, G.gamma, _set_entry(G.sgs, a, g, b, v), G.gsg, G.zero)
        else:
            g, a, h = rng.randrange(m), rng.randrange(n), rng.randrange(m)
            v = rng.randrange(m)
            if v == G.gsg[g][a][h]:
                continue
            cand = GammaSemigroup(G.carrier, G.gamma, G.sgs, _set_entry(G.gsg, g, a, h, v), G.zero)
        for zero in ((cand.zero, None) if cand.zero is not None else (None,)):
            trial = GammaSemigroup(cand.carrier, cand.gamma, cand.sgs, cand.gsg, zero)
            try:
                validate(trial)
            except ValidationError:
                continue
            return trial
    return None


def random_mutant(rng: random.Random, spec: InstanceGenerator) -> GammaSemigroup:
    """A validated single-entry mutant of a relabelled catalog or modular instance.

    When no mutant of the chosen base validates, the relabelled base itself is
    returned (a relabelling is a perturbation that always re-validates).
    """
    if rng.random() < 0.5:
        base = rng.choice(_catalog_pool(spec))
    else:
        base = random_modular(rng, spec)
    base = relabel(base, rng)
    return mutate(base, rng) or base


def random_instance(rng: random.Random, spec: InstanceGenerator) -> GammaSemigroup:
    if spec.family == "catalog":
        return rng.choice(_catalog_pool(spec))
    if spec.family == "modular":
        return random_modular(rng, spec)
    return random_mutant(rng, spec)


def generate_gsemigroups(spec: InstanceGenerator) -> Iterator[GammaSemigroup]:
    """Endless deterministic stream; the catalog family replays the corpus in order first."""
    rng = random.Random(f"gsg:{spec.family}:{spec.seed}")
    if spec.family == "catalog":
        yield from _catalog_pool(spec)
    while True:
        yield random_instance(rng, spec)


# crisp ideal families, cached per instance


@lru_cache(maxsize=512)
def ideal_family(G: GammaSemigroup, kind: str) -> tuple[frozenset[str], ...]:
    """Crisp sets of the given kind: left/right/two-sided ideals, prime or semiprime ideals."""
    if kind in ("left", "right", "two-sided"):
        return tuple(enumerate_ideals(G, kind))
    ideals = enumerate_ideals(G)
    if kind == "prime":
        return tuple(I for I in ideals if is_prime_ideal(G, I))
    if kind == "semiprime":
        return tuple(I for I in ideals if is_semiprime_ideal(G, I))
    raise InvalidParameters(f"unknown ideal kind {kind!r}")


@lru_cache(maxsize=512)
def commutative(G: GammaSemigroup) -> bool:
    return is_commutative(G)


@lru_cache(maxsize=512)
def regular(G: GammaSemigroup) -> bool:
    return bool(is_regular(G))


# IFS generation

_FAMILY_OF = {"ifli": "left", "ifri": "right", "ifi": "two-sided", "ifpi": "prime", "ifspi": "semiprime"}
_SIDE_OF = {"ifli": "left", "ifri": "right", "ifi": "two-sided"}


def random_ifs(G, rng: random.Random, grid=DEFAULT_GRID) -> IFS:
    """Unconstrained: μ from the grid, then ν from the grid values keeping μ + ν ≤ 1."""
    mu = [rng.choice(grid) for _ in range(G.size)]
    nu = [rng.choice([g for g in grid if g + m <= 1]) for m in mu]
    return IFS(G.carrier, tuple(mu), tuple(nu))


def random_subset(G, rng: random.Random, nonempty: bool = True) -> frozenset[str]:
    while True:
        out = frozenset(x for x in G.carrier if rng.random() < 0.5)
        if out or not nonempty:
            return out


def random_chain(rng: random.Random, family, max_len: int = 3) -> list[frozenset[str]]:
    """A strictly increasing chain drawn from ``family`` by a random upward walk."""
    chain = [rng.choice(family)]
    while len(chain) < max_len and rng.random() < 0.6:
        bigger = [J for J in family if chain[-1] < J]
        if not bigger:
            break
        chain.append(rng.choice(bigger))
    return chain


def _levels(rng: random.Random, k: int, grid) -> tuple[list[Fraction], list[Fraction]]:
    """k μ-levels non-increasing and k ν-levels non-decreasing with pairwise sums ≤ 1."""
    for _ in range(20):
        mu = sorted((rng.choice(grid) for _ in range(k)), reverse=True)
        nu = sorted(rng.choice(grid) for _ in range(k))
        if all(a + b <= 1 for a, b in zip(mu, nu)):
            return mu, nu
    mu = sorted((rng.choice(grid) for _ in range(k)), reverse=True)
    return mu, [1 - a for a in mu]


def chain_ifs(G, rng: random.Random, chain, grid=DEFAULT_GRID) -> IFS:
    """Multi-step IFS: level i on C_i minus C_{i-1}, the last level outside the chain."""
    mu_l, nu_l = _levels(rng, len(chain) + 1, grid)
    mu, nu = [], []
    for x in G.carrier:
        i = next((j for j, C in enumerate(chain) if x in C), len(chain))
        mu.append(mu_l[i])
        nu.append(nu_l[i])
    return IFS(G.carrier, tuple(mu), tuple(nu))


def constant(G, rng: random.Random, grid=DEFAULT_GRID) -> IFS:
    m = rng.choice(grid)
    v = rng.choice([g for g in grid if g + m <= 1])
    return IFS(G.carrier, (m,) * G.size, (v,) * G.size)


def satisfies(G, A: IFS, constraint: str) -> bool:
    if constraint == "none":
        return True
    if not is_nonempty(A):
        return False
    if constraint in _SIDE_OF:
        return bool(is_if_ideal(G, A, _SIDE_OF[constraint]))
    if not is_if_ideal(G, A, "two-sided"):
        return False
    return bool(is_ifpi(G, A) if constraint == "ifpi" else is_ifspi(G, A))


def draw_ifs(G, rng: random.Random, constraint: str = "none", grid=DEFAULT_GRID, tries: int = 30):
    """One IFS meeting ``constraint``, or None when the filter yields nothing.

    Constrained draws mix constructive families (chains of crisp ideals of the
    matching kind with stepped levels, constants, meets of two such) with plain
    random sampling, and keep the first candidate passing the predicate.
    """
    if constraint not in CONSTRAINTS:
        raise InvalidParameters(f"constraint must be one of {CONSTRAINTS}")
    if constraint == "none":
        return random_ifs(G, rng, grid)
    family = ideal_family(G, _FAMILY_OF[constraint])
    for _ in range(tries):
        r = rng.random()
        if family and r < 0.6:
            A = chain_ifs(G, rng, random_chain(rng, family), grid)
        elif family and r < 0.75:
            A1 = chain_ifs(G, rng, random_chain(rng, family), grid)
            A2 = chain_ifs(G, rng, random_chain(rng, family), grid)
            A = IFS(G.carrier, tuple(map(min, A1.mu, A2.mu)), tuple(map(max, A1.nu, A2.nu)))
        elif r < 0.85:
            A = constant(G, rng, grid)
        else:
            A = random_ifs(G, rng, grid)
        if satisfies(G, A, constraint):
            return A
    log.debug("no IFS satisfying %s found on an instance of size %d", constraint, G.size)
    return None


def generate_ifs(G, spec: InstanceGenerator, constraint: str = "none") -> Iterator[IFS]:
    """Endless deterministic stream of IFSs meeting ``constraint``.

    Stops (with a warning) if the filter yields nothing in 50 consecutive attempts.
    """
    rng = random.Random(f"ifs:{constraint}:{spec.seed}")
    misses = 0
    while misses < 50:
        A = draw_ifs(G, rng, constraint, spec.grid)
        if A is None:
            misses += 1
            continue
        misses = 0
        yield A
    log.warning("filter yield is zero for constraint %s", constraint)


def admissible_pairs(grid=DEFAULT_GRID) -> list[tuple[Fraction, Fraction]]:
    return [(m, v) for m in grid for v in grid if m + v <= 1]


def enumerate_ifs(G, grid=DEFAULT_GRID) -> Iterator[IFS]:
    """Every IFS with degrees from ``grid`` (μ + ν ≤ 1 pointwise), in lexicographic order."""
    pairs = admissible_pairs(grid)
    for combo in product(pairs, repeat=G.size):
        yield IFS(G.carrier, tuple(p[0] for p in combo), tuple(p[1] for p in combo))
