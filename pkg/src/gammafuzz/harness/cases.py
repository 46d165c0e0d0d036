"""Registry of checkable statements.

Each case draws a Γ-semigroup from a pool, draws inputs on it, filters by
the hypothesis and evaluates the conclusion. A conclusion returns None
when it holds and a one-line witness description otherwise.

``kind`` is one of ``theorem`` (a claim expected to hold), ``erratum`` (a
claim known to be false, kept so the search keeps demonstrating it) and
``probe`` (a side question about an example or an implementation guard).
``expect`` says whether the search should come back clean ("pass") or find
a counterexample ("fail").
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import EmptyIFS, GammaFuzzError, NotAnIdeal, NotAnIFI
from ..extension import extend, fixed_point_candidates, is_constant
from ..gamma import (
    PRIME_CRITERIA,
    SIDES,
    GammaSemigroup,
    crisp_extension,
    is_ideal,
    is_prime_ideal,
    is_semiprime_ideal,
    power_element,
)
from ..ideals import compose, ideal_inequalities, is_if_ideal, is_ifi, is_ifpi, is_ifspi, omega_set, whole_space, zero_set
from ..ifs import (
    IFS,
    characteristic_pair,
    ifs_box,
    ifs_diamond,
    ifs_family_inf,
    ifs_leq,
    ifs_meet,
    is_nonempty,
    lower_cut,
    step_ifs,
    support,
    thresholds,
    upper_cut,
)
from .generators import (
    DEFAULT_GRID,
    InstanceGenerator,
    catalog_ifs,
    commutative,
    draw_ifs,
    ideal_family,
    random_ifs,
    random_instance,
    random_subset,
    regular,
)

Inputs = dict
Witness = str | None


# instance pools


@dataclass(frozen=True)
class Pool:
    """Where a case's Γ-semigroups come from.

    ``mixed`` draws from the catalog, the modular family and table mutants;
    ``names`` restricts to named catalog entries. ``where`` filters draws
    (up to 30 attempts per sample).
    """

    family: str = "mixed"
    names: tuple[str, ...] | None = None
    where: Callable[[GammaSemigroup], bool] | None = field(default=None, compare=False)

    def draw(self, rng: random.Random) -> GammaSemigroup | None:
        for _ in range(30):
            if self.names is not None:
                G = random_instance(rng, InstanceGenerator("catalog", names=self.names))
            elif self.family == "mixed":
                r = rng.random()
                fam = "catalog" if r < 0.4 else "modular" if r < 0.75 else "table-mutation"
                G = random_instance(rng, InstanceGenerator(fam))
            else:
                G = random_instance(rng, InstanceGenerator(self.family))
            if self.where is None or self.where(G):
                return G
        return None


MIXED = Pool()
COMMUTATIVE = Pool(where=commutative)
REGULAR = Pool(where=regular)
NON_REGULAR = Pool(where=lambda G: not regular(G))


def _two_incomparable_primes(G) -> bool:
    primes = ideal_family(G, "prime")
    return any(not (P <= Q or Q <= P) for P in primes for Q in primes)


@dataclass(frozen=True)
class TheoremCase:
    id: str
    statement: str
    inputs: Callable[[GammaSemigroup, random.Random], Inputs | None]
    hypothesis: Callable[[GammaSemigroup, Inputs], bool]
    conclusion: Callable[[GammaSemigroup, Inputs], Witness]
    pool: Pool = MIXED
    kind: str = "theorem"
    expect: str = "pass"
    note: str | None = None


REGISTRY: dict[str, TheoremCase] = {}


def register(case_id: str, statement: str, inputs, conclusion, hypothesis=None, **kw) -> None:
    assert case_id not in REGISTRY, case_id
    REGISTRY[case_id] = TheoremCase(
        case_id, statement, inputs, hypothesis or (lambda G, inp: True), conclusion, **kw
    )


# small helpers

_CONSTRAINT = {"left": "ifli", "right": "ifri", "two-sided": "ifi"}


def holds(G, A: IFS, what: str) -> bool:
    """IF predicate as a plain bool; empty IFSs and non-ideals count as failing."""
    try:
        if what in SIDES:
            return bool(is_if_ideal(G, A, what))
        return bool(is_ifpi(G, A) if what == "ifpi" else is_ifspi(G, A))
    except (EmptyIFS, NotAnIFI):
        return False


def crisp_holds(G, I, what: str) -> bool:
    """Crisp counterpart: ideal of a side, or prime/semiprime two-sided ideal."""
    if not I:
        return False
    if what in SIDES:
        return is_ideal(G, I, what)
    try:
        return is_prime_ideal(G, I) if what == "ifpi" else is_semiprime_ideal(G, I)
    except NotAnIdeal:
        return False


def _show(S) -> str:
    return "{" + ",".join(sorted(S)) + "}"


def _pair(A: IFS, x) -> str:
    m, v = A[x]
    return f"({m},{v})"


def _first_diff(A: IFS, B: IFS) -> str:
    for x in A.carrier:
        if A[x] != B[x]:
            return f"at {x}: {_pair(A, x)} vs {_pair(B, x)}"
    return "identical"


def _mixed_ifs(G, rng, constraint: str) -> IFS | None:
    """Half constrained, half unconstrained, so both sides of a biconditional get exercised."""
    if rng.random() < 0.5:
        A = draw_ifs(G, rng, constraint)
        if A is not None:
            return A
    return random_ifs(G, rng)


def _family(G, rng, constraint: str, lo: int = 2, hi: int = 3):
    fam = [draw_ifs(G, rng, constraint) for _ in range(rng.randint(lo, hi))]
    return None if any(A is None for A in fam) else fam


def _element(G, rng) -> str:
    return rng.choice(G.carrier)


def _threshold_in_images(A: IFS, rng) -> Fraction:
    common = sorted(set(A.mu) & set(A.nu))
    return rng.choice(common) if common else rng.choice(thresholds(A))


def _step_params(rng):
    """(α0, α1, β0, β1) from the grid with α1 < α0, β0 < β1 and αi + βi ≤ 1."""
    grid = DEFAULT_GRID
    while True:
        a1, a0 = sorted(rng.sample(grid, 2))
        b0, b1 = sorted(rng.sample(grid, 2))
        if a0 + b0 <= 1 and a1 + b1 <= 1:
            return a0, a1, b0, b1


def _nonempty_cuts(A: IFS):
    for t in thresholds(A):
        for kind, cut in (("upper", upper_cut(A, t)), ("lower", lower_cut(A, t))):
            if cut:
                yield t, kind, cut


# crisp prime criteria


def _thm_2_1(G, inp):
    I = inp["I"]
    p = {c: is_prime_ideal(G, I, c) for c in PRIME_CRITERIA}
    s = {c: is_semiprime_ideal(G, I, c) for c in PRIME_CRITERIA}
    if len(set(p.values())) > 1:
        return f"prime criteria disagree on {_show(I)}: {p}"
    if len(set(s.values())) > 1:
        return f"semiprime criteria disagree on {_show(I)}: {s}"
    if p["pairs"] and not s["pairs"]:
        return f"{_show(I)} is prime but not semiprime"
    return None


register(
    "thm-2.1",
    "for an ideal I: prime via ideals, via xΓSΓy and via xΓy agree (same for semiprime); prime implies semiprime",
    lambda G, rng: {"I": rng.choice(ideal_family(G, "two-sided"))},
    _thm_2_1,
)


# IF ideals


def _meet_inputs(G, rng):
    side = rng.choice(SIDES)
    fam = _family(G, rng, _CONSTRAINT[side])
    return None if fam is None else {"side": side, "fam": fam}


def _prop_3_5(G, inp):
    M = ifs_family_inf(inp["fam"])
    v = ideal_inequalities(G, M, inp["side"])
    if not v:
        return f"meet {v.describe()}"
    if inp["side"] == "two-sided" and not is_nonempty(M):
        return "meet of IF ideals is empty"
    return None


register(
    "prop-3.5",
    "the meet of a family of IF left (right, two-sided) ideals satisfies the ideal inequalities; for two-sided ideals it is non-empty",
    _meet_inputs,
    _prop_3_5,
)


def _empty_meet_inputs(G, rng):
    side = rng.choice(("left", "right"))
    fam = [characteristic_pair(G, rng.choice(ideal_family(G, side))) for _ in range(2)]
    return {"side": side, "fam": fam}


register(
    "probe-3.5-empty-meet",
    "the meet of two one-sided IF ideals is non-empty",
    _empty_meet_inputs,
    lambda G, inp: None if is_nonempty(ifs_family_inf(inp["fam"])) else "meet is empty (μ ≡ 0 or ν ≡ 1)",
    pool=Pool(names=("right-zero-2", "left-zero-2", "left-zero-3", "rect-band-2x2")),
    kind="probe",
    expect="fail",
)


def _side_ifs(G, rng):
    side = rng.choice(SIDES)
    A = draw_ifs(G, rng, _CONSTRAINT[side])
    return None if A is None else {"side": side, "A": A}


def _modal(op, name):
    def concl(G, inp):
        B = op(inp["A"])
        return None if holds(G, B, inp["side"]) else f"{name}A is not an IF {inp['side']} ideal"

    return concl


register("lem-3.6", "□A is an IF ideal of the same side as A", _side_ifs, _modal(ifs_box, "□"))
register("lem-3.7", "◊A is an IF ideal of the same side as A", _side_ifs, _modal(ifs_diamond, "◊"))


def _side_mixed(G, rng):
    side = rng.choice(SIDES)
    return {"side": side, "A": _mixed_ifs(G, rng, _CONSTRAINT[side])}


def _thm_3_8(G, inp):
    A, side = inp["A"], inp["side"]
    lhs = holds(G, A, side)
    rhs = holds(G, ifs_box(A), side) and holds(G, ifs_diamond(A), side)
    return None if lhs == rhs else f"A ideal: {lhs}, □A and ◊A ideals: {rhs}"


register("thm-3.8", "A is an IF ideal iff □A and ◊A are", _side_mixed, _thm_3_8)


def _cut_inputs(G, rng):
    inp = _side_ifs(G, rng)
    if inp is not None:
        inp["t"] = _threshold_in_images(inp["A"], rng)
    return inp


def _thm_3_9(G, inp):
    A, t, side = inp["A"], inp["t"], inp["side"]
    for kind, cut in (("upper", upper_cut(A, t)), ("lower", lower_cut(A, t))):
        if not is_ideal(G, cut, side):
            return f"{kind} cut at {t} = {_show(cut)} is not a {side} ideal"
    return None


register(
    "thm-3.9",
    "for an IF ideal A and t in Im μ ∩ Im ν, U(μ;t) and L(ν;t) are crisp ideals of the same side",
    _cut_inputs,
    _thm_3_9,
    hypothesis=lambda G, inp: inp["t"] in inp["A"].mu and inp["t"] in inp["A"].nu,
)


def _cuts_are(G, A, what) -> bool:
    return is_nonempty(A) and all(crisp_holds(G, cut, what) for _, _, cut in _nonempty_cuts(A))


register(
    "thm-3.10",
    "a non-empty IFS whose non-empty level cuts are all ideals of a side is an IF ideal of that side",
    _side_mixed,
    lambda G, inp: None if holds(G, inp["A"], inp["side"]) else "cuts are ideals but A is not an IF ideal",
    hypothesis=lambda G, inp: _cuts_are(G, inp["A"], inp["side"]),
    note="non-emptiness of A is part of the hypothesis (IF ideals are non-empty by definition)",
)


def _prop_3_11(G, inp):
    A = inp["A"]
    W = omega_set(G, A, inp["omega"])
    if not is_ideal(G, W, "two-sided"):
        return f"A^{inp['omega']} = {_show(W)} is not an ideal"
    if G.zero is not None:
        Z = zero_set(G, A)
        if not is_ideal(G, Z, "two-sided"):
            return f"zero level set {_show(Z)} is not an ideal"
    return None


def _ifi_and_element(G, rng):
    A = draw_ifs(G, rng, "ifi")
    return None if A is None else {"A": A, "omega": _element(G, rng)}


register(
    "prop-3.11",
    "for an IF ideal A, {x : μ(x) ≥ μ(ω), ν(x) ≤ ν(ω)} and the zero level set are ideals",
    _ifi_and_element,
    _prop_3_11,
)


def _step_inputs(G, rng, kinds=None):
    side = rng.choice(kinds or SIDES)
    fam = ideal_family(G, side if side in SIDES else {"ifpi": "prime", "ifspi": "semiprime"}[side])
    I = rng.choice(fam) if fam and rng.random() < 0.7 else random_subset(G, rng)
    return {"side": side, "I": I, "params": list(_step_params(rng))}


def _thm_3_12(G, inp):
    I, side = inp["I"], inp["side"]
    a0, a1, b0, b1 = inp["params"]
    A = step_ifs(G, I, a0, a1, b0, b1)
    if not holds(G, A, side):
        return f"step IFS over {_show(I)} is not an IF {side} ideal"
    if upper_cut(A, a0) != I or lower_cut(A, b0) != I:
        return "cuts at α0 / β0 do not give back I"
    return None


register(
    "thm-3.12",
    "the two-level IFS over a crisp ideal I is an IF ideal with U(μ;α0) = I = L(ν;β0)",
    _step_inputs,
    _thm_3_12,
    hypothesis=lambda G, inp: is_ideal(G, inp["I"], inp["side"]),
    note="I is assumed to be an ideal of the chosen side",
)


def _char_inputs(G, rng, kinds=SIDES):
    what = rng.choice(kinds)
    fam = ideal_family(G, what if what in SIDES else {"ifpi": "prime", "ifspi": "semiprime"}[what])
    return None if not fam else {"what": what, "P": rng.choice(fam)}


register(
    "cor-3.13",
    "the characteristic pair of a crisp ideal is an IF ideal of the same side",
    _char_inputs,
    lambda G, inp: None if holds(G, characteristic_pair(G, inp["P"]), inp["what"]) else "characteristic pair is not an IF ideal",
)


# composition


def _one_sided_mixed(G, rng):
    side = rng.choice(("left", "right"))
    return {"side": side, "A": _mixed_ifs(G, rng, _CONSTRAINT[side])}


def _absorbs(G, A, side) -> bool:
    W = whole_space(G)
    return ifs_leq(compose(G, W, A) if side == "left" else compose(G, A, W), A)


def _thm_3_15(G, inp):
    A, side = inp["A"], inp["side"]
    lhs, rhs = holds(G, A, side), _absorbs(G, A, side)
    return None if lhs == rhs else f"IF {side} ideal: {lhs}, absorbs S: {rhs}"


register(
    "thm-3.15",
    "a non-empty IFS A is an IF left (right) ideal iff S∘A ⊆ A (A∘S ⊆ A)",
    _one_sided_mixed,
    _thm_3_15,
    hypothesis=lambda G, inp: is_nonempty(inp["A"]),
)


def _thm_3_16(G, inp):
    A = inp["A"]
    lhs = holds(G, A, "two-sided")
    rhs = _absorbs(G, A, "left") and _absorbs(G, A, "right")
    return None if lhs == rhs else f"IF ideal: {lhs}, S∘A ⊆ A and A∘S ⊆ A: {rhs}"


register(
    "thm-3.16",
    "a non-empty IFS A is an IF ideal iff S∘A ⊆ A and A∘S ⊆ A",
    lambda G, rng: {"A": _mixed_ifs(G, rng, "ifi")},
    _thm_3_16,
    hypothesis=lambda G, inp: is_nonempty(inp["A"]),
)


def _pair_inputs(ca, cb):
    def inputs(G, rng):
        A, B = draw_ifs(G, rng, ca), draw_ifs(G, rng, cb)
        return None if A is None or B is None else {"A": A, "B": B}

    return inputs


def _prop_3_17(G, inp):
    C, M = compose(G, inp["A"], inp["B"]), ifs_meet(inp["A"], inp["B"])
    return None if ifs_leq(C, M) else f"A∘B ⊄ A∩B {_first_diff(C, M)}"


register("prop-3.17", "for an IF right ideal A and IF left ideal B, A∘B ⊆ A∩B", _pair_inputs("ifri", "ifli"), _prop_3_17)


def _prop_3_18(G, inp):
    A, B = inp["A"], inp["B"]
    C, M = compose(G, A, B), ifs_meet(A, B)
    if not ifs_leq(C, M):
        return f"A∘B ⊄ A∩B {_first_diff(C, M)}"
    if not (ifs_leq(M, A) and ifs_leq(M, B)):
        return "A∩B is not below both A and B"
    return None


register("prop-3.18", "for IF ideals A, B: A∘B ⊆ A∩B ⊆ A, B", _pair_inputs("ifi", "ifi"), _prop_3_18)


def _prop_3_19(G, inp):
    C, M = compose(G, inp["A"], inp["B"]), ifs_meet(inp["A"], inp["B"])
    return None if ifs_leq(M, C) else f"A∩B ⊄ A∘B {_first_diff(M, C)}"


register(
    "prop-3.19",
    "in a regular Γ-semigroup, A∘B ⊇ A∩B for all IFSs A, B",
    lambda G, rng: {"A": random_ifs(G, rng), "B": random_ifs(G, rng)},
    _prop_3_19,
    hypothesis=lambda G, inp: regular(G),
    pool=REGULAR,
)


def _thm_3_20_forward(G, inp):
    C, M = compose(G, inp["A"], inp["B"]), ifs_meet(inp["A"], inp["B"])
    return None if C == M else f"A∘B ≠ A∩B {_first_diff(C, M)}"


register(
    "thm-3.20-regular-compose",
    "in a regular Γ-semigroup, A∘B = A∩B for every IF right ideal A and IF left ideal B",
    _pair_inputs("ifri", "ifli"),
    _thm_3_20_forward,
    hypothesis=lambda G, inp: regular(G),
    pool=REGULAR,
)


def _thm_3_20_converse(G, inp):
    for R in ideal_family(G, "right"):
        A = characteristic_pair(G, R)
        for L in ideal_family(G, "left"):
            B = characteristic_pair(G, L)
            if compose(G, A, B) != ifs_meet(A, B):
                return None
    return "not regular, yet A∘B = A∩B for the characteristic pairs of all crisp R, L"


register(
    "thm-3.20-converse",
    "if S is not regular, some crisp right ideal R and left ideal L give χ_R∘χ_L ≠ χ_R∩χ_L",
    lambda G, rng: {},
    _thm_3_20_converse,
    hypothesis=lambda G, inp: not regular(G),
    pool=NON_REGULAR,
)


# IF prime and semiprime ideals

_PRIME_KINDS = ("ifpi", "ifspi")


def _what_ifs(G, rng):
    what = rng.choice(_PRIME_KINDS)
    A = draw_ifs(G, rng, what)
    return None if A is None else {"what": what, "A": A}


register(
    "def-4.1-consistency",
    "every IF prime ideal is IF semiprime",
    lambda G, rng: (lambda A: None if A is None else {"A": A})(draw_ifs(G, rng, "ifpi")),
    lambda G, inp: None if holds(G, inp["A"], "ifspi") else "IF prime but not IF semiprime",
)


def _prime_meet(what):
    def inputs(G, rng):
        fam = _family(G, rng, what)
        return None if fam is None else {"fam": fam}

    def concl(G, inp):
        M = ifs_family_inf(inp["fam"])
        return None if holds(G, M, what) else f"meet is not {what}"

    return inputs, concl


register(
    "prop-4.3-ifpi",
    "the meet of a family of IF prime ideals is IF prime",
    *_prime_meet("ifpi"),
    pool=Pool(family="catalog", where=_two_incomparable_primes),
    kind="erratum",
    expect="fail",
    note="false in general: the meet of χ{0,2,4} and χ{0,3} on Z6 is χ{0}, and {0} is not prime",
)
register("prop-4.3-ifspi", "the meet of a family of IF semiprime ideals is IF semiprime", *_prime_meet("ifspi"))


def _modal_prime(op, name):
    def concl(G, inp):
        return None if holds(G, op(inp["A"]), inp["what"]) else f"{name}A is not {inp['what']}"

    return concl


register("lem-4.4", "□A is IF prime (semiprime) when A is", _what_ifs, _modal_prime(ifs_box, "□"))
register("lem-4.5", "◊A is IF prime (semiprime) when A is", _what_ifs, _modal_prime(ifs_diamond, "◊"))


def _what_mixed(G, rng):
    what = rng.choice(_PRIME_KINDS)
    r = rng.random()
    A = draw_ifs(G, rng, what) if r < 0.5 else draw_ifs(G, rng, "ifi") if r < 0.75 else None
    return {"what": what, "A": A if A is not None else random_ifs(G, rng)}


def _thm_4_6(G, inp):
    A, what = inp["A"], inp["what"]
    lhs = holds(G, A, what)
    rhs = holds(G, ifs_box(A), what) and holds(G, ifs_diamond(A), what)
    return None if lhs == rhs else f"A {what}: {lhs}, □A and ◊A {what}: {rhs}"


register("thm-4.6", "A is IF prime (semiprime) iff □A and ◊A are", _what_mixed, _thm_4_6)


def _prime_cut_inputs(G, rng):
    inp = _what_ifs(G, rng)
    if inp is not None:
        inp["t"] = _threshold_in_images(inp["A"], rng)
    return inp


def _thm_4_7(G, inp):
    A, t, what = inp["A"], inp["t"], inp["what"]
    for kind, cut in (("upper", upper_cut(A, t)), ("lower", lower_cut(A, t))):
        if not crisp_holds(G, cut, what):
            return f"{kind} cut at {t} = {_show(cut)} is not {'prime' if what == 'ifpi' else 'semiprime'}"
    return None


register(
    "thm-4.7",
    "for an IF prime (semiprime) ideal and t in Im μ ∩ Im ν, both level cuts are prime (semiprime) ideals",
    _prime_cut_inputs,
    _thm_4_7,
    hypothesis=lambda G, inp: inp["t"] in inp["A"].mu and inp["t"] in inp["A"].nu,
)
register(
    "thm-4.8",
    "a non-empty IFS whose non-empty level cuts are prime (semiprime) ideals is IF prime (semiprime)",
    _what_mixed,
    lambda G, inp: None if holds(G, inp["A"], inp["what"]) else "cuts are prime but A is not",
    hypothesis=lambda G, inp: _cuts_are(G, inp["A"], inp["what"]),
    note="non-emptiness of A is part of the hypothesis",
)


def _thm_4_9(G, inp):
    a0, a1, b0, b1 = inp["params"]
    A = step_ifs(G, inp["I"], a0, a1, b0, b1)
    return None if holds(G, A, inp["side"]) else f"step IFS over {_show(inp['I'])} is not {inp['side']}"


register(
    "thm-4.9",
    "the two-level IFS over a prime (semiprime) ideal is IF prime (semiprime)",
    lambda G, rng: _step_inputs(G, rng, _PRIME_KINDS),
    _thm_4_9,
    hypothesis=lambda G, inp: crisp_holds(G, inp["I"], inp["side"]),
    note="assumes I is a prime (semiprime) ideal; the statement as printed leaves this implicit",
)
register(
    "cor-4.10",
    "the characteristic pair of a prime (semiprime) ideal is IF prime (semiprime)",
    lambda G, rng: _char_inputs(G, rng, _PRIME_KINDS),
    lambda G, inp: None if holds(G, characteristic_pair(G, inp["P"]), inp["what"]) else "characteristic pair fails",
)


# extension


def _ext_inputs(constraint, whats=None):
    def inputs(G, rng):
        what = rng.choice(whats) if whats else constraint
        A = draw_ifs(G, rng, what)
        return None if A is None else {"what": what, "A": A, "x": _element(G, rng)}

    return inputs


def _ext_holds(what):
    def concl(G, inp):
        E = extend(G, inp["x"], inp["A"])
        w = what or inp["what"]
        return None if holds(G, E, w) else f"<{inp['x']},A> is not {w}"

    return concl


_commutative_hyp = lambda G, inp: commutative(G)  # noqa: E731

register(
    "prop-5.3",
    "in a commutative Γ-semigroup the extension of an IF ideal is an IF ideal",
    _ext_inputs("ifi"),
    _ext_holds("two-sided"),
    hypothesis=_commutative_hyp,
    pool=COMMUTATIVE,
)
register(
    "rem-5.4-ifri",
    "the extension of an IF right ideal satisfies the right ideal inequalities, without commutativity",
    _ext_inputs("ifri"),
    lambda G, inp: (lambda v: None if v else v.describe())(
        ideal_inequalities(G, extend(G, inp["x"], inp["A"]), "right")
    ),
)
register(
    "probe-5.4-ifri-empty",
    "the extension of an IF right ideal is non-empty",
    _ext_inputs("ifri"),
    lambda G, inp: None if is_nonempty(extend(G, inp["x"], inp["A"])) else f"<{inp['x']},A> is empty",
    pool=Pool(names=("left-zero-2", "left-zero-3", "null-3")),
    kind="probe",
    expect="fail",
)
register(
    "prop-5.5-ifpi",
    "in a commutative Γ-semigroup the extension of an IF prime (semiprime) ideal is IF prime (semiprime)",
    _ext_inputs(None, _PRIME_KINDS),
    _ext_holds(None),
    hypothesis=_commutative_hyp,
    pool=COMMUTATIVE,
)


def _prop_5_7_inputs(G, rng):
    A = draw_ifs(G, rng, "ifi")
    if A is None:
        return None
    return {"A": A, "x": _element(G, rng), "alpha": rng.choice(G.gamma), "n": rng.randint(0, 3)}


def _prop_5_7(G, inp):
    A, x, alpha, n = inp["A"], inp["x"], inp["alpha"], inp["n"]
    E = extend(G, x, A)
    if not ifs_leq(A, E):
        return f"A ⊄ <{x},A> {_first_diff(A, E)}"
    p, q = power_element(G, x, alpha, n), power_element(G, x, alpha, n + 1)
    P, Q = extend(G, p, A), extend(G, q, A)
    if not ifs_leq(P, Q):
        return f"<(xα)^{n}x,A> ⊄ <(xα)^{n + 1}x,A> with x={x}, α={alpha}"
    m, v = A[x]
    if m > 0 and v < 1 and support(E) != frozenset(G.carrier):
        return f"Supp <{x},A> = {_show(support(E))} is not all of S"
    return None


register(
    "prop-5.7-parts-1-3",
    "for an IF ideal A: A ⊆ <x,A>; the power chain <(xα)^n x, A> increases; Supp <x,A> = S when x is in the support",
    _prop_5_7_inputs,
    _prop_5_7,
)


def _prop_5_8(G, inp):
    A, x = inp["A"], inp["x"]
    lhs = extend(G, x, characteristic_pair(G, A))
    rhs = characteristic_pair(G, crisp_extension(G, x, A))
    return None if lhs == rhs else f"<x,χ_A> ≠ χ_<x,A> {_first_diff(lhs, rhs)}"


register(
    "prop-5.8-crisp",
    "for non-empty A ⊆ S, the extension of the characteristic pair of A is the characteristic pair of the crisp extension",
    lambda G, rng: {"A": random_subset(G, rng), "x": _element(G, rng)},
    _prop_5_8,
)


def _prop_5_9_inputs(G, rng):
    A = _mixed_ifs(G, rng, "ifi")
    t = rng.choice(thresholds(A) + list(DEFAULT_GRID))
    return {"A": A, "x": _element(G, rng), "t": t}


def _prop_5_9(G, inp):
    A, x, t = inp["A"], inp["x"], inp["t"]
    E = extend(G, x, A)
    if crisp_extension(G, x, upper_cut(A, t)) != upper_cut(E, t):
        return f"<x,U(μ;{t})> ≠ U(<x,μ>;{t})"
    if crisp_extension(G, x, lower_cut(A, t)) != lower_cut(E, t):
        return f"<x,L(ν;{t})> ≠ L(<x,ν>;{t})"
    return None


register(
    "prop-5.9-cuts",
    "<x,U(μ;t)> = U(<x,μ>;t) and <x,L(ν;t)> = L(<x,ν>;t)",
    _prop_5_9_inputs,
    _prop_5_9,
    hypothesis=lambda G, inp: is_nonempty(inp["A"]),
)


def _constancy_inputs(G, rng):
    r = rng.random()
    A = draw_ifs(G, rng, "ifi") if r < 0.3 else None
    if A is None:
        A = random_ifs(G, rng) if r < 0.6 else draw_ifs(G, rng, "ifpi") if r < 0.7 else None
    if A is None:
        m = rng.choice(DEFAULT_GRID)
        v = rng.choice([g for g in DEFAULT_GRID if g + m <= 1])
        A = IFS(G.carrier, (m,) * G.size, (v,) * G.size)
    return {"A": A}


register(
    "prop-5.10-constant",
    "in a commutative Γ-semigroup, an IFS fixed by every extension is constant",
    _constancy_inputs,
    lambda G, inp: None if is_constant(inp["A"]) else "fixed by every extension but not constant",
    hypothesis=lambda G, inp: commutative(G) and all(extend(G, x, inp["A"]) == inp["A"] for x in G.carrier),
    pool=COMMUTATIVE,
)


def _cor_5_10(G, inp):
    A = inp["A"]
    for x in G.carrier:
        E = extend(G, x, A)
        if E != A and ifs_leq(A, E) and holds(G, E, "ifpi"):
            return None
    return "no x gives an IF prime ideal strictly above A"


register(
    "cor-5.10-nonmaximal",
    "in a commutative Γ-semigroup a non-constant IF prime ideal is strictly below some IF prime ideal <x,A>",
    lambda G, rng: (lambda A: None if A is None else {"A": A})(draw_ifs(G, rng, "ifpi")),
    _cor_5_10,
    hypothesis=lambda G, inp: commutative(G) and not is_constant(inp["A"]),
    pool=COMMUTATIVE,
)


def _cor_5_11_inputs(G, rng):
    fam = _family(G, rng, "ifspi", 1, 3)
    return None if fam is None else {"fam": fam, "x": _element(G, rng)}


register(
    "cor-5.11-family",
    "in a commutative Γ-semigroup the extension of the meet of IF semiprime ideals is IF semiprime",
    _cor_5_11_inputs,
    lambda G, inp: None if holds(G, extend(G, inp["x"], ifs_family_inf(inp["fam"])), "ifspi") else "extension of the meet is not IF semiprime",
    hypothesis=_commutative_hyp,
    pool=COMMUTATIVE,
)


def _cor_5_13_inputs(G, rng):
    fam = ideal_family(G, "semiprime")
    if not fam:
        return None
    return {"sets": [rng.choice(fam) for _ in range(rng.randint(1, 3))], "x": _element(G, rng)}


def _intersection(sets):
    out = sets[0]
    for s in sets[1:]:
        out = out & s
    return out


register(
    "cor-5.13-crisp-family",
    "in a commutative Γ-semigroup, for semiprime ideals with non-empty intersection A, <x,χ_A> is IF semiprime",
    _cor_5_13_inputs,
    lambda G, inp: None if holds(G, extend(G, inp["x"], characteristic_pair(G, _intersection(inp["sets"]))), "ifspi") else "extension is not IF semiprime",
    hypothesis=lambda G, inp: commutative(G) and bool(_intersection(inp["sets"])),
    pool=COMMUTATIVE,
)


def _fixed_inputs(G, rng):
    A = draw_ifs(G, rng, "ifpi")
    if A is None:
        return None
    bottom = [x for x, m, v in A.items() if m == min(A.mu) and v == max(A.nu)]
    return {"A": A, "x": rng.choice(bottom) if bottom else _element(G, rng)}


register(
    "thm-5.13-fixedpoint",
    "for an IF prime ideal A and x with μ(x) minimal and ν(x) maximal, <x,A> = A",
    _fixed_inputs,
    lambda G, inp: (lambda E: None if E == inp["A"] else f"<{inp['x']},A> ≠ A {_first_diff(E, inp['A'])}")(extend(G, inp["x"], inp["A"])),
    hypothesis=lambda G, inp: inp["A"].mu_of(inp["x"]) == min(inp["A"].mu) and inp["A"].nu_of(inp["x"]) == max(inp["A"].nu),
)


def _converse_hyp(G, inp):
    A = inp["A"]
    return all(extend(G, y, A) == A for y in fixed_point_candidates(A))


def _converse(G, inp):
    v = is_ifpi(G, inp["A"])
    return None if v else f"premise holds (candidates {_show(fixed_point_candidates(inp['A']))}) but A {v.describe()}"


register(
    "thm-5.13-converse",
    "an IF ideal fixed by <y,·> for every y with μ(y) not maximal and ν(y) not minimal is IF prime",
    lambda G, rng: (lambda A: None if A is None else {"A": A})(draw_ifs(G, rng, "ifi")),
    _converse,
    hypothesis=_converse_hyp,
    kind="erratum",
    expect="fail",
    note="false: pairs with ν minimal but μ not maximal are not covered by the argument",
)


def _cor_5_14(G, inp):
    I = inp["I"]
    M = characteristic_pair(G, I)
    prime = is_prime_ideal(G, I)
    fixed = all(extend(G, x, M) == M for x in G.carrier if x not in I)
    return None if prime == fixed else f"{_show(I)}: prime {prime}, fixed by every outside extension {fixed}"


register(
    "cor-5.14-prime-char",
    "an ideal I is prime iff <x,χ_I> = χ_I for every x outside I",
    lambda G, rng: {"I": rng.choice(ideal_family(G, "two-sided"))},
    _cor_5_14,
)


# examples and probes

_SNAPSHOT = Pool(names=("capped-int",))


def _example_3_4(G, inp):
    verdict = is_ifi(G, inp["A"])
    return None if verdict else verdict.describe()


register(
    "example-3.4",
    "the example IFS on the non-positive integers is an IF ideal",
    lambda G, rng: {"A": catalog_ifs("capped-int-A")},
    _example_3_4,
    pool=_SNAPSHOT,
    kind="erratum",
    expect="fail",
    note="the example IFS fails the left nu inequality: (-1)(-2)(-2) = -4 has nu 7/10 > nu(-2) = 3/5",
)


def _example_5_2(G, inp):
    x = inp["x"]
    claimed = (Fraction(1), Fraction(0)) if x == "0" else (Fraction(1, 10), Fraction(7, 10))
    E = extend(G, x, inp["A"])
    for y in G.carrier:
        if E[y] != claimed:
            return f"<{x},A>({y}) = {_pair(E, y)}, claimed ({claimed[0]},{claimed[1]})"
    return None


register(
    "example-5.2-discrepancy",
    "the example's claimed constant values of <x,A>",
    lambda G, rng: {"A": catalog_ifs("capped-int-A"), "x": _element(G, rng)},
    _example_5_2,
    pool=_SNAPSHOT,
    kind="probe",
    expect="fail",
    note="at y = 0 every extension has value (1,0), so the claimed constant cannot hold",
)


def _sum_probe(G, inp):
    A, ix = inp["A"], G.s_index(inp["x"])
    for y in range(G.size):
        lo = min(A.mu[G.sgs[ix][g][y]] for g in range(G.gamma_size))
        hi = max(A.nu[G.sgs[ix][g][y]] for g in range(G.gamma_size))
        if lo + hi > 1:
            return f"inf μ + sup ν = {lo + hi} at {G.carrier[y]}"
    return None


register(
    "probe-extension-sum",
    "inf μ(xγy) + sup ν(xγy) ≤ 1, so <x,A> is always an IFS",
    lambda G, rng: {"A": random_ifs(G, rng), "x": _element(G, rng)},
    _sum_probe,
    kind="probe",
)


#: statement → registered case ids; registry completeness is tested against it
COVERAGE: dict[str, tuple[str, ...]] = {
    "thm-2.1": ("thm-2.1",),
    "ex-3.4": ("example-3.4",),
    "prop-3.5": ("prop-3.5", "probe-3.5-empty-meet"),
    "lem-3.6": ("lem-3.6",),
    "lem-3.7": ("lem-3.7",),
    "thm-3.8": ("thm-3.8",),
    "thm-3.9": ("thm-3.9",),
    "thm-3.10": ("thm-3.10",),
    "prop-3.11": ("prop-3.11",),
    "thm-3.12": ("thm-3.12",),
    "cor-3.13": ("cor-3.13",),
    "thm-3.15": ("thm-3.15",),
    "thm-3.16": ("thm-3.16",),
    "prop-3.17": ("prop-3.17",),
    "prop-3.18": ("prop-3.18",),
    "prop-3.19": ("prop-3.19",),
    "thm-3.20": ("thm-3.20-regular-compose", "thm-3.20-converse"),
    "def-4.1": ("def-4.1-consistency",),
    "prop-4.3": ("prop-4.3-ifpi", "prop-4.3-ifspi"),
    "lem-4.4": ("lem-4.4",),
    "lem-4.5": ("lem-4.5",),
    "thm-4.6": ("thm-4.6",),
    "thm-4.7": ("thm-4.7",),
    "thm-4.8": ("thm-4.8",),
    "thm-4.9": ("thm-4.9",),
    "cor-4.10": ("cor-4.10",),
    "ex-5.2": ("example-5.2-discrepancy",),
    "prop-5.3": ("prop-5.3",),
    "rem-5.4": ("rem-5.4-ifri", "probe-5.4-ifri-empty"),
    "prop-5.5": ("prop-5.5-ifpi",),
    "prop-5.7": ("prop-5.7-parts-1-3",),
    "prop-5.8": ("prop-5.8-crisp",),
    "prop-5.9": ("prop-5.9-cuts",),
    "prop-5.10": ("prop-5.10-constant",),
    "cor-5.10": ("cor-5.10-nonmaximal",),
    "cor-5.11": ("cor-5.11-family",),
    "rem-5.12": ("prop-4.3-ifspi",),
    "cor-5.13": ("cor-5.13-crisp-family",),
    "thm-5.13": ("thm-5.13-fixedpoint", "thm-5.13-converse"),
    "cor-5.14": ("cor-5.14-prime-char",),
    "impl-extension-sum": ("probe-extension-sum",),
}


def safe_conclusion(case: TheoremCase, G, inp) -> Witness:
    """Run a conclusion, turning library errors into counterexample witnesses."""
    try:
        return case.conclusion(G, inp)
    except GammaFuzzError as e:
        return f"error: {type(e).__name__}: {e}"
