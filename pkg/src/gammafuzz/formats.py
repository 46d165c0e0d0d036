"""Line-based text formats for Γ-semigroups (.gsg), IFSs (.ifs) and crisp sets (.set).

.gsg::

    [carrier]
    S = a b c
    G = g h
    zero = a          # optional
    [sgs]
    a g b = c         # one line per (s, γ, t)
    [gsg]
    g a h = g         # one line per (γ, s, η)

.ifs::

    [ifs]
    a = 1 0           # id = mu nu, exact rationals

.set::

    [set]
    members = a c
"""

from __future__ import annotations

from collections.abc import Iterable
from itertools import product
from pathlib import Path

from .errors import DegreeError, ParseError, SumExceedsOne
from .gamma import ID_PATTERN, GammaSemigroup, build
from .ifs import IFS, carrier_of, format_degree, ifs_build


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _sections(text: str, allowed: tuple[str, ...]) -> dict[str, list[tuple[int, str]]]:
    out: dict[str, list[tuple[int, str]]] = {}
    current = None
    for no, line in _lines(text):
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip()
            if current not in allowed:
                raise ParseError(f"unknown section [{current}]", no)
            if current in out:
                raise ParseError(f"section [{current}] appears twice", no)
            out[current] = []
        elif current is None:
            raise ParseError("content before the first section", no)
        else:
            out[current].append((no, line))
    return out


def _split_eq(line: str, no: int) -> tuple[list[str], list[str]]:
    if line.count("=") != 1:
        raise ParseError("expected exactly one '='", no)
    lhs, rhs = line.split("=")
    return lhs.split(), rhs.split()


def _ids(tokens: list[str], no: int) -> list[str]:
    for tok in tokens:
        if not ID_PATTERN.match(tok):
            raise ParseError(f"bad id {tok!r}", no)
    return tokens


def parse_gsg(text: str) -> GammaSemigroup:
    """Parse and validate a Γ-semigroup (validation errors propagate from build)."""
    secs = _sections(text, ("carrier", "sgs", "gsg"))
    for name in ("carrier", "sgs", "gsg"):
        if name not in secs:
            raise ParseError(f"missing section [{name}]")
    header: dict[str, list[str]] = {}
    for no, line in secs["carrier"]:
        left, right = _split_eq(line, no)
        if len(left) != 1 or left[0] not in ("S", "G", "zero"):
            raise ParseError("expected 'S = ...', 'G = ...' or 'zero = ...'", no)
        if left[0] in header:
            raise ParseError(f"{left[0]} given twice", no)
        header[left[0]] = _ids(right, no)
    if "S" not in header or "G" not in header:
        raise ParseError("[carrier] must define both S and G")
    S, Gm = header["S"], header["G"]
    zero = header.get("zero")
    if zero is not None and len(zero) != 1:
        raise ParseError("zero must be a single id")
    tables = []
    for name, first, mid in (("sgs", S, Gm), ("gsg", Gm, S)):
        table: dict[tuple[str, str, str], str] = {}
        codomain = set(first)
        for no, line in secs[name]:
            left, right = _split_eq(line, no)
            if len(left) != 3 or len(right) != 1:
                raise ParseError(f"[{name}] lines look like 'x y z = w'", no)
            a, g, b = _ids(left, no)
            if a not in first or g not in mid or b not in first:
                raise ParseError(f"unknown id in {' '.join(left)}", no)
            if right[0] not in codomain:
                raise ParseError(f"value {right[0]!r} is outside the codomain", no)
            key = (a, g, b)
            if key in table and table[key] != right[0]:
                raise ParseError(f"conflicting values for {' '.join(key)}", no)
            table[key] = right[0]
        tables.append(table)
    return build(S, Gm, tables[0], tables[1], zero=zero[0] if zero else None)


def format_gsg(G: GammaSemigroup) -> str:
    out = ["[carrier]", "S = " + " ".join(G.carrier), "G = " + " ".join(G.gamma)]
    if G.zero is not None:
        out.append(f"zero = {G.zero}")
    out.append("[sgs]")
    for a, g, b in product(range(G.size), range(G.gamma_size), range(G.size)):
        out.append(f"{G.carrier[a]} {G.gamma[g]} {G.carrier[b]} = {G.carrier[G.sgs[a][g][b]]}")
    out.append("[gsg]")
    for g, a, h in product(range(G.gamma_size), range(G.size), range(G.gamma_size)):
        out.append(f"{G.gamma[g]} {G.carrier[a]} {G.gamma[h]} = {G.gamma[G.gsg[g][a][h]]}")
    return "\n".join(out) + "\n"


def parse_ifs(text: str, space=None) -> IFS:
    """Parse an IFS. With ``space`` given, ids are checked against (and ordered by) its carrier."""
    secs = _sections(text, ("ifs",))
    if "ifs" not in secs:
        raise ParseError("missing section [ifs]")
    order: list[str] = []
    mu: dict[str, str] = {}
    nu: dict[str, str] = {}
    for no, line in secs["ifs"]:
        left, right = _split_eq(line, no)
        if len(left) != 1 or len(right) != 2:
            raise ParseError("[ifs] lines look like 'id = mu nu'", no)
        x = _ids(left, no)[0]
        if x in mu:
            raise ParseError(f"{x!r} appears twice", no)
        order.append(x)
        mu[x], nu[x] = right
    carrier = order if space is None else carrier_of(space)
    if space is not None and set(order) != set(carrier):
        missing = sorted(set(carrier) - set(order))
        extra = sorted(set(order) - set(carrier))
        raise ParseError(f"[ifs] ids do not match the carrier (missing {missing}, unknown {extra})")
    try:
        return ifs_build(carrier, mu, nu)
    except (DegreeError, SumExceedsOne) as e:
        raise ParseError(str(e)) from None


def format_ifs(A: IFS) -> str:
    out = ["[ifs]"]
    for x, m, v in A.items():
        out.append(f"{x} = {format_degree(m)} {format_degree(v)}")
    return "\n".join(out) + "\n"


def parse_set(text: str) -> frozenset[str]:
    secs = _sections(text, ("set",))
    if "set" not in secs or len(secs["set"]) != 1:
        raise ParseError("expected a [set] section with one 'members = ...' line")
    no, line = secs["set"][0]
    left, right = _split_eq(line, no)
    if left != ["members"]:
        raise ParseError("expected 'members = ...'", no)
    return frozenset(_ids(right, no))


def format_set(members: Iterable[str], order: Iterable[str] | None = None) -> str:
    members = set(members)
    ordered = [x for x in order if x in members] if order is not None else sorted(members)
    return "[set]\nmembers = " + " ".join(ordered) + "\n"


def load_gsg(path) -> GammaSemigroup:
    return parse_gsg(Path(path).read_text(encoding="utf-8"))


def load_ifs(path, space=None) -> IFS:
    return parse_ifs(Path(path).read_text(encoding="utf-8"), space)


def dump(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
