"""Regenerate the bundled instance catalog (src/gammafuzz/catalog).

Run from the repository root: python3 scripts/make_catalog.py
"""

from __future__ import annotations

from pathlib import Path

from gammafuzz.formats import dump, format_gsg, format_ifs
from gammafuzz.gamma import build, is_commutative, is_regular, make_modular
from gammafuzz.ifs import ifs_build

OUT = Path(__file__).resolve().parent.parent / "src" / "gammafuzz" / "catalog"


def from_semigroup(ids, mul, gamma_ids, zero=None):
    """Γ-semigroup of a plain semigroup: Γ ⊆ S closed under γ·a·η, aγb = a·γ·b.

    Γ ids get a "g" prefix so the two namespaces stay visibly apart.
    """
    g = {f"g{x}": x for x in gamma_ids}
    back = {x: k for k, x in g.items()}

    def sgs(a, k, b):
        return mul(mul(a, g[k]), b)

    def gsg(k, a, h):
        return back[mul(mul(g[k], a), g[h])]

    return build(ids, list(g), sgs, gsg, zero=zero)


def left_zero(ids, gamma_ids):
    return from_semigroup(ids, lambda a, b: a, gamma_ids)


def right_zero(ids, gamma_ids):
    return from_semigroup(ids, lambda a, b: b, gamma_ids)


def brandt_mul(a, b):
    if a == "0" or b == "0" or a[2] != b[1]:
        return "0"
    return f"e{a[1]}{b[2]}"


def brandt(gamma_ids):
    ids = ["0", "e11", "e12", "e21", "e22"]
    return from_semigroup(ids, brandt_mul, gamma_ids, zero="0")


def rectangular_band():
    ids = ["r11", "r12", "r21", "r22"]
    return from_semigroup(ids, lambda a, b: f"r{a[1]}{b[2]}", ["r11", "r12"])


def null_semigroup():
    return from_semigroup(["0", "a", "b"], lambda a, b: "0", ["0"], zero="0")


def chain():
    return from_semigroup(["0", "1", "2"], lambda a, b: min(a, b), ["0", "1", "2"], zero="0")


def capped_integers():
    """Non-positive integers under a·γ·b with |value| capped at 4 ("-4" means ≤ -4).

    Γ is the non-positive even integers, capped the same way. Capping the
    absolute value is a congruence for multiplication, so both laws survive.
    """
    S = ["0", "-1", "-2", "-3", "-4"]
    Gm = ["0", "-2", "-4"]

    def cap(v):
        return str(-min(abs(v), 4))

    return build(S, Gm, lambda a, g, b: cap(int(a) * int(g) * int(b)),
                 lambda g, a, h: cap(int(g) * int(a) * int(h)), zero="0")


INSTANCES = {
    "z1": lambda: make_modular(1, [0]),
    "z2-full": lambda: make_modular(2, [0, 1]),
    "z3-full": lambda: make_modular(3, [0, 1, 2]),
    "z4-g02": lambda: make_modular(4, [0, 2]),
    "z4-full": lambda: make_modular(4, [0, 1, 2, 3]),
    "z5-full": lambda: make_modular(5, range(5)),
    "z6-full": lambda: make_modular(6, range(6)),
    "z6-g03": lambda: make_modular(6, [0, 3]),
    "z8-g04": lambda: make_modular(8, [0, 4]),
    "left-zero-2": lambda: left_zero(["a", "b"], ["a"]),
    "left-zero-3": lambda: left_zero(["a", "b", "c"], ["a", "b"]),
    "right-zero-2": lambda: right_zero(["a", "b"], ["b"]),
    "brandt-b2": lambda: brandt(["0", "e11", "e12"]),
    "brandt-b2-e11": lambda: brandt(["0", "e11"]),
    "rect-band-2x2": rectangular_band,
    "null-3": null_semigroup,
    "chain-3": chain,
    "capped-int": capped_integers,
}


def tags(G):
    out = ["commutative" if is_commutative(G) else "non-commutative"]
    out.append("regular" if is_regular(G) else "non-regular")
    out.append("zero" if G.zero is not None else "no-zero")
    return out


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    lines = ["# name  tags (generated by scripts/make_catalog.py)"]
    for name, make in INSTANCES.items():
        G = make()
        dump(OUT / f"{name}.gsg", format_gsg(G))
        lines.append(f"{name} {' '.join(tags(G))}")
    dump(OUT / "index.txt", "\n".join(lines) + "\n")
    # the IF ideal used as fixture data on the capped integers
    G = capped_integers()
    mu = {"0": "1", "-1": "1/10", "-2": "1/10", "-3": "1/5", "-4": "1/5"}
    nu = {"0": "0", "-1": "3/5", "-2": "3/5", "-3": "7/10", "-4": "7/10"}
    dump(OUT / "capped-int-A.ifs", format_ifs(ifs_build(G, mu, nu)))


if __name__ == "__main__":
    main()
