"""Run registered cases, collect reports and persist counterexamples.

A counterexample is written as a directory holding ``instance.gsg``, one
``.ifs``/``.set`` file per IFS or crisp input, ``inputs.txt`` (a manifest
naming each input and its kind) and ``witness.txt``. :func:`reverify`
reloads such a directory and re-evaluates the case on it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from ..errors import ParseError, UnknownCase
from ..formats import dump, format_gsg, format_ifs, format_set, load_gsg, load_ifs, parse_set
from ..ifs import IFS, degree
from .cases import REGISTRY, TheoremCase, safe_conclusion

ALL_PASS = "all-pass"
COUNTEREXAMPLE = "counterexample"
NEVER_MET = "hypothesis-never-met"


@dataclass
class TheoremReport:
    case_id: str
    kind: str
    expect: str
    verdict: str
    instances_checked: int
    skipped: int
    seed: int
    witness: str | None = None
    witness_file: str | None = None
    elapsed: float = 0.0
    note: str | None = None

    @property
    def status(self) -> str:
        """pass / FAIL / xfail / xpass / never-met, relative to the expectation."""
        if self.verdict == NEVER_MET:
            return "never-met"
        found = self.verdict == COUNTEREXAMPLE
        if self.expect == "fail":
            return "xfail" if found else "xpass"
        return "FAIL" if found else "pass"

    def record(self) -> str:
        """One machine-readable line of key=value fields (no timing, so runs diff cleanly)."""
        fields = [
            ("case", self.case_id),
            ("kind", self.kind),
            ("expect", self.expect),
            ("verdict", self.verdict),
            ("status", self.status),
            ("instances", self.instances_checked),
            ("skipped", self.skipped),
            ("seed", self.seed),
            ("witness", self.witness_file or "-"),
        ]
        return " ".join(f"{k}={v}" for k, v in fields)


def select_cases(selectors) -> list[str]:
    """Resolve ids, "all", or prefixes such as "thm-3.20" (matching "thm-3.20-*"), in registry order."""
    if isinstance(selectors, str):
        selectors = [s for s in selectors.split(",") if s.strip()]
    selectors = [s.strip() for s in selectors]
    if not selectors or "all" in selectors:
        return list(REGISTRY)
    chosen = set()
    for sel in selectors:
        hits = [c for c in REGISTRY if c == sel or c.startswith(sel + "-")]
        if not hits:
            raise UnknownCase(f"no registered case matches {sel!r}")
        chosen.update(hits)
    return [c for c in REGISTRY if c in chosen]


def get_case(case_id: str) -> TheoremCase:
    try:
        return REGISTRY[case_id]
    except KeyError:
        raise UnknownCase(f"unknown case {case_id!r}") from None


def case_rng(seed: int, case_id: str) -> random.Random:
    """Each case has its own stream, so selection and ordering never change a report."""
    return random.Random(f"{seed}:{case_id}")


def run_case(case_id: str, budget: int, seed: int, results_dir=None) -> TheoremReport:
    """Draw up to ``budget`` samples, skip those failing the hypothesis, stop at the first counterexample."""
    case = get_case(case_id)
    rng = case_rng(seed, case_id)
    start = time.perf_counter()
    checked = skipped = 0
    found = None
    for _ in range(budget):
        G = case.pool.draw(rng)
        inp = None if G is None else case.inputs(G, rng)
        if inp is None or not case.hypothesis(G, inp):
            skipped += 1
            continue
        checked += 1
        witness = safe_conclusion(case, G, inp)
        if witness is not None:
            found = (G, inp, witness)
            break
    report = TheoremReport(
        case_id, case.kind, case.expect, NEVER_MET if checked == 0 else ALL_PASS,
        checked, skipped, seed, note=case.note,
    )
    if found is not None:
        G, inp, witness = found
        report.verdict = COUNTEREXAMPLE
        report.witness = witness
        if results_dir is not None:
            path = write_counterexample(Path(results_dir) / case_id, case_id, G, inp, witness)
            report.witness_file = path.relative_to(Path(results_dir)).as_posix()
    report.elapsed = time.perf_counter() - start
    return report


def run_all(budget: int, seed: int, cases=None, results_dir=None) -> list[TheoremReport]:
    ids = select_cases(cases if cases is not None else "all")
    return [run_case(c, budget, seed, results_dir) for c in ids]


def exit_status(reports) -> int:
    """Nonzero only when a case expected to hold met a counterexample."""
    return 1 if any(r.status == "FAIL" for r in reports) else 0


def machine_report(reports) -> str:
    lines = ["# gammafuzz verification records"]
    lines += [f"# note {r.case_id}: {r.note}" for r in reports if r.note]
    lines += [r.record() for r in reports]
    return "\n".join(lines) + "\n"


def summary_matrix(reports, timing: bool = False) -> str:
    width = max([len(r.case_id) for r in reports] + [4])
    head = f"{'case':<{width}}  {'status':<9}  {'kind':<7}  {'checked':>7}  {'skipped':>7}"
    lines = [head + ("  seconds" if timing else ""), "-" * len(head)]
    for r in reports:
        line = f"{r.case_id:<{width}}  {r.status:<9}  {r.kind:<7}  {r.instances_checked:>7}  {r.skipped:>7}"
        if timing:
            line += f"  {r.elapsed:7.2f}"
        lines.append(line)
        if r.witness and r.status in ("FAIL", "xfail"):
            lines.append(f"{'':<{width}}    {r.witness}")
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines.append("")
    lines.append(", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))
    return "\n".join(lines) + "\n"


# counterexample files


def _kind_of(value) -> str:
    if isinstance(value, IFS):
        return "ifs"
    if isinstance(value, frozenset):
        return "set"
    if isinstance(value, bool):
        raise TypeError("booleans are not serialisable inputs")
    if isinstance(value, int):
        return "int"
    if isinstance(value, Fraction):
        return "degree"
    if isinstance(value, str):
        return "text"
    if isinstance(value, list) and value:
        inner = {_kind_of(v) for v in value}
        if len(inner) == 1:
            return inner.pop() + "-list"
    raise TypeError(f"cannot serialise input of type {type(value).__name__}")


def write_counterexample(directory, case_id: str, G, inputs: dict, witness: str) -> Path:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for old in d.iterdir():
        if old.is_file():
            old.unlink()
    dump(d / "instance.gsg", format_gsg(G))
    manifest = [f"case {case_id}"]
    for key, value in inputs.items():
        kind = _kind_of(value)
        if kind in ("ifs", "set"):
            name = f"{key}.{kind}"
            _write_one(d / name, value, G)
            manifest.append(f"{key} {kind} {name}")
        elif kind.endswith("-list"):
            ext = kind[:-5]
            names = []
            for i, v in enumerate(value):
                names.append(f"{key}.{i}.{ext}")
                _write_one(d / names[-1], v, G)
            manifest.append(f"{key} {kind} {' '.join(names)}")
        else:
            manifest.append(f"{key} {kind} {value}")
    dump(d / "inputs.txt", "\n".join(manifest) + "\n")
    dump(d / "witness.txt", witness + "\n")
    return d


def _write_one(path: Path, value, G) -> None:
    if isinstance(value, IFS):
        dump(path, format_ifs(value))
    else:
        dump(path, format_set(value, G.carrier))


def _read_one(path: Path, kind: str, G):
    if kind == "ifs":
        return load_ifs(path, G)
    return parse_set(path.read_text(encoding="utf-8"))


def load_counterexample(directory):
    """Return (case_id, G, inputs) from a directory written by :func:`write_counterexample`."""
    d = Path(directory)
    G = load_gsg(d / "instance.gsg")
    case_id = None
    inputs: dict = {}
    for line in (d / "inputs.txt").read_text(encoding="utf-8").splitlines():
        parts = line.split()
        if not parts:
            continue
        if parts[0] == "case":
            case_id = parts[1]
            continue
        key, kind, *rest = parts
        if kind in ("ifs", "set"):
            inputs[key] = _read_one(d / rest[0], kind, G)
        elif kind.endswith("-list"):
            inputs[key] = [_read_one(d / r, kind[:-5], G) for r in rest]
        elif kind == "int":
            inputs[key] = int(rest[0])
        elif kind == "degree":
            inputs[key] = degree(rest[0])
        elif kind == "text":
            inputs[key] = rest[0]
        else:
            raise ParseError(f"unknown input kind {kind!r} in inputs.txt")
    if case_id is None:
        raise ParseError("inputs.txt names no case")
    return case_id, G, inputs


def reverify(directory) -> str | None:
    """Re-evaluate a stored counterexample; returns the witness if it still fails, else None."""
    case_id, G, inputs = load_counterexample(directory)
    case = get_case(case_id)
    if not case.hypothesis(G, inputs):
        return None
    return safe_conclusion(case, G, inputs)
