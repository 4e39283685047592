"""Closed-form operation-count formulas and measurement against them.

Two built-in comparison tables:

* ``table1`` -- cyclotomic ring/field multipliers, sized by the vector
  dimension n.  Rows exist for general ground fields (with a doubling
  column) and for GF(2), where doubled terms vanish.
* ``table6`` -- GF(2^m) multipliers built on redundant representations,
  sized by the extension degree m.  Includes expected-only rows for prior
  published multipliers (Massey-Omura style and successors) so reports can
  be compared side by side.

``measure`` runs an instrumented multiplier on random inputs and returns
its OpCount; counts are input-independent, which the harness asserts by
running three random pairs.  ``render_table`` pairs every row with its
measurement (where one applies) and flags exact matches; there is no
tolerance, a row either matches or the report says it does not.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from . import cyclocore, gaussonb
from .cyclocore import CycloElement
from .errors import CyclomulError, UnsupportedCombination
from .groundfield import GroundField, OpCount, is_prime

MULTIPLIER_IDS = (
    "direct",
    "alg1",
    "alg2-ring",
    "alg2-field",
    "general-ring0",
    "general-ring1",
    "general-field1",
    "onb1-eq24",
    "onb1-eq25",
    "onb2-simpli",
    "onb2-eq29",
    "onb2-eq30",
)

_ONB_VARIANTS = {
    "onb1-eq24": (1, "pairprod"),
    "onb1-eq25": (1, "pairsum"),
    "onb2-simpli": (2, "redundant"),
    "onb2-eq29": (2, "pairprod"),
    "onb2-eq30": (2, "pairsum"),
}


@dataclass(frozen=True)
class CountFormula:
    """One table row: closed-form mult/doub/add (and total) in the size."""

    label: str
    source: str  # "table1" | "table6"
    mult: Callable[[int], int]
    doub: Callable[[int], int]
    add: Callable[[int], int]
    total: Callable[[int], int]
    # Multiplier id measurable for this row at (size, p), or None.
    measure_id: Callable[[int, int], Optional[str]]


def expected_counts(row: CountFormula, x: int) -> OpCount:
    """Evaluate the row's formulas at size x."""
    if x < 2:
        raise ValueError(f"size must be >= 2, got {x}")
    return OpCount(mult=row.mult(x), doub=row.doub(x), add=row.add(x))


def _never(size: int, p: int) -> Optional[str]:
    return None


def _row(label, source, mult, doub, add, total, measure_id=_never):
    return CountFormula(label, source, mult, doub, add, total, measure_id)


def _basis_exists(m: int, k: int, q: int = 2) -> bool:
    try:
        gaussonb.GaussParams.create(m, k, q)
        return True
    except CyclomulError:
        return False


def _measure_direct(size, p):
    return "direct"


def _measure_exact_quadratic(size, p):
    # Product-pair rows: the paired algorithm for odd sizes, the general
    # product-pair evaluation otherwise.  Same formulas either way.
    return "alg1" if size % 2 else "general-ring0"


def _measure_alg2(kind: str, gf2: bool):
    def chooser(size, p):
        if (p == 2) != gf2:
            return None
        if gf2 and kind == "field" and size == 2:
            return None  # degenerate: the lone output slot is never summed
        return f"alg2-{kind}" if size % 2 else f"general-{kind}1"

    return chooser


def _measure_gf2(mult_id: str, need=None):
    def chooser(size, p):
        if p != 2:
            return None
        if need is not None and not need(size):
            return None
        return mult_id

    return chooser


TABLE1_ROWS: tuple[CountFormula, ...] = (
    _row(
        "pairprod-rings-and-fields",
        "table1",
        lambda n: n * n,
        lambda n: 0,
        lambda n: (n - 1) * n,
        lambda n: 2 * n * n - n,
        lambda size, p: _measure_exact_quadratic(size, p),
    ),
    _row(
        "pairsum-ring-general",
        "table1",
        lambda n: (n + 1) * n // 2,
        lambda n: n,
        lambda n: (3 * n + 1) * n // 2 - 1,
        lambda n: 2 * n * n + 2 * n - 1,
        _measure_alg2("ring", gf2=False),
    ),
    _row(
        "pairsum-ring-gf2",
        "table1",
        lambda n: (n + 1) * n // 2,
        lambda n: 0,
        lambda n: (3 * n - 1) * n // 2 - 1,
        lambda n: 2 * n * n - 1,
        _measure_alg2("ring", gf2=True),
    ),
    _row(
        "pairsum-field-general",
        "table1",
        lambda n: (n + 1) * n // 2,
        lambda n: n,
        lambda n: 3 * (n - 1) * n // 2,
        lambda n: 2 * n * n,
        _measure_alg2("field", gf2=False),
    ),
    _row(
        "pairsum-field-gf2",
        "table1",
        lambda n: (n - 1) * n // 2,
        lambda n: 0,
        lambda n: (3 * n - 5) * n // 2,
        lambda n: 2 * n * n - 3 * n,
        _measure_alg2("field", gf2=True),
    ),
    _row(
        "direct",
        "table1",
        lambda n: n * n,
        lambda n: 0,
        lambda n: (n - 1) * n,
        lambda n: 2 * n * n - n,
        _measure_direct,
    ),
)


def _odd3(size):
    return size % 2 == 1 and size >= 3


TABLE6_ROWS: tuple[CountFormula, ...] = (
    # Ring rows are sized by the vector dimension n.
    _row(
        "rings-alg1",
        "table6",
        lambda n: n * n,
        lambda n: 0,
        lambda n: n * n - n,
        lambda n: 2 * n * n - n,
        _measure_gf2("alg1", _odd3),
    ),
    _row(
        "rings-alg2",
        "table6",
        lambda n: (n * n + n) // 2,
        lambda n: 0,
        lambda n: (3 * n * n - n) // 2 - 1,
        lambda n: 2 * n * n - 1,
        _measure_gf2("alg2-ring", _odd3),
    ),
    _row(
        "rings-redundant-prior",
        "table6",
        lambda n: n * n,
        lambda n: 0,
        lambda n: n * n - n,
        lambda n: 2 * n * n - n,
        _measure_gf2("direct", _odd3),
    ),
    # Type-I rows, sized by the extension degree m.
    _row(
        "onb1-alg1",
        "table6",
        lambda m: m * m + 2 * m + 1,
        lambda m: 0,
        lambda m: m * m + m,
        lambda m: 2 * m * m + 3 * m + 1,
        _measure_gf2("onb1-embedded-alg1", lambda m: _basis_exists(m, 1)),
    ),
    _row(
        "onb1-alg2",
        "table6",
        lambda m: (m * m + m) // 2,
        lambda m: 0,
        lambda m: (3 * m * m + m - 2) // 2,
        lambda m: 2 * m * m + m - 1,
        _measure_gf2("onb1-embedded-alg2", lambda m: _basis_exists(m, 1)),
    ),
    _row(
        "onb1-eq24",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: m * m - 1,
        lambda m: 2 * m * m - 1,
        _measure_gf2("onb1-eq24", lambda m: _basis_exists(m, 1)),
    ),
    _row(
        "onb1-eq25",
        "table6",
        lambda m: (m * m + m) // 2,
        lambda m: 0,
        lambda m: (3 * m * m - m) // 2 - 1,
        lambda m: 2 * m * m - 1,
        _measure_gf2("onb1-eq25", lambda m: _basis_exists(m, 1)),
    ),
    _row(
        "onb1-redundant-prior",
        "table6",
        lambda m: m * m + m,
        lambda m: 0,
        lambda m: m * m + m,
        lambda m: 2 * m * m + 2 * m,
    ),
    _row(
        "onb1-massey-omura",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: 2 * m * m - 2 * m,
        lambda m: 3 * m * m - 2 * m,
    ),
    _row(
        "onb1-best-prior",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: m * m - 1,
        lambda m: 2 * m * m - 1,
    ),
    _row(
        "onb1-halfmult-prior",
        "table6",
        lambda m: (m * m + m) // 2,
        lambda m: 0,
        lambda m: (3 * m * m - m) // 2 - 1,
        lambda m: 2 * m * m - 1,
    ),
    # Type-II rows.
    _row(
        "onb2-alg1",
        "table6",
        lambda m: 2 * m * m + m,
        lambda m: 0,
        lambda m: 2 * m * m,
        lambda m: 4 * m * m + m,
    ),
    _row(
        "onb2-simpli",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: 3 * m * m - m,
        lambda m: 4 * m * m - m,
        _measure_gf2("onb2-simpli", lambda m: _basis_exists(m, 2)),
    ),
    _row(
        "onb2-eq29",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: (3 * m * m - 3 * m) // 2,
        lambda m: (5 * m * m - 3 * m) // 2,
        _measure_gf2("onb2-eq29", lambda m: _basis_exists(m, 2)),
    ),
    _row(
        "onb2-eq30",
        "table6",
        lambda m: (m * m + m) // 2,
        lambda m: 0,
        lambda m: 2 * m * m - 2 * m,
        lambda m: (5 * m * m - 3 * m) // 2,
        _measure_gf2("onb2-eq30", lambda m: _basis_exists(m, 2)),
    ),
    _row(
        "onb2-redundant-prior",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: 2 * m * m - m,
        lambda m: 3 * m * m - m,
    ),
    _row(
        "onb2-massey-omura",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: 2 * m * m - 2 * m,
        lambda m: 3 * m * m - 2 * m,
    ),
    _row(
        "onb2-best-prior",
        "table6",
        lambda m: m * m,
        lambda m: 0,
        lambda m: (3 * m * m - 3 * m) // 2,
        lambda m: (5 * m * m - 3 * m) // 2,
    ),
    _row(
        "onb2-halfmult-prior",
        "table6",
        lambda m: (m * m + m) // 2,
        lambda m: 0,
        lambda m: 2 * m * m - 2 * m,
        lambda m: (5 * m * m - 3 * m) // 2,
    ),
)

TABLES = {"table1": TABLE1_ROWS, "table6": TABLE6_ROWS}


def _random_element(gf: GroundField, n: int, rng: random.Random) -> CycloElement:
    return CycloElement(gf, tuple(rng.randrange(gf.p) for _ in range(n)))


def _random_nb(params, rng: random.Random):
    return gaussonb.NormalBasisElement(
        params, tuple(rng.randrange(params.q) for _ in range(params.m))
    )


def _run_once(mult_id: str, p: int, size: int, rng: random.Random) -> OpCount:
    ctx = OpCount()
    gf = GroundField(p)
    if mult_id in ("direct", "alg1", "alg2-ring", "alg2-field",
                   "general-ring0", "general-ring1", "general-field1"):
        a = _random_element(gf, size, rng)
        b = _random_element(gf, size, rng)
        if mult_id == "direct":
            cyclocore.mul_direct(a, b, ctx)
        elif mult_id == "alg1":
            cyclocore.mul_alg1(a, b, ctx)
        elif mult_id == "alg2-ring":
            cyclocore.mul_alg2(a, b, cyclocore.RING, ctx)
        elif mult_id == "alg2-field":
            cyclocore.mul_alg2(a, b, cyclocore.FIELD, ctx)
        else:
            cyclocore.mul_general(a, b, mult_id.removeprefix("general-"), ctx)
    elif mult_id in _ONB_VARIANTS:
        k, variant = _ONB_VARIANTS[mult_id]
        params = gaussonb.GaussParams.create(size, k, p)
        a = _random_nb(params, rng)
        b = _random_nb(params, rng)
        if k == 1:
            gaussonb.mul_onb1(a, b, variant, ctx)
        else:
            gaussonb.mul_onb2(a, b, variant, ctx)
    elif mult_id in ("onb1-embedded-alg1", "onb1-embedded-alg2"):
        # The paired algorithms run on the (m+1)-dimensional embeddings.
        params = gaussonb.GaussParams.create(size, 1, p)
        a = gaussonb.embed_onb1(_random_nb(params, rng))
        b = gaussonb.embed_onb1(_random_nb(params, rng))
        if mult_id.endswith("alg1"):
            cyclocore.mul_alg1(a, b, ctx)
        else:
            cyclocore.mul_alg2(a, b, cyclocore.FIELD, ctx)
    else:
        raise UnsupportedCombination(f"unknown multiplier id {mult_id!r}")
    return ctx


def measure(mult_id: str, p: int, size: int) -> OpCount:
    """OpCount of one product by the named multiplier at (p, size).

    Counts are input-independent; three random pairs are run to assert it.
    Raises UnsupportedCombination when no such multiplier exists (even size
    for the odd-only algorithms, missing basis for the ONB rows, ...).
    """
    if not is_prime(p):
        raise UnsupportedCombination(f"p={p} is not prime")
    rng = random.Random(f"{mult_id}:{p}:{size}")
    try:
        counts = [_run_once(mult_id, p, size, rng) for _ in range(3)]
    except UnsupportedCombination:
        raise
    except CyclomulError as exc:
        raise UnsupportedCombination(
            f"{mult_id} unavailable at p={p}, size={size}: {exc}"
        ) from exc
    first = counts[0]
    assert all(c == first for c in counts), (
        f"{mult_id} at (p={p}, size={size}) produced input-dependent counts"
    )
    return first


@dataclass
class ReportRecord:
    """Expected vs measured counts for one (row, size)."""

    row_label: str
    source: str
    size: int
    expected: OpCount
    measured: Optional[OpCount]
    match: Optional[bool]

    def to_line(self) -> str:
        parts = [
            f"row={self.row_label}",
            f"source={self.source}",
            f"size={self.size}",
            f"expected_mult={self.expected.mult}",
            f"expected_doub={self.expected.doub}",
            f"expected_add={self.expected.add}",
            f"expected_total={self.expected.total}",
        ]
        if self.measured is None:
            parts.append("measured=null")
            parts.append("match=null")
        else:
            parts.extend(
                [
                    f"measured_mult={self.measured.mult}",
                    f"measured_doub={self.measured.doub}",
                    f"measured_add={self.measured.add}",
                    f"measured_total={self.measured.total}",
                    f"match={'true' if self.match else 'false'}",
                ]
            )
        return " ".join(parts)


def render_table(which: str, sizes, p: int = 2) -> list[ReportRecord]:
    """Build the comparison report for one table at the given sizes.

    Rows for prior published multipliers are expected-only (measured=null);
    for table6 all measurements run over GF(2).
    """
    if which not in TABLES:
        raise ValueError(f"which must be one of {tuple(TABLES)}, got {which!r}")
    meas_p = 2 if which == "table6" else p
    records = []
    for row in TABLES[which]:
        for size in sizes:
            exp = expected_counts(row, size)
            mult_id = row.measure_id(size, meas_p)
            measured = None
            match = None
            if mult_id is not None:
                try:
                    measured = measure(mult_id, meas_p, size)
                except UnsupportedCombination:
                    measured = None
                if measured is not None:
                    match = measured == exp
            records.append(ReportRecord(row.label, which, size, exp, measured, match))
    return records


def render_text(records: list[ReportRecord]) -> str:
    """Human-readable table of a report."""
    header = (
        f"{'row':<28}{'size':>5}  {'expected m/d/a (total)':>26}  "
        f"{'measured m/d/a (total)':>26}  match"
    )
    lines = [header, "-" * len(header)]
    for r in records:
        e = r.expected
        etxt = f"{e.mult}/{e.doub}/{e.add} ({e.total})"
        if r.measured is None:
            mtxt, flag = "-", "-"
        else:
            mm = r.measured
            mtxt = f"{mm.mult}/{mm.doub}/{mm.add} ({mm.total})"
            flag = "MATCH" if r.match else "MISMATCH"
        lines.append(f"{r.row_label:<28}{r.size:>5}  {etxt:>26}  {mtxt:>26}  {flag}")
    return "\n".join(lines)


def find_row(label: str) -> CountFormula:
    for rows in TABLES.values():
        for row in rows:
            if row.label == label:
                return row
    raise KeyError(label)
