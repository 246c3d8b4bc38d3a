"""Catalog search over all cyclic codes of a given length, serialization and re-verification."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field

import jsonschema

from . import __version__
from .aqec import (
    SCHEMA_FIELDS,
    AqecRecord,
    SubsystemRecord,
    css_aqec,
    css_subsystem,
    defset_aqec,
    euclidean_assc,
)
from .cyclic import all_cyclic_codes, code_from_defset, dual
from .errors import (
    BudgetExceeded,
    CodeError,
    HullTooLarge,
    SchemaViolation,
    SearchSpaceTooLarge,
)
from .polyring import cyclotomic_cosets
from .weights import DEFAULT_BUDGET, cache_clear

MAX_DEFSETS = 2**20

_int_or_null = {"type": ["integer", "null"]}
_bool_or_null = {"type": ["boolean", "null"]}
_residues = {"type": "array", "items": {"type": "integer", "minimum": 0}}

RECORD_SCHEMA = {
    "type": "object",
    "required": list(SCHEMA_FIELDS),
    "properties": {
        "type": {"enum": ["aqec", "subsystem"]},
        "n": {"type": "integer", "minimum": 1},
        "q": {"type": "integer", "minimum": 2},
        "k": {"type": "integer", "minimum": 0},
        "r": _int_or_null,
        "dx": {"type": "integer", "minimum": 1},
        "dz": {"type": "integer", "minimum": 1},
        "dx_exact": {"type": "boolean"},
        "dz_exact": {"type": "boolean"},
        "construction": {"enum": ["css", "genpoly", "defset", "manual", "euclidean"]},
        "c1_defset": _residues,
        "c2_defset": _residues,
        "pure_x": _bool_or_null,
        "pure_z": _bool_or_null,
        "tx": _int_or_null,
        "tz": _int_or_null,
        "meta": {"type": "object"},
    },
    "additionalProperties": False,
}


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class CatalogEntry:
    record: AqecRecord | SubsystemRecord
    meta: dict = field(default_factory=dict, compare=False)

    def as_dict(self) -> dict:
        d = self.record.as_dict()
        if self.meta:
            d["meta"] = self.meta
        return d

    def to_json(self) -> str:
        return dumps(self.as_dict())


def _sort_key(rec):
    return (
        -rec.k,
        -rec.dz.value,
        -rec.dx.value,
        list(rec.c1_defset),
        rec.type,
        -1 if rec.r is None else rec.r,
        list(rec.c2_defset),
    )


def _timestamp() -> int | None:
    # wall-clock time would break byte-identical reruns; honour SOURCE_DATE_EPOCH only
    stamp = os.environ.get("SOURCE_DATE_EPOCH")
    return int(stamp) if stamp and stamp.isdigit() else None


def search_catalog(n: int, q: int, budget: int = DEFAULT_BUDGET) -> list[CatalogEntry]:
    """Defining-set AQECs and Euclidean ASSCs over every cyclic code of length n.

    Only records whose distances are exact within the budget are kept.
    """
    cosets = cyclotomic_cosets(n, q)
    if 2 ** len(cosets) > MAX_DEFSETS:
        raise SearchSpaceTooLarge(f"{len(cosets)} cosets give 2^{len(cosets)} defining sets")
    found = []
    for C1 in all_cyclic_codes(n, q):
        if C1.k == 0:
            continue
        Cd = dual(C1)
        if C1.T <= Cd.T:
            admissible = Cd.T - C1.T
            pool = [c for c in cosets if set(c.members) <= admissible]
            seen = set()
            for mask in range(1 << len(pool)):
                T = {t for i, c in enumerate(pool) if mask >> i & 1 for t in c.members}
                U = frozenset(T | {(-t) % n for t in T})
                if U in seen or len(U) >= 2 * C1.k - n:
                    continue
                seen.add(U)
                found.append(defset_aqec(C1, sorted(T), budget))
        try:
            found.extend(euclidean_assc(C1, budget))
        except HullTooLarge:
            pass

    meta = {
        "search": {"n": n, "q": q, "budget": budget},
        "timestamp": _timestamp(),
        "tool_version": __version__,
    }
    out, keys = [], set()
    for rec in sorted((r for r in found if r.exact), key=_sort_key):
        key = (rec.n, rec.k, rec.dx.value, rec.dz.value, rec.type)
        if key in keys:
            continue
        keys.add(key)
        out.append(CatalogEntry(rec, meta))
    return out


# -- I/O ------------------------------------------------------------------------


def to_csv(dicts) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SCHEMA_FIELDS)
    for d in dicts:
        row = []
        for f in SCHEMA_FIELDS:
            v = d[f]
            if isinstance(v, list):
                v = ",".join(map(str, v))
            elif v is None:
                v = ""
            elif isinstance(v, bool):
                v = "true" if v else "false"
            row.append(v)
        w.writerow(row)
    return buf.getvalue()


def read_entries(text: str) -> list[dict]:
    """JSON array, single object, or one object per line."""
    text = text.strip()
    if not text:
        return []
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        try:
            data = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as e:
            raise SchemaViolation(f"not JSON: {e}") from None
    return data if isinstance(data, list) else [data]


def validate_entry(d) -> dict:
    try:
        jsonschema.validate(d, RECORD_SCHEMA)
    except jsonschema.ValidationError as e:
        raise SchemaViolation(e.message) from None
    return d


# -- verification ---------------------------------------------------------------


@dataclass
class VerifyReport:
    passed: bool
    fields: dict[str, tuple] = field(default_factory=dict)
    error: str | None = None

    @property
    def mismatches(self) -> list[str]:
        return [f for f, (a, b) in self.fields.items() if a != b]


KEY_FIELDS = ("n", "q", "k", "r", "dx", "dz")


def _recompute(d: dict, budget: int):
    try:
        C1 = code_from_defset(d["n"], d["q"], d["c1_defset"])
        C2 = code_from_defset(d["n"], d["q"], d["c2_defset"])
    except (CodeError, ValueError) as e:
        raise SchemaViolation(f"defining set rejected ({type(e).__name__}: {e})") from e
    if d["construction"] == "euclidean":
        pair = euclidean_assc(C1, budget)
        match = [p for p in pair if (p.k, p.r) == (d["k"], d["r"])]
        return match[0] if match else pair[0]
    if d["type"] == "subsystem":
        return css_subsystem(C1, C2, d["r"] if d["r"] is not None else 0, budget)
    return css_aqec(C1, C2, budget, construction=d["construction"])


def verify_record(entry, budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Rebuild the codes from the recorded defining sets and recompute every field."""
    d = entry.as_dict() if isinstance(entry, CatalogEntry) else validate_entry(entry)
    cache_clear()
    try:
        rec = _recompute(d, budget)
    except SchemaViolation:
        raise
    except CodeError as e:
        return VerifyReport(False, error=f"{type(e).__name__}: {e}")
    if not rec.exact:
        raise BudgetExceeded(f"{rec.label()} is not exact within budget {budget}")
    fresh = rec.as_dict()
    fields = {f: (d[f], fresh[f]) for f in SCHEMA_FIELDS}
    passed = all(d[f] == fresh[f] for f in KEY_FIELDS)
    return VerifyReport(passed, fields)
