"""JSON (de)serialization of matrices and ring specifications.

Schema: ``{"ring": {"kind": "int" | "mod" | "footnote", "modulus"?: k},
"n": int, "entries": [[...]]}``.  Entries are integers (canonical
residues for "mod"); for "footnote" they may also be coordinate
6-vectors or the basis symbols "1", "x", "y", "x^2", "y^2", "x^3".
"""

from __future__ import annotations

import json

from .matrix import Matrix
from .rings import FOOTNOTE_BASIS, FootnoteAlgebra, IntegerRing, ModularRing, PrimeField, Ring


def ring_from_spec(spec: str) -> Ring:
    """Parse a CLI ring spec: ``int``, ``mod:k`` or ``footnote:p``."""
    if spec == "int":
        return IntegerRing()
    if spec.startswith("mod:"):
        return ModularRing(int(spec[4:]))
    if spec == "footnote":
        return FootnoteAlgebra()
    if spec.startswith("footnote:"):
        return FootnoteAlgebra(PrimeField(int(spec[9:])))
    raise ValueError(f"unknown ring spec {spec!r} (expected int, mod:k or footnote:p)")


def ring_to_json(ring: Ring) -> dict:
    if isinstance(ring, FootnoteAlgebra):
        out = {"kind": "footnote"}
        if isinstance(ring.base, ModularRing):
            out["modulus"] = ring.base.modulus
        return out
    if isinstance(ring, ModularRing):
        return {"kind": "mod", "modulus": ring.modulus}
    if isinstance(ring, IntegerRing):
        return {"kind": "int"}
    raise ValueError(f"ring {ring.describe()} has no JSON form")


def ring_from_json(data: dict) -> Ring:
    kind = data.get("kind")
    if kind == "int":
        return IntegerRing()
    if kind == "mod":
        return ModularRing(int(data["modulus"]))
    if kind == "footnote":
        if "modulus" in data:
            return FootnoteAlgebra(PrimeField(int(data["modulus"])))
        return FootnoteAlgebra()
    raise ValueError(f"unknown ring kind {kind!r}")


def _footnote_entry(ring: FootnoteAlgebra, value):
    if isinstance(value, int):
        return ring.from_int(value)
    if isinstance(value, str):
        if value not in FOOTNOTE_BASIS:
            raise ValueError(f"unknown footnote symbol {value!r}")
        return ring.basis_element(value)
    if isinstance(value, (list, tuple)) and len(value) == 6:
        return tuple(ring.base.from_int(int(c)) for c in value)
    raise ValueError(f"bad footnote entry {value!r}")


def matrix_from_json(data: dict) -> Matrix:
    ring = ring_from_json(data["ring"])
    n = int(data["n"])
    entries = data["entries"]
    if len(entries) != n or any(len(row) != n for row in entries):
        raise ValueError(f"entries are not an {n}x{n} grid")
    if isinstance(ring, FootnoteAlgebra):
        rows = [[_footnote_entry(ring, v) for v in row] for row in entries]
        return Matrix(ring, rows)
    return Matrix.from_ints(ring, entries)


def matrix_to_json(M: Matrix) -> dict:
    ring = M.ring
    if isinstance(ring, FootnoteAlgebra):
        entries = [[list(v) for v in row] for row in M.rows]
    else:
        entries = [list(row) for row in M.rows]
    return {"ring": ring_to_json(ring), "n": M.nrows, "entries": entries}


def load_matrix_file(path: str) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return matrix_from_json(json.load(fh))
