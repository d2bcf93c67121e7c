"""Built-in code catalog.

Four buildable codes ship with the package (Hamming-7, the two-error BCH of
length 15, and the quadratic-residue codes of length 17 and 23), plus
metadata-only rows for the longer quadratic-residue lengths whose
splitting-field degrees put precomputation far beyond desk scale: at length
41 the field equations already have degree 2^20.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codec import CyclicCode
from .codespec import CodeSpec, build_code, format_codespec, resolve
from .finite_field import splitting_field_degree


def quadratic_residues(p: int) -> frozenset[int]:
    return frozenset((i * i) % p for i in range(1, p))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    buildable: bool
    m: int
    note: str
    spec: CodeSpec | None = None


def _buildable() -> list[CatalogEntry]:
    rows = [
        ("hamming7", 7, (1, 2, 4), "single-error Hamming code [7,4,3]"),
        ("bch15", 15, (1, 2, 3, 4, 6, 8, 9, 12), "two-error BCH code [15,7,5]"),
        ("qr17", 17, tuple(sorted(quadratic_residues(17))), "quadratic-residue code [17,9,5]"),
        ("golay23", 23, tuple(sorted(quadratic_residues(23))),
         "binary Golay code [23,12,7] (stretch: weight-3 precompute may exceed desk budget)"),
    ]
    return [
        CatalogEntry(
            name=name,
            n=n,
            buildable=True,
            m=splitting_field_degree(n),
            note=note,
            spec=resolve(n, Q, name=name),
        )
        for name, n, Q, note in rows
    ]


LARGE_QR_LENGTHS = (31, 41, 47, 71, 73, 79, 97, 103, 113)


def _metadata_rows() -> list[CatalogEntry]:
    return [
        CatalogEntry(
            name=f"qr{n}",
            n=n,
            buildable=False,
            m=splitting_field_degree(n),
            note="quadratic-residue length: metadata only, precomputation not desk-scale",
        )
        for n in LARGE_QR_LENGTHS
    ]


def entries() -> list[CatalogEntry]:
    return _buildable() + _metadata_rows()


def names() -> list[str]:
    return [e.name for e in entries() if e.buildable]


def get(name: str) -> CatalogEntry:
    for entry in entries():
        if entry.name == name:
            return entry
    raise KeyError(f"unknown catalog code {name!r} (buildable: {', '.join(names())})")


def spec_text(name: str) -> str:
    entry = get(name)
    if not entry.buildable or entry.spec is None:
        raise ValueError(f"{name} is a metadata-only row; it has no buildable spec")
    return format_codespec(entry.spec)


def build(name: str) -> CyclicCode:
    entry = get(name)
    if entry.spec is None:
        raise ValueError(f"{name} is a metadata-only row")
    return build_code(entry.spec)
