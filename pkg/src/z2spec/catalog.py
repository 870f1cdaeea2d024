"""The shipped instance catalog: one entry per graded ring exercised by the
verification suites and the golden reports.

Families: Z/n[i] for n in {2,3,4,5,9,10,12}; quadratic extensions of Z/2..Z/5
with every alpha; square-zero extensions of Z/2, Z/3, Z/4 by each nontrivial
cyclic module; truncated polynomial rings over Z/2 and Z/4 with k in {1,2,3};
and Z/4, Z/6, Z/12 with the trivial grading.  34 instances in all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grading import GradedRing
from .instances import InstanceSpec, build_instance


@dataclass(frozen=True)
class CatalogEntry:
    instance_id: str
    recipe: dict

    def spec(self) -> InstanceSpec:
        return InstanceSpec(dict(self.recipe))

    def build(self) -> GradedRing:
        return build_instance(self.spec())


def _entries() -> list[CatalogEntry]:
    out = []
    for n in (2, 3, 4, 5, 9, 10, 12):
        out.append(CatalogEntry(f"gaussian-{n}", {"kind": "gaussian", "n": n}))
    for n in (2, 3, 4, 5):
        for alpha in range(n):
            out.append(CatalogEntry(
                f"quadratic-{n}-a{alpha}",
                {"kind": "quadratic", "base": {"kind": "zmod", "n": n},
                 "alpha": alpha}))
    for n in (2, 3, 4):
        for m in range(2, n + 1):
            if n % m == 0:
                out.append(CatalogEntry(
                    f"trivext-{n}-m{m}",
                    {"kind": "trivial_extension", "n": n, "orders": [m]}))
    for n in (2, 4):
        for k in (1, 2, 3):
            out.append(CatalogEntry(
                f"truncpoly-{n}-k{k}",
                {"kind": "truncated_poly", "base": {"kind": "zmod", "n": n},
                 "k": k}))
    for n in (4, 6, 12):
        out.append(CatalogEntry(f"zmod-{n}", {"kind": "zmod", "n": n}))
    return out


CATALOG: tuple[CatalogEntry, ...] = tuple(_entries())


def catalog_ids() -> list[str]:
    return [e.instance_id for e in CATALOG]


def catalog_entry(instance_id: str) -> CatalogEntry:
    for entry in CATALOG:
        if entry.instance_id == instance_id:
            return entry
    raise KeyError(instance_id)
