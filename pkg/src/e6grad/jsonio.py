"""JSON serialization for scalars, matrices, algebra tables and gradings.

Formats:
  * scalar: four "p/q" strings in the power basis {1, z, z^2, z^3}
    (rational values serialize the same way, with three "0/1" entries)
  * matrix: {"rows": r, "cols": c, "entries": [[scalar, ...], ...]}
  * algebra table: {"dim": n, "basis_names": [...],
                    "entries": [[i, j, k, scalar], ...]}  (nonzero only)
  * grading: {"group": {"rank": r, "torsion": [...]},
              "components": [{"degree": [...], "basis_vectors": [[...], ...]}]}
"""

from __future__ import annotations

import json
from fractions import Fraction

from .abgroup import FgAbelianGroup
from .gradings import GradedDecomposition
from .scalar import Cyc
from .structalg import AlgebraTable


def scalar_to_json(x) -> list[str]:
    if isinstance(x, Cyc):
        return x.to_strings()
    f = Fraction(x)
    return [f"{f.numerator}/{f.denominator}", "0/1", "0/1", "0/1"]


def scalar_from_json(parts):
    c = Cyc.from_strings(parts)
    if c.is_rational():
        return c.as_fraction()
    return c


def matrix_to_json(m) -> dict:
    return {
        "rows": len(m),
        "cols": len(m[0]) if m else 0,
        "entries": [[scalar_to_json(x) for x in row] for row in m],
    }


def matrix_from_json(d):
    return [[scalar_from_json(x) for x in row] for row in d["entries"]]


def table_to_json(table: AlgebraTable) -> dict:
    entries = []
    for i in range(table.dim):
        for j in range(table.dim):
            for k, c in sorted(table.prod[i][j].items()):
                entries.append([i, j, k, scalar_to_json(c)])
    return {"dim": table.dim, "basis_names": table.basis_names,
            "entries": entries}


def table_from_json(d) -> AlgebraTable:
    dim = d["dim"]
    prod = [[{} for _ in range(dim)] for _ in range(dim)]
    for i, j, k, c in d["entries"]:
        prod[i][j][k] = scalar_from_json(c)
    return AlgebraTable(dim, d["basis_names"], prod)


def grading_to_json(gd: GradedDecomposition) -> dict:
    group = {"rank": gd.group.rank, "torsion": list(gd.group.torsion)}
    comps = []
    for deg, sub in gd.components:
        comps.append({
            "degree": list(deg),
            "basis_vectors": [[scalar_to_json(x) for x in v]
                              for v in sub.basis],
        })
    return {"group": group, "components": comps, "name": gd.name}


def grading_from_json(d, table: AlgebraTable) -> GradedDecomposition:
    group = FgAbelianGroup(d["group"]["rank"], tuple(d["group"]["torsion"]))
    comps = []
    for c in d["components"]:
        vecs = [[scalar_from_json(x) for x in v] for v in c["basis_vectors"]]
        comps.append((tuple(c["degree"]), vecs))
    return GradedDecomposition(table, group, comps, d.get("name", ""))


def dump(obj, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load(path: str):
    with open(path) as fh:
        return json.load(fh)
