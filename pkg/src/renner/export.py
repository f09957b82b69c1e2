"""Text, JSON and CSV renderings of the computed objects.

All writers are deterministic: same input, same bytes.
"""

from __future__ import annotations

import csv
import io
import json

from .conjorbit import ClassCatalog
from .crosslat import CrossSectionLattice
from .rootsys import RootSystem
from .weyl import GroupTable

SCHEMA_VERSION = 1


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _gens(gens) -> str:
    return "<" + ", ".join(map(str, gens)) + ">" if gens else ""


def roots_dict(rs: RootSystem) -> dict:
    ct = rs.cartan_type
    return {
        "family": ct.family,
        "rank": ct.rank,
        "cartan": rs.cartan.tolist(),
        "numRoots": rs.num_roots,
        "numPositive": rs.num_positive,
    }


def roots_text(rs: RootSystem) -> str:
    lines = [
        f"type: {rs.cartan_type}",
        f"roots: {rs.num_roots}",
        f"positive roots: {rs.num_positive}",
        "cartan matrix:",
    ]
    lines += ["  " + " ".join(f"{x:2d}" for x in row) for row in rs.cartan.tolist()]
    return "\n".join(lines) + "\n"


def group_dict(gt: GroupTable) -> dict:
    return {
        "order": gt.order,
        "numPositive": gt.root_system.num_positive,
        "longestLength": int(gt.length.max()),
    }


def group_text(gt: GroupTable) -> str:
    d = group_dict(gt)
    return (
        f"type: {gt.root_system.cartan_type}\n"
        f"order: {d['order']}\n"
        f"longest element length: {d['longestLength']}\n"
        f"generators: {gt.rank}\n"
    )


def lattice_dict(lat: CrossSectionLattice) -> dict:
    return {
        "weightIndex": lat.weight_index,
        "J0": list(lat.j0),
        "idempotents": [
            {"label": e.label, "lambdaStar": list(e.lambda_star), "lambdaSub": list(e.lambda_sub)}
            for e in lat.idempotents
        ],
    }


def lattice_text(lat: CrossSectionLattice) -> str:
    rows = [("e", "W^*(e)", "W_*(e)")]
    rows += [(e.label, _gens(e.lambda_star), _gens(e.lambda_sub)) for e in lat.idempotents]
    widths = [max(len(r[k]) for r in rows) for k in range(3)]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


def catalog_dict(cat: ClassCatalog) -> dict:
    return {
        "type": str(cat.cartan_type),
        "weightIndex": cat.weight_index,
        "idempotents": [
            {
                "label": b.label,
                "lambdaStar": list(b.idempotent.lambda_star),
                "lambdaSub": list(b.idempotent.lambda_sub),
                "numCosets": b.num_cosets,
                "numClasses": len(b.classes),
                "classes": [
                    {"word": list(r.rep_word), "orbitSize": r.orbit_size, "length": r.min_length}
                    for r in b.classes
                ],
            }
            for b in cat.per_idempotent
        ],
        "totalClasses": cat.total_classes,
    }


def catalog_json(cat: ClassCatalog) -> str:
    return dumps(catalog_dict(cat))


def catalog_csv(cat: ClassCatalog) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["idempotent", "word", "length", "orbitSize"])
    for b in cat.per_idempotent:
        for r in b.classes:
            writer.writerow([b.label, " ".join(map(str, r.rep_word)), r.min_length, r.orbit_size])
    return buf.getvalue()


def format_word(word) -> str:
    return "[ " + ", ".join(map(str, word)) + " ]" if word else "[ ]"


def catalog_paper(cat: ClassCatalog) -> str:
    """One class per line, grouped by idempotent, in the bracket notation
    ``[ p, q, ..., r ]`` standing for ``s_p s_q ... s_r e``."""
    out = []
    for b in cat.per_idempotent:
        out.append(f"Conjugacy Classes Associated with {b.label}")
        if b.idempotent.is_zero:
            out.append("0")
        else:
            out.extend(format_word(r.rep_word) for r in b.classes)
        out.append("")
    return "\n".join(out)
