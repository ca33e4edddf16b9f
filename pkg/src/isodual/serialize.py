"""Canonical JSON for codes, certificates and catalog entries."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

from .codes import DistanceReport, IsoDualCertificate, LinearCode, Provenance
from .divisors import divisor_from_list, place_from_dict
from .field import field_from_dict
from .linalg import MatGF


def canonical_json(obj) -> str:
    """Sorted keys, no whitespace: equal inputs give byte-identical output."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def code_to_dict(code: LinearCode) -> dict:
    return {
        "field": code.field.to_dict(),
        "n": code.n,
        "k": code.k,
        "generator": code.generator.tolist(),
        "columns": [P.to_dict() for P in code.columns],
        "provenance": code.provenance.to_dict(),
    }


def code_from_dict(d: dict) -> LinearCode:
    F = field_from_dict(d["field"])
    gen = MatGF(F, d["generator"]) if d["k"] else MatGF.zeros(F, 0, d["n"])
    pd = d["provenance"]
    divs = pd.get("divisors", {})
    prov = Provenance(
        pd["family"],
        pd.get("params", {}),
        divisor_from_list(divs["D"]) if "D" in divs else None,
        divisor_from_list(divs["G"]) if "G" in divs else None,
        pd.get("genus"),
        pd.get("notes", {}),
    )
    code = LinearCode(F, gen, [place_from_dict(c) for c in d["columns"]], prov)
    if code.n != d["n"] or code.k != d["k"]:
        raise ValueError("stored n, k disagree with the generator")
    return code


def code_json(code: LinearCode) -> str:
    return canonical_json(code_to_dict(code))


def certificate_from_dict(d: dict) -> IsoDualCertificate:
    return IsoDualCertificate(
        d["verdict"],
        d.get("x"),
        d.get("residual_ok"),
        d.get("nullity"),
        d.get("samples", 0),
        d.get("reason", ""),
        d.get("candidate_x_ok"),
    )


def code_id(code: LinearCode) -> str:
    return hashlib.sha256(code_json(code).encode()).hexdigest()


@dataclass
class CatalogEntry:
    id: str
    code: LinearCode
    certificate: IsoDualCertificate | None = None
    distance: DistanceReport | None = None
    created: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat(timespec="seconds"))

    @classmethod
    def of(cls, code, certificate=None, distance=None) -> "CatalogEntry":
        return cls(code_id(code), code, certificate, distance)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "code": code_to_dict(self.code),
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "distance": self.distance.to_dict() if self.distance else None,
            "created": self.created,
        }


def append_catalog(path: str | Path, entry: CatalogEntry) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(canonical_json(entry.to_dict()) + "\n")


def read_catalog(path: str | Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
