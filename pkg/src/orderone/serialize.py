"""JSON encoding, decoding, and checksummed result caching for all domain types.

Integer magnitudes beyond 64 bits are emitted as decimal strings so the files
stay consumable from languages without big integers; both forms are accepted
on input.  Cached payloads carry a schema number and a content checksum, and
corrupt entries are silently recomputed.
"""
from __future__ import annotations

import hashlib
import json
import os
from fractions import Fraction
from pathlib import Path

from .cyclo import CycInt
from .geometry import DecompositionReport
from .intpoly import IntPoly
from .madanpal import MadanPalRecord
from .relations import Relation, RelationClass
from .roots import RootOfUnity
from .solver import SolutionPattern, SolutionTriple
from .weil import NewtonPolygon

SCHEMA = 1
_I64 = 2 ** 63


def _enc_int(c: int):
    return c if -_I64 < c < _I64 else str(c)


def _dec_int(v) -> int:
    return int(v)


def encode_poly(p: IntPoly) -> list:
    return [_enc_int(c) for c in p.coeffs]


def decode_poly(v) -> IntPoly:
    return IntPoly([_dec_int(c) for c in v])


def encode_root(r: RootOfUnity) -> str:
    return str(r)


def decode_root(v: str) -> RootOfUnity:
    return RootOfUnity.parse(v)


def encode_cyc(v: CycInt) -> dict:
    return {"level": v.level, "coeffs": [_enc_int(c) for c in v.coeffs]}


def decode_cyc(v: dict) -> CycInt:
    return CycInt(v["level"], tuple(_dec_int(c) for c in v["coeffs"]))


def encode_relation(r: Relation) -> dict:
    return {"entries": [{"root": str(root), "sign": sign} for root, sign in r.entries]}


def decode_relation(v: dict) -> Relation:
    return Relation.make(
        [(RootOfUnity.parse(e["root"]), e["sign"]) for e in v["entries"]]
    )


def encode_relation_class(c: RelationClass) -> dict:
    return {
        "representative": encode_relation(c.representative),
        "type_label": c.type_label,
    }


def decode_relation_class(v: dict) -> RelationClass:
    return RelationClass(decode_relation(v["representative"]), v["type_label"])


def encode_newton(np_: NewtonPolygon) -> list:
    return [[f"{s.numerator}/{s.denominator}", m] for s, m in np_.segments]


def decode_newton(v) -> NewtonPolygon:
    segs = []
    for s, m in v:
        num, den = s.split("/")
        segs.append((Fraction(int(num), int(den)), int(m)))
    return NewtonPolygon(tuple(segs))


def encode_record(rec: MadanPalRecord) -> dict:
    return {
        "n": rec.n,
        "p_n": encode_poly(rec.p_n),
        "real_weil": encode_poly(rec.real_weil),
        "weil": encode_poly(rec.weil),
        "simple_factors": [encode_poly(f) for f in rec.simple_factors],
        "newton": encode_newton(rec.newton),
        "ordinary": rec.ordinary,
    }


def decode_record(v: dict) -> MadanPalRecord:
    return MadanPalRecord(
        n=v["n"],
        p_n=decode_poly(v["p_n"]),
        real_weil=decode_poly(v["real_weil"]),
        weil=decode_poly(v["weil"]),
        simple_factors=tuple(decode_poly(f) for f in v["simple_factors"]),
        newton=decode_newton(v["newton"]),
        ordinary=v["ordinary"],
    )


def encode_triple(t: SolutionTriple) -> list:
    return [str(t.eta1), str(t.eta2), str(t.eta3)]


def decode_triple(v) -> SolutionTriple:
    return SolutionTriple(*(RootOfUnity.parse(s) for s in v))


def encode_pattern(p: SolutionPattern) -> dict:
    return {
        "order1": p.order1,
        "order2": p.order2,
        "orders3": list(p.orders3),
        "kind": p.kind,
    }


def decode_pattern(v: dict) -> SolutionPattern:
    return SolutionPattern(v["order1"], v["order2"], tuple(v["orders3"]), v["kind"])


def encode_report(r: DecompositionReport) -> dict:
    return {
        "n": r.n,
        "simple_factor": encode_poly(r.simple_factor),
        "weil": encode_poly(r.weil),
        "dimension": r.dimension,
        "ordinary": r.ordinary,
        "f_formula": r.f_formula,
        "f_oracle": r.f_oracle,
        "stabilizing_m": r.stabilizing_m,
        "geom_simple": r.geom_simple,
    }


def decode_report(v: dict) -> DecompositionReport:
    return DecompositionReport(
        n=v["n"],
        simple_factor=decode_poly(v["simple_factor"]),
        weil=decode_poly(v["weil"]),
        dimension=v["dimension"],
        ordinary=v["ordinary"],
        f_formula=v["f_formula"],
        f_oracle=v["f_oracle"],
        stabilizing_m=v["stabilizing_m"],
        geom_simple=v["geom_simple"],
    )


# -- caching ---------------------------------------------------------------------

CACHE_ENV = "ORDERONE_CACHE_DIR"


def cache_dir(override: str | None = None) -> Path:
    if override:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(".orderone-cache")


def _canonical(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def cache_get_or_compute(key: str, compute, directory: Path):
    """Load payload from <directory>/<key>.json if intact, else compute and store."""
    path = directory / f"{key}.json"
    if path.exists():
        try:
            doc = json.loads(path.read_text())
            body = doc.get("payload")
            if (
                doc.get("schema") == SCHEMA
                and doc.get("sha256") == hashlib.sha256(_canonical(body).encode()).hexdigest()
            ):
                return body
        except (ValueError, KeyError):
            pass  # corrupt cache entry: fall through and recompute
    body = compute()
    directory.mkdir(parents=True, exist_ok=True)
    doc = {
        "schema": SCHEMA,
        "sha256": hashlib.sha256(_canonical(body).encode()).hexdigest(),
        "payload": body,
    }
    path.write_text(json.dumps(doc, sort_keys=True, indent=1))
    return body
