"""JSON formats for algebras, Reedy data, weight orders and quiver files.

Scalars are decimal strings ("n" or "n/d") so rational data round-trips
bit-exactly.  Dumps are canonical: fixed key order, two-space indent,
sorted sparse entries, trailing newline.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Algebra, AlgebraError, AlgSubspace, IdempotentFrame, subalgebra_closure
from .constructors import QuiverPresentation
from .fields import Field, field_of
from .linalg import span
from .qh import WeightOrder
from .reedy import ReedyStructure


class FormatError(Exception):
    pass


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False) + "\n"


def write_json(path, data) -> None:
    Path(path).write_text(dumps(data), encoding="utf-8")


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: not valid JSON ({exc})") from exc
    except OSError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def field_to_json(field: Field) -> dict:
    if field.characteristic == 0:
        return {"kind": "Q"}
    return {"kind": "GF", "p": field.characteristic}


def field_from_json(data) -> Field:
    if not isinstance(data, dict) or "kind" not in data:
        raise FormatError("field descriptor must be an object with a 'kind'")
    if data["kind"] == "Q":
        return field_of("Q")
    if data["kind"] == "GF":
        return field_of("GF", int(data.get("p", 0)))
    raise FormatError(f"unknown field kind {data['kind']!r}")


def parse_field_flag(text: str) -> Field:
    """Parse a --field flag value: Q or GF:p."""
    if text == "Q":
        return field_of("Q")
    if text.startswith("GF:"):
        return field_of("GF", int(text.split(":", 1)[1]))
    raise FormatError(f"bad field flag {text!r} (use Q or GF:p)")


def algebra_to_json(a: Algebra, frame: IdempotentFrame | None = None) -> dict:
    f = a.field
    mult_rows = []
    for i in range(a.dim):
        for j in range(a.dim):
            pairs = a.mult[i][j]
            if pairs:
                mult_rows.append([i, j, [[k, f.show(c)] for k, c in pairs]])
    data = {
        "field": field_to_json(f),
        "dim": a.dim,
        "labels": list(a.labels),
        "unit": [f.show(x) for x in a.unit],
        "mult": mult_rows,
    }
    if frame is not None:
        data["idempotents"] = {
            lab: [f.show(x) for x in vec]
            for lab, vec in zip(frame.labels, frame.idempotents)
        }
        if frame.degrees is not None:
            data["degrees"] = {lab: d for lab, d in zip(frame.labels, frame.degrees)}
    return data


def algebra_from_json(data: dict):
    """Parse an algebra document; returns (algebra, frame-or-None)."""
    try:
        f = field_from_json(data["field"])
        labels = list(data["labels"])
        dim = int(data["dim"])
    except KeyError as exc:
        raise FormatError(f"algebra document missing field {exc}") from exc
    if len(labels) != dim:
        raise FormatError("label count does not match dim")
    unit = data.get("unit")
    if not isinstance(unit, list) or len(unit) != dim:
        raise FormatError("unit vector missing or of wrong length")
    mult = [[() for _ in range(dim)] for _ in range(dim)]
    for row in data.get("mult", []):
        try:
            i, j, pairs = row
        except (TypeError, ValueError) as exc:
            raise FormatError(f"bad mult row {row!r}") from exc
        if not (0 <= i < dim and 0 <= j < dim):
            raise FormatError(f"mult row indices out of range: {row[:2]}")
        entries = []
        for k, c in pairs:
            if not 0 <= k < dim:
                raise FormatError(f"mult target index out of range in row ({i},{j})")
            entries.append((int(k), f.parse(c)))
        mult[i][j] = tuple(sorted(entries))
    a = Algebra(f, labels, mult, [f.parse(x) for x in unit])
    frame = None
    if "idempotents" in data:
        idem_labels = list(data["idempotents"].keys())
        idems = []
        for lab in idem_labels:
            vec = data["idempotents"][lab]
            if len(vec) != dim:
                raise FormatError(f"idempotent {lab!r} has wrong length")
            idems.append([f.parse(x) for x in vec])
        degrees = None
        if "degrees" in data:
            try:
                degrees = [int(data["degrees"][lab]) for lab in idem_labels]
            except KeyError as exc:
                raise FormatError(f"degrees missing for idempotent {exc}") from exc
        try:
            frame = IdempotentFrame(a, idems, idem_labels, degrees)
        except AlgebraError as exc:
            raise FormatError(f"invalid idempotent frame: {exc}") from exc
    return a, frame


def load_algebra(path):
    return algebra_from_json(read_json(path))


def save_algebra(path, a: Algebra, frame: IdempotentFrame | None = None) -> None:
    write_json(path, algebra_to_json(a, frame))


def _subspace_to_json(field: Field, sub: AlgSubspace) -> dict:
    return {"basis": [[field.show(x) for x in row] for row in sub.space.basis]}


def reedy_to_json(r: ReedyStructure, algebra_ref: str) -> dict:
    f = r.algebra.field
    return {
        "algebra": algebra_ref,
        "degrees": {lab: d for lab, d in zip(r.frame.labels, r.frame.degrees)},
        "aplus": _subspace_to_json(f, r.aplus),
        "aminus": _subspace_to_json(f, r.aminus),
    }


def _subspace_from_json(a: Algebra, data: dict, name: str) -> AlgSubspace:
    f = a.field
    if "basis" in data:
        vectors = [[f.parse(x) for x in row] for row in data["basis"]]
        sub = AlgSubspace(a, span(f, a.dim, vectors), AlgSubspace.PLAIN)
        if not sub.is_subalgebra():
            raise FormatError(f"{name}: basis does not span a unital subalgebra")
        return AlgSubspace(a, sub.space, AlgSubspace.SUBALGEBRA)
    if "generators" in data:
        vectors = [[f.parse(x) for x in row] for row in data["generators"]]
        return subalgebra_closure(a, vectors)
    raise FormatError(f"{name}: need 'basis' or 'generators'")


def reedy_from_json(data: dict, base_dir) -> ReedyStructure:
    if "algebra" not in data:
        raise FormatError("reedy document must reference an algebra file")
    alg_path = Path(base_dir) / data["algebra"]
    a, frame = load_algebra(alg_path)
    if frame is None:
        raise FormatError(f"{alg_path}: algebra file carries no idempotent frame")
    degrees_map = data.get("degrees")
    if degrees_map is None:
        if frame.degrees is None:
            raise FormatError("no degree function given (reedy file or algebra file)")
        work = frame
    else:
        try:
            degs = [int(degrees_map[lab]) for lab in frame.labels]
        except KeyError as exc:
            raise FormatError(f"degrees missing for idempotent {exc}") from exc
        work = frame.with_degrees(degs)
    aplus = _subspace_from_json(a, data.get("aplus", {}), "aplus")
    aminus = _subspace_from_json(a, data.get("aminus", {}), "aminus")
    try:
        return ReedyStructure(a, work, aplus, aminus)
    except AlgebraError as exc:
        raise FormatError(str(exc)) from exc


def load_reedy(path) -> ReedyStructure:
    path = Path(path)
    return reedy_from_json(read_json(path), path.parent)


def save_reedy(path, r: ReedyStructure, algebra_ref: str) -> None:
    write_json(path, reedy_to_json(r, algebra_ref))


def order_from_json(data: dict, frame: IdempotentFrame) -> WeightOrder:
    if "levels" not in data:
        raise FormatError("order document needs a 'levels' object")
    try:
        return WeightOrder.from_json(data, frame.labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load_order(path, frame: IdempotentFrame) -> WeightOrder:
    return order_from_json(read_json(path), frame)


def quiver_from_json(data: dict) -> QuiverPresentation:
    for key in ("vertices", "arrows"):
        if key not in data:
            raise FormatError(f"quiver document missing {key!r}")
    relations = []
    for ridx, rel in enumerate(data.get("relations", [])):
        terms = []
        for term in rel:
            if "coeff" not in term or "path" not in term:
                raise FormatError(f"relation {ridx}: terms need 'coeff' and 'path'")
            terms.append((term["coeff"], tuple(term["path"])))
        relations.append(terms)
    try:
        return QuiverPresentation(
            data["vertices"],
            data["arrows"],
            relations,
            data.get("nilpotency_bound", 1),
        )
    except AlgebraError as exc:
        raise FormatError(str(exc)) from exc


def quiver_to_json(pres: QuiverPresentation) -> dict:
    return {
        "vertices": list(pres.vertices),
        "arrows": [[s, t, l] for s, t, l in pres.arrows],
        "relations": [
            [{"coeff": str(c), "path": list(p)} for c, p in rel] for rel in pres.relations
        ],
        "nilpotency_bound": pres.nilpotency_bound,
    }


def load_quiver(path) -> QuiverPresentation:
    return quiver_from_json(read_json(path))
