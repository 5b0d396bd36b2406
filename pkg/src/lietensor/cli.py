"""Command-line front end.

Algebras travel as JSON documents with exact coefficient strings::

    {"field": "Q" | {"Fp": p},
     "dim": n,
     "basis_names": ["x1", ...],                  # optional on input
     "brackets": [[i, j, [[k, "coeff"], ...]], ...]}   # i < j only

Reports are emitted as canonical JSON (sorted keys, exact scalars as
strings); identical inputs produce byte-identical report documents.  Wall
clock timings are therefore left out of the document unless explicitly
requested with --timings.

Exit codes: 0 all verdicts pass or are skipped, 1 some theorem verdict
failed, 2 invalid input or usage.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Optional

from .catalog import CATALOG_SUITE, SUITE_FIELDS, catalog, is_supported
from .errors import (InternalCheckError, InvalidInputError, NotNilpotentError,
                     TheoremViolationError)
from .fields import QQ, Field, field_from_descriptor
from .freenilp import free_nilpotent
from .liealg import LieAlgebra, lie_algebra_from_brackets
from .presentation import (build_cover, exterior_via_presentation,
                           multiplier_via_presentation, presentation_of,
                           verify_cover_theorem)
from .tensor import Verdict, build_tensor_square, tensor_report

_CATALOG_HINTS = ("abelian", "heisenberg", "sl2", "zero")


# ----------------------------------------------------------------------
# documents
# ----------------------------------------------------------------------

def parse_algebra_document(doc: dict) -> LieAlgebra:
    """Validate and load an algebra document; antisymmetric completion is
    applied to the sparse i < j bracket list."""
    if not isinstance(doc, dict):
        raise InvalidInputError("algebra document must be a JSON object")
    for key in ("field", "dim", "brackets"):
        if key not in doc:
            raise InvalidInputError(f"algebra document lacks field {key!r}")
    try:
        field = field_from_descriptor(doc["field"])
    except ValueError as exc:
        raise InvalidInputError(str(exc)) from exc
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise InvalidInputError(f"dim must be a nonnegative integer, got {dim!r}")
    names = doc.get("basis_names")
    if names is not None:
        if len(names) != dim or not all(isinstance(s, str) for s in names):
            raise InvalidInputError("basis_names must list one string per basis vector")
    brackets = {}
    seen = set()
    for entry in doc["brackets"]:
        try:
            i, j, terms = entry
        except (TypeError, ValueError):
            raise InvalidInputError(f"malformed bracket entry {entry!r}")
        if not (isinstance(i, int) and isinstance(j, int)):
            raise InvalidInputError(f"bracket indices must be integers in {entry!r}")
        if not (0 <= i < dim and 0 <= j < dim):
            raise InvalidInputError(f"bracket indices ({i},{j}) out of range for dim {dim}")
        unordered = frozenset((i, j))
        if unordered in seen:
            raise InvalidInputError(f"duplicate unordered pair ({min(i, j)},{max(i, j)})")
        seen.add(unordered)
        if i >= j:
            raise InvalidInputError(
                f"bracket entry ({i},{j}) must be stored with i < j")
        parsed = []
        for term in terms:
            try:
                k, coeff = term
            except (TypeError, ValueError):
                raise InvalidInputError(f"malformed coefficient term {term!r}")
            if not isinstance(k, int) or not 0 <= k < dim:
                raise InvalidInputError(f"coefficient index {k!r} out of range")
            if not isinstance(coeff, str):
                raise InvalidInputError(
                    f"coefficient for ({i},{j},{k}) must be an exact string")
            try:
                parsed.append((k, field.parse(coeff)))
            except ValueError as exc:
                raise InvalidInputError(str(exc)) from exc
        brackets[(i, j)] = parsed
    L = lie_algebra_from_brackets(field, dim, brackets, names=names)
    report = L.validate()
    if not report.ok:
        raise InvalidInputError(f"not a Lie algebra: {report.describe()}")
    return L


def algebra_document(L: LieAlgebra) -> dict:
    """Canonical echo document for an algebra (inverse of parsing)."""
    brackets = []
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            terms = [[k, L.field.to_str(c)]
                     for k, c in enumerate(L.table[i][j]) if c]
            if terms:
                brackets.append([i, j, terms])
    return {
        "field": L.field.descriptor(),
        "dim": L.dim,
        "basis_names": list(L.basis_names),
        "brackets": brackets,
    }


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def canonical_hash(doc: dict) -> str:
    packed = json.dumps(doc, sort_keys=True, separators=(",", ":"),
                        ensure_ascii=True)
    return hashlib.sha256(packed.encode("ascii")).hexdigest()


def emit_report(doc: dict, path: Optional[str] = None) -> None:
    text = canonical_json(doc)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def load_algebra(source: str, field: Field = QQ) -> tuple[LieAlgebra, str]:
    """Resolve a catalog name or a JSON document path."""
    if any(source.startswith(h) for h in _CATALOG_HINTS):
        return catalog(source, field), f"catalog:{source}"
    try:
        with open(source, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{source} is not valid JSON: {exc}") from exc
    return parse_algebra_document(doc), source


# ----------------------------------------------------------------------
# report assembly
# ----------------------------------------------------------------------

def _verdict_str(v: Verdict) -> str:
    return "pass" if v.ok else f"fail: {v.detail}"


def _input_section(L: LieAlgebra, source: str) -> dict:
    doc = algebra_document(L)
    return {"document": doc, "hash": canonical_hash(doc), "source": source}


def _subspace_rows(space) -> list:
    field = space.field
    return [[field.to_str(x) for x in row] for row in space.basis.entries]


def info_document(L: LieAlgebra, source: str) -> dict:
    report = L.validate()
    series = [s.dim for s in L.lower_central_series()]
    return {
        "command": "info",
        "input": _input_section(L, source),
        "validation": report.describe(),
        "dimensions": {
            "algebra": L.dim,
            "derived": L.derived_subalgebra().dim,
            "center": L.center().dim,
        },
        "lower_central_series": series,
        "nilpotency_class": L.nilpotency_class(),
        "is_abelian": L.is_abelian,
        "timings": None,
    }


def tensor_document(L: LieAlgebra, source: str) -> dict:
    T = build_tensor_square(L)
    rep = tensor_report(T)
    return {
        "command": "tensor",
        "input": _input_section(L, source),
        "relation_dim": T.relation_space.dim,
        "dimensions": rep.dims,
        "verdicts": {k: _verdict_str(v) for k, v in rep.verdicts.items()},
        "diagnostics": rep.diagnostics,
        "subspaces": {k: _subspace_rows(s) for k, s in rep.subspaces.items()},
        "timings": None,
    }


def present_document(L: LieAlgebra, source: str) -> dict:
    P = presentation_of(L)
    mult = multiplier_via_presentation(P)
    F = P.free
    ext_dim = (F.algebra.derived_subalgebra().dim
               - P.relations_commutator.dim)
    return {
        "command": "present",
        "input": _input_section(L, source),
        "free": {
            "generators": F.d,
            "class": F.c,
            "dim": F.algebra.dim,
            "layers": {str(k): v for k, v in F.layer_dims().items()},
            "hall_basis": list(F.algebra.basis_names),
        },
        "dimensions": {
            "relations": P.relations.dim,
            "relations_commutator": P.relations_commutator.dim,
            "relations_in_derived": P.relations_in_derived.dim,
            "exterior_square": ext_dim,
            "schur_multiplier": mult.dim,
        },
        "timings": None,
    }


def cover_document(L: LieAlgebra, source: str) -> dict:
    P = presentation_of(L)
    T = build_tensor_square(L)
    try:
        cover = build_cover(P)
        defining_pair = Verdict(True)
    except TheoremViolationError as exc:
        return {
            "command": "cover",
            "input": _input_section(L, source),
            "dimensions": {},
            "verdicts": {"defining_pair": f"fail: {exc}",
                         "cover_theorem": "skipped: cover construction failed"},
            "timings": None,
        }
    theorem = verify_cover_theorem(P, cover, T)
    return {
        "command": "cover",
        "input": _input_section(L, source),
        "dimensions": {
            "algebra": L.dim,
            "cover": cover.algebra.dim,
            "multiplier": cover.multiplier.dim,
            "cover_derived": cover.algebra.derived_subalgebra().dim,
        },
        "verdicts": {"defining_pair": _verdict_str(defining_pair),
                     "cover_theorem": _verdict_str(theorem)},
        "timings": None,
    }


def free_nilpotent_document(d: int, c: int, field: Field) -> dict:
    F = free_nilpotent(d, c, field)
    return {
        "command": "free-nilpotent",
        "generators": d,
        "class": c,
        "dim": F.algebra.dim,
        "layers": {str(k): v for k, v in F.layer_dims().items()},
        "document": algebra_document(F.algebra),
        "timings": None,
    }


def verify_document(L: LieAlgebra, source: str) -> dict:
    T = build_tensor_square(L)
    rep = tensor_report(T)
    verdicts = {k: _verdict_str(v) for k, v in rep.verdicts.items()}
    if L.is_nilpotent:
        verdicts["cross_oracle"] = _verdict_str(_cross_oracle_verdict(L, T))
        try:
            P = presentation_of(L)
            cover = build_cover(P)
            verdicts["cover"] = _verdict_str(verify_cover_theorem(P, cover, T))
        except (TheoremViolationError, InternalCheckError) as exc:
            verdicts["cover"] = f"fail: {exc}"
    else:
        verdicts["cross_oracle"] = "skipped: not nilpotent"
        verdicts["cover"] = "skipped: not nilpotent"
    return {
        "command": "verify",
        "input": _input_section(L, source),
        "dimensions": rep.dims,
        "verdicts": verdicts,
        "diagnostics": rep.diagnostics,
        "timings": None,
    }


def _cross_oracle_verdict(L: LieAlgebra, T) -> Verdict:
    try:
        P = presentation_of(L)
        ext_alg, _ = exterior_via_presentation(P, T)
        mult = multiplier_via_presentation(P)
    except (TheoremViolationError, InternalCheckError) as exc:
        return Verdict(False, str(exc))
    wedge_dim = T.exterior_square()[0].dim
    mult_dim = T.schur_multiplier().dim
    if ext_alg.dim != wedge_dim:
        return Verdict(False,
                       f"exterior dims disagree: {ext_alg.dim} vs {wedge_dim}")
    if mult.dim != mult_dim:
        return Verdict(False,
                       f"multiplier dims disagree: {mult.dim} vs {mult_dim}")
    return Verdict(True)


def catalog_document() -> dict:
    entries = []
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for name in CATALOG_SUITE:
        for field in SUITE_FIELDS:
            if not is_supported(name, field):
                entries.append({
                    "name": name,
                    "field": field.descriptor(),
                    "verdicts": {},
                    "status": f"skipped: {name} unsupported over {field.name}",
                })
                counts["skipped"] += 1
                continue
            L = catalog(name, field)
            doc = verify_document(L, f"catalog:{name}")
            statuses = set()
            for v in doc["verdicts"].values():
                statuses.add(v.split(":")[0])
            status = ("fail" if "fail" in statuses else "pass")
            counts[status] += 1
            entries.append({
                "name": name,
                "field": field.descriptor(),
                "input_hash": doc["input"]["hash"],
                "dimensions": doc["dimensions"],
                "verdicts": doc["verdicts"],
                "diagnostics": doc["diagnostics"],
                "status": status,
            })
    return {
        "command": "verify-catalog",
        "entries": entries,
        "summary": counts,
        "timings": None,
    }


# ----------------------------------------------------------------------
# argument handling
# ----------------------------------------------------------------------

def _parse_field(text: str) -> Field:
    if text in ("Q", "q"):
        return QQ
    raw = text[1:] if text.lower().startswith("f") else text
    try:
        p = int(raw)
    except ValueError:
        raise InvalidInputError(f"unrecognized field {text!r} (use Q or a prime)")
    try:
        return Field(p)
    except ValueError as exc:
        raise InvalidInputError(str(exc))



def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lietensor",
        description="Exact tensor squares, Schur multipliers and covers of "
                    "finite-dimensional Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_algebra=True):
        if with_algebra:
            p.add_argument("algebra",
                           help="catalog name (e.g. heisenberg(2), sl2, "
                                "abelian(3), heisenberg(1)+abelian(1)) or a "
                                "path to a JSON algebra document")
            p.add_argument("--field", default="Q",
                           help="coefficient field for catalog names: Q or a "
                                "prime p (default Q)")
        p.add_argument("--out", default=None, help="write the report here "
                                                   "instead of stdout")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock timings in the report "
                            "(reports are then no longer byte-reproducible)")

    add_common(sub.add_parser("info", help="validate and report basic invariants"))
    add_common(sub.add_parser("tensor", help="full tensor-square report"))
    add_common(sub.add_parser("present", help="free presentation objects"))
    add_common(sub.add_parser("cover", help="build and verify a cover"))

    fn = sub.add_parser("free-nilpotent",
                        help="free nilpotent algebra on a Hall basis")
    fn.add_argument("-d", type=int, required=True, help="generator count")
    fn.add_argument("-c", type=int, required=True, help="nilpotency class")
    fn.add_argument("--field", default="Q")
    add_common(fn, with_algebra=False)

    ver = sub.add_parser("verify", help="run every theorem check")
    ver.add_argument("algebra", nargs="?",
                     help="catalog name or JSON document path")
    ver.add_argument("--field", default="Q")
    ver.add_argument("--catalog", action="store_true",
                     help="verify the whole built-in catalog over Q and "
                          "GF(2), GF(3), GF(5)")
    add_common(ver, with_algebra=False)
    return parser


def _exit_code(doc: dict) -> int:
    def failed(verdicts: dict) -> bool:
        return any(v.startswith("fail") for v in verdicts.values())

    if doc["command"] == "verify-catalog":
        return 1 if doc["summary"]["fail"] else 0
    if failed(doc.get("verdicts", {})):
        return 1
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        if args.command == "free-nilpotent":
            if args.d < 0 or args.c < 1:
                raise InvalidInputError("need -d >= 0 and -c >= 1")
            doc = free_nilpotent_document(args.d, args.c,
                                          _parse_field(args.field))
        elif args.command == "verify" and args.catalog:
            doc = catalog_document()
        else:
            if args.command == "verify" and not args.algebra:
                raise InvalidInputError("verify needs an algebra or --catalog")
            L, source = load_algebra(args.algebra, _parse_field(args.field))
            builder = {
                "info": info_document,
                "tensor": tensor_document,
                "present": present_document,
                "cover": cover_document,
                "verify": verify_document,
            }[args.command]
            doc = builder(L, source)
    except InvalidInputError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except NotNilpotentError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except (TheoremViolationError, InternalCheckError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    if args.timings:
        doc["timings"] = {"total_seconds": round(time.perf_counter() - started, 6)}
    try:
        emit_report(doc, args.out)
    except OSError as exc:
        print(f"cannot write report: {exc}", file=sys.stderr)
        return 2
    return _exit_code(doc)


if __name__ == "__main__":
    sys.exit(main())
