#!/usr/bin/env python3
## The JSON interchange format and deterministic report documents (the same
## machinery behind the `lietensor` command-line tool).

import json

from lietensor.cli import (algebra_document, canonical_hash, canonical_json,
                           parse_algebra_document, verify_document)

## An algebra document: exact coefficients travel as strings, and only the
## i < j half of each bracket is stored (antisymmetry is implied).
doc = {
    "field": "Q",
    "dim": 4,
    "basis_names": ["a", "b", "c", "d"],
    "brackets": [
        [0, 1, [[2, "1"]]],          # [a, b] = c
        [0, 2, [[3, "3/2"]]],        # [a, c] = 3/2 d
    ],
}
L = parse_algebra_document(doc)
print("loaded:", L.basis_names, "class", L.nilpotency_class())

## Round trip: document -> algebra -> canonical echo. The canonical hash
## identifies the algebra independent of formatting.
echo = algebra_document(L)
print("canonical hash:", canonical_hash(echo))
print("round trip stable:",
      canonical_hash(algebra_document(parse_algebra_document(echo))) ==
      canonical_hash(echo))

## A full verification report, as emitted by `lietensor verify`.
report = verify_document(L, "demo")
print("\ndimension table:", json.dumps(report["dimensions"], sort_keys=True))
print("verdicts:", json.dumps(report["verdicts"], sort_keys=True))

## Reports serialize canonically (sorted keys, exact strings), so identical
## inputs produce byte-identical documents; compare with:
##     lietensor verify --catalog --out run1.json
##     lietensor verify --catalog --out run2.json
##     cmp run1.json run2.json
print("\nfirst bytes of the canonical report:")
print(canonical_json(report)[:160], "...")
