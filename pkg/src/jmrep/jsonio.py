"""JSON encoding and decoding for every value the command line moves around.

All documents carry an explicit "genus" field and all indices are 1-based.
Encoders emit canonical form: sorted keys, strictly increasing index tuples,
zero terms dropped.  Decoders are forgiving about term order and accumulate
repeated index tuples, but reject anything structurally off with ValueError
(or a jmrep error subclass, all of which the CLI maps to exit code 2).
"""

from __future__ import annotations

import json

from .errors import GenusMismatch
from .linalg import HVector, IntMatrix, SymplecticMatrix
from .phi2 import Phi2Element
from .rho2 import Rho2Element
from .wedge import Wedge2, Wedge3
from .words import EndomorphismSpec, FreeWord


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _genus_of(doc) -> int:
    _require(isinstance(doc, dict), "expected a JSON object")
    g = doc.get("genus")
    _require(isinstance(g, int) and not isinstance(g, bool) and g >= 1,
             "field 'genus' must be a positive integer")
    return g


def _int_list(val, what: str) -> list:
    _require(isinstance(val, list), f"{what} must be an array")
    for x in val:
        _require(isinstance(x, int) and not isinstance(x, bool),
                 f"{what} must contain only integers")
    return val


# ---------------------------------------------------------------- vectors

def encode_hvector(v: HVector) -> dict:
    return {"genus": v.genus, "coeffs": list(v.coeffs)}


def decode_hvector(doc) -> HVector:
    g = _genus_of(doc)
    coeffs = _int_list(doc.get("coeffs"), "'coeffs'")
    _require(len(coeffs) == 2 * g, "'coeffs' must have length 2*genus")
    return HVector(tuple(coeffs))


# ---------------------------------------------------------------- matrices

def encode_matrix(M: IntMatrix) -> dict:
    return {"genus": M.genus, "rows": [list(r) for r in M.rows]}


def decode_matrix(doc) -> IntMatrix:
    g = _genus_of(doc)
    rows = doc.get("rows")
    _require(isinstance(rows, list) and len(rows) == 2 * g,
             "'rows' must be an array of 2*genus rows")
    for r in rows:
        _int_list(r, "matrix row")
        _require(len(r) == 2 * g, "matrix rows must have length 2*genus")
    return IntMatrix(tuple(tuple(r) for r in rows))


def decode_symplectic(doc) -> SymplecticMatrix:
    # raises NotSymplectic when the pairing is not preserved
    return SymplecticMatrix(decode_matrix(doc).rows)


# ---------------------------------------------------------------- wedges

def _encode_wedge(w) -> dict:
    return {"genus": w.genus,
            "terms": [{"idx": list(idx), "twice": t} for idx, t in w.terms()]}


def encode_wedge2(w: Wedge2) -> dict:
    return _encode_wedge(w)


def encode_wedge3(r: Wedge3) -> dict:
    return _encode_wedge(r)


def _decode_terms(doc, arity: int):
    g = _genus_of(doc)
    terms = doc.get("terms")
    _require(isinstance(terms, list), "'terms' must be an array")
    acc: dict = {}
    for item in terms:
        _require(isinstance(item, dict), "each term must be an object")
        idx = _int_list(item.get("idx"), "'idx'")
        _require(len(idx) == arity, f"'idx' must have {arity} entries")
        for i in idx:
            _require(1 <= i <= 2 * g, "'idx' entries must lie in 1..2*genus")
        t = item.get("twice")
        _require(isinstance(t, int) and not isinstance(t, bool),
                 "'twice' must be an integer")
        # sort the tuple, tracking the sign of the permutation
        idx = list(idx)
        sign = 1
        for a in range(arity):
            for b in range(arity - 1 - a):
                if idx[b] > idx[b + 1]:
                    idx[b], idx[b + 1] = idx[b + 1], idx[b]
                    sign = -sign
        if len(set(idx)) < arity:
            continue  # repeated index wedges to zero
        key = tuple(idx)
        acc[key] = acc.get(key, 0) + sign * t
    return g, {k: v for k, v in acc.items() if v != 0}


def decode_wedge2(doc) -> Wedge2:
    g, acc = _decode_terms(doc, 2)
    return Wedge2(g, acc)


def decode_wedge3(doc) -> Wedge3:
    g, acc = _decode_terms(doc, 3)
    return Wedge3(g, acc)


# ---------------------------------------------------------------- words

def encode_word(w: FreeWord) -> dict:
    return {"genus": w.genus, "letters": list(w.letters)}


def decode_word(doc) -> FreeWord:
    g = _genus_of(doc)
    letters = _int_list(doc.get("letters"), "'letters'")
    for s in letters:
        _require(s != 0 and abs(s) <= 2 * g,
                 "letters must be nonzero and within +-2*genus")
    return FreeWord(g, letters)


# ---------------------------------------------------------------- phi2 / rho2

def encode_phi2(p: Phi2Element) -> dict:
    return {"eta": encode_wedge2(p.eta), "y": encode_hvector(p.y)}


def decode_phi2(doc) -> Phi2Element:
    _require(isinstance(doc, dict) and "eta" in doc and "y" in doc,
             "expected an object with 'eta' and 'y'")
    eta = decode_wedge2(doc["eta"])
    y = decode_hvector(doc["y"])
    if eta.genus != y.genus:
        raise GenusMismatch("'eta' and 'y' disagree on genus")
    return Phi2Element(eta, y)


def encode_rho2(f: Rho2Element) -> dict:
    return {"r": encode_wedge3(f.r), "R": encode_matrix(f.R)}


def decode_rho2(doc) -> Rho2Element:
    _require(isinstance(doc, dict) and "r" in doc and "R" in doc,
             "expected an object with 'r' and 'R'")
    r = decode_wedge3(doc["r"])
    R = decode_symplectic(doc["R"])
    if r.genus != R.genus:
        raise GenusMismatch("'r' and 'R' disagree on genus")
    return Rho2Element(r, R)


# ---------------------------------------------------------------- endomorphisms

def encode_endo(e: EndomorphismSpec) -> dict:
    return {"genus": e.genus, "images": [encode_word(w) for w in e.images]}


def decode_endo(doc) -> EndomorphismSpec:
    """Images may be FreeWord documents or bare letter arrays."""
    g = _genus_of(doc)
    images = doc.get("images")
    _require(isinstance(images, list) and len(images) == 2 * g,
             "'images' must list 2*genus words")
    words = []
    for item in images:
        if isinstance(item, dict):
            w = decode_word(item)
            if w.genus != g:
                raise GenusMismatch("image word disagrees on genus")
        else:
            w = decode_word({"genus": g, "letters": item})
        words.append(w)
    return EndomorphismSpec(g, tuple(words))


# ---------------------------------------------------------------- output

def canonical_dumps(doc) -> str:
    """Deterministic one-line rendering used for all CLI output."""
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))
