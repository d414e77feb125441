"""Finite-dimensional Lie superalgebras over GF(p) given by structure constants.

A structure algebra is a labeled basis e_0..e_{d-1} with Z2 parities and a
sparse table c_{ij}^k for [e_i, e_j] = sum_k c_{ij}^k e_k.  Construction
always enforces the two tabular invariants

    c_{ji}^k = -(-1)^{|e_i||e_j|} c_{ij}^k        (super skew-symmetry)
    c_{ij}^k != 0  implies  |e_k| = |e_i| + |e_j| (parity compatibility)

while the graded Jacobi identity is checked separately (it is a theorem
about a table, not a wellformedness condition).  Subspaces are always kept
as reduced-echelon spanning sets, so membership and equality are canonical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .fpexact import (Row, SparseMatrixFp, is_odd_prime, reduce_against_rref,
                      rref_span, span_contains)


class InvariantViolation(Exception):
    """A structure-constant table breaks skew-symmetry or parity rules."""


class SchemaViolation(Exception):
    """A serialized algebra does not match the interchange schema."""


class StructureAlgebra:
    """Immutable container: basis labels, parities, sparse bracket table."""

    def __init__(self,
                 p: int,
                 parity: Sequence[int],
                 constants: Mapping[Tuple[int, int], Iterable[Tuple[int, int]]],
                 labels: Optional[Sequence[str]] = None,
                 zdegrees: Optional[Sequence[int]] = None,
                 weights: Optional[Sequence[Tuple[int, ...]]] = None,
                 params: Optional[Dict[str, object]] = None):
        if not is_odd_prime(p):
            raise ValueError("p must be an odd prime > 2, got %r" % (p,))
        self.p = p
        self.parity = tuple(int(x) & 1 for x in parity)
        self.dim = len(self.parity)
        if labels is not None and len(labels) != self.dim:
            raise ValueError("label count does not match dimension")
        self.labels = tuple(labels) if labels is not None else tuple(
            "e%d" % i for i in range(self.dim))
        self.zdegrees = tuple(zdegrees) if zdegrees is not None else None
        self.weights = tuple(tuple(w) for w in weights) if weights is not None else None
        # extra handles attached by the builders; not serialized
        self.params = dict(params) if params is not None else None
        self.monomials = None
        self.geom = None

        table: Dict[Tuple[int, int], Dict[int, int]] = {}
        for (i, j), entries in constants.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise InvariantViolation("bracket pair (%d, %d) out of range" % (i, j))
            acc: Dict[int, int] = {}
            for k, c in entries:
                if not 0 <= k < self.dim:
                    raise InvariantViolation("target index %d out of range" % (k,))
                c = int(c) % p
                if c:
                    acc[k] = (acc.get(k, 0) + c) % p
            acc = {k: c for k, c in acc.items() if c}
            if acc:
                table[(i, j)] = acc
        self.constants: Dict[Tuple[int, int], Dict[int, int]] = table
        self._tensor_cache: Optional[np.ndarray] = None
        self._validate()

    # -- invariants -----------------------------------------------------------

    def _validate(self) -> None:
        p = self.p
        for (i, j), row in self.constants.items():
            pij = (self.parity[i] + self.parity[j]) & 1
            for k, c in row.items():
                if self.parity[k] != pij:
                    raise InvariantViolation(
                        "parity mismatch: [e%d, e%d] has a component on e%d" % (i, j, k))
        seen = set(self.constants) | {(j, i) for (i, j) in self.constants}
        for (i, j) in seen:
            row = self.constants.get((i, j), {})
            back = self.constants.get((j, i), {})
            sign = p - 1 if (self.parity[i] & self.parity[j]) == 0 else 1
            for k in set(row) | set(back):
                if back.get(k, 0) != sign * row.get(k, 0) % p:
                    raise InvariantViolation(
                        "skew-symmetry broken at pair (%d, %d), component %d" % (i, j, k))

    # -- basic access -----------------------------------------------------------

    def bracket(self, i: int, j: int) -> Row:
        return dict(self.constants.get((i, j), {}))

    def bracket_vectors(self, u: Row, v: Row) -> Row:
        """[u, v] for coordinate vectors, by bilinear expansion."""
        out: Row = {}
        p = self.p
        for i, a in u.items():
            for j, b in v.items():
                row = self.constants.get((i, j))
                if not row:
                    continue
                ab = a * b
                for k, c in row.items():
                    w = (out.get(k, 0) + ab * c) % p
                    if w:
                        out[k] = w
                    elif k in out:
                        del out[k]
        return out

    def tensor(self) -> np.ndarray:
        """Dense float64 copy of the table; exact since all values < p."""
        if self._tensor_cache is None:
            N = np.zeros((self.dim, self.dim, self.dim), dtype=np.float64)
            for (i, j), row in self.constants.items():
                for k, c in row.items():
                    N[i, j, k] = c
            self._tensor_cache = N
        return self._tensor_cache

    def adjoint_matrix(self, x: Row) -> SparseMatrixFp:
        """Matrix of ad x: column k holds the coordinates of [x, e_k]."""
        entries = []
        for i, a in x.items():
            for k in range(self.dim):
                row = self.constants.get((i, k))
                if not row:
                    continue
                for w, c in row.items():
                    entries.append((w, k, a * c % self.p))
        return SparseMatrixFp(self.dim, self.dim, entries, self.p)

    def restrict(self, keep: Sequence[int]) -> "StructureAlgebra":
        """Subalgebra on a subset of basis indices; fails if not closed."""
        keep = list(keep)
        pos = {old: new for new, old in enumerate(keep)}
        kept = set(keep)
        table: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
        for (i, j), row in self.constants.items():
            if i not in kept or j not in kept:
                continue
            for k, c in row.items():
                if k not in kept:
                    raise InvariantViolation(
                        "restriction is not closed: [e%d, e%d] hits e%d" % (i, j, k))
                table.setdefault((pos[i], pos[j]), []).append((pos[k], c))
        sub = StructureAlgebra(
            self.p,
            [self.parity[i] for i in keep],
            table,
            labels=[self.labels[i] for i in keep],
            zdegrees=[self.zdegrees[i] for i in keep] if self.zdegrees else None,
            weights=[self.weights[i] for i in keep] if self.weights else None,
            params=self.params)
        if self.monomials is not None:
            sub.monomials = tuple(self.monomials[i] for i in keep)
        sub.geom = self.geom
        return sub

    def __repr__(self) -> str:  # pragma: no cover
        return "StructureAlgebra(dim=%d, p=%d)" % (self.dim, self.p)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class JacobiReport:
    ok: bool
    counterexample: Optional[Tuple[int, int, int]] = None
    message: str = ""


def jacobi_check(L: StructureAlgebra) -> JacobiReport:
    """Exhaustive graded Jacobi identity over all basis triples.

    Verifies [e_i,[e_j,e_l]] = [[e_i,e_j],e_l] + (-1)^{|e_i||e_j|}[e_j,[e_i,e_l]]
    for every triple, using exact integer arithmetic in float64 (all
    intermediate values are < d*(p-1)^2, far below 2^53).
    """
    d, p = L.dim, L.p
    if d == 0:
        return JacobiReport(True)
    N = L.tensor()
    par = np.array(L.parity)
    for i in range(d):
        # t1[j,l,w] = sum_q N[j,l,q] N[i,q,w]
        t1 = np.tensordot(N, N[i], axes=([2], [0]))
        # t2[j,l,w] = sum_q N[i,j,q] N[q,l,w]
        t2 = np.tensordot(N[i], N, axes=([1], [0]))
        # t3[j,l,w] = sum_q N[i,l,q] N[j,q,w]
        t3 = np.tensordot(N[i], N, axes=([1], [1])).transpose(1, 0, 2)
        sign = np.where((par * par[i]) % 2 == 0, 1.0, -1.0)[:, None, None]
        res = (t1 - t2 - sign * t3) % p
        if res.any():
            j, l, w = np.argwhere(res)[0]
            return JacobiReport(
                False, (i, int(j), int(l)),
                "triple (%d, %d, %d) violates the graded Jacobi identity "
                "(component %d)" % (i, j, l, w))
    return JacobiReport(True)


# ---------------------------------------------------------------------------
# subspace machinery
# ---------------------------------------------------------------------------

def derived_subalgebra(L: StructureAlgebra) -> Tuple[StructureAlgebra, List[Row]]:
    """Span of all brackets, as (sub-algebra, embedding rows in L coordinates)."""
    spanning = [dict(row) for row in L.constants.values() if row]
    embedding = rref_span(spanning, L.p)
    dim = len(embedding)
    parity = []
    labels = []
    zdegrees: Optional[List[int]] = [] if L.zdegrees else None
    weights: Optional[List[Tuple[int, ...]]] = [] if L.weights else None
    for row in embedding:
        support = sorted(row)
        pars = {L.parity[i] for i in support}
        if len(pars) != 1:
            raise InvariantViolation("derived-span vector mixes parities")
        parity.append(pars.pop())
        if len(row) == 1 and row[support[0]] == 1:
            labels.append(L.labels[support[0]])
        else:
            labels.append("d[" + "+".join("%d*%s" % (row[i], L.labels[i]) for i in support) + "]")
        if zdegrees is not None:
            degs = {L.zdegrees[i] for i in support}
            zdegrees.append(degs.pop() if len(degs) == 1 else None)
        if weights is not None:
            ws = {L.weights[i] for i in support}
            weights.append(ws.pop() if len(ws) == 1 else None)
    table: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for a in range(dim):
        for b in range(dim):
            w = L.bracket_vectors(embedding[a], embedding[b])
            if not w:
                continue
            coeffs, rem = reduce_against_rref(embedding, w, L.p)
            if rem:
                raise InvariantViolation("derived span is not bracket-closed")
            table[(a, b)] = list(coeffs.items())
    if zdegrees is not None and any(z is None for z in zdegrees):
        zdegrees = None
    if weights is not None and any(w is None for w in weights):
        weights = None
    sub = StructureAlgebra(L.p, parity, table, labels=labels,
                           zdegrees=zdegrees, weights=weights, params=L.params)
    return sub, embedding


def centralizer(L: StructureAlgebra, vectors: Sequence[Row]) -> List[Row]:
    """{x : [x, v] = 0 for all v in the span}, as a reduced-echelon basis."""
    span = rref_span(vectors, L.p)
    entries = []
    for r, v in enumerate(span):
        for j, b in v.items():
            for i in range(L.dim):
                row = L.constants.get((i, j))
                if not row:
                    continue
                for k, c in row.items():
                    entries.append((r * L.dim + k, i, b * c % L.p))
    M = SparseMatrixFp(len(span) * L.dim, L.dim, entries, L.p)
    return M.kernel_basis()


def center(L: StructureAlgebra) -> List[Row]:
    return centralizer(L, [{i: 1} for i in range(L.dim)])


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

_SCHEMA_KEYS = {"p", "m", "n", "t", "basis", "brackets"}
_BASIS_KEYS = {"label", "parity", "zdegree"}


def to_json_text(L: StructureAlgebra) -> str:
    """Canonical JSON form; byte-identical for equal algebras."""
    if L.params is None or L.zdegrees is None:
        raise ValueError("only algebras built with full parameters serialize")
    doc = {
        "p": L.params["p"],
        "m": L.params["m"],
        "n": L.params["n"],
        "t": list(L.params["t"]),
        "basis": [{"label": L.labels[i], "parity": L.parity[i], "zdegree": L.zdegrees[i]}
                  for i in range(L.dim)],
        "brackets": {"%d,%d" % pair: sorted([k, c] for k, c in row.items())
                     for pair, row in sorted(L.constants.items())},
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def from_json_text(text: str) -> StructureAlgebra:
    """Parse and validate the interchange schema; raises SchemaViolation or,
    for a well-formed file with a bad table, InvariantViolation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation("not valid JSON: %s" % exc) from exc
    if not isinstance(doc, dict) or set(doc) != _SCHEMA_KEYS:
        raise SchemaViolation("top-level keys must be exactly %s" % sorted(_SCHEMA_KEYS))
    p, m, n = doc["p"], doc["m"], doc["n"]
    t = doc["t"]
    if not all(isinstance(x, int) for x in (p, m, n)) or not isinstance(t, list):
        raise SchemaViolation("p, m, n must be ints and t a list")
    if not isinstance(doc["basis"], list) or not doc["basis"]:
        raise SchemaViolation("basis must be a nonempty list")
    labels, parity, zdegrees = [], [], []
    for item in doc["basis"]:
        if not isinstance(item, dict) or set(item) != _BASIS_KEYS:
            raise SchemaViolation("basis entries need exactly keys %s" % sorted(_BASIS_KEYS))
        if item["parity"] not in (0, 1) or not isinstance(item["zdegree"], int):
            raise SchemaViolation("bad parity or zdegree in basis entry")
        labels.append(str(item["label"]))
        parity.append(item["parity"])
        zdegrees.append(item["zdegree"])
    dim = len(labels)
    if not isinstance(doc["brackets"], dict):
        raise SchemaViolation("brackets must be an object")
    table: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for key, entries in doc["brackets"].items():
        try:
            i, j = (int(x) for x in key.split(","))
        except ValueError as exc:
            raise SchemaViolation("bracket key %r is not 'i,j'" % key) from exc
        if not (0 <= i < dim and 0 <= j < dim):
            raise SchemaViolation("bracket key %r out of range" % key)
        if not isinstance(entries, list):
            raise SchemaViolation("bracket value for %r must be a list" % key)
        pairs = []
        for item in entries:
            if (not isinstance(item, list) or len(item) != 2
                    or not all(isinstance(x, int) for x in item)):
                raise SchemaViolation("bracket entry %r is not [k, c]" % (item,))
            k, c = item
            if not 0 <= k < dim:
                raise SchemaViolation("bracket target %d out of range" % k)
            if not 0 < c < p:
                raise SchemaViolation("coefficient %d is not a canonical nonzero residue" % c)
            pairs.append((k, c))
        table[(i, j)] = pairs
    if not is_odd_prime(p):
        raise SchemaViolation("p=%r is not an odd prime" % (p,))
    L = StructureAlgebra(p, parity, table, labels=labels, zdegrees=zdegrees,
                         params={"p": p, "m": m, "n": n, "t": tuple(t)})
    return L
