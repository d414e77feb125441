"""Exact sparse linear algebra over the prime field GF(p).

Field elements are plain ints in [0, p).  Matrices are sparse coordinate
triplets, elimination is exact Gaussian elimination with first-nonzero-column
pivoting, and every routine returns canonical output: the reduced echelon
basis of a subspace is unique, so results never depend on assembly order.
"""

from __future__ import annotations

import math
from array import array
from typing import Dict, Iterable, List, Sequence, Tuple, Union

# Sparse vector: column index -> nonzero residue in [1, p).
Row = Dict[int, int]


def is_odd_prime(p: int) -> bool:
    """Trial-division primality test, adequate for the small moduli used here."""
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 is not invertible mod %d" % p)
    return pow(a, p - 2, p)


def _binom_scalar(a: int, b: int, p: int) -> int:
    if a < 0 or b < 0:
        raise ValueError("binomial arguments must be nonnegative")
    if b > a:
        return 0
    out = 1
    while a or b:
        a, ad = divmod(a, p)
        b, bd = divmod(b, p)
        if bd > ad:
            return 0
        out = out * math.comb(ad, bd) % p
    return out


def binom_mod(a: Union[int, Sequence[int]], b: Union[int, Sequence[int]], p: int) -> int:
    """Binomial coefficient C(a, b) mod p, computed digitwise in base p (Lucas).

    ``a`` and ``b`` are either nonnegative ints or equal-length sequences of
    nonnegative ints; sequences are treated componentwise, returning
    prod_i C(a_i, b_i) mod p.  The result is 0 whenever b exceeds a in any
    component.
    """
    if isinstance(a, int) and isinstance(b, int):
        return _binom_scalar(a, b, p)
    if isinstance(a, int) or isinstance(b, int):
        raise TypeError("a and b must have the same shape")
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    out = 1
    for x, y in zip(a, b):
        out = out * _binom_scalar(x, y, p) % p
        if out == 0:
            return 0
    return out


# ---------------------------------------------------------------------------
# elimination primitives
# ---------------------------------------------------------------------------

def _reduce_row(row: Row, pivots: Dict[int, Row], p: int) -> Row:
    """Eliminate ``row`` in place against echelon pivot rows.

    Each pivot row is normalized with value 1 at its pivot column, which is
    also its minimal column, so the minimal column of ``row`` strictly
    increases and the loop terminates.
    """
    while row:
        c = min(row)
        piv = pivots.get(c)
        if piv is None:
            return row
        f = row.pop(c)
        for cc, vv in piv.items():
            if cc == c:
                continue
            nv = (row.get(cc, 0) - f * vv) % p
            if nv:
                row[cc] = nv
            elif cc in row:
                del row[cc]
    return row


def _insert_ref(row: Row, pivots: Dict[int, Row], p: int) -> bool:
    """Reduce ``row`` and store it as a new pivot row; True if rank grew."""
    r = _reduce_row(row, pivots, p)
    if not r:
        return False
    c = min(r)
    f = inv_mod(r[c], p)
    pivots[c] = {cc: vv * f % p for cc, vv in r.items()}
    return True


def _back_substitute(pivots: Dict[int, Row], p: int) -> None:
    """Turn an echelon pivot set into reduced echelon form, in place.

    Processing pivot columns in decreasing order means every pivot row we
    subtract is already clean, so one pass suffices and final rows are
    supported on their own pivot column plus free columns only.
    """
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for cc in [x for x in row if x != c and x in pivots]:
            f = row.pop(cc)
            for c2, v2 in pivots[cc].items():
                if c2 == cc:
                    continue
                nv = (row.get(c2, 0) - f * v2) % p
                if nv:
                    row[c2] = nv
                elif c2 in row:
                    del row[c2]


def _encode_row(items: Iterable[Tuple[int, int]], p: int) -> bytes:
    """Canonical byte encoding: consolidated, leading coefficient 1."""
    r: Row = {}
    for c, v in items:
        v = (r.get(c, 0) + v) % p
        if v:
            r[c] = v
        elif c in r:
            del r[c]
    if not r:
        return b""
    f = inv_mod(r[min(r)], p)
    flat = array("i")
    for c in sorted(r):
        flat.append(c)
        flat.append(r[c] * f % p)
    return flat.tobytes()


def _decode_row(blob: bytes) -> Row:
    flat = array("i")
    flat.frombytes(blob)
    return {flat[x]: flat[x + 1] for x in range(0, len(flat), 2)}


def ref_pivots(rows: Iterable[Union[Row, Iterable[Tuple[int, int]]]], p: int) -> Dict[int, Row]:
    """Echelon pivot rows for a system of sparse rows.

    Rows are canonicalized, deduplicated and processed shortest-first; that
    keeps fill-in negligible on the very redundant systems produced by the
    solvers while changing nothing about the resulting row space.
    """
    seen = set()
    encoded = []
    for row in rows:
        items = row.items() if isinstance(row, dict) else row
        blob = _encode_row(items, p)
        if blob and blob not in seen:
            seen.add(blob)
            encoded.append(blob)
    encoded.sort(key=lambda b: (len(b), b))
    pivots: Dict[int, Row] = {}
    for blob in encoded:
        _insert_ref(_decode_row(blob), pivots, p)
    return pivots


def kernel_from_rows(rows: Iterable[Union[Row, Iterable[Tuple[int, int]]]],
                     ncols: int, p: int) -> List[Row]:
    """Basis of {v : row . v = 0 for every row}, as the unique reduced
    echelon basis of the kernel subspace."""
    pivots = ref_pivots(rows, p)
    _back_substitute(pivots, p)
    basis: List[Row] = []
    for free in range(ncols):
        if free in pivots:
            continue
        v: Row = {free: 1}
        for c, row in pivots.items():
            a = row.get(free)
            if a:
                v[c] = (p - a) % p
        basis.append(v)
    return rref_span(basis, p)


def rref_span(vectors: Iterable[Row], p: int) -> List[Row]:
    """Canonical reduced-echelon spanning set for the span of ``vectors``.

    Unique for a given subspace, so two spans can be compared with ``==``.
    """
    pivots: Dict[int, Row] = {}
    for v in vectors:
        r = _reduce_row(dict(v), pivots, p)
        if not r:
            continue
        c = min(r)
        f = inv_mod(r[c], p)
        new = {cc: vv * f % p for cc, vv in r.items()}
        for prow in pivots.values():
            g = prow.get(c)
            if not g:
                continue
            for c2, v2 in new.items():
                nv = (prow.get(c2, 0) - g * v2) % p
                if nv:
                    prow[c2] = nv
                elif c2 in prow:
                    del prow[c2]
        pivots[c] = new
    return [pivots[c] for c in sorted(pivots)]


def reduce_against_rref(rref_rows: Sequence[Row], v: Row, p: int) -> Tuple[Dict[int, int], Row]:
    """Express ``v`` over a reduced-echelon spanning set.

    Returns ``(coeffs, residual)`` where ``coeffs`` maps position in
    ``rref_rows`` to the coefficient and ``residual`` is what is left after
    subtracting the combination; the residual is empty iff v lies in the span.
    """
    rem = dict(v)
    coeffs: Dict[int, int] = {}
    for pos, row in enumerate(rref_rows):
        piv = min(row)
        f = rem.get(piv)
        if not f:
            continue
        coeffs[pos] = f
        for c, w in row.items():
            nv = (rem.get(c, 0) - f * w) % p
            if nv:
                rem[c] = nv
            elif c in rem:
                del rem[c]
    return coeffs, rem


def span_contains(rref_rows: Sequence[Row], v: Row, p: int) -> bool:
    return not reduce_against_rref(rref_rows, v, p)[1]


# ---------------------------------------------------------------------------
# sparse matrices
# ---------------------------------------------------------------------------

class SparseMatrixFp:
    """Immutable sparse matrix over GF(p), stored as consolidated triplets."""

    def __init__(self, rows: int, cols: int, entries: Iterable[Tuple[int, int, int]], p: int):
        if not is_odd_prime(p):
            raise ValueError("modulus must be an odd prime > 2, got %r" % (p,))
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix shape")
        data: Dict[Tuple[int, int], int] = {}
        for r, c, v in entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError("entry (%d, %d) outside %dx%d" % (r, c, rows, cols))
            v = (data.get((r, c), 0) + v) % p
            if v:
                data[(r, c)] = v
            elif (r, c) in data:
                del data[(r, c)]
        self.rows = rows
        self.cols = cols
        self.p = p
        self.entries: Dict[Tuple[int, int], int] = data

    def row_dicts(self) -> List[Row]:
        out: List[Row] = [dict() for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return [r for r in out if r]

    def rank(self) -> int:
        return len(ref_pivots(self.row_dicts(), self.p))

    def kernel_basis(self) -> List[Row]:
        """Reduced-echelon basis of the right kernel {v : Mv = 0}."""
        return kernel_from_rows(self.row_dicts(), self.cols, self.p)

    def __repr__(self) -> str:  # pragma: no cover
        return "SparseMatrixFp(%dx%d mod %d, %d nonzero)" % (
            self.rows, self.cols, self.p, len(self.entries))
