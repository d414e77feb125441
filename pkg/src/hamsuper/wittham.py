"""Vector fields on the truncated superalgebra and the Hamiltonian family.

A vector field is a formal sum  X = sum_i f_i D_i  with polynomial
coefficients; the bracket of two homogeneous fields is

    [f D_i, g D_j] = f D_i(g) D_j - (-1)^{d(f D_i) d(g D_j)} g D_j(f) D_i

where d(f D_i) = d(f) + tau(i).  The Hamiltonian operator sends a
homogeneous polynomial f to the field with components

    sigma(i') (-1)^{tau(i') d(f)} D_{i'}(f)   in direction i,

where i' pairs conjugate directions (i <-> i+k among the even ones,
i <-> i+r among the odd ones) and sigma flips the sign on the second half
of the even block.  Its image spans one algebra; the span of all brackets
of that image is the Hamiltonian algebra proper, which drops exactly the
image of the top monomial.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple, Union

from . import weights as weights_mod
from .fpexact import SparseMatrixFp, ref_pivots
from .lsa import InvariantViolation, StructureAlgebra
from .superspace import MIXED, Monomial, Space, SuperPolynomial, monomial_str


class MixedParityError(ValueError):
    """Raised when a bracket-type operation receives a mixed-parity operand."""


class Geometry:
    """Direction bookkeeping: the pairing i', the sign sigma, the parity tau."""

    def __init__(self, space: Space):
        self.space = space
        self.k = space.m // 2
        self.r = space.n // 2

    def prime(self, i: int) -> int:
        k, r, m, s = self.k, self.r, self.space.m, self.space.s
        if not 1 <= i <= s:
            raise IndexError("direction %d outside 1..%d" % (i, s))
        if i <= k:
            return i + k
        if i <= m:
            return i - k
        if i <= m + r:
            return i + r
        return i - r

    def sigma(self, i: int) -> int:
        return -1 if self.k < i <= self.space.m else 1

    def tau(self, i: int) -> int:
        return 0 if i <= self.space.m else 1


class VectorField:
    """Sparse field: direction index (1-based) -> polynomial coefficient."""

    __slots__ = ("space", "comps")

    def __init__(self, space: Space, comps: Dict[int, SuperPolynomial]):
        self.space = space
        self.comps = {i: f for i, f in comps.items() if f.terms}

    def parity(self) -> Union[int, str]:
        seen = set()
        for i, f in self.comps.items():
            pf = f.parity()
            if pf == MIXED:
                return MIXED
            seen.add((pf + (0 if i <= self.space.m else 1)) & 1)
        if len(seen) > 1:
            return MIXED
        return seen.pop() if seen else 0

    def apply(self, f: SuperPolynomial) -> SuperPolynomial:
        """Act as a derivation: sum_i f_i * D_i(f)."""
        out = self.space.zero()
        for i, fi in self.comps.items():
            out = out + self.space.multiply(fi, self.space.apply_D(i, f))
        return out

    def coords(self) -> Dict[Tuple[int, Monomial], int]:
        out = {}
        for i, f in self.comps.items():
            for mono, c in f.terms.items():
                out[(i, mono)] = c
        return out

    def coords_row(self) -> Dict[int, int]:
        """Flat coordinates: direction-major, then monomial position."""
        nb = len(self.space.basis)
        index = self.space.basis_index
        return {(i - 1) * nb + index[mono]: c for (i, mono), c in self.coords().items()}

    def __add__(self, other: "VectorField") -> "VectorField":
        comps = dict(self.comps)
        for i, f in other.comps.items():
            comps[i] = comps[i] + f if i in comps else f
        return VectorField(self.space, comps)

    def __rmul__(self, scalar: int) -> "VectorField":
        return VectorField(self.space, {i: scalar * f for i, f in self.comps.items()})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, VectorField)
                and self.space.params() == other.space.params()
                and self.comps == other.comps)

    def __bool__(self) -> bool:
        return bool(self.comps)

    def __repr__(self) -> str:
        if not self.comps:
            return "0"
        return " + ".join("(%r)*D%d" % (self.comps[i], i) for i in sorted(self.comps))


def apply_field(X: VectorField, f: SuperPolynomial) -> SuperPolynomial:
    return X.apply(f)


def witt_bracket(X: VectorField, Y: VectorField) -> VectorField:
    """Bracket of homogeneous fields; mixed-parity operands are rejected
    (split them with ``VectorField`` sums first)."""
    dx, dy = X.parity(), Y.parity()
    if dx == MIXED or dy == MIXED:
        raise MixedParityError("bracket needs parity-homogeneous fields; split first")
    space = X.space
    sign = -1 if (dx and dy) else 1
    comps: Dict[int, SuperPolynomial] = {}
    for j, gj in Y.comps.items():
        comps[j] = X.apply(gj)
    for i, fi in X.comps.items():
        term = (-sign) * Y.apply(fi)
        comps[i] = comps[i] + term if i in comps else term
    return VectorField(space, comps)


def hamiltonian_field(geom: Geometry, f: SuperPolynomial) -> VectorField:
    """The Hamiltonian operator; extends monomial-by-monomial, which is the
    linear extension over homogeneous pieces."""
    space = geom.space
    comps: Dict[int, Dict[Monomial, int]] = {}
    for mono, c in f.terms.items():
        d = mono.parity
        for i in range(1, space.s + 1):
            ip = geom.prime(i)
            res = space.apply_D_monomial(ip, mono)
            if res is None:
                continue
            dc, image = res
            coeff = geom.sigma(ip) * dc
            if geom.tau(ip) and d:
                coeff = -coeff
            acc = comps.setdefault(i, {})
            v = (acc.get(image, 0) + c * coeff) % space.p
            if v:
                acc[image] = v
            elif image in acc:
                del acc[image]
    return VectorField(space, {i: SuperPolynomial(space, t, _normalized=True)
                               for i, t in comps.items()})


# ---------------------------------------------------------------------------
# structure algebras
# ---------------------------------------------------------------------------

def build_witt_algebra(space: Space) -> StructureAlgebra:
    """The full vector-field algebra as a structure table (dimension s * dim)."""
    fields = [(i, mono) for i in range(1, space.s + 1) for mono in space.basis]
    index = {x: pos for pos, x in enumerate(fields)}
    parity = [(mono.parity + (0 if i <= space.m else 1)) & 1 for i, mono in fields]
    labels = ["%s*D%d" % (monomial_str(mono), i) for i, mono in fields]
    zdegrees = [mono.degree - 1 for i, mono in fields]
    table: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    mono_fields = {pos: VectorField(space, {i: space.poly({mono: 1})})
                   for pos, (i, mono) in enumerate(fields)}
    for a, fa in mono_fields.items():
        for b, fb in mono_fields.items():
            w = witt_bracket(fa, fb)
            entries = [(index[(i, mono)], c) for (i, mono), c in w.coords().items()]
            if entries:
                table[(a, b)] = entries
    L = StructureAlgebra(space.p, parity, table, labels=labels, zdegrees=zdegrees,
                         params={"p": space.p, "m": space.m, "n": space.n, "t": space.t})
    return L


def _hamiltonian_images(space: Space, geom: Geometry) -> Tuple[List[Monomial], Dict[Monomial, VectorField]]:
    gens = [mono for mono in space.basis if mono.degree >= 1]
    return gens, {mono: hamiltonian_field(geom, space.poly({mono: 1})) for mono in gens}


def _image_algebra(space: Space, geom: Geometry, gens: List[Monomial],
                   images: Dict[Monomial, VectorField]) -> StructureAlgebra:
    """Assemble the structure table on a set of independent monomial images,
    using the operator's bracket rule [X_f, X_g] = X_{X_f(g)}."""
    index = {mono: i for i, mono in enumerate(gens)}
    table: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}
    for a, ma in enumerate(gens):
        Xa = images[ma]
        for b, mb in enumerate(gens):
            g = Xa.apply(space.poly({mb: 1}))
            entries = []
            for mono, c in g.terms.items():
                if mono.degree == 0:
                    continue  # constants are annihilated downstream
                if mono not in index:
                    raise InvariantViolation(
                        "bracket leaves the selected span at %s" % monomial_str(mono))
                entries.append((index[mono], c))
            if entries:
                table[(a, b)] = entries
    L = StructureAlgebra(
        space.p,
        [mono.parity for mono in gens],
        table,
        labels=["DH[%s]" % monomial_str(mono) for mono in gens],
        zdegrees=[mono.degree - 2 for mono in gens],
        weights=[weights_mod.monomial_weight(geom, mono) for mono in gens],
        params={"p": space.p, "m": space.m, "n": space.n, "t": space.t})
    L.monomials = tuple(gens)
    L.geom = geom
    return L


def build_hbar(p: int, m: int, n: int, t) -> StructureAlgebra:
    """Span of all Hamiltonian fields, on the monomial generators of degree >= 1.

    Independence of the selected generators is certified by echelon pivoting
    over the flat field coordinates, not assumed.
    """
    space = Space(p, m, n, t)
    geom = Geometry(space)
    gens, images = _hamiltonian_images(space, geom)
    pivots = ref_pivots((images[mono].coords_row() for mono in gens), p)
    if len(pivots) != len(gens):
        raise InvariantViolation(
            "expected %d independent generators, echelon found %d" % (len(gens), len(pivots)))
    return _image_algebra(space, geom, gens, images)


def build_h(p: int, m: int, n: int, t,
            hbar: Optional[StructureAlgebra] = None) -> StructureAlgebra:
    """The Hamiltonian algebra: the derived span of ``build_hbar``.

    The result is materialized on the monomial generators of degree
    1..(height-1); that this equals the derived span is verified by a rank
    computation over the bracket span, not assumed.
    """
    from .lsa import derived_subalgebra

    if hbar is None:
        hbar = build_hbar(p, m, n, t)
    space: Space = hbar.geom.space
    sub, embedding = derived_subalgebra(hbar)
    top = space.basis[-1]
    keep = [i for i, mono in enumerate(hbar.monomials) if mono.degree <= space.height - 1]
    if sub.dim != len(keep):
        raise InvariantViolation("derived span has dimension %d, expected %d"
                                 % (sub.dim, len(keep)))
    expected = [{i: 1} for i in keep]
    if embedding != expected:
        raise InvariantViolation("derived span is not the reduced span of the "
                                 "generators below the top monomial %s" % monomial_str(top))
    return hbar.restrict(keep)
