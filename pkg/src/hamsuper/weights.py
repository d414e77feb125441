"""Diagonal torus action and weight-space decomposition.

The canonical torus consists of the images of the paired quadratic monomials
x_l x_{l'} for l in {1..k} and {2k+1..2k+r}; each acts diagonally on the
monomial generators, with eigenvalue

    sigma(l) * (alpha_{l'} - alpha_l + [l' in u] - [l in u])   mod p

on the generator built from x^(alpha) x_u.  Weights are recorded as values
in GF(p) (that is what the bracket sees), so functionals that differ by a
multiple of p merge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .fpexact import rref_span, span_contains
from .lsa import InvariantViolation, StructureAlgebra
from .superspace import Monomial, monomial_str


def canonical_torus_directions(geom) -> List[int]:
    """One direction per conjugate pair: {1..k} and {2k+1..2k+r}."""
    return list(range(1, geom.k + 1)) + list(range(2 * geom.k + 1, 2 * geom.k + geom.r + 1))


def torus_monomial(geom, l: int) -> Monomial:
    """The quadratic monomial x_l x_{l'}."""
    lp = geom.prime(l)
    m = geom.space.m
    if l <= m:
        alpha = [0] * m
        alpha[l - 1] += 1
        alpha[lp - 1] += 1
        return Monomial(tuple(alpha), ())
    return Monomial((0,) * m, tuple(sorted((l, lp))))


def monomial_weight(geom, mono: Monomial) -> Tuple[int, ...]:
    """Eigenvalue tuple of a monomial generator under the canonical torus."""
    p = geom.space.p
    m = geom.space.m
    out = []
    for l in canonical_torus_directions(geom):
        lp = geom.prime(l)
        al = mono.alpha[l - 1] if l <= m else 0
        alp = mono.alpha[lp - 1] if lp <= m else 0
        val = geom.sigma(l) * (alp - al + (lp in mono.u) - (l in mono.u))
        out.append(val % p)
    return tuple(out)


def torus_basis(L: StructureAlgebra) -> List[int]:
    """Indices of the canonical torus elements inside L's basis.

    Double-checks the facts that make the canonical choice sound: the
    elements commute pairwise, and swapping the factors of x_l x_{l'} only
    rescales the generator (so one direction per pair suffices).
    """
    geom = _geometry(L)
    space = geom.space
    index = {mono: i for i, mono in enumerate(L.monomials)}
    out = []
    for l in canonical_torus_directions(geom):
        mono = torus_monomial(geom, l)
        if mono not in index:
            raise InvariantViolation("torus generator %s missing from basis" % monomial_str(mono))
        out.append(index[mono])
        swapped = space.multiply(space.x(geom.prime(l)), space.x(l))
        straight = space.multiply(space.x(l), space.x(geom.prime(l)))
        if not _proportional(swapped, straight, space.p):
            raise InvariantViolation("swapped torus product is not proportional")
    for a in out:
        for b in out:
            if L.bracket(a, b):
                raise InvariantViolation("torus is not abelian at (%d, %d)" % (a, b))
    return out


def _proportional(f, g, p: int) -> bool:
    if not f.terms and not g.terms:
        return True
    if set(f.terms) != set(g.terms):
        return False
    ratios = {f.terms[mono] * pow(g.terms[mono], p - 2, p) % p for mono in f.terms}
    return len(ratios) == 1


def weight_of(L: StructureAlgebra, index: int) -> Tuple[int, ...]:
    """Weight of a monomial generator, by the closed eigenvalue formula."""
    geom = _geometry(L)
    return monomial_weight(geom, L.monomials[index])


@dataclass
class WeightDecomposition:
    spaces: Dict[Tuple[int, ...], List[int]] = field(default_factory=dict)

    def dims(self) -> Dict[Tuple[int, ...], int]:
        return {w: len(ix) for w, ix in self.spaces.items()}

    def total(self) -> int:
        return sum(len(ix) for ix in self.spaces.values())


def decompose(L: StructureAlgebra, torus: Optional[List[int]] = None) -> WeightDecomposition:
    """Group the basis by weight and verify the torus really acts that way.

    The verification brackets every torus element against every generator in
    the structure table and compares with the eigenvalue formula; directness
    is automatic because the spaces partition the basis, and completeness is
    checked by summing dimensions.
    """
    if torus is None:
        torus = torus_basis(L)
    if L.weights is None:
        raise ValueError("algebra carries no weight labels")
    dec = WeightDecomposition()
    for b in range(L.dim):
        dec.spaces.setdefault(L.weights[b], []).append(b)
    for pos, tl in enumerate(torus):
        for b in range(L.dim):
            expect = {b: L.weights[b][pos]} if L.weights[b][pos] else {}
            if L.bracket(tl, b) != expect:
                raise InvariantViolation(
                    "generator %d is not an eigenvector of torus element %d" % (b, tl))
    if dec.total() != L.dim:
        raise InvariantViolation("weight spaces do not exhaust the algebra")
    return dec


def weight_report(L: StructureAlgebra) -> str:
    """CLI-facing table: one row per weight, sorted lexicographically."""
    dec = decompose(L)
    lines = []
    for w in sorted(dec.spaces):
        ix = dec.spaces[w]
        lines.append("weight=(%s) dim=%d basis=[%s]" % (
            ",".join(str(v) for v in w), len(ix),
            ",".join(L.labels[b] for b in ix)))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# the three marked families of weight spaces
# ---------------------------------------------------------------------------

_KINDS = ("eps_i", "odd_j", "eps_i_plus_j")


def _functional_monomial(geom, kind: str, i: Optional[int], j: Optional[int]) -> Monomial:
    m, s = geom.space.m, geom.space.s
    if kind not in _KINDS:
        raise ValueError("kind must be one of %s" % (_KINDS,))
    alpha = [0] * m
    u: Tuple[int, ...] = ()
    if kind in ("eps_i", "eps_i_plus_j"):
        if i is None or not 1 <= i <= m:
            raise ValueError("i must be an even-variable index in 1..%d" % m)
        alpha[i - 1] = 1
    if kind in ("odd_j", "eps_i_plus_j"):
        if j is None or not m < j <= s:
            raise ValueError("j must be an odd-variable index in %d..%d" % (m + 1, s))
        u = (j,)
    return Monomial(tuple(alpha), u)


def lemma_weight_space(L: StructureAlgebra, kind: str,
                       i: Optional[int] = None, j: Optional[int] = None) -> List[int]:
    """Basis indices of the weight space for the functional of x_i, x_j or
    x_i x_j (kinds "eps_i", "odd_j", "eps_i_plus_j")."""
    geom = _geometry(L)
    target = monomial_weight(geom, _functional_monomial(geom, kind, i, j))
    return [b for b in range(L.dim) if L.weights[b] == target]


def lemma_weight_family(L: StructureAlgebra, kind: str,
                        i: Optional[int] = None, j: Optional[int] = None) -> List[int]:
    """The spanning family read off the exponent/index conditions directly.

    Conditions, per conjugate pair: even pairs not containing i must be
    balanced mod p (alpha_{r'} = alpha_r), the pair of i must satisfy
    alpha_i = alpha_{i'} + 1 mod p; odd pairs occur whole in u, except that
    for the kinds with a distinguished j the pair {j, j'} contributes j alone.
    This is generated independently of the weight formula and compared with
    the computed eigenspace by ``lemma_weight_report``.
    """
    geom = _geometry(L)
    _functional_monomial(geom, kind, i, j)  # validate arguments
    p, m = geom.space.p, geom.space.m
    ipair = {i, geom.prime(i)} if kind in ("eps_i", "eps_i_plus_j") else set()
    jpair = {j, geom.prime(j)} if kind in ("odd_j", "eps_i_plus_j") else set()
    out = []
    for b, mono in enumerate(L.monomials):
        ok = True
        for l in range(1, geom.k + 1):
            lp = geom.prime(l)
            diff = (mono.alpha[lp - 1] - mono.alpha[l - 1]) % p
            if {l, lp} == ipair:
                want = (p - 1) if i == l else 1
            else:
                want = 0
            if diff != want:
                ok = False
                break
        if not ok:
            continue
        for l in range(2 * geom.k + 1, 2 * geom.k + geom.r + 1):
            lp = geom.prime(l)
            if {l, lp} == jpair:
                if j not in mono.u or geom.prime(j) in mono.u:
                    ok = False
                    break
            elif (l in mono.u) != (lp in mono.u):
                ok = False
                break
        if ok:
            out.append(b)
    return out


def lemma_weight_report(L: StructureAlgebra) -> Dict[Tuple[str, Optional[int], Optional[int]], Dict[str, object]]:
    """Agreement between computed eigenspaces and the spanning families, for
    every admissible (kind, i, j).  Reported, not asserted: the eigenspaces
    are the ground truth."""
    geom = _geometry(L)
    m, s = geom.space.m, geom.space.s
    combos = [("eps_i", i, None) for i in range(1, m + 1)]
    combos += [("odd_j", None, j) for j in range(m + 1, s + 1)]
    combos += [("eps_i_plus_j", i, j) for i in range(1, m + 1) for j in range(m + 1, s + 1)]
    report = {}
    for kind, i, j in combos:
        computed = lemma_weight_space(L, kind, i, j)
        family = lemma_weight_family(L, kind, i, j)
        report[(kind, i, j)] = {
            "computed_dim": len(computed),
            "family_dim": len(family),
            "agree": computed == family,
        }
    return report


def _geometry(L: StructureAlgebra):
    if L.geom is None or L.monomials is None:
        raise ValueError("algebra carries no torus geometry; rebuild it from parameters")
    return L.geom
