"""The truncated tensor superalgebra of divided powers and Grassmann variables.

Basis monomials look like ``x^(alpha) * x_u`` where ``alpha`` is a bounded
multi-index over the even variables x_1..x_m (divided powers: exponents are
capped at pi_i = p^{t_i} - 1) and ``u`` is a strictly increasing tuple of odd
variable indices from {m+1, ..., m+n} (Grassmann: squares vanish, swaps cost
a sign).  The product rules are

    x^(alpha) x^(beta) = C(alpha+beta, alpha) x^(alpha+beta)
    x_i x_j = -x_j x_i          for odd i, j

and the whole algebra is finite dimensional of dimension p^{|t|} * 2^n.
Exponent overflow past the cap is silently absorbed: a base-p carry in
alpha+beta forces C(alpha+beta, alpha) = 0 mod p, so out-of-range products
drop out on their own.
"""

from __future__ import annotations

from functools import cached_property
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from .fpexact import binom_mod, is_odd_prime

MIXED = "mixed"


class Monomial(NamedTuple):
    """One basis element: multi-index ``alpha`` plus ordered odd part ``u``."""

    alpha: Tuple[int, ...]
    u: Tuple[int, ...]

    @property
    def parity(self) -> int:
        return len(self.u) & 1

    @property
    def degree(self) -> int:
        return sum(self.alpha) + len(self.u)


def monomial_str(mono: Monomial) -> str:
    """Text form used in JSON labels and CLI output, e.g. ``x^(1,0)*x<3>``."""
    parts = []
    if any(mono.alpha):
        parts.append("x^(" + ",".join(str(a) for a in mono.alpha) + ")")
    if mono.u:
        parts.append("x<" + ",".join(str(i) for i in mono.u) + ">")
    return "*".join(parts) if parts else "1"


def _merge_odd(u: Tuple[int, ...], v: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """Merge two increasing odd-index tuples; None on a repeated index.

    The sign is (-1)^inversions for sorting the concatenation u+v, which is
    exactly the convention x_i x_j = -x_j x_i with no extra normalization.
    """
    if set(u) & set(v):
        return None
    inv = sum(1 for a in u for b in v if a > b)
    return (-1) ** (inv & 1), tuple(sorted(u + v))


class Space:
    """The algebra at fixed parameters (p, m, n, t); all operations live here."""

    def __init__(self, p: int, m: int, n: int, t: Sequence[int]):
        if not is_odd_prime(p):
            raise ValueError("p must be an odd prime > 2, got %r" % (p,))
        if not isinstance(m, int) or m < 2 or m % 2:
            raise ValueError("m must be an even integer >= 2, got %r" % (m,))
        if not isinstance(n, int) or n < 2 or n % 2:
            raise ValueError("n must be an even integer >= 2, got %r" % (n,))
        t = tuple(t)
        if len(t) != m or any(not isinstance(x, int) or x < 1 for x in t):
            raise ValueError("t must be %d positive integers, got %r" % (m, t))
        self.p = p
        self.m = m
        self.n = n
        self.t = t
        self.s = m + n
        self.pi = tuple(p ** ti - 1 for ti in t)
        # top Z-degree of the algebra: |pi| + n
        self.height = sum(self.pi) + n

    def params(self) -> Tuple[int, int, int, Tuple[int, ...]]:
        return (self.p, self.m, self.n, self.t)

    # -- basis ---------------------------------------------------------------

    @cached_property
    def basis(self) -> Tuple[Monomial, ...]:
        """All monomials, alpha lexicographic-major then u lexicographic."""
        alphas: List[Tuple[int, ...]] = [()]
        for cap in self.pi:
            alphas = [a + (x,) for a in alphas for x in range(cap + 1)]
        odd = range(self.m + 1, self.s + 1)
        subsets: List[Tuple[int, ...]] = [()]
        for i in odd:
            subsets += [u + (i,) for u in subsets]
        subsets.sort()
        return tuple(Monomial(a, u) for a in alphas for u in subsets)

    @cached_property
    def basis_index(self) -> Dict[Monomial, int]:
        return {mono: i for i, mono in enumerate(self.basis)}

    def monomial(self, alpha: Sequence[int], u: Sequence[int]) -> Monomial:
        alpha = tuple(alpha)
        u = tuple(u)
        if len(alpha) != self.m or any(a < 0 or a > cap for a, cap in zip(alpha, self.pi)):
            raise ValueError("multi-index %r outside bounds %r" % (alpha, self.pi))
        if list(u) != sorted(set(u)) or any(i <= self.m or i > self.s for i in u):
            raise ValueError("odd part %r is not an increasing subset of [%d, %d]"
                             % (u, self.m + 1, self.s))
        return Monomial(alpha, u)

    # -- element constructors --------------------------------------------------

    def zero(self) -> "SuperPolynomial":
        return SuperPolynomial(self, {})

    def one(self) -> "SuperPolynomial":
        return SuperPolynomial(self, {Monomial((0,) * self.m, ()): 1})

    def x(self, i: int) -> "SuperPolynomial":
        """The degree-one generator x_i, for i in 1..s."""
        if not 1 <= i <= self.s:
            raise IndexError("variable index %d outside 1..%d" % (i, self.s))
        if i <= self.m:
            alpha = tuple(1 if j == i - 1 else 0 for j in range(self.m))
            mono = Monomial(alpha, ())
        else:
            mono = Monomial((0,) * self.m, (i,))
        return SuperPolynomial(self, {mono: 1})

    def poly(self, terms: Dict[Monomial, int]) -> "SuperPolynomial":
        return SuperPolynomial(self, terms)

    # -- multiplication --------------------------------------------------------

    def mul_monomials(self, a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
        """Product of two basis monomials: (coefficient, monomial) or None."""
        merged = _merge_odd(a.u, b.u)
        if merged is None:
            return None
        coeff = binom_mod(tuple(x + y for x, y in zip(a.alpha, b.alpha)), a.alpha, self.p)
        if coeff == 0:
            return None
        sign, u = merged
        alpha = tuple(x + y for x, y in zip(a.alpha, b.alpha))
        return coeff * sign % self.p, Monomial(alpha, u)

    def multiply(self, f: "SuperPolynomial", g: "SuperPolynomial") -> "SuperPolynomial":
        self._check_same(f, g)
        out: Dict[Monomial, int] = {}
        for ma, ca in f.terms.items():
            for mb, cb in g.terms.items():
                prod = self.mul_monomials(ma, mb)
                if prod is None:
                    continue
                c, mono = prod
                v = (out.get(mono, 0) + ca * cb * c) % self.p
                if v:
                    out[mono] = v
                elif mono in out:
                    del out[mono]
        return SuperPolynomial(self, out, _normalized=True)

    # -- superderivations D_i ---------------------------------------------------

    def apply_D_monomial(self, i: int, mono: Monomial) -> Optional[Tuple[int, Monomial]]:
        if not 1 <= i <= self.s:
            raise IndexError("direction %d outside 1..%d" % (i, self.s))
        if i <= self.m:
            if mono.alpha[i - 1] == 0:
                return None
            alpha = mono.alpha[:i - 1] + (mono.alpha[i - 1] - 1,) + mono.alpha[i:]
            return 1, Monomial(alpha, mono.u)
        if i not in mono.u:
            return None
        pos = mono.u.index(i)
        return (-1) ** (pos & 1), Monomial(mono.alpha, mono.u[:pos] + mono.u[pos + 1:])

    def apply_D(self, i: int, f: "SuperPolynomial") -> "SuperPolynomial":
        """The superderivation along direction i: lowers alpha_i for even i,
        strips x_i with the Grassmann sign for odd i."""
        out: Dict[Monomial, int] = {}
        for mono, c in f.terms.items():
            res = self.apply_D_monomial(i, mono)
            if res is None:
                continue
            sign, image = res
            v = (out.get(image, 0) + c * sign) % self.p
            if v:
                out[image] = v
            elif image in out:
                del out[image]
        return SuperPolynomial(self, out, _normalized=True)

    def _check_same(self, f: "SuperPolynomial", g: "SuperPolynomial") -> None:
        if f.space.params() != self.params() or g.space.params() != self.params():
            raise ValueError("operands live in different algebras: %r vs %r"
                             % (f.space.params(), g.space.params()))

    def __repr__(self) -> str:  # pragma: no cover
        return "Space(p=%d, m=%d, n=%d, t=%s)" % (self.p, self.m, self.n, self.t)


class SuperPolynomial:
    """Sparse GF(p)-linear combination of monomials."""

    __slots__ = ("space", "terms")

    def __init__(self, space: Space, terms: Dict[Monomial, int], _normalized: bool = False):
        self.space = space
        if _normalized:
            self.terms = terms
        else:
            clean: Dict[Monomial, int] = {}
            for mono, c in terms.items():
                c %= space.p
                if c:
                    clean[mono] = c
            self.terms = clean

    def parity(self) -> Union[int, str]:
        """0 or 1 when all terms agree, the string "mixed" otherwise.

        The zero polynomial reports 0 by convention.
        """
        parities = {mono.parity for mono in self.terms}
        if len(parities) > 1:
            return MIXED
        return parities.pop() if parities else 0

    def homogeneous_parts(self) -> Dict[int, "SuperPolynomial"]:
        parts: Dict[int, Dict[Monomial, int]] = {}
        for mono, c in self.terms.items():
            parts.setdefault(mono.parity, {})[mono] = c
        return {d: SuperPolynomial(self.space, t, _normalized=True) for d, t in parts.items()}

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self.space._check_same(self, other)
        out = dict(self.terms)
        p = self.space.p
        for mono, c in other.terms.items():
            v = (out.get(mono, 0) + c) % p
            if v:
                out[mono] = v
            elif mono in out:
                del out[mono]
        return SuperPolynomial(self.space, out, _normalized=True)

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-1) * other

    def __neg__(self) -> "SuperPolynomial":
        return (-1) * self

    def __mul__(self, other: Union["SuperPolynomial", int]) -> "SuperPolynomial":
        if isinstance(other, int):
            return self.__rmul__(other)
        return self.space.multiply(self, other)

    def __rmul__(self, scalar: int) -> "SuperPolynomial":
        scalar %= self.space.p
        if scalar == 0:
            return self.space.zero()
        return SuperPolynomial(
            self.space,
            {mono: c * scalar % self.space.p for mono, c in self.terms.items()},
            _normalized=True)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SuperPolynomial)
                and self.space.params() == other.space.params()
                and self.terms == other.terms)

    def __hash__(self):  # terms dict makes these unhashable on purpose
        raise TypeError("SuperPolynomial is not hashable")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            txt = monomial_str(mono)
            bits.append(txt if c == 1 and txt != "1" else
                        ("%d" % c if txt == "1" else "%d*%s" % (c, txt)))
        return " + ".join(bits)


def parity_of(f: SuperPolynomial) -> Union[int, str]:
    return f.parity()


def multiply(f: SuperPolynomial, g: SuperPolynomial) -> SuperPolynomial:
    return f.space.multiply(f, g)


def apply_D(i: int, f: SuperPolynomial) -> SuperPolynomial:
    return f.space.apply_D(i, f)


def enumerate_basis(p: int, m: int, n: int, t: Sequence[int]) -> Tuple[Monomial, ...]:
    """Ordered monomial basis; length p^{|t|} * 2^n."""
    return Space(p, m, n, t).basis
