"""Exact univariate polynomial arithmetic and real-root predicates.

Everything is computed over the rationals: Sturm sequences decide
real-rootedness and root location, root isolation produces disjoint
rational intervals, and interlacing of root multisets is decided by
comparing isolated roots. No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]

# degree of the zero polynomial
MINUS_INF = float("-inf")


def _norm(c: Scalar) -> Scalar:
    """Collapse integral Fractions to int; reject inexact coefficient types."""
    if isinstance(c, bool):
        raise TypeError("bool is not a polynomial coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


class ExactPoly:
    """Univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` holds the coefficient of t^k; the trailing entry is
    nonzero unless the polynomial is zero (empty tuple). Instances are
    immutable and hashable, so they are safe to share across threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("ExactPoly is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "ExactPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "ExactPoly":
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls((0,) * k + (c,))

    @classmethod
    def from_string(cls, text: str) -> "ExactPoly":
        """Parse an ASCII coefficient list, lowest degree first, e.g. "1 4 5 2".

        Rational entries are written "p/q".
        """
        return cls(Fraction(tok) for tok in text.split())

    def to_string(self) -> str:
        """Inverse of :meth:`from_string`; the zero polynomial prints as "0"."""
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    # -- basic queries ---------------------------------------------------------

    @property
    def degree(self):
        """Degree, or ``MINUS_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading_coefficient(self) -> Scalar:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("ExactPoly",) + tuple(map(Fraction, self.coeffs)))

    def __repr__(self) -> str:
        return f"ExactPoly({list(self.coeffs)!r})"

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ExactPoly(out)

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(-c for c in self.coeffs)

    def __sub__(self, other: "ExactPoly") -> "ExactPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return ExactPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ci in enumerate(a):
            if ci == 0:
                continue
            for j, cj in enumerate(b):
                out[i + j] += ci * cj
        return ExactPoly(out)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, k: int) -> "ExactPoly":
        if k < 0:
            raise ValueError("negative power")
        result = ExactPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "ExactPoly"):
        """Exact division with remainder over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = Fraction(other.coeffs[-1])
        quo = [0] * max(0, len(rem) - d)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = Fraction(c) / lead
            quo[i - d] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] -= q * oc
        return ExactPoly(quo), ExactPoly(rem)

    def __floordiv__(self, other: "ExactPoly") -> "ExactPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "ExactPoly") -> "ExactPoly":
        return divmod(self, other)[1]

    def shift(self, k: int) -> "ExactPoly":
        """Multiply by t^k."""
        if self.is_zero:
            return self
        return ExactPoly((0,) * k + self.coeffs)

    def derivative(self) -> "ExactPoly":
        return ExactPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def monic(self) -> "ExactPoly":
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = Fraction(1, 1) / Fraction(lead)
        return ExactPoly(c * inv for c in self.coeffs)

    def compose(self, inner: "ExactPoly") -> "ExactPoly":
        """Exact polynomial composition self(inner(t)) by Horner."""
        out = ExactPoly()
        for c in reversed(self.coeffs):
            out = out * inner + ExactPoly.constant(c)
        return out

    def __call__(self, x: Scalar) -> Scalar:
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


ZERO = ExactPoly()
ONE = ExactPoly((1,))
T = ExactPoly((0, 1))


# -- gcd and square-free structure ----------------------------------------------


def poly_gcd(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    """Monic gcd by the Euclidean algorithm over the rationals."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, a % b
    return a.monic() if not a.is_zero else a


def squarefree_part(f: ExactPoly) -> ExactPoly:
    """The monic product of the distinct irreducible factors of f."""
    if f.is_zero:
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return ONE
    return (f // poly_gcd(f, f.derivative())).monic()


def squarefree_decomposition(f: ExactPoly) -> list:
    """Yun's algorithm: return [(q_i, i)] with f = lc * prod q_i^i.

    Each q_i is monic and square-free, the q_i are pairwise coprime, and
    factors with q_i = 1 are omitted.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    df = f.derivative()
    a = poly_gcd(f, df)
    b = f // a
    c = df // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        p = poly_gcd(b, d)
        if p.degree > 0:
            out.append((p, i))
        b2 = b // p
        c = d // p
        d = c - b2.derivative()
        b = b2
        i += 1
    return out


# -- Sturm sequences --------------------------------------------------------------


def _sturm_chain(f: ExactPoly) -> list:
    chain = [f, f.derivative()]
    while not chain[-1].is_zero:
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations(signs: Sequence[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign(x: Scalar) -> int:
    return (x > 0) - (x < 0)


def _variations_at(chain: Sequence[ExactPoly], x: Scalar) -> int:
    return _variations([_sign(p(x)) for p in chain])


def _variations_at_inf(chain: Sequence[ExactPoly], positive: bool) -> int:
    signs = []
    for p in chain:
        s = _sign(p.leading_coefficient)
        if not positive and p.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _distinct_roots_closed(s: ExactPoly, lo: Fraction, hi: Fraction) -> int:
    """Distinct real roots of square-free s in the closed interval [lo, hi]."""
    if lo > hi:
        raise ValueError("empty interval")
    extra = 0
    if s(lo) == 0:
        extra += 1
        s = s // ExactPoly((-lo, 1))
    if lo != hi and s(hi) == 0:
        extra += 1
        s = s // ExactPoly((-hi, 1))
    if lo == hi or s.degree <= 0:
        return extra
    chain = _sturm_chain(s)
    return extra + _variations_at(chain, lo) - _variations_at(chain, hi)


def sturm_real_root_count(
    p: ExactPoly, interval: Optional[Tuple[Scalar, Scalar]] = None
) -> int:
    """Number of distinct real roots of p, in all of R or in a closed interval.

    The count is obtained from the Sturm chain of the square-free part,
    so repeated roots are counted once.
    """
    if p.is_zero:
        raise ValueError("undefined root count for the zero polynomial")
    if p.degree == 0:
        return 0
    s = squarefree_part(p)
    if s.degree <= 0:
        return 0
    if interval is None:
        chain = _sturm_chain(s)
        return _variations_at_inf(chain, positive=False) - _variations_at_inf(
            chain, positive=True
        )
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    return _distinct_roots_closed(s, lo, hi)


def real_root_count_with_multiplicity(p: ExactPoly) -> int:
    """Total number of real roots counted with multiplicity."""
    if p.is_zero:
        raise ValueError("undefined root count for the zero polynomial")
    total = 0
    for q, mult in squarefree_decomposition(p):
        total += mult * sturm_real_root_count(q)
    return total


def is_real_rooted(p: ExactPoly) -> bool:
    """True iff every complex zero of p is real (constants count as real-rooted)."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if p.degree == 0:
        return True
    return real_root_count_with_multiplicity(p) == p.degree


def roots_in_interval(p: ExactPoly, lo: Scalar, hi: Scalar) -> bool:
    """True iff every root of the real-rooted polynomial p lies in [lo, hi]."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    if not is_real_rooted(p):
        raise ValueError("not real-rooted")
    if p.degree == 0:
        return True
    total = sturm_real_root_count(p)
    inside = sturm_real_root_count(p, (Fraction(lo), Fraction(hi)))
    return inside == total


# -- root isolation ----------------------------------------------------------------


@dataclass(frozen=True)
class RootIsolation:
    """Disjoint rational intervals (a, b], one per distinct real root.

    ``multiplicities[i]`` is the multiplicity of the root inside
    ``intervals[i]``; intervals are sorted in increasing order.
    """

    intervals: Tuple[Tuple[Fraction, Fraction], ...]
    multiplicities: Tuple[int, ...]

    @property
    def distinct_count(self) -> int:
        return len(self.intervals)

    @property
    def count_with_multiplicity(self) -> int:
        return sum(self.multiplicities)


def _root_bound(p: ExactPoly) -> Fraction:
    """Cauchy bound: every real root has absolute value < the returned value."""
    lead = abs(Fraction(p.leading_coefficient))
    return 1 + max(abs(Fraction(c)) for c in p.coeffs) / lead


def _isolate_squarefree(s: ExactPoly) -> list:
    """Disjoint intervals (a, b], each holding one distinct root of square-free s."""
    if s.degree <= 0:
        return []
    chain = _sturm_chain(s)
    cache = {}

    def var(x: Fraction) -> int:
        if x not in cache:
            cache[x] = _variations_at(chain, x)
        return cache[x]

    bound = _root_bound(s)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        count = var(lo) - var(hi)
        if count == 0:
            continue
        if count == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return out


def isolate_real_roots(p: ExactPoly) -> RootIsolation:
    """Isolate the distinct real roots of p with their multiplicities."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    decomp = squarefree_decomposition(p)
    s = squarefree_part(p)
    intervals = _isolate_squarefree(s)
    mults = []
    for lo, hi in intervals:
        m = 0
        for q, mult in decomp:
            if _distinct_roots_closed(q, lo, hi) - (1 if q(lo) == 0 else 0):
                m = mult
                break
        mults.append(m)
    return RootIsolation(tuple(intervals), tuple(mults))


# -- interlacing -------------------------------------------------------------------


def _root_profile(p: ExactPoly, intervals) -> list:
    """Multiplicity of p in each of the given globally disjoint intervals."""
    decomp = squarefree_decomposition(p)
    out = []
    for lo, hi in intervals:
        m = 0
        for q, mult in decomp:
            inside = _distinct_roots_closed(q, lo, hi) - (1 if q(lo) == 0 else 0)
            if inside:
                m += mult
        out.append(m)
    return out


def interlaces(g: ExactPoly, f: ExactPoly) -> bool:
    """True iff the zeros of g interlace those of f.

    Written g interlaces f when, sorting both root multisets decreasingly,
    beta_k <= alpha_k <= beta_{k-1} holds throughout (alpha from f, beta
    from g). The zero polynomial interlaces and is interlaced by every
    real-rooted polynomial. Degrees may differ by at most one, otherwise
    the answer is False. Non-real-rooted or nonpositive-leading input
    raises ValueError.
    """
    if f.is_zero or g.is_zero:
        return True
    if not is_real_rooted(f) or not is_real_rooted(g):
        raise ValueError("not real-rooted")
    if f.leading_coefficient <= 0 or g.leading_coefficient <= 0:
        raise ValueError("positive leading coefficients required")
    n, m = f.degree, g.degree
    if not (m <= n <= m + 1):
        return False
    if m == 0:
        return True
    product = squarefree_part(f * g)
    intervals = _isolate_squarefree(product)
    prof_f = _root_profile(f, intervals)
    prof_g = _root_profile(g, intervals)
    # interval indices increase with the root value; list roots largest first
    order = range(len(intervals) - 1, -1, -1)
    a = [i for i in order for _ in range(prof_f[i])]
    b = [i for i in order for _ in range(prof_g[i])]
    for k in range(m):
        if b[k] > a[k]:  # beta_k > alpha_k
            return False
        if k + 1 < n and a[k + 1] > b[k]:  # alpha_{k+1} > beta_k
            return False
    return True


def check_damped_interlacing(f: ExactPoly, g: ExactPoly, lam: Scalar) -> bool:
    """Check that g interlaces f - lam*t*g and f - lam*t*g interlaces f.

    Requires g interlacing f with deg f = deg g + 1, lam >= 0, and a
    positive leading coefficient for f - lam*t*g; each violated
    precondition raises its own ValueError.
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("multiplier must be nonnegative")
    if f.degree != g.degree + 1:
        raise ValueError("degree of f must exceed degree of g by one")
    if not interlaces(g, f):
        raise ValueError("g does not interlace f")
    damped = f - (lam * g).shift(1)
    if damped.is_zero or damped.leading_coefficient <= 0:
        raise ValueError("damped polynomial must keep a positive leading coefficient")
    return interlaces(g, damped) and interlaces(damped, f)


# -- matrix positivity -------------------------------------------------------------


def is_tp2(rows: Sequence[Sequence[Scalar]]) -> bool:
    """True iff all entries and all 2x2 minors of the matrix are nonnegative."""
    mat = [list(r) for r in rows]
    for r in mat:
        if any(c < 0 for c in r):
            return False
    nr = len(mat)
    nc = len(mat[0]) if mat else 0
    if any(len(r) != nc for r in mat):
        raise ValueError("ragged matrix")
    for i in range(nr):
        for j in range(i + 1, nr):
            for k in range(nc):
                for l in range(k + 1, nc):
                    if mat[i][k] * mat[j][l] - mat[i][l] * mat[j][k] < 0:
                        return False
    return True


# -- f/h transforms ----------------------------------------------------------------


def h_from_f(f: ExactPoly, n: int) -> ExactPoly:
    """Expand (1 - t)^n * f(t / (1 - t)) exactly; requires deg f <= n."""
    if f.degree > n:
        raise ValueError("degree exceeds the dimension parameter")
    one_minus_t = ExactPoly((1, -1))
    out = ExactPoly()
    for k, c in enumerate(f.coeffs):
        if c != 0:
            out = out + c * (one_minus_t ** (n - k)).shift(k)
    if f.is_zero:
        return ZERO
    return out


def f_from_h(h: ExactPoly, n: int) -> ExactPoly:
    """Inverse of :func:`h_from_f`: expand (1 + t)^n * h(t / (1 + t))."""
    if h.degree > n:
        raise ValueError("degree exceeds the dimension parameter")
    one_plus_t = ExactPoly((1, 1))
    out = ExactPoly()
    for k, c in enumerate(h.coeffs):
        if c != 0:
            out = out + c * (one_plus_t ** (n - k)).shift(k)
    if h.is_zero:
        return ZERO
    return out


# -- binomial basis and the diamond product ----------------------------------------


def binomial_basis_poly(k: int) -> ExactPoly:
    """The polynomial C(t, k) = t(t-1)...(t-k+1) / k!."""
    out = ONE
    for i in range(k):
        out = out * ExactPoly((-i, 1))
    return out * Fraction(1, factorial(k))


def from_binomial_coefficients(cs: Sequence[Scalar]) -> ExactPoly:
    """Expand sum_k cs[k] * C(t, k) into the power basis."""
    out = ExactPoly()
    for k, c in enumerate(cs):
        if c != 0:
            out = out + c * binomial_basis_poly(k)
    return out


def to_binomial_coefficients(p: ExactPoly) -> list:
    """Coefficients of p in the binomial basis, via finite differences."""
    if p.is_zero:
        return []
    d = p.degree
    vals = [p(j) for j in range(d + 1)]
    out = []
    for _ in range(d + 1):
        out.append(vals[0])
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    return out


def diamond_product(f: ExactPoly, g: ExactPoly) -> ExactPoly:
    """Multiply f and g through the binomial basis.

    Writing E for the linear map sending C(t, k) to t^k, this returns
    E(E^{-1}(f) * E^{-1}(g)). It is the operation that turns products of
    zeta polynomials back into chain-generating data.
    """
    if f.is_zero or g.is_zero:
        return ZERO
    zf = from_binomial_coefficients(f.coeffs)
    zg = from_binomial_coefficients(g.coeffs)
    return ExactPoly(to_binomial_coefficients(zf * zg))
