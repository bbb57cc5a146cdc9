"""Rank-uniformity, resolvability certificates, and lattice predicates.

The central object is the triangular matrix of down-set rank counts of a
quasi-rank uniform poset, stored as a sequence of monic row polynomials.
``resolve`` attempts to factor that matrix into the certificate of total
nonnegativity used throughout the verification suites: nonnegative
multipliers lambda(n, k) and an array of row polynomials satisfying the
one-step recursion with t^k dividing the k-th column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .polynomial import ExactPoly, Scalar
from .posets import Poset, _bits
from .reports import CheckReport


# -- the rank-count matrix -------------------------------------------------------


@dataclass(frozen=True)
class RMatrix:
    """Monic row polynomials R_0, ..., R_N with deg R_n = n.

    Row n collects the rank profile of any down-set whose top element has
    quasi-rank n; entries are nonnegative integers with constant term at
    least one (the bottom element sits in every down-set).
    """

    rows: Tuple[ExactPoly, ...]

    def __post_init__(self):
        for n, row in enumerate(self.rows):
            if row.degree != n or row.leading_coefficient != 1:
                raise ValueError(f"row {n} is not monic of degree {n}")
            if any(not isinstance(c, int) or c < 0 for c in row.coeffs):
                raise ValueError(f"row {n} has a non-integer or negative entry")
            if row.coefficient(0) < 1:
                raise ValueError(f"row {n} has constant term zero")

    @classmethod
    def from_int_rows(cls, rows: Sequence[Sequence[int]]) -> "RMatrix":
        return cls(tuple(ExactPoly(r) for r in rows))

    @property
    def order(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> int:
        return self.rows[n].coefficient(k)

    def to_text(self) -> str:
        """Triangular integer rows, one row per line."""
        return "\n".join(" ".join(str(c) for c in row.coeffs) for row in self.rows) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "RMatrix":
        rows = [
            [int(tok) for tok in line.split()]
            for line in text.splitlines()
            if line.strip()
        ]
        return cls.from_int_rows(rows)

    def truncated(self, order: int) -> "RMatrix":
        return RMatrix(self.rows[: order + 1])


# -- quasi-rank uniformity -------------------------------------------------------


def is_quasi_rank_uniform(p: Poset) -> Tuple[bool, Optional[RMatrix]]:
    """Check that down-set rank profiles depend only on the top's quasi-rank.

    Returns (True, R(P)) on success, (False, None) otherwise. Requires a
    least element.
    """
    if p.least is None:
        raise ValueError("quasi-rank uniformity requires a least element")
    profiles: Dict[int, Tuple[int, ...]] = {}
    for x in range(p.n):
        r = p.rho(x)
        counts = [0] * (r + 1)
        for z in _bits(p.down_mask(x)):
            counts[p.rho(z)] += 1
        profile = tuple(counts)
        if profiles.setdefault(r, profile) != profile:
            return False, None
    rows = tuple(ExactPoly(profiles[r]) for r in range(p.quasi_rank + 1))
    return True, RMatrix(rows)


def rank_matrix(p: Poset) -> RMatrix:
    """R(P) of a quasi-rank uniform poset; error when not uniform."""
    ok, rmat = is_quasi_rank_uniform(p)
    if not ok:
        raise ValueError("poset is not quasi-rank uniform")
    return rmat


# -- resolvability ----------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionWitness:
    """The array R(n, k) and multipliers lambda(n, k) certifying resolvability.

    polys[n][k] is monic of degree n and divisible by t^k, with
    polys[n][0] the input row and polys[n][n] = t^n; lambdas[n][k] >= 0
    links consecutive rows via
    polys[n+1][k] = polys[n+1][k+1] + lambdas[n][k] * polys[n][k].
    """

    polys: Tuple[Tuple[ExactPoly, ...], ...]
    lambdas: Tuple[Tuple[Scalar, ...], ...]

    def verify(self, r: RMatrix) -> bool:
        """Recheck every certificate invariant against the input rows."""
        N = r.order
        if len(self.polys) != N + 1 or len(self.lambdas) != N:
            return False
        for n in range(N + 1):
            row = self.polys[n]
            if len(row) != n + 1:
                return False
            if row[0] != r.rows[n] or row[n] != ExactPoly.monomial(n):
                return False
            for k, poly in enumerate(row):
                if poly.degree != n or poly.leading_coefficient != 1:
                    return False
                if any(poly.coefficient(i) != 0 for i in range(k)):
                    return False
        for n in range(N):
            lams = self.lambdas[n]
            if len(lams) != n + 1 or any(l < 0 for l in lams):
                return False
            for k in range(n + 1):
                lhs = self.polys[n + 1][k]
                rhs = self.polys[n + 1][k + 1] + lams[k] * self.polys[n][k]
                if lhs != rhs:
                    return False
        return True

    def to_report_text(self) -> str:
        """Readable audit dump: multiplier rows then the polynomial array."""
        lines = []
        for n, lams in enumerate(self.lambdas):
            lines.append("lambda %d: %s" % (n, " ".join(str(l) for l in lams)))
        for n, row in enumerate(self.polys):
            for k, poly in enumerate(row):
                lines.append("R %d %d: %s" % (n, k, poly.to_string()))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ResolveOutcome:
    ok: bool
    witness: Optional[ResolutionWitness] = None
    obstruction: Optional[str] = None
    position: Optional[Tuple[int, int]] = None
    zero_pivot: bool = False

    def describe(self) -> str:
        if self.ok:
            return "resolvable"
        where = f" at {self.position}" if self.position else ""
        flag = " (zero pivot)" if self.zero_pivot else ""
        return f"{self.obstruction}{where}{flag}"


def resolve(r: RMatrix) -> ResolveOutcome:
    """Greedy construction of the resolvability certificate.

    The multiplier lambda(n, k) is forced whenever the pivot coefficient
    [t^k] polys[n][k] is nonzero, because the next column must be
    divisible by t^(k+1). A zero pivot with a zero target selects
    lambda = 0; a zero pivot with a nonzero target cannot be repaired by
    any multiplier and is reported as a divisibility failure with the
    zero_pivot flag set. The first obstruction encountered is reported.
    """
    N = r.order
    polys: List[List[ExactPoly]] = [[r.rows[0]]]
    lambdas: List[List[Scalar]] = []

    for n in range(N):
        current = polys[n]
        nxt = [r.rows[n + 1]]
        lams: List[Scalar] = []
        for k in range(n + 1):
            target = nxt[k].coefficient(k)
            pivot = current[k].coefficient(k)
            if pivot == 0:
                lam: Scalar = 0
                if target != 0:
                    return ResolveOutcome(
                        False,
                        obstruction="divisibility failure",
                        position=(n, k),
                        zero_pivot=True,
                    )
            else:
                lam = Fraction(target, 1) / Fraction(pivot)
                if lam.denominator == 1:
                    lam = int(lam)
            if lam < 0:
                return ResolveOutcome(
                    False, obstruction="negative multiplier", position=(n, k)
                )
            peeled = nxt[k] - lam * current[k]
            if any(peeled.coefficient(i) != 0 for i in range(k + 1)):
                return ResolveOutcome(
                    False, obstruction="divisibility failure", position=(n, k)
                )
            lams.append(lam)
            nxt.append(peeled)
        if nxt[n + 1] != ExactPoly.monomial(n + 1):
            return ResolveOutcome(False, obstruction="nonzero residue", position=(n, n))
        polys.append(nxt)
        lambdas.append(lams)

    witness = ResolutionWitness(
        tuple(tuple(row) for row in polys), tuple(tuple(l) for l in lambdas)
    )
    return ResolveOutcome(True, witness=witness)


def is_totally_nonnegative(r: RMatrix) -> bool:
    """All-minors total nonnegativity check, a test oracle for small orders.

    Guarded to order <= 8; the resolvability certificate is the intended
    production path.
    """
    N = r.order
    if N > 8:
        raise ValueError("minor enumeration is capped at order 8")
    size = N + 1
    mat = [[r.entry(n, k) if k <= n else 0 for k in range(size)] for n in range(size)]
    from itertools import combinations

    def det(rows_idx, cols_idx):
        sub = [[Fraction(mat[i][j]) for j in cols_idx] for i in rows_idx]
        m = len(sub)
        sign = 1
        for c in range(m):
            piv = None
            for rr in range(c, m):
                if sub[rr][c] != 0:
                    piv = rr
                    break
            if piv is None:
                return Fraction(0)
            if piv != c:
                sub[c], sub[piv] = sub[piv], sub[c]
                sign = -sign
            for rr in range(c + 1, m):
                factor = sub[rr][c] / sub[c][c]
                for cc in range(c, m):
                    sub[rr][cc] -= factor * sub[c][cc]
        out = Fraction(sign)
        for c in range(m):
            out *= sub[c][c]
        return out

    for k in range(1, size + 1):
        for rows_idx in combinations(range(size), k):
            for cols_idx in combinations(range(size), k):
                if det(rows_idx, cols_idx) < 0:
                    return False
    return True


# -- chain polynomials from the rank matrix ------------------------------------------


def chain_polys_from_rmatrix(r: RMatrix) -> List[ExactPoly]:
    """p_0 = 1 and p_n = t * sum_{k<n} r(n, k) p_k for n = 1..N."""
    out = [ExactPoly((1,))]
    for n in range(1, r.order + 1):
        acc = ExactPoly()
        for k in range(n):
            c = r.entry(n, k)
            if c:
                acc = acc + c * out[k]
        out.append(acc.shift(1))
    return out


def subdivision_operator(r: RMatrix, f: ExactPoly) -> ExactPoly:
    """Linear extension of t^n -> p_n applied to f; deg f must not exceed N."""
    if f.degree > r.order:
        raise ValueError("degree exceeds the matrix order")
    ps = chain_polys_from_rmatrix(r)
    out = ExactPoly()
    for n, c in enumerate(f.coeffs):
        if c:
            out = out + c * ps[n]
    return out


def ordinal_sum_rows(r: RMatrix, s: RMatrix) -> RMatrix:
    """Rank rows of a stacked poset: rows of r, then t^(N+1) * s-row + top row of r.

    Requires every row of s to have constant term one (the lower part of
    the stack contributes its full rank polynomial below each upper
    element).
    """
    for n, row in enumerate(s.rows):
        if row.coefficient(0) != 1:
            raise ValueError(f"row {n} of the upper summand has constant term != 1")
    N = r.order
    top = r.rows[N]
    rows = list(r.rows)
    for m in range(s.order + 1):
        rows.append(s.rows[m].shift(N + 1) + top)
    return RMatrix(tuple(rows))


# -- lattice predicates ----------------------------------------------------------------


def is_lattice(p: Poset) -> bool:
    """Every pair of elements has a join and a meet."""
    return p.is_lattice


def _require_lattice(p: Poset) -> None:
    if not p.is_lattice:
        raise ValueError("not a lattice")


def _is_graded(p: Poset) -> bool:
    return all(p.rho(y) == p.rho(x) + 1 for x, y in p.covers)


def is_semimodular(p: Poset) -> bool:
    """Graded lattice with rho(x) + rho(y) >= rho(meet) + rho(join)."""
    _require_lattice(p)
    if not _is_graded(p):
        return False
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if p.rho(x) + p.rho(y) < p.rho(p.meet(x, y)) + p.rho(p.join(x, y)):
                return False
    return True


def is_modular(p: Poset) -> bool:
    """Graded lattice with rank equality on every pair."""
    _require_lattice(p)
    if not _is_graded(p):
        return False
    for x in range(p.n):
        for y in range(x + 1, p.n):
            if p.rho(x) + p.rho(y) != p.rho(p.meet(x, y)) + p.rho(p.join(x, y)):
                return False
    return True


def is_atomistic(p: Poset) -> bool:
    """Every element above the bottom is a join of atoms."""
    _require_lattice(p)
    bottom = p.least
    for x in range(p.n):
        if x == bottom:
            continue
        acc = bottom
        for a in p.atoms():
            if p.leq(a, x):
                acc = p.join(acc, a)
        if acc != x:
            return False
    return True


def is_geometric(p: Poset) -> bool:
    """Graded, semimodular, atomistic lattice."""
    _require_lattice(p)
    return _is_graded(p) and is_semimodular(p) and is_atomistic(p)


def _interval_length_spread(p: Poset):
    """Yield (x, y, shortest, longest) cover-path lengths for all x <= y."""
    for x in range(p.n):
        up = p.up_mask(x)
        shortest = {x: 0}
        longest = {x: 0}
        for y in sorted(_bits(up), key=lambda v: (p.rho(v), v)):
            if y == x:
                continue
            lens_s = [shortest[z] for z in p._cover_down[y] if up >> z & 1]
            lens_l = [longest[z] for z in p._cover_down[y] if up >> z & 1]
            shortest[y] = 1 + min(lens_s)
            longest[y] = 1 + max(lens_l)
            yield x, y, shortest[y], longest[y]


def is_triangular(p: Poset) -> bool:
    """Interval rank-level counts depend only on the endpoint ranks.

    Requires a least element and graded intervals; an ungraded interval
    raises ValueError rather than returning False.
    """
    if p.least is None:
        raise ValueError("triangularity requires a least element")
    for x, y, short, long_ in _interval_length_spread(p):
        if short != long_:
            raise ValueError(f"ungraded interval ({x}, {y})")
    counts: Dict[Tuple[int, int, int], int] = {}
    for x in range(p.n):
        for y in _bits(p.up_mask(x)):
            level: Dict[int, int] = {}
            for z in _bits(p.up_mask(x) & p.down_mask(y)):
                level[p.rho(z)] = level.get(p.rho(z), 0) + 1
            for j, c in level.items():
                key = (p.rho(x), j, p.rho(y))
                if counts.setdefault(key, c) != c:
                    return False
    return True


def is_perfect_matroid_design(p: Poset) -> bool:
    """Geometric lattice whose down-set rank profiles are rank uniform."""
    if not is_geometric(p):
        raise ValueError("not a geometric lattice")
    ok, _ = is_quasi_rank_uniform(p)
    return ok


# -- the incidence rank function --------------------------------------------------------


def incidence_R(p: Poset, x: int, y: int, method: str = "auto") -> ExactPoly:
    """Monic degree-rho(y) polynomial attached to the interval [x, y].

    On a lattice it is the join-fiber sum of t^rho(z) over z <= y with
    z join x = y. On a general poset with a least element the same
    element of the incidence algebra is obtained by Mobius inversion of
    w -> sum_{z <= w} t^rho(z); the two computations agree on lattices.
    """
    if not p.leq(x, y):
        raise ValueError("incomparable pair")
    if method == "auto":
        method = "join" if p.is_lattice else "mobius"
    if method == "join":
        if not p.is_lattice:
            raise ValueError("not a lattice")
        counts = [0] * (p.rho(y) + 1)
        for z in _bits(p.down_mask(y)):
            if p.join(z, x) == y:
                counts[p.rho(z)] += 1
        return ExactPoly(counts)
    if method == "mobius":
        if p.least is None:
            raise ValueError("requires a least element")
        acc = ExactPoly()
        for w in _bits(p.up_mask(x) & p.down_mask(y)):
            mu = p.mobius(w, y)
            if mu == 0:
                continue
            counts = [0] * (p.rho(w) + 1)
            for z in _bits(p.down_mask(w)):
                counts[p.rho(z)] += 1
            acc = acc + mu * ExactPoly(counts)
        return acc
    raise ValueError(f"unknown method {method!r}")


def incidence_R_table(p: Poset) -> Dict[Tuple[int, int], ExactPoly]:
    """incidence_R on every comparable pair of a lattice, computed in one sweep."""
    _require_lattice(p)
    table: Dict[Tuple[int, int], ExactPoly] = {}
    join = p._join
    rho = p._rho
    for y in range(p.n):
        dset = p.down_set(y)
        for x in dset:
            jx = join[x]
            counts = [0] * (rho[y] + 1)
            for z in dset:
                if jx[z] == y:
                    counts[rho[z]] += 1
            table[(x, y)] = ExactPoly(counts)
    return table


def check_cover_recursion(p: Poset) -> CheckReport:
    """Verify the cover-step recursion of the incidence rank function.

    For every x < x' <= y with x' covering x the polynomial R(x, y) must
    equal R(x', y) minus the sum of R(x, w) over the co-covers w of y
    with x <= w and x' not below w. Requires a semimodular lattice.
    """
    if not p.is_lattice or not is_semimodular(p):
        return CheckReport(
            suite="incidence",
            instance=repr(p),
            verdict="error",
            witness={"reason": "not a semimodular lattice"},
        )
    table = incidence_R_table(p)
    failures = []
    for x, xp in p.covers:
        for y in _bits(p.up_mask(xp)):
            acc = table[(xp, y)]
            for w in p._cover_down[y]:
                if p.leq(x, w) and not p.leq(xp, w):
                    acc = acc - table[(x, w)]
            if acc != table[(x, y)]:
                failures.append(
                    {
                        "x": x,
                        "x_cover": xp,
                        "y": y,
                        "expected": table[(x, y)].to_string(),
                        "got": acc.to_string(),
                    }
                )
    verdict = "pass" if not failures else "fail"
    return CheckReport(
        suite="incidence",
        instance=repr(p),
        verdict=verdict,
        witness={"failures": failures[:5], "failure_count": len(failures)},
    )
