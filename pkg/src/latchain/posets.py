"""Finite posets with exact chain enumeration.

A poset is stored as a cover graph on elements 0..n-1. The full order
relation is cached as per-element bitmasks, which keeps comparability
queries, interval extraction and the chain-counting dynamic program fast
for the few-thousand-element posets this library targets.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Tuple

from .polynomial import ExactPoly, binomial_basis_poly

MAX_ELEMENTS = 5000


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """Immutable finite poset given by its cover relation.

    ``relations`` may be any acyclic set of pairs (x, y) meaning x < y;
    the transitive reduction is computed on construction, so redundant
    pairs are harmless. ``labels`` are optional external names carried
    along by the structural operations.
    """

    __slots__ = (
        "n",
        "covers",
        "labels",
        "_down",
        "_up",
        "_rho",
        "_cover_down",
        "_cover_up",
        "_least",
        "_greatest",
        "_join",
        "_meet",
        "_lattice",
        "_mobius_cache",
    )

    def __init__(
        self,
        n: int,
        relations: Iterable[Tuple[int, int]] = (),
        labels: Optional[Sequence] = None,
    ):
        if n < 0 or n > MAX_ELEMENTS:
            raise ValueError(f"element count out of range: {n}")
        succ = [set() for _ in range(n)]
        indeg = [0] * n
        seen = set()
        for x, y in relations:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"relation index out of range: ({x}, {y})")
            if x == y:
                raise ValueError(f"reflexive relation pair ({x}, {y})")
            if (x, y) in seen:
                continue
            seen.add((x, y))
            succ[x].add(y)
            indeg[y] += 1

        # Kahn topological order; leftovers mean a cycle.
        order = [x for x in range(n) if indeg[x] == 0]
        head = 0
        while head < len(order):
            x = order[head]
            head += 1
            for y in succ[x]:
                indeg[y] -= 1
                if indeg[y] == 0:
                    order.append(y)
        if len(order) != n:
            raise ValueError("relation contains a cycle")

        down = [1 << x for x in range(n)]
        for x in order:
            dx = down[x]
            for y in succ[x]:
                down[y] |= dx
        up = [1 << x for x in range(n)]
        for y in range(n):
            for x in _bits(down[y]):
                up[x] |= 1 << y

        covers = []
        cover_down = [[] for _ in range(n)]
        cover_up = [[] for _ in range(n)]
        for y in range(n):
            strict = down[y] ^ (1 << y)
            for x in _bits(strict):
                between = up[x] & down[y] & ~(1 << x) & ~(1 << y)
                if between == 0:
                    covers.append((x, y))
                    cover_down[y].append(x)
                    cover_up[x].append(y)

        rho = [0] * n
        for x in sorted(range(n), key=lambda v: down[v].bit_count()):
            below = cover_down[x]
            rho[x] = 1 + max((rho[y] for y in below), default=-1) if below else 0

        minimals = [x for x in range(n) if not cover_down[x]]
        maximals = [x for x in range(n) if not cover_up[x]]

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "covers", tuple(sorted(covers)))
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "_down", tuple(down))
        object.__setattr__(self, "_up", tuple(up))
        object.__setattr__(self, "_rho", tuple(rho))
        object.__setattr__(self, "_cover_down", tuple(map(tuple, cover_down)))
        object.__setattr__(self, "_cover_up", tuple(map(tuple, cover_up)))
        object.__setattr__(self, "_least", minimals[0] if len(minimals) == 1 else None)
        object.__setattr__(self, "_greatest", maximals[0] if len(maximals) == 1 else None)
        object.__setattr__(self, "_join", None)
        object.__setattr__(self, "_meet", None)
        object.__setattr__(self, "_lattice", None)
        object.__setattr__(self, "_mobius_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("Poset is immutable")

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, covers={len(self.covers)})"

    def __len__(self) -> int:
        return self.n

    # -- order queries ---------------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool(self._down[y] >> x & 1)

    def down_set(self, y: int) -> Tuple[int, ...]:
        """Elements z <= y, ascending by index."""
        return tuple(_bits(self._down[y]))

    def up_set(self, x: int) -> Tuple[int, ...]:
        return tuple(_bits(self._up[x]))

    def down_mask(self, y: int) -> int:
        return self._down[y]

    def up_mask(self, x: int) -> int:
        return self._up[x]

    def rho(self, x: int) -> int:
        """Quasi-rank: length of the longest chain up to x from the bottom."""
        return self._rho[x]

    @property
    def quasi_rank(self) -> int:
        return max(self._rho, default=0)

    @property
    def least(self) -> Optional[int]:
        return self._least

    @property
    def greatest(self) -> Optional[int]:
        return self._greatest

    def minimal_elements(self) -> Tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self._cover_down[x])

    def maximal_elements(self) -> Tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self._cover_up[x])

    def atoms(self) -> Tuple[int, ...]:
        if self._least is None:
            raise ValueError("poset has no least element")
        return self._cover_up[self._least]

    def coatoms(self) -> Tuple[int, ...]:
        if self._greatest is None:
            raise ValueError("poset has no greatest element")
        return self._cover_down[self._greatest]

    def label_of(self, x: int):
        return self.labels[x] if self.labels is not None else x

    def _topo_order(self) -> list:
        return sorted(range(self.n), key=lambda x: (self._rho[x], x))

    # -- chain enumeration -------------------------------------------------------

    def chain_polynomial(self) -> ExactPoly:
        """Generating polynomial of chains by size, sum_k c_k t^k.

        Dynamic program over a linear extension: the number of j-element
        chains with maximum x equals the sum over y < x of the number of
        (j-1)-element chains with maximum y.
        """
        if self.n == 0:
            return ExactPoly((1,))
        ends = [None] * self.n  # ends[x][j] = chains of j+1 elements with max x
        totals = [1, 0]
        for x in self._topo_order():
            vec = [1]
            for y in _bits(self._down[x] ^ (1 << x)):
                other = ends[y]
                while len(vec) < len(other) + 1:
                    vec.append(0)
                for j, c in enumerate(other):
                    vec[j + 1] += c
            ends[x] = vec
            while len(totals) < len(vec) + 1:
                totals.append(0)
            for j, c in enumerate(vec):
                totals[j + 1] += c
        return ExactPoly(totals)

    def chain_counts(self) -> Tuple[int, ...]:
        return tuple(self.chain_polynomial().coeffs)

    def quasi_rank_generating_polynomial(self) -> ExactPoly:
        """sum over elements of t^rho(x); requires a least element."""
        if self._least is None:
            raise ValueError("poset has no least element")
        counts = [0] * (self.quasi_rank + 1)
        for r in self._rho:
            counts[r] += 1
        return ExactPoly(counts)

    # -- induced subposets ---------------------------------------------------------

    def induced(self, keep: Iterable[int], relabel=None) -> "Poset":
        """Subposet on the given elements with the inherited order."""
        keep = sorted(set(keep))
        index = {x: i for i, x in enumerate(keep)}
        keep_mask = 0
        for x in keep:
            keep_mask |= 1 << x
        rels = []
        for x in keep:
            for y in _bits(self._up[x] & keep_mask & ~(1 << x)):
                rels.append((index[x], index[y]))
        if relabel is not None:
            labels = [relabel(x) for x in keep]
        elif self.labels is not None:
            labels = [self.labels[x] for x in keep]
        else:
            labels = None
        return Poset(len(keep), rels, labels)

    def rank_selected(self, ranks: Iterable[int]) -> "Poset":
        """Subposet of elements whose quasi-rank lies in the given set."""
        ranks = set(ranks)
        if not ranks:
            raise ValueError("empty rank set")
        return self.induced(x for x in range(self.n) if self._rho[x] in ranks)

    def truncate(self) -> "Poset":
        """Drop the elements of quasi-rank one below the top."""
        top = self.quasi_rank
        return self.rank_selected(set(range(0, max(top - 1, 0))) | {top})

    def interval(self, x: int, y: int) -> "Poset":
        if not self.leq(x, y):
            raise ValueError("not an interval: elements are incomparable")
        return self.induced(_bits(self._up[x] & self._down[y]))

    def open_interval(self, x: int, y: int) -> "Poset":
        if not self.leq(x, y):
            raise ValueError("not an interval: elements are incomparable")
        return self.induced(_bits(self._up[x] & self._down[y] & ~(1 << x) & ~(1 << y)))

    def proper_part(self) -> "Poset":
        """Remove the least and greatest elements; both must exist."""
        if self._least is None or self._greatest is None:
            raise ValueError("poset is not bounded")
        return self.open_interval(self._least, self._greatest)

    def strict_down_poset(self, h: int) -> "Poset":
        """Subposet of elements strictly below h."""
        return self.induced(_bits(self._down[h] ^ (1 << h)))

    def down_poset(self, h: int) -> "Poset":
        """Subposet of elements weakly below h."""
        return self.induced(_bits(self._down[h]))

    # -- structural combinators ------------------------------------------------------

    def dual(self) -> "Poset":
        return Poset(self.n, ((y, x) for x, y in self.covers), self.labels)

    def ordinal_sum(self, other: "Poset") -> "Poset":
        """Stack other on top of self: every element of self below all of other."""
        shift = self.n
        rels = list(self.covers)
        rels += [(x + shift, y + shift) for x, y in other.covers]
        rels += [(x, y + shift) for x in self.maximal_elements() for y in other.minimal_elements()]
        labels = None
        if self.labels is not None or other.labels is not None:
            labels = [self.label_of(x) for x in range(self.n)]
            labels += [other.label_of(y) for y in range(other.n)]
        return Poset(self.n + other.n, rels, labels)

    def direct_product(self, other: "Poset") -> "Poset":
        """Componentwise order on pairs; covers change one coordinate."""
        m = other.n

        def enc(x: int, y: int) -> int:
            return x * m + y

        rels = []
        for x in range(self.n):
            for y, y2 in other.covers:
                rels.append((enc(x, y), enc(x, y2)))
        for x, x2 in self.covers:
            for y in range(m):
                rels.append((enc(x, y), enc(x2, y)))
        labels = [
            (self.label_of(x), other.label_of(y))
            for x in range(self.n)
            for y in range(m)
        ]
        return Poset(self.n * m, rels, labels)

    # -- lattice structure --------------------------------------------------------------

    def _ensure_lattice_tables(self) -> bool:
        if self._lattice is not None:
            return self._lattice
        n = self.n
        join = [[-1] * n for _ in range(n)]
        meet = [[-1] * n for _ in range(n)]
        ok = n > 0
        up, down = self._up, self._down
        for x in range(n):
            for y in range(x, n):
                ub = up[x] & up[y]
                j = -1
                for z in _bits(ub):
                    # the unique member below all upper bounds, if any
                    if up[z] & ub == ub:
                        j = z
                        break
                lb = down[x] & down[y]
                w = -1
                for z in _bits(lb):
                    if down[z] & lb == lb:
                        w = z
                        break
                if j < 0 or w < 0:
                    ok = False
                join[x][y] = join[y][x] = j
                meet[x][y] = meet[y][x] = w
        object.__setattr__(self, "_join", join)
        object.__setattr__(self, "_meet", meet)
        object.__setattr__(self, "_lattice", ok)
        return ok

    @property
    def is_lattice(self) -> bool:
        return self._ensure_lattice_tables()

    def join(self, x: int, y: int) -> int:
        self._ensure_lattice_tables()
        j = self._join[x][y]
        if j < 0:
            raise ValueError(f"join of {x} and {y} does not exist")
        return j

    def meet(self, x: int, y: int) -> int:
        self._ensure_lattice_tables()
        w = self._meet[x][y]
        if w < 0:
            raise ValueError(f"meet of {x} and {y} does not exist")
        return w

    # -- incidence algebra ---------------------------------------------------------------

    def mobius(self, x: int, y: int) -> int:
        """Mobius function of the interval [x, y]."""
        if not self.leq(x, y):
            raise ValueError("mobius is undefined on incomparable pairs")
        cache = self._mobius_cache
        key = (x, y)
        if key in cache:
            return cache[key]
        # iterative accumulation over z in [x, y), ordered by rank
        interval = sorted(
            _bits(self._up[x] & self._down[y]), key=lambda z: (self._rho[z], z)
        )
        for w in interval:
            if (x, w) in cache:
                continue
            total = 0
            for z in _bits(self._up[x] & self._down[w] & ~(1 << w)):
                total += cache[(x, z)]
            cache[(x, w)] = 1 if w == x else -total
        return cache[key]

    def zeta_polynomial(self) -> ExactPoly:
        """Multichain-counting polynomial Z(n) of a bounded poset.

        Z(n) counts multichains bottom = x_0 <= ... <= x_n = top, and is
        assembled from strict chain counts of the open interval against
        the binomial basis.
        """
        if self._least is None or self._greatest is None:
            raise ValueError("zeta polynomial requires a bounded poset")
        if self.n == 1:
            return ExactPoly((1,))
        w = self.proper_part().chain_polynomial().coeffs
        out = ExactPoly()
        for k, wk in enumerate(w):
            if wk:
                out = out + wk * binomial_basis_poly(k + 1)
        return out

    def p_polynomial(self) -> ExactPoly:
        """Generating polynomial of bottom-to-top chains by interior size.

        A chain with j interior elements contributes t^(j+1). Defined for
        bounded posets with at least two elements.
        """
        if self._least is None or self._greatest is None:
            raise ValueError("p polynomial requires a bounded poset")
        if self.n < 2:
            raise ValueError("p polynomial requires at least two elements")
        return self.proper_part().chain_polynomial().shift(1)

    def bounded_chain_polynomial(self, x: int) -> ExactPoly:
        """sum_j (number of chains bottom = z_0 < ... < z_j = x) t^j."""
        if self._least is None:
            raise ValueError("poset has no least element")
        if x == self._least:
            return ExactPoly((1,))
        return self.open_interval(self._least, x).chain_polynomial().shift(1)


# -- isomorphism -----------------------------------------------------------------------


def _refine_colors_joint(p: Poset, q: Poset):
    """Color refinement on both posets at once, sharing one palette."""

    def start(r: Poset) -> list:
        return [
            (r.rho(x), len(r._cover_down[x]), len(r._cover_up[x]),
             r.down_mask(x).bit_count(), r.up_mask(x).bit_count())
            for x in range(r.n)
        ]

    def step(r: Poset, colors: list) -> list:
        return [
            (
                colors[x],
                tuple(sorted(colors[y] for y in r._cover_down[x])),
                tuple(sorted(colors[y] for y in r._cover_up[x])),
            )
            for x in range(r.n)
        ]

    cp, cq = start(p), start(q)
    palette = {}
    cp = [palette.setdefault(c, len(palette)) for c in cp]
    cq = [palette.setdefault(c, len(palette)) for c in cq]
    for _ in range(max(p.n, q.n)):
        np_, nq_ = step(p, cp), step(q, cq)
        palette = {}
        rp = [palette.setdefault(c, len(palette)) for c in np_]
        rq = [palette.setdefault(c, len(palette)) for c in nq_]
        if rp == cp and rq == cq:
            break
        cp, cq = rp, rq
    return cp, cq


def is_isomorphic(p: Poset, q: Poset) -> bool:
    """Decide poset isomorphism by color refinement plus backtracking."""
    if p.n != q.n or len(p.covers) != len(q.covers):
        return False
    cp, cq = _refine_colors_joint(p, q)
    if sorted(cp) != sorted(cq):
        return False
    by_color = {}
    for y, c in enumerate(cq):
        by_color.setdefault(c, []).append(y)
    # assign rarest colors first
    order = sorted(range(p.n), key=lambda x: (len(by_color[cp[x]]), cp[x], x))
    mapping = [-1] * p.n
    used = [False] * q.n

    def compatible(x: int, y: int) -> bool:
        for z in p._cover_down[x]:
            if mapping[z] >= 0 and mapping[z] not in q._cover_down[y]:
                return False
        for z in p._cover_up[x]:
            if mapping[z] >= 0 and mapping[z] not in q._cover_up[y]:
                return False
        # covers must also be reflected
        for w in q._cover_down[y]:
            if used[w] and w not in [mapping[z] for z in p._cover_down[x]]:
                return False
        for w in q._cover_up[y]:
            if used[w] and w not in [mapping[z] for z in p._cover_up[x]]:
                return False
        return True

    def backtrack(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in by_color[cp[x]]:
            if used[y] or not compatible(x, y):
                continue
            mapping[x] = y
            used[y] = True
            if backtrack(i + 1):
                return True
            mapping[x] = -1
            used[y] = False
        return False

    return backtrack(0)


# -- text format -------------------------------------------------------------------------


def poset_to_text(p: Poset) -> str:
    """Serialize in the line format: "poset n", "cover i j", "label i name"."""
    lines = [f"poset {p.n}"]
    lines += [f"cover {x} {y}" for x, y in p.covers]
    if p.labels is not None:
        lines += [f"label {i} {p.labels[i]}" for i in range(p.n)]
    return "\n".join(lines) + "\n"


def poset_from_text(text: str) -> Poset:
    """Parse the poset text format; rejects cycles and bad indices."""
    n = None
    rels = []
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 2)
        kind = parts[0]
        if kind == "poset":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate poset header")
            n = int(parts[1])
        elif kind == "cover":
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: cover needs two indices")
            rels.append((int(parts[1]), int(parts[2])))
        elif kind == "label":
            rest = parts[2] if len(parts) > 2 else ""
            labels[int(parts[1])] = rest
        else:
            raise ValueError(f"line {lineno}: unknown directive {kind!r}")
    if n is None:
        raise ValueError("missing poset header")
    label_list = None
    if labels:
        if any(not (0 <= i < n) for i in labels):
            raise ValueError("label index out of range")
        label_list = [labels.get(i, str(i)) for i in range(n)]
    return Poset(n, rels, label_list)


def read_poset(path: str) -> Poset:
    with open(path, "r", encoding="utf-8") as fh:
        return poset_from_text(fh.read())


def write_poset(p: Poset, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(poset_to_text(p))


# -- small builders ------------------------------------------------------------------------


def chain_poset(k: int) -> Poset:
    """Totally ordered poset on k elements."""
    if k < 0:
        raise ValueError("negative size")
    return Poset(k, ((i, i + 1) for i in range(k - 1)))


def antichain(k: int) -> Poset:
    return Poset(k)
