"""Builders for the lattice families exercised by the verification suites.

Boolean algebras and their truncations, subspace and affine lattices over
small prime fields, partition lattices, design posets, paving lattices
from d-partitions, the generalized paving construction, group-labeled
Whitney rows, modular cuts and single-element extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .polynomial import ExactPoly
from .posets import Poset, _bits
from .tn import RMatrix, is_geometric

# size guards, chosen so every construction stays at desk scale
MAX_BOOLEAN_GROUND = 12
MAX_SUBSPACE_DIM = 4
MAX_SUBSPACE_PRIME = 7
MAX_PARTITION_GROUND = 8


# -- Boolean algebras -----------------------------------------------------------------


def boolean_lattice(n: int) -> Poset:
    """Subsets of {1, ..., n} ordered by inclusion; element index is the bitmask."""
    if not 0 <= n <= MAX_BOOLEAN_GROUND:
        raise ValueError(f"ground size out of range: {n}")
    rels = []
    for s in range(1 << n):
        for i in range(n):
            if not s >> i & 1:
                rels.append((s, s | 1 << i))
    labels = [frozenset(i + 1 for i in range(n) if s >> i & 1) for s in range(1 << n)]
    return Poset(1 << n, rels, labels)


def truncated_boolean(n: int, k: int) -> Poset:
    """k-fold truncation of the Boolean algebra: subsets of size <= n-k-1 plus the top."""
    if not 0 <= k <= n - 1:
        raise ValueError(f"truncation steps out of range: k={k}, n={n}")
    if n > MAX_BOOLEAN_GROUND:
        raise ValueError(f"ground size out of range: {n}")
    cut = n - k - 1
    sets = [frozenset(c) for size in range(cut + 1) for c in combinations(range(1, n + 1), size)]
    sets.append(frozenset(range(1, n + 1)))
    return _poset_from_sets(sets)


def _poset_from_sets(sets: Sequence[FrozenSet]) -> Poset:
    """Inclusion order on a family of distinct sets."""
    if len(set(sets)) != len(sets):
        raise ValueError("duplicate sets")
    order = sorted(range(len(sets)), key=lambda i: (len(sets[i]), sorted(map(repr, sets[i]))))
    sets = [sets[i] for i in order]
    rels = [
        (i, j)
        for i in range(len(sets))
        for j in range(len(sets))
        if len(sets[i]) < len(sets[j]) and sets[i] < sets[j]
    ]
    return Poset(len(sets), rels, sets)


# -- subspace and affine lattices ------------------------------------------------------


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _all_subspaces(n: int, q: int) -> List[FrozenSet[Tuple[int, ...]]]:
    """Every linear subspace of F_q^n as a frozenset of vectors, via echelon forms."""
    spaces = []
    for r in range(n + 1):
        for pivots in combinations(range(n), r):
            free_slots = [
                (i, j)
                for i in range(r)
                for j in range(n)
                if j > pivots[i] and j not in pivots
            ]
            for values in product(range(q), repeat=len(free_slots)):
                rows = [[0] * n for _ in range(r)]
                for i in range(r):
                    rows[i][pivots[i]] = 1
                for (i, j), v in zip(free_slots, values):
                    rows[i][j] = v
                span = set()
                for coeffs in product(range(q), repeat=r):
                    vec = tuple(
                        sum(c * rows[i][j] for i, c in enumerate(coeffs)) % q
                        for j in range(n)
                    )
                    span.add(vec)
                spaces.append(frozenset(span))
    return spaces


def subspace_lattice(n: int, q: int) -> Poset:
    """Linear subspaces of F_q^n under inclusion, for prime q at desk scale."""
    if not _is_prime(q):
        raise ValueError(f"field order must be prime: {q}")
    if q > MAX_SUBSPACE_PRIME or not 1 <= n <= MAX_SUBSPACE_DIM:
        raise ValueError(f"subspace lattice out of desk-scale range: n={n}, q={q}")
    return _poset_from_sets(_all_subspaces(n, q))


def affine_lattice(n: int, q: int) -> Poset:
    """Affine subspaces of F_q^n (all cosets), with the empty set as bottom."""
    if not _is_prime(q):
        raise ValueError(f"field order must be prime: {q}")
    if q > MAX_SUBSPACE_PRIME or not 1 <= n <= MAX_SUBSPACE_DIM:
        raise ValueError(f"affine lattice out of desk-scale range: n={n}, q={q}")
    flats: Set[FrozenSet[Tuple[int, ...]]] = {frozenset()}
    vectors = list(product(range(q), repeat=n))
    for space in _all_subspaces(n, q):
        for v in vectors:
            flats.add(frozenset(tuple((a + b) % q for a, b in zip(v, w)) for w in space))
    return _poset_from_sets(sorted(flats, key=lambda s: (len(s), sorted(s))))


# -- partition lattices -----------------------------------------------------------------


def _set_partitions(items: Tuple[int, ...]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [first]] + part[i + 1 :]
        yield [[first]] + part


def partition_lattice(n: int) -> Poset:
    """Set partitions of {1, ..., n} ordered by refinement."""
    if not 1 <= n <= MAX_PARTITION_GROUND:
        raise ValueError(f"partition lattice out of range: {n}")
    parts = [
        frozenset(frozenset(b) for b in part)
        for part in _set_partitions(tuple(range(1, n + 1)))
    ]
    parts.sort(key=lambda p: (-len(p), sorted(sorted(b) for b in p)))
    index = {p: i for i, p in enumerate(parts)}

    def refines(a, b) -> bool:
        return all(any(block <= big for big in b) for block in a)

    rels = []
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            if len(a) > len(b) and refines(a, b):
                rels.append((i, j))
    labels = [tuple(sorted(tuple(sorted(b)) for b in p)) for p in parts]
    return Poset(len(parts), rels, labels)


# -- rank-3 point-line lattices ------------------------------------------------------------


def linear_space_lattice(num_points: int, lines: Sequence[Iterable[int]]) -> Poset:
    """Rank-3 geometric lattice of a linear space on points 1..num_points.

    Every pair of points must lie on exactly one of the given lines, every
    line must be a proper subset with at least two points, and at least
    two lines are required.
    """
    points = frozenset(range(1, num_points + 1))
    line_sets = [frozenset(l) for l in lines]
    if len(line_sets) < 2:
        raise ValueError("need at least two lines")
    seen: Dict[FrozenSet[int], int] = {}
    for l in line_sets:
        if not l <= points or len(l) < 2 or l == points:
            raise ValueError(f"bad line {sorted(l)}")
    for a, b in combinations(sorted(points), 2):
        hits = [l for l in line_sets if a in l and b in l]
        if len(hits) != 1:
            raise ValueError(f"pair ({a}, {b}) lies on {len(hits)} lines")
    sets: List[FrozenSet[int]] = [frozenset()]
    sets += [frozenset({p}) for p in sorted(points)]
    sets += line_sets
    sets.append(points)
    return _poset_from_sets(sets)


def fano_lattice() -> Poset:
    """The seven-point projective plane as a rank-3 lattice."""
    return linear_space_lattice(7, FANO_BLOCKS)


FANO_BLOCKS: Tuple[FrozenSet[int], ...] = tuple(
    frozenset(b)
    for b in [
        (1, 2, 3),
        (1, 4, 5),
        (1, 6, 7),
        (2, 4, 6),
        (2, 5, 7),
        (3, 4, 7),
        (3, 5, 6),
    ]
)


# -- designs ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class Design:
    """An s-(n, k, lam) design: blocks of size k covering every s-set lam times."""

    points: Tuple[int, ...]
    blocks: Tuple[FrozenSet[int], ...]
    s: int
    k: int
    lam: int

    def validate(self) -> None:
        pts = set(self.points)
        if len(pts) != len(self.points):
            raise ValueError("repeated points")
        for b in self.blocks:
            if not b <= pts or len(b) != self.k:
                raise ValueError(f"bad block {sorted(b)}")
        for sub in combinations(sorted(pts), self.s):
            cover = sum(1 for b in self.blocks if set(sub) <= b)
            if cover != self.lam:
                raise ValueError(
                    f"{sub} lies in {cover} blocks, expected {self.lam}"
                )


def fano_design() -> Design:
    d = Design(tuple(range(1, 8)), FANO_BLOCKS, s=2, k=3, lam=1)
    d.validate()
    return d


def uniform_design(n: int, k: int) -> Design:
    """The design whose blocks are all k-subsets of an n-set."""
    blocks = tuple(frozenset(c) for c in combinations(range(1, n + 1), k))
    d = Design(tuple(range(1, n + 1)), blocks, s=k - 1, k=k, lam=n - k + 1)
    d.validate()
    return d


def design_poset(design: Design) -> Poset:
    """Sets of size below s, the blocks, and the whole point set, by inclusion.

    This is the paving-style collapse of the truncated Boolean algebra on
    the points: the blocks form the level at height s, so for Steiner
    systems the result is the paving lattice whose co-atoms are the
    blocks. Keeping the size-s sets as well would break the root-location
    guarantee (the seven-point Steiner triple system already yields a
    chain polynomial with a zero near -1.4 in that variant).
    """
    design.validate()
    pts = frozenset(design.points)
    sets: Set[FrozenSet[int]] = {pts}
    for size in range(design.s):
        for c in combinations(sorted(pts), size):
            sets.add(frozenset(c))
    sets.update(design.blocks)
    return _poset_from_sets(sorted(sets, key=lambda x: (len(x), sorted(x))))


# -- the paving construction -----------------------------------------------------------------


def paving_construction(p: Poset, h_elements: Iterable[int], y: int, d: int) -> Poset:
    """Collapse the down-set of y to quasi-rank d+1 through the antichain H.

    Keeps the elements below y of quasi-rank at most d-1, adjoins H as the
    level at quasi-rank d and y on top. The four admissibility conditions
    are checked and reported by clause number.
    """
    if p.least is None:
        raise ValueError("host must have a least element")
    h_set = set(h_elements)
    n = p.rho(y)
    if not 1 <= d < n:
        raise ValueError(f"need 1 <= d < rho(y), got d={d}, rho(y)={n}")
    for h in h_set:
        if not p.leq(h, y):
            raise ValueError(f"H must lie below y: element {h}")
    if y in h_set:
        raise ValueError("condition (i) fails: y belongs to H")
    for h in h_set:
        if p.rho(h) < d:
            raise ValueError(f"condition (ii) fails: rho({h}) < {d}")
    for a in h_set:
        for b in h_set:
            if a != b and p.leq(a, b):
                raise ValueError(f"condition (iii) fails: {a} < {b} in H")
    down_y = p.down_mask(y)
    for x in _bits(down_y):
        if x != y and p.rho(x) <= d - 1:
            if not any(p.leq(x, h) for h in h_set):
                raise ValueError(f"condition (iv) fails: element {x} below no H member")
    keep = [x for x in _bits(down_y) if x != y and p.rho(x) <= d - 1]
    keep += sorted(h_set)
    keep.append(y)
    return p.induced(keep)


@dataclass(frozen=True)
class DPartition:
    """A block family in which every d-subset of the union lies in one block."""

    ground: Tuple[int, ...]
    blocks: Tuple[FrozenSet[int], ...]
    d: int

    def validate(self) -> None:
        if len(self.blocks) < 2:
            raise ValueError("a d-partition needs at least two blocks")
        union: Set[int] = set()
        for b in self.blocks:
            if len(b) < self.d:
                raise ValueError(f"block {sorted(b)} smaller than d={self.d}")
            union |= b
        if not union <= set(self.ground):
            raise ValueError("blocks leave the ground set")
        for sub in combinations(sorted(union), self.d):
            cover = sum(1 for b in self.blocks if set(sub) <= b)
            if cover != 1:
                raise ValueError(f"{sub} lies in {cover} blocks, expected 1")


def paving_lattice_from_dpartition(dp: DPartition) -> Poset:
    """Apply the paving construction to the Boolean algebra on the ground set."""
    dp.validate()
    ground = sorted(set(dp.ground))
    n = len(ground)
    host = boolean_lattice(n)
    pos = {g: i for i, g in enumerate(ground)}

    def set_to_index(s: FrozenSet[int]) -> int:
        mask = 0
        for g in s:
            mask |= 1 << pos[g]
        return mask

    h_idx = [set_to_index(b) for b in dp.blocks]
    out = paving_construction(host, h_idx, (1 << n) - 1, dp.d)
    if not is_geometric(out):
        raise AssertionError("paving lattice failed the geometric predicate")
    return out


def vamos_dpartition() -> DPartition:
    """The 3-partition of {1..8} whose paving lattice is the Vamos lattice."""
    quads = [
        frozenset({1, 2, 3, 4}),
        frozenset({1, 4, 5, 6}),
        frozenset({2, 3, 5, 6}),
        frozenset({1, 4, 7, 8}),
        frozenset({2, 3, 7, 8}),
    ]
    triples = [
        frozenset(c)
        for c in combinations(range(1, 9), 3)
        if not any(frozenset(c) <= q for q in quads)
    ]
    dp = DPartition(tuple(range(1, 9)), tuple(quads + triples), d=3)
    dp.validate()
    return dp


def vamos_lattice() -> Poset:
    return paving_lattice_from_dpartition(vamos_dpartition())


def generalized_dpartition_check(l: Poset, h_elements: Iterable[int], d: int) -> bool:
    """Check the antichain conditions for the paving construction on a lattice.

    Every rank-d element must lie below exactly one member of H; the host
    must be geometric.
    """
    if not is_geometric(l):
        raise ValueError("host is not a geometric lattice")
    h_set = set(h_elements)
    top = l.greatest
    if top in h_set:
        return False
    if any(l.rho(h) < d for h in h_set):
        return False
    for a in h_set:
        for b in h_set:
            if a != b and l.leq(a, b):
                return False
    for x in range(l.n):
        if l.rho(x) == d:
            covers = sum(1 for h in h_set if l.leq(x, h))
            if covers != 1:
                return False
    return True


def l_paving(l: Poset, h_elements: Iterable[int], d: int) -> Poset:
    """Paving construction over a geometric host; the result must be geometric."""
    h_list = list(h_elements)
    if not generalized_dpartition_check(l, h_list, d):
        raise ValueError("not a generalized d-partition of the host")
    out = paving_construction(l, h_list, l.greatest, d)
    if not is_geometric(out):
        raise AssertionError("paving construction left the geometric class")
    return out


# -- group-labeled Whitney rows ----------------------------------------------------------------


@dataclass(frozen=True)
class WhitneyMatrix:
    """Second-kind Whitney numbers W(n, i) for a group of order m.

    Satisfies W(n, 0) = W(n, n) = 1 and
    W(n, i) = W(n-1, i-1) + (1 + m*i) * W(n-1, i).
    """

    m: int
    N: int
    table: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        for n, row in enumerate(self.table):
            if len(row) != n + 1 or row[0] != 1 or row[-1] != 1:
                raise ValueError(f"row {n} violates the boundary conditions")

    def entry(self, n: int, i: int) -> int:
        if 0 <= i <= n <= self.N:
            return self.table[n][i]
        return 0


def dowling_whitney(m: int, N: int) -> WhitneyMatrix:
    if m < 1 or N < 0:
        raise ValueError("need m >= 1 and N >= 0")
    table: List[Tuple[int, ...]] = [(1,)]
    for n in range(1, N + 1):
        prev = table[-1]
        row = []
        for i in range(n + 1):
            left = prev[i - 1] if 1 <= i <= n else 0
            right = prev[i] if i <= n - 1 else 0
            row.append(left + (1 + m * i) * right)
        table.append(tuple(row))
    return WhitneyMatrix(m, N, tuple(table))


def dowling_rows(m: int, N: int) -> RMatrix:
    """Rank rows of the dual group-labeled partition geometry."""
    w = dowling_whitney(m, N)
    return RMatrix(tuple(ExactPoly(w.table[n]) for n in range(N + 1)))


def dowling_step_operator(m: int, row: ExactPoly) -> ExactPoly:
    """Apply t + alpha with alpha(t^i) = (1 + m*i) t^i; one Whitney recursion step."""
    shifted = row.shift(1)
    scaled = ExactPoly((1 + m * i) * c for i, c in enumerate(row.coeffs))
    return shifted + scaled


# -- modular cuts and single-element extensions ---------------------------------------------------


@dataclass(frozen=True)
class ModularCut:
    """An up-closed subset of a geometric lattice closed under modular-pair meets."""

    host: Poset
    members: FrozenSet[int]


def modular_cut_validate(mc: ModularCut) -> bool:
    l = mc.host
    if not is_geometric(l):
        raise ValueError("host is not a geometric lattice")
    mem = mc.members
    if any(not 0 <= x < l.n for x in mem):
        raise ValueError("cut member out of range")
    for x in mem:
        for y in _bits(l.up_mask(x)):
            if y not in mem:
                return False
    for x in mem:
        for y in mem:
            if x < y:
                j, w = l.join(x, y), l.meet(x, y)
                if l.rho(x) + l.rho(y) == l.rho(j) + l.rho(w) and w not in mem:
                    return False
    return True


def principal_cut(l: Poset, x: int) -> ModularCut:
    """The up-set of a single element; always a valid modular cut."""
    return ModularCut(l, frozenset(_bits(l.up_mask(x))))


def all_modular_cuts(l: Poset) -> List[ModularCut]:
    """Every modular cut, by filtering the up-closed subsets; exponential, keep small."""
    if l.n > 16:
        raise ValueError("modular cut enumeration is capped at 16 elements")
    cuts = []
    for mask in range(1 << l.n):
        members = frozenset(x for x in range(l.n) if mask >> x & 1)
        if any(l.up_mask(x) & ~mask for x in members):
            continue
        mc = ModularCut(l, members)
        if modular_cut_validate(mc):
            cuts.append(mc)
    return cuts


def _atom_names(l: Poset) -> Dict[int, object]:
    """Display names for atoms: unwrap singleton frozenset labels, else indices."""
    names: Dict[int, object] = {}
    for a in l.atoms():
        lab = l.label_of(a)
        if isinstance(lab, frozenset) and len(lab) == 1:
            names[a] = next(iter(lab))
        else:
            names[a] = a
    if len(set(map(repr, names.values()))) != len(names):
        names = {a: a for a in l.atoms()}
    return names


def element_with_atoms(l: Poset, atom_names: Iterable) -> int:
    """Index of the element whose atom set carries exactly the given names."""
    want = frozenset(atom_names)
    names = _atom_names(l)
    for x in range(l.n):
        mine = frozenset(names[a] for a in l.atoms() if l.leq(a, x))
        if mine == want and (x != l.least or not want):
            return x
    raise ValueError(f"no element with atom set {sorted(map(repr, want))}")


def single_element_extension(l: Poset, mc: ModularCut, e) -> Poset:
    """Extend a geometric lattice by one new atom along a modular cut.

    The flats of the extension, written as atom-name sets, are the flats
    outside the cut, every cut flat with e added, and the flats X outside
    the cut with e added when no cut flat of rank rho(X) + 1 sits above
    X. The result is checked to be geometric.
    """
    if mc.host is not l:
        raise ValueError("modular cut belongs to a different host")
    if not modular_cut_validate(mc):
        raise ValueError("invalid modular cut")
    names = _atom_names(l)
    if any(repr(e) == repr(v) for v in names.values()):
        raise ValueError(f"new atom name {e!r} collides with an existing atom")
    atom_list = l.atoms()

    def atom_set(x: int) -> FrozenSet:
        return frozenset(names[a] for a in atom_list if l.leq(a, x))

    mem = mc.members
    flats: List[FrozenSet] = []
    for x in range(l.n):
        if x not in mem:
            flats.append(atom_set(x))
    for x in mem:
        flats.append(atom_set(x) | {e})
    for x in range(l.n):
        if x in mem:
            continue
        r = l.rho(x)
        blocked = any(
            l.rho(y) == r + 1 and l.leq(x, y) for y in mem
        )
        if not blocked:
            flats.append(atom_set(x) | {e})
    out = _poset_from_sets(sorted(set(flats), key=lambda s: (len(s), sorted(map(repr, s)))))
    if not is_geometric(out):
        raise AssertionError("single-element extension is not geometric")
    return out


def truncated_extension_coatoms(E: Iterable, X: Iterable, e) -> Set[FrozenSet]:
    """Co-atom family of the principal extension of the Boolean algebra on E.

    These are the hyperplanes that the one-step truncation removes when
    passing from the extension to the extension of the truncated Boolean
    algebra, expressed through the product decomposition: A + (E - X)
    with A a co-atom of the truncated Boolean algebra on X + e, and
    (X + e) + B with B a co-atom of the Boolean algebra on E - X.
    """
    E = frozenset(E)
    X = frozenset(X)
    if not X or not X <= E:
        raise ValueError("X must be a nonempty subset of E")
    if e in E:
        raise ValueError("e must be new")
    xe = X | {e}
    rest = E - X
    out: Set[FrozenSet] = set()
    for a in combinations(sorted(xe, key=repr), len(xe) - 2):
        out.add(frozenset(a) | rest)
    if rest:
        for b in combinations(sorted(rest, key=repr), len(rest) - 1):
            out.add(xe | frozenset(b))
    return out


# -- instance DSL -------------------------------------------------------------------------------------


def build_instance(dsl: str):
    """Build a poset or rank-row matrix from a family DSL string.

    Forms: "boolean:4", "trunc-boolean:5:1", "subspace:3:2", "affine:2:3",
    "partition:5", "chain:4", "vamos", "fano-design", "fano-lattice",
    "dowling-rows:m=2:N=6", "paving:file=blocks.txt",
    "see:boolean:4:cut=1,2" (cut=none for the empty cut, atoms by name).
    """
    parts = dsl.split(":")
    head = parts[0]
    if head == "boolean":
        return boolean_lattice(int(parts[1]))
    if head == "trunc-boolean":
        return truncated_boolean(int(parts[1]), int(parts[2]))
    if head == "subspace":
        return subspace_lattice(int(parts[1]), int(parts[2]))
    if head == "affine":
        return affine_lattice(int(parts[1]), int(parts[2]))
    if head == "partition":
        return partition_lattice(int(parts[1]))
    if head == "chain":
        from .posets import chain_poset

        return chain_poset(int(parts[1]))
    if head == "vamos":
        return vamos_lattice()
    if head == "fano-design":
        return design_poset(fano_design())
    if head == "fano-lattice":
        return fano_lattice()
    if head == "dowling-rows":
        kv = dict(item.split("=") for item in parts[1:])
        return dowling_rows(int(kv["m"]), int(kv["N"]))
    if head == "paving":
        kv = dict(item.split("=") for item in parts[1:])
        return paving_lattice_from_dpartition(read_dpartition(kv["file"]))
    if head == "see":
        host_spec = ":".join(p for p in parts[1:] if not p.startswith("cut="))
        cut_spec = next(p for p in parts[1:] if p.startswith("cut="))[len("cut=") :]
        host = build_instance(host_spec)
        if cut_spec == "none":
            mc = ModularCut(host, frozenset())
        else:
            atom_names = [int(tok) for tok in cut_spec.split(",")]
            mc = principal_cut(host, element_with_atoms(host, atom_names))
        names = set(map(repr, _atom_names(host).values()))
        e = 0
        while repr(e) in names:
            e += 1
        return single_element_extension(host, mc, e)
    raise ValueError(f"unknown family DSL: {dsl!r}")


def dpartition_to_text(dp: DPartition) -> str:
    lines = [f"dpartition {dp.d}", "ground " + " ".join(str(g) for g in dp.ground)]
    lines += ["block " + " ".join(str(x) for x in sorted(b)) for b in dp.blocks]
    return "\n".join(lines) + "\n"


def dpartition_from_text(text: str) -> DPartition:
    d = None
    ground: List[int] = []
    blocks: List[FrozenSet[int]] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if toks[0] == "dpartition":
            d = int(toks[1])
        elif toks[0] == "ground":
            ground = [int(t) for t in toks[1:]]
        elif toks[0] == "block":
            blocks.append(frozenset(int(t) for t in toks[1:]))
        else:
            raise ValueError(f"unknown directive {toks[0]!r}")
    if d is None or not ground or not blocks:
        raise ValueError("incomplete d-partition file")
    dp = DPartition(tuple(ground), tuple(blocks), d)
    dp.validate()
    return dp


def read_dpartition(path: str) -> DPartition:
    with open(path, "r", encoding="utf-8") as fh:
        return dpartition_from_text(fh.read())
