"""Batch verification suites over generated lattice corpora.

Each suite turns a family of instances into CheckReports with exact
verdicts: real-rootedness, root location in [-1, 0], interlacing,
resolvability, isomorphism, and polynomial identities. Randomized
corpora are seeded and the seed is recorded in every report.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .families import (
    boolean_lattice,
    build_instance,
    design_poset,
    dowling_rows,
    dowling_step_operator,
    fano_design,
    linear_space_lattice,
    truncated_boolean,
    uniform_design,
)
from .permstats import eulerian, q_eulerian
from .polynomial import (
    ExactPoly,
    diamond_product,
    h_from_f,
    interlaces,
    is_real_rooted,
    isolate_real_roots,
    roots_in_interval,
)
from .posets import Poset, chain_poset, is_isomorphic
from .reports import CheckReport
from .tn import (
    RMatrix,
    chain_polys_from_rmatrix,
    is_geometric,
    is_quasi_rank_uniform,
    ordinal_sum_rows,
    rank_matrix,
    resolve,
)

SUITE_NAMES = (
    "rank3",
    "paving",
    "dowling",
    "designs",
    "triangular",
    "ordinal-sum",
    "see",
    "diamond",
    "counterexample",
)


class CheckFailure(Exception):
    """Raised by a suite check; carries the reproducing witness."""

    def __init__(self, witness: dict):
        super().__init__(str(witness))
        self.witness = witness


def _run_checks(
    suite: str, tasks: Sequence[Tuple[str, Callable[[], dict]]], jobs: int = 1
) -> List[CheckReport]:
    def run_one(item) -> CheckReport:
        instance, thunk = item
        start = time.monotonic()
        try:
            witness = thunk() or {}
            verdict = "pass"
        except CheckFailure as exc:
            witness = exc.witness
            verdict = "fail"
        except Exception as exc:  # pragma: no cover - defensive
            witness = {"exception": f"{type(exc).__name__}: {exc}"}
            verdict = "error"
        ms = int((time.monotonic() - start) * 1000)
        return CheckReport(suite, instance, verdict, witness, ms)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_one, tasks))
    else:
        reports = [run_one(item) for item in tasks]
    reports.sort(key=lambda r: r.instance)
    return reports


# -- elementary checks ------------------------------------------------------------


def _require(cond: bool, **witness) -> None:
    if not cond:
        raise CheckFailure(witness)


def _check_unit_interval_roots(c: ExactPoly, tag: str) -> None:
    """Exact verdict: real-rooted with every root in [-1, 0]."""
    if not is_real_rooted(c):
        raise CheckFailure({"reason": f"{tag} is not real-rooted", "poly": c.to_string()})
    if not roots_in_interval(c, -1, 0):
        iso = isolate_real_roots(c)
        raise CheckFailure(
            {
                "reason": f"{tag} has a root outside [-1, 0]",
                "poly": c.to_string(),
                "root_intervals": [[str(a), str(b)] for a, b in iso.intervals],
            }
        )


def brute_force_oracle(p: Poset) -> Tuple[int, ...]:
    """Chain counts by walking every totally ordered subset explicitly.

    Intentionally naive and independent of the dynamic program: each
    chain is built element by element in increasing order. Guarded to 20
    elements.
    """
    if p.n > 20:
        raise ValueError("brute-force oracle is capped at 20 elements")
    counts = [1] + [0] * p.n
    up_lists = [tuple(y for y in p.up_set(x) if y != x) for x in range(p.n)]

    def extend(last: int, size: int) -> None:
        counts[size] += 1
        for nxt in up_lists[last]:
            extend(nxt, size + 1)

    for start in range(p.n):
        extend(start, 1)
    while counts and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def rank3_formula(l: Poset) -> ExactPoly:
    """Closed-form chain polynomial of a rank-3 geometric lattice.

    With m1 atoms, m2 co-atoms and e atom/co-atom cover pairs the chain
    polynomial is (1 + (m1+m2) t + e t^2) (1+t)^2.
    """
    if l.quasi_rank != 3 or l.least is None or l.greatest is None:
        raise ValueError("expected a bounded rank-3 lattice")
    m1 = sum(1 for x in range(l.n) if l.rho(x) == 1)
    m2 = sum(1 for x in range(l.n) if l.rho(x) == 2)
    e = sum(1 for x, y in l.covers if l.rho(x) == 1 and l.rho(y) == 2)
    quad = ExactPoly((1, m1 + m2, e))
    return quad * ExactPoly((1, 1)) ** 2


# -- random corpora -----------------------------------------------------------------


def random_rank3_geometric(rng: random.Random) -> Poset:
    """Random linear space on 4..9 points; every pair on exactly one line."""
    n = rng.randint(4, 9)
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    covered = set()
    lines = []
    for a, b in pairs:
        if (a, b) in covered:
            continue
        line = {a, b}
        extras = list(range(1, n + 1))
        rng.shuffle(extras)
        for c in extras:
            if c in line or len(line) >= n - 1:
                continue
            if rng.random() < 0.45 and all(
                tuple(sorted((c, x))) not in covered for x in line
            ):
                line.add(c)
        lines.append(frozenset(line))
        for x, y in combinations(sorted(line), 2):
            covered.add((x, y))
    return linear_space_lattice(n, lines)


def random_bounded_poset(rng: random.Random, max_mid: int = 5) -> Poset:
    """Random bounded poset: a staircase of up to max_mid middle elements."""
    mid = rng.randint(0, max_mid)
    n = mid + 2
    rels = []
    for i in range(1, mid + 1):
        rels.append((0, i))
        rels.append((i, n - 1))
    for i in range(1, mid + 1):
        for j in range(i + 1, mid + 1):
            if rng.random() < 0.35:
                rels.append((i, j))
    if mid == 0:
        rels.append((0, 1))
    return Poset(n, rels)


# -- suite builders -------------------------------------------------------------------

Task = Tuple[str, Callable[[], dict]]


def _rank3_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    rng = random.Random(seed)
    count = 200
    posets = []
    if instances:
        for dsl in instances:
            posets.append((dsl, build_instance(dsl)))
    else:
        for i in range(count):
            posets.append((f"rank3-random:seed={seed}:i={i:03d}", random_rank3_geometric(rng)))

    def make(l: Poset, tag: str) -> Callable[[], dict]:
        def check() -> dict:
            _require(is_geometric(l), reason="not geometric", instance=tag)
            c = l.chain_polynomial()
            formula = rank3_formula(l)
            _require(
                c == formula,
                reason="closed form disagrees with chain count",
                chain=c.to_string(),
                formula=formula.to_string(),
            )
            if not is_real_rooted(c):
                raise CheckFailure({"reason": "not real-rooted", "poly": c.to_string()})
            return {"seed": seed, "chain": c.to_string()}

        return check

    return [(tag, make(l, tag)) for tag, l in posets]


def _paving_default_instances() -> List[str]:
    out = ["vamos", "fano-design"]
    for n in range(2, 8):
        for k in range(0, n - 1):
            out.append(f"trunc-boolean:{n}:{k}")
    return out


def _rank_selection_sweep(p: Poset, limit: int) -> int:
    """Check [-1,0]-rootedness of every nonempty rank selection; returns count."""
    top = p.quasi_rank
    checked = 0
    if p.n > limit:
        return 0
    for mask in range(1, 1 << (top + 1)):
        ranks = {r for r in range(top + 1) if mask >> r & 1}
        sub = p.rank_selected(ranks)
        if sub.n == 0:
            continue
        c = sub.chain_polynomial()
        _check_unit_interval_roots(c, f"rank selection {sorted(ranks)}")
        checked += 1
    return checked


def _paving_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    dsls = list(instances) if instances else _paving_default_instances()

    def make(dsl: str) -> Callable[[], dict]:
        def check() -> dict:
            p = build_instance(dsl)
            c = p.chain_polynomial()
            _check_unit_interval_roots(c, "chain polynomial")
            selections = 0
            if p.n <= 128 and p.quasi_rank <= 6:
                selections = _rank_selection_sweep(p, 128)
            return {"chain": c.to_string(), "rank_selections_checked": selections}

        return check

    return [(dsl, make(dsl)) for dsl in dsls]


def _dowling_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    dsls = list(instances) if instances else [f"dowling-rows:m={m}:N=6" for m in (1, 2, 3)]

    def make(dsl: str) -> Callable[[], dict]:
        def check() -> dict:
            rows = build_instance(dsl)
            if not isinstance(rows, RMatrix):
                raise CheckFailure({"reason": "instance is not a row matrix"})
            kv = dict(item.split("=") for item in dsl.split(":")[1:])
            m = int(kv["m"])
            for n in range(1, rows.order + 1):
                stepped = dowling_step_operator(m, rows.rows[n - 1])
                _require(
                    stepped == rows.rows[n],
                    reason="operator identity fails",
                    row=n,
                    expected=rows.rows[n].to_string(),
                    got=stepped.to_string(),
                )
            outcome = resolve(rows)
            _require(outcome.ok, reason="not resolvable", detail=outcome.describe())
            _require(outcome.witness.verify(rows), reason="witness failed verification")
            ps = chain_polys_from_rmatrix(rows)
            for n, pn in enumerate(ps):
                _check_unit_interval_roots(pn, f"p_{n}")
            for n in range(len(ps) - 1):
                _require(
                    interlaces(ps[n], ps[n + 1]),
                    reason="consecutive chain polynomials fail to interlace",
                    n=n,
                )
            return {"rows": rows.order, "lambda_rows": len(outcome.witness.lambdas)}

        return check

    return [(dsl, make(dsl)) for dsl in dsls]


def _designs_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    named: List[Tuple[str, Callable[[], Poset]]] = []
    if instances:
        named = [(dsl, (lambda s=dsl: build_instance(s))) for dsl in instances]
    else:
        named = [("fano-design", lambda: design_poset(fano_design()))]
        for n, k in ((4, 2), (5, 2), (5, 3), (6, 3), (6, 4)):
            named.append(
                (f"uniform-design:{n}:{k}", lambda n=n, k=k: design_poset(uniform_design(n, k)))
            )

    def make(builder: Callable[[], Poset]) -> Callable[[], dict]:
        def check() -> dict:
            p = builder()
            c = p.chain_polynomial()
            _check_unit_interval_roots(c, "chain polynomial")
            selections = _rank_selection_sweep(p, 128)
            return {"chain": c.to_string(), "rank_selections_checked": selections}

        return check

    return [(tag, make(builder)) for tag, builder in named]


def _triangular_default_instances() -> List[str]:
    out = [f"boolean:{n}" for n in range(1, 7)]
    out += ["trunc-boolean:4:1", "trunc-boolean:5:1", "trunc-boolean:5:2", "trunc-boolean:6:2"]
    out += ["subspace:2:2", "subspace:3:2", "subspace:2:3", "affine:2:3"]
    out += ["partition:3", "partition:4", "partition:5"]
    return out


def _rows_for_poset(p: Poset) -> Tuple[RMatrix, str]:
    """Rank rows of p, falling back to the dual when only it is uniform."""
    ok, rows = is_quasi_rank_uniform(p)
    if ok:
        return rows, "primal"
    ok, rows = is_quasi_rank_uniform(p.dual())
    if ok:
        return rows, "dual"
    raise CheckFailure({"reason": "neither the poset nor its dual is rank uniform"})


def _triangular_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    dsls = list(instances) if instances else _triangular_default_instances()

    def make(dsl: str) -> Callable[[], dict]:
        def check() -> dict:
            p = build_instance(dsl)
            rows, side = _rows_for_poset(p)
            outcome = resolve(rows)
            _require(outcome.ok, reason="not resolvable", detail=outcome.describe(), side=side)
            _require(outcome.witness.verify(rows), reason="witness failed verification")
            ps = chain_polys_from_rmatrix(rows)
            for n, pn in enumerate(ps):
                _check_unit_interval_roots(pn, f"p_{n}")
            for n in range(len(ps) - 1):
                _require(
                    interlaces(ps[n], ps[n + 1]),
                    reason="consecutive chain polynomials fail to interlace",
                    n=n,
                )
            c = p.chain_polynomial()
            _check_unit_interval_roots(c, "chain polynomial")
            return {"side": side, "order": rows.order, "chain": c.to_string()}

        return check

    return [(dsl, make(dsl)) for dsl in dsls]


_ROW_POOL: List[Tuple[str, Callable[[], RMatrix]]] = [
    ("boolean-rows:3", lambda: rank_matrix(boolean_lattice(3))),
    ("boolean-rows:4", lambda: rank_matrix(boolean_lattice(4))),
    ("chain-rows:4", lambda: rank_matrix(chain_poset(4))),
    ("chain-rows:5", lambda: rank_matrix(chain_poset(5))),
    ("trunc-rows:4:1", lambda: rank_matrix(truncated_boolean(4, 1))),
    ("trunc-rows:5:2", lambda: rank_matrix(truncated_boolean(5, 2))),
    ("dowling-rows:m=1:N=4", lambda: dowling_rows(1, 4)),
    ("dowling-rows:m=2:N=4", lambda: dowling_rows(2, 4)),
    ("dowling-rows:m=3:N=3", lambda: dowling_rows(3, 3)),
]

_BOUNDED_POOL: List[Tuple[str, Callable[[], Poset]]] = [
    ("boolean:2", lambda: boolean_lattice(2)),
    ("boolean:3", lambda: boolean_lattice(3)),
    ("chain:3", lambda: chain_poset(3)),
    ("chain:4", lambda: chain_poset(4)),
    ("trunc-boolean:4:1", lambda: truncated_boolean(4, 1)),
    ("trunc-boolean:5:2", lambda: truncated_boolean(5, 2)),
]


def _ordinal_sum_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    rng = random.Random(seed)
    tasks: List[Task] = []
    pair_count = 24
    for i in range(pair_count):
        left_tag, left_make = _ROW_POOL[rng.randrange(len(_ROW_POOL))]
        right_tag, right_make = _ROW_POOL[rng.randrange(len(_ROW_POOL))]
        tag = f"stacked-rows:seed={seed}:i={i:02d}:{left_tag}+{right_tag}"

        def check(left_make=left_make, right_make=right_make) -> dict:
            stacked = ordinal_sum_rows(left_make(), right_make())
            outcome = resolve(stacked)
            _require(outcome.ok, reason="stacked rows not resolvable", detail=outcome.describe())
            _require(outcome.witness.verify(stacked), reason="witness failed verification")
            return {"order": stacked.order}

        tasks.append((tag, check))

    for i in range(8):
        left_tag, left_make = _BOUNDED_POOL[rng.randrange(len(_BOUNDED_POOL))]
        right_tag, right_make = _BOUNDED_POOL[rng.randrange(len(_BOUNDED_POOL))]
        tag = f"stacked-posets:seed={seed}:i={i:02d}:{left_tag}+{right_tag}"

        def check(left_make=left_make, right_make=right_make) -> dict:
            lp, rp = left_make(), right_make()
            summed = lp.ordinal_sum(rp)
            rows = rank_matrix(summed)
            predicted = ordinal_sum_rows(rank_matrix(lp), rank_matrix(rp))
            _require(
                rows.rows == predicted.rows,
                reason="stacked rank rows disagree with the construction",
                got=[r.to_string() for r in rows.rows],
                predicted=[r.to_string() for r in predicted.rows],
            )
            outcome = resolve(rows)
            _require(outcome.ok, reason="not resolvable", detail=outcome.describe())
            return {"order": rows.order}

        tasks.append((tag, check))
    return tasks


def _see_default_instances() -> List[str]:
    out = []
    for n in range(3, 6):
        for size in range(0, n + 1):
            for x in combinations(range(1, n + 1), size):
                cut = ",".join(map(str, x)) if x else "none"
                out.append(f"see:boolean:{n}:cut={cut}")
        # principal cuts of the single truncation: elements up to size n-2, plus the top
        for size in range(0, n - 1):
            for x in combinations(range(1, n + 1), size):
                cut = ",".join(map(str, x)) if x else "none"
                out.append(f"see:trunc-boolean:{n}:1:cut={cut}")
        out.append(f"see:trunc-boolean:{n}:1:cut={','.join(map(str, range(1, n + 1)))}")
    return out


def _see_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    dsls = list(instances) if instances else _see_default_instances()

    def make(dsl: str) -> Callable[[], dict]:
        def check() -> dict:
            ext = build_instance(dsl)  # geometricity asserted by the constructor
            c = ext.chain_polynomial()
            _check_unit_interval_roots(c, "chain polynomial")
            witness = {"chain": c.to_string(), "elements": ext.n}
            parts = dsl.split(":")
            if not parts[-1].startswith("cut="):
                return witness
            cut = parts[-1][len("cut=") :]
            if parts[1] == "boolean" and cut != "none":
                ground = int(parts[2])
                members = [int(tok) for tok in cut.split(",")]
                if 2 <= len(members) < ground:
                    product = truncated_boolean(len(members) + 1, 1).direct_product(
                        boolean_lattice(ground - len(members))
                    )
                    _require(
                        is_isomorphic(ext, product),
                        reason="extension does not match the product decomposition",
                        elements=ext.n,
                        product_elements=product.n,
                    )
                    witness["product_isomorphic"] = True
            return witness

        return check

    return [(dsl, make(dsl)) for dsl in dsls]


def _diamond_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    rng = random.Random(seed)
    tasks: List[Task] = []
    for i in range(50):
        tag = f"product-pair:seed={seed}:i={i:02d}"

        def check(i=i) -> dict:
            local = random.Random(seed * 1000003 + i)
            lp = random_bounded_poset(local)
            rp = random_bounded_poset(local)
            for q in (lp, rp):
                _require(
                    q.chain_polynomial().shift(1) == ExactPoly((1, 2, 1)) * q.p_polynomial(),
                    reason="t * chain polynomial != (1+t)^2 * p polynomial",
                )
            product = lp.direct_product(rp)
            lhs = product.p_polynomial()
            rhs = diamond_product(lp.p_polynomial(), rp.p_polynomial())
            _require(
                lhs == rhs,
                reason="product p polynomial disagrees with the diamond product",
                lhs=lhs.to_string(),
                rhs=rhs.to_string(),
            )
            return {"left": lp.n, "right": rp.n}

        tasks.append((tag, check))
    return tasks


def counterexample_search(n: int, q_max: int = 64) -> dict:
    """Scan q = 1, 2, ... for the first failure of descent-polynomial interlacing.

    Also checks the q = 1 specialization and, for n <= 3, that the
    subspace-lattice h-polynomial over F_q matches the inversion-weighted
    descent polynomial for q in {2, 3}.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    base = eulerian(n)
    if q_eulerian(n, 1) != base:
        raise CheckFailure({"reason": "q = 1 specialization failed"})
    found = None
    for q in range(1, q_max + 1):
        weighted = q_eulerian(n, q)
        if not interlaces(base, weighted):
            found = q
            break
    witness: dict = {
        "n": n,
        "eulerian": base.to_string(),
        "first_failing_q": found,
        "q_max": q_max,
    }
    if found is not None:
        weighted = q_eulerian(n, found)
        iso = isolate_real_roots(weighted)
        witness["failing_poly"] = weighted.to_string()
        witness["failing_roots"] = [[str(a), str(b)] for a, b in iso.intervals]
    if n <= 3:
        from .families import subspace_lattice

        h_checks = {}
        for q in (2, 3):
            lat = subspace_lattice(n, q)
            c = lat.proper_part().chain_polynomial()
            h = h_from_f(c, n - 1)
            h_checks[q] = h == q_eulerian(n, q)
            if not h_checks[q]:
                raise CheckFailure(
                    {
                        "reason": "subspace h-polynomial mismatch",
                        "q": q,
                        "h": h.to_string(),
                        "expected": q_eulerian(n, q).to_string(),
                    }
                )
        witness["h_polynomial_checks"] = h_checks
    return witness


def _counterexample_tasks(instances: Optional[Sequence[str]], seed: int) -> List[Task]:
    dsls = list(instances) if instances else ["counterexample:n=3:qmax=64", "counterexample:n=4:qmax=64"]

    def make(dsl: str) -> Callable[[], dict]:
        def check() -> dict:
            kv = dict(item.split("=") for item in dsl.split(":")[1:])
            witness = counterexample_search(int(kv["n"]), int(kv["qmax"]))
            _require(
                witness["first_failing_q"] is not None,
                reason="no interlacing failure found below the search cap",
                **witness,
            )
            return witness

        return check

    return [(dsl, make(dsl)) for dsl in dsls]


_SUITE_BUILDERS: Dict[str, Callable[[Optional[Sequence[str]], int], List[Task]]] = {
    "rank3": _rank3_tasks,
    "paving": _paving_tasks,
    "dowling": _dowling_tasks,
    "designs": _designs_tasks,
    "triangular": _triangular_tasks,
    "ordinal-sum": _ordinal_sum_tasks,
    "see": _see_tasks,
    "diamond": _diamond_tasks,
    "counterexample": _counterexample_tasks,
}


def suite_run(
    name: str,
    instances: Optional[Sequence[str]] = None,
    seed: int = 0,
    jobs: int = 1,
) -> List[CheckReport]:
    """Run one named suite; reports come back sorted by instance string."""
    if name not in _SUITE_BUILDERS:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    tasks = _SUITE_BUILDERS[name](instances, seed)
    return _run_checks(name, tasks, jobs)
