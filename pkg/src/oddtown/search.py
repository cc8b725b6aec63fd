"""Exact and heuristic minimisation of pair-count objectives over set families.

The exact engine enumerates families as increasing-index combinations over a
mask-sorted candidate pool, so the first optimum found in depth-first order
is the lexicographically least one.  Branch and bound adds three sound
devices on top of plain enumeration:

* an incremental objective: each pool member carries a bitmask row marking
  its counted pairs, so extending a partial family costs one AND plus one
  popcount per candidate;
* a deficiency floor: in a class whose rule-abiding families have size at
  most B, every family of size m has at least m - B counted pairs, because
  each member outside a maximal rule-abiding subfamily meets it oddly;
* a conflict bound: a partial family with value v and r more members to add
  reaches at least v plus the sum of the r smallest candidate conflict
  counts against the fixed partial family.

Multi-threaded runs split the root branches of the combination tree among
workers.  Workers share the incumbent value but prune against it strictly,
keeping every optimal-valued subtree alive locally; the final reduction
takes the least (value, witness) pair, so best_value and witness never
depend on the thread count or on scheduling.
"""

from __future__ import annotations

import json
import threading
import time
from dataclasses import asdict, dataclass
from heapq import nsmallest
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Callable, Sequence

from .errors import InfeasibleSpecError, OracleSoundnessError
from .setfamily import SetFamily

DEFAULT_NODE_BUDGET = 10**9
DEFAULT_TIME_BUDGET = 600.0
DEFAULT_FEASIBILITY_CAP = 10**8
_POOL_GROUND_LIMIT = 26  # even/odd pools materialise 2^(n-1) masks
_CHECK_INTERVAL = 1024  # budget and stop-flag polling granularity, in nodes

_CLASSES = ("even", "odd", "uniform")
_OBJECTIVES = ("op", "ckt")
_MODES = ("exhaustive", "bnb", "local")


@dataclass(frozen=True)
class SearchSpec:
    """Instance description: which families to range over and how to search.

    family_class "even" and "odd" range over all subsets of that size
    parity (the empty set counts as even); "uniform" ranges over all
    k-subsets.  objective "op" minimises odd-intersection pairs, "ckt"
    minimises pairs meeting in exactly t elements (uniform class only).
    symmetry None resolves to branch-and-bound even-class instances with
    ground_size >= 6.
    """

    ground_size: int
    family_size: int
    family_class: str
    k: int | None = None
    objective: str = "op"
    t: int | None = None
    mode: str = "bnb"
    budget_nodes: int = DEFAULT_NODE_BUDGET
    budget_secs: float = DEFAULT_TIME_BUDGET
    threads: int = 1
    symmetry: bool | None = None
    use_deficiency_bound: bool = True
    use_conflict_bound: bool = True
    feasibility_cap: int = DEFAULT_FEASIBILITY_CAP
    seed: int = 0
    restarts: int = 1

    def __post_init__(self) -> None:
        if self.ground_size < 1:
            raise InfeasibleSpecError(f"ground size must be >= 1, got {self.ground_size}")
        if self.family_size < 1:
            raise InfeasibleSpecError(f"family size must be >= 1, got {self.family_size}")
        if self.family_class not in _CLASSES:
            raise InfeasibleSpecError(
                f"family class must be one of {_CLASSES}, got {self.family_class!r}"
            )
        if self.family_class == "uniform":
            if self.k is None or not 1 <= self.k <= self.ground_size:
                raise InfeasibleSpecError(
                    f"uniform class needs 1 <= k <= {self.ground_size}, got k={self.k}"
                )
        elif self.k is not None:
            raise InfeasibleSpecError("k only applies to the uniform class")
        if self.objective not in _OBJECTIVES:
            raise InfeasibleSpecError(
                f"objective must be one of {_OBJECTIVES}, got {self.objective!r}"
            )
        if self.objective == "ckt":
            if self.family_class != "uniform":
                raise InfeasibleSpecError("objective 'ckt' needs the uniform class")
            if self.t is None or not 0 <= self.t < (self.k or 0):
                raise InfeasibleSpecError(
                    f"objective 'ckt' needs 0 <= t < k, got t={self.t}"
                )
        elif self.t is not None:
            raise InfeasibleSpecError("t only applies to objective 'ckt'")
        if self.mode not in _MODES:
            raise InfeasibleSpecError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.threads < 1:
            raise InfeasibleSpecError(f"threads must be >= 1, got {self.threads}")
        if self.budget_nodes < 1 or self.budget_secs <= 0:
            raise InfeasibleSpecError("budgets must be positive")
        if self.family_class in ("even", "odd") and self.ground_size > _POOL_GROUND_LIMIT:
            raise InfeasibleSpecError(
                f"even/odd pools are limited to ground size {_POOL_GROUND_LIMIT}"
            )
        if self.family_size > self.pool_size():
            raise InfeasibleSpecError(
                f"family size {self.family_size} exceeds the {self.pool_size()} "
                f"candidate sets in the class"
            )

    def pool_size(self) -> int:
        if self.family_class == "uniform":
            return comb(self.ground_size, self.k)  # type: ignore[arg-type]
        if self.ground_size == 1:
            return 1
        return 1 << (self.ground_size - 1)

    def resolved_symmetry(self) -> bool:
        if self.symmetry is not None:
            return self.symmetry
        return (
            self.mode == "bnb"
            and self.family_class == "even"
            and self.ground_size >= 6
        )


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one search run.

    optimal is True only when the instance space was fully covered or
    pruned soundly; local search never sets it.  witness members are in
    ascending mask order and satisfy objective(witness) == best_value.
    """

    best_value: int | None
    witness: SetFamily | None
    optimal: bool
    nodes_explored: int
    elapsed: float
    spec: SearchSpec

    def to_json_dict(self) -> dict:
        return {
            "best_value": self.best_value,
            "witness": None
            if self.witness is None
            else [list(m.elements()) for m in self.witness.members],
            "optimal": self.optimal,
            "nodes_explored": self.nodes_explored,
            "elapsed_ms": int(self.elapsed * 1000),
            "spec": asdict(self.spec),
        }


def candidate_pool(spec: SearchSpec) -> list[int]:
    """All masks of the instance class, ascending (the lexicographic order)."""
    n = spec.ground_size
    if spec.family_class == "uniform":
        masks = [
            sum(1 << (b - 1) for b in combo)
            for combo in combinations(range(1, n + 1), spec.k)  # type: ignore[arg-type]
        ]
        return sorted(masks)
    want = 0 if spec.family_class == "even" else 1
    return [m for m in range(1 << n) if m.bit_count() & 1 == want]


def _pair_predicate(spec: SearchSpec) -> Callable[[int, int], bool]:
    if spec.objective == "op":
        return lambda a, b: (a & b).bit_count() & 1 == 1
    t = spec.t
    return lambda a, b: (a & b).bit_count() == t


def _conflict_rows(pool: Sequence[int], pred: Callable[[int, int], bool]) -> list[int]:
    rows = [0] * len(pool)
    for i in range(len(pool)):
        pi = pool[i]
        for j in range(i + 1, len(pool)):
            if pred(pi, pool[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def _deficiency_floor(spec: SearchSpec) -> int:
    """A lower bound on the objective of every family in the class."""
    if spec.objective != "op":
        return 0
    n, m = spec.ground_size, spec.family_size
    if spec.family_class == "even":
        rule_bound = 1 << (n // 2)
    elif spec.family_class == "odd":
        rule_bound = n
    else:
        rule_bound = n if (spec.k or 0) & 1 else 1 << (n // 2)
    return max(0, m - rule_bound)


def _root_indices(spec: SearchSpec, pool: Sequence[int]) -> list[int]:
    """First-member choices, restricted to orbit representatives when symmetric.

    Relabeling the ground set maps any family to one whose minimum-mask
    member is the prefix set {1,..,c} of the least member cardinality c, so
    restricting the first chosen set to prefix-set masks keeps at least one
    representative of every relabeling class.
    """
    limit = len(pool) - spec.family_size
    idxs = range(limit + 1)
    if not spec.resolved_symmetry():
        return list(idxs)
    reps = set()
    if spec.family_class == "uniform":
        cards = [spec.k]
    elif spec.family_class == "even":
        cards = list(range(0, spec.ground_size + 1, 2))
    else:
        cards = list(range(1, spec.ground_size + 1, 2))
    for c in cards:
        reps.add((1 << c) - 1)
    return [i for i in idxs if pool[i] in reps]


class _Shared:
    """Cross-worker incumbent value, rough node counter and stop flag."""

    def __init__(self, best: int | None) -> None:
        self.lock = threading.Lock()
        self.best = best
        self.nodes = 0
        self.stop = False

    def publish(self, value: int) -> None:
        with self.lock:
            if self.best is None or value < self.best:
                self.best = value


@dataclass
class _WorkerOutcome:
    best_value: int | None
    witness: tuple[int, ...] | None  # chosen pool indices
    nodes: int
    aborted: bool


def _hint_value(pool: Sequence[int], rows: Sequence[int], m: int) -> int | None:
    """Objective of a quickly improved concrete family, to prime pruning.

    Starts from the first m pool members and applies first-improvement
    single-set swaps.  Any real family value is a sound strict-pruning
    ceiling, so this never changes the search outcome.
    """
    P = len(pool)
    if m >= P:
        return None
    chosen = list(range(m))
    in_chosen = [False] * P
    for i in chosen:
        in_chosen[i] = True
    bits = 0
    value = 0
    for i in chosen:
        value += (rows[i] & bits).bit_count()
        bits |= 1 << i
    evals = 0
    improved = True
    while improved and evals < 200_000:
        improved = False
        for a in sorted(chosen):
            without = bits ^ (1 << a)
            lost = (rows[a] & without).bit_count()
            for c in range(P):
                if in_chosen[c]:
                    continue
                evals += 1
                gained = (rows[c] & without).bit_count()
                if gained < lost:
                    chosen.remove(a)
                    chosen.append(c)
                    in_chosen[a], in_chosen[c] = False, True
                    bits = without | (1 << c)
                    value += gained - lost
                    improved = True
                    break
            if improved:
                break
    return value


def _exact_worker(
    pool: Sequence[int],
    rows: Sequence[int],
    spec: SearchSpec,
    roots: Sequence[int],
    shared: _Shared,
    deadline: float,
    floor: int,
    root_done: Callable[[int, int | None, tuple[int, ...] | None, int], None] | None = None,
) -> _WorkerOutcome:
    P = len(pool)
    m = spec.family_size
    bounding = spec.mode == "bnb"
    use_conflict = bounding and spec.use_conflict_bound
    use_floor = bounding and spec.use_deficiency_bound
    budget_nodes = spec.budget_nodes
    INF = float("inf")

    local_best: float = INF
    local_wit: tuple[int, ...] | None = None
    nodes = 0
    flushed = 0
    next_check = _CHECK_INTERVAL
    aborted = False
    done = False  # floor reached: later branches are lex-greater ties at best

    def over_budget() -> bool:
        nonlocal flushed, aborted
        with shared.lock:
            shared.nodes += nodes - flushed
            flushed = nodes
            if shared.stop or shared.nodes > budget_nodes:
                shared.stop = True
                return True
        if time.monotonic() > deadline:
            shared.stop = True
            return True
        return False

    def extend(chosen: tuple[int, ...], chosen_bits: int, cur: int, start: int) -> None:
        nonlocal nodes, next_check, local_best, local_wit, aborted, done
        if aborted or done:
            return
        if nodes >= next_check:
            next_check = nodes + _CHECK_INTERVAL
            if over_budget():
                aborted = True
                return
        need = m - len(chosen)
        last = P - need
        ws = [(rows[j] & chosen_bits).bit_count() for j in range(start, P)]
        nodes += len(ws)
        shared_best = shared.best
        if bounding:
            if use_conflict and need > 1:
                lb = cur + sum(nsmallest(need, ws))
                if use_floor and lb < floor:
                    lb = floor
                if lb >= local_best or (shared_best is not None and lb > shared_best):
                    return
            elif use_floor and floor >= local_best:
                return
        for j in range(start, last + 1):
            nv = cur + ws[j - start]
            if bounding:
                lb = max(nv, floor) if use_floor else nv
                if lb >= local_best or (shared_best is not None and lb > shared_best):
                    continue
            if need == 1:
                if nv < local_best:
                    local_best = nv
                    local_wit = chosen + (j,)
                    shared.publish(nv)
                    shared_best = shared.best
                    if use_floor and nv <= floor:
                        done = True
                        return
            else:
                extend(chosen + (j,), chosen_bits | (1 << j), nv, j + 1)
                if aborted or done:
                    return
                shared_best = shared.best

    for pos, root in enumerate(roots):
        if aborted or done:
            break
        nodes += 1
        if m == 1:
            if 0 < local_best:
                local_best = 0
                local_wit = (root,)
                shared.publish(0)
            done = True
        else:
            extend((root,), 1 << root, 0, root + 1)
        if root_done is not None and not aborted:
            root_done(pos, None if local_wit is None else int(local_best), local_wit, nodes)
    with shared.lock:
        shared.nodes += nodes - flushed
    return _WorkerOutcome(
        None if local_wit is None else int(local_best), local_wit, nodes, aborted
    )


def _instance_identity(spec: SearchSpec) -> dict:
    """The fields that determine the enumeration space and its order.

    Budgets and bound toggles may differ between an aborted run and its
    resume without affecting soundness; these may not.
    """
    return {
        "ground_size": spec.ground_size,
        "family_size": spec.family_size,
        "family_class": spec.family_class,
        "k": spec.k,
        "objective": spec.objective,
        "t": spec.t,
        "mode": spec.mode,
        "symmetry": spec.resolved_symmetry(),
    }


def _load_checkpoint(path: Path, spec: SearchSpec) -> dict | None:
    if not path.exists():
        return None
    data = json.loads(path.read_text(encoding="utf-8"))
    if data.get("instance") != _instance_identity(spec):
        raise ValueError(f"checkpoint {path} was written for a different instance")
    return data


def _minimize_exact(spec: SearchSpec, checkpoint: str | Path | None = None) -> SearchResult:
    start_time = time.monotonic()
    pool = candidate_pool(spec)
    P = len(pool)
    m = spec.family_size
    if spec.mode == "exhaustive" and comb(P, m) > spec.feasibility_cap:
        raise InfeasibleSpecError(
            f"exhaustive enumeration of C({P},{m}) = {comb(P, m)} families exceeds "
            f"the feasibility cap {spec.feasibility_cap}; use branch and bound"
        )
    rows = _conflict_rows(pool, _pair_predicate(spec))
    floor = _deficiency_floor(spec)
    roots = _root_indices(spec, pool)
    hint = _hint_value(pool, rows, m) if spec.mode == "bnb" else None
    shared = _Shared(hint)
    deadline = start_time + spec.budget_secs

    ck_path = Path(checkpoint) if checkpoint is not None else None
    preload: _WorkerOutcome | None = None
    skip_roots = 0
    if ck_path is not None:
        if spec.threads != 1:
            raise InfeasibleSpecError("checkpointing requires threads=1")
        data = _load_checkpoint(ck_path, spec)
        if data is not None:
            skip_roots = data["completed_roots"]
            preload = _WorkerOutcome(
                data["best_value"],
                None if data["witness"] is None else tuple(data["witness"]),
                data["nodes"],
                False,
            )
            if preload.best_value is not None:
                shared.publish(preload.best_value)

    outcomes: list[_WorkerOutcome] = []
    if spec.threads == 1:
        worker_roots = roots[skip_roots:]
        base_nodes = preload.nodes if preload is not None else 0

        def on_root_done(
            pos: int, value: int | None, wit: tuple[int, ...] | None, nodes: int
        ) -> None:
            if ck_path is None:
                return
            live = [_WorkerOutcome(value, wit, nodes, False)]
            if preload is not None:
                live.append(preload)
            best_val, best_wit = _merge_best(live)
            ck_path.write_text(
                json.dumps(
                    {
                        "instance": _instance_identity(spec),
                        "completed_roots": skip_roots + pos + 1,
                        "best_value": best_val,
                        "witness": None if best_wit is None else list(best_wit),
                        "nodes": base_nodes + nodes,
                    }
                ),
                encoding="utf-8",
            )

        outcome = _exact_worker(
            pool, rows, spec, worker_roots, shared, deadline, floor,
            root_done=on_root_done if ck_path is not None else None,
        )
        outcomes.append(outcome)
        if preload is not None:
            outcomes.append(preload)
    else:
        results: list[_WorkerOutcome | None] = [None] * spec.threads
        workers = []
        for w in range(spec.threads):
            assigned = roots[w :: spec.threads]

            def run(idx: int = w, assigned: list[int] = assigned) -> None:
                results[idx] = _exact_worker(
                    pool, rows, spec, assigned, shared, deadline, floor
                )

            thread = threading.Thread(target=run, name=f"search-worker-{w}")
            workers.append(thread)
            thread.start()
        for thread in workers:
            thread.join()
        outcomes = [r for r in results if r is not None]

    best_val, best_wit = _merge_best(outcomes)
    aborted = any(o.aborted for o in outcomes)
    nodes = sum(o.nodes for o in outcomes)
    witness_family = (
        None
        if best_wit is None
        else SetFamily.from_masks(spec.ground_size, [pool[i] for i in best_wit])
    )
    return SearchResult(
        best_value=best_val,
        witness=witness_family,
        optimal=not aborted,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start_time,
        spec=spec,
    )


def _merge_best(
    outcomes: Sequence[_WorkerOutcome],
) -> tuple[int | None, tuple[int, ...] | None]:
    best_val: int | None = None
    best_wit: tuple[int, ...] | None = None
    for o in outcomes:
        if o.best_value is None:
            continue
        if (
            best_val is None
            or o.best_value < best_val
            or (o.best_value == best_val and o.witness is not None and (best_wit is None or o.witness < best_wit))
        ):
            best_val, best_wit = o.best_value, o.witness
    return best_val, best_wit


def minimize(spec: SearchSpec, checkpoint: str | Path | None = None) -> SearchResult:
    """Dispatch on spec.mode; exhaustive and bnb are exact, local is heuristic."""
    if spec.mode == "local":
        return local_search(spec)
    return _minimize_exact(spec, checkpoint)


def min_op(spec: SearchSpec, checkpoint: str | Path | None = None) -> SearchResult:
    """Exact minimum odd-pair count over all families matching spec."""
    if spec.objective != "op":
        raise InfeasibleSpecError(f"min_op needs objective 'op', got {spec.objective!r}")
    return minimize(spec, checkpoint)


def min_ckt(spec: SearchSpec, checkpoint: str | Path | None = None) -> SearchResult:
    """Exact minimum count of pairs meeting in exactly t elements."""
    if spec.objective != "ckt":
        raise InfeasibleSpecError(f"min_ckt needs objective 'ckt', got {spec.objective!r}")
    return minimize(spec, checkpoint)


def local_search(
    spec: SearchSpec,
    seed: int | None = None,
    restarts: int | None = None,
    initial: SetFamily | None = None,
) -> SearchResult:
    """First-improvement hill climbing over single-set swaps.

    Deterministic for a fixed seed; restart 0 starts from `initial` when
    given, later restarts from seeded random families.  The result is an
    upper-bound incumbent, never a proof, so optimal is always False.
    """
    import random

    start_time = time.monotonic()
    pool = candidate_pool(spec)
    index_of = {mask: i for i, mask in enumerate(pool)}
    P = len(pool)
    m = spec.family_size
    pred = _pair_predicate(spec)
    rng = random.Random(spec.seed if seed is None else seed)
    n_restarts = spec.restarts if restarts is None else restarts
    deadline = start_time + spec.budget_secs

    self_pair = [1 if pred(mask, mask) else 0 for mask in pool]
    best_val: int | None = None
    best_masks: tuple[int, ...] | None = None
    evals = 0
    stopped = False

    for r in range(n_restarts):
        if stopped:
            break
        if r == 0 and initial is not None:
            if len(initial) != m:
                raise ValueError(f"initial family has {len(initial)} members, spec wants {m}")
            try:
                idxs = sorted(index_of[mask] for mask in initial.masks())
            except KeyError as exc:
                raise ValueError(f"initial member {exc} is not in the instance class") from None
        else:
            idxs = sorted(rng.sample(range(P), m))
        chosen = set(idxs)
        w = [0] * P
        for c in idxs:
            pm = pool[c]
            for x in range(P):
                if pred(pool[x], pm):
                    w[x] += 1
        cur = sum(w[c] - self_pair[c] for c in idxs) // 2

        improved = True
        while improved and not stopped:
            improved = False
            for a in sorted(chosen):
                conf_a = w[a] - self_pair[a]
                for c in range(P):
                    if c in chosen:
                        continue
                    evals += 1
                    if evals & 0xFFF == 0 and (
                        evals > spec.budget_nodes or time.monotonic() > deadline
                    ):
                        stopped = True
                        break
                    delta = (w[c] - (1 if pred(pool[c], pool[a]) else 0)) - conf_a
                    if delta < 0:
                        pa, pc = pool[a], pool[c]
                        for x in range(P):
                            px = pool[x]
                            w[x] += (1 if pred(px, pc) else 0) - (1 if pred(px, pa) else 0)
                        chosen.remove(a)
                        chosen.add(c)
                        cur += delta
                        improved = True
                        break
                if improved or stopped:
                    break

        masks = tuple(sorted(pool[c] for c in chosen))
        if best_val is None or cur < best_val or (cur == best_val and masks < best_masks):  # type: ignore[operator]
            best_val, best_masks = cur, masks

    witness = (
        None if best_masks is None else SetFamily.from_masks(spec.ground_size, best_masks)
    )
    return SearchResult(
        best_value=best_val,
        witness=witness,
        optimal=False,
        nodes_explored=evals,
        elapsed=time.monotonic() - start_time,
        spec=spec,
    )


# ---------------------------------------------------------------------------
# Statement verification


_STATEMENTS = ("thm-even", "thm-odd", "conj-even", "conj-odd", "prob-uniform")
_VERDICTS = ("HOLDS", "TIGHT", "COUNTEREXAMPLE", "INCONCLUSIVE")


@dataclass(frozen=True)
class TheoremReport:
    """Oracle minimum versus a claimed lower bound for one statement instance."""

    statement: str
    n: int
    s: int
    k: int | None
    family_size: int
    claimed_bound: int
    minimum: int | None
    verdict: str
    proven: bool
    result: SearchResult

    def to_json_dict(self) -> dict:
        return {
            "statement": self.statement,
            "n": self.n,
            "s": self.s,
            "k": self.k,
            "family_size": self.family_size,
            "claimed_bound": self.claimed_bound,
            "minimum": self.minimum,
            "verdict": self.verdict,
            "proven_statement": self.proven,
            "search": self.result.to_json_dict(),
        }


def verify_theorem(
    statement: str,
    n: int,
    s: int = 1,
    k: int | None = None,
    *,
    mode: str = "bnb",
    threads: int = 1,
    budget_nodes: int = DEFAULT_NODE_BUDGET,
    budget_secs: float = DEFAULT_TIME_BUDGET,
    symmetry: bool | None = None,
) -> TheoremReport:
    """Compare the exact class minimum against a statement's claimed bound.

    Statements:
      thm-even      proven: 2^(n/2)+s even sets force s*2^(n/2-1) odd pairs, s in {1,2}
      conj-even     conjectured extension of thm-even to 3 <= s <= 2^(n/2)-2^(n/4)
      thm-odd       proven: n+1 odd sets force 3 odd pairs (s must be 1)
      conj-odd      conjectured: n+s odd sets force 3s odd pairs, 1 <= s <= n
      prob-uniform  conjectured: n+s k-uniform sets (odd k) force 4 odd pairs for
                    k=3 and 5 otherwise

    A COUNTEREXAMPLE verdict against a proven statement raises
    OracleSoundnessError, because it can only mean the search is wrong.
    """
    if statement not in _STATEMENTS:
        raise ValueError(f"statement must be one of {_STATEMENTS}, got {statement!r}")
    half = n // 2
    family_class = "even"
    spec_k: int | None = None
    if statement == "thm-even":
        if s not in (1, 2):
            raise ValueError(f"thm-even is proven for s in {{1, 2}}, got s={s}")
        m = (1 << half) + s
        bound = s * (1 << (half - 1)) if half >= 1 else s
        proven = True
    elif statement == "conj-even":
        hi = (1 << half) - (1 << (n // 4))
        if not 3 <= s <= hi:
            raise ValueError(f"conj-even claims 3 <= s <= {hi} at n={n}, got s={s}")
        m = (1 << half) + s
        bound = s * (1 << (half - 1))
        proven = False
    elif statement == "thm-odd":
        if s != 1:
            raise ValueError(f"thm-odd is the s=1 statement, got s={s}")
        family_class = "odd"
        m = n + 1
        bound = 3
        proven = True
    elif statement == "conj-odd":
        if not 1 <= s <= n:
            raise ValueError(f"conj-odd claims 1 <= s <= {n}, got s={s}")
        family_class = "odd"
        m = n + s
        bound = 3 * s
        proven = False
    else:  # prob-uniform
        spec_k = 3 if k is None else k
        if spec_k < 3 or spec_k % 2 == 0:
            raise ValueError(f"prob-uniform needs odd k >= 3, got k={spec_k}")
        if s < 1:
            raise ValueError(f"need s >= 1, got s={s}")
        family_class = "uniform"
        m = n + s
        bound = 4 if spec_k == 3 else 5
        proven = False

    spec = SearchSpec(
        ground_size=n,
        family_size=m,
        family_class=family_class,
        k=spec_k,
        mode=mode,
        threads=threads,
        budget_nodes=budget_nodes,
        budget_secs=budget_secs,
        symmetry=symmetry,
    )
    result = minimize(spec)

    if result.best_value is not None and result.best_value < bound:
        verdict = "COUNTEREXAMPLE"
        if proven:
            raise OracleSoundnessError(
                f"{statement} at n={n}, s={s}: search found a family with value "
                f"{result.best_value} below the proven bound {bound}; "
                f"witness {[list(m.elements()) for m in result.witness.members]}"  # type: ignore[union-attr]
            )
    elif not result.optimal:
        verdict = "INCONCLUSIVE"
    elif result.best_value == bound:
        verdict = "TIGHT"
    else:
        verdict = "HOLDS"

    return TheoremReport(
        statement=statement,
        n=n,
        s=s,
        k=spec_k,
        family_size=m,
        claimed_bound=bound,
        minimum=result.best_value,
        verdict=verdict,
        proven=proven,
        result=result,
    )
