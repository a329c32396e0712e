"""Census screening: ingest graph6 streams, fingerprint, group, and diff.

Groups are keyed by digests of exact coefficient strings (with full-string
confirmation inside each digest bucket), so cospectrality grouping never
depends on floating hashes.  Output is a pure function of the input order
and the configuration; the worker count changes timing only.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .bounds import check_bounds, hermitian_part_spectrum_check
from .edge_space import (
    build_hashimoto,
    build_hl2,
    build_incidence,
    build_pm_basis,
    build_reversal,
    edge_space,
    random_gauge,
    regauge,
    sector_blocks,
    verify_sector_identity,
)
from .graphs import Graph, Graph6Error, is_connected, is_regular, parse_graph6
from .matrices import Matrix
from .shadows import (
    DEFAULT_KMAX,
    Fingerprint,
    PairReport,
    compare,
    fingerprint,
    regular_collapse_check,
    shadow_set,
)
from .zeta import (
    DEFAULT_ORDER,
    bass_det,
    factorize,
    hashimoto_det,
    log_trace_check,
    schur_series_check,
    trivial_roots,
)

GROUPING_KEYS = ("A", "L", "S", "shadows", "hashimoto")


# ---------------------------------------------------------------------------
# canonical labeling and the builtin generator


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighbor-color refinement starting from degrees; the color
    ids are canonical (derived from sorted invariant keys only)."""
    adj = g.neighbors()
    colors = g.degrees()
    for _ in range(g.n):
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(g.n)
        ]
        order = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            break
        colors = new
    return colors


def canonical_label(g: Graph) -> Graph:
    """Canonical representative of the isomorphism class of g.

    Degree-refined backtracking: vertices are placed color class by color
    class, maximizing the packed adjacency bit string; branches that cannot
    beat the current best prefix are cut.
    """
    n = g.n
    if n == 0:
        return g
    adj = [set() for _ in range(n)]
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    colors = _refine_colors(g)
    best_rows: list[int] | None = None
    best_perm: list[int] | None = None

    def place(position: int, placed: list[int], rows: list[int], remaining):
        nonlocal best_rows, best_perm
        if position == n:
            if best_rows is None or rows > best_rows:
                best_rows = list(rows)
                best_perm = list(placed)
            return
        target_color = min(colors[v] for v in remaining)
        candidates = [v for v in remaining if colors[v] == target_color]
        for v in candidates:
            row = 0
            for i, u in enumerate(placed):
                if v in adj[u]:
                    row |= 1 << i
            rows.append(row)
            prefix = rows
            if best_rows is None or prefix >= best_rows[: len(prefix)]:
                placed.append(v)
                place(position + 1, placed, rows, remaining - {v})
                placed.pop()
            rows.pop()

    place(0, [], [], frozenset(range(n)))
    assert best_perm is not None
    inverse = [0] * n
    for pos, v in enumerate(best_perm):
        inverse[v] = pos
    return g.relabel(inverse)


def certificate(g: Graph) -> tuple:
    c = canonical_label(g)
    return (c.n, c.edges)


@lru_cache(maxsize=8)
def _all_graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    """Every graph on n vertices up to isomorphism, by vertex augmentation:
    extend each (n-1)-vertex class representative with a new vertex joined to
    every subset of the old vertices, then dedup by canonical certificate."""
    if n == 0:
        return (Graph.from_edges(0, []),)
    seen: dict[tuple, Graph] = {}
    for base in _all_graphs_up_to_iso(n - 1):
        for mask in range(1 << (n - 1)):
            edges = list(base.edges)
            for v in range(n - 1):
                if mask & (1 << v):
                    edges.append((v, n - 1))
            candidate = canonical_label(Graph.from_edges(n, edges))
            seen.setdefault(certificate(candidate), candidate)
    return tuple(sorted(seen.values(), key=lambda g: (g.m, g.edges)))


MAX_GENERATED_VERTICES = 7


def builtin_generate(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, canonically
    labeled; refuses n > 7 (use graph6 ingestion for larger censuses)."""
    if not (1 <= n <= MAX_GENERATED_VERTICES):
        raise ValueError(
            f"builtin generator covers 1 <= n <= {MAX_GENERATED_VERTICES}; "
            "ingest external graph6 output for larger vertex counts"
        )
    return [g for g in _all_graphs_up_to_iso(n) if is_connected(g)]


# ---------------------------------------------------------------------------
# one-shot identity battery


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def verify_all(g: Graph, order: int = 8, gauges: int = 3, seed: int = 0) -> list[CheckResult]:
    """Run every structural identity on one graph; failures are data."""
    import random

    results: list[CheckResult] = []

    def check(name: str, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # noqa: BLE001 - failures are data here
            ok, detail = False, f"error: {exc}"
        results.append(CheckResult(name, ok, detail))

    es = edge_space(g)
    t = build_hashimoto(es)
    p = build_reversal(es)

    check("reversal_involution", lambda: (p * p == Matrix.identity(2 * g.m), ""))
    check(
        "shared_endpoint_splitting",
        lambda: (build_hl2(es) == p * t + t * p, "A = PT + TP"),
    )
    check(
        "reversal_symmetry",
        lambda: (
            p * build_hl2(es) == t + t.transpose() and t == p * t.transpose() * p,
            "PA = T + T^t",
        ),
    )
    check(
        "incidence_laplacians",
        lambda: (
            (lambda d, a: d[0] * d[0].transpose() == g.degree_matrix() - g.adjacency()
             and d[1] * d[1].transpose() == g.degree_matrix() + g.adjacency())(
                build_incidence(es), None
            ),
            "DD^t and |D||D|^t",
        ),
    )
    check(
        "sector_identity",
        lambda: (lambda r: (r.ok, str(r.mismatch or "")))(verify_sector_identity(es)),
    )
    check(
        "pm_basis_norm",
        lambda: (
            build_pm_basis(es).transpose() * build_pm_basis(es)
            == Matrix.identity(2 * g.m).scaled(2),
            "U^t U = 2I",
        ),
    )
    check("bass_vs_hashimoto", lambda: (bass_det(g) == hashimoto_det(g), ""))
    check(
        "factorization",
        lambda: (factorize(g, order).identity_holds(), "det = line * correction"),
    )
    check("schur_series", lambda: (schur_series_check(g, order), f"order {order}"))
    check("log_trace", lambda: (log_trace_check(g, order), f"order {order}"))
    if is_connected(g):
        check("trivial_roots", lambda: (lambda r: (r.ok(), str(r)))(trivial_roots(g)))
    if is_regular(g) is not None and is_connected(g):
        check("regular_collapse", lambda: (regular_collapse_check(g), ""))

    rng = random.Random(seed)
    base_shadows = shadow_set(es)
    base_mmt = (lambda m: m * m.transpose())(sector_blocks(es).M)

    def gauge_check():
        for _ in range(gauges):
            other = regauge(es, random_gauge(rng, g.m))
            m2 = sector_blocks(other).M
            if m2 * m2.transpose() != base_mmt:
                return False, "MM^t moved under a gauge flip"
            if shadow_set(other) != base_shadows:
                return False, "shadow charpolys moved under a gauge flip"
        return True, f"{gauges} random gauges"

    check("gauge_invariance", gauge_check)
    check(
        "spectral_bounds",
        lambda: (lambda r: (r.ok, "; ".join(r.violations)))(check_bounds(g)),
    )
    check(
        "hermitian_part_split",
        lambda: (hermitian_part_spectrum_check(g), "Spec(H) = L/2 u -S/2"),
    )
    return results


# ---------------------------------------------------------------------------
# screening


@dataclass(frozen=True)
class ScreenConfig:
    keys: tuple[str, ...] = ("A", "L", "S")
    order: int = DEFAULT_ORDER
    kmax: int = DEFAULT_KMAX
    connected_only: bool = False
    irregular_only: bool = False
    min_degree: int | None = None
    max_degree: int | None = None
    jobs: int = 1
    max_pairs_per_class: int = 10
    skip_malformed: bool = False

    def __post_init__(self):
        if not self.keys:
            raise ValueError("grouping key must be nonempty")
        for key in self.keys:
            if key not in GROUPING_KEYS:
                raise ValueError(f"unknown grouping key {key!r}; use {GROUPING_KEYS}")
        if "hashimoto" not in self.keys and self.order < 8:
            raise ValueError("series order below 8 cannot report divergence orders")


@dataclass(frozen=True)
class ClassRecord:
    digest: str
    key_string: str
    members: tuple[str, ...]  # graph6, in input order
    pairs: tuple[PairReport, ...]

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "digest": self.digest,
            "members": list(self.members),
            "pairs": [p.to_json_dict() for p in self.pairs],
        }


@dataclass
class ScreenResult:
    classes: list[ClassRecord]
    summary: dict = field(default_factory=dict)
    fingerprints: list[Fingerprint] = field(default_factory=list)  # kept graphs, input order


def _fingerprint_task(args):
    g6, order, kmax = args
    g = parse_graph6(g6)
    return fingerprint(g, order, kmax)


def key_string_of(fp: Fingerprint, keys: tuple[str, ...]) -> str:
    inv = fp.invariant_strings()
    return "|".join(f"{k}={inv[k]}" for k in keys)


def run_screen(lines, cfg: ScreenConfig) -> ScreenResult:
    """Screen an iterable of (lineno, graph6) pairs for cospectral classes.

    Graphs are fingerprinted (optionally by a worker pool, re-sequenced by
    input index), filtered, grouped by the configured invariant key, and all
    classes with at least two members are returned with pairwise reports.
    """
    graphs: list[tuple[int, str, Graph]] = []
    read = 0
    malformed = 0
    for lineno, text in lines:
        read += 1
        try:
            g = parse_graph6(text)
        except Graph6Error as exc:
            if cfg.skip_malformed:
                malformed += 1
                continue
            raise Graph6Error(f"line {lineno}: {exc}") from exc
        graphs.append((lineno, text, g))

    filtered = []
    for lineno, text, g in graphs:
        if cfg.connected_only and not is_connected(g):
            continue
        if cfg.irregular_only and is_regular(g) is not None:
            continue
        degs = g.degree_multiset()
        if cfg.min_degree is not None and (not degs or degs[-1] < cfg.min_degree):
            continue
        if cfg.max_degree is not None and (degs and degs[0] > cfg.max_degree):
            continue
        filtered.append((lineno, text, g))

    tasks = [(text, cfg.order, cfg.kmax) for _, text, g in filtered]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            prints = list(pool.map(_fingerprint_task, tasks, chunksize=8))
    else:
        prints = [_fingerprint_task(t) for t in tasks]

    groups: dict[str, dict] = {}
    for (lineno, text, g), fp in zip(filtered, prints):
        key = key_string_of(fp, cfg.keys)
        digest = hashlib.sha256(key.encode()).hexdigest()[:16]
        bucket = groups.setdefault(digest, {"key": key, "members": []})
        if bucket["key"] != key:
            # digest collision: fall back to the full string as the digest
            digest = "full:" + key
            bucket = groups.setdefault(digest, {"key": key, "members": []})
        bucket["members"].append((lineno, text, g))

    classes: list[ClassRecord] = []
    separated = {"shadows": 0, "hashimoto": 0, "S": 0}
    for digest in sorted(groups, key=lambda d: groups[d]["members"][0][0]):
        bucket = groups[digest]
        members = bucket["members"]
        if len(members) < 2:
            continue
        pairs = []
        for (_, t1, g1), (_, t2, g2) in combinations(members, 2):
            if len(pairs) >= cfg.max_pairs_per_class:
                break
            rep = compare(g1, g2, cfg.order, cfg.kmax)
            pairs.append(rep)
            if not rep.agree.get("S", True):
                separated["S"] += 1
            if not all(v for k, v in rep.agree.items() if k.startswith("shadow_")):
                separated["shadows"] += 1
            if not rep.agree.get("hashimoto", True):
                separated["hashimoto"] += 1
        classes.append(
            ClassRecord(
                digest=digest,
                key_string=bucket["key"],
                members=tuple(t for _, t, _ in members),
                pairs=tuple(pairs),
            )
        )

    summary = {
        "read": read,
        "malformed_skipped": malformed,
        "kept": len(filtered),
        "classes_total": len(groups),
        "classes_nontrivial": len(classes),
        "pairs_reported": sum(len(c.pairs) for c in classes),
        "pairs_separated_by": separated,
        "keys": list(cfg.keys),
    }
    return ScreenResult(classes, summary, fingerprints=prints)


def write_fingerprints_jsonl(fps, stream) -> None:
    for fp in fps:
        stream.write(fp.to_jsonl() + "\n")


def read_fingerprints_jsonl(stream) -> list[Fingerprint]:
    out = []
    for line in stream:
        line = line.strip()
        if line:
            out.append(Fingerprint.from_json_dict(json.loads(line)))
    return out
