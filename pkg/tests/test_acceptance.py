"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary."""

import time

import numpy as np
import pytest

from conftest import cycle, path, random_connected_graph, random_graph, record_criterion
from incidence_centrality.centrality import graph_centralities, hypergraph_centralities, rankings_agree
from incidence_centrality.experiments import (
    EQUIVALENCE_CONFIG,
    generate_er,
    generate_path,
    load_karate,
    run_equivalence,
    run_grid_experiment,
)
from incidence_centrality.graph import (
    DirectedGraph,
    Hypergraph,
    build_hypergraph_incidence,
    build_incidence,
    connected_components,
    flip_orientations,
)
from incidence_centrality.oracles import (
    check_resistance_sum_identity,
    current_flow_closeness,
    resistance_matrix,
    svd_resistance_matrix,
)
from incidence_centrality.spectral import UNREGULARIZED, compact_svd, pseudoinverse_diagonal, truncated_svd

pytestmark = pytest.mark.acceptance


def _timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def test_ac01_path_equivalence():
    result, elapsed = _timed(run_equivalence, generate_path(8), EQUIVALENCE_CONFIG)
    rho = result.metrics["pearson_rho"]
    ok = abs(rho - 0.986) <= 0.02 and elapsed < 1.0
    record_criterion(1, ok, f"P8 rho={rho:.4f} (target 0.986 +/- 0.02), {elapsed:.3f}s < 1s")
    assert ok


def test_ac02_karate_equivalence():
    result, elapsed = _timed(run_equivalence, load_karate(), EQUIVALENCE_CONFIG)
    rho = result.metrics["pearson_rho"]
    ok = abs(rho - 0.928) <= 0.03 and elapsed < 2.0
    record_criterion(2, ok, f"karate rho={rho:.4f} (target 0.928 +/- 0.03), {elapsed:.3f}s < 2s")
    assert ok


def test_ac03_er_distribution():
    start = time.perf_counter()
    rhos, seed = [], 0
    while len(rhos) < 20:
        g = generate_er(15, 0.3, seed)
        seed += 1
        if len(connected_components(g)) != 1:
            continue
        rhos.append(run_equivalence(g, EQUIVALENCE_CONFIG).metrics["pearson_rho"])
    elapsed = time.perf_counter() - start
    med, low = float(np.median(rhos)), float(np.min(rhos))
    ok = med >= 0.93 and low >= 0.85 and elapsed < 10.0
    record_criterion(3, ok, f"ER(15,0.3) x20 (seeds 0..{seed - 1}): median rho={med:.4f} >= 0.93, "
                            f"min={low:.4f} >= 0.85, {elapsed:.3f}s < 10s")
    assert ok


def test_ac04_resistance_sum_identity():
    rng = np.random.default_rng(4)
    graphs = [random_connected_graph(rng, int(rng.integers(2, 41)), float(rng.uniform(0.02, 0.4))) for _ in range(50)]
    graphs += [path(2), cycle(4), load_karate()]
    worst = 0.0
    ok = True
    for g in graphs:
        res = check_resistance_sum_identity(compact_svd(build_incidence(g)))
        worst = max(worst, res.max() / (1e-8 * g.n))
        ok &= bool(res.max() <= 1e-8 * g.n)
    record_criterion(4, ok, f"resistance-sum identity on {len(graphs)} graphs: worst residual = {worst:.2e} x (1e-8 n)")
    assert ok


def test_ac05_grid_motif():
    result, elapsed = _timed(run_grid_experiment, 0.0)
    m = result.metrics
    checks = {
        "hub": m["hub_argmax"] == "(2,2)",
        "auth": m["auth_argmax"] == "(2,3)",
        "edge": m["s_e_argmax"] == "(2,2)->(2,3)",
        "btw_cv": m["betweenness_cv"] < m["hub_cv"],
        "time": elapsed < 1.0,
    }
    ok = all(checks.values())
    record_criterion(5, ok, f"grid: hub={m['hub_argmax']} auth={m['auth_argmax']} top edge={m['s_e_argmax']} "
                            f"CV(betweenness)={m['betweenness_cv']:.3f} < CV(hub)={m['hub_cv']:.3f}, {elapsed:.3f}s < 1s")
    assert ok, checks


def test_ac06_orientation_invariance():
    rng = np.random.default_rng(6)
    worst = 0.0
    for _ in range(10):
        g = random_graph(rng, int(rng.integers(4, 25)), 0.3)
        b = build_incidence(g)
        base = compact_svd(b)
        cv0 = pseudoinverse_diagonal(base, "vertex", UNREGULARIZED)
        ce0 = pseudoinverse_diagonal(base, "edge", UNREGULARIZED)
        rep0 = graph_centralities(g, alpha=None)
        for _ in range(10):
            subset = {j for j in range(g.m) if rng.random() < 0.5}
            d = compact_svd(flip_orientations(b, subset))
            flipped = DirectedGraph(g.n, tuple((h, t) if j in subset else (t, h) for j, (t, h) in enumerate(g.edges)))
            rep = graph_centralities(flipped, alpha=None)
            diffs = [
                np.abs(d.sigma - base.sigma).max(initial=0.0),
                np.abs(pseudoinverse_diagonal(d, "vertex", UNREGULARIZED) - cv0).max(initial=0.0),
                np.abs(pseudoinverse_diagonal(d, "edge", UNREGULARIZED) - ce0).max(initial=0.0),
                np.abs(rep.c_v - rep0.c_v).max(initial=0.0),
                np.abs(rep.c_e - rep0.c_e).max(initial=0.0),
            ]
            worst = max(worst, *diffs)
    ok = worst <= 1e-10
    record_criterion(6, ok, f"100 flips on 10 graphs: max change in sigma/c_v/c_e = {worst:.2e} <= 1e-10")
    assert ok


def test_ac07_rank_and_betti():
    rng = np.random.default_rng(7)
    bad = 0
    for _ in range(50):
        g = random_graph(rng, int(rng.integers(1, 40)), float(rng.uniform(0.0, 0.3)))
        c = len(connected_components(g))
        r = compact_svd(build_incidence(g)).numerical_rank
        bad += (r != g.n - c) or (g.m - r != g.m - g.n + c)
    ok = bad == 0
    record_criterion(7, ok, f"rank = n - c and nullity = m - n + c on 50 random graphs: {50 - bad}/50 exact")
    assert ok


def test_ac08_oracle_equivalence():
    rng = np.random.default_rng(8)
    worst, rank_ok, count = 0.0, True, 0
    for _ in range(25):
        g = random_connected_graph(rng, int(rng.integers(2, 51)), float(rng.uniform(0.02, 0.3))).undirected()
        d = compact_svd(build_incidence(g))
        worst = max(worst, np.abs(svd_resistance_matrix(d).values - resistance_matrix(g).values).max())
        c_v = pseudoinverse_diagonal(d, "vertex", UNREGULARIZED)
        rank_ok &= rankings_agree(c_v, current_flow_closeness(g))
        count += 1
    g = load_karate()
    d = compact_svd(build_incidence(g))
    worst = max(worst, np.abs(svd_resistance_matrix(d).values - resistance_matrix(g).values).max())
    rank_ok &= rankings_agree(pseudoinverse_diagonal(d, "vertex", UNREGULARIZED), current_flow_closeness(g))
    ok = worst <= 1e-8 and rank_ok
    record_criterion(8, ok, f"{count + 1} graphs: max |R_svd - R_oracle| = {worst:.2e} <= 1e-8; "
                            f"c_v/CFC rankings agree: {rank_ok}")
    assert ok


def test_ac09_truncation_tail():
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(10):
        b = build_incidence(random_connected_graph(rng, int(rng.integers(5, 30)), 0.25)).dense()
        r = compact_svd(b).numerical_rank
        for k in sorted({1, max(r // 2, 1), r}):
            t = truncated_svd(b, k)
            direct = np.linalg.norm(b - t.reconstruct())
            if t.frobenius_tail > 0:
                err = abs(t.frobenius_tail - direct) / t.frobenius_tail
            else:
                # k = r: nothing discarded, the residual is rounding noise on the scale of ||B||_F
                err = direct / np.linalg.norm(b)
            worst = max(worst, err)
    ok = worst <= 1e-9
    record_criterion(9, ok, f"frobenius_tail vs ||B - U_k S_k V_k^T||_F on 10 graphs, k in {{1, r/2, r}}: "
                            f"max relative error {worst:.2e} <= 1e-9")
    assert ok


def test_ac10_hypergraphs():
    rng = np.random.default_rng(10)
    worst, dup_worst = 0.0, 0.0
    for _ in range(30):
        n = int(rng.integers(1, 11))
        edges = [frozenset(rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False).tolist())
                 for _ in range(int(rng.integers(1, 9)))]
        edges.append(edges[int(rng.integers(0, len(edges)))])
        h = Hypergraph(n, tuple(edges))
        rep = hypergraph_centralities(h, UNREGULARIZED)
        B = build_hypergraph_incidence(h).dense()
        worst = max(
            worst,
            np.abs(rep.c_v - np.diag(np.linalg.pinv(B @ B.T))).max(),
            np.abs(rep.c_e - np.diag(np.linalg.pinv(B.T @ B))).max(),
        )
        for i in range(h.m):
            for j in range(i + 1, h.m):
                if h.hyperedges[i] == h.hyperedges[j]:
                    dup_worst = max(dup_worst, abs(rep.c_e[i] - rep.c_e[j]))
    ok = worst <= 1e-8 and dup_worst <= 1e-10
    record_criterion(10, ok, f"30 hypergraphs (n <= 10): max diff vs pinv diagonals {worst:.2e} <= 1e-8, "
                             f"duplicate hyperedge spread {dup_worst:.2e} <= 1e-10")
    assert ok
