"""Acceptance suite: one PASS/FAIL line per criterion.

The lines are printed as each test runs and repeated in the pytest summary.
Thresholds are pinned below; seeds are fixed so reruns sample the same pairs.
"""

import math
import random
import time

import pytest

from slidingblocks import presets
from slidingblocks.counting import count_components
from slidingblocks.decomposition import is_cycle_graph, kappa, kappa_star
from slidingblocks.graph import build_graph, configuration, random_configuration, replay
from slidingblocks.oracle import decode, enumerate_components, min_k_connected
from slidingblocks.reachability import decide, wilson_parity_connected
from slidingblocks.solver import FallbackExceeded, Moves, solve

from conftest import family, perms, table

THETA0_SECONDS = 5.0
FIFTEEN_SECONDS = 0.1
FAMILY_SECONDS = 600.0
CATERPILLAR_SECONDS = 1.0
WILSON_PAIRS = 1000
PAIRS_PER_CASE = 100
HALLWAY_GRAPHS = 50
SOLVER_PAIRS = 500

REPORT: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    REPORT.append(line)
    print(line)
    assert ok, line


def random_connected(n, rng, extra):
    """A random spanning tree plus ``extra`` random edges; n=7 has too many graphs to list."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    others = [(u, v) for v in range(n) for u in range(v) if (u, v) not in edges]
    edges |= set(rng.sample(others, min(extra, len(others))))
    return build_graph(n, sorted(edges))


def _pair(rng, n):
    return rng.randrange(math.factorial(n)), rng.randrange(math.factorial(n))


def test_01_theta0_components():
    g = presets.theta0()
    t0 = time.perf_counter()
    tab = enumerate_components(g, 1)
    dt = time.perf_counter() - t0
    more = [enumerate_components(g, k).components for k in range(2, 8)]
    ok = tab.components == 6 and sum(tab.sizes) == 5040 and dt < THETA0_SECONDS and more == [1] * 6
    report(1, ok, f"theta0 k=1: {tab.components} components over {sum(tab.sizes)} states in {dt:.2f}s; "
                  f"k=2..7: {more}")


def test_02_wilson_grid23():
    g = presets.grid(2, 3)
    tab = table(g, 1)
    ps = perms(6)
    rng = random.Random(2023)
    bad = 0
    for _ in range(WILSON_PAIRS):
        i, j = _pair(rng, 6)
        got = wilson_parity_connected(decode(ps[i], 1), decode(ps[j], 1), g)
        bad += got != (tab.labels[i] == tab.labels[j])
    ok = tab.components == 2 and list(tab.sizes) == [360, 360] and bad == 0
    report(2, ok, f"grid(2,3) k=1 sizes {list(tab.sizes)}; parity vs oracle on {WILSON_PAIRS} pairs, "
                  f"{bad} mismatches")


def test_03_fifteen_puzzle():
    g = presets.grid(4, 4)
    start = configuration([f"a{i + 1}" for i in range(15)] + ["b1"])

    def swapped(i, j):
        cells = list(start.placement)
        cells[i], cells[j] = cells[j], cells[i]
        return configuration(cells)

    # one warm-up so the timing measures the work, not imports
    decide(start, start, g)
    t0 = time.perf_counter()
    count = count_components(g, 1).value
    t_count = time.perf_counter() - t0
    t0 = time.perf_counter()
    v_1315 = decide(start, swapped(13, 14), g)
    t_1315 = time.perf_counter() - t0
    # tile 12 and the empty cell 16 exchanged, in 1-based board numbering
    t0 = time.perf_counter()
    v_flip = decide(start, swapped(11, 15), g)
    t_flip = time.perf_counter() - t0
    slowest = max(t_count, t_1315, t_flip)
    ok = count == 2 and not v_1315.connected and v_flip.connected and slowest < FIFTEEN_SECONDS
    report(3, ok, f"grid(4,4) count={count}; 13-15-14 connected={v_1315.connected}; "
                  f"(12 16) connected={v_flip.connected}; slowest {slowest * 1000:.1f}ms")


def test_04_main_theorem():
    t0 = time.perf_counter()
    bad, literal_off = [], []
    for g in family(6):
        mk = min_k_connected(g)
        if mk != kappa_star(g, "corrected"):
            bad.append(g)
        if mk != kappa_star(g, "literal"):
            literal_off.append(g)
    dt = time.perf_counter() - t0
    literal_ok = all(is_cycle_graph(g) or g.n <= 2 for g in literal_off)
    ok = not bad and literal_ok and dt < FAMILY_SECONDS
    report(4, ok, f"{len(family(6))} graphs: {len(bad)} corrected mismatches; literal differs on "
                  f"{len(literal_off)} graphs, all cycles: {literal_ok}; {dt:.1f}s")


def test_05_decide_vs_oracle():
    rng = random.Random(55)
    cases = pairs = bad = 0
    for g in family(6):
        ps = perms(g.n)
        for k in range(1, g.n + 1):
            tab = table(g, k)
            cases += 1
            for _ in range(PAIRS_PER_CASE):
                i, j = _pair(rng, g.n)
                got = decide(decode(ps[i], k), decode(ps[j], k), g).connected
                bad += got != (tab.labels[i] == tab.labels[j])
                pairs += 1
    report(5, bad == 0, f"{cases} (G,k) cases, {pairs} pairs, {bad} mismatches")


def test_06_counting_vs_oracle():
    bad = cases = 0
    for g in family(6):
        for k in range(1, g.n + 1):
            cases += 1
            bad += count_components(g, k, "corrected").value != table(g, k).components
    bowtie = count_components(presets.bowtie(), 1).value
    bowtie_oracle = table(presets.bowtie(), 1).components
    ok = bad == 0 and bowtie == bowtie_oracle == 6
    report(6, ok, f"{cases} (G,k) cases, {bad} count mismatches; bowtie k=1 -> {bowtie}")


def test_07_dark_hallways():
    rng = random.Random(7)
    pool = [g for g in family(6) if kappa(g) >= 1]
    while len(pool) < len([g for g in family(6) if kappa(g) >= 1]) + 20:
        g = random_connected(7, rng, rng.randrange(0, 4))
        if kappa(g) >= 1:
            pool.append(g)
    graphs = exceptions = 0
    for g in pool:
        graphs += 1
        for k in range(1, kappa(g) + 1):
            if enumerate_components(g, k).components < 2:
                exceptions += 1
    ok = graphs >= HALLWAY_GRAPHS and exceptions == 0
    report(7, ok, f"{graphs} graphs with a hallway, every k up to its order: {exceptions} exceptions")


def test_08_monotone():
    exceptions = 0
    for g in family(6):
        single = [table(g, k).components == 1 for k in range(1, g.n + 1)]
        exceptions += sum(1 for a, b in zip(single, single[1:]) if a and not b)
    report(8, exceptions == 0, f"{len(family(6))} graphs, all k: {exceptions} exceptions")


def _connected_pair(g, k, tab, rng):
    ps = perms(g.n)
    i = rng.randrange(len(ps))
    same = [j for j in range(len(ps)) if tab.labels[j] == tab.labels[i]]
    return decode(ps[i], k), decode(ps[rng.choice(same)], k)


MACRO_BOARDS = [
    ("cycle", presets.cycle(6)), ("cycle", presets.cycle(7)),
    ("stopwatch", presets.stopwatch(6)), ("stopwatch", presets.stopwatch(7)),
    ("hourglass", presets.hourglass(3, 4)), ("hourglass", presets.hourglass(4, 4)),
    ("snake", presets.snake_tongue(6)), ("snake", presets.snake_tongue(7)),
]


def test_09_solver():
    rng = random.Random(99)
    boards = list(family(6)) + [random_connected(7, rng, rng.randrange(0, 8)) for _ in range(25)]
    solved = invalid = refused = 0
    for _ in range(SOLVER_PAIRS):
        g = rng.choice(boards)
        k = rng.randrange(1, g.n + 1)
        s, t = _connected_pair(g, k, table(g, k), rng)
        out = solve(s, t, g)
        if isinstance(out, Moves):
            solved += 1
            invalid += replay(g, s, out.moves) != t
        elif isinstance(out, FallbackExceeded):
            refused += 1
        else:
            invalid += 1
    # macro families at the default cap; at k >= k* the certificate must not need the search
    macro_refused = macro_invalid = macro_pairs = searched = 0
    for _, g in MACRO_BOARDS:
        for k in range(1, g.n):
            tab = table(g, k)
            for _ in range(15):
                s, t = _connected_pair(g, k, tab, rng)
                out = solve(s, t, g)
                macro_pairs += 1
                if isinstance(out, FallbackExceeded):
                    macro_refused += 1
                elif not isinstance(out, Moves) or replay(g, s, out.moves) != t:
                    macro_invalid += 1
                elif k >= kappa_star(g) and "search" in out.stats:
                    searched += 1
    ok = (solved + refused == SOLVER_PAIRS and invalid == 0
          and macro_refused == 0 and macro_invalid == 0 and searched == 0)
    report(9, ok, f"{SOLVER_PAIRS} connected pairs: {solved} solved, {invalid} invalid, {refused} refused; "
                  f"macro families {macro_pairs} pairs, {macro_refused} refused, "
                  f"{searched} searched at k >= k*")


def test_10_caterpillar():
    g = presets.caterpillar(5000)
    rng = random.Random(10)
    s = random_configuration(g.n, 3, rng)
    t = random_configuration(g.n, 3, rng)
    t0 = time.perf_counter()
    decide(s, t, g)
    dt = time.perf_counter() - t0
    report(10, g.n == 10_000 and dt < CATERPILLAR_SECONDS, f"caterpillar n={g.n}, k=3: decide in {dt:.3f}s")


@pytest.fixture(scope="session", autouse=True)
def _summary(request):
    yield
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None and REPORT:
        reporter.write_sep("=", "acceptance criteria")
        for line in sorted(REPORT):
            reporter.write_line(line)
