"""One driver per subcommand; each returns a list of (table, header, rows)."""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor

import numpy as np
import sympy

from ..algebra.field import field_make
from ..errors import ConfigError
from ..rng import rng as make_rng

log = logging.getLogger("sslab")


def pmap(fn, items, threads: int):
    """Order-preserving map, in worker processes when threads > 1."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


def select_primes(cfg, default_mod=None) -> list[int]:
    if cfg.p is not None:
        return [cfg.p]
    if cfg.p_range is None:
        raise ConfigError("give --p or --p-range")
    lo, hi = cfg.p_range
    mod = cfg.p_mod or default_mod
    if mod is not None and len(mod) != 2:
        raise ConfigError("--p-mod takes MOD:RES")
    pool = [int(q) for q in sympy.primerange(max(3, lo), hi + 1) if mod is None or q % mod[0] == mod[1]]
    if cfg.samples and cfg.samples < len(pool):
        gen = make_rng(cfg.seed, f"harness/primes/{lo}/{hi}")
        pool = sorted(int(q) for q in gen.choice(pool, size=cfg.samples, replace=False))
    if not pool:
        raise ConfigError("no primes selected")
    return pool


def _store(cfg, p, ctx=None):
    from ..modpoly.store import ModPolyStore

    return ModPolyStore(p, db_path=cfg.modpoly_db, cache_dir=cfg.cache, method=cfg.method, ctx=ctx)


# ---------------------------------------------------------------- hasse


def _hasse_one(args):
    p, kind, abort = args
    from ..hasse.orbits import orbit_statistics

    return orbit_statistics(p, kind, newton_abort=abort)


def run_hasse(cfg):
    from ..hasse.orbits import IterationStats

    primes = select_primes(cfg)
    stats = pmap(_hasse_one, [(p, cfg.kind, cfg.newton_abort) for p in primes], cfg.threads)
    out = [("hasse_iter", IterationStats.CSV_HEADER, [s.csv_row() for s in stats])]
    if len(stats) > 1:
        rows = []
        for name in ("F1", "F2", "F3"):
            v = [getattr(s, name) for s in stats]
            rows.append(f"{name},{min(v):.10g},{max(v):.10g}")
        out.append(("hasse_summary", "stat,min,max", rows))
    return out


# ---------------------------------------------------------------- mappings


def run_mappings(cfg):
    from ..mappings.counts import asymptotic_ratio, fm_counts, monte_carlo_reach, reach_counts

    lo, hi = cfg.n
    rows = []
    for m in cfg.m:
        fm = fm_counts(m, hi)
        # reach counts need at least one fixed point
        reach = {k: reach_counts(m, k, hi) if m >= 1 else None for k in cfg.k}
        for n in range(max(lo, 1), hi + 1):
            rows.append(",".join([str(n), str(m), str(fm[n - 1]), f"{asymptotic_ratio(m, n):.10g}"]
                                 + ["" if reach[k] is None else str(reach[k][n - 1]) for k in cfg.k]))
    header = "n,m,fm_count,asymptotic_ratio," + ",".join(f"reach_k{k}" for k in cfg.k)
    out = [("mappings_counts", header, rows)]
    if cfg.trials:
        mc = []
        for k in cfg.k:
            r = monte_carlo_reach(cfg.mc_n, cfg.mc_m, k, cfg.trials, cfg.seed)
            target = (k + 1) * cfg.mc_m
            mc.append(f"{cfg.mc_n},{cfg.mc_m},{k},{r.trials},{r.mean:.10g},{r.stderr:.10g},{target},{r.mean / target:.10g}")
        out.append(("mappings_mc", "n,m,k,trials,mean,stderr,target,ratio", mc))
    return out


# ---------------------------------------------------------------- conjgcd


def _grid_chunk(args):
    cfg, p, pairs = args
    from ..conjgcd.experiments import grid_experiment

    return grid_experiment(p, pairs, _store(cfg, p), classify=cfg.classify)


def _sweep_one(args):
    cfg, n, m, p = args
    from ..conjgcd.experiments import prime_sweep

    return prime_sweep(n, m, [p], classify=False, cache_dir=cfg.cache)[0]


def run_conjgcd(cfg):
    from ..conjgcd.experiments import GRID_HEADER, SWEEP_HEADER, aggregate, extended_pairs

    if cfg.sweep:
        if len(cfg.sweep) != 2:
            raise ConfigError("--sweep takes N,M")
        n, m = cfg.sweep
        primes = select_primes(cfg, default_mod=(4, 3))
        recs = pmap(_sweep_one, [(cfg, n, m, p) for p in primes], cfg.threads)
        return [("conjgcd_sweep", SWEEP_HEADER, [r.csv_row() for r in recs])]
    if cfg.p is None:
        raise ConfigError("conjgcd grid needs --p")
    p = cfg.p
    if cfg.extended:
        pairs = extended_pairs()
    else:
        lo, hi = cfg.n
        pairs = [(n, m) for n in range(max(2, lo), hi + 1) for m in range(n + 1, cfg.m_factor * n + 1)]
    _store(cfg, p).require({n for pr in pairs for n in pr})
    # contiguous chunks keep each worker's modular polynomials warm
    t = max(1, cfg.threads)
    chunks = [pairs[i::t] for i in range(t)] if t > 1 else [pairs]
    recs = [r for part in pmap(_grid_chunk, [(cfg, p, c) for c in chunks], t) for r in part]
    recs.sort(key=lambda r: (r.n, r.m))
    summary = []
    for s in aggregate(recs):
        f = lambda x: "" if x is None else f"{x:.10g}"
        summary.append(f"{s.name},{s.points},{f(s.avg_ratio_ss)},{f(s.avg_roots_over_sqrt)}")
    return [("conjgcd_grid", GRID_HEADER, [r.csv_row() for r in recs]),
            ("conjgcd_summary", "subset,points,avg_ratio_ss,avg_roots_over_sqrt", summary)]


# ---------------------------------------------------------------- torsion


def run_torsion(cfg):
    from ..torsion import CSV_HEADER, Variant, solve

    if cfg.p is None:
        raise ConfigError("torsion needs --p")
    v = Variant(cfg.variant, r=cfg.r, mu_seed=cfg.seed, dropped=tuple(cfg.drop))
    res = solve(cfg.p, cfg.ells, v)
    ctx = field_make(cfg.p)
    from ..curves.models import CurveModel, j_invariant

    params = [f"{a},{j_invariant(CurveModel.legendre(ctx, a))},{int(a in set(res.verified))}" for a in res.candidates]
    return [("torsion", CSV_HEADER, [res.csv_row(timing=cfg.timing)]),
            ("torsion_candidates", "a,j,verified", params)]


# ---------------------------------------------------------------- qwalk


def run_qwalk(cfg):
    from ..curves.walk import find_base_supersingular
    from ..qwalk import CSV_HEADER, build_graph, eig_sym, finite_time_dist, limiting_dist, sample_limiting, walk_summary

    if cfg.p is None:
        raise ConfigError("qwalk needs --p")
    p = cfg.p
    ctx = field_make(p)
    store = _store(cfg, p, ctx)
    summ = walk_summary(p, cfg.ell, cfg.T, store, seed=cfg.seed)
    G = build_graph(p, cfg.ell, store, ctx, seed=cfg.seed)
    spec = eig_sym(G.brandt)
    e0 = G.index(find_base_supersingular(ctx, seed=cfg.seed))
    lim = limiting_dist(spec, e0)
    fin = finite_time_dist(spec, e0, cfg.T)
    counts = np.zeros(G.N, dtype=np.int64)
    if cfg.draws:
        counts = np.bincount(sample_limiting(spec, e0, cfg.seed, cfg.draws), minlength=G.N)
    rows = [f"{i},{j},{lim[i]:.12g},{fin[i]:.12g},{counts[i]}" for i, j in enumerate(G.vertices)]
    out = [("qwalk", CSV_HEADER, [summ.csv_row()]), ("qwalk_dist", "index,j,limiting,finite_T,draws", rows)]
    if cfg.draws:
        exp = cfg.draws * lim
        chi2 = float(((counts - exp) ** 2 / exp).sum())
        out.append(("qwalk_chi2", "draws,dof,chi2", [f"{cfg.draws},{G.N - 1},{chi2:.10g}"]))
    return out


# ---------------------------------------------------------------- cgl


def run_cgl(cfg):
    from ..curves.walk import cgl_walk_state, find_base_supersingular

    if cfg.p is None:
        raise ConfigError("cgl needs --p")
    ctx = field_make(cfg.p)
    bits = cfg.bits or "".join(map(str, make_rng(cfg.seed, "cgl/bits").integers(0, 2, size=cfg.length)))
    if set(bits) - {"0", "1"}:
        raise ConfigError("--bits must be a 0/1 string")
    j0 = find_base_supersingular(ctx, seed=cfg.seed)
    rows, state = [f"0,,{j0}"], None
    for i, b in enumerate(bits, 1):
        state = cgl_walk_state(j0, b, ctx, state)
        rows.append(f"{i},{b},{state.current}")
    return [("cgl", "step,bit,j", rows)]


# ---------------------------------------------------------------- modpoly-build


def run_modpoly_build(cfg):
    """Write Phi_n for the requested levels, mod p if --p is given, else over Z (prime levels)."""
    from ..modpoly.dbfile import format_records, write_atomic
    from ..modpoly.qexp import modular_poly_coeffs

    lo, hi = cfg.levels
    cfg.out.mkdir(parents=True, exist_ok=True)
    if cfg.p is None:
        tables = [(int(l), modular_poly_coeffs(int(l))) for l in sympy.primerange(max(2, lo), hi + 1)]
        path = cfg.out / "modpoly_Z.txt"
        write_atomic(path, format_records(tables, 0, "database", ["source q-expansion of j over Z"]))
        rows = [f"{l},0,qexp" for l, _ in tables]
    else:
        store = _store(cfg, cfg.p)
        recs = [store.get(n) for n in range(max(2, lo), hi + 1) if n % cfg.p]
        path = cfg.out / f"modpoly_p{cfg.p}.txt"
        write_atomic(path, format_records(recs, cfg.p, "database", [f"levels {lo}..{hi}", "source in-process build"]))
        rows = [f"{r.level},{cfg.p},{r.provenance}" for r in recs]
    log.info("wrote %s", path)
    return [("modpoly_build", "level,modulus,provenance", rows)]


DRIVERS = {
    "hasse-iter": run_hasse,
    "mappings": run_mappings,
    "conjgcd": run_conjgcd,
    "torsion": run_torsion,
    "qwalk": run_qwalk,
    "cgl": run_cgl,
    "modpoly-build": run_modpoly_build,
}
