"""The four CLI commands. Each prints a summary and returns an exit code."""

from __future__ import annotations

from dataclasses import replace

import numpy as np
import pandas as pd

from bell import (
    ChainedTimes,
    F_closed,
    F_finite_s,
    asymptotic_slope,
    chained_finite_s,
    effective_K,
    unit_crossing_tau,
)
from lhv import lhv_audit
from phase_space import TimePair

from .constants import (
    AUDIT_COLUMNS,
    BANNER,
    EXIT_OK,
    EXIT_VALIDATION,
    FIG1_COLUMNS,
    FINITE_S_COLUMNS,
    QUAD_FLAG_THRESHOLD,
)
from .oracle import run_oracle_suite
from .output import write_csv, write_svg
from .scan import ScanSpec


def _section(title: str) -> None:
    print("\n" + BANNER)
    print(title)
    print(BANNER)


def _grid_minimum(tau: np.ndarray, values: np.ndarray) -> tuple[float, float]:
    i = int(np.argmin(values))
    return float(values[i]), float(tau[i])


def cmd_fig1(spec: ScanSpec) -> int:
    """Delta-limit scan of F(tau), F(3 tau) and S(tau)/K."""
    params = spec.params
    tau = spec.tau_grid()
    _section(f"fig1: q0={params.q0:g} p0={params.p0:g} K={params.K:g}, {len(tau)} tau points")

    F = np.array([F_closed(float(t), params) for t in tau])
    F3 = np.array([F_closed(3.0 * float(t), params) for t in tau])
    frame = pd.DataFrame({"tau": tau, "F": F, "F3": F3, "S": (3.0 * F - F3) / params.K})

    if len(tau):
        s_min, tau_at = _grid_minimum(tau, frame["S"].to_numpy())
        print(f"min S/K on grid: {s_min:.6g} at tau={tau_at:g}")
        if s_min < 0:
            print("S/K goes negative: the unnormalized delta-limit state breaks S >= 0")
    crossing = unit_crossing_tau(params)
    if crossing is None:
        print("F stays <= 1 on [0, 100]")
    else:
        print(f"F first exceeds 1 at tau={crossing:.6g}")
    print(f"asymptotic slope F/tau -> {asymptotic_slope(params):.6g}")

    if spec.wants_csv:
        print(f"Wrote {write_csv(frame, spec.path_with('.csv'), FIG1_COLUMNS)}")
    if spec.wants_svg:
        path = write_svg(
            spec.path_with(".svg"),
            {"S/K": (tau, frame["S"].to_numpy())},
            title=f"S(tau)/K, q0={params.q0:g}, p0={params.p0:g}",
            xlabel="tau",
            ylabel="S/K",
        )
        print(f"Wrote {path}")
    return EXIT_OK


def _finite_s_rows(params, tau: np.ndarray) -> pd.DataFrame:
    F_fin, S_fin, K_eff = [], [], []
    for t in tau:
        t = float(t)
        near = F_finite_s(TimePair.symmetric(t), params)
        far = F_finite_s(TimePair.symmetric(3.0 * t), params)
        F_fin.append(near.value)
        S_fin.append(near.combine(far, 3.0, -1.0).value)
        K_eff.append(effective_K(t, params, f_finite=near))
    return pd.DataFrame({
        "s": np.full(len(tau), params.s),
        "tau": tau,
        "F_fin": F_fin,
        "S_fin": S_fin,
        "K_eff": K_eff,
    })


def cmd_finite_s(spec: ScanSpec) -> int:
    """Normalized finite-s scan per s value, with the effective K the closed form would need."""
    tau = spec.tau_grid()
    _section(f"finite-s: q0={spec.params.q0:g} p0={spec.params.p0:g}, s in {list(spec.s_values)}")

    frames = []
    for s in spec.s_values:
        params = replace(spec.params, s=s)
        frame = _finite_s_rows(params, tau)
        frames.append(frame)
        if len(tau):
            s_min, tau_at = _grid_minimum(tau, frame["S_fin"].to_numpy())
            k = frame["K_eff"].to_numpy()
            print(f"s={s:g}: min S on grid {s_min:.6g} at tau={tau_at:g}; "
                  f"K_eff in [{k.min():.6g}, {k.max():.6g}] (s/sqrt(pi) = {s / np.sqrt(np.pi):.6g})")

    table = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=FINITE_S_COLUMNS)
    if spec.wants_csv:
        print(f"Wrote {write_csv(table, spec.path_with('.csv'), FINITE_S_COLUMNS)}")
    if spec.wants_svg:
        series = {f"s={f['s'].iloc[0]:g}": (tau, f["S_fin"].to_numpy()) for f in frames if len(f)}
        path = write_svg(spec.path_with(".svg"), series, title="finite-s S(tau)", xlabel="tau", ylabel="S")
        print(f"Wrote {path}")
    return EXIT_OK


def cmd_oracle(seed: int, n_cases: int, n_samples: int, n_chunks: int = 1, max_workers: int = 1) -> int:
    """Closed form vs quadrature vs Monte Carlo on random cases; exit 3 on any disagreement."""
    _section(f"oracle: seed={seed} cases={n_cases} samples={n_samples}")
    report = run_oracle_suite(seed, n_cases, n_samples, n_chunks=n_chunks, max_workers=max_workers)

    for i, case in enumerate(report.closed_form):
        mark = "ok" if case.passed else "FAIL"
        print(f"  closed  #{i:<3} q0={case.q0:+.4f} p0={case.p0:+.4f} tau={case.tau:.4f} "
              f"rel residual {case.residual:.3e} {mark}")
    for i, case in enumerate(report.monte_carlo):
        mark = "ok" if case.passed else "FAIL"
        p, t = case.params, case.times
        print(f"  mc      #{i:<3} q0={p.q0:+.4f} p0={p.p0:+.4f} s={p.s:.4f} t=({t.t1:.3f}, {t.t2:.3f}) "
              f"D={case.quadrature:.6f} est={case.estimate:.6f} ({case.residual:+.2f} se) {mark}")

    if not report.closed_form and not report.monte_carlo:
        print("No cases requested; nothing to check.")
    print(f"max closed-form relative residual: {report.max_closed_form_residual:.3e}")
    if report.passed:
        print("All oracle cases agree.")
        return EXIT_OK
    print(f"{report.failures} oracle case(s) failed.")
    return EXIT_VALIDATION


def cmd_lhv_audit(spec: ScanSpec) -> int:
    """Monte Carlo and quadrature S over the grid for every s; exit 3 if any value is flagged."""
    tau = spec.tau_grid()
    mc = spec.mc
    _section(f"lhv-audit: q0={spec.params.q0:g} p0={spec.params.p0:g}, s in {list(spec.s_values)}, "
             f"n={mc.n_samples} seed={mc.seed} chunks={mc.n_chunks}")

    frames = []
    total_flags = 0
    for s in spec.s_values:
        params = replace(spec.params, s=s)
        report = lhv_audit(params, tau, mc)
        frame = report.to_frame()
        S_quad = []
        chained_min = np.inf
        for t in tau:
            t = float(t)
            near = F_finite_s(TimePair.symmetric(t), params)
            far = F_finite_s(TimePair.symmetric(3.0 * t), params)
            S_quad.append(near.combine(far, 3.0, -1.0).value)
            chained_min = min(chained_min, chained_finite_s(ChainedTimes.reflected(t), params).value)
        frame.insert(0, "s", s)
        frame["S_quad"] = S_quad
        frame["quad_flag"] = [int(v < QUAD_FLAG_THRESHOLD) for v in S_quad]
        frames.append(frame)

        flags = report.flag_count + int(frame["quad_flag"].sum())
        total_flags += flags
        print(f"s={s:g}: verdict {report.verdict}, {report.flag_count} Monte Carlo flag(s), "
              f"{int(frame['quad_flag'].sum())} quadrature flag(s)")
        if len(tau):
            print(f"        min four-time combination on grid: {chained_min:.6g} (local bound: >= 0)")

    table = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame(columns=AUDIT_COLUMNS)
    if spec.wants_csv:
        print(f"Wrote {write_csv(table, spec.path_with('.csv'), AUDIT_COLUMNS)}")
    if spec.wants_svg:
        series = {}
        for f in frames:
            if len(f):
                series[f"s={f['s'].iloc[0]:g} (MC)"] = (f["tau"].to_numpy(), f["S_mc"].to_numpy())
                series[f"s={f['s'].iloc[0]:g} (quad)"] = (f["tau"].to_numpy(), f["S_quad"].to_numpy())
        path = write_svg(spec.path_with(".svg"), series, title="S(tau) audit", xlabel="tau", ylabel="S")
        print(f"Wrote {path}")

    if total_flags:
        print(f"{total_flags} flagged value(s): S >= 0 does not hold for this local model.")
        return EXIT_VALIDATION
    print("No flags.")
    return EXIT_OK
