"""Tracking survives additional species that wash out.

Augment the chemostat with a competitor whose uptake cannot keep pace
with the dilution rate (nu(1) < D_o).  The competitor dies off at a
certified exponential rate delta while the tracked species keeps
following the periodic reference; the combined function L4 decreases
monotonically once the substrate settles below 1 + epsilon.

Run from the repository root:  python demos/04_multispecies_extinction.py
"""

import os

import numpy as np

import chemotrack as ct

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

scn = ct.multi_reference_scenario()
traj = ct.simulate(scn)
params = scn.params
d_o = ct.dilution_bounds(params)[0]

T = ct.find_settling_time(traj, epsilon=0.1)
mc = ct.multi_certificate(params, scn.species, epsilon=0.1, T=T)
print(f"settling time T = {T}")
print(f"extinction rate delta = {mc.delta:.6f}, coupling weight A = {mc.A:.3f}")

rep = ct.check_extinction(traj, mc, params, d_o)
print(f"extinction check: pass={rep.passed}")
print(f"  exponential bound margin: {rep.extras['bound_margin']:.3e}")
print(f"  L4 monotonicity margin:   {rep.extras['monotonicity_margin']:.3e}")
print(f"  terminal combined error:  {rep.extras['terminal_error']:.3e}")

# competitor level against its certified envelope
ts = traj.t
y = traj.column("y1")
iT = int(np.searchsorted(ts, T))
bound = np.full_like(y, np.nan)
bound[iT:] = y[iT] * np.exp(-mc.delta * (ts[iT:] - ts[iT]))
csv_path = os.path.join(OUT, "extinction_run.csv")
traj.with_columns(("y1_bound",), (bound,)).to_csv(csv_path)

spec = ct.PlotSpec(csv=csv_path, x="t",
                   y=(("y1", "solid"), ("y1_bound", "dashed"), ("x", "solid")),
                   xlabel="t", ylabel="species levels",
                   out=os.path.join(OUT, "extinction.svg"))
ct.plot_csv(spec)
print(f"wrote {csv_path}")
print(f"wrote {spec.out}")
