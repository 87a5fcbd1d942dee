"""The two robustness envelopes: sup-norm form and integral form.

Small disturbances (|u_i| <= ubar < ubar_max) admit the classical estimate
|error(t)| <= beta(|e0|, t - t0) + gamma(sup |u|) with explicit beta and
gamma; the functions are extremely conservative by construction and blow
up quickly in the initial error.  Larger bounded disturbances (ubar up to
min(1, D_o)) still admit the weaker integral estimate
delta1(|e(t)|) <= beta(|e0|, t - t0) + int 2 C2 |u(r)| dr, which this
script checks along the standard tracking run with ubar = 0.5.

Run from the repository root:  python demos/05_envelopes.py
"""

import os

import numpy as np

import chemotrack as ct
from chemotrack.certificates import IissEnvelope

OUT = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(OUT, exist_ok=True)

params = ct.ModelParams(m=10.0, a=0.5)

# sup-norm envelope for the small-disturbance certificate
cert = ct.cached_certificate(params)
env = ct.iss_envelope(cert)
print("sup-norm envelope (ubar = ubar_max / 2):")
for r in (0.01, 0.05, 0.1, 0.2):
    print(f"  beta({r}, 0) = {float(env.beta(r, 0.0)):.6g}   gamma({r}) = {float(env.gamma(r)):.6g}")
print(f"  beta(1, 0) = {float(env.beta(1.0, 0.0))}  <- conservative by design")

rs = np.linspace(0.0, 0.2, 400)
cols = {"r": rs, "beta_at_0": np.asarray(env.beta(rs, 0.0)), "gamma": np.asarray(env.gamma(rs))}
spec = ct.PlotSpec(csv="", x="r", y=(("beta_at_0", "solid"), ("gamma", "dashed")),
                   xlabel="argument", ylabel="envelope value",
                   out=os.path.join(OUT, "envelopes.svg"))
with open(spec.out, "w", newline="\n") as f:
    f.write(ct.render_line_chart(cols, spec))
print(f"wrote {spec.out}")

# integral envelope at ubar = 0.5 along the standard tracking run
cert_i = ct.cached_certificate(params, 0.5, "iISS")
traj = ct.simulate(ct.reference_scenario())
rep = ct.check_iiss(traj, cert_i)
print("\nintegral estimate (ubar = 0.5):")
print(f"  pass = {rep.passed}, worst margin {rep.worst_margin:.4g}")
print(f"  integral of delta2(|u|) over [0, 60]: {rep.extras['delta2_integral']:.6f}")
print(f"  closed form 2 C2 * 0.5 = C2:          {cert_i.c2:.6f}")

ienv = IissEnvelope(cert_i)
print(f"  delta1 shell values: delta1(0.5) = {float(ienv.delta1(0.5)):.6f}, "
      f"delta1(2) = {float(ienv.delta1(2.0)):.6f}")
