"""Certificate constants and the pointwise decay inequality.

For any admissible disturbance bound the package produces explicit
constants (c, kappa, C1..C5, ubar_max) such that V' <= -C5 V + C2 |u|
along every trajectory, where V = e^{L3} - 1 is built from the log-species
and total-mass errors.  This script computes the certificate, runs a
randomized scenario, and verifies the inequality sample by sample.

Run from the repository root:  python demos/03_decay_certificate.py
"""

import json

import chemotrack as ct

params = ct.ModelParams(m=10.0, a=0.5)
cert = ct.Certificate.compute(params)  # ubar defaults to ubar_max / 2

print("certificate:")
print(json.dumps(cert.to_json_dict(), indent=2))

scn = ct.scenario_from_dict({
    "name": "randomized-decay-demo",
    "params": {"m": 10.0, "a": 0.5},
    "initial": {"S": 2.4, "x": 0.2},
    "disturbance": {"kind": "random", "seed": 2024, "ubar": cert.ubar, "mode": "ISS"},
    "integrator": {"h": 1e-3, "tf": 25.0},
})
traj = ct.simulate(scn)

rep = ct.check_decay(traj, cert)
print(f"\ndecay check: pass={rep.passed}, worst margin {rep.worst_margin:.3e} at t={rep.worst_t}")
print(f"samples in far region (large error): {rep.extras['case_far']}")
print(f"samples in near region (small error): {rep.extras['case_near']}")

rep_iss = ct.check_iss(traj, cert)
print(f"tracking envelope check: pass={rep_iss.passed}, worst margin {rep_iss.worst_margin:.3e}")

rep_inv = ct.check_invariance(traj)
print(f"positive invariance: pass={rep_inv.passed}, smallest component {rep_inv.worst_margin:.3e}")
