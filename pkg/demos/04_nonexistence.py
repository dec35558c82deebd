"""Nonexistence for principal normals: the derived chain and its contradiction.

A Hopf hypersurface with principal normal and Reeb-parallel structure Jacobi
operator would have to satisfy a chain of pointwise operator equations on
the maximal complex subbundle.  The final affine pair forces the conjugation
to restrict to the identity there, whose trace 2m - 2 contradicts the
trace-free conjugation of the ambient model.  No shape operator escapes.
"""

import numpy as np

import quadric as q

# A candidate that satisfies the Reeb-parallel condition pointwise.
m, alpha = 4, 1.5
cand = q.reeb_parallel_principal_candidate(m, alpha)
print(f"candidate: m = {m}, alpha = {alpha}")
print(f"Reeb-parallel residual: {q.reeb_parallel_residual(cand.h):.2e}")

rep = q.principal_chain_residuals(cand)
print("\nderived-equation chain residuals:")
for name, value in rep.residuals.items():
    print(f"  {name:18s} {value:.3e}")
print("verdict:", rep.verdict)
print("(the first-order equations hold, the affine pair cannot: the candidate")
print(" is not realizable geometry, only pointwise data)")

# Imposing the identity conjugation block makes the affine pair solvable --
# and that is exactly the contradiction.
from quadric.classification import _quadratic_roots

hi, lo = _quadratic_roots(alpha)
values = [hi, lo, hi] * 2
forced = q.build_principal_candidate(m, alpha, values, pair=False, identity_conjugation=True)
rep = q.principal_chain_residuals(forced)
print("\nidentity-conjugation candidate with root spectrum:")
print(f"  affine pair residuals: {rep.residuals['affine_a']:.2e}, {rep.residuals['affine_b']:.2e}")
print(f"  conjugation defect |A|_C - I| = {rep.conjugation_defect:.2e}")
print(f"  trace on the complex subbundle = {rep.trace_on_c:.0f} (must be 0)")
print("  verdict:", rep.verdict)

# The certificate automates this over sampled Reeb curvatures.
rng = np.random.default_rng(7)
alphas = [float(rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0])) for _ in range(10)]
report = q.principal_nonexistence_certificate(3, alphas)
contradictions = [c for c in report.checks if c.name.startswith("contradiction")]
print(f"\ncertificate over {len(alphas)} sampled curvatures (m = 3):")
print(f"  contradictions: {sum(c.passed for c in contradictions)}/{len(contradictions)}")
print(f"  forced trace: {report.params['forced_trace_on_c']:.0f}, required: 0")
print("  all checks passed:", report.all_passed)
