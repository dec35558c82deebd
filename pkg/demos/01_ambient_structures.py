"""Tour of the ambient model: metric, complex structure, conjugation circle.

Builds the linear model of the quadric tangent space, rotates the
conjugation circle, classifies directions by canonical angle, and prints
the two singular Jacobi spectra.
"""

import math

import numpy as np

import quadric as q

m = 4
model = q.build_tangent_model(m)
print(f"complex dimension m = {m}, real dimension {model.dim}")
print("trace of the conjugation:", np.trace(model.A))

# The conjugation circle: every member is an involution anti-commuting with J.
for theta in (0.0, math.pi / 3.0, math.pi):
    A_t = q.rotate_conjugation(model, theta)
    print(
        f"theta = {theta:.4f}: |A_t^2 - I| = {np.max(np.abs(A_t @ A_t - np.eye(model.dim))):.2e}"
    )

# Canonical angles: 0 tags principal directions, pi/4 isotropic ones.
print()
for label, U in (
    ("Z_1 (principal)", q.principal_vector(model)),
    ("(Z_1 + J Z_2)/sqrt(2) (isotropic)", q.isotropic_vector(model)),
    ("angle 0.3", math.cos(0.3) * model.zvec(1) + math.sin(0.3) * model.jzvec(2)),
):
    res = q.canonical_angle(model, U)
    print(f"{label:35s} -> t = {res.t:.6f}  [{res.kind}]")

# The Jacobi operator of a singular direction has a rigid spectrum.
print()
for label, U in (
    ("principal", q.principal_vector(model)),
    ("isotropic", q.isotropic_vector(model)),
):
    rep = q.sym_eigen(q.ambient_jacobi(model, U))
    pairs = ", ".join(f"{v:.6g} (x{k})" for v, k in rep.clusters)
    print(f"Jacobi spectrum, {label} direction: {pairs}")
    print(f"  trace = {sum(v * k for v, k in rep.clusters):.6g} (expected {2 * m})")

# First Bianchi identity as a residual check on random triples.
rng = np.random.default_rng(0)
worst = 0.0
for _ in range(200):
    X, Y, Z = (rng.standard_normal(model.dim) for _ in range(3))
    cyc = (
        q.ambient_curvature(model, X, Y, Z)
        + q.ambient_curvature(model, Y, Z, X)
        + q.ambient_curvature(model, Z, X, Y)
    )
    worst = max(worst, float(np.max(np.abs(cyc))))
print(f"\nfirst Bianchi identity, worst residual over 200 triples: {worst:.2e}")
