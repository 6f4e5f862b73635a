"""Dickson invariants and the explicit regular maps."""
# %%
from hre import MapFamily, RandomSampler, check_k_regular, dickson_invariants
from hre.dickson import render, verify_gl_invariance
from hre.regcheck import GridSampler, check_affinely_regular

# %%
for m in (1, 2, 3):
    alg = dickson_invariants(m)
    for s in range(m - 1, -1, -1):
        print(f"q_{m},{s}: {render(alg.q(s))}")
    print("  GL-invariant:", verify_gl_invariance(alg))

# %% [markdown]
# The matching upper bounds come from explicit maps.  Sampling can only refute
# regularity, so a clean run reads NO_COUNTEREXAMPLE_FOUND.

# %%
for fam, k in [
    (MapFamily.real_moment(5), 5),
    (MapFamily.complex_moment(4), 4),
    (MapFamily.sphere_lift(3), 3),
]:
    print(check_k_regular(fam, k, RandomSampler(seed=42, trials=500)).to_text())

# %% [markdown]
# Negative control: (1, x) on R^2 is not 3-regular, and the failures are the
# collinear triples.

# %%
grid = GridSampler.lattice([0, 1, 2], 2)
print(check_affinely_regular(MapFamily.identity(2), 2, grid).to_text(max_failures=8))
