"""Dual Stiefel-Whitney classes of the permutation bundle, by series inversion."""
# %%
import time

from hre import QuotientModel, dual_class, reduce
from hre.charclass import dual_class_by_complement, total_class
from hre.gf2poly import graded_component, mul_truncated

# %% [markdown]
# For k = 2^m points the total class is 1 + w1 + ... + w_{k-1}.  Its inverse
# is a geometric series, and over GF(2) the series collapses into a product of
# Frobenius powers.

# %%
w = total_class(3, 4, 1, 6)
wbar = dual_class(3, 4, 1, 6)
print("w     =", w)
print("w-bar =", wbar)
print("w * w-bar =", mul_truncated(w, wbar, 6))

# %% [markdown]
# The same inverse via (1+u)^(2^T - 1): squaring is termwise, so
# (1+u)^(2^T) = 1 + u^(2^T), which vanishes once 2^T exceeds the truncation.

# %%
print(dual_class_by_complement(3, 4, 1, 6) == wbar)

# %% [markdown]
# In the top degree (d-1)(k-1) the vanishing relations leave one monomial.

# %%
for d, k in [(2, 16), (3, 8), (4, 8), (5, 16)]:
    top = (d - 1) * (k - 1)
    t0 = time.perf_counter()
    comp = graded_component(dual_class(d, k, 1, top), top)
    survivor = reduce(comp, QuotientModel(d, k))
    dt = time.perf_counter() - t0
    print(f"d={d} k={k:>2} top={top:>2}: {len(comp):>6} terms -> {survivor}   ({dt:.2f}s)")
