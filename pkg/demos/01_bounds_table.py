"""Lower bounds for skew and regular embeddings of R^d, side by side."""
# %%
from hre import paper_table, regular_bound, regular_skew_bound, skew_bound
from hre.bounds import main2_exception_set, render_table

# %% [markdown]
# Each bound is reported as the smallest target dimension N it does not rule
# out.  For l-skew embeddings the Stiefel-Whitney bound MAIN2 is compared with
# the tangent-space count l(d+1)-1.

# %%
rows = paper_table([3, 4, 5], range(2, 9))
print(render_table(rows))

# %% [markdown]
# The two bounds coincide exactly when d = 2^r - 1, since then the per-factor
# exponent 2^gamma(d) - d - 1 is zero.

# %%
for d in (3, 7, 15):
    print(d, [skew_bound(d, l).best_lower == (d + 1) * l - 1 for l in range(2, 7)])
print("d where MAIN2 < (d+1)l:", sorted(main2_exception_set(range(2, 65), range(2, 65), "closed")))

# %%
print(skew_bound(5, 2).to_text())
print()
print(regular_bound(2, 8).to_text())
print()
print(regular_skew_bound(3, 4, 2).to_text())
