"""Nonvanishing certificates, one 2-power factor at a time."""
# %%
from hre import certify_regular, certify_regular_skew, certify_skew
from hre.charclass import chisholm_coefficient_audit, ChisholmAuditError

# %% [markdown]
# A composite k is split into its binary digits.  Each digit 2^r needs its
# own pure power w_{2^r-1}^j, and the cross product of the factors is nonzero.

# %%
print(certify_regular(3, 6).to_text(trace=True))
print()
print(certify_skew(6, 10).to_text(trace=True))
print()
print(certify_regular_skew(4, 5, 3).to_text(trace=True))

# %% [markdown]
# Degenerate case: when d = 2^t - 1 the skew exponent is 0 and the witness is 1.

# %%
print(certify_skew(7, 5).witness_text)

# %% [markdown]
# Parity audit of the multinomial coefficients in the top degree.  Over all
# classes the enumeration contains w1^top, whose multinomial is 1, so the audit
# raises.  Restricted to the Dickson-degree classes only zero or one vector
# survives at these sizes, and it is even.  Every enumerated vector has
# j_{k-1} <= d-2 and so dies under the vanishing relations anyway.

# %%
for d, k in [(2, 4), (4, 4), (2, 8), (4, 8)]:
    n = len(chisholm_coefficient_audit(d, k, generators="dickson"))
    try:
        chisholm_coefficient_audit(d, k)
        status = "all even"
    except ChisholmAuditError as exc:
        status = f"{len(exc.odd)} odd, e.g. {exc.odd[0]}"
    print(f"(d={d}, k={k}) dickson: {n} vectors all even; all classes: {status}")
