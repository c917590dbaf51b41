"""A tour of Sylow commuting probabilities.

Run with ``python3 demos/sylow_commuting_tour.py``.  Each ``# %%`` block is a
self-contained step that can also be pasted into a notebook cell.
"""

# %% [markdown]
# ## Commuting probability of two subgroups
#
# ``pr(X, Y)`` is the fraction of pairs ``(x, y)`` in ``X x Y`` with
# ``xy = yx``.  Everything is an exact ``Fraction``.

# %%
from __future__ import annotations

from sylprob import PrimeSet, build_expression, omega_set, pr, pr_star, sylow_subgroup

s3 = build_expression("Sym(3)")
P2, P3 = sylow_subgroup(s3, 2), sylow_subgroup(s3, 3)
print("Sym(3): pr(P2, P3) =", pr(P2, P3))

# %% [markdown]
# ## The set of values over all Sylow pairs
#
# Different choices of Sylow subgroups can give different values.  In
# ``Sym(5)`` the Sylow 2- and 3-subgroups meet in two ways.

# %%
s5 = build_expression("Sym(5)")
for p, q in [(2, 3), (2, 5), (3, 5)]:
    rep = omega_set(s5, p, q)
    print(f"Sym(5) Omega({p},{q}) =", [str(v) for v in rep.values],
          f"({rep.conjugates_swept} conjugates swept)")

# %% [markdown]
# ## pr* : the worst prime pair at its best Sylow pair

# %%
for expr in ["Sym(3)", "Sym(5)", "Alt(5)", "PSL2(7)", "C(30)"]:
    g = build_expression(expr)
    print(f"pr*({expr}) =", pr_star(g).value)

a5 = build_expression("Alt(5)")
for a, b in [("2'", "2'"), ("2", "2'"), ("2", "5'"), ("2", "3'")]:
    print(f"pr*_A5({a},{b}) =", pr_star(a5, PrimeSet.parse(a), PrimeSet.parse(b)).value)

# %% [markdown]
# ## Direct products multiply
#
# Sylow subgroups of a product are products of Sylow subgroups, so the value
# sets multiply: ``pr*(Sym(5) x Sym(3)^t) = (1/2)(2/3)^t``.

# %%
from sylprob.probability import pr_star_product

for t in (1, 2, 3):
    g = build_expression(f"Sym(5) * Pow(Sym(3), {t})")
    direct = pr_star(g).value
    rule = pr_star_product([s5] + [s3] * t)
    print(f"t={t}: direct {direct}, product rule {rule}")
