"""Fitting series, solubility, and the implication suite.

Run with ``python3 demos/structure_and_implications.py``.
"""

# %% [markdown]
# ## Fitting series and the soluble radical

# %%
from __future__ import annotations

from sylprob import (
    build_expression,
    fitting_subgroup,
    is_nilpotent,
    is_soluble,
    pr_star,
    soluble_radical,
    upper_fitting_series,
)

for expr in ["Sym(4)", "Alt(5)", "Alt(5) * C(6)", "InvolutionExample(3)"]:
    g = build_expression(expr)
    print(f"{expr:22s} |G|={g.order:6d}  Fitting series {upper_fitting_series(g).orders}  "
          f"|R|={soluble_radical(g).order}  soluble={is_soluble(g)}")

# %% [markdown]
# ## The 2^s family
#
# ``InvolutionExample(s)`` has every coprime Sylow pair commuting with
# probability at least 1/2, yet its Fitting subgroup has index ``2^s``:
# the index is not bounded by the probability alone.

# %%
from sylprob.lab import involution_family_report

for s in range(1, 5):
    r = involution_family_report(s)
    print(f"s={s}: |G:F(G)| = {r.fitting_index:3d}, min coprime Sylow pr = {r.min_coprime_sylow_pr}, "
          f"best (Sylow p, Hall p') pr = { {p: str(v) for p, (v, _) in r.hall_pairs.items()} }")

# %% [markdown]
# ## Nilpotency is exactly pr* = 1

# %%
for expr in ["C(12)", "D(4)", "D(6)", "Sym(3)"]:
    g = build_expression(expr)
    print(f"{expr}: nilpotent={is_nilpotent(g)}, pr*={pr_star(g).value}, |F|={fitting_subgroup(g).order}")

# %% [markdown]
# ## Running the implication registry over a small corpus
#
# Each verdict records the hypothesis value, whether the conclusion holds,
# and a status: Confirmed, Vacuous, or COUNTEREXAMPLE.

# %%
from collections import Counter

from sylprob.corpus import CorpusEntry
from sylprob.lab import run_suite

corpus = [CorpusEntry(e, e) for e in ["Sym(3)", "Alt(5)", "C(12)", "PSL2(7)", "Sym(4)"]]
res = run_suite(corpus, workers=1)
print(Counter(v.status for v in res.verdicts))
for v in res.verdicts:
    if v.status == "Confirmed":
        print(f"  {v.group_label:8s} {v.implication_id:28s} pr*={v.hypothesis_value} > {v.threshold}")
