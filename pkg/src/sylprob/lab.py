"""Machine checks of the nilpotency and solubility criteria over a group corpus.

Each implication pairs a ``pr*`` hypothesis (an exact, strict comparison)
with a structural conclusion.  Conclusions are always evaluated, so a suite
run doubles as a table of how close each group comes to every threshold.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .builders import build_expression
from .config import RunConfig, get_config, use_config
from .corpus import CorpusEntry
from .errors import BudgetExceeded, SearchFailed
from .group import (
    PermutationGroup,
    centralizer_of_subgroup,
    conjugate_subgroup,
    generated_subgroup,
    intersection,
)
from .probability import (
    _pr_fixed,
    _sweep_lockstep,
    build_h0,
    check_product_rule,
    check_quotient_inequality,
    class_size_bound,
    lemma_exponent_bound,
    omega_set,
    pr,
    pr_no_pq_formula,
    pr_star,
    sylow_pair_bound,
    xy_inequality_check,
)
from .structure import (
    PrimeSet,
    core,
    derived_subgroup,
    fitting_subgroup,
    frattini_of_p_group,
    hall_p_complement_with_method,
    has_element_of_order,
    is_nilpotent,
    is_soluble,
    p_core,
    p_part,
    prime_divisors,
    quotient_group,
    soluble_radical,
    sylow_subgroup,
    upper_fitting_series,
)

CONFIRMED = "Confirmed"
VACUOUS = "Vacuous"
COUNTEREXAMPLE = "COUNTEREXAMPLE"


def _pq_bound(p: int, q: int) -> Fraction:
    return Fraction(p + q - 1, p * q)


# ---------------------------------------------------------------------------
# implications


@dataclass(frozen=True)
class ImplicationSpec:
    """``pr*_G(pi1, pi2) > threshold(G)  ==>  conclusion(G)``.

    ``threshold`` may return ``None`` when the statement does not apply to
    the group; the verdict is then vacuous.
    """

    id: str
    statement: str
    pi1: PrimeSet
    pi2: PrimeSet
    threshold: Callable[[PermutationGroup], Fraction | None]
    conclusion: Callable[[PermutationGroup], bool]
    conclusion_name: str
    strict: bool = True
    family: str = ""

    def hypothesis(self, g: PermutationGroup) -> tuple[Fraction, Fraction | None, bool]:
        rep = pr_star(g, self.pi1, self.pi2)
        t = self.threshold(g)
        if t is None:
            return rep.value, None, False
        holds = rep.value > t if self.strict else rep.value >= t
        return rep.value, t, holds


@dataclass
class Verdict:
    group_label: str
    implication_id: str
    hypothesis_value: Fraction
    threshold: Fraction | None
    hypothesis_holds: bool
    conclusion_holds: bool
    status: str
    witness: dict | None = None

    def as_dict(self) -> dict:
        return {
            "kind": "verdict",
            "group_label": self.group_label,
            "implication_id": self.implication_id,
            "hypothesis_value": str(self.hypothesis_value),
            "threshold": None if self.threshold is None else str(self.threshold),
            "hypothesis_holds": self.hypothesis_holds,
            "conclusion_holds": self.conclusion_holds,
            "status": self.status,
            "witness": self.witness,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Verdict":
        return cls(d["group_label"], d["implication_id"], Fraction(d["hypothesis_value"]),
                   None if d["threshold"] is None else Fraction(d["threshold"]),
                   d["hypothesis_holds"], d["conclusion_holds"], d["status"], d.get("witness"))


def _status(hyp: bool, concl: bool) -> str:
    if not hyp:
        return VACUOUS
    return CONFIRMED if concl else COUNTEREXAMPLE


def _smallest_primes_threshold(g: PermutationGroup) -> Fraction:
    ps = prime_divisors(g.order)
    if len(ps) < 2:
        # a group of prime-power order is nilpotent; use the two smallest primes overall
        return Fraction(2, 3)
    return _pq_bound(ps[0], ps[1])


def _split_threshold(p: int) -> Callable[[PermutationGroup], Fraction | None]:
    def threshold(g):
        others = [r for r in prime_divisors(g.order) if r != p]
        return _pq_bound(p, others[0]) if others else None
    return threshold


def splits_as_direct_product(g: PermutationGroup, p: int) -> bool:
    """``G = O_p(G) x O_p'(G)``.

    Equivalent to: the Sylow ``p``-subgroup ``P`` is normal and
    ``|P| |C_G(P)| / |Z(P)| = |G|``, i.e. ``G = P C_G(P)``; a normal
    ``p``-complement then exists inside ``C_G(P)``.
    """
    O = p_core(g, p)
    if O.order != p_part(g.order, p):
        return False
    C = centralizer_of_subgroup(g, O)
    Z = intersection(C, O)
    return O.order * C.order // Z.order == g.order


def sylow_in_radical(g: PermutationGroup, p: int) -> bool:
    return p_part(soluble_radical(g).order, p) == p_part(g.order, p)


_ALL = PrimeSet.all()
_ODD = PrimeSet.odd()
_TWO = PrimeSet.single(2)


def builtin_implications(primes: Iterable[int] = ()) -> list[ImplicationSpec]:
    """The registry; prime-indexed families are instantiated for ``primes``."""
    specs = [
        ImplicationSpec("nilpotent-smallest-primes",
                        "pr* above (p1+p2-1)/(p1 p2) for the two smallest prime divisors forces nilpotency",
                        _ALL, _ALL, _smallest_primes_threshold, is_nilpotent, "nilpotent"),
        ImplicationSpec("nilpotent-two-thirds", "pr* above 2/3 forces nilpotency",
                        _ALL, _ALL, lambda g: Fraction(2, 3), is_nilpotent, "nilpotent"),
        ImplicationSpec("soluble-two-fifths", "pr* above 2/5 forces solubility",
                        _ALL, _ALL, lambda g: Fraction(2, 5), is_soluble, "soluble"),
        ImplicationSpec("soluble-odd-pairs", "pr*(2', 2') above 7/15 forces solubility",
                        _ODD, _ODD, lambda g: Fraction(7, 15), is_soluble, "soluble"),
        ImplicationSpec("soluble-2-vs-odd", "pr*(2, 2') above 2/5 forces solubility",
                        _TWO, _ODD, lambda g: Fraction(2, 5), is_soluble, "soluble"),
        ImplicationSpec("soluble-2-vs-5prime", "pr*(2, 5') above 1/2 forces solubility",
                        _TWO, PrimeSet.complement(5), lambda g: Fraction(1, 2), is_soluble, "soluble"),
        ImplicationSpec("soluble-2-vs-7prime", "pr*(2, 7') above 5/12 forces solubility",
                        _TWO, PrimeSet.complement(7), lambda g: Fraction(5, 12), is_soluble, "soluble"),
        ImplicationSpec("sylow3-in-radical",
                        "pr*(3, 3') above 7/15 puts the Sylow 3-subgroups in the soluble radical",
                        PrimeSet.single(3), PrimeSet.complement(3), lambda g: Fraction(7, 15),
                        lambda g: sylow_in_radical(g, 3), "sylow-in-radical"),
    ]
    for p in sorted(set(primes)):
        if p != 2 and p not in (5, 7):
            specs.append(ImplicationSpec(
                f"soluble-2-vs-pprime[{p}]", f"pr*(2, {p}') above 2/5 forces solubility",
                _TWO, PrimeSet.complement(p), lambda g: Fraction(2, 5), is_soluble, "soluble",
                family="soluble-2-vs-pprime"))
        specs.append(ImplicationSpec(
            f"split-p-pprime[{p}]",
            f"pr*({p}, {p}') above ({p}+q-1)/({p}q), q the least other prime divisor, "
            f"splits off the Sylow {p}-subgroup as a direct factor",
            PrimeSet.single(p), PrimeSet.complement(p), _split_threshold(p),
            (lambda g, p=p: splits_as_direct_product(g, p)), "O_p x O_p'", family="split-p-pprime"))
        if p >= 5:
            specs.append(ImplicationSpec(
                f"sylowp-in-radical[{p}]",
                f"pr*({p}, {p}') above 2/5 puts the Sylow {p}-subgroups in the soluble radical",
                PrimeSet.single(p), PrimeSet.complement(p), lambda g: Fraction(2, 5),
                (lambda g, p=p: sylow_in_radical(g, p)), "sylow-in-radical",
                family="sylowp-in-radical"))
    return specs


def implications_for(g: PermutationGroup) -> list[ImplicationSpec]:
    return builtin_implications(prime_divisors(g.order))


IMPLICATION_FAMILIES = (
    "nilpotent-smallest-primes", "nilpotent-two-thirds", "soluble-two-fifths", "soluble-odd-pairs",
    "soluble-2-vs-odd", "soluble-2-vs-5prime", "soluble-2-vs-7prime", "soluble-2-vs-pprime",
    "split-p-pprime", "sylow3-in-radical", "sylowp-in-radical",
)


def family_of(implication_id: str) -> str:
    return implication_id.split("[", 1)[0]


def evaluate(g: PermutationGroup, label: str, spec: ImplicationSpec) -> Verdict:
    value, t, hyp = spec.hypothesis(g)
    concl = bool(spec.conclusion(g))
    rep = pr_star(g, spec.pi1, spec.pi2)
    witness = None
    if rep.per_pair:
        (p, q), best = min(rep.per_pair.items(), key=lambda kv: (kv[1].value, kv[0]))
        witness = {"pair": [p, q], "max_pr": str(best.value), "conclusion": spec.conclusion_name}
    return Verdict(label, spec.id, value, t, hyp, concl, _status(hyp, concl), witness)


@dataclass
class Skip:
    group_label: str
    reason: str

    def as_dict(self) -> dict:
        return {"kind": "skip", "group_label": self.group_label, "reason": self.reason}


@dataclass
class SuiteResult:
    verdicts: list[Verdict] = field(default_factory=list)
    skipped: list[Skip] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == COUNTEREXAMPLE]

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def confirmed_families(self) -> set[str]:
        return {family_of(v.implication_id) for v in self.verdicts if v.status == CONFIRMED}


def _evaluate_entry(label: str, expr: str, cfg: RunConfig,
                    specs: Sequence[ImplicationSpec] | None = None):
    with use_config(cfg):
        try:
            g = build_expression(expr)
            chosen = implications_for(g) if specs is None else specs
            return [evaluate(g, label, s) for s in chosen], None
        except (BudgetExceeded, SearchFailed) as exc:
            return [], Skip(label, f"{type(exc).__name__}: {exc}")


def _run_entries(fn, entries: Sequence[CorpusEntry], workers: int | None, *extra):
    cfg = get_config()
    workers = cfg.workers if workers is None else workers
    if workers > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(fn, e.label, e.expr, cfg, *extra) for e in entries]
            return [f.result() for f in futures]
    return [fn(e.label, e.expr, cfg, *extra) for e in entries]


def run_suite(corpus: Sequence[CorpusEntry], specs: Sequence[ImplicationSpec] | None = None,
              *, workers: int | None = None) -> SuiteResult:
    """Evaluate every implication on every corpus group.

    With ``specs=None`` each group gets the builtin registry instantiated for
    its prime divisors.  Custom specs (which may hold closures) run in-process.
    Results are ordered by ``(group_label, implication_id)``.
    """
    if specs is not None:
        workers = 1
    parts = _run_entries(_evaluate_entry, corpus, workers, specs)
    res = SuiteResult()
    for verdicts, skip in parts:
        res.verdicts.extend(verdicts)
        if skip is not None:
            res.skipped.append(skip)
    res.verdicts.sort(key=lambda v: (v.group_label, v.implication_id))
    res.skipped.sort(key=lambda s: s.group_label)
    return res


# ---------------------------------------------------------------------------
# sharpness


@dataclass
class SharpnessCheck:
    name: str
    group: str
    quantity: str
    expected: str
    actual: str
    ok: bool

    def as_dict(self) -> dict:
        return {"kind": "sharpness", **self.__dict__}


def _prstar_check(name, expr, pi1, pi2, expected) -> SharpnessCheck:
    g = build_expression(expr)
    v = pr_star(g, PrimeSet.parse(pi1), PrimeSet.parse(pi2)).value
    return SharpnessCheck(name, expr, f"pr*({pi1},{pi2})", str(expected), str(v), v == expected)


def _omega_check(name, expr, p, q, expected: set, bound: bool = False) -> SharpnessCheck:
    g = build_expression(expr)
    vals = omega_set(g, p, q).values
    if bound:
        (limit,) = expected
        ok = max(vals) <= limit
        return SharpnessCheck(name, expr, f"max pr(P{p},P{q})", f"<= {limit}", str(max(vals)), ok)
    ok = set(vals) == set(expected)
    return SharpnessCheck(name, expr, f"Omega({p},{q})", ",".join(map(str, sorted(expected))),
                          ",".join(map(str, vals)), ok)


def _predicate_check(name, expr, pred, expected: bool) -> SharpnessCheck:
    g = build_expression(expr)
    actual = pred(g)
    return SharpnessCheck(name, expr, pred.__name__, str(expected), str(actual), actual == expected)


def sharpness_witnesses(include_stretch: bool | None = None) -> list[SharpnessCheck]:
    """The extremal groups showing each threshold cannot be lowered."""
    F = Fraction
    checks = [
        _prstar_check("nilpotency threshold 2/3", "Sym(3)", "*", "*", F(2, 3)),
        _predicate_check("Sym(3) is not nilpotent", "Sym(3)", is_nilpotent, False),
        _prstar_check("solubility threshold 2/5", "Alt(5)", "*", "*", F(2, 5)),
        _predicate_check("Alt(5) is not soluble", "Alt(5)", is_soluble, False),
        _prstar_check("odd-pairs threshold 7/15", "Alt(5)", "2'", "2'", F(7, 15)),
        _prstar_check("2 vs odd threshold 2/5", "Alt(5)", "2", "2'", F(2, 5)),
        _prstar_check("2 vs 5' threshold 1/2", "Alt(5)", "2", "5'", F(1, 2)),
        _prstar_check("2 vs 3' threshold 2/5", "Alt(5)", "2", "3'", F(2, 5)),
        _prstar_check("2 vs 7' threshold 5/12", "PSL2(7)", "2", "7'", F(5, 12)),
        _predicate_check("PSL2(7) is not soluble", "PSL2(7)", is_soluble, False),
        _omega_check("PSL2(7) Sylow 2/3 value", "PSL2(7)", 2, 3, {F(5, 12)}),
        _omega_check("PSL2(8) Sylow 2/3 value", "PSL2(8)", 2, 3, {F(2, 9)}),
        _omega_check("Alt(6) Sylow 2/3 value", "Alt(6)", 2, 3, {F(2, 9)}),
    ]
    if include_stretch is None:
        include_stretch = get_config().include_stretch
    if include_stretch:
        with use_config(get_config(), verify_pr=False):
            checks.append(_omega_check("Sp62 Sylow 2/3 bound", "Sp62", 2, 3, {F(5, 288)}, bound=True))
    return checks


# ---------------------------------------------------------------------------
# the 2^s family


@dataclass
class InvolutionFamilyReport:
    s: int
    order: int
    fitting_index: int
    min_coprime_sylow_pr: Fraction
    sylow_pairs_checked: int
    hall_pairs: dict[int, tuple[Fraction, str]]

    @property
    def fitting_ok(self) -> bool:
        return self.fitting_index == 2 ** self.s

    @property
    def sylow_ok(self) -> bool:
        return self.min_coprime_sylow_pr >= Fraction(1, 2)

    @property
    def hall_ok(self) -> bool:
        return all(v >= Fraction(1, 2) for v, _ in self.hall_pairs.values())

    @property
    def example_claims_hold(self) -> bool:
        """The two properties the construction is meant to exhibit."""
        return self.fitting_ok and self.sylow_ok

    def as_dict(self) -> dict:
        return {
            "kind": "involution-family",
            "s": self.s,
            "order": self.order,
            "fitting_index": self.fitting_index,
            "fitting_ok": self.fitting_ok,
            "min_coprime_sylow_pr": str(self.min_coprime_sylow_pr),
            "sylow_pairs_checked": self.sylow_pairs_checked,
            "sylow_ok": self.sylow_ok,
            "hall_pairs": {str(p): {"max_pr": str(v), "method": m}
                           for p, (v, m) in sorted(self.hall_pairs.items())},
            "hall_ok": self.hall_ok,
        }


def _hall_pair_max(g: PermutationGroup, p: int) -> tuple[Fraction, str]:
    """Best ``pr(P, H)`` over Sylow ``p``-subgroups ``P`` and Hall ``p'``-subgroups ``H``.

    Hall subgroups of a soluble group form one conjugacy class, so every pair
    is conjugate to one with either side fixed; the shorter class is swept.
    """
    res = hall_p_complement_with_method(g, p)
    fixed, swept, _ = _sweep_lockstep(g, sylow_subgroup(g, p), res.group)
    Fr = fixed.elements_array()
    best = max((_pr_fixed(fixed, Fr, arr) for arr, _ in swept), default=Fraction(1))
    return best, res.method


def involution_family_report(s: int) -> InvolutionFamilyReport:
    if not 1 <= s <= 5:
        raise ValueError("the report covers s = 1..5")
    g = build_expression(f"InvolutionExample({s})")
    primes = prime_divisors(g.order)
    lowest, checked = Fraction(1), 0
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            om = omega_set(g, p, q)
            lowest = min(lowest, om.min)
            checked += om.conjugates_swept
    F = fitting_subgroup(g)
    hall = {p: _hall_pair_max(g, p) for p in primes}
    return InvolutionFamilyReport(s, g.order, g.order // F.order, lowest, checked, hall)


# ---------------------------------------------------------------------------
# coprime commuting


def coprime_commuting_check(g: PermutationGroup, P: PermutationGroup, Q: PermutationGroup,
                            p: int, q: int, eps, label: str = "") -> Verdict:
    """For a ``p``-subgroup ``P`` and ``q``-subgroup ``Q`` with ``pr(P, Q) >= eps``:
    if ``p > (2/eps)^ceil(6/eps)`` then (1) ``[P, Q] = 1`` when ``P`` normalizes
    ``Q``, and (2) ``Q`` has a normal subgroup ``Q0`` of index at most
    ``floor(2/eps)!`` centralized by ``P``.
    """
    eps = Fraction(eps)
    if p == q or P.order != p_part(P.order, p) or Q.order != p_part(Q.order, q):
        raise ValueError("P must be a p-group and Q a q-group for distinct primes")
    value = pr(P, Q)
    if value < eps:
        raise ValueError(f"pr(P, Q) = {value} is below eps = {eps}")
    bound = lemma_exponent_bound(eps)
    hyp = p > bound
    normalizes = all(conjugate_subgroup(Q, x) == Q for x in P.generators)
    part1 = value == 1 or not normalizes
    H0 = build_h0(Q, P, eps).H0
    Q0 = core(Q, H0)
    part2 = (Q.order // Q0.order <= math.factorial(math.floor(2 / eps))
             and pr(P, Q0) == 1)
    concl = part1 and part2
    return Verdict(label, "coprime-commuting", value, Fraction(bound), hyp, concl,
                   _status(hyp, concl),
                   {"p": p, "q": q, "eps": str(eps), "normalizes": normalizes,
                    "Q0_index": Q.order // Q0.order})


# ---------------------------------------------------------------------------
# sampled inequalities


@dataclass
class InequalitySample:
    kind: str
    group_label: str
    detail: str
    holds: bool

    def as_dict(self) -> dict:
        return {"kind": "inequality", "check": self.kind, "group_label": self.group_label,
                "detail": self.detail, "holds": self.holds}


def _normal_subgroups_of_interest(g: PermutationGroup) -> list[PermutationGroup]:
    cands = [fitting_subgroup(g), soluble_radical(g), derived_subgroup(g)]
    cands += upper_fitting_series(g).terms
    out = []
    for n in cands:
        if 1 < n.order < g.order and all(n != m for m in out):
            out.append(n)
    return out


def _sample_group(label: str, g: PermutationGroup, rng: random.Random) -> list[InequalitySample]:
    out: list[InequalitySample] = []

    def add(kind, detail, holds):
        out.append(InequalitySample(kind, label, detail, bool(holds)))

    primes = prime_divisors(g.order)
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            om = omega_set(g, p, q)
            pq = f"p={p},q={q}"
            if not has_element_of_order(g, p * q):
                f = pr_no_pq_formula(p_part(g.order, p), p_part(g.order, q))
                add("no-pq-formula", pq, om.values == [f])
            for v, w in om.witness_pairs.items():
                P, Q = w.P, w.Q
                d = f"{pq},pr={v}"
                add("symmetry", d, pr(P, Q) == pr(Q, P) == v)
                add("class-size-bound", d, v <= class_size_bound(P, Q))
                add("class-size-bound", d + ",swapped", v <= class_size_bound(Q, P))
                add("sylow-pair-bound", d, v <= sylow_pair_bound(P, Q, p, q))
                add("sylow-pair-bound", d + ",swapped", v <= sylow_pair_bound(Q, P, q, p))
                if v < 1:
                    add("commutator-bound", d, v <= Fraction(p + q - 1, p * q))
                x = g.random_element(rng)
                add("conjugation-invariance", d,
                    pr(conjugate_subgroup(P, x), conjugate_subgroup(Q, x)) == v)
                for H in (P, Q):
                    K = Q if H is P else P
                    for sub in (frattini_of_p_group(H, p if H is P else q),
                                generated_subgroup(g.degree, H.generators[:1])):
                        add("monotonicity", d + f",|H0|={sub.order},|H|={H.order}",
                            pr(sub, K) >= pr(H, K))
                for eps in sorted({v, v / 2}):
                    try:
                        r = build_h0(P, Q, eps)
                        add("h0-construction", d + f",eps={eps},index={r.index}", True)
                    except AssertionError as exc:
                        add("h0-construction", d + f",eps={eps}: {exc}", False)
    normals = _normal_subgroups_of_interest(g)
    for n in normals:
        if g.order // n.order > get_config().quotient_degree_budget:
            continue
        qmap = quotient_group(g, n)
        star = pr_star(g).value
        add("inheritance-quotient", f"|N|={n.order}", pr_star(qmap.image).value >= star)
        add("inheritance-normal", f"|N|={n.order}", pr_star(n).value >= star)
        for pis in (("2", "2'"), ("2'", "2'")):
            a, b = PrimeSet.parse(pis[0]), PrimeSet.parse(pis[1])
            s = pr_star(g, a, b).value
            add("inheritance-quotient", f"|N|={n.order},pi={pis}", pr_star(qmap.image, a, b).value >= s)
            add("inheritance-normal", f"|N|={n.order},pi={pis}", pr_star(n, a, b).value >= s)
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                P, Q = sylow_subgroup(g, p), sylow_subgroup(g, q)
                d = f"|N|={n.order},p={p},q={q}"
                add("quotient-inequality", d, check_quotient_inequality(g, n, P, Q))
                add("quotient-monotonicity", d, pr(qmap.image_of(P), qmap.image_of(Q)) >= pr(P, Q))
    return out


def inequality_suite(corpus: Sequence[CorpusEntry], *, max_order: int = 30000,
                     seed: int = 0) -> list[InequalitySample]:
    """Deterministic sample of the probability inequalities over the corpus."""
    out: list[InequalitySample] = []
    rng = random.Random(seed)
    groups = []
    for e in corpus:
        g = build_expression(e.expr)
        if g.order > max_order:
            continue
        groups.append((e.label, g))
        out.extend(_sample_group(e.label, g, rng))
    # product rule on pairs of small groups, Sylow 2 against Sylow 3
    small = [(lbl, g) for lbl, g in groups if g.order <= 200]
    for (l1, g1), (l2, g2) in zip(small, small[1:]):
        ok = check_product_rule(g1, g2, sylow_subgroup(g1, 2), sylow_subgroup(g2, 2),
                                sylow_subgroup(g1, 3), sylow_subgroup(g2, 3))
        out.append(InequalitySample("product-rule", f"{l1} x {l2}", "p=2,q=3", ok))
    grid = all(xy_inequality_check(x, y) for x in range(1, 101) for y in range(1, 101))
    out.append(InequalitySample("xy-grid", "-", "1 <= x, y <= 100", grid))
    return out


# ---------------------------------------------------------------------------
# Fitting tables


@dataclass
class FittingRow:
    label: str
    order: int
    pr_star: Fraction
    fitting_index: int
    f2_index: int
    soluble: bool

    def as_dict(self) -> dict:
        return {"kind": "fitting-row", "label": self.label, "order": self.order,
                "pr_star": str(self.pr_star), "fitting_index": self.fitting_index,
                "f2_index": self.f2_index, "soluble": self.soluble}


def fitting_table(corpus: Sequence[CorpusEntry]) -> list[FittingRow]:
    """``(pr*, |G:F|, |G:F_2|)`` per group: data for the bounded-index statements."""
    rows = []
    for e in corpus:
        g = build_expression(e.expr)
        series = upper_fitting_series(g)
        F1 = series.terms[0]
        F2 = series.terms[1] if len(series.terms) > 1 else F1
        rows.append(FittingRow(e.label, g.order, pr_star(g).value, g.order // F1.order,
                               g.order // F2.order, is_soluble(g)))
    return rows
