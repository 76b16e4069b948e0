"""The fixpoint engine.

Everything is built from one two-argument consequence operator over a
ground program: rule heads take the contrajoin value of their body
(positive atoms from the first argument, negated atoms from the
second), atoms heading no rule take the default value alpha.  Fixing
the second argument and iterating from the all-alpha valuation yields
the stability closure; iterating *that* from the all-U (respectively
all-I) valuation reaches its knowledge-least and knowledge-greatest
fixpoints, and iterating its square from all-F and all-T reaches the
extreme oscillation pair under the truth ordering.

The four extremal fixpoints determine each other through the bilattice
operations; semantics() recomputes those identities after every run and
refuses to return a result that violates them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Tuple

from .bilattice import F, I, T, TruthValue, U, leq_t
from .grounder import GroundProgram
from .valuation import BaseMismatchError, Valuation, const_valuation, contrajoin_eval

Alpha = TruthValue


class InternalInvariantError(RuntimeError):
    """An algebraic invariant the engine relies on failed.

    Signals a bug in the engine (or a corrupted ground program), never
    bad user input; the CLI maps it to exit status 2.
    """


def immediate_consequence(
    gp: GroundProgram, alpha: Alpha, v: Valuation, w: Valuation
) -> Valuation:
    """One step: heads get their body's contrajoin value, non-heads get alpha."""
    base = gp.base
    if v.base != base or w.base != base:
        raise BaseMismatchError("valuations do not match the program's base")
    rules = gp.rules
    values = []
    for atom in base.atoms:
        body = rules.get(atom)
        values.append(alpha if body is None else contrajoin_eval(v, w, body))
    return Valuation(base, values)


def _iterate(step, start: Valuation, max_apps: int, label: str):
    cur = start
    for n in range(max_apps):
        nxt = step(cur)
        if nxt == cur:
            return cur, n + 1
        cur = nxt
    raise InternalInvariantError(
        f"{label} did not converge within {max_apps} applications "
        "(non-monotone update?)"
    )


def _bound(gp: GroundProgram) -> int:
    # Each atom can move at most twice along a monotone chain in FOUR.
    return 2 * len(gp.base) + 1


def _stability_steps(gp: GroundProgram, alpha: Alpha, w: Valuation):
    return _iterate(
        lambda x: immediate_consequence(gp, alpha, x, w),
        const_valuation(gp.base, alpha),
        _bound(gp),
        "inner consequence iteration",
    )


def stability(gp: GroundProgram, alpha: Alpha, w: Valuation) -> Valuation:
    """Fix the negated atoms by w, then close the positive consequences:
    iterate the consequence operator from the all-alpha valuation."""
    return _stability_steps(gp, alpha, w)[0]


def _fix_from(gp: GroundProgram, alpha: Alpha, start: TruthValue):
    inner_total = 0

    def step(x: Valuation) -> Valuation:
        nonlocal inner_total
        val, n = _stability_steps(gp, alpha, x)
        inner_total += n
        return val

    val, outer = _iterate(
        step, const_valuation(gp.base, start), _bound(gp), "outer fixpoint iteration"
    )
    return val, outer, inner_total


def fix_u(gp: GroundProgram, alpha: Alpha) -> Valuation:
    """Knowledge-least fixpoint of the stability closure."""
    return _fix_from(gp, alpha, U)[0]


def fix_i(gp: GroundProgram, alpha: Alpha) -> Valuation:
    """Knowledge-greatest fixpoint of the stability closure."""
    return _fix_from(gp, alpha, I)[0]


def _oscillation_pair(gp: GroundProgram, alpha: Alpha):
    inner_total = 0

    def squared(x: Valuation) -> Valuation:
        nonlocal inner_total
        mid, n1 = _stability_steps(gp, alpha, x)
        out, n2 = _stability_steps(gp, alpha, mid)
        inner_total += n1 + n2
        return out

    low, outer_low = _iterate(
        squared, const_valuation(gp.base, F), _bound(gp), "squared-map iteration"
    )
    inner_low = inner_total
    inner_total = 0
    high, outer_high = _iterate(
        squared, const_valuation(gp.base, T), _bound(gp), "squared-map iteration"
    )
    inner_high = inner_total
    if stability(gp, alpha, low) != high or stability(gp, alpha, high) != low:
        raise InternalInvariantError(
            "extreme fixpoints of the squared map fail to oscillate"
        )
    return low, high, (outer_low, inner_low), (outer_high, inner_high)


def fix_f_t(gp: GroundProgram, alpha: Alpha) -> Tuple[Valuation, Valuation]:
    """Truth-extreme oscillation pair of the stability closure: the
    least and greatest fixpoints of its square under the truth ordering."""
    low, high, _, _ = _oscillation_pair(gp, alpha)
    return low, high


@dataclass(frozen=True)
class SemanticsResult:
    """The four extremal fixpoints for one default value alpha.

    iteration_counts maps each fixpoint name to (outer applications,
    total inner applications).
    """

    alpha: Alpha
    fix_u: Valuation
    fix_i: Valuation
    fix_f: Valuation
    fix_t: Valuation
    iteration_counts: Mapping[str, tuple]


def semantics(gp: GroundProgram, alpha: Alpha, self_check: bool = True) -> SemanticsResult:
    """Compute all four extremal fixpoints; verify the decomposition
    identities connecting them unless self_check is disabled."""
    ku, outer_u, inner_u = _fix_from(gp, alpha, U)
    ki, outer_i, inner_i = _fix_from(gp, alpha, I)
    low, high, counts_low, counts_high = _oscillation_pair(gp, alpha)
    result = SemanticsResult(
        alpha=alpha,
        fix_u=ku,
        fix_i=ki,
        fix_f=low,
        fix_t=high,
        iteration_counts={
            "fix_u": (outer_u, inner_u),
            "fix_i": (outer_i, inner_i),
            "fix_f": counts_low,
            "fix_t": counts_high,
        },
    )
    if self_check:
        _check_decomposition(result)
    return result


def _check_decomposition(r: SemanticsResult) -> None:
    checks = [
        ("knowledge-least = consensus of the oscillation pair",
         r.fix_u == r.fix_f.meet_k(r.fix_t)),
        ("knowledge-greatest = gullibility of the oscillation pair",
         r.fix_i == r.fix_f.join_k(r.fix_t)),
        ("truth-least oscillation = conjunction of the knowledge extremes",
         r.fix_f == r.fix_u.meet_t(r.fix_i)),
        ("truth-greatest oscillation = disjunction of the knowledge extremes",
         r.fix_t == r.fix_u.join_t(r.fix_i)),
        ("knowledge extremes ordered", r.fix_u.leq_k(r.fix_i)),
        ("oscillation pair ordered", r.fix_f.leq_t(r.fix_t)),
    ]
    bad = [name for name, ok in checks if not ok]
    if bad:
        raise InternalInvariantError(
            "fixpoint decomposition identities violated: " + "; ".join(bad)
        )


def is_alpha_fixed_model(gp: GroundProgram, alpha: Alpha, v: Valuation) -> bool:
    """True when v is a fixpoint of the stability closure for this alpha."""
    return stability(gp, alpha, v) == v


def is_model(gp: GroundProgram, v: Valuation, reverse: bool = False) -> bool:
    """Rule-wise truth bound: by default checks head <=t body for every
    rule; reverse=True checks body <=t head instead."""
    for atom, body in gp.rules.items():
        head_val = v[atom]
        body_val = contrajoin_eval(v, v, body)
        ok = leq_t(body_val, head_val) if reverse else leq_t(head_val, body_val)
        if not ok:
            return False
    return True


@dataclass(frozen=True)
class ConsensusResult:
    """The consensus of the pessimistic and optimistic semantics, with
    flags saying how model-like the combination turned out to be."""

    valuation: Valuation
    fixed_under_pessimistic: bool
    fixed_under_optimistic: bool
    rule_bound_holds: bool


def consensus_semantics(gp: GroundProgram) -> ConsensusResult:
    """Pointwise consensus of the pessimistic- and optimistic-default
    knowledge-least fixpoints."""
    pess = fix_u(gp, F)
    opt = fix_u(gp, T)
    val = pess.meet_k(opt)
    return ConsensusResult(
        valuation=val,
        fixed_under_pessimistic=is_alpha_fixed_model(gp, F, val),
        fixed_under_optimistic=is_alpha_fixed_model(gp, T, val),
        rule_bound_holds=is_model(gp, val),
    )


@dataclass(frozen=True)
class ComparisonReport:
    """Side-by-side knowledge-least fixpoints for all four defaults plus
    the consensus, and every pointwise ordering that holds among them."""

    valuations: Mapping[str, Valuation]
    relations: tuple
    consensus: ConsensusResult


_COMPARE_NAMES = ("F", "T", "U", "I", "consensus")


def compare_semantics(gp: GroundProgram) -> ComparisonReport:
    vals = {str(alpha): fix_u(gp, alpha) for alpha in (F, T, U, I)}
    cons = consensus_semantics(gp)
    vals["consensus"] = cons.valuation
    relations = []
    for n1 in _COMPARE_NAMES:
        for n2 in _COMPARE_NAMES:
            if n1 == n2:
                continue
            if vals[n1].leq_k(vals[n2]):
                relations.append(f"{n1} <=k {n2}")
            if vals[n1].leq_t(vals[n2]):
                relations.append(f"{n1} <=t {n2}")
    skeptical = vals["U"]
    if not (
        skeptical.leq_k(vals["F"])
        and skeptical.leq_k(vals["T"])
        and skeptical.leq_k(vals["consensus"])
    ):
        raise InternalInvariantError(
            "the skeptical semantics must sit below the pessimistic, optimistic, "
            "and consensus semantics in the knowledge ordering"
        )
    return ComparisonReport(vals, tuple(relations), cons)
