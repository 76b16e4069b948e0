"""Classical three-valued reference semantics for conventional programs.

Implements the extended Gelfond-Lifschitz transform (and with it the
well-founded semantics and brute-force three-valued stable models) and
the Kripke-Kleene semantics.  These are cross-validation oracles for
the four-valued engine: they share the parser and grounder but none of
the engine's evaluation code.  Truth values live here as the integers
-1, 0, 1 with Kleene's strong tables (negation is arithmetic negation,
conjunction min, disjunction max).
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from .bilattice import F, T, TruthValue, U
from .grounder import Base, GroundAtom, GroundProgram
from .syntax import Atom, Binary, BinOp, Formula, NegAtom, TruthConst
from .valuation import BaseMismatchError, Valuation

_F3, _U3, _T3 = -1, 0, 1
_TO_TV = {_F3: F, _U3: U, _T3: T}
_OF_TV = {F: _F3, U: _U3, T: _T3}


class ConventionalityError(ValueError):
    """The program uses constructs outside the conventional fragment."""


class EnumerationCapError(ValueError):
    """The base is too large for brute-force model enumeration."""


class ThreeValuation:
    """Total map Base -> {F, U, T}; embeds into the four-valued space."""

    __slots__ = ("base", "ints")

    def __init__(self, base: Base, ints: Iterable[int]) -> None:
        self.base = base
        self.ints = tuple(ints)
        if len(self.ints) != len(base):
            raise ValueError(f"expected {len(base)} values, got {len(self.ints)}")
        if any(i not in (_F3, _U3, _T3) for i in self.ints):
            raise ValueError("three-valued valuations take values in {F, U, T}")

    @classmethod
    def all_unknown(cls, base: Base) -> "ThreeValuation":
        return cls(base, (_U3,) * len(base))

    @classmethod
    def from_valuation(cls, v: Valuation) -> "ThreeValuation":
        try:
            return cls(v.base, (_OF_TV[val] for val in v.values))
        except KeyError:
            raise ValueError(
                "valuation contains I and has no three-valued counterpart"
            ) from None

    def __getitem__(self, atom) -> TruthValue:
        try:
            return _TO_TV[self.ints[self.base.index(atom)]]
        except KeyError:
            raise BaseMismatchError(f"atom {atom} is outside the base") from None

    def to_valuation(self) -> Valuation:
        return Valuation(self.base, tuple(_TO_TV[i] for i in self.ints))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ThreeValuation)
            and self.base == other.base
            and self.ints == other.ints
        )

    def __hash__(self) -> int:
        return hash((self.base, self.ints))

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}={_TO_TV[i]}" for a, i in zip(self.base.atoms, self.ints))
        return f"<ThreeValuation {inner}>"


def _require_conventional(gp: GroundProgram) -> None:
    for body in gp.rules.values():
        _check_body(body)


def _check_body(f: Formula) -> None:
    if isinstance(f, (Atom, NegAtom)):
        return
    if isinstance(f, TruthConst):
        if f.value not in (T, F):
            raise ConventionalityError(
                f"truth constant {f.value} is outside the conventional fragment"
            )
        return
    if isinstance(f, Binary):
        if f.op in (BinOp.CONSENSUS, BinOp.GULLIBILITY):
            raise ConventionalityError(
                f"connective {f.op.value!r} is outside the conventional fragment"
            )
        _check_body(f.left)
        _check_body(f.right)
        return
    raise ConventionalityError(
        f"{type(f).__name__} node is outside the conventional fragment"
    )


def _freeze_negatives(f: Formula, v: ThreeValuation) -> Formula:
    # Step one of the transform: negated atoms become constants, negated.
    if isinstance(f, NegAtom):
        val = v.ints[v.base.index(GroundAtom(f.pred, tuple(t.name for t in f.args)))]
        return TruthConst(_TO_TV[-val])
    if isinstance(f, Binary):
        return Binary(f.op, _freeze_negatives(f.left, v), _freeze_negatives(f.right, v))
    return f


def _eval_positive(f: Formula, lookup) -> int:
    if isinstance(f, Atom):
        return lookup(f)
    if isinstance(f, TruthConst):
        return _OF_TV[f.value]
    if isinstance(f, Binary):
        left = _eval_positive(f.left, lookup)
        right = _eval_positive(f.right, lookup)
        return min(left, right) if f.op == BinOp.AND else max(left, right)
    raise ConventionalityError(f"unexpected {type(f).__name__} in positive body")


def _eval_kleene(f: Formula, get: dict) -> int:
    if isinstance(f, Atom):
        return get[f.pred, tuple(t.name for t in f.args)]
    if isinstance(f, NegAtom):
        return -get[f.pred, tuple(t.name for t in f.args)]
    if isinstance(f, TruthConst):
        return _OF_TV[f.value]
    if isinstance(f, Binary):
        left = _eval_kleene(f.left, get)
        right = _eval_kleene(f.right, get)
        return min(left, right) if f.op == BinOp.AND else max(left, right)
    raise ConventionalityError(f"unexpected {type(f).__name__} in body")


def gl_transform(gp: GroundProgram, v: ThreeValuation) -> ThreeValuation:
    """Extended Gelfond-Lifschitz transform: freeze negated atoms to their
    values under v, then take the truth-least fixpoint of the positive
    consequence operator (non-heads pinned false)."""
    _require_conventional(gp)
    if v.base != gp.base:
        raise BaseMismatchError("valuation does not match the program's base")
    positive = {head: _freeze_negatives(body, v) for head, body in gp.rules.items()}

    base = gp.base
    cur = {atom: _F3 for atom in base.atoms}

    def lookup(node: Atom) -> int:
        return cur[GroundAtom(node.pred, tuple(t.name for t in node.args))]

    for _ in range(2 * len(base) + 1):
        nxt = {
            atom: _eval_positive(positive[atom], lookup) if atom in positive else _F3
            for atom in base.atoms
        }
        if nxt == cur:
            return ThreeValuation(base, (cur[a] for a in base.atoms))
        cur = nxt
    raise RuntimeError("positive consequence iteration failed to converge")


def well_founded(gp: GroundProgram) -> ThreeValuation:
    """Least fixpoint of the transform, reached from the all-unknown
    valuation; this is the well-founded semantics."""
    _require_conventional(gp)
    cur = ThreeValuation.all_unknown(gp.base)
    for _ in range(2 * len(gp.base) + 1):
        nxt = gl_transform(gp, cur)
        if nxt == cur:
            return cur
        cur = nxt
    raise RuntimeError("well-founded iteration failed to converge")


def kripke_kleene(gp: GroundProgram) -> ThreeValuation:
    """Knowledge-least fixpoint of the single-valuation consequence
    operator: heads take their body's Kleene value, non-heads stay unknown."""
    _require_conventional(gp)
    base = gp.base
    cur = {(a.pred, a.args): _U3 for a in base.atoms}
    rules = [(atom, body) for atom, body in gp.rules.items()]
    for _ in range(2 * len(base) + 1):
        nxt = {(a.pred, a.args): _U3 for a in base.atoms}
        for atom, body in rules:
            nxt[atom.pred, atom.args] = _eval_kleene(body, cur)
        if nxt == cur:
            return ThreeValuation(base, (cur[a.pred, a.args] for a in base.atoms))
        cur = nxt
    raise RuntimeError("Kripke-Kleene iteration failed to converge")


def enumerate_stable_models(gp: GroundProgram, cap: int = 10) -> list:
    """All three-valued stable models (fixpoints of the transform), by
    brute force over the 3^n candidate valuations."""
    _require_conventional(gp)
    n = len(gp.base)
    if n > cap:
        raise EnumerationCapError(
            f"base has {n} atoms; enumeration is capped at {cap}"
        )
    models = []
    for combo in product((_F3, _U3, _T3), repeat=n):
        candidate = ThreeValuation(gp.base, combo)
        if gl_transform(gp, candidate) == candidate:
            models.append(candidate)
    return models
