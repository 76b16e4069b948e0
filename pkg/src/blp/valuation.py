"""Valuations: total maps from ground atoms to FOUR.

Valuations carry the two pointwise orderings and are the carrier of all
fixpoint computation.  Formula evaluation comes in two independently
coded flavors: contrajoin_eval reads a formula against a pair of
valuations (positive atoms from the first, negated atoms from the
second), while pseudo_eval reads it against set-pair encodings using
(in-true-set, in-false-set) bit logic.  The two must agree everywhere;
the test suite holds them against each other.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .bilattice import (
    F,
    I,
    T,
    TruthValue,
    U,
    know_join,
    know_meet,
    leq_k,
    leq_t,
    negation,
    truth_join,
    truth_meet,
)
from .grounder import Base, GroundAtom
from .syntax import (
    Atom,
    Binary,
    BinOp,
    Const,
    Equal,
    Formula,
    NegAtom,
    NotEqual,
    Quantified,
    TruthConst,
)


class BaseMismatchError(ValueError):
    """Valuations (or a valuation and a formula) disagree on the atom universe."""


class Valuation:
    """Immutable total map Base -> FOUR, stored as a dense value tuple."""

    __slots__ = ("base", "values")

    def __init__(self, base: Base, values: Iterable[TruthValue]) -> None:
        self.base = base
        self.values = tuple(values)
        if len(self.values) != len(base):
            raise ValueError(
                f"expected {len(base)} values, got {len(self.values)}"
            )

    @classmethod
    def constant(cls, base: Base, alpha: TruthValue) -> "Valuation":
        return cls(base, (alpha,) * len(base))

    @classmethod
    def from_mapping(cls, base: Base, mapping: Mapping) -> "Valuation":
        for atom in mapping:
            if atom not in base:
                raise ValueError(f"unknown atom {atom}")
        values = []
        for atom in base.atoms:
            if atom not in mapping:
                raise ValueError(f"no value given for atom {atom}")
            values.append(mapping[atom])
        return cls(base, values)

    def __getitem__(self, atom: GroundAtom) -> TruthValue:
        try:
            return self.values[self.base.index(atom)]
        except KeyError:
            raise BaseMismatchError(f"atom {atom} is outside the base") from None

    def _check(self, other: "Valuation") -> None:
        if self.base != other.base:
            raise BaseMismatchError("valuations are over different bases")

    def leq_t(self, other: "Valuation") -> bool:
        self._check(other)
        return all(leq_t(a, b) for a, b in zip(self.values, other.values))

    def leq_k(self, other: "Valuation") -> bool:
        self._check(other)
        return all(leq_k(a, b) for a, b in zip(self.values, other.values))

    def _pointwise(self, other, op) -> "Valuation":
        self._check(other)
        return Valuation(self.base, tuple(map(op, self.values, other.values)))

    def meet_t(self, other: "Valuation") -> "Valuation":
        return self._pointwise(other, truth_meet)

    def join_t(self, other: "Valuation") -> "Valuation":
        return self._pointwise(other, truth_join)

    def meet_k(self, other: "Valuation") -> "Valuation":
        return self._pointwise(other, know_meet)

    def join_k(self, other: "Valuation") -> "Valuation":
        return self._pointwise(other, know_join)

    def negate(self) -> "Valuation":
        return Valuation(self.base, tuple(negation(v) for v in self.values))

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, Valuation)
            and self.base == other.base
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.base, self.values))

    def items(self):
        return zip(self.base.atoms, self.values)

    def to_lines(self) -> str:
        """One atom<TAB>value line per atom, lexicographically sorted."""
        return "".join(f"{a}\t{v}\n" for a, v in self.items())

    def to_json_dict(self) -> dict:
        return {str(a): str(v) for a, v in self.items()}

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}={v}" for a, v in self.items())
        return f"<Valuation {inner}>"


def const_valuation(base: Base, alpha: TruthValue) -> Valuation:
    """The valuation assigning alpha to every atom of the base."""
    return Valuation.constant(base, alpha)


class Interpretation:
    """(true-set, false-set) encoding: in both means I, in neither means U."""

    __slots__ = ("base", "true_set", "false_set")

    def __init__(self, base: Base, true_set, false_set) -> None:
        self.base = base
        self.true_set = frozenset(true_set)
        self.false_set = frozenset(false_set)
        stray = [a for a in self.true_set | self.false_set if a not in base]
        if stray:
            raise ValueError(f"atoms outside the base: {sorted(map(str, stray))}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Interpretation)
            and self.base == other.base
            and self.true_set == other.true_set
            and self.false_set == other.false_set
        )

    def __hash__(self) -> int:
        return hash((self.base, self.true_set, self.false_set))

    def __repr__(self) -> str:
        t = sorted(map(str, self.true_set))
        f = sorted(map(str, self.false_set))
        return f"<Interpretation true={t} false={f}>"


class PseudoInterpretation:
    """A pair of interpretations: pos feeds positive literals, neg negated ones."""

    __slots__ = ("pos", "neg")

    def __init__(self, pos: Interpretation, neg: Interpretation) -> None:
        if pos.base != neg.base:
            raise BaseMismatchError("pseudo-interpretation halves differ in base")
        self.pos = pos
        self.neg = neg


def to_interpretation(v: Valuation) -> Interpretation:
    true_set = [a for a, val in v.items() if val in (T, I)]
    false_set = [a for a, val in v.items() if val in (F, I)]
    return Interpretation(v.base, true_set, false_set)


def from_interpretation(i: Interpretation) -> Valuation:
    values = []
    for atom in i.base.atoms:
        t = atom in i.true_set
        f = atom in i.false_set
        values.append(I if t and f else T if t else F if f else U)
    return Valuation(i.base, values)


_BINOP_FN = {
    BinOp.AND: truth_meet,
    BinOp.OR: truth_join,
    BinOp.CONSENSUS: know_meet,
    BinOp.GULLIBILITY: know_join,
}


def _node_atom(node) -> GroundAtom:
    for t in node.args:
        if not isinstance(t, Const):
            raise ValueError(f"non-ground atom {node.pred}: variable {t.name}")
    return GroundAtom(node.pred, tuple(t.name for t in node.args))


def contrajoin_eval(v: Valuation, w: Valuation, body: Formula) -> TruthValue:
    """Evaluate a ground formula reading positive atoms from v and
    negated atoms, negated, from w; truth constants are themselves."""
    if v.base != w.base:
        raise BaseMismatchError("contrajoin requires both valuations over one base")
    return _cj(v, w, body)


def _cj(v, w, f) -> TruthValue:
    if isinstance(f, Atom):
        return v[_node_atom(f)]
    if isinstance(f, NegAtom):
        return negation(w[_node_atom(f)])
    if isinstance(f, Binary):
        return _BINOP_FN[f.op](_cj(v, w, f.left), _cj(v, w, f.right))
    if isinstance(f, TruthConst):
        return f.value
    if isinstance(f, Equal):
        return T if _const_name(f.left) == _const_name(f.right) else F
    if isinstance(f, NotEqual):
        return F if _const_name(f.left) == _const_name(f.right) else T
    if isinstance(f, Quantified):
        raise ValueError("quantifiers must be expanded by grounding before evaluation")
    raise TypeError(f"cannot evaluate {type(f).__name__} node")


def _const_name(t) -> str:
    if not isinstance(t, Const):
        raise ValueError(f"unresolved variable {t.name} in equality")
    return t.name


# pseudo_eval works on (in-true-set, in-false-set) bit pairs end to end and
# converts to a TruthValue only at the top; it shares no tables with _cj.
_CONST_BITS = {T: (True, False), F: (False, True), U: (False, False), I: (True, True)}


def pseudo_eval(j: PseudoInterpretation, body: Formula) -> TruthValue:
    """Evaluate a ground formula against a pseudo-interpretation:
    positive literals against j.pos, negated atoms against j.neg."""
    t, f = _pe(j, body)
    return I if t and f else T if t else F if f else U


def _pe(j, f):
    if isinstance(f, Atom):
        return _atom_bits(j.pos, _node_atom(f))
    if isinstance(f, NegAtom):
        t, fl = _atom_bits(j.neg, _node_atom(f))
        return (fl, t)
    if isinstance(f, Binary):
        t1, f1 = _pe(j, f.left)
        t2, f2 = _pe(j, f.right)
        if f.op == BinOp.AND:
            return (t1 and t2, f1 or f2)
        if f.op == BinOp.OR:
            return (t1 or t2, f1 and f2)
        if f.op == BinOp.CONSENSUS:
            return (t1 and t2, f1 and f2)
        return (t1 or t2, f1 or f2)
    if isinstance(f, TruthConst):
        return _CONST_BITS[f.value]
    if isinstance(f, Equal):
        same = _const_name(f.left) == _const_name(f.right)
        return (same, not same)
    if isinstance(f, NotEqual):
        same = _const_name(f.left) == _const_name(f.right)
        return (not same, same)
    if isinstance(f, Quantified):
        raise ValueError("quantifiers must be expanded by grounding before evaluation")
    raise TypeError(f"cannot evaluate {type(f).__name__} node")


def _atom_bits(interp: Interpretation, atom: GroundAtom):
    if atom not in interp.base:
        raise BaseMismatchError(f"atom {atom} is outside the base")
    return (atom in interp.true_set, atom in interp.false_set)
