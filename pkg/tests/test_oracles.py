"""Three-valued reference semantics against the four-valued engine."""

import pytest

from blp import engine, oracles
from blp.bilattice import F, T, U
from blp.grounder import GroundAtom, ground
from blp.oracles import (
    ConventionalityError,
    EnumerationCapError,
    ThreeValuation,
    enumerate_stable_models,
    gl_transform,
    kripke_kleene,
    well_founded,
)
from blp.syntax import parse_program


def by_name(tv):
    return {str(a): tv[a] for a in tv.base}


def three(gp, mapping):
    ints = {"F": -1, "U": 0, "T": 1}
    return ThreeValuation(
        gp.base, (ints[mapping[str(a)]] for a in gp.base.atoms)
    )


def test_gl_transform_two_steps(suspect_gp):
    v = three(
        suspect_gp,
        {"suspect(john)": "U", "innocent(john)": "F", "free(john)": "T", "charge(john)": "U"},
    )
    out = gl_transform(suspect_gp, v)
    assert by_name(out) == {
        "suspect(john)": T,
        "innocent(john)": F,
        "free(john)": F,
        "charge(john)": T,
    }


def test_gl_transform_constant_on_negation_free_programs():
    gp = ground(parse_program("a <- b | c. b. c <- #f."))
    seen = set()
    import itertools

    for combo in itertools.product((-1, 0, 1), repeat=len(gp.base)):
        seen.add(gl_transform(gp, ThreeValuation(gp.base, combo)))
    assert len(seen) == 1


def test_well_founded_is_gl_fixpoint(suspect_gp):
    wf = well_founded(suspect_gp)
    assert gl_transform(suspect_gp, wf) == wf


def test_well_founded_suspect_row(suspect_gp):
    assert by_name(well_founded(suspect_gp)) == {
        "suspect(john)": T,
        "innocent(john)": F,
        "free(john)": F,
        "charge(john)": T,
    }


def test_well_founded_default_negation():
    gp = ground(parse_program("a <- ~b. b <- #f."))
    wf = well_founded(gp)
    assert wf[GroundAtom("b")] is F and wf[GroundAtom("a")] is T
    gp2 = ground(parse_program("a <- ~b. c <- b."))
    wf2 = well_founded(gp2)
    assert wf2[GroundAtom("b")] is F and wf2[GroundAtom("a")] is T


def test_kripke_kleene_suspect_row(suspect_gp):
    assert by_name(kripke_kleene(suspect_gp)) == {
        "suspect(john)": T,
        "innocent(john)": U,
        "free(john)": U,
        "charge(john)": U,
    }


def test_kripke_kleene_self_loop():
    gp = ground(parse_program("a <- a."))
    assert kripke_kleene(gp)[GroundAtom("a")] is U


def test_oracles_match_engine_on_corpus(conventional_corpus):
    for gp in conventional_corpus:
        assert well_founded(gp).to_valuation() == engine.fix_u(gp, F)
        assert kripke_kleene(gp).to_valuation() == engine.fix_u(gp, U)


def test_kripke_kleene_below_well_founded(conventional_corpus):
    for gp in conventional_corpus:
        assert kripke_kleene(gp).to_valuation().leq_k(
            well_founded(gp).to_valuation()
        )


def test_stable_models_suspect(suspect_gp):
    models = enumerate_stable_models(suspect_gp)
    assert len(models) == 1
    assert models[0] == well_founded(suspect_gp)


def test_stable_models_even_loop():
    gp = ground(parse_program("a <- ~b. b <- ~a."))
    models = enumerate_stable_models(gp)
    rows = sorted(
        (str(m[GroundAtom("a")]), str(m[GroundAtom("b")])) for m in models
    )
    assert rows == [("F", "T"), ("T", "F"), ("U", "U")]
    wf = well_founded(gp)
    assert wf in models
    assert all(wf.to_valuation().leq_k(m.to_valuation()) for m in models)


def test_stable_models_empty_program():
    gp = ground(parse_program(""))
    models = enumerate_stable_models(gp)
    assert len(models) == 1
    assert models[0].ints == ()


def test_enumeration_cap():
    clauses = " ".join(f"p{i}." for i in range(11))
    gp = ground(parse_program(clauses))
    with pytest.raises(EnumerationCapError):
        enumerate_stable_models(gp)
    assert len(enumerate_stable_models(gp, cap=11)) == 1


def test_non_conventional_inputs_rejected(mixed_ops_gp):
    v = ThreeValuation.all_unknown(mixed_ops_gp.base)
    with pytest.raises(ConventionalityError):
        gl_transform(mixed_ops_gp, v)
    with pytest.raises(ConventionalityError):
        well_founded(mixed_ops_gp)
    with pytest.raises(ConventionalityError):
        kripke_kleene(mixed_ops_gp)
    with pytest.raises(ConventionalityError):
        enumerate_stable_models(mixed_ops_gp)


def test_three_valuation_embedding_rejects_inconsistency(excluded_middle_gp):
    from blp.valuation import const_valuation
    from blp.bilattice import I

    with pytest.raises(ValueError):
        ThreeValuation.from_valuation(
            const_valuation(excluded_middle_gp.base, I)
        )
