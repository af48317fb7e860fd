import pytest

from twistkit.liealg import (
    EmbeddingRecipe,
    LieAlgebraDef,
    LieAlgebraError,
    build_abstract,
    build_concrete,
    build_embedding,
    dualize,
    embedding_check,
    identity_recipe,
    jacobi_check,
)
from twistkit.scalars import I, ONE, gr

from oracles import (
    iso_matrices,
    isu_matrices,
    poincare_matrices,
    structure_constants_from_matrices,
)

L = build_abstract("L", 1, 1, I)


def br(alg, x, y):
    return alg.render(alg.bracket(alg.gen(x), alg.gen(y)))


def test_abstract_brackets():
    assert br(L, "A", "B") == "E"
    assert br(L, "J", "B") == "i*B"
    assert br(L, "J", "A") == "-i*A"
    assert br(L, "H", "E") == "E"
    assert br(L, "E", "A") == "0" and br(L, "E", "B") == "0"
    Lc = build_abstract("Lc", 2 * I, 1)
    assert br(Lc, "H", "A") == "0"
    assert Lc.symbols == ("H", "E", "A", "B")
    assert L.symbols == ("J", "H", "E", "A", "B")


def test_antisymmetry():
    assert br(L, "B", "A") == "-E"
    assert br(L, "A", "A") == "0"


def test_gradings():
    assert dict(zip(L.symbols, L.zdegrees)) == {"J": 0, "H": 0, "E": 1, "A": 0, "B": 1}
    Lp = build_abstract("Lprime", 1, 1, I)
    assert dict(zip(Lp.symbols, Lp.zdegrees)) == {"J": 0, "H": 0, "E": 1, "A": 1, "B": 0}


def test_dual_brackets_follow_the_isomorphism():
    # A -> -B, B -> A carries L(γ,δ,μ) onto L'(γ,δ,μ)
    g, d, m = gr(3), gr("1/2"), gr("2i")
    src, dst = build_abstract("L", g, d, m), build_abstract("Lprime", g, d, m)
    phi = {"J": {dst.index("J"): ONE}, "H": {dst.index("H"): ONE},
           "E": {dst.index("E"): ONE}, "A": {dst.index("B"): -ONE},
           "B": {dst.index("A"): ONE}}
    assert embedding_check(EmbeddingRecipe(src, dst, phi)).passed


@pytest.mark.parametrize("params", [(0, 1, I), (1, 0, I), (1, 1, 0)])
def test_zero_parameters_rejected(params):
    with pytest.raises(LieAlgebraError):
        build_abstract("L", *params)


def test_concrete_examples():
    poi = build_concrete("poincare")
    assert poi.dim == 10
    assert br(poi, "P_1", "K_1") == "P_t"
    sch = build_concrete("schrodinger", 2)
    assert br(sch, "P_1", "G_1") == "M"
    assert br(sch, "P_1", "G_2") == "0"
    iso = build_concrete("iso", 4)
    assert br(iso, "Y_{1,2}", "P_2") == "P_1"


@pytest.mark.parametrize("family, n, dim", [
    ("isu", 4, 24), ("isu", 5, 35), ("iso", 4, 10), ("iso", 5, 15),
    ("schrodinger", 2, 9), ("schrodinger", 3, 13), ("poincare", 0, 10),
])
def test_dimensions(family, n, dim):
    # isu(n) keeps every U^a_b, so n^2 + 2n generators
    assert build_concrete(family, n).dim == dim


def test_n_below_minimum():
    with pytest.raises(LieAlgebraError):
        build_concrete("iso", 1)
    with pytest.raises(LieAlgebraError):
        build_embedding("isu", 3)


@pytest.mark.parametrize("name, mats", [
    ("poincare", poincare_matrices()),
    ("iso4", iso_matrices(4)),
    ("iso5", iso_matrices(5)),
    ("isu3", isu_matrices(3)),
    ("isu4", isu_matrices(4)),
])
def test_structure_constants_match_matrix_realization(name, mats):
    alg = (build_concrete("poincare") if name == "poincare"
           else build_concrete(name[:3], int(name[3:])))
    expected = structure_constants_from_matrices(alg, mats)
    assert alg.brackets == expected


@pytest.mark.parametrize("family", ["isu", "iso", "schrodinger"])
@pytest.mark.parametrize("n", range(2, 9))
def test_jacobi_concrete(family, n):
    report = jacobi_check(build_concrete(family, n))
    assert report.passed, report.violations


@pytest.mark.parametrize("family", ["Lc", "Lcd", "L", "Lprime"])
def test_jacobi_abstract(family):
    mu = gr("5i") if family in ("L", "Lprime") else None
    alg = build_abstract(family, gr("2/3"), gr("-1+i"), mu)
    assert jacobi_check(alg).passed


def test_jacobi_detects_corruption():
    doc = build_concrete("poincare").to_json()
    for b in doc["brackets"]:
        if b["lhs"] == ["K_1", "K_2"]:
            b["rhs"][0]["coef"] = "-2"
    bad = LieAlgebraDef.from_json(doc)
    report = jacobi_check(bad)
    assert not report.passed
    triples = {t for t, _ in report.violations}
    assert ("P_1", "K_1", "K_2") in triples
    assert all("K_1" in t or "K_2" in t for t in triples)


def test_conflicting_bracket_rejected():
    doc = L.to_json()
    doc["brackets"].append({"lhs": ["B", "A"], "rhs": [{"coef": "1", "gen": "E"}]})
    with pytest.raises(LieAlgebraError):
        LieAlgebraDef.from_json(doc)


def test_grading_violation_rejected():
    doc = L.to_json()
    doc["brackets"].append({"lhs": ["H", "A"], "rhs": [{"coef": "1", "gen": "E"}]})
    with pytest.raises(LieAlgebraError):
        LieAlgebraDef.from_json(doc)


def test_json_round_trip():
    for alg in (L, build_concrete("schrodinger", 3), build_concrete("isu", 4)):
        back = LieAlgebraDef.from_json(alg.to_json())
        assert back.symbols == alg.symbols
        assert back.zdegrees == alg.zdegrees
        assert back.brackets == alg.brackets
    rec = build_embedding("poincare")
    back = EmbeddingRecipe.from_json(rec.to_json())
    assert back.images == rec.images and back.params == rec.params


# -- embeddings ---------------------------------------------------------------


def test_isu_gamma_from_coefficients():
    rec = build_embedding("isu", 4, alpha=[1], beta=[1])
    assert rec.params == (gr(-2), ONE, I)
    rec = build_embedding("isu", 6, alpha=[1, 2], beta=[3, "i"])
    assert rec.params[0] == -2 * (3 + 2 * I)
    assert embedding_check(rec).passed


def test_zero_gamma_rejected():
    with pytest.raises(LieAlgebraError):
        build_embedding("isu", 6, alpha=[1, 1], beta=[1, -1])


def test_reference_parameter_values():
    assert build_embedding("iso", 4).params == (gr(-2), I, I)
    assert build_embedding("schrodinger", 2).params == (gr(-1), gr(2), gr(-2))
    assert build_embedding("poincare").params == (2 * I, ONE, I)


def test_poincare_images():
    rec = build_embedding("poincare")
    t = rec.target
    assert t.render(rec.images["E"]) == "P_t - P_3"
    assert t.render(rec.images["A"]) == "P_1 + i*P_2"
    assert t.render(t.bracket(rec.images["A"], rec.images["B"])) == "2i*P_t - 2i*P_3"


def test_schrodinger_corrected_h():
    rec = build_embedding("schrodinger", 2)
    assert rec.target.render(rec.images["H"]) == "i*J_{1,2} - D"


@pytest.mark.parametrize("family, n", [
    ("poincare", 0), ("isu", 4), ("isu", 5), ("isu", 6),
    ("iso", 4), ("iso", 5), ("schrodinger", 2), ("schrodinger", 3),
])
def test_embeddings_pass(family, n):
    report = embedding_check(build_embedding(family, n))
    assert len(report.relations) == 10
    assert report.passed, [(r.lhs, r.residual) for r in report.failures]


@pytest.mark.parametrize("n", [2, 3])
def test_verbatim_schrodinger_fails_on_h(n):
    report = embedding_check(build_embedding("schrodinger", n, verbatim=True))
    failed = {r.lhs for r in report.failures}
    assert failed == {("H", "E"), ("H", "A"), ("H", "B")}
    # [J, H] vanishes for both readings, so it is the one H relation that holds
    assert all(r.passed for r in report.relations if "H" not in r.lhs or r.lhs == ("J", "H"))


def test_verbatim_isu_index_pairing():
    # pairing k with n-k collides at k = n/2 for even n
    assert not embedding_check(build_embedding("isu", 4, verbatim=True)).passed
    assert embedding_check(build_embedding("isu", 5, verbatim=True)).passed


def test_identity_recipe():
    assert embedding_check(identity_recipe(L)).passed


def test_dualize_algebra():
    d = dualize(L)
    assert d.family == "Lprime" and d.params == L.params
    assert dualize(d).brackets == L.brackets


def test_dualize_recipe_involution():
    rec = build_embedding("poincare")
    once = dualize(rec)
    assert embedding_check(once).passed
    twice = dualize(once)
    assert twice.label == rec.label
    for s in ("J", "H", "E"):
        assert twice.images[s] == rec.images[s]
    for s in ("A", "B"):
        assert twice.images[s] == {k: -c for k, c in rec.images[s].items()}
    assert embedding_check(twice).passed
