"""Path algebras, quadratic rewriting, confluence, and normal-form arithmetic."""

import pytest

from koszulgerst.errors import NonQuadraticRelation, NotConfluent
from koszulgerst.fields import QQ
from koszulgerst.presets import load_presentation
from koszulgerst.quiver import Path, PathVector, QuadraticPresentation, Quiver
from koszulgerst.rewriting import build_rewrite_system


def two_loop_quiver():
    return Quiver(["1"], [("x", "1", "1"), ("y", "1", "1")])


def pv(field, quiver, *terms):
    """terms: (coeff, arrow-name word) pairs, e.g. (1, "xy")."""
    acc = {}
    for coeff, word in terms:
        arrows = tuple(quiver.arrow_index[ch] for ch in word)
        path = Path(quiver.arrow_o[arrows[0]], arrows) if arrows else Path(0, ())
        acc[path] = field(coeff)
    return PathVector(field, acc)


def test_short_rules_and_overlap():
    pres = load_presentation("short", QQ)
    rs = build_rewrite_system(pres)
    q = pres.quiver
    x, y = q.arrow_index["x"], q.arrow_index["y"]
    assert set(rs.rules) == {(x, x), (x, y)}
    assert rs.rules[(x, x)].is_zero()
    assert rs.rules[(x, y)] == pv(QQ, q, (-1, "yx"))
    # the overlap word xxy reduces to zero along both routes
    xxy = Path(0, (x, x, y))
    assert rs.nf_path(xxy).is_zero()


def test_family_rules_confluent():
    pres = load_presentation("family", QQ, q=2)
    rs = build_rewrite_system(pres)
    q = pres.quiver
    a, b, c = (q.arrow_index[n] for n in "abc")
    assert set(rs.rules) == {(a, a), (b, b), (a, b), (a, c)}
    assert rs.rules[(a, b)] == pv(QQ, q, (2, "ba"))
    assert rs.rules[(a, a)].is_zero()


def test_single_commutator_relation_is_confluent():
    q = two_loop_quiver()
    rel = pv(QQ, q, (1, "xy"), (-1, "yx"))
    pres = QuadraticPresentation(q, [rel], field=QQ)
    rs = build_rewrite_system(pres)  # must not raise NotConfluent
    x, y = q.arrow_index["x"], q.arrow_index["y"]
    assert set(rs.rules) == {(x, y)}
    assert rs.rules[(x, y)] == pv(QQ, q, (1, "yx"))


def test_not_confluent_detected():
    q = two_loop_quiver()
    # xx -> xy fails the diamond test on the overlap xxx
    rel = pv(QQ, q, (1, "xx"), (-1, "xy"))
    pres = QuadraticPresentation(q, [rel], field=QQ)
    with pytest.raises(NotConfluent):
        build_rewrite_system(pres)


def test_non_quadratic_relation_rejected():
    q = two_loop_quiver()
    cubic = pv(QQ, q, (1, "xxy"))
    with pytest.raises(NonQuadraticRelation):
        QuadraticPresentation(q, [cubic], field=QQ)
    mixed = pv(QQ, q, (1, "xx"), (1, "x"))
    with pytest.raises(NonQuadraticRelation):
        QuadraticPresentation(q, [mixed], field=QQ)


def test_normal_form_examples(short8, family8):
    qs = short8.quiver
    assert short8.rs.normal_form(pv(QQ, qs, (1, "xy"))) == pv(QQ, qs, (-1, "yx"))
    qf = family8.quiver
    ab = PathVector.single(QQ, Path(0, (0, 1)))
    assert family8.rs.normal_form(ab) == PathVector.single(QQ, Path(0, (1, 0)))
    e1 = PathVector.single(QQ, Path(0, ()))
    assert short8.rs.normal_form(e1) == e1


def test_normal_form_idempotent_and_kills_relations(short8, family8, rng):
    for kx in (short8, family8):
        for rel in kx.presentation.relations:
            assert kx.rs.normal_form(rel).is_zero()
        words = [w for L in range(4) for w in kx.rs.basis_words(L)]
        for _ in range(30):
            terms = {}
            for w in rng.sample(words, min(3, len(words))):
                terms[w] = QQ(rng.randrange(-3, 4))
            vec = PathVector(QQ, terms)
            once = kx.rs.normal_form(vec)
            assert kx.rs.normal_form(once) == once


def test_multiply_examples(short8, family8):
    qs = short8.quiver
    x = pv(QQ, qs, (1, "x"))
    y = pv(QQ, qs, (1, "y"))
    assert short8.rs.multiply(x, y) == pv(QQ, qs, (-1, "yx"))
    qf = family8.quiver
    a = pv(QQ, qf, (1, "a"))
    c = PathVector.single(QQ, Path(0, (2,)))
    assert family8.rs.multiply(a, c).is_zero()
    e1 = PathVector.single(QQ, Path(0, ()))
    e2 = PathVector.single(QQ, Path(1, ()))
    assert family8.rs.multiply(e1, a) == a
    assert family8.rs.multiply(e2, a).is_zero()


def test_vertex_idempotents_act_as_identity(family8):
    f = family8.field
    q = family8.quiver
    total = PathVector(f, {q.vertex_path(v): f.one for v in range(q.num_vertices)})
    for L in range(3):
        for w in family8.rs.basis_words(L):
            wv = PathVector.single(f, w)
            assert family8.rs.multiply(total, wv) == wv
            assert family8.rs.multiply(wv, total) == wv


def test_multiplication_associative_on_random_words(short8, family8, rng):
    for kx in (short8, family8):
        words = [PathVector.single(QQ, w)
                 for L in range(3) for w in kx.rs.basis_words(L)]
        for _ in range(40):
            a, b, c = (rng.choice(words) for _ in range(3))
            left = kx.rs.multiply(kx.rs.multiply(a, b), c)
            right = kx.rs.multiply(a, kx.rs.multiply(b, c))
            assert left == right


def test_algebra_basis_family(family8):
    grouped, finite = family8.rs.algebra_basis(4)
    assert finite
    total = sum(len(ws) for block in grouped for ws in block.values())
    assert total == 7
    assert family8.rs.is_finite_dimensional()
    assert family8.rs.dimension() == 7
    names = {family8.quiver.format_path(w)
             for block in grouped for ws in block.values() for w in ws}
    assert names == {"e1", "e2", "a", "b", "c", "b.a", "b.c"}


def test_algebra_basis_short_infinite(short8):
    grouped, finite = short8.rs.algebra_basis(3)
    assert not finite
    assert not short8.rs.is_finite_dimensional()
    words = {short8.quiver.format_path(w)
             for block in grouped for ws in block.values() for w in ws}
    assert {"y", "y.y", "y.y.y"} <= words


def test_algebra_basis_vertex_only():
    q = Quiver(["1"], [])
    pres = QuadraticPresentation(q, [], field=QQ)
    rs = build_rewrite_system(pres)
    grouped, finite = rs.algebra_basis(1)
    assert finite
    assert grouped[0] == {(0, 0): [Path(0, ())]}
    assert grouped[1] == {}
