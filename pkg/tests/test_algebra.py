"""Algebra core: validation, closures, quotients, corners, radicals, tensors."""

import pytest

import reedylab as rl
from reedylab.algebra import AlgebraError
from reedylab.linalg import span


def label_index(algebra, label):
    return algebra.labels.index(label)


def basis_by_label(algebra, label):
    return algebra.basis_vector(label_index(algebra, label))


# --- validate ----------------------------------------------------------------


def test_validate_matrix_algebra(Q):
    m2 = rl.build_matrix_algebra(2, Q)
    assert rl.validate(m2)["valid"]


def test_validate_detects_perturbed_constant(Q):
    m2 = rl.build_matrix_algebra(2, Q)
    mult = [list(map(list, row)) for row in m2.mult]
    mult[0][0] = [(0, Q.of(2))]  # E11*E11 = 2E11 breaks both laws
    bad = rl.Algebra(Q, m2.labels, [[tuple(map(tuple, r)) for r in row] for row in mult], m2.unit)
    diag = rl.validate(bad)
    assert not diag["valid"]
    kinds = {v["kind"] for v in diag["violations"]}
    assert "associativity" in kinds
    triples = [v["triple"] for v in diag["violations"] if v["kind"] == "associativity"]
    assert any(t[0] == 0 and t[1] == 0 for t in triples)


def test_validate_diamond(diamond):
    algebra, _ = diamond
    assert algebra.dim == 9
    assert rl.validate(algebra)["valid"]


# --- closures ----------------------------------------------------------------


def test_subalgebra_closure_empty_generators(m2q):
    m2, _ = m2q
    sub = rl.subalgebra_closure(m2, [])
    assert sub.dim == 1 and sub.contains(m2.unit)


def test_subalgebra_closure_involution(m2q, Q):
    m2, _ = m2q
    # E12 + E21 squares to the identity, so closure has dimension 2
    x = tuple(Q.of(v) for v in (0, 1, 1, 0))
    sub = rl.subalgebra_closure(m2, [x])
    assert sub.dim == 2
    assert sub.contains(x) and sub.contains(m2.unit)
    square = m2.mul(x, x)
    assert square == m2.unit


def test_subalgebra_closure_diamond_path_pair(diamond):
    algebra, frame = diamond
    # oracle: paths inside the sub-quiver {a->b, b->d}: vertices, ab, bd, ab then bd
    gens = list(frame.idempotents) + [basis_by_label(algebra, "ab"), basis_by_label(algebra, "bd")]
    sub = rl.subalgebra_closure(algebra, gens)
    assert sub.dim == 7
    long_path = algebra.mul(basis_by_label(algebra, "bd"), basis_by_label(algebra, "ab"))
    assert any(x != 0 for x in long_path)
    assert sub.contains(long_path)


def test_ideal_closure_uppertri_corner(uppertri):
    algebra, frame = uppertri
    # A e A for e the source vertex of the arrow: spans {e, arrow}
    e_v0 = frame.idempotents[frame.index_of("v0")]
    ideal = rl.ideal_closure(algebra, [e_v0])
    assert ideal.dim == 2
    assert ideal.is_ideal()
    arrow = basis_by_label(algebra, "x")
    assert ideal.contains(arrow)


def test_ideal_closure_zero(diamond):
    algebra, _ = diamond
    ideal = rl.ideal_closure(algebra, [algebra.zero_vector()])
    assert ideal.dim == 0


def test_ideal_closure_empty_level_eps(diamond):
    algebra, frame = diamond
    work = frame.with_degrees([1, 2, 3, 4])
    assert all(x == 0 for x in work.eps(0))
    ideal = rl.ideal_closure(algebra, [work.eps(0)])
    assert ideal.dim == 0


# --- quotient and corner ---------------------------------------------------


def test_quotient_by_full_ideal(diamond):
    algebra, _ = diamond
    full = rl.ideal_closure(algebra, [algebra.unit])
    q, _ = rl.quotient(algebra, full)
    assert q.dim == 0


def test_quotient_uppertri_is_field(uppertri):
    algebra, frame = uppertri
    e_v0 = frame.idempotents[frame.index_of("v0")]
    ideal = rl.ideal_closure(algebra, [e_v0])
    q, qmap = rl.quotient(algebra, ideal)
    assert q.dim == 1
    assert rl.validate(q)["valid"]
    assert q.mul(q.unit, q.unit) == q.unit
    # projection is an algebra map
    x = basis_by_label(algebra, "x")
    assert qmap.project(algebra.mul(x, x)) == q.mul(qmap.project(x), qmap.project(x))


def test_quotient_diamond_by_source_vertex(diamond):
    algebra, frame = diamond
    ideal = rl.ideal_closure(algebra, [frame.idempotents[frame.index_of("a")]])
    assert ideal.dim == 4
    q, _ = rl.quotient(algebra, ideal)
    assert q.dim == 5
    assert rl.validate(q)["valid"]
    assert sorted(q.labels) == ["b", "bd", "c", "cd", "d"]


def test_quotient_requires_ideal_flag(diamond):
    algebra, frame = diamond
    not_ideal = rl.plain_subspace(algebra, [frame.idempotents[0]])
    with pytest.raises(AlgebraError):
        rl.quotient(algebra, not_ideal)


def test_quotient_dim_additivity(diamond, uppertri, simplex2):
    for algebra, frame in (diamond, uppertri):
        for e in frame.idempotents:
            ideal = rl.ideal_closure(algebra, [e])
            q, _ = rl.quotient(algebra, ideal)
            assert rl.validate(q)["valid"]
            assert algebra.dim == ideal.dim + q.dim
    s2 = simplex2
    ideal = rl.ideal_closure(s2.algebra, [s2.frame.idempotents[0]])
    q, _ = rl.quotient(s2.algebra, ideal)
    assert s2.algebra.dim == ideal.dim + q.dim
    assert rl.validate(q)["valid"]


def test_corner_at_unit_is_identity(diamond):
    algebra, _ = diamond
    c, cmap = rl.corner(algebra, algebra.unit)
    assert c.dim == algebra.dim
    assert rl.validate(c)["valid"]


def test_corner_uppertri_vertex(uppertri):
    algebra, frame = uppertri
    c, _ = rl.corner(algebra, frame.idempotents[frame.index_of("v0")])
    assert c.dim == 1 and c.mul(c.unit, c.unit) == c.unit


def test_corner_diamond_two_vertices(diamond, Q):
    algebra, frame = diamond
    e = algebra.mul(frame.idempotents[frame.index_of("a")], frame.idempotents[frame.index_of("a")])
    e = tuple(
        Q.add(x, y)
        for x, y in zip(
            frame.idempotents[frame.index_of("a")], frame.idempotents[frame.index_of("b")]
        )
    )
    c, cmap = rl.corner(algebra, e)
    assert c.dim == 3
    assert rl.validate(c)["valid"]
    # embedding rows land back in the big algebra
    for row in cmap.rows:
        assert len(row) == algebra.dim


def test_corner_requires_idempotent(diamond):
    algebra, _ = diamond
    with pytest.raises(AlgebraError):
        rl.corner(algebra, basis_by_label(algebra, "ab"))


# --- radical ------------------------------------------------------------------


def test_radical_semisimple_matrix(Q, GF2):
    for field in (Q, GF2):
        m2 = rl.build_matrix_algebra(2, field)
        assert rl.radical(m2).dim == 0


def test_radical_uppertri(uppertri):
    algebra, _ = uppertri
    rad = rl.radical(algebra)
    assert rad.dim == 1
    assert rad.contains(basis_by_label(algebra, "x"))


def test_radical_simplex1_has_dim_two(simplex1):
    # the non-identity span contains the idempotent d0*s, so the radical is
    # strictly smaller than the 5-dimensional span of non-identity maps
    algebra = simplex1.algebra
    rad = rl.radical(algebra)
    assert rad.dim == 2
    q, _ = rl.quotient(algebra, rad)
    assert rl.radical_generic(q).dim == 0


def test_radical_postconditions_on_corpus(diamond, uppertri, simplex1, simplex2, m2q):
    algebras = [diamond[0], uppertri[0], simplex1.algebra, simplex2.algebra, m2q[0]]
    for algebra in algebras:
        rad = rl.radical(algebra)
        assert rad.is_ideal()
        # nilpotency: some power of the span vanishes
        power = list(rad.space.basis)
        for _ in range(algebra.dim + 1):
            if not power:
                break
            nxt = []
            for u in power:
                for v in rad.space.basis:
                    w = algebra.mul(u, v)
                    if any(x != algebra.field.zero for x in w):
                        nxt.append(w)
            power = nxt and list(span(algebra.field, algebra.dim, nxt).basis)
        assert not power
        q, _ = rl.quotient(algebra, rad)
        assert rl.radical_generic(q).dim == 0


def test_radical_arrow_ideal_crosscheck(diamond, uppertri, diamond_gf2):
    # quiver-built algebras carry the arrow-ideal hint; the generic method agrees
    for algebra, _ in (diamond, uppertri, diamond_gf2):
        assert "radical_hint" in algebra._cache
        assert rl.radical(algebra).space == rl.radical_generic(algebra)


def test_radical_charp_agrees_with_char0_on_diamond(diamond, diamond_gf2):
    assert rl.radical(diamond[0]).dim == rl.radical(diamond_gf2[0]).dim == 5


# --- elementary and primitivity ----------------------------------------------


def test_is_elementary(diamond, m2q, simplex1, Q):
    algebra, frame = diamond
    assert rl.is_elementary(algebra, frame)
    m2, diag = m2q
    unit_frame = rl.IdempotentFrame(m2, [m2.unit], ["one"])
    assert not rl.is_elementary(m2, unit_frame)
    assert not rl.is_elementary(m2, diag)  # M2 is not elementary for any frame
    kk, kk_frame = rl.build_quiver_algebra(rl.QuiverPresentation(["p", "q"], [], [], 1), Q)
    assert rl.is_elementary(kk, kk_frame)
    assert not rl.is_elementary(simplex1.algebra, simplex1.frame)


def test_primitive_idempotents(diamond, m2q):
    algebra, frame = diamond
    for e in frame.idempotents:
        assert rl.is_primitive_idempotent(algebra, e)
    m2, _ = m2q
    assert not rl.is_primitive_idempotent(m2, m2.unit)


# --- tensor products ---------------------------------------------------------


def test_tensor_with_field_is_identity(diamond, Q):
    algebra, _ = diamond
    k_alg, _ = rl.build_quiver_algebra(rl.QuiverPresentation(["pt"], [], [], 1), Q)
    t = rl.tensor_algebras(k_alg, algebra)
    assert t.dim == algebra.dim
    assert rl.validate(t)["valid"]
    assert [row for row in t.mult] == [row for row in algebra.mult]


def test_tensor_of_split_pairs(Q):
    kk, _ = rl.build_quiver_algebra(rl.QuiverPresentation(["p", "q"], [], [], 1), Q)
    t = rl.tensor_algebras(kk, kk)
    assert t.dim == 4
    assert rl.radical(t).dim == 0


def test_tensor_diamond_simplex_dim(diamond, simplex1):
    t = rl.tensor_algebras(diamond[0], simplex1.algebra)
    assert t.dim == 63
    assert rl.validate(t)["valid"]


def test_tensor_field_mismatch(diamond, diamond_gf2):
    with pytest.raises(AlgebraError):
        rl.tensor_algebras(diamond[0], diamond_gf2[0])


def test_tensor_associative_up_to_reindexing(Q, uppertri):
    a, _ = uppertri
    kk, _ = rl.build_quiver_algebra(rl.QuiverPresentation(["p", "q"], [], [], 1), Q)
    left = rl.tensor_algebras(rl.tensor_algebras(a, kk), a)
    right = rl.tensor_algebras(a, rl.tensor_algebras(kk, a))
    assert left.dim == right.dim
    # canonical index bijection ((i,j),k) -> (i,(j,k)) is the identity on
    # flattened indices, so the tables must agree entrywise
    assert left.mult == right.mult
    assert left.unit == right.unit


# --- tensor dimension over a corner ------------------------------------------


def test_tensor_dim_over_unit(diamond, uppertri, simplex1, simplex2, m2q, tensor49):
    for algebra in (diamond[0], uppertri[0], simplex1.algebra, simplex2.algebra,
                    m2q[0], tensor49.algebra):
        assert rl.tensor_dim_over_corner(algebra, algebra.unit) == algebra.dim


def test_tensor_dim_uppertri_heredity(uppertri):
    algebra, frame = uppertri
    e = frame.idempotents[frame.index_of("v1")]  # target vertex = matrix unit E11
    dim = rl.tensor_dim_over_corner(algebra, e)
    ideal = rl.ideal_closure(algebra, [e])
    assert dim == 2 == ideal.dim


def test_tensor_dim_diamond_sink(diamond, Q):
    algebra, frame = diamond
    e_d = frame.idempotents[frame.index_of("d")]
    # path-count oracle: maps into the sink d: e_d, bd, cd, and the long path;
    # out of d only e_d, so dim Ae_d (x)_k e_dA = 4*1 and dim Ae_dA = 4
    into_d = [lab for lab in algebra.labels if lab in ("d", "bd", "cd", "ac*cd")]
    assert len(into_d) == 4
    assert rl.tensor_dim_over_corner(algebra, e_d) == 4
    assert rl.ideal_closure(algebra, [e_d]).dim == 4


def test_tensor_dim_requires_idempotent(diamond):
    algebra, _ = diamond
    with pytest.raises(AlgebraError):
        rl.tensor_dim_over_corner(algebra, basis_by_label(algebra, "ab"))
