import random

import pytest

import hamsuper as hs
from hamsuper.fpexact import rref_span, span_contains
from hamsuper.lsa import (InvariantViolation, SchemaViolation, StructureAlgebra,
                          center, centralizer, derived_subalgebra, from_json_text,
                          jacobi_check, to_json_text)

import bruteforce as bf


@pytest.fixture()
def heis():
    return bf.heisenberg()


# ---------------------------------------------------------------------------
# construction invariants
# ---------------------------------------------------------------------------

def test_rejects_skew_violation():
    with pytest.raises(InvariantViolation):
        StructureAlgebra(3, (0, 0, 0), {(0, 1): [(2, 1)], (1, 0): [(2, 1)]})


def test_rejects_one_sided_bracket():
    with pytest.raises(InvariantViolation):
        StructureAlgebra(3, (0, 0, 0), {(0, 1): [(2, 1)]})


def test_rejects_parity_violation():
    with pytest.raises(InvariantViolation):
        StructureAlgebra(3, (0, 1, 0), {(0, 1): [(2, 1)], (1, 0): [(2, 2)]})


def test_rejects_even_diagonal():
    with pytest.raises(InvariantViolation):
        StructureAlgebra(3, (0,), {(0, 0): [(0, 1)]})


def test_odd_diagonal_is_allowed():
    L = StructureAlgebra(3, (0, 1), {(1, 1): [(0, 1)]})
    assert L.bracket(1, 1) == {0: 1}


def test_zero_coefficients_dropped():
    L = StructureAlgebra(3, (0, 0, 0), {(0, 1): [(2, 3)], (1, 0): [(2, 0)]})
    assert L.constants == {}


# ---------------------------------------------------------------------------
# jacobi
# ---------------------------------------------------------------------------

def test_jacobi_heisenberg(heis):
    assert jacobi_check(heis).ok
    assert bf.naive_jacobi_ok(heis)


def test_jacobi_tampered_heisenberg_fails():
    # adding [e1, e2] = e1 to the table breaks the identity; the first
    # offending triple in lexicographic order is (e0, e1, e2), where
    # [e0,[e1,e2]] = [e0,e1] = e2 while both right-hand terms vanish
    L = StructureAlgebra(3, (0, 0, 0), {
        (0, 1): [(2, 1)], (1, 0): [(2, 2)],
        (1, 2): [(1, 1)], (2, 1): [(1, 2)]})
    rep = jacobi_check(L)
    assert not rep.ok
    assert rep.counterexample == (0, 1, 2)
    assert not bf.naive_jacobi_ok(L)


def test_jacobi_desk(desk_h):
    assert jacobi_check(desk_h).ok


# ---------------------------------------------------------------------------
# derived subalgebra, center, centralizer
# ---------------------------------------------------------------------------

def test_derived_of_abelian_is_zero():
    sub, emb = derived_subalgebra(bf.abelian())
    assert sub.dim == 0 and emb == []


def test_derived_of_heisenberg_is_center(heis):
    sub, emb = derived_subalgebra(heis)
    assert sub.dim == 1
    assert emb == [{2: 1}]
    assert sub.labels == ("e2",)


def test_derived_of_hbar(desk_hbar):
    sub, emb = derived_subalgebra(desk_hbar)
    assert sub.dim == 34
    top = desk_hbar.dim - 1
    assert all(top not in row for row in emb)


def test_h_is_perfect(desk_h):
    sub, _ = derived_subalgebra(desk_h)
    assert sub.dim == desk_h.dim


def test_derived_is_idempotent_on_hbar(desk_hbar):
    once, emb1 = derived_subalgebra(desk_hbar)
    twice, emb2 = derived_subalgebra(once)
    assert twice.dim == once.dim


def test_center_heisenberg(heis):
    assert center(heis) == [{2: 1}]


def test_center_of_h_is_zero(desk_h):
    assert center(desk_h) == []


def test_centralizer_of_lowest_degree_part(desk_h):
    low = [{i: 1} for i in range(desk_h.dim) if desk_h.zdegrees[i] == -1]
    assert centralizer(desk_h, low) == rref_span(low, desk_h.p)


def test_centralizer_is_monotone(desk_h):
    rng = random.Random(5)
    vectors = [{rng.randrange(desk_h.dim): 1 + rng.randrange(2)} for _ in range(6)]
    small = centralizer(desk_h, vectors[:2])
    large = centralizer(desk_h, vectors)
    for v in large:
        assert span_contains(small, v, desk_h.p)


# ---------------------------------------------------------------------------
# adjoint matrices
# ---------------------------------------------------------------------------

def test_adjoint_of_zero(heis):
    M = heis.adjoint_matrix({})
    assert M.entries == {}


def test_adjoint_heisenberg(heis):
    M = heis.adjoint_matrix({0: 1})
    assert M.entries == {(2, 1): 1}


def test_adjoint_rank_of_torus_element(desk_h):
    # ad of a torus element is diagonal with the weight component as
    # eigenvalue, so its rank is dim minus the size of its kernel
    torus = hs.torus_basis(desk_h)
    for pos, tl in enumerate(torus):
        M = desk_h.adjoint_matrix({tl: 1})
        zero_dim = sum(1 for b in range(desk_h.dim) if desk_h.weights[b][pos] == 0)
        assert M.rank() == desk_h.dim - zero_dim


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def test_roundtrip_identity(desk_h):
    text = to_json_text(desk_h)
    again = to_json_text(from_json_text(text))
    assert text == again


def test_roundtrip_preserves_table(desk_h):
    L = from_json_text(to_json_text(desk_h))
    assert L.constants == desk_h.constants
    assert L.parity == desk_h.parity
    assert L.labels == desk_h.labels
    assert L.zdegrees == desk_h.zdegrees


def test_import_rejects_truncated_file(desk_h):
    text = to_json_text(desk_h)
    with pytest.raises(SchemaViolation):
        from_json_text(text[: len(text) // 2])


def test_import_rejects_skew_violation(desk_h):
    import json
    doc = json.loads(to_json_text(desk_h))
    key = sorted(doc["brackets"])[0]
    doc["brackets"][key][0][1] = (doc["brackets"][key][0][1] + 1) % 3 or 1
    with pytest.raises(InvariantViolation):
        from_json_text(json.dumps(doc))


def test_import_rejects_parity_violation(desk_h):
    import json
    doc = json.loads(to_json_text(desk_h))
    doc["basis"][0]["parity"] ^= 1
    with pytest.raises(InvariantViolation):
        from_json_text(json.dumps(doc))


def test_import_rejects_bad_schema():
    with pytest.raises(SchemaViolation):
        from_json_text("{}")
    with pytest.raises(SchemaViolation):
        from_json_text("not json")
    with pytest.raises(SchemaViolation):
        from_json_text('{"p": 3, "m": 2, "n": 2, "t": [1, 1], "basis": [], "brackets": {}}')


def test_export_requires_parameters(heis):
    with pytest.raises(ValueError):
        to_json_text(heis)
