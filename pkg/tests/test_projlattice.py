from starringlab.projlattice import (
    BlackadarVerdict,
    blackadar_check,
    is_projection,
    join,
    meet,
    projection_characterizations,
    projection_pool,
    sasaki,
    support_projection,
    ls_laws,
)
from starringlab.starring import get_instance, generate_probes


M2 = get_instance("m2")
PROBES = generate_probes(M2, 42, 24)


def mat(rows):
    return M2.element_from_json([str(x) for row in rows for x in row])


E11 = mat([[1, 0], [0, 0]])
E22 = mat([[0, 0], [0, 1]])


def test_is_projection():
    assert is_projection(M2, E11)
    assert is_projection(M2, M2.zero)
    assert is_projection(M2, M2.unit)
    assert not is_projection(M2, mat([[0, 1], [0, 0]]))


def test_support_projection_fixes_element():
    a = mat([[1, 1], [1, 1]])
    p = support_projection(M2, a, PROBES)
    assert is_projection(M2, p)
    assert M2.mul(a, p) == a


def test_meet_join_on_commuting_projections():
    assert meet(M2, E11, E22, PROBES) == M2.zero
    assert join(M2, E11, E22, PROBES) == M2.unit
    assert meet(M2, E11, E11, PROBES) == E11
    assert join(M2, E11, M2.zero, PROBES) == E11


def test_sasaki_projection():
    s = sasaki(M2, E11, E22, PROBES)
    assert is_projection(M2, s)
    assert s == M2.zero
    assert sasaki(M2, E11, E11, PROBES) == E11


def test_projection_pool_contains_extremes():
    pool = projection_pool(M2, PROBES)
    assert M2.zero in pool and M2.unit in pool
    assert all(is_projection(M2, p) for p in pool)


def test_projection_characterizations_all_pass_on_m2():
    laws = projection_characterizations(M2, PROBES)
    assert {row["lawId"] for row in laws} >= {
        "proj/pq",
        "proj/p+q",
        "proj/p-q",
        "proj/plla",
        "proj/ll-partial-order",
        "proj/ll-coincidence",
    }
    for row in laws:
        assert row["status"] == "pass", row


def test_projection_characterizations_fail_on_even_control():
    z6 = get_instance("z6-control")
    probes = generate_probes(z6, 42, 12)
    laws = {row["lawId"]: row for row in projection_characterizations(z6, probes)}
    assert laws["proj/p+q"]["status"] == "fail"
    assert laws["proj/p+q"]["witness"] is not None


def test_lattice_laws_pass_on_m2():
    for row in ls_laws(M2, PROBES):
        assert row["status"] == "pass", row


def test_blackadar_verdicts():
    v = blackadar_check(M2, PROBES, "blackadar")
    assert isinstance(v, BlackadarVerdict)
    assert v.verdict == "yes", v.failures
    int3 = get_instance("int3")
    probes3 = generate_probes(int3, 42, 24)
    g = blackadar_check(int3, probes3, "green-blackadar")
    assert g.verdict == "no"
    assert g.failures
