"""Smoke test for the python bindings."""

import json

import charfield


def main() -> None:
    # character fields of small groups
    f = charfield.field("gl2", 7, order=3)
    assert f.conductor == 3 and f.degree == 2, f
    assert "Q(zeta_3)" in f.names()

    k5 = charfield.field("sl2", 5)
    assert "Q(sqrt(5))" in k5.names(), k5

    # exact cyclotomic arithmetic
    r = charfield.Cyclotomic.root(8, 1) + charfield.Cyclotomic.root(8, -1)
    assert r * r == charfield.Cyclotomic(2)
    assert charfield.field_of([r]) == charfield.quadratic_field(2)

    g = charfield.sqrt_qstar(7, 1)
    assert g * g == charfield.Cyclotomic(charfield.qstar(7))

    # rank-m machinery
    assert charfield.k_glm(2, 5) == charfield.field("gl2", 5)
    assert charfield.k_ellr_glm(3, 7, 3, 2) == charfield.quadratic_field(-3)
    assert charfield.lemma31_check(2, 3, 2, [0, 1])
    assert not charfield.lemma31_check(7, 3, 2, [0, 1])

    # verification and JSON plumbing
    res = charfield.verify("Thm4", 7, ell=3, r=1)
    assert res.status == "pass" and res.computed == res.predicted
    parsed = json.loads(res.to_json())
    assert parsed["status"] == "pass"

    table = json.loads(charfield.table_json("sl2", 4))
    assert len(table["classes"]) == 5 and len(table["characters"]) == 5
    assert charfield.table_ok("gl2", 5)

    results = charfield.sweep(["Thm4"], q_max=5, ellr_max=9)
    assert results and all(r.status in ("pass", "skipped") for r in results)

    # bound guard surfaces as the dedicated exception
    try:
        charfield.cyclotomic_field(10**9)
    except charfield.BoundExceeded:
        pass
    else:
        raise AssertionError("expected BoundExceeded")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
