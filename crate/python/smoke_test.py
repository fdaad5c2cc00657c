"""Smoke test for the Python bindings: `pip install --no-build-isolation -e crates/py` first."""

import json

import farep


def main():
    assert farep.partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert farep.specht_dimension((2, 1)) == 2

    labels, rows = farep.character_table(3)
    assert labels == [(3,), (2, 1), (1, 1, 1)]
    assert sum(r[-1] ** 2 for r in rows) == 6

    assert farep.induction_product({(1,): 1}, {(1,): 1}) == {(2,): 1, (1, 1): 1}

    # Grothendieck identities.
    trunc = 8
    triv = farep.VirtualFB.triv(trunc)
    assert triv.day(farep.VirtualFB.series_s(0, trunc)) == farep.VirtualFB.unit(trunc)
    for k in range(trunc):
        s = farep.VirtualFB.series_s(k, trunc) + farep.VirtualFB.series_s(k + 1, trunc)
        assert s == farep.VirtualFB.sgn(k, trunc)
    for k in range(trunc + 1):
        assert farep.VirtualFB.series_h(k, trunc).invert_triv() == farep.VirtualFB.series_s(k, trunc)
    a = farep.VirtualFB(5, {(2, 1): 3, (): -1})
    assert a.day(triv).invert_triv() == a
    assert a.coeffs() == {(): -1, (2, 1): 3}

    # Closed forms.
    assert farep.simple_eval("C 2", 3) == {(3,): 1, (2, 1): 1}
    assert farep.simple_eval("L 1", 3) == {(2, 1): 1}
    assert farep.schur_dimension((2, 1), 3) == 8
    assert sorted(farep.decompose_schur_pfin((2, 1))) == ["Lambda^2(P)", "S(2)(Pbar)", "S(2,1)(Pbar)"]
    assert dict(farep.structure_kfi(2)) == {"Lambda^2(P)": 1, "C 2": 1}

    data = {
        "trunc": 3,
        "F0_dim": 1,
        "degrees": {str(t): {"n": t, "mults": [{"partition": [t], "mult": 1}]} for t in range(1, 4)},
    }
    assert farep.multiplicities(json.dumps(data)) == {"k0": 1, "L 0": 1}

    # Oracle.
    pbar2 = farep.Functor("pbar:2", 4)
    assert pbar2.dims() == [0, 0, 1, 4, 9]
    hom = farep.nat_hom(farep.Functor("pbar:2", 4), farep.Functor("pbar:1", 4))
    assert hom["dimension"] == 0
    endo = farep.nat_hom(pbar2, pbar2)
    assert endo["dimension"] == 2
    assert sorted(endo["character"]) == [((1, 1), (1, 1), 1), ((2,), (2,), 1)]
    generic = farep.nat_hom(farep.Functor("proj-cover:1", 4), farep.Functor("pfin:2", 4), route="generic")
    assert generic["dimension"] == 2

    # Verification suites.
    reports = farep.run_suite("idempotent", 6)
    assert reports and all(r["pass"] for r in reports)
    assert all(r["pass"] for r in farep.groth_identity("hook-inversion", 8))
    assert "all" in farep.SUITES

    for bad in (lambda: farep.simple_eval("C 1,1", 2), lambda: farep.Functor("nope", 4)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("invalid input must raise ValueError")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
