import os

import pytest

import filtcoh


def test_catalog_and_betti():
    names = filtcoh.catalog_names()
    assert "kodaira_thurston" in names
    kt = filtcoh.load("@kodaira_thurston")
    assert kt.dim == 16
    assert filtcoh.betti(kt) == [1, 3, 4, 3, 1]
    assert filtcoh.validate(kt) == []


def test_verify_vanishing_examples():
    for name, even_sum in [("s2xs2xs2", 6), ("kt_x_s2", 20), ("torus3", 56)]:
        report = filtcoh.verify_vanishing(filtcoh.load("@" + name))
        assert report["applicable"]
        assert report["paths_agree"]
        assert report["pass"]
        assert report["table"]["ell"] == 0
        assert report["table"]["even_sum"] == even_sum


def test_product_and_semicharacteristics():
    sg = filtcoh.load("@surface_g2")
    sc = filtcoh.semicharacteristics(sg)
    assert sc == {"ell": 0, "k": 1}

    m = filtcoh.product([filtcoh.load("@kodaira_thurston"), filtcoh.load("@sphere2")])
    table = filtcoh.cohomology_table(m, p=1)
    assert table["betti"] == [1, 3, 5, 6, 5, 3, 1]
    assert table["filtered_betti"] == table["filtered_betti_formula"]


def test_spectral_ops():
    ops = filtcoh.spectral_ops(filtcoh.load("@s2xs2xs2"))
    assert ops["hodge_even_kernel_dim"] == 6
    assert ops["D_rank"] % 2 == 0
    assert ops["D_kernel_parity"] == 0


def test_model_file_fixture():
    fixtures = os.environ.get("FILTCOH_FIXTURES")
    if not fixtures:
        pytest.skip("FILTCOH_FIXTURES not set")
    m = filtcoh.load(os.path.join(fixtures, "kt_x_s2.json"))
    assert m.top_degree == 6
    with pytest.raises(ValueError):
        filtcoh.load(os.path.join(fixtures, "bad_degree.json"))
