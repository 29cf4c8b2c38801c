import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sslab.algebra import field_make
from sslab.curves import velu_neighbors
from sslab.errors import ChecksumMismatch, MissingLevel, ParseError
from sslab.modpoly import (
    ModPolyStore,
    cache_load,
    cache_store,
    cyclic_neighbors,
    format_records,
    modular_poly_coeffs,
    modular_poly_composite,
    modular_poly_prime,
    modular_poly_qexp,
    parse_db,
    psi,
    resultant_compose,
    shipped_db,
)
from sslab.qwalk import neighbors


def test_phi2_over_integers():
    c = modular_poly_coeffs(2)
    assert c[(3, 0)] == 1 and c[(0, 3)] == 1
    assert c[(2, 2)] == -1
    assert c[(2, 1)] == 1488 and c[(2, 0)] == -162000
    assert c[(1, 1)] == 40773375 and c[(1, 0)] == 8748000000
    assert c[(0, 0)] == -157464000000000
    assert max(i for i, _ in c) == 3


def test_psi():
    assert [psi(n) for n in (2, 3, 4, 6, 12, 13)] == [3, 4, 6, 12, 24, 14]


@pytest.mark.parametrize("p", [83, 1009])
def test_qexp_velu_database_agree(p):
    ctx = field_make(p)
    db = parse_db(shipped_db(), [2, 3, 5], p)
    for ell in (2, 3, 5):
        q = modular_poly_qexp(ell, p)
        assert q.poly == db[ell].poly == modular_poly_prime(ell, p, ctx).poly
        assert q.check()


def test_roundtrip_and_corruption(tmp_path):
    recs = [modular_poly_qexp(ell, 101) for ell in (2, 3)]
    path = tmp_path / "db.txt"
    path.write_text(format_records(recs, 101, "database"))
    back = parse_db(path, None, 101)
    assert back[2].poly == recs[0].poly and back[3].poly == recs[1].poly
    lines = path.read_text().splitlines()
    k = next(i for i, l in enumerate(lines) if not l.startswith("#"))
    parts = lines[k].split()
    parts[-1] = str(int(parts[-1]) + 1)
    lines[k] = " ".join(parts)
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ChecksumMismatch):
        parse_db(path, None, 101)
    path.write_text("# modulus 101\n2 x 0 1\n")
    with pytest.raises(ParseError):
        parse_db(path, None, 101)


def test_cache_roundtrip(tmp_path):
    rec = modular_poly_qexp(3, 97)
    cache_store(tmp_path, rec)
    assert cache_load(tmp_path, 3, 97) == rec
    assert cache_load(tmp_path, 5, 97) is None


def test_store_sources(tmp_path):
    s = ModPolyStore(983, cache_dir=tmp_path)
    assert s.get(2).provenance == "qexp"
    assert s.get(6).provenance == "composite-built"
    assert (tmp_path / "phi_6_p983.txt").exists()
    assert ModPolyStore(983, db_path=shipped_db()).get(7).provenance == "database"
    with pytest.raises(MissingLevel):
        ModPolyStore(983).get(67)
    assert not ModPolyStore(983).available(134)
    assert ModPolyStore(983).available(36)


def test_composite_is_symmetric_and_matches_resultant_oracle():
    p = 101
    ctx = field_make(p)
    prim = {2: modular_poly_qexp(2, p), 3: modular_poly_qexp(3, p)}
    r6 = modular_poly_composite(6, p, prim, ctx)
    assert r6.check()
    assert resultant_compose(prim[2], prim[3]) == r6.poly


@given(st.integers(0, 83 * 83 - 1))
def test_phi_roots_are_velu_neighbours(j):
    ctx = field_make(83)
    db = parse_db(shipped_db(), [3], 83)
    assert neighbors(j, db[3], ctx) == velu_neighbors(j, 3, ctx).values()


def test_cyclic_neighbours_level4_galois_stable():
    p = 983
    ctx = field_make(p)
    prim = {2: modular_poly_qexp(2, p)}
    j = 5 + 7 * p
    nb = cyclic_neighbors(j, 4, prim, ctx)
    assert len(nb) == 6
    rec4 = modular_poly_composite(4, p, prim, ctx)
    assert neighbors(j, rec4, ctx) == nb.values()
