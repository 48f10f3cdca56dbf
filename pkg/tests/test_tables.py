import pytest

from cliquetopo.errors import InvalidArgument
from cliquetopo.tables import build_table

import reference_data as R
from conftest import trim


@pytest.mark.parametrize("name,ref", [("dims-cycle", R.DIMS_CYCLE), ("dims-path", R.DIMS_PATH)])
def test_dimension_tables(name, ref):
    header, rows = build_table(name)
    assert header == ["n", "inddim", "twodimexp_minus_one", "cohodim", "maxdim"]
    for n, ind, exp, coho, top in rows:
        want = ref[n]
        # reference values carry six significant digits
        assert float(ind) == pytest.approx(want[0], rel=1e-5)
        assert float(exp) == pytest.approx(want[1], rel=1e-5)
        assert (coho, top) == want[2:]


def test_dihedral_table():
    _, rows = build_table("dihedral-betti")
    for n, betti, chi in rows:
        assert (chi, trim(betti)) == (R.DIHEDRAL_BETTI[n][0], trim(R.DIHEDRAL_BETTI[n][1]))


def test_unknown_table():
    with pytest.raises(InvalidArgument):
        build_table("nope")
