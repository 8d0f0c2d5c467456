import pytest

from staircase import _kernel_py, kernel

ck = pytest.importorskip("staircase._ckernel")


@pytest.mark.parametrize("n", range(6))
def test_census_cython_equals_python(n):
    assert dict(ck.census(n)) == dict(_kernel_py.census(n))


@pytest.mark.parametrize("n,bits", [(3, 0b101), (4, 0b0110), (5, 0b11111)])
def test_census_type_filter(n, bits):
    assert dict(ck.census(n, bits)) == dict(_kernel_py.census(n, bits))
    assert all(k[0] == bits for k in ck.census(n, bits))


@pytest.mark.parametrize("n", range(6))
def test_count(n):
    assert ck.count(n) == _kernel_py.count(n)


def test_count_n6():
    assert ck.count(6) == 4 ** 6 * 720


def test_backend_selected():
    assert kernel.BACKEND == "cython"


def test_pure_python_switch(monkeypatch):
    import importlib

    monkeypatch.setenv("STAIRCASE_PURE_PYTHON", "1")
    k2 = importlib.reload(kernel)
    try:
        assert k2.BACKEND == "python"
        assert k2.census is _kernel_py.census
    finally:
        monkeypatch.delenv("STAIRCASE_PURE_PYTHON")
        importlib.reload(kernel)
