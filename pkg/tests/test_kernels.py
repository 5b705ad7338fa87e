"""The compiled scans and the pure-Python fallback must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest

from mutations import _rebuild, _with, mutants
from support import action, two_category
from twocat import _backend, _kernels_py
from twocat.core2 import _reference_check, delooping, symmetric_group3
from twocat.pseudo import identity_pseudofunctor, relative_center
from twocat.standard import standard_2categories

compiled = pytest.importorskip("twocat._kernels", reason="compiled kernels not built")


def normalized(found):
    return [(int(code), tuple(int(c) for c in cells)) for code, cells in found]


def scan_inputs():
    cats = list(standard_2categories().values())
    for B in list(cats):
        cats += [m.cat for m in mutants(B) if not _reference_check(m.cat)]
    c3 = two_category("sigma_c3")
    cats.append(_rebuild(c3, hcomp1=_with(c3.hc1, (1, 1), 1), hcomp2=_with(c3.hc2, (1, 1), 1)))
    c1c2 = two_category("sigma_c1_c2")
    cats.append(_rebuild(c1c2, hcomp2=_with(c1c2.hc2, (1, 1), 1)))
    return cats


@pytest.mark.parametrize("B", scan_inputs(), ids=lambda B: B.name)
def test_category_and_horizontal_scans_agree(B):
    h1, vc, h2 = B.dense()
    for module_args in ((B.src2, B.tgt2, vc, B.id2), (B.src1, B.tgt1, h1, B.unit1)):
        assert normalized(compiled.category_violations(*module_args)) == \
            normalized(_kernels_py.category_violations(*module_args))
    args = (B.src1, B.tgt1, h1, B.unit1, B.src2, B.tgt2, h2, vc, B.id2)
    assert normalized(compiled.horizontal_violations(*args)) == normalized(_kernels_py.horizontal_violations(*args))
    inv_args = (B.src2, B.tgt2, vc, B.id2)
    assert [int(x) for x in compiled.inverse_table(*inv_args)] == [int(x) for x in _kernels_py.inverse_table(*inv_args)]


def monoidal_inputs():
    out = []
    for B in (two_category("sigma_c4"), two_category("sigma_c1_c2"), delooping(symmetric_group3())):
        M = relative_center(identity_pseudofunctor(B))
        out.append((B.name, M, {}))
    M = relative_center(identity_pseudofunctor(two_category("sigma_c4")))
    out.append(("corrupt objects", M, {"obj": ((1, 1), 1)}))
    M2 = relative_center(identity_pseudofunctor(two_category("sigma_c1_c2")))
    out.append(("corrupt morphisms", M2, {"mor": ((0, 1), 0)}))
    return out


def dense_tables(M, change):
    C = M.cat
    n, m = C.n_objects, C.n_morphisms
    t_obj = np.full((n, n), -1, dtype=np.int32)
    t_mor = np.full((m, m), -1, dtype=np.int32)
    for (i, j), k in M.tensor_obj.items():
        t_obj[i, j] = k
    for (a, b), k in M.tensor_mor.items():
        t_mor[a, b] = k
    if "obj" in change:
        (i, j), k = change["obj"]
        t_obj[i, j] = k
    if "mor" in change:
        (a, b), k = change["mor"]
        t_mor[a, b] = k
    return (C.src, C.tgt, C.dense(), C.identity, t_obj, t_mor, M.unit)


@pytest.mark.parametrize("label, M, change", monoidal_inputs(), ids=lambda v: v if isinstance(v, str) else "")
def test_monoidal_scans_agree(label, M, change):
    args = dense_tables(M, change)
    fast, slow = normalized(compiled.monoidal_violations(*args)), normalized(_kernels_py.monoidal_violations(*args))
    assert fast == slow
    assert bool(fast) == bool(change)


def test_forced_fallback_is_selected():
    env = dict(os.environ, TWOCAT_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", "import twocat; print(twocat.BACKEND)"],
                          env=env, capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "python"
    assert _backend.BACKEND in {"compiled", "python"}


def test_fallback_backend_passes_validation_end_to_end():
    env = dict(os.environ, TWOCAT_PURE_PYTHON="1")
    code = ("from twocat.cli import run_command; "
            "import sys; sys.exit(run_command(['zg', 'sigma_c4', 'inv_act'])[0])")
    assert subprocess.run([sys.executable, "-c", code], env=env, check=False).returncode == 0
    assert action("inv_act")[1].strict
