import json

import pytest

import torsionkit as tk
from torsionkit.errors import ParamOutOfRange
from torsionkit.generate import (
    InstanceGenerator,
    PolyInstanceGenerator,
    gen_instance,
)


def test_same_seed_same_document():
    for profile in ("iso", "qiso", "self", "non-qiso", "acyclic", "poly"):
        a = gen_instance(11, m=2, max_dim=4, profile=profile)
        b = gen_instance(11, m=2, max_dim=4, profile=profile)
        assert json.dumps(a) == json.dumps(b)


def test_different_seed_differs():
    a = gen_instance(1, profile="qiso")
    b = gen_instance(2, profile="qiso")
    assert a != b


def test_param_bounds():
    with pytest.raises(ParamOutOfRange):
        gen_instance(1, m=7)
    with pytest.raises(ParamOutOfRange):
        gen_instance(1, max_dim=9)
    with pytest.raises(ParamOutOfRange):
        gen_instance(1, profile="bogus")


def test_generated_quasi_isos_are_quasi_isos():
    for seed in range(10):
        gen = InstanceGenerator(seed)
        f = gen.random_quasi_iso(seed % 5, 6)
        tk.validate_chain_map(f)
        assert tk.is_quasi_isomorphism(f)


def test_generated_quasi_isos_over_qt():
    for seed in range(4):
        gen = InstanceGenerator(seed, ring=tk.QT)
        f = gen.random_quasi_iso(seed % 3, 3)
        tk.validate_chain_map(f)
        assert tk.is_quasi_isomorphism(f)


def test_non_qiso_profile_fails_quasi_isomorphism():
    for seed in range(6):
        gen = InstanceGenerator(seed)
        f = gen.random_non_quasi_iso(2, 5)
        tk.validate_chain_map(f)
        assert not tk.is_quasi_isomorphism(f)


def test_self_maps_share_endpoints():
    for seed in range(6):
        gen = InstanceGenerator(seed)
        f = gen.random_self_quasi_iso(seed % 4, 6)
        assert f.source == f.target
        tk.validate_chain_map(f)
        assert tk.is_quasi_isomorphism(f)


def test_acyclic_generator():
    for seed in range(6):
        gen = InstanceGenerator(seed)
        c = gen.random_acyclic(seed % 5, 6)
        assert tk.is_acyclic(c)


def test_poly_generator_rank_zero_with_known_orders():
    for seed in range(8):
        gen = PolyInstanceGenerator(seed)
        c, expected = gen.random_rank_zero_complex(1 + seed % 3, 3)
        tk.validate_complex(c)
        assert list(tk.homology_orders(c)) == expected


def test_poly_unimodular_inverse_pairs():
    gen = PolyInstanceGenerator(2)
    for n in (0, 1, 3):
        p, p_inv = gen.random_unimodular(n)
        assert p @ p_inv == tk.Matrix.identity(tk.QPOLY, n)
