"""Smoke test for the hhwreath extension module.

Build and run:
    cargo build --release -p hhwreath-py --features extension-module
    cp target/release/libhhwreath.so python/hhwreath.so
    python3 python/smoke_test.py
"""

import hhwreath as hw

weyl = hw.load_preset("weyl")
assert weyl.d == 2 and weyl.betti == {0: 1}

s = hw.generating_series_product(weyl, 3, 6)
assert str(s) == "1 + q + q^2(1 + t^2) + q^3(1 + t^2 + t^4)", str(s)
assert s == hw.generating_series_sum(weyl, 3, 6)
assert s == hw.closed_form("PA", 3, 6)
assert s.q_row(3) == [1, 0, 1, 0, 1]

assert hw.hh_cohomology_wreath(weyl, 3) == {0: 1, 2: 1, 4: 1}
assert hw.deformation_parameter_count(hw.load_preset("qweyl"), 2) == 3
assert hw.hilb_poincare([1, 0, 1], 2) == [1, 0, 2, 0, 2]

custom = hw.Preset("surface", 2, {0: 1, 1: 2, 2: 1})
assert hw.generating_series_product(custom, 4, 8) == hw.generating_series_sum(custom, 4, 8)
try:
    hw.Preset("bad", 3, {0: 1})
except ValueError:
    pass
else:
    raise AssertionError("odd dimension accepted")

assert list(hw.hh_cohomology_rank_one("qweyl")) == [1, 2, 1]
assert list(hw.crossed_z2_cohomology("weyl")) == [1, 0, 1]
assert hw.hh_dims("cyclic", 2, 2) == [2, 0, 0]

e = hw.CherednikElement.from_word("p1 x1", 2)
assert str(e) == "x1 p1 - 1 + k s12", str(e)
x1 = hw.CherednikElement.from_word("x1", 2)
p1 = hw.CherednikElement.from_word("p1", 2)
assert p1 * x1 == e
assert (p1 * x1 - x1 * p1).max_degree() == 0
sym = hw.CherednikElement.symmetrizer(2)
assert sym * sym == sym
assert sym.spherical() == sym

ok, text = hw.run_verify("koszul")
assert ok, text

print("smoke test passed")
