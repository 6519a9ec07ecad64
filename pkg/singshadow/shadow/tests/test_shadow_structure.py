# -*- coding: utf-8 -*-
# Copyright 2021 The singshadow developers
#
# This file is part of singshadow.
#
# singshadow is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# singshadow is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with singshadow. If not, see <http://www.gnu.org/licenses/>.

import warnings

import numpy as np
import pytest

from singshadow import data
from singshadow.algebra import build_linear, closure, enumerate_linear
from singshadow.exceptions import (
    AxiomWarning,
    InvalidSubshadow,
    NonBijectiveAction,
    ShadowAxiomViolation,
)
from singshadow.polynomial import render
from singshadow.shadow import (
    SHADOW_AXIOMS,
    ShadowStructure,
    Subshadow,
    build_shadow,
    canonical_shadow,
    forward_closure,
    shadow_isomorphisms,
    sp,
    subsp,
    verify_shadow_axioms,
)


def _swap_by_first(host):
    """X = {a, b} where only the first host element swaps a and b."""
    row_a = ["b"] + ["a"] * (host.size - 1)
    row_b = ["a"] + ["b"] * (host.size - 1)
    return [row_a, row_b]


class TestShadowStructure:
    def test_action_and_inverse(self, shadow_z8_z4):
        sh = shadow_z8_z4
        assert sh.size == 4
        assert sh.x_elements == ("1", "2", "3", "0")
        s = np.arange(sh.host.size)[None, :]
        assert np.array_equal(sh.inverse_action[sh.action, s], np.broadcast_to(
            np.arange(4)[:, None], sh.action.shape
        ))
        assert not sh.action.flags.writeable

    def test_labels(self, shadow_z8_w):
        sh = shadow_z8_w
        assert sh.index(3) == 2
        assert sh.label(0) == "1"
        assert sh.labels(sh.action[:, 0]) == ("3", "2", "1", "0")
        with pytest.raises(KeyError, match="not an element of X"):
            _ = sh.index("5")

    def test_fixed_counts(self, shadow_z8_w):
        assert shadow_z8_w.fixed_counts.tolist() == [0, 8, 0, 8]

    def test_shape_checked(self, z4):
        with pytest.raises(ValueError, match="must have shape"):
            _ = ShadowStructure(z4, ["a"], np.zeros((1, 3), dtype=int))

    def test_permuted(self, shadow_z12_z8):
        p = [7, 6, 5, 4, 3, 2, 1, 0]
        copy = shadow_z12_z8.permuted(p)
        assert copy.x_elements == tuple(reversed(shadow_z12_z8.x_elements))
        assert verify_shadow_axioms(copy).passed
        assert sp(copy) == sp(shadow_z12_z8)
        with pytest.raises(ValueError, match="is not a permutation of X"):
            _ = shadow_z12_z8.permuted([0] * 8)

    def test_repr(self, shadow_z6_z2):
        assert repr(shadow_z6_z2) == (
            "ShadowStructure 'Z2 over Z6 (a=5, b=2, c=1)', |X| = 2, host "
            "'Z6 (a=5, b=2, c=1)'"
        )


class TestBuildShadow:
    def test_packaged_pass(self, shadow_z6_z2, shadow_z8_z6, shadow_z12_z8):
        for sh in (shadow_z6_z2, shadow_z8_z6, shadow_z12_z8):
            report = verify_shadow_axioms(sh)
            assert report.passed
            assert tuple(report.results) == SHADOW_AXIOMS

    def test_axiom_violation(self, z4):
        with pytest.raises(
            ShadowAxiomViolation, match=r"'axiom_i' fails at \('a', '1', '2'\)"
        ) as e:
            _ = build_shadow(z4, ["a", "b"], _swap_by_first(z4))
        assert e.value.axiom == "axiom_i"

    def test_lenient(self, z4):
        with pytest.warns(AxiomWarning, match="is not a shadow"):
            sh = build_shadow(z4, ["a", "b"], _swap_by_first(z4), strict=False)
        assert sh.axiom_report["axiom_i"] == ("a", "1", "2")
        assert sh.name == f"shadow over {z4.name}"

    def test_non_bijective(self, z4):
        matrix = [["a", "a", "a", "a"], ["a", "b", "b", "b"]]
        with pytest.raises(NonBijectiveAction, match="Action of '1' is not"):
            _ = build_shadow(z4, ["a", "b"], matrix, strict=False)

    @pytest.mark.parametrize(
        "x_elements, matrix, match",
        [
            (["a", "a"], [["a"] * 4] * 2, "must be distinct"),
            (["a", "b"], [["a"] * 4], "must have shape"),
            (["a", "b"], [["a"] * 3, ["b"] * 3], "must have shape"),
            (["a", "b"], [["a"] * 4, ["c"] * 4], "'c'"),
        ],
    )
    def test_invalid(self, z4, x_elements, matrix, match):
        with pytest.raises(ValueError, match=match):
            _ = build_shadow(z4, x_elements, matrix)

    def test_integer_labels(self, z4):
        sh = build_shadow(z4, [0, 1], [[0] * 4, [1] * 4], name="trivial")
        assert sh.x_elements == ("0", "1")
        assert render(sp(sh)) == "2*t^4"

    def test_canonical_shadows_of_linear_structures(self):
        for n in range(1, 13):
            for spec in enumerate_linear(n):
                sh = canonical_shadow(build_linear(spec))
                assert verify_shadow_axioms(sh).passed, spec
                assert np.array_equal(sh.action, sh.host.star)

    def test_canonical_shadow_of_failing_structure(self, z10):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", AxiomWarning)
            sh = canonical_shadow(z10, strict=False)
        assert not verify_shadow_axioms(sh).passed


class TestShadowPolynomial:
    def test_sp_z6_z2(self, shadow_z6_z2):
        assert render(sp(shadow_z6_z2)) == "2*t^6"

    def test_subsp_z6_z2(self, shadow_z6_z2):
        sh = shadow_z6_z2
        one = sh.index("1")
        whole = Subshadow(range(sh.host.size), [one])
        assert render(subsp(sh, whole)) == "t^6"
        evens = Subshadow([sh.host.index(s) for s in ("2", "4", "0")], [one])
        assert render(subsp(sh, evens)) == "t^3"
        assert evens.labels(sh) == (("2", "4", "0"), ("1",))
        assert subsp(sh, Subshadow.whole(sh)) == sp(sh)

    def test_sp_z8(self, shadow_z8_z4, shadow_z8_w):
        assert render(sp(shadow_z8_z4)) == "4*t^4"
        assert render(sp(shadow_z8_w)) == "2*t^8 + 2"

    def test_invalid_subshadow(self, shadow_z6_z2, shadow_z8_w):
        sh = shadow_z6_z2
        with pytest.raises(InvalidSubshadow, match="is empty"):
            _ = subsp(sh, Subshadow([], [0]))
        with pytest.raises(InvalidSubshadow, match="is not a subsingquandle"):
            _ = subsp(sh, Subshadow([sh.host.index("1")], [0]))
        w = shadow_z8_w
        with pytest.raises(InvalidSubshadow):
            _ = subsp(w, Subshadow(range(8), [w.index("1")]))

    def test_forward_closure(self, shadow_z8_w, shadow_z8_z6):
        w = shadow_z8_w
        assert forward_closure(w, [w.index("1")], range(8)) == frozenset(
            [w.index("1"), w.index("3")]
        )
        assert forward_closure(w, [w.index("2")], range(8)) == {w.index("2")}
        assert forward_closure(w, [0], []) == {0}
        sh = shadow_z8_z6
        # Odd elements add 3
        odd = [sh.host.index("1")]
        assert sh.labels(sorted(forward_closure(sh, [sh.index("1")], odd))) == (
            "1",
            "4",
        )

    @pytest.mark.parametrize("shadow", data.builtin_names("shadows"))
    def test_forward_closure_is_orbit(self, shadow):
        sh = data.shadow(shadow)
        inverse = sh.inverse_action
        rng = np.random.default_rng(7)
        for _ in range(10):
            seed = rng.choice(sh.host.size, size=2).tolist()
            ss = sorted(closure(sh.host, seed))
            xs = [int(rng.integers(sh.size))]
            # Orbit under both the action and its inverse
            orbit = set(xs)
            frontier = list(xs)
            while frontier:
                x = frontier.pop()
                for s in ss:
                    for y in (sh.action[x, s], inverse[x, s]):
                        if int(y) not in orbit:
                            orbit.add(int(y))
                            frontier.append(int(y))
            found = forward_closure(sh, xs, ss)
            assert found == orbit
            assert forward_closure(sh, found, ss) == found


class TestShadowIsomorphisms:
    def test_different_sp(self, shadow_z8_z4, shadow_z8_w):
        assert shadow_isomorphisms(shadow_z8_z4, shadow_z8_w) == []

    def test_relabelled_copy(self, shadow_z8_z4):
        p = (2, 0, 3, 1)
        copy = shadow_z8_z4.permuted(p)
        found = shadow_isomorphisms(shadow_z8_z4, copy)
        identity = tuple(range(shadow_z8_z4.host.size))
        assert (identity, p) in found
        for f, phi in found:
            phi = np.asarray(phi)
            assert np.array_equal(
                phi[shadow_z8_z4.action], copy.action[phi][:, list(f)]
            )

    def test_self(self, shadow_z6_z2):
        found = shadow_isomorphisms(shadow_z6_z2, shadow_z6_z2, workers=2)
        assert found == sorted(found)
        assert len(found) > 0
