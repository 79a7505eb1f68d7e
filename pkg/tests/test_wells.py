"""Automorphism lifting: compatible pairs, obstruction map, exactness."""

import pytest

import rrbgroups.wells as wells_mod
from rrbgroups import (
    RRBError,
    WellsContext,
    act_on_class,
    act_on_factor_system,
    aut_AK_H,
    aut_K_H,
    aut_to_z1,
    cochain_complex,
    compatible_pairs,
    extract_factor_system,
    extract_module,
    gamma_act,
    identity_pair,
    inducible_by_module_criterion,
    is_inducible,
    pair_is_compatible,
    restrict_and_induce,
    twisted_module,
    verify_wells_exactness,
    wells_map,
    z1_to_aut,
    zero_factor_system,
)
from rrbgroups.wells import CompatiblePair, _morphism_key, _pair_key
from oracles import cocycle_violations, fs_key

WELLS_EXTS = ("product_z2", "built_z2", "z4_carry", "z9", "s3", "z3_z4_twist",
              "z2_z4_image", "z2_z4_kernel", "z4_z4_diag", "parity_zero",
              "parity_twisted", "z3_triv", "z9_mul4", "z4_klein_f")


@pytest.fixture(scope="module")
def contexts(ext_corpus):
    return {name: WellsContext(ext_corpus[name]) for name in WELLS_EXTS}


class TestCompatiblePairs:
    def test_trivial_module_admits_every_pair(self, contexts):
        ctx = contexts["z3_triv"]
        assert len(ctx.compatible()) == len(ctx.all_pairs()) == 16

    def test_identity_always_compatible(self, contexts):
        for ctx in contexts.values():
            ident = identity_pair(ctx.module)
            assert pair_is_compatible(ctx.module, ident)
            assert _pair_key(ident) in {_pair_key(c) for c in ctx.compatible()}

    def test_nontrivial_action_filters_pairs(self, contexts):
        # The bridging map f(l, a) = l*a forces theta1 = theta2 * psi1, so
        # only half of the automorphism pairs are compatible.
        ctx = contexts["z9_mul4"]
        assert len(ctx.compatible()) == 4
        assert len(ctx.all_pairs()) == 8
        module = ctx.module
        nu, mu, sigma, f = (module.action.nu, module.action.mu,
                            module.action.sigma, module.action.f)
        for pair in ctx.all_pairs():
            psi1, psi2 = pair.psi.psi.image, pair.psi.eta.image
            th1, th2 = pair.theta.psi.image, pair.theta.eta.image
            ok = True
            for b in module.B.elements():
                for k in module.K.elements():
                    if int(th1[nu[b, k]]) != int(nu[psi2[b], th1[k]]):
                        ok = False
                for l in module.L.elements():
                    if int(th2[sigma[b, l]]) != int(sigma[psi2[b], th2[l]]):
                        ok = False
            for a in module.A.elements():
                for k in module.K.elements():
                    if int(th1[mu[a, k]]) != int(mu[psi1[a], th1[k]]):
                        ok = False
                for l in module.L.elements():
                    if int(th1[f[l, a]]) != int(f[th2[l], psi1[a]]):
                        ok = False
            assert pair_is_compatible(module, pair) == ok

    def test_group_structure(self, contexts):
        for name in ("z9", "z3_triv", "parity_zero"):
            C = contexts[name].compatible()
            keys = {_pair_key(c) for c in C}
            for c in C:
                assert _pair_key(c.inverse()) in keys
                for d in C:
                    assert _pair_key(c.compose(d)) in keys


class TestCochainAction:
    def test_identity_fixes_everything(self, contexts):
        for ctx in contexts.values():
            ident = identity_pair(ctx.module)
            assert act_on_factor_system(ident, ctx.fs, ctx.module) == ctx.fs

    def test_zero_goes_to_zero(self, contexts):
        for ctx in contexts.values():
            zero = zero_factor_system(ctx.module)
            for pair in ctx.compatible():
                assert act_on_factor_system(pair, zero, ctx.module) == zero

    def test_incompatible_pair_rejected(self, contexts):
        ctx = contexts["z9_mul4"]
        bad = next(p for p in ctx.all_pairs()
                   if not pair_is_compatible(ctx.module, p))
        with pytest.raises(RRBError) as err:
            act_on_factor_system(bad, ctx.fs, ctx.module)
        assert err.value.code == "PairNotCompatible"

    def test_preserves_cocycles_and_coboundaries(self, contexts):
        for name in ("z9", "z4_z4_diag", "parity_twisted", "z3_triv", "z9_mul4", "z4_klein_f"):
            ctx = contexts[name]
            cx = ctx.complex
            import itertools
            for pair in ctx.compatible():
                for fs in itertools.islice(cx.z2_elements(), 10):
                    moved = act_on_factor_system(pair, fs, ctx.module)
                    assert cocycle_violations(ctx.module, moved) == []
                for vec in itertools.islice(cx.b2().elements(), 10):
                    fs = cx.fs_from_coords(vec)
                    moved = act_on_factor_system(pair, fs, ctx.module)
                    assert cx.b2().contains(cx.fs_to_coords(moved))

    def test_action_on_classes_is_well_defined(self, contexts):
        ctx = contexts["z9"]
        cx = ctx.complex
        for pair in ctx.compatible():
            for cls in cx.h2_classes():
                rep = cx.class_representative(cls)
                got1 = cx.class_of(act_on_factor_system(pair, rep, ctx.module))
                assert act_on_class(pair, cls) == got1

    def test_semidirect_compatibility_law(self, contexts):
        # ([E]^h)^c == ([E]^c)^(h^c)
        for name in ("z9", "z3_triv"):
            ctx = contexts[name]
            cx = ctx.complex
            for c in ctx.compatible():
                for h in cx.h2_classes():
                    lhs = act_on_class(c, ctx.base_class + h)
                    rhs = act_on_class(c, ctx.base_class) + act_on_class(c, h)
                    assert lhs == rhs

    def test_gamma_act_matches_composition(self, contexts):
        ctx = contexts["z9"]
        cx = ctx.complex
        for c in ctx.compatible():
            for h in cx.h2_classes():
                assert gamma_act(c, h, ctx.base_class) == act_on_class(c, ctx.base_class) + h


class TestWellsMap:
    def test_identity_pair_maps_to_zero(self, contexts):
        for ctx in contexts.values():
            assert wells_map(ctx.ext, identity_pair(ctx.module), ctx).is_zero()

    def test_split_extension_has_zero_obstruction(self, contexts):
        for name in ("product_z2", "parity_zero"):
            ctx = contexts[name]
            assert fs_key(ctx.module, ctx.fs) == fs_key(ctx.module,
                                                        zero_factor_system(ctx.module))
            for pair in ctx.compatible():
                assert wells_map(ctx.ext, pair, ctx).is_zero()

    def test_derivation_law(self, contexts):
        for ctx in contexts.values():
            C = ctx.compatible()
            omega = {_pair_key(c): wells_map(ctx.ext, c, ctx) for c in C}
            for c1 in C:
                for c2 in C:
                    lhs = omega[_pair_key(c1.compose(c2))]
                    rhs = act_on_class(c2, omega[_pair_key(c1)]) + omega[_pair_key(c2)]
                    assert lhs == rhs


class TestRestrictionAndDerivations:
    def test_identity_automorphism_restricts_to_identity_pair(self, contexts):
        from rrbgroups import identity_morphism

        for ctx in contexts.values():
            pair = restrict_and_induce(identity_morphism(ctx.ext.total), ctx.ext, ctx)
            assert pair.is_identity()

    def test_induced_pair_independent_of_section(self, ext_corpus):
        from test_extensions import perturbed_section

        for name in ("z9", "z4_z4_diag", "parity_twisted"):
            ext = ext_corpus[name]
            ctx = WellsContext(ext)
            sec2 = perturbed_section(ext)
            for gamma in aut_K_H(ext):
                pair = restrict_and_induce(gamma, ext, ctx)
                psi1 = [ext.proj.psi(gamma.psi(int(sec2.s_H[a])))
                        for a in ext.quotient.H.elements()]
                psi2 = [ext.proj.eta(gamma.eta(int(sec2.s_G[b])))
                        for b in ext.quotient.G.elements()]
                assert pair.psi.psi.image.tolist() == psi1
                assert pair.psi.eta.image.tolist() == psi2

    def test_image_of_restriction_inside_obstruction_kernel(self, contexts):
        for ctx in contexts.values():
            for gamma in aut_K_H(ctx.ext, ctx.max_order):
                pair = restrict_and_induce(gamma, ctx.ext, ctx)
                assert wells_map(ctx.ext, pair, ctx).is_zero()

    def test_derivations_biject_with_stable_automorphisms(self, contexts):
        for ctx in contexts.values():
            z1 = list(ctx.complex.z1_elements())
            autAK = aut_AK_H(ctx.ext, ctx)
            assert len(z1) == len(autAK)
            for kappa in z1:
                gamma = z1_to_aut(kappa, ctx.ext, ctx)
                assert aut_to_z1(gamma, ctx.ext, ctx) == kappa
            for gamma in autAK:
                kappa = aut_to_z1(gamma, ctx.ext, ctx)
                assert _morphism_key(z1_to_aut(kappa, ctx.ext, ctx)) == _morphism_key(gamma)

    def test_zero_derivation_is_identity(self, contexts):
        from rrbgroups import OneCochain

        ctx = contexts["z9"]
        zero = OneCochain([0] * ctx.module.A.order, [0] * ctx.module.B.order)
        gamma = z1_to_aut(zero, ctx.ext, ctx)
        assert _morphism_key(gamma) == (tuple(ctx.ext.total.H.elements()),
                                        tuple(ctx.ext.total.G.elements()))

    def test_non_derivation_rejected(self, contexts):
        from rrbgroups import OneCochain

        ctx = contexts["z9"]
        kappa = OneCochain([0, 1, 0], [0])  # kappa(2) != 2 kappa(1)
        assert not ctx.complex.z1_contains(kappa)[0]
        with pytest.raises(RRBError) as err:
            z1_to_aut(kappa, ctx.ext, ctx)
        assert err.value.code == "NotInZ1"


class TestInducibility:
    def test_identity_inducible_with_identity_witness(self, contexts):
        for ctx in contexts.values():
            ok, witness = is_inducible(ctx.ext, identity_pair(ctx.module), ctx)
            assert ok
            assert _morphism_key(witness) == (tuple(ctx.ext.total.H.elements()),
                                              tuple(ctx.ext.total.G.elements()))

    def test_incompatible_pair_not_inducible(self, contexts):
        ctx = contexts["z9_mul4"]
        bad = next(p for p in ctx.all_pairs()
                   if not pair_is_compatible(ctx.module, p))
        ok, witness = is_inducible(ctx.ext, bad, ctx)
        assert not ok and witness is None

    def test_z9_obstructed_pairs(self, contexts):
        ctx = contexts["z9"]
        verdicts = {}
        for pair in ctx.all_pairs():
            ok, _ = is_inducible(ctx.ext, pair, ctx)
            verdicts[(tuple(pair.psi.psi.image.tolist()),
                      tuple(pair.theta.psi.image.tolist()))] = ok
        assert verdicts == {
            ((0, 1, 2), (0, 1, 2)): True,
            ((0, 1, 2), (0, 2, 1)): False,
            ((0, 2, 1), (0, 1, 2)): False,
            ((0, 2, 1), (0, 2, 1)): True,
        }

    def test_witnesses_are_lifts(self, contexts):
        for ctx in contexts.values():
            for pair in ctx.all_pairs():
                ok, witness = is_inducible(ctx.ext, pair, ctx)
                if not ok:
                    assert witness is None
                    continue
                assert witness.is_bijective()
                K_img = set(ctx.ext.incl.psi.image_elements())
                assert all(int(witness.psi(h)) in K_img for h in K_img)
                induced = restrict_and_induce(witness, ctx.ext, ctx)
                assert _pair_key(induced) == _pair_key(pair)

    def test_trivial_obstruction_group_makes_everything_inducible(self, contexts):
        ctx = contexts["s3"]
        assert ctx.complex.h2().order == 1
        C = ctx.compatible()
        assert len(C) == 2
        for pair in C:
            ok, witness = is_inducible(ctx.ext, pair, ctx)
            assert ok and witness is not None

    def test_module_criterion_agrees_everywhere(self, contexts):
        for ctx in contexts.values():
            for pair in ctx.all_pairs():
                direct, _ = is_inducible(ctx.ext, pair, ctx)
                assert inducible_by_module_criterion(ctx.ext, pair, ctx) == direct


class TestTwistedModule:
    def test_identity_twist_is_identity(self, contexts):
        for ctx in contexts.values():
            twisted = twisted_module(ctx.module, identity_pair(ctx.module).psi)
            assert twisted.action == ctx.module.action

    def test_twisted_module_validates(self, contexts):
        for name in ("z9", "parity_twisted", "z3_triv", "z9_mul4", "z4_klein_f"):
            ctx = contexts[name]
            for pair in ctx.compatible():
                twisted = twisted_module(ctx.module, pair.psi)
                assert twisted.quotient == ctx.module.quotient

    def test_rejects_non_automorphism(self, contexts):
        # The kernel's identity morphism is not a quotient automorphism here.
        ctx = contexts["parity_twisted"]
        with pytest.raises(RRBError) as err:
            twisted_module(ctx.module, identity_pair(ctx.module).theta)
        assert err.value.code == "PsiNotAutomorphism"


class TestExactnessReport:
    def test_product_extension_all_checks_pass(self, ext_corpus):
        report = verify_wells_exactness(ext_corpus["product_z2"])
        assert all(report.exactness.values())
        for rec in report.pairs:
            assert rec.in_C and rec.inducible

    def test_whole_corpus_passes(self, ext_corpus):
        for name in WELLS_EXTS:
            report = verify_wells_exactness(ext_corpus[name])
            assert all(report.exactness.values()), (name, report.exactness,
                                                    report.witnesses)
            for rec in report.pairs:
                assert rec.inducible == (rec.witness is not None)

    def test_fault_injection_breaks_kernel_image_check(self, ext_corpus, monkeypatch):
        # Shift the obstruction of every pair by a fixed nonzero class: the
        # identity pair leaves the restriction image but lands outside the
        # reported kernel, so the ker/im comparison must fail.
        ext = ext_corpus["z9"]
        real = wells_map

        def skewed(ext_arg, pair, context=None):
            cls = real(ext_arg, pair, context)
            shift = tuple((c + 1) % f for c, f in zip(cls.coords, cls.factors))
            from rrbgroups.cohomology import CohomologyClass
            return CohomologyClass(cls.complex, shift)

        monkeypatch.setattr(wells_mod, "wells_map", skewed)
        report = wells_mod.verify_wells_exactness(ext)
        assert report.exactness["ker_omega_eq_im_rho"] is False
        assert "ker_omega_eq_im_rho" in report.witnesses
