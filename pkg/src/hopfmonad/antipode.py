"""Left/right antipodes and the derived-identity suite.

In the fixed dual-basis conventions of cat.py, left and right duals of
an object are the same word and double duals are literal identities, so
the canonical identifications the formulas normally carry are all
equalities of words here.
"""

from __future__ import annotations

from .cat import (
    GradedMor,
    GradedObj,
    coev_mor,
    coev_right_mor,
    ev_mor,
    ev_right_mor,
    identity,
)
from .chain import Chain, CoreStep, MorStep, extend_unary
from .exactla import ExactError
from .monad import (
    Element,
    TensoringBimonad,
    TransTT,
    check_monad_morphism,
    compare_at,
    convolve,
    eta_element,
    identity_trans,
)
from .report import Report


class AntipodeData:
    """Stored antipode components at simples (either side may be absent)."""

    def __init__(self, t: TensoringBimonad, sl: dict | None = None,
                 sr: dict | None = None):
        self.t = t
        self.sl = dict(sl) if sl is not None else None
        self.sr = dict(sr) if sr is not None else None
        for comps in (self.sl, self.sr):
            if comps is None:
                continue
            for g in t.simples():
                s = t.simple(g)
                want_src = t.on_obj(t.on_obj(s).dual())
                if g not in comps:
                    comps[g] = GradedMor.zero(want_src, s.dual())
                if comps[g].src != want_src or comps[g].dst != s.dual():
                    raise ExactError(f"antipode component at {g} has wrong ends")

    # -- extensions ---------------------------------------------------------

    def _side_step(self, comps: dict, x: GradedObj):
        t = self.t
        if t.base.is_vector:
            core = comps[(0, 0)].block(0, 0)
            src = t.on_obj(t.on_obj(x).dual())
            return CoreStep(src, x.dual(), core,
                            in_axes=(0, 1 + len(x.atoms)), out_axes=())
        comp = extend_unary(
            x, lambda g: comps.get(g),
            lambda a: t.on_obj(t.on_obj(a).dual()),
            lambda f: t.on_mor(t.on_mor(f).ldual()),
            lambda a: a.dual(),
            lambda f: f.ldual(),
            contravariant=True)
        return MorStep(comp)

    def sl_step(self, x: GradedObj):
        if self.sl is None:
            raise ExactError("no left antipode data")
        return self._side_step(self.sl, x)

    def sr_step(self, x: GradedObj):
        if self.sr is None:
            raise ExactError("no right antipode data")
        return self._side_step(self.sr, x)

    def sl_at(self, x: GradedObj) -> GradedMor:
        step = self.sl_step(x)
        return step.to_mor() if isinstance(step, CoreStep) else step.mor

    def sr_at(self, x: GradedObj) -> GradedMor:
        step = self.sr_step(x)
        return step.to_mor() if isinstance(step, CoreStep) else step.mor

    @property
    def has_left(self) -> bool:
        return self.sl is not None

    @property
    def has_right(self) -> bool:
        return self.sr is not None


# ---------------------------------------------------------------------------
# Axioms
# ---------------------------------------------------------------------------


def check_left_antipode(t: TensoringBimonad, a: AntipodeData) -> Report:
    rep = Report(f"{t.name}: left antipode axioms")
    if not a.has_left:
        rep.skip("antipode.left_ev", "no left antipode data")
        rep.skip("antipode.left_coev", "no left antipode data")
        return rep

    def ev_items():
        for g in t.simples():
            s = t.simple(g)
            ts = t.on_obj(s)
            src = t.on_obj(ts.dual().tensor(s))
            lhs = Chain(src).then(t.eta_mor(s).ldual(), at=1) \
                            .then(ev_mor(s), at=1) \
                            .then(t.t0_step(), at=0)
            rhs = Chain(src).then(t.t2_step(ts.dual(), s), at=0) \
                            .then(t.mu_mor(s).ldual(), at=1) \
                            .then(a.sl_step(ts), at=0) \
                            .then(ev_mor(ts), at=0)
            yield (g,), lhs, rhs

    def coev_items():
        for g in t.simples():
            s = t.simple(g)
            ts = t.on_obj(s)
            src = t.carrier
            lhs = Chain(src).then(t.t0_step(), at=0) \
                            .then(coev_mor(s), at=0) \
                            .then(t.eta_step(s), at=0)
            rhs = Chain(src).then(coev_mor(ts), at=1) \
                            .then(t.t2_step(ts, ts.dual()), at=0) \
                            .then(t.mu_step(s), at=0) \
                            .then(a.sl_step(s), at=2)
            yield (g,), lhs, rhs

    compare_at(rep, "antipode.left_ev", ev_items())
    compare_at(rep, "antipode.left_coev", coev_items())
    return rep


def check_right_antipode(t: TensoringBimonad, a: AntipodeData) -> Report:
    rep = Report(f"{t.name}: right antipode axioms")
    if not a.has_right:
        rep.skip("antipode.right_ev", "no right antipode data")
        rep.skip("antipode.right_coev", "no right antipode data")
        return rep

    def ev_items():
        for g in t.simples():
            s = t.simple(g)
            ts = t.on_obj(s)
            src = t.on_obj(s.tensor(ts.dual()))
            lhs = Chain(src).then(t.eta_mor(s).rdual(), at=2) \
                            .then(ev_right_mor(s), at=1) \
                            .then(t.t0_step(), at=0)
            rhs = Chain(src).then(t.t2_step(s, ts.dual()), at=0) \
                            .then(t.mu_mor(s).rdual(), at=3) \
                            .then(a.sr_step(ts), at=2) \
                            .then(ev_right_mor(ts), at=0)
            yield (g,), lhs, rhs

    def coev_items():
        for g in t.simples():
            s = t.simple(g)
            ts = t.on_obj(s)
            src = t.carrier
            lhs = Chain(src).then(t.t0_step(), at=0) \
                            .then(coev_right_mor(s), at=0) \
                            .then(t.eta_step(s), at=1)
            rhs = Chain(src).then(coev_right_mor(ts), at=1) \
                            .then(t.t2_step(ts.dual(), ts), at=0) \
                            .then(a.sr_step(s), at=0) \
                            .then(t.mu_step(s), at=1)
            yield (g,), lhs, rhs

    compare_at(rep, "antipode.right_ev", ev_items())
    compare_at(rep, "antipode.right_coev", coev_items())
    return rep


# ---------------------------------------------------------------------------
# Derived identities (consequences; they double as self-tests)
# ---------------------------------------------------------------------------


def derived_identity_suite(t: TensoringBimonad, a: AntipodeData) -> Report:
    rep = Report(f"{t.name}: antipode derived identities")
    sides = []
    if a.has_left:
        sides.append(("left", a.sl_step, a.sl_at))
    if a.has_right:
        sides.append(("right", a.sr_step, a.sr_at))
    if not sides:
        rep.skip("antipode.derived", "no antipode data")
        return rep

    for label, s_step, s_at in sides:
        def anti_mult_items(s_step=s_step):
            for g in t.simples():
                s = t.simple(g)
                ts = t.on_obj(s)
                src = t.on_obj(t.on_obj(ts.dual()))
                lhs = Chain(src).then(t.mu_step(ts.dual()), at=0) \
                                .then(s_step(s), at=0)
                rhs = Chain(src).then(t.mu_mor(s).ldual(), at=2) \
                                .then(s_step(ts), at=1) \
                                .then(s_step(s), at=0)
                yield (g,), lhs, rhs

        def anti_unit_items(s_step=s_step):
            for g in t.simples():
                s = t.simple(g)
                ts = t.on_obj(s)
                src = ts.dual()
                lhs = Chain(src).then(t.eta_step(src), at=0).then(s_step(s), at=0)
                rhs = Chain(src).then(t.eta_mor(s).ldual(), at=0)
                yield (g,), lhs, rhs

        def anti_comult_items(s_step=s_step):
            for g1, g2 in t.composable_pairs():
                s1, s2 = t.simple(g1), t.simple(g2)
                t1, t2obj = t.on_obj(s1), t.on_obj(s2)
                src = t.on_obj(t1.tensor(t2obj).dual())
                lhs = Chain(src).then(t.t2_mor(s1, s2).ldual(), at=1) \
                                .then(s_step(s1.tensor(s2)), at=0)
                rhs = Chain(src).then(t.t2_step(t2obj.dual(), t1.dual()), at=0) \
                                .then(s_step(s2), at=0) \
                                .then(s_step(s1), at=len(s2.atoms))
                yield (g1, g2), lhs, rhs

        def anti_counit_items(s_step=s_step):
            src = t.carrier
            lhs = Chain(src).then(t.t0.ldual(), at=1).then(s_step(t.unit_obj()), at=0)
            rhs = Chain(src).then(t.t0_step(), at=0)
            yield (), lhs, rhs

        compare_at(rep, f"derived.{label}_anti_mult", anti_mult_items())
        compare_at(rep, f"derived.{label}_anti_unit", anti_unit_items())
        compare_at(rep, f"derived.{label}_anti_comult", anti_comult_items())
        compare_at(rep, f"derived.{label}_anti_counit", anti_counit_items())
    return rep


def check_antipode_inverse(t: TensoringBimonad, a: AntipodeData) -> Report:
    """The two sides are mutually inverse in the composite sense."""
    rep = Report(f"{t.name}: antipode inversion")
    if not (a.has_left and a.has_right):
        rep.skip("antipode.inverse_rl", "needs both sides")
        rep.skip("antipode.inverse_lr", "needs both sides")
        return rep

    def rl_items():
        for g in t.simples():
            s = t.simple(g)
            ts = t.on_obj(s)
            src = ts
            lhs = Chain(src).then(a.sl_at(s).rdual(), at=1) \
                            .then(a.sr_step(ts.dual()), at=0)
            yield (g,), lhs, Chain(src)

    def lr_items():
        for g in t.simples():
            s = t.simple(g)
            ts = t.on_obj(s)
            src = ts
            lhs = Chain(src).then(a.sr_at(s).ldual(), at=1) \
                            .then(a.sl_step(ts.dual()), at=0)
            yield (g,), lhs, Chain(src)

    compare_at(rep, "antipode.inverse_rl", rl_items())
    compare_at(rep, "antipode.inverse_lr", lr_items())
    return rep


# ---------------------------------------------------------------------------
# Antipode on convolution elements, square, sovereign, involutory
# ---------------------------------------------------------------------------


def s_map(t: TensoringBimonad, a: AntipodeData, f: Element) -> Element:
    """Antipode acting on 1 -> T families (via the left antipode)."""
    comps = {}
    for g in t.simples():
        s = t.simple(g)
        ts = t.on_obj(s)
        ch = Chain(ts.dual()).then(f.at_step(ts.dual()), at=0) \
                             .then(a.sl_step(s), at=0)
        comps[g] = ch.eval().rdual()
    return Element(t, comps, f"S({f.label})")


def s_inv_map(t: TensoringBimonad, a: AntipodeData, f: Element) -> Element:
    """Inverse of s_map (via the right antipode)."""
    comps = {}
    for g in t.simples():
        s = t.simple(g)
        ts = t.on_obj(s)
        ch = Chain(ts.dual()).then(f.at_step(ts.dual()), at=0) \
                             .then(a.sr_step(s), at=0)
        comps[g] = ch.eval().ldual()
    return Element(t, comps, f"S^-1({f.label})")


def square_of_antipode(t: TensoringBimonad, a: AntipodeData) -> TransTT:
    """The double antipode as a T -> T family (canonical pivotal data)."""
    comps = {}
    for g in t.simples():
        s = t.simple(g)
        ts = t.on_obj(s)
        ch = Chain(ts).then(a.sl_at(s).ldual(), at=1) \
                      .then(a.sl_step(ts.dual()), at=0)
        comps[g] = ch.eval()
    return TransTT(t, t, comps, "S2")


def inverse_square_of_antipode(t: TensoringBimonad, a: AntipodeData) -> TransTT:
    comps = {}
    for g in t.simples():
        s = t.simple(g)
        ts = t.on_obj(s)
        ch = Chain(ts).then(a.sr_at(s).rdual(), at=1) \
                      .then(a.sr_step(ts.dual()), at=0)
        comps[g] = ch.eval()
    return TransTT(t, t, comps, "S-2")


def apply_trans(trans: TransTT, f: Element) -> Element:
    """Compose a T -> T family with a 1 -> T family."""
    comps = {g: trans.comps[g] @ f.comps[g] for g in trans.t.simples()}
    return Element(trans.t, comps, f"{trans.label}({f.label})")


def check_square_automorphism(t: TensoringBimonad, a: AntipodeData) -> Report:
    """The antipode square is a bimonad automorphism with the stated inverse."""
    s2 = square_of_antipode(t, a)
    rep = check_monad_morphism(s2)
    rep.name = f"{t.name}: antipode square"
    s2inv = inverse_square_of_antipode(t, a)
    both = s2.compose(s2inv)
    both2 = s2inv.compose(s2)
    rep.record("square.inverse", both.is_identity() and both2.is_identity())
    return rep


def check_sovereign_element(t: TensoringBimonad, a: AntipodeData,
                            g_elt: Element) -> bool:
    """Whether the double antipode equals conjugation by the element."""
    from .monad import adjoint_action, check_grouplike
    if not check_grouplike(t, g_elt):
        return False
    g_inv = s_map(t, a, g_elt)
    ad = adjoint_action(t, g_elt, g_inv)
    return square_of_antipode(t, a) == ad


def is_involutory(t: TensoringBimonad, a: AntipodeData) -> bool:
    """Double antipode trivial; cross-checked against the two-sided test."""
    by_square = square_of_antipode(t, a) == identity_trans(t)
    # equivalent criterion: both antipode sides coincide componentwise
    by_sides = all(a.sl[g] == a.sr[g] for g in t.simples())
    if by_square != by_sides:
        raise ExactError("involutivity criteria disagree; internal error")
    return by_square


def check_s_map_laws(t: TensoringBimonad, a: AntipodeData,
                     samples: list, rep: Report | None = None) -> Report:
    """Anti-homomorphism and inversion laws for the antipode on elements."""
    rep = rep or Report(f"{t.name}: antipode on convolution elements")
    eta = eta_element(t)
    rep.record("elements.antipode_unit", s_map(t, a, eta) == eta)
    ok = True
    for f in samples:
        if s_map(t, a, s_inv_map(t, a, f)) != f or \
                s_inv_map(t, a, s_map(t, a, f)) != f:
            ok = False
            break
    rep.record("elements.antipode_inverse_map", ok)
    ok = True
    for f in samples:
        for g in samples:
            lhs = s_map(t, a, convolve(t, f, g))
            rhs = convolve(t, s_map(t, a, g), s_map(t, a, f))
            if lhs != rhs:
                ok = False
                break
    rep.record("elements.antipode_anti_hom", ok)
    s2 = square_of_antipode(t, a)
    ok = all(apply_trans(s2, f) == s_map(t, a, s_map(t, a, f)) for f in samples)
    rep.record("elements.square_consistency", ok)
    return rep
