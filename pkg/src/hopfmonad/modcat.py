"""The category of modules over a tensoring bimonad.

Modules are pairs (M, r) with r: T(M) -> M; maps between them are solved
for exactly, tensor products use the coproduct, duals use the antipode.
"""

from __future__ import annotations

from .antipode import AntipodeData
from .cat import (
    GradedMor,
    GradedObj,
    coev_mor,
    coev_right_mor,
    ev_mor,
    ev_right_mor,
    identity,
)
from .chain import Chain, CoreStep
from .exactla import ExactError, Mat, kernel, solve_affine
from .monad import TensoringBimonad, TransTT
from .report import Report


class TModule:
    """A module (M, r) over a tensoring bimonad."""

    __slots__ = ("t", "carrier", "action")

    def __init__(self, t: TensoringBimonad, carrier: GradedObj,
                 action: GradedMor, check: bool = True):
        self.t = t
        self.carrier = carrier
        self.action = action
        if action.src != t.on_obj(carrier) or action.dst != carrier:
            raise ExactError("action must map T(M) -> M")
        if check and not check_module(t, self):
            raise ExactError("action fails the module laws")

    def __eq__(self, other):
        if not isinstance(other, TModule):
            return NotImplemented
        return self.carrier == other.carrier and self.action == other.action

    def __hash__(self):
        raise TypeError("TModule is unhashable")

    def __repr__(self):
        return f"TModule(dim {self.carrier.total_dim()})"


def check_module(t: TensoringBimonad, m: TModule) -> bool:
    """Associativity and unit law of the action."""
    r = m.action
    src = t.on_obj(t.on_obj(m.carrier))
    lhs = Chain(src).then(r, at=1).then(r, at=0).eval()
    rhs = Chain(src).then(t.mu_step(m.carrier), at=0).then(r, at=0).eval()
    if lhs != rhs:
        return False
    unit_side = Chain(m.carrier).then(t.eta_step(m.carrier), at=0) \
                                .then(r, at=0).eval()
    return unit_side == identity(m.carrier)


def free_module(t: TensoringBimonad, x: GradedObj) -> TModule:
    return TModule(t, t.on_obj(x), t.mu_mor(x), check=False)


def unit_module(t: TensoringBimonad) -> TModule:
    return TModule(t, t.unit_obj(), t.t0, check=False)


def is_t_linear(m: TModule, n: TModule, f: GradedMor) -> bool:
    if f.src != m.carrier or f.dst != n.carrier:
        return False
    t = m.t
    src = t.on_obj(m.carrier)
    lhs = Chain(src).then(m.action, at=0).then(f, at=0).eval()
    rhs = Chain(src).then(f, at=len(t.carrier.atoms)).then(n.action, at=0).eval()
    return lhs == rhs


def _hom_basis_c(base, m_obj: GradedObj, n_obj: GradedObj):
    """Deterministic basis of plain graded maps M -> N (matrix units)."""
    out = []
    for g in sorted(set(m_obj.grades()) & set(n_obj.grades())):
        rows, cols = n_obj.count(*g), m_obj.count(*g)
        for i in range(rows):
            for j in range(cols):
                blk = base.field.zeros((rows, cols))
                blk[i, j] = base.field.one
                out.append(GradedMor(m_obj, n_obj, {g: blk}))
    return out


def _mor_coords(f: GradedMor, grades) -> list:
    out = []
    for g in grades:
        out.extend(f.block(*g).ravel().tolist())
    return out


def _columns_to_mat(f, cols: list) -> Mat:
    rows = len(cols[0]) if cols else 0
    a = f.zeros((rows, len(cols)))
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            a[i, j] = v
    return Mat(f, a)


def module_hom_space(m: TModule, n: TModule) -> list[GradedMor]:
    """Exact basis of the space of module maps (M, r) -> (N, s)."""
    t = m.t
    f = t.base.field
    basis = _hom_basis_c(t.base, m.carrier, n.carrier)
    if not basis:
        return []
    grades = sorted(set(t.on_obj(m.carrier).grades()) & set(n.carrier.grades()))
    cols = []
    for b in basis:
        diff = (b @ m.action) - (n.action @ t.on_mor(b))
        cols.append(_mor_coords(diff, grades))
    a = _columns_to_mat(f, cols)
    out = []
    for v in kernel(a):
        total = GradedMor.zero(m.carrier, n.carrier)
        for k, b in enumerate(basis):
            c = v.entry(k, 0)
            if c != f.zero:
                total = total + b.scale(c)
        out.append(total)
    return out


def module_section_space(m: TModule) -> list[GradedMor]:
    """Module maps sigma: (M,r) -> (T(M), mu) with r sigma = id."""
    t = m.t
    f = t.base.field
    fm = free_module(t, m.carrier)
    basis = _hom_basis_c(t.base, m.carrier, fm.carrier)
    if not basis:
        return []
    grades_lin = sorted(set(t.on_obj(m.carrier).grades()) & set(fm.carrier.grades()))
    grades_sec = sorted(m.carrier.grades())
    cols = []
    ident = identity(m.carrier)
    for b in basis:
        diff = (b @ m.action) - (fm.action @ t.on_mor(b))
        col = _mor_coords(diff, grades_lin)
        col.extend(_mor_coords(m.action @ b, grades_sec))
        cols.append(col)
    rhs_vec = [f.zero] * (len(cols[0]) - len(_mor_coords(ident, grades_sec)))
    rhs_vec.extend(_mor_coords(ident, grades_sec))
    a = _columns_to_mat(f, cols)
    b_mat = _columns_to_mat(f, [rhs_vec])
    sol = solve_affine(a, b_mat)
    if sol is None:
        return []
    x0, null = sol
    out = []
    for vec in [x0] + [x0 + v for v in null]:
        total = GradedMor.zero(m.carrier, fm.carrier)
        for k, b in enumerate(basis):
            c = vec.entry(k, 0)
            if c != f.zero:
                total = total + b.scale(c)
        out.append(total)
    return out


def _tensor_modules_chain(m: TModule, n: TModule) -> GradedMor:
    t = m.t
    src = t.on_obj(m.carrier.tensor(n.carrier))
    ch = Chain(src).then(t.t2_step(m.carrier, n.carrier), at=0) \
                   .then(m.action, at=0) \
                   .then(n.action, at=len(m.carrier.atoms))
    return ch.eval()


def tensor_modules(m: TModule, n: TModule) -> TModule:
    """Module structure on M ⊗ N through the coproduct.

    On the one-label backend the two actions are contracted against the
    coproduct core directly, avoiding the squared-carrier intermediate of
    the step route.
    """
    t = m.t
    carrier = m.carrier.tensor(n.carrier)
    if not t.base.is_vector:
        return TModule(t, carrier, _tensor_modules_chain(m, n), check=False)
    f = t.base.field
    ad = t.carrier_dim
    dm, dn = m.carrier.total_dim(), n.carrier.total_dim()
    src = t.on_obj(carrier)
    if dm == 0 or dn == 0 or ad == 0:
        action = GradedMor.zero(src, carrier)
        return TModule(t, carrier, action, check=False)
    d3 = t.t2[((0, 0), (0, 0))].block(0, 0).reshape(ad, ad, ad)   # [p, q, a]
    r3 = m.action.block(0, 0).reshape(dm, ad, dm)
    s3 = n.action.block(0, 0).reshape(dn, ad, dn)
    b1 = f.tensordot(d3, r3, axes=([0], [1]))     # [q, a, m', m]
    out = f.tensordot(b1, s3, axes=([0], [1]))    # [a, m', m, n', n]
    blk = out.transpose(1, 3, 0, 2, 4).reshape(dm * dn, ad * dm * dn)
    action = GradedMor(src, carrier, {(0, 0): blk})
    if ad * max(dm, dn) <= 64:
        assert action == _tensor_modules_chain(m, n)
    return TModule(t, carrier, action, check=False)


def dual_module_left(t: TensoringBimonad, a: AntipodeData, m: TModule) -> TModule:
    """Left dual module (ℓM, s^l ∘ T(ℓr))."""
    src = t.on_obj(m.carrier.dual())
    ch = Chain(src).then(m.action.ldual(), at=1).then(a.sl_step(m.carrier), at=0)
    return TModule(t, m.carrier.dual(), ch.eval(), check=False)


def dual_module_right(t: TensoringBimonad, a: AntipodeData, m: TModule) -> TModule:
    src = t.on_obj(m.carrier.dual())
    ch = Chain(src).then(m.action.rdual(), at=1).then(a.sr_step(m.carrier), at=0)
    return TModule(t, m.carrier.dual(), ch.eval(), check=False)


def pullback_module(f: TransTT, m: TModule) -> TModule:
    """Restriction along a bimonad morphism: (M, r ∘ f_M)."""
    if m.t is not f.t_dst and m.t.carrier != f.t_dst.carrier:
        raise ExactError("module lives over the wrong target monad")
    step = f.at_step(m.carrier)
    comp = step.to_mor() if isinstance(step, CoreStep) else step.mor
    return TModule(f.t, m.carrier, m.action @ comp, check=False)


def conservativity_probe(t: TensoringBimonad) -> dict:
    """yes when the unit is split monic at every simple, else unknown."""
    for g in t.simples():
        s = t.simple(g)
        eta = t.eta_mor(s)
        for grade in s.grades():
            blk = eta.block(*grade)
            cols = blk.shape[1]
            m = Mat(t.base.field, blk)
            from .exactla import rank
            if rank(m) < cols:
                return {"verdict": "unknown",
                        "evidence": f"unit not split at simple {g}"}
    return {"verdict": "yes",
            "evidence": "unit is a split monomorphism at every simple"}


# ---------------------------------------------------------------------------
# Duality inside the module category
# ---------------------------------------------------------------------------


def check_dual_module_duality(t: TensoringBimonad, a: AntipodeData,
                              m: TModule, rep: Report) -> Report:
    """Evaluation and coevaluation are module maps for the preferred duals."""
    lm = dual_module_left(t, a, m)
    rep.record("dual.left_valid", check_module(t, lm))
    both = tensor_modules(lm, m)
    rep.record("dual.left_ev_linear",
               is_t_linear(both, unit_module(t), ev_mor(m.carrier)))
    both2 = tensor_modules(m, lm)
    rep.record("dual.left_coev_linear",
               is_t_linear(unit_module(t), both2, coev_mor(m.carrier)))
    rm = dual_module_right(t, a, m)
    rep.record("dual.right_valid", check_module(t, rm))
    rep.record("dual.right_ev_linear",
               is_t_linear(tensor_modules(m, rm), unit_module(t),
                           ev_right_mor(m.carrier)))
    rep.record("dual.right_coev_linear",
               is_t_linear(unit_module(t), tensor_modules(rm, m),
                           coev_right_mor(m.carrier)))
    return rep


def random_module(t: TensoringBimonad, rng, dim_factor: int = 1) -> TModule:
    """A valid module: a free module conjugated by a random isomorphism."""
    f = t.base.field
    if t.base.is_vector:
        x = GradedObj.space(t.base, dim_factor, "X")
    else:
        L = t.base.nlabels
        grid = [[rng.randrange(0, dim_factor + 1) for _ in range(L)] for _ in range(L)]
        if all(all(v == 0 for v in row) for row in grid):
            grid[0][0] = 1
        x = GradedObj.from_grid(t.base, grid, "X")
    fm = free_module(t, x)
    phi = _random_iso(fm.carrier, rng)
    phi_inv = _invert_mor(phi)
    action = phi @ fm.action @ t.on_mor(phi_inv)
    m_obj = fm.carrier
    return TModule(t, m_obj, action, check=False)


def _random_iso(x: GradedObj, rng) -> GradedMor:
    f = x.base.field
    blocks = {}
    for g in x.grades():
        n = x.count(*g)
        while True:
            blk = f.asarray([[rng.randrange(-2, 3) for _ in range(n)]
                             for _ in range(n)])
            from .exactla import rank
            if rank(Mat(f, blk)) == n:
                blocks[g] = blk
                break
    return GradedMor(x, x, blocks)


def _invert_mor(f_mor: GradedMor) -> GradedMor:
    f = f_mor.field
    blocks = {}
    for g, blk in f_mor.blocks.items():
        sol = solve_affine(Mat(f, blk), Mat.identity(f, blk.shape[0]))
        if sol is None:
            raise ExactError("morphism is not invertible")
        blocks[g] = sol[0].data
    return GradedMor(f_mor.dst, f_mor.src, blocks)


def invert_module_map(m: TModule, n: TModule, f_mor: GradedMor) -> GradedMor | None:
    """Inverse of a module map when it exists (None otherwise)."""
    try:
        inv = _invert_mor(f_mor)
    except ExactError:
        return None
    if f_mor.src != m.carrier or f_mor.dst != n.carrier:
        return None
    if (f_mor @ inv) != identity(n.carrier) or (inv @ f_mor) != identity(m.carrier):
        return None
    return inv
