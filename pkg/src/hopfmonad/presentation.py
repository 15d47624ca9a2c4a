"""The JSON presentation schema and its loader.

A presentation is a plain dict (see zoo.py for producers).  load() turns
it into a Model: the bimonad plus whatever optional structure the
presentation carries (antipodes, R-matrix, twist, grouplike candidates),
ready for the checkers.

Schema (version 1):
  schema: 1
  name: str
  field: "Q" | {"Fp": p}
  labels: [str, ...]                   (length 1 = plain vector spaces)
  vector backend:
    carrier: [[n]]
    mul:  mul[a][b] = coefficient vector of e_a * e_b   (scalar strings)
    unit: coefficient vector
    t2:   {"element_coproduct": [matrix per basis element]}
    t0:   coefficient vector (the counit functional)
    antipode: {"element": matrix, "element_inverse"?: matrix}
    rmatrix:  {"element": matrix}      (coefficients of sum r_ab e_a⊗e_b)
    twist:    {"element": vector, "element_inverse"?: vector}
    grouplikes: [vector, ...]
  graded backend:
    groupoid: {names, source, target, compose, inverse}
  meta: free-form strings (classical cross-check data)
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .antipode import AntipodeData
from .cat import BaseSpec, GradedMor, GradedObj
from .exactla import ExactError, FieldSpec, Mat, solve_affine
from .monad import Element, PairFamily, TensoringBimonad
from .zoo import AlgebraTable


class SchemaError(ExactError):
    """Malformed presentation input (CLI exit code 2)."""


@dataclass
class Model:
    name: str
    base: BaseSpec
    t: TensoringBimonad
    antipode: AntipodeData | None = None
    rmatrix: PairFamily | None = None
    twist: tuple | None = None            # (theta, theta_inverse) Elements
    grouplikes: list = dc_field(default_factory=list)
    meta: dict = dc_field(default_factory=dict)
    alg: AlgebraTable | None = None       # vector backend structure constants
    s_matrix: list | None = None
    s_inv_matrix: list | None = None
    r_elem: list | None = None
    kind: str = "vector"
    stock_modules: list = dc_field(default_factory=list)


def _parse_field(tag) -> FieldSpec:
    if tag == "Q":
        return FieldSpec.rationals()
    if isinstance(tag, dict) and set(tag) == {"Fp"}:
        try:
            return FieldSpec.prime(int(tag["Fp"]))
        except ExactError as e:
            raise SchemaError(str(e)) from e
    raise SchemaError(f"unknown field tag {tag!r}")


def _need(pres: dict, key: str):
    if key not in pres:
        raise SchemaError(f"missing key {key!r}")
    return pres[key]


def _coerce_vec(f: FieldSpec, v, n: int, what: str):
    if len(v) != n:
        raise SchemaError(f"{what}: expected {n} entries, got {len(v)}")
    try:
        return [f.coerce(x) for x in v]
    except (ValueError, ExactError) as e:
        raise SchemaError(f"{what}: {e}") from e


def _coerce_mat(f: FieldSpec, m, rows: int, cols: int, what: str):
    if len(m) != rows or any(len(r) != cols for r in m):
        raise SchemaError(f"{what}: expected {rows}x{cols}")
    return [[f.coerce(x) for x in row] for row in m]


def load(pres: dict) -> Model:
    if not isinstance(pres, dict):
        raise SchemaError("presentation must be a JSON object")
    if pres.get("schema") != 1:
        raise SchemaError("schema version must be 1")
    name = _need(pres, "name")
    f = _parse_field(_need(pres, "field"))
    labels = tuple(_need(pres, "labels"))
    base = BaseSpec(f, labels)
    if "groupoid" in pres:
        return _load_groupoid(pres, name, base)
    if base.is_vector:
        return _load_vector(pres, name, base)
    raise SchemaError("multi-label presentations need groupoid data")


# ---------------------------------------------------------------------------
# Vector backend
# ---------------------------------------------------------------------------


def _load_vector(pres: dict, name: str, base: BaseSpec) -> Model:
    f = base.field
    carrier_grid = _need(pres, "carrier")
    if len(carrier_grid) != 1 or len(carrier_grid[0]) != 1:
        raise SchemaError("vector-backend carrier must be a 1x1 grid")
    n = int(carrier_grid[0][0])
    if n < 1:
        raise SchemaError("carrier dimension must be positive")
    a_obj = GradedObj.space(base, n, name="A")
    s_obj = GradedObj.simple(base, 0, 0)

    mul = _need(pres, "mul")
    if len(mul) != n or any(len(row) != n for row in mul):
        raise SchemaError("mul must be an n x n table of coefficient vectors")
    mul = [[_coerce_vec(f, mul[a][b], n, f"mul[{a}][{b}]") for b in range(n)]
           for a in range(n)]
    unit = _coerce_vec(f, _need(pres, "unit"), n, "unit")
    alg = AlgebraTable(f, mul, unit)

    m_block = f.zeros((n, n * n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                m_block[c, a * n + b] = mul[a][b][c]
    m = GradedMor(a_obj.tensor(a_obj), a_obj, {(0, 0): m_block})
    u_block = f.zeros((n, 1))
    for a in range(n):
        u_block[a, 0] = unit[a]
    u = GradedMor(GradedObj.unit(base), a_obj, {(0, 0): u_block})

    t2_spec = _need(pres, "t2")
    if "element_coproduct" not in t2_spec:
        raise SchemaError("vector-backend t2 needs element_coproduct")
    deltas = t2_spec["element_coproduct"]
    if len(deltas) != n:
        raise SchemaError("element_coproduct needs one matrix per basis element")
    t2_block = f.zeros((n * n, n))
    for a in range(n):
        d = _coerce_mat(f, deltas[a], n, n, f"coproduct[{a}]")
        for p in range(n):
            for q in range(n):
                t2_block[p * n + q, a] = d[p][q]
    t2_comp = GradedMor(a_obj.tensor(s_obj).tensor(s_obj),
                        a_obj.tensor(s_obj).tensor(a_obj).tensor(s_obj),
                        {(0, 0): t2_block})
    t0_vec = _coerce_vec(f, _need(pres, "t0"), n, "t0")
    t0_block = f.zeros((1, n))
    for a in range(n):
        t0_block[0, a] = t0_vec[a]
    t0 = GradedMor(a_obj, GradedObj.unit(base), {(0, 0): t0_block})

    t = TensoringBimonad(base, a_obj, m, u, {((0, 0), (0, 0)): t2_comp}, t0,
                         name=name)
    model = Model(name=name, base=base, t=t, alg=alg, kind="vector",
                  meta=dict(pres.get("meta", {})))

    if "antipode" in pres:
        spec = pres["antipode"]
        if "element" not in spec:
            raise SchemaError("vector-backend antipode needs an element matrix")
        s = _coerce_mat(f, spec["element"], n, n, "antipode")
        if "element_inverse" in spec:
            s_inv = _coerce_mat(f, spec["element_inverse"], n, n, "antipode inverse")
        else:
            sol = solve_affine(Mat.from_rows(f, s), Mat.identity(f, n))
            if sol is None:
                raise SchemaError("antipode matrix is singular")
            s_inv = [[sol[0].entry(i, j) for j in range(n)] for i in range(n)]
        model.s_matrix, model.s_inv_matrix = s, s_inv
        model.antipode = AntipodeData(
            t,
            sl={(0, 0): _antipode_component(t, s)},
            sr={(0, 0): _antipode_component(t, s_inv)})

    if "rmatrix" in pres:
        spec = pres["rmatrix"]
        if "element" not in spec:
            raise SchemaError("vector-backend rmatrix needs an element matrix")
        r = _coerce_mat(f, spec["element"], n, n, "rmatrix")
        model.r_elem = r
        block = f.zeros((n * n, 1))
        for p in range(n):
            for q in range(n):
                block[p * n + q, 0] = r[q][p]
        comp = GradedMor(s_obj.tensor(s_obj),
                         t.on_obj(s_obj).tensor(t.on_obj(s_obj)),
                         {(0, 0): block})
        model.rmatrix = PairFamily(t, {((0, 0), (0, 0)): comp}, "R")

    if "twist" in pres:
        spec = pres["twist"]
        v = _coerce_vec(f, _need(spec, "element"), n, "twist")
        if "element_inverse" in spec:
            w = _coerce_vec(f, spec["element_inverse"], n, "twist inverse")
        else:
            w = alg.inverse(v)
            if w is None:
                raise SchemaError("twist element is not invertible")
        model.twist = (element_from_vector(t, v, "theta"),
                       element_from_vector(t, w, "theta_inv"))

    for k, gvec in enumerate(pres.get("grouplikes", [])):
        g = _coerce_vec(f, gvec, n, f"grouplike[{k}]")
        model.grouplikes.append(element_from_vector(t, g, f"g{k}"))

    for k, spec in enumerate(pres.get("stock_modules", [])):
        from .modcat import TModule
        d = int(spec["dim"])
        act = _coerce_mat(f, spec["action"], d, n * d, f"stock_modules[{k}]")
        carrier = GradedObj.space(base, d, f"V{k}")
        blk = f.zeros((d, n * d))
        for i in range(d):
            for j in range(n * d):
                blk[i, j] = act[i][j]
        mod = TModule(t, carrier, GradedMor(t.on_obj(carrier), carrier,
                                            {(0, 0): blk}), check=True)
        model.stock_modules.append(mod)
    return model


def element_from_vector(t: TensoringBimonad, v, label="f") -> Element:
    """Element of the convolution monoid from a carrier coefficient vector."""
    f = t.base.field
    n = t.carrier_dim
    s = t.simple((0, 0))
    block = f.zeros((n, 1))
    for a in range(n):
        block[a, 0] = f.coerce(v[a])
    return Element(t, {(0, 0): GradedMor(s, t.on_obj(s), {(0, 0): block})}, label)


def _antipode_component(t: TensoringBimonad, s_matrix) -> GradedMor:
    """One-label antipode component from an element-level matrix.

    The component sends h ⊗ ξ to ξ(S h); with the flip braiding of plain
    vector spaces this is the classical expansion.
    """
    f = t.base.field
    n = t.carrier_dim
    s = t.simple((0, 0))
    src = t.on_obj(t.on_obj(s).dual())
    block = f.zeros((1, n * n))
    for h in range(n):
        for j in range(n):
            block[0, h * n + j] = f.coerce(s_matrix[j][h])
    return GradedMor(src, s.dual(), {(0, 0): block})


# ---------------------------------------------------------------------------
# Graded backend: groupoid algebras
# ---------------------------------------------------------------------------


def _load_groupoid(pres: dict, name: str, base: BaseSpec) -> Model:
    f = base.field
    L = base.nlabels
    spec = _need(pres, "groupoid")
    names = _need(spec, "names")
    srcs = _need(spec, "source")
    tgts = _need(spec, "target")
    compose = _need(spec, "compose")
    inverse = _need(spec, "inverse")
    n = len(names)
    if not (len(srcs) == len(tgts) == len(inverse) == n and len(compose) == n):
        raise SchemaError("groupoid arrays must agree in length")
    if any(not (0 <= s < L and 0 <= t0 < L) for s, t0 in zip(srcs, tgts)):
        raise SchemaError("arrow endpoints out of range")

    # carrier grid by (target, source); arrows ordered by index within a grade
    grid = [[0] * L for _ in range(L)]
    pos = {}
    by_grade = {}
    for a in range(n):
        g = (tgts[a], srcs[a])
        pos[a] = grid[g[0]][g[1]]
        grid[g[0]][g[1]] += 1
        by_grade.setdefault(g, []).append(a)
    a_obj = GradedObj.from_grid(base, grid, name="A")

    identity_at = {}
    for a in range(n):
        if srcs[a] == tgts[a] and compose[a][a] == a and inverse[a] == a:
            # id_i is the first such loop at each label (builders put it first)
            identity_at.setdefault(srcs[a], a)
    if set(identity_at) != set(range(L)):
        raise SchemaError("missing identity loop at some label")

    def transport(arrow: int, lab: int) -> int:
        """Loop standing for the arrow at the given label (gradewise coproduct)."""
        if srcs[arrow] == lab and tgts[arrow] == lab:
            return arrow
        return identity_at[lab]

    # product: composition
    m_blocks = {}
    aa = a_obj.tensor(a_obj)
    for (i, k) in aa.grades():
        if a_obj.count(i, k) == 0:
            continue
        block = f.zeros((a_obj.count(i, k), aa.count(i, k)))
        col = 0
        for j in range(L):
            for a in by_grade.get((i, j), []):
                for b in by_grade.get((j, k), []):
                    c = compose[a][b]
                    if c is not None:
                        block[pos[c], col] = f.one
                    col += 1
        if col:
            m_blocks[(i, k)] = block
    m = GradedMor(aa, a_obj, m_blocks)

    u_blocks = {}
    for i in range(L):
        if a_obj.count(i, i):
            blk = f.zeros((a_obj.count(i, i), 1))
            blk[pos[identity_at[i]], 0] = f.one
            u_blocks[(i, i)] = blk
    u = GradedMor(GradedObj.unit(base), a_obj, u_blocks)

    # counit: every loop goes to 1
    t0_blocks = {}
    for i in range(L):
        cnt = a_obj.count(i, i)
        if cnt:
            blk = f.zeros((1, cnt))
            for a in by_grade.get((i, i), []):
                blk[0, pos[a]] = f.one
            t0_blocks[(i, i)] = blk
    t0 = GradedMor(a_obj, GradedObj.unit(base), t0_blocks)

    # coproduct components: arrow ↦ arrow ⊗ (its loop avatar at the junction)
    t2 = {}
    for g1 in [(i, j) for i in range(L) for j in range(L)]:
        for g2 in [(g1[1], k) for k in range(L)]:
            s1 = GradedObj.simple(base, *g1)
            s2 = GradedObj.simple(base, *g2)
            src = a_obj.tensor(s1).tensor(s2)
            dst = a_obj.tensor(s1).tensor(a_obj).tensor(s2)
            blocks = {}
            i, j = g1
            k = g2[1]
            for p in range(L):
                if a_obj.count(p, i) == 0:
                    continue
                rows = dst.count(p, k)
                cols = src.count(p, k)
                if rows == 0 or cols == 0:
                    continue
                blk = f.zeros((rows, cols))
                loops_j = by_grade.get((j, j), [])
                nloops = len(loops_j)
                for ci, arrow in enumerate(by_grade.get((p, i), [])):
                    avatar = transport(arrow, j)
                    blk[ci * nloops + pos[avatar], ci] = f.one
                blocks[(p, k)] = blk
            t2[(g1, g2)] = GradedMor(src, dst, blocks)

    t = TensoringBimonad(base, a_obj, m, u, t2, t0, name=name)
    model = Model(name=name, base=base, t=t, kind="groupoid",
                  meta=dict(pres.get("meta", {})))

    # antipode from inversion, expanded grade-diagonally
    sl = {}
    for g in t.simples():
        i, j = g
        s = t.simple(g)
        src = t.on_obj(t.on_obj(s).dual())
        dst = s.dual()
        blocks = {}
        loops_j = by_grade.get((j, j), [])
        loops_i = by_grade.get((i, i), [])
        if loops_j and loops_i:
            blk = f.zeros((1, len(loops_j) * len(loops_i)))
            for ai, a in enumerate(loops_j):
                target = transport(inverse[a], i)
                blk[0, ai * len(loops_i) + pos[target]] = f.one
            blocks[(j, i)] = blk
        sl[g] = GradedMor(src, dst, blocks)
    model.antipode = AntipodeData(t, sl=dict(sl), sr=dict(sl))
    model.grouplikes = []
    return model
