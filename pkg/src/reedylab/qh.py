"""Heredity ideals and chains, standard modules, and directed-subalgebra tests.

Weight orders are level functions on the frame idempotents: i is strictly
below j exactly when level(i) > level(j), matching the order a heredity
chain induces (lower chain layer = larger weight).  Same-level distinct
weights are incomparable.
"""

from __future__ import annotations

from itertools import product as iter_product

from .algebra import (
    Algebra,
    AlgebraError,
    AlgSubspace,
    IdempotentFrame,
    ideal_closure,
    is_elementary,
    quotient,
    quotient_frame,
    radical,
    tensor_dim_over_corner,
)
from .linalg import Echelon, Subspace, span, sparse
from .modules import (
    ModuleRep,
    induce_module,
    is_projective_module,
    projective_module,
    quotient_module,
    regular_module,
    restrict_module,
    simple_module,
)


class WeightOrder:
    """A partial order on weights induced by a level function."""

    __slots__ = ("labels", "levels")

    def __init__(self, labels, levels):
        self.labels = tuple(labels)
        self.levels = tuple(int(l) for l in levels)
        if len(self.labels) != len(self.levels):
            raise ValueError("labels/levels length mismatch")
        if any(l < 0 for l in self.levels):
            raise ValueError("levels must be natural numbers")

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return (
            isinstance(other, WeightOrder)
            and self.labels == other.labels
            and self.levels == other.levels
        )

    def __hash__(self):
        return hash((self.labels, self.levels))

    def __repr__(self):
        return f"WeightOrder({dict(zip(self.labels, self.levels))})"

    def lt(self, i: int, j: int) -> bool:
        """i strictly below j (i appears in a later chain layer)."""
        return self.levels[i] > self.levels[j]

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.lt(i, j)

    def normalized(self) -> "WeightOrder":
        ranks = {d: r for r, d in enumerate(sorted(set(self.levels)))}
        return WeightOrder(self.labels, tuple(ranks[d] for d in self.levels))

    def to_json(self) -> dict:
        return {"levels": {lab: lev for lab, lev in zip(self.labels, self.levels)}}

    @classmethod
    def from_json(cls, data: dict, labels) -> "WeightOrder":
        levels = data["levels"]
        missing = [lab for lab in labels if lab not in levels]
        if missing:
            raise ValueError(f"order is missing levels for {missing}")
        return cls(tuple(labels), tuple(levels[lab] for lab in labels))


def order_from_degrees(frame: IdempotentFrame) -> WeightOrder:
    if frame.degrees is None:
        raise AlgebraError("frame carries no degree function")
    return WeightOrder(frame.labels, frame.normalized_degrees())


def peirce_blocks(frame: IdempotentFrame, sub: AlgSubspace | None = None) -> dict:
    """All blocks e_j X e_i of the algebra or of a subspace, cached."""
    a = frame.algebra
    f = a.field
    if sub is None:
        cache, key = frame._cache, "peirce_full"
        vectors = [a.basis_vector(k) for k in range(a.dim)]
    else:
        cache, key = sub._cache, ("peirce", frame.idempotents)
        vectors = list(sub.space.basis)
    if key in cache:
        return cache[key]
    n = len(frame)
    sparse_idem = [sparse(f, e) for e in frame.idempotents]
    accs = {(j, i): Echelon(f, a.dim) for j in range(n) for i in range(n)}
    for v in vectors:
        sv = sparse(f, v)
        for j in range(n):
            left = a.mul_sparse(sparse_idem[j], sv)
            if not left:
                continue
            for i in range(n):
                piece = a.mul_sparse(left, sparse_idem[i])
                if piece:
                    accs[(j, i)].insert(piece)
    blocks = {key2: acc.to_subspace() for key2, acc in accs.items()}
    cache[key] = blocks
    return blocks


def column_span(a: Algebra, vectors, idem) -> Subspace:
    """Span of X*e for a generating set X (the column at an idempotent)."""
    f = a.field
    se = sparse(f, idem)
    acc = Echelon(f, a.dim)
    for v in vectors:
        acc.insert(a.mul_sparse(sparse(f, v), se))
    return acc.to_subspace()


def row_span(a: Algebra, idem, vectors) -> Subspace:
    f = a.field
    se = sparse(f, idem)
    acc = Echelon(f, a.dim)
    for v in vectors:
        acc.insert(a.mul_sparse(se, sparse(f, v)))
    return acc.to_subspace()


class LevelChain:
    """Cached data of the candidate chain 0 <= J_0 <= J_1 <= ... <= A."""

    __slots__ = ("algebra", "frame", "order", "levels", "ideals", "quotients")

    def __init__(self, algebra, frame, order, levels, ideals, quotients):
        self.algebra = algebra
        self.frame = frame
        self.order = order
        self.levels = levels
        self.ideals = ideals
        self.quotients = quotients

    def ideal_below(self, level_rank: int) -> AlgSubspace:
        """J_{l-1} for the level of given rank (zero subspace for rank 0)."""
        if level_rank == 0:
            return AlgSubspace(self.algebra, Subspace(self.algebra.field, self.algebra.dim))
        return self.ideals[level_rank - 1]


def level_chain(a: Algebra, frame: IdempotentFrame, order: WeightOrder) -> LevelChain:
    key = ("level_chain", frame.idempotents, order.levels)
    if key in a._cache:
        return a._cache[key]
    levels = tuple(sorted(set(order.levels)))
    work = frame.with_degrees(order.levels)
    ideals = []
    quotients = []
    current = a
    cur_frame = work
    for rank, lev in enumerate(levels):
        ideals.append(ideal_closure(a, [work.eps_upto(lev)]))
        eps_here = cur_frame.eps(lev) if cur_frame.degrees is not None else None
        layer_ideal = ideal_closure(current, [eps_here])
        q, qmap = quotient(current, layer_ideal)
        q_frame = quotient_frame(cur_frame, qmap)
        quotients.append((current, cur_frame, layer_ideal, q, qmap, q_frame))
        current, cur_frame = q, q_frame
    chain = LevelChain(a, work, order, levels, tuple(ideals), tuple(quotients))
    a._cache[key] = chain
    return chain


def heredity_ideal_check(a: Algebra, frame: IdempotentFrame, eps) -> dict:
    """Corner criterion for J = A*eps*A being a heredity ideal."""
    f = a.field
    eps = tuple(eps)
    if not a.is_idempotent(eps):
        raise AlgebraError("heredity_ideal_check requires an idempotent")
    ideal = ideal_closure(a, [eps])
    if ideal.dim == 0:
        return {
            "overall": True,
            "trivial": True,
            "ideal_dim": 0,
            "corner_semisimple": True,
            "tensor_bijective": True,
        }
    rad = radical(a)
    se = sparse(f, eps)
    corner_rad = Echelon(f, a.dim)
    for r in rad.space.basis:
        corner_rad.insert(a.mul_sparse(se, a.mul_sparse(sparse(f, r), se)))
    corner_ss = corner_rad.dim == 0
    tens = tensor_dim_over_corner(a, eps) if corner_ss else None
    tensor_ok = tens == ideal.dim if corner_ss else False
    report = {
        "overall": corner_ss and tensor_ok,
        "trivial": False,
        "ideal_dim": ideal.dim,
        "corner_semisimple": corner_ss,
        "corner_radical_dim": corner_rad.dim,
        "tensor_dim": tens,
        "tensor_bijective": tensor_ok,
    }
    if is_elementary(a, frame):
        report["cross_checks"] = _heredity_cross_checks(a, frame, ideal, rad)
    return report


def _heredity_cross_checks(a: Algebra, frame, ideal: AlgSubspace, rad: AlgSubspace) -> dict:
    f = a.field
    acc = Echelon(f, a.dim)
    gens = [sparse(f, v) for v in ideal.space.basis]
    for u in gens:
        for v in gens:
            acc.insert(a.mul_sparse(u, v))
    idempotent_ideal = acc.to_subspace() == ideal.space
    jrj = Echelon(f, a.dim)
    for u in gens:
        for r in rad.space.basis:
            ur = a.mul_sparse(u, sparse(f, r))
            if not ur:
                continue
            for v in gens:
                jrj.insert(a.mul_sparse(ur, v))
    from .modules import module_from_subspace  # local import to avoid cycle at load

    proj = is_projective_module(module_from_subspace(a, ideal.space, "left"), frame)
    return {
        "idempotent_ideal": idempotent_ideal,
        "j_rad_j_zero": jrj.dim == 0,
        "left_projective": proj,
        "agree": idempotent_ideal and jrj.dim == 0 and proj,
    }


def heredity_chain_verify(a: Algebra, frame: IdempotentFrame, order: WeightOrder | None = None) -> dict:
    """Layer-by-layer verification of the chain induced by the degree levels."""
    if order is None:
        order = order_from_degrees(frame)
    chain = level_chain(a, frame, order)
    layers = []
    ok = True
    prev_dim = 0
    for rank, lev in enumerate(chain.levels):
        current, cur_frame, layer_ideal, q, _, _ = chain.quotients[rank]
        eps_here = cur_frame.eps(lev)
        verdict = heredity_ideal_check(current, cur_frame, eps_here)
        total_dim = chain.ideals[rank].dim
        strictly_up = total_dim > prev_dim
        layers.append(
            {
                "level": lev,
                "ideal_dim": total_dim,
                "layer_dim": total_dim - prev_dim,
                "verdict": bool(verdict["overall"]),
                "strictly_increasing": strictly_up,
                "detail": verdict,
            }
        )
        ok = ok and verdict["overall"] and strictly_up
        prev_dim = total_dim
    complete = bool(chain.ideals) and chain.ideals[-1].dim == a.dim
    if a.dim == 0:
        complete = True
    return {"overall": ok and complete, "complete": complete, "layers": layers}


class StandardFamily:
    """Projectives, standard modules and simples over an elementary algebra."""

    __slots__ = ("algebra", "frame", "order", "projectives", "standards", "simples",
                 "trace_dims", "comp_vectors", "top_vectors", "factor_bound_ok")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw[name])


def trace_subspace(a: Algebra, frame: IdempotentFrame, order: WeightOrder, i: int) -> Subspace:
    """Sum over weights j not below-or-equal i of A e_j A e_i, inside A e_i."""
    f = a.field
    acc = Echelon(f, a.dim)
    ei = sparse(f, frame.idempotents[i])
    for j in range(len(frame)):
        if order.leq(j, i):
            continue
        ej = sparse(f, frame.idempotents[j])
        for k in range(a.dim):
            mid = a.mul_sparse(ej, a.mul_sparse({k: f.one}, ei))
            if not mid:
                continue
            for t in range(a.dim):
                acc.insert(a.mul_sparse({t: f.one}, mid))
    return acc.to_subspace()


def standard_modules(a: Algebra, frame: IdempotentFrame, order: WeightOrder) -> StandardFamily:
    if not is_elementary(a, frame):
        raise AlgebraError("standard modules via frames require an elementary algebra")
    projectives, standards, simples = [], [], []
    trace_dims, comp_vectors, top_vectors = [], [], []
    bound_ok = True
    for i in range(len(frame)):
        proj, carrier = projective_module(a, frame.idempotents[i], "left")
        tr = trace_subspace(a, frame, order, i)
        tr_coords = span(
            a.field, carrier.dim, [carrier.coords(v) for v in tr.basis]
        )
        delta, _ = quotient_module(proj, tr_coords)
        radm = proj.radical_submodule()
        simple, _ = quotient_module(proj, radm)
        comp = delta.comp_dim_vector(frame)
        top = delta.top_multiplicities(frame)
        for j in range(len(frame)):
            if not order.leq(j, i) and comp[j] != 0:
                bound_ok = False
        projectives.append(proj)
        standards.append(delta)
        simples.append(simple)
        trace_dims.append(tr.dim)
        comp_vectors.append(comp)
        top_vectors.append(top)
    return StandardFamily(
        algebra=a,
        frame=frame,
        order=order,
        projectives=tuple(projectives),
        standards=tuple(standards),
        simples=tuple(simples),
        trace_dims=tuple(trace_dims),
        comp_vectors=tuple(comp_vectors),
        top_vectors=tuple(top_vectors),
        factor_bound_ok=bound_ok,
    )


def directed_qh_check(a: Algebra, frame: IdempotentFrame, order: WeightOrder) -> dict:
    """Directedness patterns giving simple or projective standard modules."""
    blocks = peirce_blocks(frame)
    diag_ok = all(blocks[(i, i)].dim == 1 for i in range(len(frame)))
    simple = diag_ok
    projective = diag_ok
    for j in range(len(frame)):
        for i in range(len(frame)):
            if i == j or blocks[(j, i)].dim == 0:
                continue
            if not order.lt(i, j):
                simple = False
            if not order.lt(j, i):
                projective = False
    return {"simple_standards": simple, "projective_standards": projective, "diag_ok": diag_ok}


def _subalgebra_frame(b: AlgSubspace, frame: IdempotentFrame):
    """Extract a subalgebra together with the image of the ambient frame."""
    sub_alg, _rows = b.extracted()
    idems = []
    for e in frame.idempotents:
        coords = b.restrict_vector(e)
        if coords is None:
            return None, None
        idems.append(coords)
    sub_frame = IdempotentFrame(sub_alg, idems, frame.labels, frame.degrees, check=False)
    return sub_alg, sub_frame


def layer_quotient_module(a: Algebra, frame: IdempotentFrame, order: WeightOrder, i: int) -> ModuleRep:
    """The module A e_i / J_{l-1} e_i for l the level of weight i.

    For a valid heredity chain this is the standard module at i (and is
    computable without primitive idempotents of A).
    """
    chain = level_chain(a, frame, order)
    rank = chain.levels.index(order.levels[i])
    below = chain.ideal_below(rank)
    proj, carrier = projective_module(a, frame.idempotents[i], "left")
    killed = column_span(a, below.space.basis, frame.idempotents[i])
    coords = span(a.field, carrier.dim, [carrier.coords(v) for v in killed.basis])
    module, _ = quotient_module(proj, coords)
    return module


def exact_borel_check(a: Algebra, frame: IdempotentFrame, b: AlgSubspace, order: WeightOrder) -> dict:
    """Exact-Borel test: directed subalgebra, exact induction, simples -> standards."""
    report: dict = {"overall": False}
    if b.closure_kind != AlgSubspace.SUBALGEBRA:
        report["reason"] = "candidate is not a verified subalgebra"
        return report
    if not all(b.contains(e) for e in frame.idempotents):
        report["reason"] = "candidate does not contain the frame idempotents"
        return report
    sub_alg, sub_frame = _subalgebra_frame(b, frame)
    if sub_alg is None:
        report["reason"] = "frame idempotents do not restrict"
        return report
    if not is_elementary(sub_alg, sub_frame):
        report["reason"] = "candidate subalgebra is not elementary"
        return report
    directed = directed_qh_check(sub_alg, sub_frame, order)
    report["directed_simple"] = directed["simple_standards"]
    right_reg = restrict_module(regular_module(a, "right"), b)
    report["right_projective"] = is_projective_module(right_reg, sub_frame)
    use_standards = is_elementary(a, frame)
    family = standard_modules(a, frame, order) if use_standards else None
    induced_match = True
    per_weight = []
    for i in range(len(frame)):
        simple = simple_module(sub_alg, sub_frame, i, "left")
        induced = induce_module(a, b, simple)
        if use_standards:
            target = family.standards[i]
        else:
            target = layer_quotient_module(a, frame, order, i)
        same = (
            induced.dim == target.dim
            and induced.comp_dim_vector(frame) == target.comp_dim_vector(frame)
            and induced.top_multiplicities(frame) == target.top_multiplicities(frame)
        )
        induced_match = induced_match and same
        per_weight.append(
            {
                "weight": frame.labels[i],
                "induced_dim": induced.dim,
                "standard_dim": target.dim,
                "match": same,
            }
        )
    report["induced_are_standards"] = induced_match
    report["weights"] = per_weight
    report["overall"] = (
        directed["simple_standards"] and report["right_projective"] and induced_match
    )
    return report


def delta_subalgebra_check(a: Algebra, frame: IdempotentFrame, c: AlgSubspace, order: WeightOrder) -> dict:
    """Delta-subalgebra test: standards restrict to the projectives of c."""
    report: dict = {"overall": False}
    if c.closure_kind != AlgSubspace.SUBALGEBRA:
        report["reason"] = "candidate is not a verified subalgebra"
        return report
    if not all(c.contains(e) for e in frame.idempotents):
        report["reason"] = "candidate does not contain the frame idempotents"
        return report
    sub_alg, sub_frame = _subalgebra_frame(c, frame)
    if sub_alg is None:
        report["reason"] = "frame idempotents do not restrict"
        return report
    if not is_elementary(sub_alg, sub_frame):
        report["reason"] = "candidate subalgebra is not elementary"
        return report
    directed = directed_qh_check(sub_alg, sub_frame, order)
    report["directed_projective"] = directed["projective_standards"]
    use_standards = is_elementary(a, frame)
    family = standard_modules(a, frame, order) if use_standards else None
    all_proj = True
    all_match = True
    per_weight = []
    for i in range(len(frame)):
        if use_standards:
            delta = family.standards[i]
        else:
            delta = layer_quotient_module(a, frame, order, i)
        restricted = restrict_module(delta, c)
        proj_ok = is_projective_module(restricted, sub_frame)
        proj_c, _ = projective_module(sub_alg, sub_frame.idempotents[i], "left")
        same = (
            restricted.dim == proj_c.dim
            and restricted.comp_dim_vector(sub_frame) == proj_c.comp_dim_vector(sub_frame)
            and restricted.top_multiplicities(sub_frame) == proj_c.top_multiplicities(sub_frame)
        )
        all_proj = all_proj and proj_ok
        all_match = all_match and same
        per_weight.append(
            {
                "weight": frame.labels[i],
                "restricted_dim": restricted.dim,
                "projective_dim": proj_c.dim,
                "projective": proj_ok,
                "match": same,
            }
        )
    report["restrictions_projective"] = all_proj
    report["restrictions_are_projectives"] = all_match
    report["weights"] = per_weight
    report["overall"] = directed["projective_standards"] and all_proj and all_match
    return report


def normalized_level_functions(n: int, max_levels: int | None = None):
    """All surjective level assignments onto {0..m}, lexicographically."""
    out = []
    for levels in iter_product(range(n), repeat=n):
        top = max(levels) if levels else -1
        if set(levels) != set(range(top + 1)):
            continue
        if max_levels is not None and top + 1 > max_levels:
            continue
        out.append(levels)
    return out


def qh_order_search(a: Algebra, frame: IdempotentFrame, max_weights: int = 7) -> list[WeightOrder]:
    """All level functions whose candidate chain verifies, in lex order."""
    n = len(frame)
    if n > max_weights:
        raise AlgebraError(f"frame has {n} weights, search bound is {max_weights}")
    found = []
    for levels in normalized_level_functions(n):
        order = WeightOrder(frame.labels, levels)
        if heredity_chain_verify(a, frame, order)["overall"]:
            found.append(order)
    return found
