# solvers/class_realizer.py
# Copyright (C) 2024 - 2028 the permprod authors and contributors
# <see AUTHORS file>
#
# This module is part of permprod and is released under
# the MIT License: https://www.opensource.org/licenses/mit-license.php

"""
Realizes two conjugacy classes as factors of a long cycle.

Given classes C1, C2 of S_n this module finds alpha in C1 and beta in C2 whose product is
the canonical n-cycle (1, ..., n), or the canonical (n-1)-cycle (1, ..., n-1) fixing n with
<alpha, beta> transitive. Three strategies are tried in the configured order:

* ``constructive``: builds a bipartite plane tree with the prescribed vertex degrees,
  whose face permutation is an n-cycle, then merges vertices back with three-cycles
  while keeping the product a single cycle. The near cycle variant inserts the fixed
  point through a shared edge.
* ``randomized``: seeded uniform draws of alpha from C1, accepted when alpha^-1 * target
  lies in C2.
* ``exhaustive``: backtracking over alpha's images with cycle type pruning on both
  factors.

"""
from __future__ import annotations

import logging
import math
import random
from collections import Counter
from typing import Iterator, Optional, Sequence, Tuple

from permprod.config import config
from permprod.exceptions import (
    ConfigurationError,
    FixedPointFreeInvolutionsError,
    OutOfRangeError,
    ParityViolationError,
    SearchExhaustedError,
)
from permprod.models.cycle_types import ClassSpec
from permprod.models.permutation import (
    Permutation,
    compose,
    conjugate,
    embed,
    is_transitive,
)
from permprod.models.realization import (
    Method,
    RealizationRequest,
    RealizationWitness,
    Variant,
)

logger = logging.getLogger(__name__)

Pair = Tuple[Permutation, Permutation]


def target_product(variant: Variant, degree: int) -> Permutation:
    """
    The canonical product for a variant.

    Args:
        variant (Variant): The product shape.
        degree (int): The degree n.

    Returns:
        Permutation: (1..n), (1..n-1) fixing n, or (1..n-2)(n-1,n).
    """
    if variant == Variant.FULL_CYCLE:
        cycles = [range(1, degree + 1)]
    elif variant == Variant.NEAR_CYCLE:
        cycles = [range(1, degree)]
    else:
        cycles = [range(1, degree - 1), (degree - 1, degree)]
    return Permutation.from_cycles(cycles, degree)


def _check_preconditions(request: RealizationRequest) -> None:
    degree = request.degree
    total = request.c1.index + request.c2.index
    floor = degree - 1 if request.variant == Variant.FULL_CYCLE else degree
    if total < floor or (total - floor) % 2:
        raise ParityViolationError(
            f"Index sum {total} of {request.c1} and {request.c2} is not of the form "
            f"{floor} + 2k",
            {"index_sum": total, "degree": degree, "variant": str(request.variant)},
        )
    if request.variant == Variant.SPLIT_CYCLE and degree < 4:
        raise OutOfRangeError(f"A split cycle product needs degree 4 or more, got {degree}")
    if (
        request.variant == Variant.NEAR_CYCLE
        and request.c1.cycle_type.is_fixed_point_free_involution()
        and request.c2.cycle_type.is_fixed_point_free_involution()
    ):
        raise FixedPointFreeInvolutionsError(
            f"{request.c1} and {request.c2} are both fixed point free involution classes"
        )


def _accepts(request: RealizationRequest, alpha: Permutation, beta: Permutation) -> bool:
    if alpha.cycle_type() != request.c1.cycle_type:
        return False
    if beta.cycle_type() != request.c2.cycle_type:
        return False
    if compose(alpha, beta) != target_product(request.variant, request.degree):
        return False
    return request.variant == Variant.FULL_CYCLE or is_transitive([alpha, beta])


def _is_single_cycle(p: Permutation) -> bool:
    return len(p.cycle_lengths()) == 1


def _bipartite_tree(
    lengths: Sequence[int], black: set, start: Optional[Tuple[int, int]] = None
) -> Optional[list]:
    """
    Grows a bipartite tree whose vertex v has degree lengths[v].

    Non-leaf vertices are attached first, largest degree first, each to the oldest open
    stub of the other colour; leaves fill the remaining stubs.

    Args:
        lengths (Sequence): Vertex degrees indexed by vertex id.
        black (set): The ids of the black vertices, the rest are white.
        start (`tuple`, optional): The (black, white) pair joined by the first edge.

    Returns:
        list: The (black, white) edges in creation order, or None when stuck.
    """
    vertices = [v for v in range(len(lengths)) if lengths[v] > 0]
    if start is None:
        ranked = sorted(vertices, key=lambda v: (-lengths[v], v))
        start = (
            next(v for v in ranked if v in black),
            next(v for v in ranked if v not in black),
        )
    edges = [start]
    stubs = {True: [], False: []}
    room = {}
    for v in start:
        room[v] = lengths[v] - 1
        if room[v]:
            stubs[v in black].append(v)
    pending = sorted(
        (v for v in vertices if v not in start),
        key=lambda v: (lengths[v] == 1, -lengths[v], v),
    )
    while pending:
        for position, v in enumerate(pending):
            if stubs[v not in black]:
                break
        else:
            return None
        pending.pop(position)
        open_stubs = stubs[v not in black]
        parent = open_stubs[0]
        room[parent] -= 1
        if not room[parent]:
            open_stubs.pop(0)
        edges.append((parent, v) if parent in black else (v, parent))
        room[v] = lengths[v] - 1
        if room[v]:
            stubs[v in black].append(v)
    return edges


def unicellular_pair(
    black_parts: Sequence[int],
    white_parts: Sequence[int],
    designated: Optional[Tuple[int, int]] = None,
) -> Optional[Pair]:
    """
    A pair with the given cycle types whose product is a single n-cycle.

    Args:
        black_parts (Sequence): Cycle lengths of alpha, summing to n.
        white_parts (Sequence): Cycle lengths of beta, summing to n.
        designated (`tuple`, optional): Positions (i, j) of a part of each list; when
            given the point 1 lies on alpha's cycle for black_parts[i] and on beta's cycle
            for white_parts[j].

    Returns:
        tuple: (alpha, beta), or None when the construction does not apply.
    """
    degree = sum(black_parts)
    if degree != sum(white_parts):
        return None
    lengths = list(black_parts) + list(white_parts)
    black = set(range(len(black_parts)))
    excess = 2 * degree - len(lengths) - (degree - 1)
    if excess < 0 or excess % 2:
        return None

    marked = set()
    if designated is not None:
        marked = {designated[0], len(black_parts) + designated[1]}
    splits = []
    live = set(range(len(lengths)))
    for _ in range(excess // 2):
        candidates = [v for v in live if lengths[v] >= 3]
        if not candidates:
            return None
        vertex = min(candidates, key=lambda v: (v in marked, -lengths[v], v))
        children = (len(lengths), len(lengths) + 1, len(lengths) + 2)
        lengths.extend([lengths[vertex] - 2, 1, 1])
        lengths[vertex] = 0
        live.discard(vertex)
        live.update(children)
        if vertex in black:
            black.update(children)
        if vertex in marked:
            marked.discard(vertex)
            marked.add(children[0])
        splits.append((vertex, children))

    start = None
    if designated is not None:
        start = tuple(sorted(marked, key=lambda v: v not in black))
    edges = _bipartite_tree(lengths, black, start)
    if edges is None:
        return None

    incident = {}
    for label, (u, w) in enumerate(edges, start=1):
        incident.setdefault(u, []).append(label)
        incident.setdefault(w, []).append(label)
    alpha = Permutation.from_cycles(
        [c for v, c in incident.items() if v in black], degree
    )
    beta = Permutation.from_cycles(
        [c for v, c in incident.items() if v not in black], degree
    )
    sigma = compose(alpha, beta)
    point = {v: c[0] for v, c in incident.items()}

    for vertex, (keep, first, second) in reversed(splits):
        i, j, k = point[keep], point[first], point[second]
        for t in ((i, j, k), (i, k, j)):
            merge = Permutation.from_cycles([t], degree)
            if vertex in black:
                merged = compose(merge, sigma)
            else:
                merged = compose(sigma, merge)
            if _is_single_cycle(merged):
                break
        else:
            return None
        if vertex in black:
            alpha = compose(merge, alpha)
        else:
            beta = compose(beta, merge)
        sigma = merged
        point[vertex] = i
    return alpha, beta


def _canonical_relabelling(sigma: Permutation) -> Permutation:
    # g sends the longest cycle of sigma, read from its smallest point, to 1, 2, ...
    degree = sigma.degree
    longest = max(sigma.cycles(include_fixed=True), key=len)
    images = [0] * degree
    for label, point in enumerate(longest, start=1):
        images[point - 1] = label
    label = len(longest)
    for point in range(1, degree + 1):
        if not images[point - 1]:
            label += 1
            images[point - 1] = label
    return Permutation(images, check=False)


def _relabelled(pair: Pair) -> Pair:
    alpha, beta = pair
    g = _canonical_relabelling(compose(alpha, beta))
    return conjugate(alpha, g), conjugate(beta, g)


def _constructive(request: RealizationRequest) -> Optional[Pair]:
    lam = list(request.c1.cycle_type.parts)
    mu = list(request.c2.cycle_type.parts)
    if request.variant == Variant.FULL_CYCLE:
        pair = unicellular_pair(lam, mu)
        return _relabelled(pair) if pair else None
    if request.variant != Variant.NEAR_CYCLE:
        return None

    degree = request.degree
    ells = sorted({p for p in lam if p >= 2}, reverse=True)
    ems = sorted({p for p in mu if p >= 2}, reverse=True)
    joint = Permutation.from_cycles([(1, degree)], degree)
    for ell in ells:
        for em in ems:
            i, j = lam.index(ell), mu.index(em)
            black = lam[:i] + [ell - 1] + lam[i + 1 :]
            white = mu[:j] + [em - 1] + mu[j + 1 :]
            pair = unicellular_pair(black, white, designated=(i, j))
            if pair is None:
                logger.debug("Near cycle parts (%d, %d) did not yield a tree", ell, em)
                continue
            # the point 1 lies on both designated cycles; routing n through it
            # lengthens both by one and leaves the product untouched
            alpha = compose(embed(pair[0], degree), joint)
            beta = compose(joint, embed(pair[1], degree))
            return _relabelled((alpha, beta))
    return None


def _draw(parts: Sequence[int], points: list) -> Permutation:
    cycles = []
    start = 0
    for part in parts:
        cycles.append(points[start : start + part])
        start += part
    return Permutation.from_cycles(cycles, len(points))


def draw_cap(request: RealizationRequest) -> int:
    """
    The number of randomized draws for a request.

    Args:
        request (RealizationRequest): The request.

    Returns:
        int: The explicit cap, or ceil(retry_factor * n * ln n), at least one.
    """
    if request.retry_cap is not None:
        return request.retry_cap
    degree = request.degree
    factor = config.realizer["retry_factor"]
    return max(1, math.ceil(factor * degree * math.log(degree))) if degree > 1 else 1


def _randomized(request: RealizationRequest) -> Optional[Pair]:
    rng = random.Random(request.seed)
    target = target_product(request.variant, request.degree)
    parts = request.c1.cycle_type.parts
    points = list(range(1, request.degree + 1))
    cap = draw_cap(request)
    for draw in range(cap):
        rng.shuffle(points)
        alpha = _draw(parts, points)
        beta = compose(alpha.inverse(), target)
        if _accepts(request, alpha, beta):
            logger.debug("Randomized draw %d of %d accepted", draw + 1, cap)
            return alpha, beta
    logger.debug("Randomized search used all %d draws", cap)
    return None


def _closed_length(images: list, source: int, image: int) -> int:
    # length of the cycle closed by source -> image, 0 while the chain is open
    if source == image:
        return 1
    point, length = image, 2
    while images[point] and images[point] != source:
        point = images[point]
        length += 1
    return length if images[point] == source else 0


def exhaustive_pairs(request: RealizationRequest) -> Iterator[Pair]:
    """
    Generates every accepted pair by backtracking over alpha's images.

    Assigning alpha(j) also fixes beta(alpha(j)) = target(j); a branch is cut as soon as
    either factor closes a cycle whose length its class has no room left for.

    Args:
        request (RealizationRequest): The request.

    Yields:
        tuple: (alpha, beta) pairs in lexicographic order of alpha's images.
    """
    degree = request.degree
    target = target_product(request.variant, request.degree)
    alpha_images = [0] * (degree + 1)
    beta_images = [0] * (degree + 1)
    free = [True] * (degree + 1)
    alpha_room = Counter(request.c1.cycle_type.parts)
    beta_room = Counter(request.c2.cycle_type.parts)

    def claim(room: Counter, length: int) -> bool:
        if not length:
            return True
        if not room[length]:
            return False
        room[length] -= 1
        return True

    def release(room: Counter, length: int) -> None:
        if length:
            room[length] += 1

    def assign(j: int) -> Iterator[Pair]:
        if j > degree:
            alpha = Permutation(alpha_images[1:], check=False)
            beta = Permutation(beta_images[1:], check=False)
            if request.variant == Variant.FULL_CYCLE or is_transitive([alpha, beta]):
                yield alpha, beta
            return
        for v in range(1, degree + 1):
            if not free[v]:
                continue
            alpha_images[j] = v
            closed_alpha = _closed_length(alpha_images, j, v)
            if claim(alpha_room, closed_alpha):
                w = target(j)
                beta_images[v] = w
                closed_beta = _closed_length(beta_images, v, w)
                if claim(beta_room, closed_beta):
                    free[v] = False
                    yield from assign(j + 1)
                    free[v] = True
                    release(beta_room, closed_beta)
                beta_images[v] = 0
                release(alpha_room, closed_alpha)
            alpha_images[j] = 0

    yield from assign(1)


def _exhaustive(request: RealizationRequest) -> Optional[Pair]:
    limit = config.realizer["exhaustive_max_degree"]
    if request.degree > limit:
        logger.debug("Exhaustive search skipped, degree %d > %d", request.degree, limit)
        return None
    return next(exhaustive_pairs(request), None)


STRATEGIES = {
    "constructive": (Method.CONSTRUCTIVE, _constructive),
    "randomized": (Method.RANDOMIZED, _randomized),
    "exhaustive": (Method.EXHAUSTIVE, _exhaustive),
}


def realize(request: RealizationRequest) -> RealizationWitness:
    """
    Realizes the request with the first strategy that yields a verified pair.

    Args:
        request (RealizationRequest): The classes, variant and search parameters.

    Raises:
        ParityViolationError: If the index sum is not of the required form.
        FixedPointFreeInvolutionsError: If a near cycle is requested for two fixed
            point free involution classes.
        SearchExhaustedError: If every strategy fails.

    Returns:
        RealizationWitness: The verified witness.
    """
    _check_preconditions(request)
    strategies = request.strategies or tuple(config.realizer["strategies"])
    unknown = [name for name in strategies if name not in STRATEGIES]
    if unknown:
        raise ConfigurationError(f"Unknown realizer strategies: {unknown}")
    for name in strategies:
        method, strategy = STRATEGIES[name]
        pair = strategy(request)
        if pair is None:
            logger.debug("%s strategy found nothing for %s x %s", method, request.c1, request.c2)
            continue
        alpha, beta = pair
        if not _accepts(request, alpha, beta):
            logger.warning(
                "%s strategy returned an invalid pair for %s x %s",
                method,
                request.c1,
                request.c2,
            )
            continue
        return RealizationWitness(
            alpha=alpha,
            beta=beta,
            product=compose(alpha, beta),
            method=method,
            variant=request.variant,
        )
    raise SearchExhaustedError(
        f"No {request.variant} witness for {request.c1} x {request.c2}",
        {"strategies": list(strategies), "seed": request.seed},
    )


def realize_full_cycle(request: RealizationRequest) -> RealizationWitness:
    """
    Finds alpha in c1, beta in c2 with alpha * beta = (1, 2, ..., n).

    Args:
        request (RealizationRequest): The request, its variant is ignored.

    Returns:
        RealizationWitness: The witness.
    """
    return realize(request.model_copy(update={"variant": Variant.FULL_CYCLE}))


def realize_near_cycle(request: RealizationRequest) -> RealizationWitness:
    """
    Finds alpha in c1, beta in c2 with alpha * beta = (1, ..., n-1) and <alpha, beta>
    transitive.

    Args:
        request (RealizationRequest): The request, its variant is ignored.

    Returns:
        RealizationWitness: The witness, its product fixes n.
    """
    return realize(request.model_copy(update={"variant": Variant.NEAR_CYCLE}))


def relabel_fixed_point(witness: RealizationWitness, target: int) -> RealizationWitness:
    """
    Conjugates a near cycle witness so that its product fixes the target point.

    Args:
        witness (RealizationWitness): A near cycle witness.
        target (int): The point to be fixed.

    Raises:
        OutOfRangeError: If the witness is not a near cycle one or the point is not in
            1..n.

    Returns:
        RealizationWitness: The conjugated witness, or the same one if already fixed.
    """
    degree = witness.product.degree
    if witness.variant != Variant.NEAR_CYCLE or witness.fixed_point is None:
        raise OutOfRangeError("Only near cycle witnesses have a fixed point to relabel")
    if not 1 <= target <= degree:
        raise OutOfRangeError(
            f"Point {target} is outside 1..{degree}", {"point": target, "degree": degree}
        )
    current = witness.fixed_point
    if current == target:
        return witness
    swap = Permutation.from_cycles([(current, target)], degree)
    return RealizationWitness(
        alpha=conjugate(witness.alpha, swap),
        beta=conjugate(witness.beta, swap),
        product=conjugate(witness.product, swap),
        method=witness.method,
        variant=witness.variant,
    )


def probe_two_cycle_product(
    c1: ClassSpec, c2: ClassSpec, seed: int = 0, retry_cap: int = None
) -> Optional[RealizationWitness]:
    """
    Searches for alpha in c1, beta in c2 with transitive span and product of cycle type
    (n-2, 2). No existence guarantee is known, so absence is reported as None.

    Args:
        c1 (ClassSpec): The class of alpha.
        c2 (ClassSpec): The class of beta.
        seed (int): Seed for the randomized draws.
        retry_cap (`int`, optional): Randomized draws before the exhaustive search.

    Raises:
        ParityViolationError: If the index sum rules out a transitive product of this
            shape.

    Returns:
        RealizationWitness: The witness, or None.
    """
    request = RealizationRequest(
        c1=c1,
        c2=c2,
        variant=Variant.SPLIT_CYCLE,
        seed=seed,
        retry_cap=retry_cap,
        strategies=("randomized", "exhaustive"),
    )
    try:
        return realize(request)
    except SearchExhaustedError:
        return None
