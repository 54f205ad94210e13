"""Schedule constructors for gathering with up to F unreliable robots.

Eight planners share the Schedule output type:

  plan_mec          everyone to the minimum enclosing circle center
  plan_opt_f1       F = 1 optimal single-target plan with laggard handling
  plan_tri          three robots, F = 1, closed-form optimal target
  plan_centerpoint  F < ceil(n/3), everyone to a centerpoint
  plan_hamsandwich  F < ceil(n/2), everyone to a median-line crossing
  plan_grid         hierarchical grid snapping, any F <= n-2
  plan_ssi          repeated closest-pair contraction, any F <= n-2
  plan_auto         budget-based dispatch over the above

Planners never learn which robots are reliable; schedules only branch on
positions observable along the way (for F = 1, on which robot lags).
"""

import math
from typing import NamedTuple, Optional, Sequence

from .errors import (
    AllCoincidentError,
    AmbiguousLaggardError,
    BadParamsError,
    BudgetTooLargeError,
    DegenerateError,
    TooLargeError,
    TooSmallError,
    WrongBudgetError,
)
from .geom import (
    EPS_GEO,
    Point2,
    closest_distinct_pair,
    centerpoint,
    dist,
    furthest_voronoi,
    median_line_pair,
    midpoint,
    minidisk,
)
from .model import Instance, Schedule, Waypoint

SQRT2 = math.sqrt(2.0)

# Largest fault budget for which the closest-pair planner's F + 2 bound
# beats the grid planner's constant: floor(32*sqrt(2)) - 2.
SSI_MAX_F = 43


def _straight_to(points: Sequence[Point2], target, algorithm: str, meta=None) -> Schedule:
    """All robots head straight to target; early arrivals wait for the last."""
    tgt = Point2(float(target[0]), float(target[1]))
    dists = [dist(p, tgt) for p in points]
    horizon = max(dists)
    trajs = []
    for p, d in zip(points, dists):
        wp = [Waypoint(0.0, Point2(*p))]
        if d > 0.0:
            wp.append(Waypoint(d, tgt))
        if horizon > wp[-1].t:
            wp.append(Waypoint(horizon, wp[-1].pos))
        trajs.append(wp)
    return Schedule(algorithm, trajs, meta or {})


def plan_mec(instance: Instance) -> Schedule:
    """Everyone to the minimum enclosing circle center; horizon = its radius."""
    mec = minidisk(instance.robots)
    meta = {"D": [mec.center.x, mec.center.y], "radius": mec.radius}
    return _straight_to(instance.robots, mec.center, "mec", meta)


def subset_radius_order(instance: Instance) -> list[tuple[int, float]]:
    """Leave-one-out subsets ordered by enclosing-circle radius.

    Returns [(omitted_index, radius), ...] ascending by radius, ties by
    omitted index. The first entry names the cheapest subset to gather
    (its omitted robot is the one a fault-free adversary would sacrifice).
    """
    if instance.n < 3:
        raise TooSmallError("leave-one-out ordering needs at least 3 robots")
    rows = []
    for i in range(instance.n):
        rest = [p for j, p in enumerate(instance.robots) if j != i]
        rows.append((i, minidisk(rest).radius))
    rows.sort(key=lambda row: (row[1], row[0]))
    return rows


def plan_single_point(instance: Instance, point, algorithm: str = "single-point") -> Schedule:
    """Send everyone to one target; after n-1 arrivals, meet the laggard halfway.

    All robots head straight to the target D. Let t1 be the (n-1)-th
    smallest arrival time; early arrivals wait at D. If some robot is
    still strictly short of D at t1, everyone (including that robot, from
    wherever it is at t1) heads to the midpoint D' of D and the robot's
    position at t1. At most one robot can be strictly late by definition
    of t1; more than one means the arithmetic broke down.
    """
    if instance.n < 3:
        raise TooSmallError("single-point plan needs at least 3 robots")
    d_pt = Point2(float(point[0]), float(point[1]))
    robots = instance.robots
    dists = [dist(p, d_pt) for p in robots]
    t1 = sorted(dists)[-2]
    laggards = [i for i, d in enumerate(dists) if d > t1 + EPS_GEO]
    if len(laggards) > 1:
        raise AmbiguousLaggardError(
            "more than one robot beyond the (n-1)-th arrival time"
        )
    meta = {"D": [d_pt.x, d_pt.y], "t1": t1}

    if not laggards:
        trajs = []
        for p, d in zip(robots, dists):
            wp = [Waypoint(0.0, Point2(*p))]
            if d > 0.0:
                wp.append(Waypoint(d, d_pt))
            if t1 > wp[-1].t:
                wp.append(Waypoint(t1, d_pt))
            trajs.append(wp)
        return Schedule(algorithm, trajs, meta)

    lag = laggards[0]
    p_lag = robots[lag]
    d_lag = dists[lag]
    # Laggard's position at t1 along its straight run to D.
    q = Point2(
        p_lag.x + t1 * (d_pt.x - p_lag.x) / d_lag,
        p_lag.y + t1 * (d_pt.y - p_lag.y) / d_lag,
    )
    d_prime = midpoint(q, d_pt)
    horizon = t1 + dist(d_pt, d_prime)
    trajs = []
    for i, (p, d) in enumerate(zip(robots, dists)):
        if i == lag:
            trajs.append(
                [Waypoint(0.0, Point2(*p)), Waypoint(t1, q), Waypoint(horizon, d_prime)]
            )
            continue
        wp = [Waypoint(0.0, Point2(*p))]
        if d > 0.0:
            wp.append(Waypoint(d, d_pt))
        if t1 > wp[-1].t:
            wp.append(Waypoint(t1, d_pt))
        wp.append(Waypoint(horizon, d_prime))
        trajs.append(wp)
    meta["D_prime"] = [d_prime.x, d_prime.y]
    return Schedule(algorithm, trajs, meta)


class OptPointResult(NamedTuple):
    point: Point2
    predicted_cr: float
    omitted: int
    r0: float
    r1: float
    r0_tie: bool


def _f1_objective(s0: Sequence[Point2], c_pt: Point2, r0: float, r1: float):
    def objective(d_pt: Point2) -> float:
        far = max(dist(d_pt, p) for p in s0)
        return max(far / r0, (far + dist(d_pt, c_pt)) / (2.0 * r1))

    return objective


def _min_on_segment(objective, seg, tol: float = 1e-12) -> tuple[Point2, float]:
    """Golden-section minimum of a unimodal objective along a segment.

    Searches the [0, 1] parameter down to width tol, then keeps the best
    of the refined point and both endpoints.
    """
    ax, ay = seg.a
    bx, by = seg.b

    def g(u: float) -> float:
        return objective(Point2(ax + u * (bx - ax), ay + u * (by - ay)))

    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = 0.0, 1.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = g(c), g(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = g(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = g(d)
    u_mid = (a + b) / 2.0
    val, u = min((g(0.0), 0.0), (g(1.0), 1.0), (g(u_mid), u_mid))
    return Point2(ax + u * (bx - ax), ay + u * (by - ay)), val


def opt_point_f1(instance: Instance) -> OptPointResult:
    """Optimal single target for F = 1 and its predicted competitive ratio.

    Let S0 be the cheapest leave-one-out subset (radius r0), C its omitted
    robot, and r1 the second-smallest leave-one-out radius. The worst-case
    ratio of the single-point plan with target D is

        max( maxdist(D, S0) / r0,  (maxdist(D, S0) + |CD|) / (2 r1) )

    which is minimized either at the center of S0's enclosing circle or on
    an edge of the furthest-point Voronoi diagram of S0. All candidates
    are searched; ties keep the first found.
    """
    if instance.n < 3:
        raise TooSmallError("optimal F=1 target needs at least 3 robots")
    order = subset_radius_order(instance)
    omit0, r0 = order[0]
    r1 = order[1][1]
    r0_tie = abs(r1 - r0) <= EPS_GEO
    robots = instance.robots
    c_pt = robots[omit0]
    s0 = [p for j, p in enumerate(robots) if j != omit0]

    if r0 <= EPS_GEO:
        # S0 is a single location: meet C halfway from there.
        d_pt = minidisk(s0).center
        if r1 <= EPS_GEO:
            return OptPointResult(d_pt, 1.0, omit0, r0, r1, r0_tie)
        far = max(dist(d_pt, p) for p in s0)
        pred = (far + dist(d_pt, c_pt)) / (2.0 * r1)
        return OptPointResult(d_pt, pred, omit0, r0, r1, r0_tie)

    objective = _f1_objective(s0, c_pt, r0, r1)
    k0 = minidisk(s0).center
    best_pt, best_val = k0, objective(k0)
    clamp = r0 * best_val + minidisk(robots).radius
    for edge in furthest_voronoi(s0, clamp):
        cand_pt, cand_val = _min_on_segment(objective, edge.seg)
        if cand_val < best_val:
            best_pt, best_val = cand_pt, cand_val
    return OptPointResult(best_pt, best_val, omit0, r0, r1, r0_tie)


def plan_opt_f1(instance: Instance) -> Schedule:
    """Optimal plan for exactly one unreliable robot."""
    if instance.f != 1:
        raise WrongBudgetError(f"plan_opt_f1 requires F = 1, got F = {instance.f}")
    res = opt_point_f1(instance)
    sched = plan_single_point(instance, res.point, algorithm="opt-f1")
    sched.meta.update(
        predicted_cr=res.predicted_cr,
        omitted=res.omitted,
        r0=res.r0,
        r1=res.r1,
        r0_tie=res.r0_tie,
    )
    return sched


class TriangleInstance(NamedTuple):
    """Triangle relabeled so the sides satisfy a <= b <= c.

    A is the vertex opposite the shortest side a = |BC|, C opposite the
    longest side c = |AB|. beta is the angle at B (always acute), gamma
    the angle at C, phi the tilt of the optimal target above the midpoint
    of BC.
    """

    A: Point2
    B: Point2
    C: Point2
    a: float
    b: float
    c: float
    tan_beta: float
    sin_gamma: float
    tan_phi: float
    lb_case: bool
    area: float


def triangle_instance(p0, p1, p2) -> TriangleInstance:
    pts = [Point2(float(p[0]), float(p[1])) for p in (p0, p1, p2)]
    opp = [dist(pts[1], pts[2]), dist(pts[0], pts[2]), dist(pts[0], pts[1])]
    order = sorted(range(3), key=lambda i: (opp[i], i))
    a_pt, b_pt, c_pt = (pts[i] for i in order)
    a, b, c = (opp[i] for i in order)
    if a <= EPS_GEO or a + b - c <= EPS_GEO:
        raise DegenerateError("triangle is degenerate (collinear or repeated points)")
    cross = (b_pt.x - a_pt.x) * (c_pt.y - a_pt.y) - (b_pt.y - a_pt.y) * (c_pt.x - a_pt.x)
    area = abs(cross) / 2.0
    tan_beta = 4.0 * area / (a * a + c * c - b * b)
    sin_gamma = 2.0 * area / (a * b)
    lb_case = tan_beta <= sin_gamma
    if lb_case:
        tan_phi = tan_beta
    else:
        num = 2.0 * math.sqrt(max(c * c - (b - a) * (b - a), 0.0))
        den = math.sqrt(max((3.0 * b - a) * (3.0 * b - a) - c * c, 0.0)) + math.sqrt(
            max((b + a) * (b + a) - c * c, 0.0)
        )
        tan_phi = num / den
    return TriangleInstance(
        a_pt, b_pt, c_pt, a, b, c, tan_beta, sin_gamma, tan_phi, lb_case, area
    )


class TriOptResult(NamedTuple):
    point: Point2
    predicted_cr: float
    tri: TriangleInstance


def tri_opt_point(tri: TriangleInstance) -> TriOptResult:
    """Closed-form optimal target for a 3-robot instance with F = 1.

    The target sits at height (a/2)*tan(phi) above the midpoint of the
    shortest side BC, on the side of vertex A. When tan(beta) <= sin(gamma)
    the ratio is c/b, otherwise 1/cos(phi).
    """
    mid = midpoint(tri.B, tri.C)
    ux, uy = tri.B.y - tri.C.y, tri.C.x - tri.B.x
    ux, uy = ux / tri.a, uy / tri.a
    if (tri.A.x - mid.x) * ux + (tri.A.y - mid.y) * uy < 0.0:
        ux, uy = -ux, -uy
    h = (tri.a / 2.0) * tri.tan_phi
    d_pt = Point2(mid.x + h * ux, mid.y + h * uy)
    cr = tri.c / tri.b if tri.lb_case else math.sqrt(1.0 + tri.tan_phi * tri.tan_phi)
    return TriOptResult(d_pt, cr, tri)


def plan_tri(instance: Instance) -> Schedule:
    """Closed-form plan for exactly three robots with F = 1."""
    if instance.n < 3:
        raise TooSmallError("plan_tri requires exactly 3 robots")
    if instance.n > 3:
        raise TooLargeError("plan_tri requires exactly 3 robots")
    if instance.f != 1:
        raise WrongBudgetError(f"plan_tri requires F = 1, got F = {instance.f}")
    tri = triangle_instance(*instance.robots)
    res = tri_opt_point(tri)
    sched = plan_single_point(instance, res.point, algorithm="tri")
    sched.meta["predicted_cr"] = res.predicted_cr
    return sched


def plan_centerpoint(instance: Instance) -> Schedule:
    """Everyone to a centerpoint of the start positions; needs F < ceil(n/3)."""
    limit = -(-instance.n // 3)
    if instance.f >= limit:
        raise BudgetTooLargeError(
            f"centerpoint plan requires F < ceil(n/3) = {limit}, got F = {instance.f}"
        )
    k = centerpoint(instance.robots)
    return _straight_to(instance.robots, k, "centerpoint", {"D": [k.x, k.y]})


def plan_hamsandwich(instance: Instance) -> Schedule:
    """Everyone to the crossing of the two median lines; needs F < ceil(n/2)."""
    limit = -(-instance.n // 2)
    if instance.f >= limit:
        raise BudgetTooLargeError(
            f"median-line plan requires F < ceil(n/2) = {limit}, got F = {instance.f}"
        )
    _, _, k = median_line_pair(instance.robots)
    return _straight_to(instance.robots, k, "hamsandwich", {"D": [k.x, k.y]})


class GridParams(NamedTuple):
    d_eps: float
    max_level: Optional[int] = None


def _grid_cell(ux: float, uy: float, level: int) -> tuple[int, int]:
    # Cell k covers ((k - 1/2) * 2^level, (k + 1/2) * 2^level] per axis.
    s = 2.0 ** level
    return (math.ceil(ux / s - 0.5), math.ceil(uy / s - 0.5))


def plan_grid(
    instance: Instance,
    d_eps: Optional[float] = None,
    max_level: Optional[int] = None,
) -> Schedule:
    """Hierarchical grid snapping: works for every fault budget.

    Scale the plane by 1/d_eps. At level i = 1, 2, ... each robot moves to
    the center of its level-i cell (side 2^i, cells are half-open so each
    point has one cell), taking max(sqrt(2) * d_eps * 2^(i-1), travel)
    time per level so all robots change levels in lockstep. Cell indices
    are always taken from the initial position. Stops at the first level
    whose cells coincide for all robots. d_eps defaults to 1/64 of the
    closest distinct-pair distance.
    """
    robots = instance.robots
    if all(dist(robots[0], p) <= EPS_GEO for p in robots):
        trajs = [[Waypoint(0.0, Point2(*p))] for p in robots]
        return Schedule("grid", trajs, {"d_eps": d_eps, "levels": 0, "overruns": 0})
    if d_eps is None:
        d_eps = closest_distinct_pair(robots)[2] / 64.0
    if not (isinstance(d_eps, (int, float)) and d_eps > 0.0 and math.isfinite(d_eps)):
        raise BadParamsError("d_eps must be a positive finite number")
    d_eps = float(d_eps)
    scaled = [(p.x / d_eps, p.y / d_eps) for p in robots]

    level = 1
    while len({_grid_cell(ux, uy, level) for ux, uy in scaled}) > 1:
        level += 1
        if max_level is not None and level > max_level:
            raise BadParamsError(
                f"robots do not share a cell within max_level = {max_level}"
            )
    top = level

    overruns = 0
    trajs = []
    for p, (ux, uy) in zip(robots, scaled):
        wp = [Waypoint(0.0, Point2(*p))]
        t = 0.0
        cur = Point2(*p)
        for i in range(1, top + 1):
            kx, ky = _grid_cell(ux, uy, i)
            side = (2.0 ** i) * d_eps
            target = Point2(kx * side, ky * side)
            budget = SQRT2 * d_eps * 2.0 ** (i - 1)
            travel = dist(cur, target)
            leg = budget
            if travel > budget:
                leg = travel
                if travel > budget * (1.0 + 1e-12):
                    overruns += 1
            if travel > 0.0:
                wp.append(Waypoint(t + travel, target))
            if t + leg > wp[-1].t:
                wp.append(Waypoint(t + leg, target))
            t += leg
            cur = target
        trajs.append(wp)
    meta = {"d_eps": d_eps, "levels": top, "overruns": overruns}
    return Schedule("grid", trajs, meta)


def plan_ssi(instance: Instance) -> Schedule:
    """Repeated contraction toward the closest distinct pair's midpoint.

    Each iteration takes the closest pair of distinct current positions,
    sets D to its midpoint and d to half its distance, and moves every
    robot exactly d toward D for d time units (the pair lands exactly on
    D, merging for good). The count of distinct positions drops every
    iteration, so there are at most n - 1 iterations.
    """
    if instance.n < 2:
        raise TooSmallError("need at least 2 robots")
    robots = instance.robots
    trajs = [[Waypoint(0.0, Point2(*p))] for p in robots]
    cur = [Point2(*p) for p in robots]
    t = 0.0
    iterations = []
    while True:
        try:
            ia, ib, dd = closest_distinct_pair(cur)
        except AllCoincidentError:
            break
        d_pt = midpoint(cur[ia], cur[ib])
        d = dd / 2.0
        iterations.append([d_pt.x, d_pt.y, d])
        t += d
        nxt = []
        for p in cur:
            r = dist(p, d_pt)
            assert r >= d * (1.0 - 1e-9) - EPS_GEO, "closest-pair property violated"
            if r <= d * (1.0 + 1e-12):
                q = d_pt
            else:
                q = Point2(p.x + d * (d_pt.x - p.x) / r, p.y + d * (d_pt.y - p.y) / r)
            nxt.append(q)
        for traj, q in zip(trajs, nxt):
            traj.append(Waypoint(t, q))
        cur = nxt
    return Schedule("ssi", trajs, {"iterations": iterations})


def plan_auto(instance: Instance) -> Schedule:
    """Pick the strongest planner the fault budget allows.

    F = 1 gets the optimal plan; F < ceil(n/3) the centerpoint plan;
    F < ceil(n/2) the median-line plan; F <= 43 the closest-pair plan
    (bound F + 2); anything larger the grid plan (constant bound).
    """
    f = instance.f
    if f == 1:
        return plan_opt_f1(instance)
    if f < -(-instance.n // 3):
        return plan_centerpoint(instance)
    if f < -(-instance.n // 2):
        return plan_hamsandwich(instance)
    if f <= SSI_MAX_F:
        return plan_ssi(instance)
    return plan_grid(instance)
