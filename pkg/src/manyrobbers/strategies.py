"""Executable cop and robber strategies, and an arena that replays them.

The arena enforces the full rules: each round all cops step within closed
neighborhoods, robbers standing on a cop vertex are captured, then the
surviving robbers step and are captured if they land on a cop.  Scripts see
the whole history; move tuples are aligned with the current sorted team
tuple, so identities persist across rounds.

Cop sweep scripts are non-adaptive walks (they also clear the graph blind);
the chase script for the maximum-capture-time family and the three-robber
squad are adaptive, driven by small reaction tables keyed on label
differences along the family's chain edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from . import pursuit
from .errors import IllegalMoveError
from .families import h_vertex, h_label
from .graphs import Graph
from .values import is_finite


# -- transcripts ---------------------------------------------------------------

@dataclass
class RoundRecord:
    index: int
    cops: tuple
    robbers: tuple          # survivors after the round
    captured: tuple         # vertices where robbers were captured this round

    def to_json(self) -> dict:
        return {"round": self.index, "cops": list(self.cops),
                "robbers": list(self.robbers), "captured": list(self.captured)}


@dataclass
class Transcript:
    graph_name: str
    cop_name: str
    robber_name: str
    rounds: list[RoundRecord]
    outcome: str            # "captured_all" or "horizon"
    end_round: int | None

    def to_json_lines(self) -> str:
        lines = [json.dumps(r.to_json(), sort_keys=True) for r in self.rounds]
        lines.append(json.dumps({"outcome": self.outcome,
                                 "end_round": self.end_round}, sort_keys=True))
        return "\n".join(lines) + "\n"


# -- script plumbing -----------------------------------------------------------

@dataclass
class CopScript:
    name: str
    applies: Callable[[Graph], bool]
    place: Callable[[Graph], tuple]
    move: Callable[[Graph, int, tuple, tuple, list], tuple]
    reset: Callable[[], None] = lambda: None


@dataclass
class RobberScript:
    name: str
    applies: Callable[[Graph, int], bool]
    place: Callable[[Graph, tuple, int], tuple]
    move: Callable[[Graph, int, tuple, tuple, list], tuple]
    reset: Callable[[], None] = lambda: None


def _validate_step(graph: Graph, old: tuple, new: tuple, role: str, rnd: int):
    if len(new) != len(old):
        raise IllegalMoveError(
            f"{role} move changed team size at round {rnd}", rnd, role)
    for i, (a, b) in enumerate(zip(old, new)):
        if b not in graph.closed_neighborhood(a):
            raise IllegalMoveError(
                f"{role} {i} moved {a}->{b} outside N[{a}] at round {rnd}",
                rnd, f"{role} {i}")


def arena(graph: Graph, cop_script: CopScript, robber_script: RobberScript,
          m: int, horizon: int) -> Transcript:
    """Faithful replay; raises IllegalMoveError on a bad script move."""
    if horizon < 1:
        raise ValueError("horizon must be at least 1")
    if not cop_script.applies(graph):
        raise ValueError(f"cop script {cop_script.name} does not apply here")
    if not robber_script.applies(graph, m):
        raise ValueError(f"robber script {robber_script.name} does not apply")
    cop_script.reset()
    robber_script.reset()

    cops = tuple(sorted(cop_script.place(graph)))
    placed = tuple(sorted(robber_script.place(graph, cops, m)))
    if len(placed) != m:
        raise IllegalMoveError("robber placement has wrong size", 0, "robbers")
    captured = tuple(v for v in placed if v in set(cops))
    robbers = tuple(v for v in placed if v not in set(cops))
    rounds = [RoundRecord(0, cops, robbers, captured)]
    history = [(cops, robbers)]
    if not robbers:
        return Transcript(graph.name or "", cop_script.name,
                          robber_script.name, rounds, "captured_all", 0)

    for rnd in range(1, horizon + 1):
        new_cops = tuple(cop_script.move(graph, rnd, cops, robbers, history))
        _validate_step(graph, cops, new_cops, "cop", rnd)
        cop_set = set(new_cops)
        caught = tuple(v for v in robbers if v in cop_set)
        survivors = tuple(v for v in robbers if v not in cop_set)
        cops = tuple(sorted(new_cops))
        if not survivors:
            rounds.append(RoundRecord(rnd, cops, (), caught))
            return Transcript(graph.name or "", cop_script.name,
                              robber_script.name, rounds, "captured_all", rnd)
        new_robbers = tuple(robber_script.move(graph, rnd, cops, survivors,
                                               history))
        _validate_step(graph, survivors, new_robbers, "robber", rnd)
        caught2 = tuple(v for v in new_robbers if v in cop_set)
        survivors2 = tuple(sorted(v for v in new_robbers if v not in cop_set))
        rounds.append(RoundRecord(rnd, cops, survivors2, caught + caught2))
        history.append((cops, survivors2))
        robbers = survivors2
        if not robbers:
            return Transcript(graph.name or "", cop_script.name,
                              robber_script.name, rounds, "captured_all", rnd)
    return Transcript(graph.name or "", cop_script.name, robber_script.name,
                      rounds, "horizon", None)


def _align(graph: Graph, old: tuple, new_multiset: tuple) -> tuple:
    """Per-robber assignment realizing a joint multiset move, if one exists."""
    remaining = list(new_multiset)

    def backtrack(i: int, picked: list) -> list | None:
        if i == len(old):
            return list(picked)
        seen = set()
        for j, tgt in enumerate(remaining):
            if tgt is None or tgt in seen:
                continue
            seen.add(tgt)
            if tgt in graph.closed_neighborhood(old[i]):
                remaining[j] = None
                picked.append(tgt)
                out = backtrack(i + 1, picked)
                if out is not None:
                    return out
                picked.pop()
                remaining[j] = tgt
        return None

    out = backtrack(0, [])
    if out is None:
        raise IllegalMoveError(
            f"multiset move {new_multiset} unreachable from {old}", -1, "team")
    return tuple(out)


# -- solver-backed scripts -------------------------------------------------------

def solver_optimal_cop(game: pursuit.PursuitGame) -> CopScript:
    """Greedy-optimal cop play from solved value tables (lex-least ties)."""
    policy = pursuit.CopPolicy(game)

    def place(graph):
        return policy.place()

    def move(graph, rnd, cops, robbers, history):
        return _align(graph, cops, policy.move(cops, robbers))

    return CopScript(name="solver_optimal_cop",
                     applies=lambda g: g == game.graph,
                     place=place, move=move)


def solver_optimal_robbers(game: pursuit.PursuitGame) -> RobberScript:
    """Worst-case robbers from solved value tables (lex-least ties)."""

    def place(graph, cops, m):
        return game.worst_placement(cops, size=m)

    def move(graph, rnd, cops, robbers, history):
        target = game.best_robber_move(cops, robbers)
        return _align(graph, robbers, target)

    return RobberScript(name="solver_optimal_robbers",
                        applies=lambda g, m: g == game.graph and m <= game.m,
                        place=place, move=move)


def stand_still_far_end(name: str = "stand_still_far_end") -> RobberScript:
    """All robbers stack on a vertex farthest from the cops and never move."""

    def place(graph, cops, m):
        best = max(range(graph.n),
                   key=lambda v: (graph.distance_to_set(v, cops), v))
        return (best,) * m

    return RobberScript(name=name, applies=lambda g, m: True, place=place,
                        move=lambda g, r, c, robbers, h: robbers)


def adversarial_spread() -> RobberScript:
    """Spread over distinct far vertices, then greedily keep distance."""

    def place(graph, cops, m):
        order = sorted(range(graph.n),
                       key=lambda v: (-graph.distance_to_set(v, cops), v))
        free = [v for v in order if graph.distance_to_set(v, cops) > 0]
        if not free:
            free = order
        return tuple(free[i % len(free)] for i in range(m))

    def move(graph, rnd, cops, robbers, history):
        out = []
        for v in robbers:
            options = sorted(graph.closed_neighborhood(v))
            best = max(options,
                       key=lambda w: (graph.distance_to_set(w, cops), -w))
            out.append(best if graph.distance_to_set(best, cops) > 0 else v)
        return tuple(out)

    return RobberScript(name="adversarial_spread",
                        applies=lambda g, m: True, place=place, move=move)


# -- non-adaptive sweep scripts ---------------------------------------------------

def _is_path_in_order(graph: Graph) -> bool:
    want = {(i, i + 1) for i in range(graph.n - 1)}
    return set(graph.edges()) == want


def path_sweep() -> CopScript:
    """One cop walks the path end to end; length n-1."""

    def move(graph, rnd, cops, robbers, history):
        return (min(cops[0] + 1, graph.n - 1),)

    return CopScript(name="path_sweep", applies=_is_path_in_order,
                     place=lambda g: (0,), move=move)


def _hub_of_star(graph: Graph) -> int | None:
    hubs = [v for v in range(graph.n) if graph.degree(v) == graph.n - 1]
    if graph.n >= 3 and graph.is_tree() and hubs:
        return hubs[0]
    if graph.n == 2:
        return 0
    return None


def star_sweep() -> CopScript:
    """Hub, leaf, hub, leaf, ... from the universal vertex; length 2n-1."""

    def applies(graph):
        return _hub_of_star(graph) is not None

    def move(graph, rnd, cops, robbers, history):
        hub = _hub_of_star(graph)
        if cops[0] != hub:
            return (hub,)
        visited = {v for cops_h, _robs in history for v in cops_h}
        for leaf in range(graph.n):
            if leaf != hub and leaf not in visited:
                return (leaf,)
        return (hub,)

    return CopScript(name="star_sweep", applies=applies,
                     place=lambda g: (_hub_of_star(g),), move=move)


def _caterpillar_route(graph: Graph) -> list[int]:
    """Walk the non-leaf path, detouring to each attached leaf and back."""
    spine = sorted(v for v in range(graph.n) if graph.degree(v) > 1)
    if not spine:
        return sorted(range(graph.n))
    spine_set = set(spine)
    ends = [v for v in spine
            if sum(1 for w in graph.adj[v] if w in spine_set) <= 1]
    start = min(ends)
    ordered = [start]
    while len(ordered) < len(spine):
        nxt = [w for w in sorted(graph.adj[ordered[-1]])
               if w in spine_set and w not in ordered]
        ordered.append(nxt[0])
    route = [ordered[0]]
    for idx, s in enumerate(ordered):
        if route[-1] != s:
            route.append(s)
        for leaf in sorted(w for w in graph.adj[s] if w not in spine_set):
            route.extend([leaf, s])
    if len(route) >= 2 and route[-2] not in spine_set:
        route.pop()          # no need to return from the very last leaf
    return route


def caterpillar_sweep() -> CopScript:
    """Central-path sweep checking every leaf; length n + leaves - 2."""

    def move(graph, rnd, cops, robbers, history):
        route = _caterpillar_route(graph)
        return (route[min(rnd, len(route) - 1)],)

    return CopScript(name="caterpillar_sweep",
                     applies=lambda g: g.is_caterpillar(),
                     place=lambda g: (_caterpillar_route(g)[0],), move=move)


def _is_cycle_in_order(graph: Graph) -> bool:
    n = graph.n
    want = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    return n >= 3 and set(graph.edges()) == want


def cycle_two_cop_sweep() -> CopScript:
    """Two adjacent cops sweep opposite ways; length floor((n-1)/2)."""

    def positions(n, rnd):
        t = min(rnd, (n - 1) // 2)
        return (-t) % n, (1 + t) % n

    def move(graph, rnd, cops, robbers, history):
        a0, b0 = positions(graph.n, rnd - 1)
        a1, b1 = positions(graph.n, rnd)
        return tuple(a1 if c == a0 else b1 for c in cops) \
            if a0 != b0 else (a1, b1)

    return CopScript(name="cycle_two_cop_sweep", applies=_is_cycle_in_order,
                     place=lambda g: (0, 1), move=move)


def _is_wheel_in_order(graph: Graph) -> bool:
    n = graph.n
    if n < 4 or graph.degree(0) != n - 1:
        return False
    rim = {tuple(sorted((1 + i, 1 + (i + 1) % (n - 1)))) for i in range(n - 1)}
    hub = {(0, v) for v in range(1, n)}
    return set(graph.edges()) == (rim | hub) - {(0, 0)}


def wheel_two_cop_sweep() -> CopScript:
    """Hub cop alternates hub/last rim vertex while the other sweeps the rim;
    length n-3."""

    def move(graph, rnd, cops, robbers, history):
        n = graph.n
        # anchor bounces hub/(n-1); sweep walks the rim and parks at n-2
        anchor_prev = 0 if (rnd - 1) % 2 == 0 else n - 1
        anchor_next = n - 1 if rnd % 2 == 1 else 0
        sweep_next = min(1 + rnd, n - 2)
        return tuple(anchor_next if c == anchor_prev else sweep_next
                     for c in cops)

    return CopScript(name="wheel_two_cop_sweep", applies=_is_wheel_in_order,
                     place=lambda g: (0, 1), move=move)


def bipartite_sweep(parts: tuple[tuple[int, ...], tuple[int, ...]]) -> CopScript:
    """|M| cops bounce between all of M and fresh batches of N;
    length 2*ceil(n/m) - 2 on K_{m,n} with n > m."""
    part_m, part_n = tuple(parts[0]), tuple(parts[1])

    def applies(graph):
        seen = set(graph.edges())
        want = {tuple(sorted((a, b))) for a in part_m for b in part_n}
        return seen == want

    def place(graph):
        return tuple(part_n[:len(part_m)])

    def move(graph, rnd, cops, robbers, history):
        k = len(part_m)
        if rnd % 2 == 1:
            return part_m
        batch = rnd // 2
        fresh = part_n[batch * k:(batch + 1) * k]
        if len(fresh) < k:
            fresh = fresh + part_n[:k - len(fresh)]
        return fresh

    return CopScript(name="bipartite_sweep", applies=applies,
                     place=place, move=move)


# -- chase tables for the maximum-capture-time family ---------------------------
#
# Label arithmetic below is in the family's traditional 1-based labels; the
# chain edges connect labels differing by 1, 3 and 4.  The chase keeps the
# cop's label congruent to the robber's mod 4 and closes the gap; the dodge
# table is its mirror image for a robber reacting to an adjacent cop.

HN_COP_CHASE = {-4: +4, -3: +1, -1: +3, 0: +4, +1: +1, +3: +3, +4: +4}
HN_COP_REALIGN = {-4: 4, -3: 5, -1: 3, 0: 4, +1: 5, +3: 3, +4: 4}
HN_ROBBER_DODGE = {-4: +1, -3: -1, -1: -3, +1: -4, +3: -4, +4: -4}


def _is_hgraph(graph: Graph) -> bool:
    from .families import h_graph
    return graph.n >= 7 and graph == h_graph(graph.n)


def hn_cop_from_vertex2() -> CopScript:
    """Single-cop chase from label 2 on the maximum-capture-time family.

    Round 1 aligns the cop's label with the robber's mod 4 (via label 1 and
    the realignment table when the robber starts on a multiple of 4); after
    that each robber step is answered from the chase table, closing the gap
    until the robber is cornered in the top trap.  Captures within n-4
    rounds from the start.
    """
    state = {"realign": False}

    def reset():
        state["realign"] = False

    def place(graph):
        return (h_vertex(2),)

    def move(graph, rnd, cops, robbers, history):
        c = h_label(cops[0])
        r_now = h_label(robbers[0])
        if robbers[0] in graph.closed_neighborhood(cops[0]):
            return (robbers[0],)
        if rnd == 1:
            r0 = r_now
            if r0 % 4 == 0:
                state["realign"] = True
                return (h_vertex(1),)
            options = [x for x in (1, 2, 3, 5, 6)
                       if x % 4 == r0 % 4 and x <= r0
                       and h_vertex(x) in graph.closed_neighborhood(cops[0])]
            return (h_vertex(max(options)),)
        r_prev = h_label(history[-2][1][0]) if len(history) >= 2 else r_now
        delta = r_now - r_prev
        if state["realign"]:
            state["realign"] = False
            target = HN_COP_REALIGN.get(delta)
            if target is not None:
                return (h_vertex(target),)
        step = HN_COP_CHASE.get(delta)
        if step is not None:
            tgt = c + step
            if 1 <= tgt <= graph.n and \
                    h_vertex(tgt) in graph.closed_neighborhood(cops[0]):
                return (h_vertex(tgt),)
        # off-table robber move: step along a shortest path toward him
        options = sorted(graph.closed_neighborhood(cops[0]))
        return (min(options, key=lambda w: (graph.distance(w, robbers[0]), w)),)

    return CopScript(name="hn_cop_from_vertex2", applies=_is_hgraph,
                     place=place, move=move, reset=reset)


def hn_robbers_squad(m: int = 3) -> RobberScript:
    """Two or three coordinated robbers on the family H(4l+2).

    Shared single-robber-optimal evasion while stacked; a forced stack in
    the top trap splits over the trap's neighborhood {n, n-1, n-3}; after a
    capture the survivors fall back along scripted return moves, then drift
    to low labels (smallest label not adjacent to the cop) and dodge via the
    reaction table when the cop closes in, restacking for another run.
    Survives 2l + 3(n-4) rounds against an optimal cop when m = 3, and
    l + 2(n-4) when m = 2.
    """
    if m not in (2, 3):
        raise ValueError("the squad plays with 2 or 3 robbers")
    state: dict = {"prev_alive": None}

    def reset():
        state["prev_alive"] = None

    def applies(graph, m_arena):
        return _is_hgraph(graph) and m_arena == m and graph.n % 4 == 2

    def place(graph, cops, m_arena):
        game1 = pursuit.solve(graph, 1, 1)
        cop_adj = graph.closed_neighborhood(cops[0])
        best = None
        for lab in range(1, 7):
            v = h_vertex(lab)
            if v in cop_adj:
                continue
            val = game1.value(cops, (v,))
            if best is None or (is_finite(val) and val > best[0]):
                best = (val if is_finite(val) else graph.n, v)
        state["prev_alive"] = m
        return (best[1],) * m

    def _smallest_safe(graph, i_vertex, cop_vertex):
        cop_adj = graph.closed_neighborhood(cop_vertex)
        options = sorted(graph.closed_neighborhood(i_vertex))
        safe = [w for w in options if w not in cop_adj]
        if safe:
            return safe[0]
        spare = [w for w in options if w != cop_vertex]
        return spare[0] if spare else i_vertex

    def _dodge(graph, i_vertex, cop_vertex):
        n = graph.n
        delta = h_label(cop_vertex) - h_label(i_vertex)
        step = HN_ROBBER_DODGE.get(delta)
        if step is not None:
            tgt = h_label(i_vertex) + step
            if 1 <= tgt <= n:
                w = h_vertex(tgt)
                if w in graph.closed_neighborhood(i_vertex) and \
                        w not in graph.closed_neighborhood(cop_vertex):
                    return w
        return _smallest_safe(graph, i_vertex, cop_vertex)

    def move(graph, rnd, cops, robbers, history):
        n = graph.n
        cop = cops[0]
        alive = len(robbers)
        just_captured = state["prev_alive"] is not None and \
            alive < state["prev_alive"]
        state["prev_alive"] = alive

        # scripted fallback right after a capture in the trap neighborhood
        if just_captured and alive >= 1:
            clab = h_label(cop)
            returns = {n: {n - 1: n - 5, n - 3: n - 7},
                       n - 1: {n: n - 3, n - 3: n - 7},
                       n - 3: {n: n - 1, n - 1: n - 5}}.get(clab)
            if returns is not None:
                labs = [h_label(v) for v in robbers]
                if all(lab in returns for lab in labs) and \
                        len(set(labs)) == alive:
                    out = []
                    good = True
                    for v in robbers:
                        w = h_vertex(returns[h_label(v)])
                        if w in graph.closed_neighborhood(v) and \
                                w not in graph.closed_neighborhood(cop):
                            out.append(w)
                        else:
                            good = False
                            break
                    if good:
                        return tuple(out)

        if len(set(robbers)) == 1:
            # stacked: shared evasion toward the trap end, splitting when
            # cornered there (the split sacrifices one robber by design)
            v = robbers[0]
            game1 = pursuit.solve(graph, 1, 1)
            best = None
            best_val = -1
            for w in sorted(graph.closed_neighborhood(v)):
                if w == cop:
                    continue
                val = game1.value(cops, (w,))
                num = val if is_finite(val) else graph.n * graph.n
                if best is None or num >= best_val:
                    best_val = num
                    best = w
            after = game1.value(cops, (best,))
            cornered = is_finite(after) and after <= 1 and \
                h_label(v) == n and alive >= 2
            if cornered:
                targets = [n, n - 1, n - 3][:alive]
                out = [h_vertex(t) for t in targets]
                if all(w in graph.closed_neighborhood(v) for w in out):
                    return tuple(out)
            return (best,) * alive

        out = []
        for v in robbers:
            if cop in graph.closed_neighborhood(v) or \
                    v in graph.closed_neighborhood(cop):
                out.append(_dodge(graph, v, cop))
            else:
                out.append(_smallest_safe(graph, v, cop))
        return tuple(out)

    return RobberScript(name=f"hn_robbers_squad_{m}", applies=applies,
                        place=place, move=move, reset=reset)
