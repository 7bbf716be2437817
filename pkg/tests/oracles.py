"""Brute-force reference computations, deliberately independent of the package."""

from itertools import combinations, product


def landing_collisions(throws):
    """Simulate throws on a long stretch of beats; flag any beat that two throws land on.

    Beat ``j`` throws ``throws[j % n]``, landing at ``j + t`` (a zero throw
    "lands" where it stands). Three periods are not always enough: ``70``
    needs the landing of beat 0 to meet the zero at beat 7. So the
    window spans ``n * (max + 3)`` beats and only beats past ``max`` are
    checked, where every throw that could land has been simulated.
    """
    n = len(throws)
    top = max(throws)
    length = n * (top + 3)
    landed = {}
    for j in range(length):
        landed.setdefault(j + throws[j % n], []).append(j)
    return any(len(js) > 1 for b, js in landed.items() if top <= b < length)


def airborne_count(throws):
    """Particles in the air between two beats in the steady regime."""
    n = len(throws)
    top = max(throws)
    b = n * (top + 1)
    return sum(1 for j in range(b - top - 1, b) if j + throws[j % n] >= b)


def oracle_state(state, throw):
    """Transition rule written from scratch on occupancy bit lists."""
    occupied, m = set(state[0]), state[1]
    bits = [x in occupied for x in range(m)]
    landing = bits[0]
    bits = bits[1:] + [False]
    if not landing:
        return (tuple(i for i, v in enumerate(bits) if v), m) if throw == 0 else None
    if throw == 0 or throw > m or bits[throw - 1]:
        return None
    bits[throw - 1] = True
    return (tuple(i for i, v in enumerate(bits) if v), m)


def shortest_throw_sequence(src, dst, m, max_len):
    """Enumerate throw sequences by length then lexicographically; first hit wins."""
    for length in range(max_len + 1):
        for seq in product(range(m + 1), repeat=length):
            state = (tuple(src), m)
            for t in seq:
                state = oracle_state(state, t)
                if state is None:
                    break
            if state is not None and state[0] == tuple(dst):
                return list(seq)
    return None


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def stirling_by_enumeration(n, j):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == j)


def reachable(start, successors):
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in successors(u):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def k_subsets(k, m):
    return [tuple(c) for c in combinations(range(m), k)]
