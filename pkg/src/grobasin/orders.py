"""Partial orders on staircases of a fixed size, and incidence machinery.

Two orders drive everything here: one merges rows (horizontal collisions),
the other breaks columns into vertical pieces.  They are exchanged by
transposition, which the test suite exploits as a cross-check; the two
implementations below deliberately share no code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .staircase import StandardSet, enumerate_staircases, sum1, sum2


# ---------------------------------------------------------------------------
# row merging order


@lru_cache(maxsize=None)
def _fill_blocks(pieces, caps):
    # pieces: desc tuple still to place; caps: desc tuple of open capacities
    if not pieces:
        return all(c == 0 for c in caps)
    p = pieces[0]
    tried = set()
    for k, c in enumerate(caps):
        if c < p or c in tried:
            continue
        tried.add(c)
        rest = tuple(sorted(caps[:k] + (c - p,) + caps[k + 1:], reverse=True))
        if _fill_blocks(pieces[1:], rest):
            return True
    return False


def leq_et(a: StandardSet, b: StandardSet) -> bool:
    """True iff b arises from a by merging rows.

    Equivalently, the row multiset of a can be partitioned into blocks
    whose sums form the row multiset of b.  Staircases of different
    cardinality are never comparable.
    """
    if a.cardinality != b.cardinality:
        return False
    return _fill_blocks(a.rows(), b.rows())


def et_row_partition(a: StandardSet, b: StandardSet):
    """A witness for leq_et: per row of b, the multiset of rows of a merged
    into it.  Returns a tuple aligned with b.rows(), or None."""
    if a.cardinality != b.cardinality:
        return None
    pieces = sorted(a.rows(), reverse=True)
    caps = list(b.rows())
    blocks = [[] for _ in caps]

    def place(i):
        if i == len(pieces):
            return all(c == 0 for c in caps)
        tried = set()
        for k in range(len(caps)):
            if caps[k] < pieces[i] or caps[k] in tried:
                continue
            tried.add(caps[k])
            caps[k] -= pieces[i]
            blocks[k].append(pieces[i])
            if place(i + 1):
                return True
            caps[k] += pieces[i]
            blocks[k].pop()
        return False

    if not place(0):
        return None
    return tuple(tuple(sorted(blk, reverse=True)) for blk in blocks)


# ---------------------------------------------------------------------------
# column breaking order


def _sub_removals(avail, need):
    # avail: tuple of (height, count) with heights desc; yields avail tuples
    # left over after removing a sub-multiset summing exactly to need
    def go(i, left, acc):
        if left == 0:
            yield tuple(
                (h, c) for (h, c) in acc + list(avail[i:]) if c > 0
            )
            return
        if i == len(avail):
            return
        h, c = avail[i]
        for take in range(min(c, left // h), -1, -1):
            yield from go(i + 1, left - take * h, acc + [(h, c - take)])

    yield from go(0, need, [])


@lru_cache(maxsize=None)
def _break_columns(targets, avail):
    # targets: desc tuple of column heights still to break; avail: tuple of
    # (height, count) pairs, heights desc, of pieces not yet used
    if not targets:
        return not avail
    for rest in _sub_removals(avail, targets[0]):
        if _break_columns(targets[1:], rest):
            return True
    return False


def leq_punc(a: StandardSet, b: StandardSet) -> bool:
    """True iff each column of a breaks into vertical pieces such that the
    multiset of all pieces equals the columns of b."""
    if a.cardinality != b.cardinality:
        return False
    counts = []
    for h in sorted(set(b.cols()), reverse=True):
        counts.append((h, b.cols().count(h)))
    return _break_columns(a.cols(), tuple(counts))


# ---------------------------------------------------------------------------
# dominance and lexicographic filters


def dominance(a: StandardSet, b: StandardSet) -> bool:
    """Column partial sums of a stay >= those of b (equal cardinality)."""
    if a.cardinality != b.cardinality:
        return False
    ca, cb = a.cols(), b.cols()
    sa = sb = 0
    for j in range(max(len(ca), len(cb))):
        sa += ca[j] if j < len(ca) else 0
        sb += cb[j] if j < len(cb) else 0
        if sa < sb:
            return False
    return True


def _padded(t, length):
    return t + (0,) * (length - len(t))


def lex_rows_leq(a: StandardSet, b: StandardSet) -> bool:
    """Row tuples compared lexicographically after zero padding."""
    length = max(a.height, b.height)
    return _padded(a.rows(), length) <= _padded(b.rows(), length)


def lex_cols_geq(a: StandardSet, b: StandardSet) -> bool:
    """Column tuples compared lexicographically after zero padding."""
    length = max(a.width, b.width)
    return _padded(a.cols(), length) >= _padded(b.cols(), length)


def incidence_filter(a: StandardSet, b: StandardSet) -> bool:
    """Necessary condition for the basin of a to touch the basin of b."""
    return dominance(a, b) and lex_rows_leq(a, b) and lex_cols_geq(a, b)


# ---------------------------------------------------------------------------
# the splitting game


@dataclass(frozen=True)
class SplitQuadruple:
    """Terminal state of the splitting game, all four parts as multisets of
    column heights (tuples sorted descending).

    c1 holds, per source column that lost pieces, the merged total carved
    off; c2 the uncarved remainders; c1p the consumed target columns; c2p
    the target columns never matched.
    """

    c1: tuple
    c2: tuple
    c1p: tuple
    c2p: tuple


def _desc(values):
    return tuple(sorted((v for v in values if v > 0), reverse=True))


def figure_alg(a: StandardSet, b: StandardSet):
    """Explore every run of the column splitting game from a toward b.

    Returns the set of distinct terminal SplitQuadruples.  A run carves
    columns of b off the columns of a, one at a time; it may only carve
    from a remainder at least as tall as the shortest unconsumed target.
    """
    if a.cardinality != b.cardinality:
        raise ValueError("staircases must have equal cardinality")
    cols_a, cols_b = a.cols(), b.cols()
    results = set()
    seen = set()

    def explore(rem, cp):
        # rem: sorted tuple of (original, remainder) heights; cp: asc tuple
        # of unconsumed target columns
        if (rem, cp) in seen:
            return
        seen.add((rem, cp))
        if not cp:
            results.add(SplitQuadruple(cols_a, (), cols_b, ()))
            return
        shortest = cp[0]
        moves = []
        for orig, left in set(rem):
            if left < shortest:
                continue
            for d in set(cp):
                if d <= left:
                    moves.append((orig, left, d))
        if not moves:
            consumed = list(cols_b)
            for d in cp:
                consumed.remove(d)
            results.add(
                SplitQuadruple(
                    c1=_desc(orig - left for orig, left in rem),
                    c2=_desc(left for _, left in rem),
                    c1p=_desc(consumed),
                    c2p=_desc(cp),
                )
            )
            return
        for orig, left, d in moves:
            nxt = list(rem)
            nxt.remove((orig, left))
            nxt.append((orig, left - d))
            ncp = list(cp)
            ncp.remove(d)
            explore(tuple(sorted(nxt)), tuple(sorted(ncp)))

    explore(
        tuple(sorted((h, h) for h in cols_a)),
        tuple(sorted(cols_b)),
    )
    return results


def leq_punc_via_alg(a: StandardSet, b: StandardSet) -> bool:
    """Column breaking order decided by the splitting game alone."""
    if a.cardinality != b.cardinality:
        return False
    target = SplitQuadruple(a.cols(), (), b.cols(), ())
    return target in figure_alg(a, b)


# ---------------------------------------------------------------------------
# posets


_ORDERS = {}


def order_function(name: str):
    try:
        return _ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown order {name!r}") from None


@dataclass
class PosetData:
    """A finite poset on staircases with its full relation and cover edges."""

    elements: tuple
    relation: tuple
    covers: tuple


def build_poset(n: int, order: str) -> PosetData:
    """Poset of all staircases of cardinality n under the named order.

    order is 'et', 'punc' or 'dominance'.  Covers are the transitive
    reduction of the relation.
    """
    leq = order_function(order)
    elements = tuple(enumerate_staircases(n))
    k = len(elements)
    relation = tuple(
        tuple(leq(elements[i], elements[j]) for j in range(k))
        for i in range(k)
    )
    covers = []
    for i in range(k):
        for j in range(k):
            if i == j or not relation[i][j]:
                continue
            if any(
                relation[i][m] and relation[m][j]
                for m in range(k)
                if m != i and m != j
            ):
                continue
            covers.append((i, j))
    return PosetData(elements, relation, tuple(covers))


def _node_label(s: StandardSet) -> str:
    return ",".join(str(h) for h in s.cols()) or "empty"


def to_dot(poset: PosetData, name: str = "poset") -> str:
    """DOT digraph with nodes labeled by column tuples, edges small to
    large."""
    lines = [f"digraph {name} {{"]
    for s in poset.elements:
        lines.append(f'  "{_node_label(s)}";')
    for i, j in sorted(poset.covers):
        src = _node_label(poset.elements[i])
        dst = _node_label(poset.elements[j])
        lines.append(f'  "{src}" -> "{dst}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# incidence certificates


@dataclass
class IncidenceCertificate:
    """Witness that the closure of one basin can meet another.

    lambda_shape groups the punctual factors of the left staircase onto
    horizontal lines (one row per line, one box per factor);
    lambda_prime_shape does the same on the right.  box_map matches
    factors so that whole rows of lambda_shape land in single rows of
    lambda_prime_shape, and every factor only breaks columns on the
    way."""

    lambda_shape: StandardSet
    lambda_prime_shape: StandardSet
    box_map: dict
    per_box: dict
    per_box_prime: dict


def _row_boxes(shape: StandardSet):
    # boxes grouped by row index, each row left to right
    rows = shape.rows()
    return [
        [(j, i) for j in range(width)] for i, width in enumerate(rows)
    ]


def check_certificate(
    cert: IncidenceCertificate, a: StandardSet, b: StandardSet
) -> bool:
    """Verify an incidence certificate for the ordered pair (a, b).

    Malformed data (box_map not a row-compatible bijection between the
    boxes of the two shapes, or factor maps keyed off the wrong boxes)
    raises ValueError; a well-formed certificate that fails a condition
    returns False.
    """
    boxes = set(cert.lambda_shape.points())
    boxes_p = set(cert.lambda_prime_shape.points())
    if set(cert.per_box) != boxes or set(cert.per_box_prime) != boxes_p:
        raise ValueError("factor maps must be keyed by the shape boxes")
    if set(cert.box_map) != boxes:
        raise ValueError("box_map domain must be the boxes of lambda_shape")
    images = list(cert.box_map.values())
    if set(images) != boxes_p or len(images) != len(boxes_p):
        raise ValueError(
            "box_map must biject onto the boxes of lambda_prime_shape"
        )
    for row in _row_boxes(cert.lambda_shape):
        target_rows = {cert.box_map[box][1] for box in row}
        if len(target_rows) > 1:
            raise ValueError("box_map must send each row into a single row")

    def assembled(shape, factors):
        per_row = [
            sum1(factors[box] for box in row) for row in _row_boxes(shape)
        ]
        return sum2(per_row)

    if assembled(cert.lambda_shape, cert.per_box) != a:
        return False
    if assembled(cert.lambda_prime_shape, cert.per_box_prime) != b:
        return False
    if not leq_et(cert.lambda_shape, cert.lambda_prime_shape):
        return False
    for box in boxes:
        left = cert.per_box[box]
        right = cert.per_box_prime[cert.box_map[box]]
        if not leq_punc(left, right):
            return False
    return True


def _set_partitions(items):
    # all partitions of a list of indices into nonempty blocks
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]
        yield [[first]] + part


@lru_cache(maxsize=None)
def _multiset_partitions(values):
    # values: desc tuple; returns canonical partitions, each a desc-sorted
    # tuple of desc-sorted blocks
    out = set()
    idx = list(range(len(values)))
    for part in _set_partitions(idx):
        blocks = tuple(
            sorted(
                (tuple(sorted((values[i] for i in blk), reverse=True))
                 for blk in part),
                reverse=True,
            )
        )
        out.add(blocks)
    return tuple(sorted(out, reverse=True))


def _factor_key(s: StandardSet):
    return (s.cardinality,) + s.cols()


@lru_cache(maxsize=None)
def _line_decompositions(cols):
    # every way to write the staircase as a direction-2 sum over lines of
    # direction-1 sums of nonempty factors; a decomposition is a tuple of
    # lines, each line a tuple of factors, everything canonically sorted
    s = StandardSet(cols)
    out = set()
    for row_partition in _multiset_partitions(s.rows()):
        per_block = []
        for block in row_partition:
            line_shape = StandardSet.from_rows(block)
            choices = [
                tuple(
                    sorted(
                        (StandardSet(g) for g in grouping),
                        key=_factor_key,
                        reverse=True,
                    )
                )
                for grouping in _multiset_partitions(line_shape.cols())
            ]
            per_block.append(choices)
        for combo in itertools.product(*per_block):
            lines = tuple(
                sorted(
                    combo,
                    key=lambda ln: (len(ln),) + tuple(
                        _factor_key(f) for f in ln
                    ),
                    reverse=True,
                )
            )
            out.add(lines)
    return tuple(sorted(
        out,
        key=lambda dec: tuple(
            (len(ln),) + tuple(_factor_key(f) for f in ln) for ln in dec
        ),
        reverse=True,
    ))


@lru_cache(maxsize=None)
def _leq_punc_cols(ca, cb):
    return leq_punc(StandardSet(ca), StandardSet(cb))


def _perfect_match(left, right):
    # bijection left -> right along _leq_punc_cols edges, or None
    k = len(left)
    if k != len(right):
        return None
    adj = [
        [j for j in range(k) if _leq_punc_cols(left[i].cols(), right[j].cols())]
        for i in range(k)
    ]
    order = sorted(range(k), key=lambda i: len(adj[i]))
    match = [None] * k

    def extend(pos, used):
        if pos == k:
            return True
        i = order[pos]
        for j in adj[i]:
            if used & (1 << j):
                continue
            match[i] = j
            if extend(pos + 1, used | (1 << j)):
                return True
        match[i] = None
        return False

    if not extend(0, 0):
        return None
    return match


def _line_key(line):
    return (len(line),) + tuple(_factor_key(f) for f in line)


def _match_lines(lines_a, lines_b):
    # group the lines of a onto the lines of b; returns per b-line the
    # chosen a-line indices and a factor bijection, or None
    slots = sorted(range(len(lines_b)), key=lambda j: _line_key(lines_b[j]),
                   reverse=True)

    def assign(pos, remaining):
        if pos == len(slots):
            return [] if not remaining else None
        j = slots[pos]
        need = len(lines_b[j])
        rem = sorted(remaining, key=lambda i: _line_key(lines_a[i]),
                     reverse=True)

        def subsets(start, count, acc):
            if count == need:
                yield list(acc)
                return
            if count > need:
                return
            prev = None
            for t in range(start, len(rem)):
                i = rem[t]
                key = _line_key(lines_a[i])
                if key == prev:
                    continue
                room = count + len(lines_a[i])
                if room > need:
                    continue
                acc.append(i)
                yield from subsets(t + 1, room, acc)
                acc.pop()
                prev = key

        for chosen in subsets(0, 0, []):
            factors = []
            for i in chosen:
                factors.extend(
                    (i, pos_in_line, f)
                    for pos_in_line, f in enumerate(lines_a[i])
                )
            bij = _perfect_match(
                [f for (_, _, f) in factors], list(lines_b[j])
            )
            if bij is None:
                continue
            rest = assign(pos + 1, remaining - set(chosen))
            if rest is not None:
                pairing = [
                    (factors[t][0], factors[t][1], bij[t])
                    for t in range(len(factors))
                ]
                return [(j, chosen, pairing)] + rest
        return None

    return assign(0, set(range(len(lines_a))))


def find_certificate(a: StandardSet, b: StandardSet, bound: int = 8):
    """Exhaustive search for an incidence certificate for (a, b).

    Returns a certificate that check_certificate accepts, or None when no
    certificate exists.  bound caps the cardinality the search accepts.
    """
    if a.cardinality > bound or b.cardinality > bound:
        raise ValueError(f"cardinality exceeds search bound {bound}")
    if a.cardinality != b.cardinality:
        return None
    if a.cardinality == 0:
        return IncidenceCertificate(a, b, {}, {}, {})
    for dec_a in _line_decompositions(a.cols()):
        boxes_a = sum(len(line) for line in dec_a)
        for dec_b in _line_decompositions(b.cols()):
            if len(dec_b) > len(dec_a):
                continue
            if sum(len(line) for line in dec_b) != boxes_a:
                continue
            assignment = _match_lines(dec_a, dec_b)
            if assignment is None:
                continue
            return _build_certificate(dec_a, dec_b, assignment)
    return None


def _build_certificate(dec_a, dec_b, assignment):
    # decompositions are already sorted the way rows of the shapes are
    shape = StandardSet.from_rows(len(line) for line in dec_a)
    shape_p = StandardSet.from_rows(len(line) for line in dec_b)
    per_box = {
        (j, i): f
        for i, line in enumerate(dec_a)
        for j, f in enumerate(line)
    }
    per_box_p = {
        (j, i): f
        for i, line in enumerate(dec_b)
        for j, f in enumerate(line)
    }
    box_map = {}
    for j, _, pairing in assignment:
        for (ai, apos, bpos) in pairing:
            box_map[(apos, ai)] = (bpos, j)
    return IncidenceCertificate(shape, shape_p, box_map, per_box, per_box_p)


_ORDERS.update({"et": leq_et, "punc": leq_punc, "dominance": dominance})
